#pragma once

#include "lssbound/automaton.hpp"
#include "lssbound/minimize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lssbound {

/// Number of complete DFAs with `states` states and initial state 0:
/// states^(states*|alphabet|) * 2^states.
std::uint64_t dfa_count(std::uint32_t states, const Alphabet& alphabet);

/// The index-th DFA of the enumeration. The low `states` bits of the index
/// pick the accepting subset; the remaining mixed-radix digits fill the
/// transition table row by row.
Dfa dfa_at(std::uint32_t states, const Alphabet& alphabet, std::uint64_t index);

/// Calls `visit` on every enumerated DFA in index order.
void enumerate_dfas(std::uint32_t states, const Alphabet& alphabet,
                    const std::function<void(const Dfa&)>& visit);

/// All languages of state complexity <= states, one canonical DFA each,
/// sorted by canonical key.
std::vector<CanonicalDfa> canonical_languages(std::uint32_t states, const Alphabet& alphabet);

class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    int workers = 0;  // 0: OpenMP default
    std::uint64_t max_product_states = 64;
    std::uint64_t max_tuples = 100'000'000;
};

struct SearchReport {
    std::vector<std::uint32_t> sizes;
    std::uint64_t target = 0;  // product of sizes minus one
    std::optional<std::uint64_t> max_lss;
    std::vector<CanonicalDfa> witness_tuple;
    Word witness_word;
    bool attained = false;
    std::uint64_t tuples_examined = 0;
    std::uint64_t tuples_skipped = 0;  // some component language is empty
    std::uint64_t bound_violations = 0;
    std::vector<std::uint64_t> languages_per_size;

    bool operator==(const SearchReport&) const = default;
};

/// Maximum intersection lss over every tuple of languages with the given
/// state complexities. Ties go to the lexicographically least tuple of
/// canonical keys. OpenMP over the first component; the result does not
/// depend on the worker count.
SearchReport tightness_search(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                              const SearchOptions& options = {});

/// Single-threaded reference for tightness_search.
SearchReport tightness_search_serial(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                                     const SearchOptions& options = {});

/// Maximum intersection lss over raw enumerated DFA tuples, no language
/// dedup. Only feasible for tiny sizes; cross-checks the dedup reduction.
std::optional<std::uint64_t> raw_max_lss(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                                         const SearchOptions& options = {});

}  // namespace lssbound
