#pragma once

#include "lssbound/automaton.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace lssbound {

/// Shortest accepted word: its length and the lexicographically least word
/// (alphabet order) of that length.
struct LssResult {
    std::uint64_t length = 0;
    Word witness;

    bool operator==(const LssResult&) const = default;
};

/// Breadth-first search from the initial state. nullopt means the language
/// is empty.
std::optional<LssResult> shortest_accepted(const Dfa& d);

/// shortest_accepted applied to the product of `components`.
std::optional<LssResult> intersection_lss(std::span<const Dfa> components);

/// Length only, without building the product automaton or a witness. Same
/// answer as intersection_lss(...)->length; used by the search kernels.
std::optional<std::uint64_t> intersection_lss_length(std::span<const Dfa* const> components);

}  // namespace lssbound
