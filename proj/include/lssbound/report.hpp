#pragma once

#include "lssbound/automaton.hpp"
#include "lssbound/search.hpp"
#include "lssbound/shortest.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lssbound {

inline constexpr int kSchemaVersion = 1;

/// Outcome of checking the (m, n) construction pair.
struct WitnessReport {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::optional<std::uint64_t> computed_lss;
    Word witness_word;  // lexicographically least shortest word
    Word closed_form_word;
    bool closed_form_accepted = false;
    std::uint64_t expected = 0;  // m*n - 1
    bool pass = false;
    std::uint32_t sc_m1 = 0;
    std::uint32_t sc_m2 = 0;
};

/// Requires 1 <= m <= n.
WitnessReport witness_report(std::uint32_t m, std::uint32_t n);

/// One report per pair 1 <= m <= n <= max_n, ordered by n then m.
std::vector<WitnessReport> verify_range(std::uint32_t max_n);

std::string witness_text(const WitnessReport& r);
std::string witness_json(const WitnessReport& r);

std::string verify_text(const std::vector<WitnessReport>& rows);
std::string verify_json(const std::vector<WitnessReport>& rows);
std::string verify_csv(const std::vector<WitnessReport>& rows);

std::string search_text(const SearchReport& r);
std::string search_json(const SearchReport& r);
std::string search_csv(const SearchReport& r);

std::string lss_text(const Alphabet& a, const std::optional<LssResult>& r);
std::string lss_json(const Alphabet& a, const std::optional<LssResult>& r);

/// State names in the p_a / q_a style for the constructions and their product.
std::string m1_state_name(State q);
std::string m2_state_name(State q);

}  // namespace lssbound
