#pragma once

#include "lssbound/automaton.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace lssbound {

/// Minimal complete DFA, unreachable states removed, states numbered by
/// breadth-first first visit from the initial state (symbols in alphabet
/// order). Two values compare equal iff their languages are equal.
class CanonicalDfa {
public:
    const Dfa& dfa() const noexcept { return dfa_; }
    std::uint32_t state_count() const noexcept { return dfa_.state_count; }

    /// Flat serialization: state count, accepting flags, then delta. Orders
    /// canonical forms deterministically.
    const std::vector<std::uint32_t>& key() const noexcept { return key_; }

    bool operator==(const CanonicalDfa& o) const {
        return key_ == o.key_ && dfa_.alphabet == o.dfa_.alphabet;
    }
    std::strong_ordering operator<=>(const CanonicalDfa& o) const {
        if (auto c = key_ <=> o.key_; c != 0)
            return c;
        return dfa_.alphabet <=> o.dfa_.alphabet;
    }

private:
    friend CanonicalDfa minimize(const Dfa& d);
    explicit CanonicalDfa(Dfa d);

    Dfa dfa_;
    std::vector<std::uint32_t> key_;
};

/// Moore-style partition refinement starting from {accepting, rejecting}.
CanonicalDfa minimize(const Dfa& d);

/// Number of states of the minimal complete DFA (dead states count).
std::uint32_t state_complexity(const Dfa& d);

/// Language equality. Throws DfaError on alphabet mismatch.
bool equivalent(const Dfa& a, const Dfa& b);

}  // namespace lssbound
