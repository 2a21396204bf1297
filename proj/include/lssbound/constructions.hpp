#pragma once

#include "lssbound/automaton.hpp"

#include <cstdint>

namespace lssbound {

// Binary automata over {"0","1"} whose intersection has a shortest word of
// length exactly m*n - 1, plus the unary pair that works for coprime sizes.

/// m states p_0..p_{m-1}; letter c moves p_a to p_{(a+c) mod m}; accepts p_0.
/// Language: words whose count of 1s is a multiple of m.
Dfa build_m1(std::uint32_t m);

/// n states q_0..q_{n-1}, requires 1 <= m <= n; accepts q_{n-1}.
///   q_a --c--> q_{a+c}            for a < m-1
///   q_a --0--> q_{(a+1) mod n}    for a >= m-1
///   q_a --1--> q_0                for a >= m-1
Dfa build_m2(std::uint32_t m, std::uint32_t n);

/// k-state one-letter automaton accepting words of length r (mod k).
Dfa build_unary(std::uint32_t residue, std::uint32_t modulus);

/// (1^{m-1} 0^{n-m+1})^{m-1} 1^{m-1} 0^{n-m}, a shortest word accepted by
/// both build_m1(m) and build_m2(m, n). Length m*n - 1.
Word closed_form_witness(std::uint32_t m, std::uint32_t n);

/// Numbers of cycles through q_0 taken by an accepting run of build_m2:
/// `closing` paths use m-1 ones and run the zero chain through q_{n-1}
/// (the last one stops at q_{n-1}); `looping` paths use m ones and return
/// to q_0 directly from q_{m-1}.
struct PathCounts {
    std::uint64_t closing = 1;   // >= 1
    std::uint64_t looping = 0;   // >= 0
    std::uint32_t m = 1;
    std::uint32_t n = 1;

    bool valid() const noexcept { return closing >= 1 && m >= 1 && m <= n; }
    std::uint64_t ones() const noexcept { return closing * (m - 1) + looping * m; }
    std::uint64_t min_zeros() const noexcept { return closing * (n - m + 1) - 1; }
};

/// (1^m)^looping (1^{m-1} 0^{n-m+1})^{closing-1} 1^{m-1} 0^{n-m}.
/// Accepted by build_m2(m, n) with exactly ones() 1s and min_zeros() 0s.
Word path_count_witness(const PathCounts& p);

/// True iff some closing >= 1, looping >= 0 give ones = closing(m-1) + looping*m
/// and zeros >= closing(n-m+1) - 1. Every word accepted by build_m2(m, n)
/// satisfies this; the converse does not hold in general.
bool m2_count_feasible(std::uint64_t ones, std::uint64_t zeros, std::uint32_t m, std::uint32_t n);

}  // namespace lssbound
