#include "lssbound/constructions.hpp"

#include <string>

namespace lssbound {

namespace {

void append(Word& w, Symbol c, std::uint64_t count) { w.insert(w.end(), count, c); }

void require_ordered(std::uint32_t m, std::uint32_t n) {
    if (m == 0 || n == 0)
        throw DfaError("construction sizes must be positive");
    if (m > n)
        throw DfaError("construction requires m <= n (got m=" + std::to_string(m) +
                       ", n=" + std::to_string(n) + ")");
}

}  // namespace

Dfa build_m1(std::uint32_t m) {
    if (m == 0)
        throw DfaError("build_m1 requires m >= 1");
    Dfa d;
    d.state_count = m;
    d.alphabet = Alphabet::binary();
    d.initial = 0;
    d.accepting = {0};
    d.delta.resize(std::size_t{m} * 2);
    for (State a = 0; a < m; ++a)
        for (Symbol c = 0; c < 2; ++c)
            d.delta[a * 2 + c] = (a + c) % m;
    return d;
}

Dfa build_m2(std::uint32_t m, std::uint32_t n) {
    require_ordered(m, n);
    Dfa d;
    d.state_count = n;
    d.alphabet = Alphabet::binary();
    d.initial = 0;
    d.accepting = {n - 1};
    d.delta.resize(std::size_t{n} * 2);
    for (State a = 0; a < n; ++a) {
        if (a + 1 < m) {
            d.delta[a * 2 + 0] = a;
            d.delta[a * 2 + 1] = a + 1;
        } else {
            d.delta[a * 2 + 0] = (a + 1) % n;
            d.delta[a * 2 + 1] = 0;
        }
    }
    return d;
}

Dfa build_unary(std::uint32_t residue, std::uint32_t modulus) {
    if (modulus == 0)
        throw DfaError("build_unary requires a positive modulus");
    if (residue >= modulus)
        throw DfaError("build_unary requires residue < modulus");
    Dfa d;
    d.state_count = modulus;
    d.alphabet = Alphabet::unary();
    d.initial = 0;
    d.accepting = {residue};
    d.delta.resize(modulus);
    for (State a = 0; a < modulus; ++a)
        d.delta[a] = (a + 1) % modulus;
    return d;
}

Word closed_form_witness(std::uint32_t m, std::uint32_t n) {
    require_ordered(m, n);
    Word w;
    w.reserve(std::size_t{m} * n);
    for (std::uint32_t k = 0; k + 1 < m; ++k) {
        append(w, 1, m - 1);
        append(w, 0, n - m + 1);
    }
    append(w, 1, m - 1);
    append(w, 0, n - m);
    return w;
}

Word path_count_witness(const PathCounts& p) {
    if (!p.valid())
        throw DfaError("path counts require closing >= 1 and 1 <= m <= n");
    Word w;
    for (std::uint64_t k = 0; k < p.looping; ++k)
        append(w, 1, p.m);
    for (std::uint64_t k = 0; k + 1 < p.closing; ++k) {
        append(w, 1, p.m - 1);
        append(w, 0, p.n - p.m + 1);
    }
    append(w, 1, p.m - 1);
    append(w, 0, p.n - p.m);
    return w;
}

bool m2_count_feasible(std::uint64_t ones, std::uint64_t zeros, std::uint32_t m, std::uint32_t n) {
    if (m == 0 || m > n)
        return false;
    if (m == 1) {
        // ones = looping with closing free; closing = 1 minimizes the zero bound.
        return zeros + 1 >= n;
    }
    const std::uint64_t step = m - 1;
    for (std::uint64_t closing = 1; closing * step <= ones; ++closing) {
        if ((ones - closing * step) % m != 0)
            continue;
        // The zero bound grows with closing, so the first feasible closing is the best.
        return zeros + 1 >= closing * (n - m + 1);
    }
    return false;
}

}  // namespace lssbound
