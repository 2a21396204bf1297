#include "lssbound/constructions.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lssbound;

namespace {

Word w(const char* text) { return parse_word(Alphabet::binary(), text); }

std::vector<State> row(const Dfa& d, State q) { return {d.next(q, 0), d.next(q, 1)}; }

}  // namespace

TEST_CASE("build_m1 tables") {
    const Dfa one = build_m1(1);
    CHECK(one.state_count == 1);
    CHECK(row(one, 0) == std::vector<State>{0, 0});
    CHECK(one.accepting == std::vector<State>{0});

    const Dfa three = build_m1(3);
    for (State a = 0; a < 3; ++a)
        CHECK(row(three, a) == std::vector<State>{a, (a + 1) % 3});
    CHECK_THROWS_AS(build_m1(0), DfaError);
}

TEST_CASE("build_m1 counts ones modulo m") {
    for (std::uint32_t m = 1; m <= 6; ++m) {
        const Dfa d = build_m1(m);
        for (const Word& x : oracle::all_words(2, 12))
            CHECK(accepts(d, x) == (count_symbol(x, 1) % m == 0));
    }
}

TEST_CASE("build_m2 tables") {
    const Dfa d = build_m2(2, 3);
    CHECK(row(d, 0) == std::vector<State>{0, 1});
    CHECK(row(d, 1) == std::vector<State>{2, 0});
    CHECK(row(d, 2) == std::vector<State>{0, 0});
    CHECK(d.accepting == std::vector<State>{2});

    const Dfa tiny = build_m2(1, 1);
    CHECK(row(tiny, 0) == std::vector<State>{0, 0});
    CHECK(tiny.accepting == std::vector<State>{0});

    CHECK_THROWS_AS(build_m2(3, 2), DfaError);
    CHECK_THROWS_AS(build_m2(0, 2), DfaError);

    for (std::uint32_t n = 1; n <= 10; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Dfa e = build_m2(m, n);
            CHECK_FALSE(validate(e).has_value());
            CHECK(e.accepting.size() == 1);
            CHECK(e.next(m - 1, 1) == 0u);
        }
}

TEST_CASE("build_unary") {
    const Dfa all = build_unary(0, 1);
    for (std::size_t len = 0; len < 5; ++len)
        CHECK(accepts(all, Word(len, 0)));
    const Dfa d = build_unary(2, 5);
    for (std::size_t len = 0; len < 20; ++len)
        CHECK(accepts(d, Word(len, 0)) == (len % 5 == 2));
    CHECK_THROWS_AS(build_unary(3, 3), DfaError);
}

TEST_CASE("closed-form witness") {
    CHECK(closed_form_witness(2, 3) == w("10010"));
    CHECK(closed_form_witness(1, 4) == Word(3, 0));
    CHECK_THROWS_AS(closed_form_witness(4, 3), DfaError);

    for (std::uint32_t n = 1; n <= 50; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Word x = closed_form_witness(m, n);
            CHECK(x.size() == std::size_t{m} * n - 1);
            CHECK(count_symbol(x, 1) == std::size_t{m} * (m - 1));
            CHECK(count_symbol(x, 0) == std::size_t{m} * (n - m + 1) - 1);
        }

    for (std::uint32_t n = 1; n <= 12; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Word x = closed_form_witness(m, n);
            CHECK(accepts(build_m1(m), x));
            CHECK(accepts(build_m2(m, n), x));
        }
}

TEST_CASE("path-count witness") {
    CHECK(path_count_witness({1, 0, 2, 3}) == w("10"));
    CHECK(path_count_witness({1, 1, 2, 3}) == w("1110"));
    CHECK(accepts(build_m2(2, 3), w("10")));
    CHECK(accepts(build_m2(2, 3), w("1110")));
    CHECK_THROWS_AS(path_count_witness({0, 1, 2, 3}), DfaError);
    CHECK_THROWS_AS(path_count_witness({1, 1, 4, 3}), DfaError);

    for (std::uint32_t n = 1; n <= 6; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            CHECK(path_count_witness({m, 0, m, n}) == closed_form_witness(m, n));
            const Dfa d = build_m2(m, n);
            for (std::uint64_t i = 1; i <= 4; ++i)
                for (std::uint64_t j = 0; j <= 4; ++j) {
                    const PathCounts p{i, j, m, n};
                    const Word x = path_count_witness(p);
                    CHECK(accepts(d, x));
                    CHECK(count_symbol(x, 1) == p.ones());
                    CHECK(count_symbol(x, 0) == p.min_zeros());
                    CHECK(m2_count_feasible(p.ones(), p.min_zeros(), m, n));
                }
        }
}

TEST_CASE("count characterization") {
    CHECK(m2_count_feasible(1, 1, 2, 3));
    CHECK_FALSE(m2_count_feasible(0, 0, 2, 3));
    // m = 1: any number of ones, at least n-1 zeros.
    CHECK(m2_count_feasible(7, 3, 1, 4));
    CHECK_FALSE(m2_count_feasible(7, 2, 1, 4));
    // ones = 2 with m = 3 needs closing = 1: zeros >= n - 3.
    CHECK(m2_count_feasible(2, 2, 3, 5));
    CHECK_FALSE(m2_count_feasible(2, 1, 3, 5));
    // ones = 1 is not a combination of 2s and 3s.
    CHECK_FALSE(m2_count_feasible(1, 100, 3, 5));

    // Accepted words always satisfy it (subset direction only).
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Dfa d = build_m2(m, n);
            for (const Word& x : oracle::all_words(2, 12))
                if (accepts(d, x))
                    CHECK(m2_count_feasible(count_symbol(x, 1), count_symbol(x, 0), m, n));
        }
}
