#include "lssbound/constructions.hpp"
#include "lssbound/minimize.hpp"
#include "lssbound/product.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace lssbound;

TEST_CASE("single component product is the reachable part of the component") {
    const Dfa d = build_m2(2, 3);
    const Dfa one[] = {d};
    const Product p = product(one);
    CHECK(p.dfa.state_count == 3);
    CHECK(equivalent(p.dfa, d));
    CHECK(p.tags[0] == std::vector<State>{d.initial});
}

TEST_CASE("m1 x m2 for (2, 3)") {
    const Dfa pair[] = {build_m1(2), build_m2(2, 3)};
    const Product p = product(pair);
    CHECK(p.dfa.state_count <= 6);
    CHECK(accepts(p.dfa, parse_word(Alphabet::binary(), "10010")));
    CHECK(p.tags[0] == std::vector<State>{0, 0});
    CHECK_FALSE(validate(p.dfa).has_value());
}

TEST_CASE("product errors") {
    const Dfa mixed[] = {build_m1(2), build_unary(0, 2)};
    CHECK_THROWS_AS(product(mixed), DfaError);
    CHECK_THROWS_AS(product(std::span<const Dfa>{}), DfaError);
}

TEST_CASE("product tags are a bijection onto reachable tuples") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<Dfa> parts{oracle::random_dfa(rng, 1 + trial % 4, Alphabet::binary()),
                                     oracle::random_dfa(rng, 1 + trial % 5, Alphabet::binary()),
                                     oracle::random_dfa(rng, 1 + trial % 3, Alphabet::binary())};
        const Product p = product(parts);
        CHECK(p.dfa.state_count <= parts[0].state_count * parts[1].state_count * parts[2].state_count);
        std::set<std::vector<State>> distinct(p.tags.begin(), p.tags.end());
        CHECK(distinct.size() == p.tags.size());
        CHECK(reachable_states(p.dfa).size() == p.dfa.state_count);
        // Each tag follows the components along the product transitions.
        for (State q = 0; q < p.dfa.state_count; ++q)
            for (Symbol c = 0; c < 2; ++c)
                for (std::size_t i = 0; i < parts.size(); ++i)
                    CHECK(p.tags[p.dfa.next(q, c)][i] == parts[i].next(p.tags[q][i], c));
    }
}

TEST_CASE("product accepts exactly the common words") {
    std::mt19937_64 rng(5);
    const auto words = oracle::all_words(2, 8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<Dfa> parts{oracle::random_dfa(rng, 1 + trial % 5, Alphabet::binary()),
                                     oracle::random_dfa(rng, 1 + (trial / 5) % 5, Alphabet::binary())};
        const Product p = product(parts);
        for (const Word& x : words)
            CHECK(accepts(p.dfa, x) == (oracle::walk_accepts(parts[0], x) && oracle::walk_accepts(parts[1], x)));
    }
}
