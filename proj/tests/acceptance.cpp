// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "lssbound/constructions.hpp"
#include "lssbound/minimize.hpp"
#include "lssbound/product.hpp"
#include "lssbound/search.hpp"
#include "lssbound/shortest.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace lssbound;

namespace {

// Frozen from the first verified run; an independent bitset enumeration of
// all languages with sc <= 2, 2, 3 over words of length <= 11 agrees.
constexpr std::uint64_t kTripleMaxLss = 7;

constexpr double kPairRangeSeconds = 60.0;
constexpr double kTripleSearchSeconds = 600.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome pair_construction() {
    const auto t0 = Clock::now();
    std::uint64_t pairs = 0, failures = 0;
    for (std::uint32_t n = 1; n <= 30; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            ++pairs;
            const Dfa pair[] = {build_m1(m), build_m2(m, n)};
            const std::uint64_t expected = std::uint64_t{m} * n - 1;
            const auto lss = intersection_lss(pair);
            const Word x = closed_form_witness(m, n);
            const bool ok = lss && lss->length == expected && x.size() == expected && accepts(pair[0], x) &&
                            accepts(pair[1], x);
            failures += ok ? 0 : 1;
        }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << pairs << " pairs, " << failures << " failures, " << secs << " s (limit " << kPairRangeSeconds << " s)";
    return {pairs == 465 && failures == 0 && secs < kPairRangeSeconds, d.str()};
}

Outcome unary_coprime() {
    std::uint64_t pairs = 0, failures = 0;
    for (std::uint32_t n = 2; n <= 30; ++n)
        for (std::uint32_t m = 1; m < n; ++m) {
            if (std::gcd(m, n) != 1)
                continue;
            ++pairs;
            const Dfa pair[] = {build_unary(m - 1, m), build_unary(n - 1, n)};
            const auto lss = intersection_lss(pair);
            const auto crt = oracle::crt_scan({{m - 1, m}, {n - 1, n}});
            const std::uint64_t expected = std::uint64_t{m} * n - 1;
            failures += (lss && lss->length == expected && crt == expected) ? 0 : 1;
        }
    return {failures == 0, std::to_string(pairs) + " coprime pairs, " + std::to_string(failures) + " failures"};
}

Outcome state_complexities() {
    std::uint64_t checks = 0, failures = 0;
    for (std::uint32_t n = 1; n <= 30; ++n) {
        const Dfa m1 = build_m1(n);
        ++checks;
        failures += (state_complexity(m1) == n && oracle::table_filling_classes(m1) == n) ? 0 : 1;
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Dfa m2 = build_m2(m, n);
            ++checks;
            failures += (state_complexity(m2) == n && oracle::table_filling_classes(m2) == n) ? 0 : 1;
        }
    }
    return {failures == 0, std::to_string(checks) + " automata, " + std::to_string(failures) + " failures"};
}

Outcome triple_search() {
    const auto t0 = Clock::now();
    SearchOptions single;
    single.workers = 1;
    const SearchReport r = tightness_search({2, 2, 3}, Alphabet::binary(), single);
    const double secs = seconds_since(t0);

    const auto raw = raw_max_lss({2, 2}, Alphabet::binary());
    const auto canon = tightness_search_serial({2, 2}, Alphabet::binary()).max_lss;
    // Full raw enumeration of (2,2,3) without language dedup.
    const auto raw_triple = raw_max_lss({2, 2, 3}, Alphabet::binary());

    std::ostringstream d;
    d << "target " << r.target << ", max_lss " << (r.max_lss ? std::to_string(*r.max_lss) : "none")
      << " (frozen " << kTripleMaxLss << "), attained " << (r.attained ? "yes" : "no") << ", " << r.tuples_examined
      << " tuples, " << secs << " s; [2,2] raw " << (raw ? std::to_string(*raw) : "none") << " vs canonical "
      << (canon ? std::to_string(*canon) : "none") << "; raw (2,2,3) "
      << (raw_triple ? std::to_string(*raw_triple) : "none");
    const bool ok = !r.attained && r.max_lss == kTripleMaxLss && r.bound_violations == 0 &&
                    secs < kTripleSearchSeconds && raw.has_value() && raw == canon && raw_triple == r.max_lss;
    return {ok, d.str()};
}

Outcome pair_searches() {
    std::uint64_t failures = 0;
    std::ostringstream d;
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const SearchReport r = tightness_search({m, n}, Alphabet::binary());
            const bool ok = r.attained && r.max_lss == std::uint64_t{m} * n - 1;
            failures += ok ? 0 : 1;
            d << "(" << m << "," << n << ")=" << (r.max_lss ? std::to_string(*r.max_lss) : "none") << " ";
        }
    d << failures << " failures";
    return {failures == 0, d.str()};
}

Outcome pumping_bound() {
    std::uint64_t checked = 0, violations = 0;
    for (std::uint32_t s : {2u, 3u})
        enumerate_dfas(s, Alphabet::binary(), [&](const Dfa& d) {
            if (auto r = shortest_accepted(d)) {
                ++checked;
                violations += r->length <= s - 1 ? 0 : 1;
            }
        });

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint32_t> size(1, 8);
    std::uint64_t pairs = 0, attempts = 0;
    while (pairs < 200) {
        ++attempts;
        const std::uint32_t m = size(rng), n = size(rng);
        const std::vector<Dfa> parts{oracle::random_dfa(rng, m, Alphabet::binary()),
                                     oracle::random_dfa(rng, n, Alphabet::binary())};
        const auto r = intersection_lss(parts);
        if (!r)
            continue;
        ++pairs;
        violations += r->length <= std::uint64_t{m} * n - 1 ? 0 : 1;
    }
    return {violations == 0, std::to_string(checked) + " single DFAs, " + std::to_string(pairs) + " random pairs (" +
                                 std::to_string(attempts) + " drawn), " + std::to_string(violations) + " violations"};
}

Outcome characterization() {
    std::uint64_t accepted = 0, witnesses = 0, violations = 0;
    const auto words = oracle::all_words(2, 14);
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t m = 1; m <= n; ++m) {
            const Dfa d = build_m2(m, n);
            for (const Word& x : words) {
                if (!accepts(d, x))
                    continue;
                ++accepted;
                violations += m2_count_feasible(count_symbol(x, 1), count_symbol(x, 0), m, n) ? 0 : 1;
            }
            for (std::uint64_t i = 1; i <= 4; ++i)
                for (std::uint64_t j = 0; j <= 4; ++j) {
                    ++witnesses;
                    const PathCounts p{i, j, m, n};
                    const Word x = path_count_witness(p);
                    const bool ok = accepts(d, x) && count_symbol(x, 0) == i * (n - m + 1) - 1 &&
                                    count_symbol(x, 1) == i * (m - 1) + j * m;
                    violations += ok ? 0 : 1;
                }
        }
    return {violations == 0, std::to_string(accepted) + " accepted words, " + std::to_string(witnesses) +
                                 " path-count witnesses, " + std::to_string(violations) + " violations"};
}

Outcome product_soundness() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint32_t> size(1, 5);
    const auto words = oracle::all_words(2, 8);
    std::uint64_t violations = 0, checks = 0;
    for (int pair = 0; pair < 100; ++pair) {
        const std::vector<Dfa> parts{oracle::random_dfa(rng, size(rng), Alphabet::binary()),
                                     oracle::random_dfa(rng, size(rng), Alphabet::binary())};
        const Product p = product(parts);
        for (const Word& x : words) {
            ++checks;
            const bool both = oracle::walk_accepts(parts[0], x) && oracle::walk_accepts(parts[1], x);
            violations += accepts(p.dfa, x) == both ? 0 : 1;
        }
    }
    return {violations == 0, std::to_string(checks) + " word checks, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 two-automaton construction, 1 <= m <= n <= 30", pair_construction},
        {"2 unary coprime construction", unary_coprime},
        {"3 state complexities m and n", state_complexities},
        {"4 exhaustive (2,2,3) search", triple_search},
        {"5 pair searches attain mn-1", pair_searches},
        {"6 pumping bound", pumping_bound},
        {"7 count characterization", characterization},
        {"8 product soundness", product_soundness},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
