#include "lssbound/search.hpp"

#include "lssbound/shortest.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lssbound {

std::uint64_t dfa_count(std::uint32_t states, const Alphabet& alphabet) {
    if (states == 0)
        throw SearchError("enumeration needs at least one state");
    const std::uint64_t entries = std::uint64_t{states} * alphabet.size();
    std::uint64_t tables = 1;
    for (std::uint64_t k = 0; k < entries; ++k) {
        if (tables > std::numeric_limits<std::uint64_t>::max() / states)
            throw SearchError("enumeration size overflows 64 bits");
        tables *= states;
    }
    if (states >= 63 || tables > (std::numeric_limits<std::uint64_t>::max() >> states))
        throw SearchError("enumeration size overflows 64 bits");
    return tables << states;
}

Dfa dfa_at(std::uint32_t states, const Alphabet& alphabet, std::uint64_t index) {
    Dfa d;
    d.state_count = states;
    d.alphabet = alphabet;
    d.initial = 0;
    for (State q = 0; q < states; ++q)
        if ((index >> q) & 1u)
            d.accepting.push_back(q);
    std::uint64_t digits = index >> states;
    d.delta.resize(std::size_t{states} * alphabet.size());
    for (auto& entry : d.delta) {
        entry = static_cast<State>(digits % states);
        digits /= states;
    }
    return d;
}

void enumerate_dfas(std::uint32_t states, const Alphabet& alphabet,
                    const std::function<void(const Dfa&)>& visit) {
    const std::uint64_t total = dfa_count(states, alphabet);
    for (std::uint64_t i = 0; i < total; ++i)
        visit(dfa_at(states, alphabet, i));
}

std::vector<CanonicalDfa> canonical_languages(std::uint32_t states, const Alphabet& alphabet) {
    std::set<CanonicalDfa> seen;
    enumerate_dfas(states, alphabet, [&](const Dfa& d) { seen.insert(minimize(d)); });
    return {seen.begin(), seen.end()};
}

namespace {

struct Prepared {
    std::vector<std::uint32_t> sizes;
    std::uint64_t target = 0;
    std::vector<std::vector<CanonicalDfa>> lists;
};

Prepared prepare(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                 const SearchOptions& options) {
    if (sizes.empty())
        throw SearchError("search needs at least one size");
    std::uint64_t grid = 1;
    for (auto s : sizes) {
        if (s == 0)
            throw SearchError("sizes must be positive");
        grid *= s;
        if (grid > options.max_product_states)
            throw SearchError("budget exceeded: product of sizes exceeds " +
                              std::to_string(options.max_product_states) + " states");
    }

    Prepared p;
    p.sizes = sizes;
    p.target = grid - 1;
    std::vector<std::vector<CanonicalDfa>> cache(*std::max_element(sizes.begin(), sizes.end()) + 1);
    std::uint64_t tuples = 1;
    for (auto s : sizes) {
        if (cache[s].empty())
            cache[s] = canonical_languages(s, alphabet);
        p.lists.push_back(cache[s]);
        tuples *= cache[s].size();
        if (tuples > options.max_tuples)
            throw SearchError("budget exceeded: more than " + std::to_string(options.max_tuples) +
                              " language tuples");
    }
    return p;
}

struct Partial {
    std::optional<std::uint64_t> best;
    std::vector<std::size_t> best_index;
    std::uint64_t examined = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;

    void offer(std::uint64_t lss, const std::vector<std::size_t>& index) {
        if (!best || lss > *best || (lss == *best && index < best_index)) {
            best = lss;
            best_index = index;
        }
    }

    void merge(const Partial& o) {
        examined += o.examined;
        skipped += o.skipped;
        violations += o.violations;
        if (o.best)
            offer(*o.best, o.best_index);
    }
};

// All tuples whose first component is lists[0][first].
void scan_slice(const Prepared& p, std::size_t first, Partial& acc) {
    const std::size_t k = p.lists.size();
    std::vector<std::size_t> index(k, 0);
    index[0] = first;
    std::vector<const Dfa*> tuple(k);
    for (std::size_t i = 0; i < k; ++i)
        tuple[i] = &p.lists[i][index[i]].dfa();

    while (true) {
        bool empty = false;
        for (const Dfa* d : tuple)
            empty = empty || d->accepting.empty();
        if (empty) {
            ++acc.skipped;
        } else {
            ++acc.examined;
            if (auto lss = intersection_lss_length(tuple)) {
                if (*lss > p.target)
                    ++acc.violations;
                acc.offer(*lss, index);
            }
        }
        // Odometer over components 1..k-1, last component fastest.
        std::size_t pos = k;
        while (pos > 1) {
            --pos;
            if (++index[pos] < p.lists[pos].size()) {
                tuple[pos] = &p.lists[pos][index[pos]].dfa();
                break;
            }
            index[pos] = 0;
            tuple[pos] = &p.lists[pos][0].dfa();
            if (pos == 1)
                return;
        }
        if (k == 1)
            return;
    }
}

SearchReport finish(const Prepared& p, const Partial& acc) {
    SearchReport r;
    r.sizes = p.sizes;
    r.target = p.target;
    r.max_lss = acc.best;
    r.attained = acc.best && *acc.best == p.target;
    r.tuples_examined = acc.examined;
    r.tuples_skipped = acc.skipped;
    r.bound_violations = acc.violations;
    for (const auto& l : p.lists)
        r.languages_per_size.push_back(l.size());
    if (acc.best) {
        std::vector<Dfa> dfas;
        for (std::size_t i = 0; i < p.lists.size(); ++i) {
            r.witness_tuple.push_back(p.lists[i][acc.best_index[i]]);
            dfas.push_back(p.lists[i][acc.best_index[i]].dfa());
        }
        auto lss = intersection_lss(dfas);
        if (!lss || lss->length != *acc.best)
            throw SearchError("witness tuple does not reproduce the maximum");
        r.witness_word = lss->witness;
    }
    return r;
}

}  // namespace

SearchReport tightness_search_serial(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                                     const SearchOptions& options) {
    const Prepared p = prepare(sizes, alphabet, options);
    Partial acc;
    for (std::size_t first = 0; first < p.lists[0].size(); ++first)
        scan_slice(p, first, acc);
    return finish(p, acc);
}

SearchReport tightness_search(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                              const SearchOptions& options) {
    const Prepared p = prepare(sizes, alphabet, options);
    const auto outer = static_cast<std::int64_t>(p.lists[0].size());
    Partial acc;
#if defined(_OPENMP)
    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
#endif
    {
        Partial local;
#if defined(_OPENMP)
#pragma omp for schedule(dynamic, 1) nowait
#endif
        for (std::int64_t first = 0; first < outer; ++first)
            scan_slice(p, static_cast<std::size_t>(first), local);
#if defined(_OPENMP)
#pragma omp critical(lssbound_search_merge)
#endif
        acc.merge(local);
    }
    return finish(p, acc);
}

std::optional<std::uint64_t> raw_max_lss(const std::vector<std::uint32_t>& sizes, const Alphabet& alphabet,
                                         const SearchOptions& options) {
    if (sizes.empty())
        throw SearchError("search needs at least one size");
    std::vector<std::vector<Dfa>> lists;
    std::uint64_t tuples = 1;
    for (auto s : sizes) {
        const std::uint64_t count = dfa_count(s, alphabet);
        tuples *= count;
        if (tuples > options.max_tuples)
            throw SearchError("budget exceeded: more than " + std::to_string(options.max_tuples) +
                              " raw tuples");
        std::vector<Dfa> l;
        l.reserve(count);
        enumerate_dfas(s, alphabet, [&](const Dfa& d) { l.push_back(d); });
        lists.push_back(std::move(l));
    }

    const std::size_t k = lists.size();
    const auto total = static_cast<std::int64_t>(tuples);
    std::int64_t best = -1;
#if defined(_OPENMP)
    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for num_threads(workers) reduction(max : best) schedule(static)
#endif
    for (std::int64_t t = 0; t < total; ++t) {
        std::vector<const Dfa*> tuple(k);
        auto rest = static_cast<std::uint64_t>(t);
        for (std::size_t i = k; i-- > 0;) {
            tuple[i] = &lists[i][rest % lists[i].size()];
            rest /= lists[i].size();
        }
        if (auto lss = intersection_lss_length(tuple))
            best = std::max(best, static_cast<std::int64_t>(*lss));
    }
    if (best < 0)
        return std::nullopt;
    return static_cast<std::uint64_t>(best);
}

}  // namespace lssbound
