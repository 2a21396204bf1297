#include "lssbound/shortest.hpp"

#include "lssbound/product.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace lssbound {

namespace {

constexpr State kUnseen = std::numeric_limits<State>::max();

}  // namespace

std::optional<LssResult> shortest_accepted(const Dfa& d) {
    require_valid(d);
    if (d.accepting.empty())
        return std::nullopt;

    // Predecessor (state, symbol) of the first discovery. Queue order within a
    // layer follows the lexicographic order of the least words reaching each
    // state, so the first accepting state dequeued ends the least shortest word.
    std::vector<State> parent(d.state_count, kUnseen);
    std::vector<Symbol> via(d.state_count, 0);
    std::vector<std::uint64_t> depth(d.state_count, 0);
    std::vector<State> queue;
    queue.reserve(d.state_count);
    queue.push_back(d.initial);
    parent[d.initial] = d.initial;

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State q = queue[head];
        if (d.is_accepting(q)) {
            LssResult r;
            r.length = depth[q];
            r.witness.resize(depth[q]);
            State cur = q;
            for (std::uint64_t k = depth[q]; k > 0; --k) {
                r.witness[k - 1] = via[cur];
                cur = parent[cur];
            }
            return r;
        }
        for (Symbol c = 0; c < d.alphabet.size(); ++c) {
            const State r = d.next(q, c);
            if (parent[r] == kUnseen) {
                parent[r] = q;
                via[r] = c;
                depth[r] = depth[q] + 1;
                queue.push_back(r);
            }
        }
    }
    return std::nullopt;
}

std::optional<LssResult> intersection_lss(std::span<const Dfa> components) {
    return shortest_accepted(product(components).dfa);
}

std::optional<std::uint64_t> intersection_lss_length(std::span<const Dfa* const> components) {
    const std::size_t k = components.size();
    if (k == 0)
        throw DfaError("product of an empty component list");
    const std::size_t sigma = components[0]->alphabet.size();

    std::uint64_t grid = 1;
    for (const Dfa* c : components) {
        if (c->accepting.empty())
            return std::nullopt;
        grid *= c->state_count;
    }

    // Flattened tuple codes: code = sum(state_i * stride_i).
    thread_local std::vector<std::uint64_t> dist;
    thread_local std::vector<std::uint64_t> queue;
    thread_local std::vector<std::uint64_t> stride;
    dist.assign(grid, std::numeric_limits<std::uint64_t>::max());
    queue.clear();
    stride.resize(k);
    std::uint64_t s = 1;
    std::uint64_t start = 0;
    for (std::size_t i = 0; i < k; ++i) {
        stride[i] = s;
        start += s * components[i]->initial;
        s *= components[i]->state_count;
    }
    dist[start] = 0;
    queue.push_back(start);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t code = queue[head];
        bool accepting = true;
        std::uint64_t rest = code;
        State tuple[16];
        std::vector<State> wide;
        State* t = tuple;
        if (k > 16) {
            wide.resize(k);
            t = wide.data();
        }
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = static_cast<State>(rest % components[i]->state_count);
            rest /= components[i]->state_count;
            accepting = accepting && components[i]->is_accepting(t[i]);
        }
        if (accepting)
            return dist[code];
        for (Symbol c = 0; c < sigma; ++c) {
            std::uint64_t succ = 0;
            for (std::size_t i = 0; i < k; ++i)
                succ += stride[i] * components[i]->next(t[i], c);
            if (dist[succ] == std::numeric_limits<std::uint64_t>::max()) {
                dist[succ] = dist[code] + 1;
                queue.push_back(succ);
            }
        }
    }
    return std::nullopt;
}

}  // namespace lssbound
