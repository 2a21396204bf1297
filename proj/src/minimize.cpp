#include "lssbound/minimize.hpp"

#include <algorithm>
#include <map>

namespace lssbound {

CanonicalDfa::CanonicalDfa(Dfa d) : dfa_(std::move(d)) {
    key_.reserve(1 + dfa_.state_count + dfa_.delta.size());
    key_.push_back(dfa_.state_count);
    for (State q = 0; q < dfa_.state_count; ++q)
        key_.push_back(dfa_.is_accepting(q) ? 1 : 0);
    key_.insert(key_.end(), dfa_.delta.begin(), dfa_.delta.end());
}

CanonicalDfa minimize(const Dfa& d) {
    require_valid(d);
    const std::size_t sigma = d.alphabet.size();
    const std::vector<State> live = reachable_states(d);

    std::vector<std::uint32_t> block(d.state_count, 0);
    std::uint32_t blocks = 0;
    {
        bool has_acc = false, has_rej = false;
        for (State q : live)
            (d.is_accepting(q) ? has_acc : has_rej) = true;
        blocks = (has_acc ? 1u : 0u) + (has_rej ? 1u : 0u);
        for (State q : live)
            block[q] = (d.is_accepting(q) && has_rej) ? 1 : 0;
    }

    // Refine by (own block, successor blocks) until the block count is stable.
    std::vector<std::uint32_t> signature(1 + sigma);
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> refined(d.state_count, 0);
        for (State q : live) {
            signature[0] = block[q];
            for (Symbol c = 0; c < sigma; ++c)
                signature[1 + c] = block[d.next(q, c)];
            auto [it, fresh] = ids.emplace(signature, static_cast<std::uint32_t>(ids.size()));
            refined[q] = it->second;
        }
        const auto count = static_cast<std::uint32_t>(ids.size());
        block = std::move(refined);
        if (count == blocks)
            break;
        blocks = count;
    }

    // Renumber blocks by breadth-first first visit from the initial block.
    std::vector<State> representative(blocks, 0);
    for (State q : live)
        representative[block[q]] = q;
    constexpr std::uint32_t kNone = ~0u;
    std::vector<std::uint32_t> order(blocks, kNone);
    std::vector<std::uint32_t> queue{block[d.initial]};
    order[block[d.initial]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State rep = representative[queue[head]];
        for (Symbol c = 0; c < sigma; ++c) {
            const std::uint32_t b = block[d.next(rep, c)];
            if (order[b] == kNone) {
                order[b] = static_cast<std::uint32_t>(queue.size());
                queue.push_back(b);
            }
        }
    }

    Dfa out;
    out.state_count = blocks;
    out.alphabet = d.alphabet;
    out.initial = 0;
    out.delta.resize(std::size_t{blocks} * sigma);
    for (std::uint32_t b = 0; b < blocks; ++b) {
        const State rep = representative[b];
        if (d.is_accepting(rep))
            out.accepting.push_back(order[b]);
        for (Symbol c = 0; c < sigma; ++c)
            out.delta[order[b] * sigma + c] = order[block[d.next(rep, c)]];
    }
    std::sort(out.accepting.begin(), out.accepting.end());
    return CanonicalDfa(std::move(out));
}

std::uint32_t state_complexity(const Dfa& d) { return minimize(d).state_count(); }

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw DfaError("equivalence check across different alphabets");
    return minimize(a) == minimize(b);
}

}  // namespace lssbound
