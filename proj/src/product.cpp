#include "lssbound/product.hpp"

#include <unordered_map>

namespace lssbound {

void require_shared_alphabet(std::span<const Dfa> components) {
    if (components.empty())
        throw DfaError("product of an empty component list");
    for (std::size_t i = 1; i < components.size(); ++i)
        if (components[i].alphabet != components[0].alphabet)
            throw DfaError("alphabet mismatch between component 0 and component " + std::to_string(i));
}

Product product(std::span<const Dfa> components) {
    require_shared_alphabet(components);
    for (const auto& c : components)
        require_valid(c);

    const std::size_t k = components.size();
    const std::size_t sigma = components[0].alphabet.size();

    // Mixed-radix code of a tuple; sizes here keep the full grid well inside 64 bits.
    std::vector<std::uint64_t> radix(k);
    std::uint64_t grid = 1;
    for (std::size_t i = 0; i < k; ++i) {
        radix[i] = grid;
        grid *= components[i].state_count;
    }
    auto encode = [&](const std::vector<State>& t) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < k; ++i)
            code += radix[i] * t[i];
        return code;
    };

    Product out;
    out.dfa.alphabet = components[0].alphabet;
    std::unordered_map<std::uint64_t, State> index;

    std::vector<State> start(k);
    for (std::size_t i = 0; i < k; ++i)
        start[i] = components[i].initial;
    index.emplace(encode(start), 0);
    out.tags.push_back(std::move(start));

    std::vector<State> succ(k);
    for (std::size_t head = 0; head < out.tags.size(); ++head) {
        for (Symbol c = 0; c < sigma; ++c) {
            for (std::size_t i = 0; i < k; ++i)
                succ[i] = components[i].next(out.tags[head][i], c);
            auto [it, fresh] = index.emplace(encode(succ), static_cast<State>(out.tags.size()));
            if (fresh)
                out.tags.push_back(succ);
            out.dfa.delta.push_back(it->second);
        }
    }

    out.dfa.state_count = static_cast<std::uint32_t>(out.tags.size());
    out.dfa.initial = 0;
    for (State q = 0; q < out.dfa.state_count; ++q) {
        bool all = true;
        for (std::size_t i = 0; i < k && all; ++i)
            all = components[i].is_accepting(out.tags[q][i]);
        if (all)
            out.dfa.accepting.push_back(q);
    }
    return out;
}

}  // namespace lssbound
