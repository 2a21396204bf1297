#include "lssbound/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lssbound {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw DfaError("alphabet is empty");
    std::set<std::string_view> seen;
    for (const auto& s : symbols_) {
        if (s.empty())
            throw DfaError("alphabet contains an empty label");
        if (!seen.insert(s).second)
            throw DfaError("alphabet contains duplicate label \"" + s + "\"");
    }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }
Alphabet Alphabet::unary() { return Alphabet({"a"}); }

std::optional<Symbol> Alphabet::index_of(std::string_view label) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), label);
    if (it == symbols_.end())
        return std::nullopt;
    return static_cast<Symbol>(it - symbols_.begin());
}

bool Dfa::is_accepting(State q) const noexcept {
    return std::binary_search(accepting.begin(), accepting.end(), q);
}

Dfa make_dfa(Alphabet alphabet, State initial, std::vector<State> accepting,
             const std::vector<std::vector<State>>& rows) {
    Dfa d;
    d.state_count = static_cast<std::uint32_t>(rows.size());
    d.initial = initial;
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    d.accepting = std::move(accepting);
    for (const auto& row : rows) {
        if (row.size() != alphabet.size())
            throw DfaError("delta row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(alphabet.size()));
        d.delta.insert(d.delta.end(), row.begin(), row.end());
    }
    d.alphabet = std::move(alphabet);
    return d;
}

std::optional<std::string> validate(const Dfa& d) {
    if (d.state_count == 0)
        return "state count must be positive";
    if (d.alphabet.size() == 0)
        return "alphabet is empty";
    if (d.delta.size() != std::size_t{d.state_count} * d.alphabet.size())
        return "delta has wrong dimensions: expected " + std::to_string(d.state_count) + " x " +
               std::to_string(d.alphabet.size()) + " entries, found " + std::to_string(d.delta.size());
    if (d.initial >= d.state_count)
        return "initial state out of range";
    for (std::size_t i = 0; i < d.accepting.size(); ++i) {
        if (d.accepting[i] >= d.state_count)
            return "accepting state " + std::to_string(d.accepting[i]) + " out of range";
        if (i > 0 && d.accepting[i - 1] >= d.accepting[i])
            return "accepting set is not sorted and duplicate-free";
    }
    for (std::size_t k = 0; k < d.delta.size(); ++k) {
        if (d.delta[k] >= d.state_count)
            return "delta entry out of range at state " + std::to_string(k / d.alphabet.size()) +
                   ", symbol " + std::to_string(k % d.alphabet.size());
    }
    return std::nullopt;
}

void require_valid(const Dfa& d) {
    if (auto err = validate(d))
        throw DfaError(*err);
}

State run_from(const Dfa& d, State start, std::span<const Symbol> w) {
    State q = start;
    for (Symbol c : w) {
        if (c >= d.alphabet.size())
            throw DfaError("symbol index " + std::to_string(c) + " out of range");
        q = d.next(q, c);
    }
    return q;
}

State run(const Dfa& d, std::span<const Symbol> w) { return run_from(d, d.initial, w); }

bool accepts(const Dfa& d, std::span<const Symbol> w) { return d.is_accepting(run(d, w)); }

std::vector<State> reachable_states(const Dfa& d) {
    std::vector<char> seen(d.state_count, 0);
    std::deque<State> queue{d.initial};
    seen[d.initial] = 1;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol c = 0; c < d.alphabet.size(); ++c) {
            State r = d.next(q, c);
            if (!seen[r]) {
                seen[r] = 1;
                queue.push_back(r);
            }
        }
    }
    std::vector<State> out;
    for (State q = 0; q < d.state_count; ++q)
        if (seen[q])
            out.push_back(q);
    return out;
}

Word parse_word(const Alphabet& a, std::string_view text) {
    Word w;
    const bool single_char = std::all_of(a.labels().begin(), a.labels().end(),
                                         [](const std::string& s) { return s.size() == 1; });
    const bool separated = text.find_first_of(" ,") != std::string_view::npos;
    if (single_char && !separated) {
        for (char ch : text) {
            auto idx = a.index_of(std::string_view(&ch, 1));
            if (!idx)
                throw DfaError(std::string("unknown symbol '") + ch + "'");
            w.push_back(*idx);
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find_first_of(" ,", pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto tok = text.substr(pos, end - pos);
        if (!tok.empty()) {
            auto idx = a.index_of(tok);
            if (!idx)
                throw DfaError("unknown symbol \"" + std::string(tok) + "\"");
            w.push_back(*idx);
        }
        pos = end + 1;
    }
    return w;
}

std::string format_word(const Alphabet& a, std::span<const Symbol> w) {
    const bool single_char = std::all_of(a.labels().begin(), a.labels().end(),
                                         [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char && i > 0)
            out += ' ';
        out += a.label(w[i]);
    }
    return out;
}

std::size_t count_symbol(std::span<const Symbol> w, Symbol c) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

}  // namespace lssbound
