#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lssbound {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// Ordered list of symbol labels. The position of a label is its index, and
/// that order is the lexicographic order used for words.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    static Alphabet binary();
    static Alphabet unary();

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& label(Symbol s) const { return symbols_.at(s); }
    const std::vector<std::string>& labels() const noexcept { return symbols_; }
    std::optional<Symbol> index_of(std::string_view label) const;

    bool operator==(const Alphabet&) const = default;
    auto operator<=>(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

using Word = std::vector<Symbol>;

/// Thrown when an automaton or word violates its structural invariants.
class DfaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Complete DFA. States are 0..state_count-1 and delta is a dense row-major
/// table of state_count x |alphabet| entries. The struct can hold invalid
/// data; `validate` reports the first broken invariant.
struct Dfa {
    std::uint32_t state_count = 0;
    Alphabet alphabet;
    State initial = 0;
    std::vector<State> accepting;  // sorted, unique
    std::vector<State> delta;

    State next(State q, Symbol c) const noexcept { return delta[q * alphabet.size() + c]; }
    bool is_accepting(State q) const noexcept;

    bool operator==(const Dfa&) const = default;
};

/// Assembles a Dfa from nested rows, normalizing the accepting list. Does
/// not validate.
Dfa make_dfa(Alphabet alphabet, State initial, std::vector<State> accepting,
             const std::vector<std::vector<State>>& rows);

/// Returns the first violated invariant, or nullopt when `d` is well formed.
std::optional<std::string> validate(const Dfa& d);

/// Throws DfaError carrying the `validate` diagnostic.
void require_valid(const Dfa& d);

State run(const Dfa& d, std::span<const Symbol> w);
State run_from(const Dfa& d, State start, std::span<const Symbol> w);
bool accepts(const Dfa& d, std::span<const Symbol> w);

/// Sorted list of states reachable from the initial state.
std::vector<State> reachable_states(const Dfa& d);

/// Parses a word. Single-character labels may be concatenated ("10010");
/// otherwise labels are separated by spaces or commas.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Alphabet& a, std::span<const Symbol> w);

std::size_t count_symbol(std::span<const Symbol> w, Symbol c);

}  // namespace lssbound
