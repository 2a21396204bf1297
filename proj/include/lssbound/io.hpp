#pragma once

#include "lssbound/automaton.hpp"

#include <filesystem>
#include <functional>
#include <string>

namespace lssbound {

/// Malformed interchange document. The message names the offending key.
class FormatError : public DfaError {
public:
    using DfaError::DfaError;
};

/// Interchange document: {"states", "alphabet", "initial", "accepting",
/// "delta"}; any other key is rejected. The result is validated.
Dfa parse_dfa(const std::string& text);
Dfa load_dfa(const std::filesystem::path& path);
std::string dfa_to_json(const Dfa& d);

using StateNamer = std::function<std::string(State)>;

std::string plain_state_name(State q);

/// Graphviz digraph: one node per state (doublecircle when accepting), one
/// labeled edge per (state, symbol) in state-then-symbol order, and a point
/// node marking the initial state.
std::string to_dot(const Dfa& d, const std::string& graph_name, const StateNamer& name = plain_state_name);

}  // namespace lssbound
