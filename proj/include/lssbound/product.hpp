#pragma once

#include "lssbound/automaton.hpp"

#include <span>
#include <vector>

namespace lssbound {

/// Intersection automaton over the reachable state tuples. `tags[q]` is the
/// component state tuple behind product state q; states are numbered in
/// breadth-first discovery order with symbols in alphabet order, so state 0
/// is the tuple of component initials.
struct Product {
    Dfa dfa;
    std::vector<std::vector<State>> tags;
};

Product product(std::span<const Dfa> components);

/// Throws DfaError unless every component has the same alphabet.
void require_shared_alphabet(std::span<const Dfa> components);

}  // namespace lssbound
