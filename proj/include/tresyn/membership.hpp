#pragma once

#include "tresyn/derive.hpp"
#include "tresyn/timed_word.hpp"
#include "tresyn/tre.hpp"

namespace tresyn {

/*
 * Does the word belong to the expression's language?  A word is a member
 * exactly when some derivation assigns segments to nodes such that every
 * restricted node's segment delay-sum lies in its interval; this is decided
 * by a memoized search over (node, segment) subproblems.
 */
bool membership(const Tre& t, const TimedWord& w);

/* True when every restricted node occurrence in d satisfies its interval. */
bool derivation_satisfied(const LabeledTree& tree, const Derivation& d, const TimedWord& w);

/* The satisfied derivations of w against t — the witnesses of membership. */
std::vector<Derivation> satisfied_derivations(const Tre& t, const TimedWord& w);

}  // namespace tresyn
