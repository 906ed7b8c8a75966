#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tresyn/interval.hpp"
#include "tresyn/timed_word.hpp"

namespace tresyn {

enum class TreKind : std::uint8_t { Epsilon, Atom, Concat, Or, Star };

struct Tre;
using TrePtr = std::shared_ptr<const Tre>;

/*
 * Timed regular expression node.  Concat and Or are binary (left/right),
 * Star is unary (left).  Every node may carry a time restriction: the sum of
 * delays of the subword matched by this node must fall in the interval.  An
 * absent restriction means [0, inf).  Nodes are immutable after construction
 * and shared freely.
 */
struct Tre {
    TreKind kind{TreKind::Epsilon};
    Event event;                           /* Atom only */
    TrePtr left;                           /* Concat/Or/Star */
    TrePtr right;                          /* Concat/Or */
    std::optional<Interval> restriction;   /* nullopt = unrestricted */

    bool restricted() const { return restriction && !restriction->is_universal(); }
};

TrePtr make_epsilon(std::optional<Interval> restriction = std::nullopt);
TrePtr make_atom(Event event, std::optional<Interval> restriction = std::nullopt);
TrePtr make_concat(TrePtr left, TrePtr right, std::optional<Interval> restriction = std::nullopt);
TrePtr make_or(TrePtr left, TrePtr right, std::optional<Interval> restriction = std::nullopt);
TrePtr make_star(TrePtr body, std::optional<Interval> restriction = std::nullopt);
/* Same node with its restriction replaced. */
TrePtr with_restriction(const TrePtr& t, std::optional<Interval> restriction);

/* Number of syntax-tree nodes; restrictions are attributes and do not count. */
std::size_t tre_length(const Tre& t);

bool structural_equal(const Tre& a, const Tre& b);

/*
 * Parse the expression syntax:
 *
 *   alt      := cat ('|' cat)*
 *   cat      := unary+                          juxtaposition or '.' concatenates
 *   unary    := atom post*
 *   post     := '*' | interval                  postfixes apply left to right
 *   atom     := EVENT | 'eps' | '(' alt ')'
 *   interval := ('['|'(') NAT ',' (NAT|'inf') (']'|')')
 *
 * Binary operators associate to the left.  A postfix interval restricts the
 * immediately preceding unary; stacked intervals intersect (an empty
 * intersection is an error), and "inf]" is rejected.  After a unary, '(' is
 * read as an interval when the next non-space character is a digit and as a
 * new factor otherwise.
 */
TrePtr parse_tre(const std::string& text);

/*
 * Canonical text form, parseable back by parse_tre.  Composite children are
 * parenthesized, as are restricted atoms in child position; universal
 * restrictions are omitted.  Example: concatenating a[1,3] and b[2,4] under
 * restriction [5,6] prints as "((a[1,3]) (b[2,4]))[5,6]".
 */
std::string format_tre(const Tre& t);

}  // namespace tresyn
