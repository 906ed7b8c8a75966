#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tresyn/ptre.hpp"
#include "tresyn/tre.hpp"

namespace tresyn {

enum class NodeKind : std::uint8_t { Epsilon, Atom, Concat, Or, Star, Hole };

/*
 * Flattened syntax tree with level-order positions: the root is 1, then its
 * children, then theirs, level by level.  Depth counts from 1 at the root.
 * For the event shape (a | a b) b* this numbers the outer concatenation 1,
 * the alternation 2, the star 3, the lone a 4, the inner concatenation 5, the
 * star body b 6, and the inner a and b 7 and 8.  Position ids double as
 * interval ids in the constraint encoding, so both views (concrete
 * expressions and parametric candidates) label through this one type.
 */
struct LabeledTree {
    struct Node {
        NodeKind kind{NodeKind::Epsilon};
        Event event;                          /* Atom */
        std::optional<Interval> restriction;  /* concrete trees only */
        int left{0};                          /* child positions; 0 = none */
        int right{0};
        int parent{0};
        int depth{1};
    };

    /* 1-indexed by position; nodes[0] is unused. */
    std::vector<Node> nodes;

    int size() const { return static_cast<int>(nodes.size()) - 1; }
    const Node& at(int pos) const { return nodes[static_cast<std::size_t>(pos)]; }
};

LabeledTree label_positions(const Tre& t);
LabeledTree label_positions(const PTre& p);

/*
 * Position automaton for the untimed projection.  One state per leaf
 * position plus the initial state 0; transitions enter a leaf's state reading
 * that leaf's event, so every accepting run over an n-letter word takes
 * exactly n transitions.  Hole leaves become wildcard states that read any
 * event, self-loop, and accept the empty segment — together they stand for
 * "any event sequence", which makes the automaton an over-approximation for
 * candidates that still contain holes.
 */
struct GlushkovNfa {
    struct State {
        Event event;            /* empty + wildcard=true for holes */
        bool wildcard{false};
        bool accepting{false};
        int depth{1};
        std::vector<int> next;  /* successor positions, ascending */
    };

    bool initial_accepting{false};
    std::vector<int> initial_next;  /* positions reachable from state 0, ascending */
    std::vector<State> by_pos;      /* indexed by position; non-leaf slots unused */
    std::vector<int> leaf_positions;

    bool is_leaf(int pos) const {
        return pos > 0 && pos < static_cast<int>(by_pos.size()) &&
               (by_pos[static_cast<std::size_t>(pos)].wildcard || !by_pos[static_cast<std::size_t>(pos)].event.empty());
    }
};

GlushkovNfa glushkov(const LabeledTree& tree);

/* Subset simulation over the event sequence. */
bool untimed_accepts(const GlushkovNfa& nfa, const std::vector<Event>& events);

/* One accepting run, as the visited (position, depth) per letter. */
using AcceptingPath = std::vector<std::pair<int, int>>;

/* All accepting runs, ordered lexicographically by position sequence. */
std::vector<AcceptingPath> accepting_paths(const GlushkovNfa& nfa, const std::vector<Event>& events);

/*
 * Explicit parse of a word segment against the tree: which node matched which
 * segment.  Concatenations have two children splitting the segment in order;
 * alternations have exactly one child (the chosen branch); stars carry one
 * child per iteration, each rooted at the body and nonempty — a star matching
 * the empty segment has zero children.  Leaves have none.
 */
struct Derivation {
    int position{0};
    int begin{0};  /* 0-based, half-open segment [begin, end) */
    int end{0};
    std::vector<Derivation> children;

    bool operator==(const Derivation& o) const {
        return position == o.position && begin == o.begin && end == o.end && children == o.children;
    }
};

/*
 * All derivations of the full word against the whole tree.  Memoized per
 * call; no state is shared across calls.  Trees with holes are rejected.
 */
std::vector<Derivation> derivations(const LabeledTree& tree, const std::vector<Event>& events);

/* Leaf sequence of a derivation as (position, depth), left to right. */
AcceptingPath derivation_path(const LabeledTree& tree, const Derivation& d);

/* Nested one-line dump: "1[0,3)(2[0,2)(...) 3[2,3)(...))". */
std::string format_derivation(const Derivation& d);

}  // namespace tresyn
