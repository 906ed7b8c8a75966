#include "tresyn/derive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tresyn {

// ===========================================================================
// Labeling
// ===========================================================================

namespace {

/*
 * Both tree types flatten the same way; the accessor lambdas bridge the two
 * node layouts.
 */
template <typename NodeT, typename KindF, typename EventF, typename RestrF, typename LeftF, typename RightF>
LabeledTree label_impl(const NodeT* root, KindF kind_of, EventF event_of, RestrF restr_of, LeftF left_of,
                       RightF right_of) {
    LabeledTree tree;
    tree.nodes.resize(1);
    std::vector<const NodeT*> order{root};
    std::vector<int> parents{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const NodeT* n = order[i];
        LabeledTree::Node node;
        node.kind = kind_of(n);
        node.event = event_of(n);
        node.restriction = restr_of(n);
        node.parent = parents[i];
        node.depth = parents[i] ? tree.nodes[static_cast<std::size_t>(parents[i])].depth + 1 : 1;
        tree.nodes.push_back(node);
        const int pos = static_cast<int>(tree.nodes.size()) - 1;
        if (parents[i]) {
            auto& up = tree.nodes[static_cast<std::size_t>(parents[i])];
            (up.left == 0 ? up.left : up.right) = pos;
        }
        if (const NodeT* l = left_of(n)) {
            order.push_back(l);
            parents.push_back(pos);
        }
        if (const NodeT* r = right_of(n)) {
            order.push_back(r);
            parents.push_back(pos);
        }
    }
    return tree;
}

}  // namespace

LabeledTree label_positions(const Tre& t) {
    return label_impl(
        &t,
        [](const Tre* n) {
            switch (n->kind) {
                case TreKind::Epsilon: return NodeKind::Epsilon;
                case TreKind::Atom: return NodeKind::Atom;
                case TreKind::Concat: return NodeKind::Concat;
                case TreKind::Or: return NodeKind::Or;
                case TreKind::Star: return NodeKind::Star;
            }
            return NodeKind::Epsilon;
        },
        [](const Tre* n) { return n->event; },
        [](const Tre* n) { return n->restricted() ? n->restriction : std::optional<Interval>{}; },
        [](const Tre* n) { return n->left.get(); }, [](const Tre* n) { return n->right.get(); });
}

LabeledTree label_positions(const PTre& p) {
    return label_impl(
        &p,
        [](const PTre* n) {
            switch (n->kind) {
                case PTreKind::Hole: return NodeKind::Hole;
                case PTreKind::Atom: return NodeKind::Atom;
                case PTreKind::Concat: return NodeKind::Concat;
                case PTreKind::Or: return NodeKind::Or;
                case PTreKind::Star: return NodeKind::Star;
            }
            return NodeKind::Hole;
        },
        [](const PTre* n) { return n->event; }, [](const PTre*) { return std::optional<Interval>{}; },
        [](const PTre* n) { return n->left.get(); }, [](const PTre* n) { return n->right.get(); });
}

// ===========================================================================
// Position automaton
// ===========================================================================

namespace {

struct GlushkovSets {
    bool nullable{false};
    std::vector<int> first;
    std::vector<int> last;
};

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void connect(GlushkovNfa& nfa, const std::vector<int>& from, const std::vector<int>& to) {
    for (int f : from) {
        auto& next = nfa.by_pos[static_cast<std::size_t>(f)].next;
        next = merged(next, to);
    }
}

GlushkovSets build_sets(const LabeledTree& tree, int pos, GlushkovNfa& nfa) {
    const auto& node = tree.at(pos);
    GlushkovSets sets;
    switch (node.kind) {
        case NodeKind::Epsilon:
            sets.nullable = true;
            break;
        case NodeKind::Atom:
        case NodeKind::Hole: {
            auto& state = nfa.by_pos[static_cast<std::size_t>(pos)];
            state.event = node.event;
            state.wildcard = node.kind == NodeKind::Hole;
            state.depth = node.depth;
            nfa.leaf_positions.push_back(pos);
            sets.first = {pos};
            sets.last = {pos};
            /* A hole stands for any event sequence: nullable with a self-loop. */
            if (node.kind == NodeKind::Hole) {
                sets.nullable = true;
                connect(nfa, sets.last, sets.first);
            }
            break;
        }
        case NodeKind::Concat: {
            const GlushkovSets l = build_sets(tree, node.left, nfa);
            const GlushkovSets r = build_sets(tree, node.right, nfa);
            connect(nfa, l.last, r.first);
            sets.nullable = l.nullable && r.nullable;
            sets.first = l.nullable ? merged(l.first, r.first) : l.first;
            sets.last = r.nullable ? merged(l.last, r.last) : r.last;
            break;
        }
        case NodeKind::Or: {
            const GlushkovSets l = build_sets(tree, node.left, nfa);
            const GlushkovSets r = build_sets(tree, node.right, nfa);
            sets.nullable = l.nullable || r.nullable;
            sets.first = merged(l.first, r.first);
            sets.last = merged(l.last, r.last);
            break;
        }
        case NodeKind::Star: {
            const GlushkovSets body = build_sets(tree, node.left, nfa);
            connect(nfa, body.last, body.first);
            sets.nullable = true;
            sets.first = body.first;
            sets.last = body.last;
            break;
        }
    }
    return sets;
}

}  // namespace

GlushkovNfa glushkov(const LabeledTree& tree) {
    GlushkovNfa nfa;
    nfa.by_pos.resize(tree.nodes.size());
    const GlushkovSets sets = build_sets(tree, 1, nfa);
    nfa.initial_accepting = sets.nullable;
    nfa.initial_next = sets.first;
    for (int pos : sets.last) nfa.by_pos[static_cast<std::size_t>(pos)].accepting = true;
    std::sort(nfa.leaf_positions.begin(), nfa.leaf_positions.end());
    return nfa;
}

namespace {

bool reads(const GlushkovNfa::State& state, const Event& event) {
    return state.wildcard || state.event == event;
}

}  // namespace

bool untimed_accepts(const GlushkovNfa& nfa, const std::vector<Event>& events) {
    if (events.empty()) return nfa.initial_accepting;
    std::set<int> current(nfa.initial_next.begin(), nfa.initial_next.end());
    for (std::size_t i = 0; i < events.size(); ++i) {
        std::set<int> next;
        for (int pos : current) {
            const auto& state = nfa.by_pos[static_cast<std::size_t>(pos)];
            if (!reads(state, events[i])) continue;
            if (i + 1 == events.size()) {
                if (state.accepting) return true;
                continue;
            }
            next.insert(state.next.begin(), state.next.end());
        }
        if (i + 1 == events.size()) return false;
        if (next.empty()) return false;
        current.swap(next);
    }
    return false;
}

std::vector<AcceptingPath> accepting_paths(const GlushkovNfa& nfa, const std::vector<Event>& events) {
    std::vector<AcceptingPath> paths;
    if (events.empty()) {
        if (nfa.initial_accepting) paths.push_back({});
        return paths;
    }
    AcceptingPath current;
    /* Successor lists are ascending, so this DFS emits paths in lexicographic
     * position order. */
    auto walk = [&](auto&& self, const std::vector<int>& candidates, std::size_t i) -> void {
        for (int pos : candidates) {
            const auto& state = nfa.by_pos[static_cast<std::size_t>(pos)];
            if (!reads(state, events[i])) continue;
            current.emplace_back(pos, state.depth);
            if (i + 1 == events.size()) {
                if (state.accepting) paths.push_back(current);
            } else {
                self(self, state.next, i + 1);
            }
            current.pop_back();
        }
    };
    walk(walk, nfa.initial_next, 0);
    return paths;
}

// ===========================================================================
// Derivations
// ===========================================================================

namespace {

class DerivationBuilder {
public:
    DerivationBuilder(const LabeledTree& tree, const std::vector<Event>& events)
        : tree_(tree), events_(events) {}

    std::vector<Derivation> run() { return node(1, 0, static_cast<int>(events_.size())); }

private:
    using Key = std::tuple<int, int, int>;

    /* All derivations of events [i, j) rooted at `pos`. */
    const std::vector<Derivation>& node(int pos, int i, int j) {
        const Key key{pos, i, j};
        auto found = memo_.find(key);
        if (found != memo_.end()) return found->second;
        std::vector<Derivation> out;
        const auto& n = tree_.at(pos);
        switch (n.kind) {
            case NodeKind::Hole:
                throw std::invalid_argument("derivations over a candidate with holes");
            case NodeKind::Epsilon:
                if (i == j) out.push_back({pos, i, j, {}});
                break;
            case NodeKind::Atom:
                if (j == i + 1 && events_[static_cast<std::size_t>(i)] == n.event) out.push_back({pos, i, j, {}});
                break;
            case NodeKind::Or:
                for (int branch : {n.left, n.right})
                    for (const Derivation& d : node(branch, i, j)) out.push_back({pos, i, j, {d}});
                break;
            case NodeKind::Concat:
                for (int m = i; m <= j; ++m)
                    for (const Derivation& l : node(n.left, i, m))
                        for (const Derivation& r : node(n.right, m, j)) out.push_back({pos, i, j, {l, r}});
                break;
            case NodeKind::Star: {
                if (i == j) {
                    out.push_back({pos, i, j, {}});
                    break;
                }
                /* Split [i, j) into nonempty iterations of the body; empty
                 * iterations would only duplicate shorter splits. */
                for (const auto& iterations : star_splits(n.left, i, j))
                    out.push_back({pos, i, j, iterations});
                break;
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    /* Ways to cover [i, j), j > i, by nonempty body derivations. */
    const std::vector<std::vector<Derivation>>& star_splits(int body, int i, int j) {
        const Key key{body, i, j};
        auto found = star_memo_.find(key);
        if (found != star_memo_.end()) return found->second;
        std::vector<std::vector<Derivation>> out;
        for (int m = i + 1; m <= j; ++m) {
            const auto& heads = node(body, i, m);
            if (heads.empty()) continue;
            if (m == j) {
                for (const Derivation& h : heads) out.push_back({h});
            } else {
                for (const auto& tail : star_splits(body, m, j))
                    for (const Derivation& h : heads) {
                        std::vector<Derivation> split{h};
                        split.insert(split.end(), tail.begin(), tail.end());
                        out.push_back(std::move(split));
                    }
            }
        }
        return star_memo_.emplace(key, std::move(out)).first->second;
    }

    const LabeledTree& tree_;
    const std::vector<Event>& events_;
    std::map<Key, std::vector<Derivation>> memo_;
    std::map<Key, std::vector<std::vector<Derivation>>> star_memo_;
};

void collect_leaves(const LabeledTree& tree, const Derivation& d, AcceptingPath& out) {
    const auto& node = tree.at(d.position);
    if (node.kind == NodeKind::Atom) {
        out.emplace_back(d.position, node.depth);
        return;
    }
    for (const Derivation& child : d.children) collect_leaves(tree, child, out);
}

}  // namespace

std::vector<Derivation> derivations(const LabeledTree& tree, const std::vector<Event>& events) {
    return DerivationBuilder(tree, events).run();
}

AcceptingPath derivation_path(const LabeledTree& tree, const Derivation& d) {
    AcceptingPath path;
    collect_leaves(tree, d, path);
    return path;
}

std::string format_derivation(const Derivation& d) {
    std::string out = std::to_string(d.position) + "[" + std::to_string(d.begin) + "," + std::to_string(d.end) + ")";
    if (!d.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < d.children.size(); ++i) {
            if (i) out += ' ';
            out += format_derivation(d.children[i]);
        }
        out += ')';
    }
    return out;
}

}  // namespace tresyn
