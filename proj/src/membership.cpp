#include "tresyn/membership.hpp"

#include <map>
#include <tuple>

namespace tresyn {

namespace {

class MembershipCheck {
public:
    MembershipCheck(const LabeledTree& tree, const TimedWord& w) : tree_(tree), word_(w) {}

    bool run() { return node(1, 0, static_cast<int>(word_.size())); }

private:
    using Key = std::tuple<int, int, int>;

    bool in_restriction(int pos, int i, int j) const {
        const auto& restriction = tree_.at(pos).restriction;
        if (!restriction) return true;
        return restriction->contains(word_.delay_sum(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }

    /* Some derivation of [i, j) at `pos` satisfies all restrictions inside. */
    bool node(int pos, int i, int j) {
        const Key key{pos, i, j};
        const auto found = memo_.find(key);
        if (found != memo_.end()) return found->second;
        bool ok = false;
        if (in_restriction(pos, i, j)) {
            const auto& n = tree_.at(pos);
            switch (n.kind) {
                case NodeKind::Hole:
                    throw std::invalid_argument("membership over a candidate with holes");
                case NodeKind::Epsilon:
                    ok = i == j;
                    break;
                case NodeKind::Atom:
                    ok = j == i + 1 && word_.letters[static_cast<std::size_t>(i)].first == n.event;
                    break;
                case NodeKind::Or:
                    ok = node(n.left, i, j) || node(n.right, i, j);
                    break;
                case NodeKind::Concat:
                    for (int m = i; !ok && m <= j; ++m) ok = node(n.left, i, m) && node(n.right, m, j);
                    break;
                case NodeKind::Star:
                    /* The star's own restriction is checked above; iterations
                     * are nonempty body matches covering the segment. */
                    ok = i == j || tail(n.left, i, j);
                    break;
            }
        }
        memo_.emplace(key, ok);
        return ok;
    }

    /* [i, j), j > i, splits into nonempty satisfied body derivations. */
    bool tail(int body, int i, int j) {
        const Key key{body, i, j};
        const auto found = tail_memo_.find(key);
        if (found != tail_memo_.end()) return found->second;
        bool ok = false;
        for (int m = i + 1; !ok && m <= j; ++m) ok = node(body, i, m) && (m == j || tail(body, m, j));
        tail_memo_.emplace(key, ok);
        return ok;
    }

    const LabeledTree& tree_;
    const TimedWord& word_;
    std::map<Key, bool> memo_;
    std::map<Key, bool> tail_memo_;
};

}  // namespace

bool membership(const Tre& t, const TimedWord& w) {
    const LabeledTree tree = label_positions(t);
    return MembershipCheck(tree, w).run();
}

bool derivation_satisfied(const LabeledTree& tree, const Derivation& d, const TimedWord& w) {
    const auto& restriction = tree.at(d.position).restriction;
    if (restriction &&
        !restriction->contains(w.delay_sum(static_cast<std::size_t>(d.begin), static_cast<std::size_t>(d.end))))
        return false;
    for (const Derivation& child : d.children)
        if (!derivation_satisfied(tree, child, w)) return false;
    return true;
}

std::vector<Derivation> satisfied_derivations(const Tre& t, const TimedWord& w) {
    const LabeledTree tree = label_positions(t);
    std::vector<Derivation> witnesses;
    for (const Derivation& d : derivations(tree, untime(w)))
        if (derivation_satisfied(tree, d, w)) witnesses.push_back(d);
    return witnesses;
}

}  // namespace tresyn
