#include "tresyn/ptre.hpp"

#include <stdexcept>
#include <vector>

namespace tresyn {

namespace {

PTrePtr make_pnode(PTre node) { return std::make_shared<const PTre>(std::move(node)); }

}  // namespace

PTrePtr make_hole() {
    static const PTrePtr hole = make_pnode({PTreKind::Hole, {}, nullptr, nullptr});
    return hole;
}

PTrePtr make_patom(Event event) { return make_pnode({PTreKind::Atom, std::move(event), nullptr, nullptr}); }

PTrePtr make_pconcat(PTrePtr left, PTrePtr right) {
    return make_pnode({PTreKind::Concat, {}, std::move(left), std::move(right)});
}

PTrePtr make_por(PTrePtr left, PTrePtr right) {
    return make_pnode({PTreKind::Or, {}, std::move(left), std::move(right)});
}

PTrePtr make_pstar(PTrePtr body) { return make_pnode({PTreKind::Star, {}, std::move(body), nullptr}); }

std::size_t ptre_length(const PTre& p) {
    std::size_t n = 1;
    if (p.left) n += ptre_length(*p.left);
    if (p.right) n += ptre_length(*p.right);
    return n;
}

std::size_t hole_count(const PTre& p) {
    if (p.kind == PTreKind::Hole) return 1;
    std::size_t n = 0;
    if (p.left) n += hole_count(*p.left);
    if (p.right) n += hole_count(*p.right);
    return n;
}

bool is_closed(const PTre& p) { return hole_count(p) == 0; }

bool ptre_equal(const PTre& a, const PTre& b) {
    if (a.kind != b.kind || a.event != b.event) return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
    if (a.left && !ptre_equal(*a.left, *b.left)) return false;
    if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
    if (a.right && !ptre_equal(*a.right, *b.right)) return false;
    return true;
}

// ===========================================================================
// Printing
// ===========================================================================

namespace {

std::string render(const PTre& p);

std::string render_child(const PTre& p) {
    if (p.kind == PTreKind::Hole || p.kind == PTreKind::Atom) return render(p);
    return "(" + render(p) + ")";
}

std::string render(const PTre& p) {
    switch (p.kind) {
        case PTreKind::Hole: return "?";
        case PTreKind::Atom: return p.event;
        case PTreKind::Concat: return render_child(*p.left) + " " + render_child(*p.right);
        case PTreKind::Or: return render_child(*p.left) + " | " + render_child(*p.right);
        case PTreKind::Star: return render_child(*p.left) + "*";
    }
    return {};
}

}  // namespace

std::string format_ptre(const PTre& p) { return render(p); }

// ===========================================================================
// Instantiation
// ===========================================================================

namespace {

/*
 * Walk a closed candidate in level order, handing each node occurrence its
 * position id, and rebuild the concrete tree bottom-up.  Level-order ids are
 * what the constraint encoding uses, so instantiation must match it exactly.
 * Occurrences are tracked by index, not pointer: candidates share subtree
 * pointers, and two occurrences of one subtree get different intervals.
 */
TrePtr build_instance(const PTre& root, const Assignment* a) {
    struct Item {
        const PTre* node;
        int left{-1};
        int right{-1};
    };
    std::vector<Item> order{{&root}};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const PTre* n = order[i].node;
        if (n->left) {
            order[i].left = static_cast<int>(order.size());
            order.push_back({n->left.get()});
        }
        if (n->right) {
            order[i].right = static_cast<int>(order.size());
            order.push_back({n->right.get()});
        }
    }
    std::vector<TrePtr> built(order.size());
    for (std::size_t k = order.size(); k-- > 0;) {
        const Item& item = order[k];
        const PTre& p = *item.node;
        std::optional<Interval> restriction;
        if (a) {
            const auto found = a->by_id.find(static_cast<std::uint32_t>(k + 1));
            if (found != a->by_id.end() && !found->second.is_universal()) restriction = found->second;
        }
        switch (p.kind) {
            case PTreKind::Hole: throw std::invalid_argument("cannot instantiate a candidate with holes");
            case PTreKind::Atom: built[k] = make_atom(p.event, restriction); break;
            case PTreKind::Concat: built[k] = make_concat(built[item.left], built[item.right], restriction); break;
            case PTreKind::Or: built[k] = make_or(built[item.left], built[item.right], restriction); break;
            case PTreKind::Star: built[k] = make_star(built[item.left], restriction); break;
        }
    }
    return built[0];
}

}  // namespace

TrePtr max_instance(const PTre& p) { return build_instance(p, nullptr); }

TrePtr instantiate(const PTre& p, const Assignment& a) { return build_instance(p, &a); }

}  // namespace tresyn
