#include "tresyn/encode.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tresyn {

// ===========================================================================
// Encoding
// ===========================================================================

namespace {

void collect_atoms(const LabeledTree& tree, const Derivation& d, const TimedWord& w, std::vector<Atom>& out) {
    out.push_back({static_cast<std::uint32_t>(d.position),
                   w.delay_sum(static_cast<std::size_t>(d.begin), static_cast<std::size_t>(d.end))});
    for (const Derivation& child : d.children) collect_atoms(tree, child, w, out);
}

std::vector<PathFormula> encode_word(const LabeledTree& tree, const TimedWord& w) {
    std::vector<PathFormula> formulas;
    for (const Derivation& d : derivations(tree, untime(w))) formulas.push_back(encode_derivation(tree, d, w));
    std::sort(formulas.begin(), formulas.end());
    formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
    return formulas;
}

}  // namespace

PathFormula encode_derivation(const LabeledTree& tree, const Derivation& d, const TimedWord& w) {
    PathFormula formula;
    collect_atoms(tree, d, w, formula.atoms);
    std::sort(formula.atoms.begin(), formula.atoms.end());
    formula.atoms.erase(std::unique(formula.atoms.begin(), formula.atoms.end()), formula.atoms.end());
    return formula;
}

std::vector<PathFormula> encode_positive(const PTre& p, const TimedWord& w) {
    const LabeledTree tree = label_positions(p);
    std::vector<PathFormula> formulas = encode_word(tree, w);
    if (formulas.empty())
        throw std::invalid_argument("candidate cannot derive the positive word '" + format_timed_word(w) + "'");
    return formulas;
}

std::vector<PathFormula> encode_negative(const PTre& p, const TimedWord& w) {
    const LabeledTree tree = label_positions(p);
    if (!untimed_accepts(glushkov(tree), untime(w))) return {};
    return encode_word(tree, w);
}

Problem build_problem(const PTre& p, const std::vector<TimedWord>& positives,
                      const std::vector<TimedWord>& negatives) {
    if (!is_closed(p)) throw std::invalid_argument("cannot build a problem for a candidate with holes");
    Problem problem;
    const std::size_t length = ptre_length(p);
    for (std::size_t id = 1; id <= length; ++id) problem.interval_ids.push_back(static_cast<std::uint32_t>(id));
    for (const TimedWord& w : positives) problem.positive_groups.push_back(encode_positive(p, w));
    for (const TimedWord& w : negatives) {
        std::vector<PathFormula> formulas = encode_negative(p, w);
        if (!formulas.empty()) problem.negative_groups.push_back(std::move(formulas));
    }
    return problem;
}

// ===========================================================================
// Per-interval feasibility
// ===========================================================================

std::optional<Interval> interval_feasible(const std::set<Rat>& contain, const std::set<Rat>& exclude) {
    if (contain.empty()) {
        if (exclude.empty()) return Interval();
        const Rat low = *exclude.begin();
        const Rat high = *exclude.rbegin();
        if (low == Rat(0)) return Interval::at_least(high.floor() + 1);
        if (low.is_integer()) return Interval::closed_open(0, low.floor());
        return Interval::closed(0, low.floor());
    }
    const Rat min_in = *contain.begin();
    const Rat max_in = *contain.rbegin();
    std::optional<Rat> below;  /* largest excluded value under the hull */
    std::optional<Rat> above;  /* smallest excluded value over the hull */
    for (const Rat& e : exclude) {
        if (e < min_in) {
            below = e;
        } else if (e > max_in) {
            above = e;
            break;
        } else {
            return std::nullopt; /* inside the hull: must be both in and out */
        }
    }
    std::int64_t lo = 0;
    bool lo_closed = true;
    if (below) {
        lo = below->ceil();
        if (Rat(lo) > min_in) return std::nullopt;
        lo_closed = Rat(lo) != *below;
    }
    std::optional<std::int64_t> hi;
    bool hi_closed = false;
    if (above) {
        hi = above->floor();
        if (Rat(*hi) < max_in) return std::nullopt;
        hi_closed = Rat(*hi) != *above;
    }
    return Interval::make(lo, lo_closed, hi, hi_closed);
}

// ===========================================================================
// Built-in solver
// ===========================================================================

namespace {

class BuiltinSolver {
public:
    BuiltinSolver(const Problem& problem, std::uint64_t budget) : problem_(problem), budget_(budget) {}

    SolveResult run() {
        SolveResult result;
        const bool sat = choose_positive(0);
        result.nodes = nodes_;
        if (exceeded_) {
            result.status = SolveStatus::Budget;
            return result;
        }
        if (!sat) {
            result.status = SolveStatus::Unsat;
            return result;
        }
        result.status = SolveStatus::Sat;
        for (std::uint32_t id : problem_.interval_ids) {
            const auto witness = interval_feasible(contain_[id], exclude_[id]);
            result.assignment.by_id.emplace(id, witness.value());
        }
        return result;
    }

private:
    bool charge() {
        if (++nodes_ > budget_) exceeded_ = true;
        return !exceeded_;
    }

    /* Pick one formula per positive group; its atoms become required-true. */
    bool choose_positive(std::size_t g) {
        if (g == problem_.positive_groups.size()) return solve_negatives();
        for (const PathFormula& formula : problem_.positive_groups[g]) {
            if (!charge()) return false;
            std::vector<Atom> added;
            for (const Atom& atom : formula.atoms)
                if (contain_[atom.interval].insert(atom.value).second) added.push_back(atom);
            if (choose_positive(g + 1)) return true;
            for (const Atom& atom : added) contain_[atom.interval].erase(atom.value);
            if (exceeded_) return false;
        }
        return false;
    }

    bool solve_negatives() {
        /* Every formula of every negative group is a clause: at least one of
         * its atoms must fall outside its interval.  Small clauses first. */
        std::vector<const PathFormula*> clauses;
        for (const auto& group : problem_.negative_groups)
            for (const PathFormula& formula : group) clauses.push_back(&formula);
        std::stable_sort(clauses.begin(), clauses.end(),
                         [](const PathFormula* a, const PathFormula* b) { return a->atoms.size() < b->atoms.size(); });
        return falsify(clauses, 0);
    }

    bool falsify(const std::vector<const PathFormula*>& clauses, std::size_t k) {
        if (k == clauses.size()) return true;
        const PathFormula& clause = *clauses[k];
        for (const Atom& atom : clause.atoms)
            if (exclude_[atom.interval].count(atom.value)) return falsify(clauses, k + 1);
        /* Try atoms whose interval is least constrained by required values. */
        std::vector<const Atom*> candidates;
        for (const Atom& atom : clause.atoms)
            if (!contain_[atom.interval].count(atom.value)) candidates.push_back(&atom);
        std::stable_sort(candidates.begin(), candidates.end(), [&](const Atom* a, const Atom* b) {
            return contain_[a->interval].size() < contain_[b->interval].size();
        });
        for (const Atom* atom : candidates) {
            if (!charge()) return false;
            exclude_[atom->interval].insert(atom->value);
            if (interval_feasible(contain_[atom->interval], exclude_[atom->interval])) {
                if (falsify(clauses, k + 1)) return true;
            }
            exclude_[atom->interval].erase(atom->value);
            if (exceeded_) return false;
        }
        return false;
    }

    const Problem& problem_;
    std::uint64_t budget_;
    std::uint64_t nodes_{0};
    bool exceeded_{false};
    std::map<std::uint32_t, std::set<Rat>> contain_;
    std::map<std::uint32_t, std::set<Rat>> exclude_;
};

}  // namespace

SolveResult solve_builtin(const Problem& problem, std::uint64_t budget) {
    return BuiltinSolver(problem, budget).run();
}

// ===========================================================================
// SMT-LIB rendering
// ===========================================================================

namespace {

std::string conjunction(const std::vector<std::string>& terms) {
    if (terms.empty()) return "true";
    if (terms.size() == 1) return terms.front();
    std::string out = "(and";
    for (const std::string& t : terms) out += " " + t;
    return out + ")";
}

std::string disjunction(const std::vector<std::string>& terms) {
    if (terms.empty()) return "false";
    if (terms.size() == 1) return terms.front();
    std::string out = "(or";
    for (const std::string& t : terms) out += " " + t;
    return out + ")";
}

std::string atom_term(const Atom& atom) {
    const std::string id = std::to_string(atom.interval);
    const std::string num = std::to_string(atom.value.num());
    const auto scaled = [&](const std::string& var) {
        if (atom.value.den() == 1) return var;
        return "(* " + std::to_string(atom.value.den()) + " " + var + ")";
    };
    const std::string lo = scaled("l_" + id);
    const std::string hi = scaled("u_" + id);
    const std::string lower =
        "(or (< " + lo + " " + num + ") (and lc_" + id + " (= " + lo + " " + num + ")))";
    const std::string upper = "(or uinf_" + id + " (< " + num + " " + hi + ") (and uc_" + id + " (= " + num +
                              " " + hi + ")))";
    return "(and " + lower + " " + upper + ")";
}

std::string formula_term(const PathFormula& formula) {
    std::vector<std::string> terms;
    terms.reserve(formula.atoms.size());
    for (const Atom& atom : formula.atoms) terms.push_back(atom_term(atom));
    return conjunction(terms);
}

}  // namespace

std::string emit_smtlib(const Problem& problem) {
    std::string out;
    out += "(set-logic QF_LIA)\n";
    for (std::uint32_t id_value : problem.interval_ids) {
        const std::string id = std::to_string(id_value);
        out += "(declare-const l_" + id + " Int)\n";
        out += "(declare-const u_" + id + " Int)\n";
        out += "(declare-const lc_" + id + " Bool)\n";
        out += "(declare-const uc_" + id + " Bool)\n";
        out += "(declare-const uinf_" + id + " Bool)\n";
        out += "(assert (>= l_" + id + " 0))\n";
        out += "(assert (=> (not uinf_" + id + ") (<= l_" + id + " u_" + id + ")))\n";
        out += "(assert (=> (and (not uinf_" + id + ") (= l_" + id + " u_" + id + ")) (and lc_" + id + " uc_" +
               id + ")))\n";
    }
    for (const auto& group : problem.positive_groups) {
        std::vector<std::string> options;
        options.reserve(group.size());
        for (const PathFormula& formula : group) options.push_back(formula_term(formula));
        out += "(assert " + disjunction(options) + ")\n";
    }
    for (const auto& group : problem.negative_groups)
        for (const PathFormula& formula : group) out += "(assert (not " + formula_term(formula) + "))\n";
    out += "(check-sat)\n(get-model)\n";
    return out;
}

}  // namespace tresyn
