#include "tresyn/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tresyn/encode.hpp"
#include "tresyn/membership.hpp"

#include "json.hpp"

namespace tresyn {

// ===========================================================================
// Consistency
// ===========================================================================

bool verify_consistent(const Tre& t, const std::vector<TimedWord>& positives,
                       const std::vector<TimedWord>& negatives) {
    for (const TimedWord& w : positives)
        if (!membership(t, w)) return false;
    for (const TimedWord& w : negatives)
        if (membership(t, w)) return false;
    return true;
}

// ===========================================================================
// Widening
// ===========================================================================

namespace {

/* Rebuild with the restriction removed from the node at `target` (level-order
 * position); every other node is shared or copied untouched. */
TrePtr strip_restriction_at(const TrePtr& root, int target) {
    struct Item {
        const Tre* node;
        int parent; /* index into items; -1 at the root */
        bool is_left;
    };
    std::vector<Item> items;
    items.push_back({root.get(), -1, true});
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Tre* n = items[i].node;
        if (n->left) items.push_back({n->left.get(), static_cast<int>(i), true});
        if (n->right) items.push_back({n->right.get(), static_cast<int>(i), false});
    }
    std::vector<TrePtr> built(items.size());
    for (std::size_t i = items.size(); i-- > 0;) {
        const Tre* n = items[i].node;
        TrePtr left, right;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (items[j].parent != static_cast<int>(i)) continue;
            (items[j].is_left ? left : right) = built[j];
        }
        TrePtr core;
        switch (n->kind) {
            case TreKind::Epsilon: core = make_epsilon(); break;
            case TreKind::Atom: core = make_atom(n->event); break;
            case TreKind::Concat: core = make_concat(left, right); break;
            case TreKind::Or: core = make_or(left, right); break;
            case TreKind::Star: core = make_star(left); break;
        }
        const bool keep = n->restriction && static_cast<int>(i) + 1 != target;
        built[i] = keep ? with_restriction(core, *n->restriction) : core;
    }
    return built[0];
}

}  // namespace

TrePtr widen_result(const TrePtr& t, const std::vector<TimedWord>& positives,
                    const std::vector<TimedWord>& negatives) {
    TrePtr current = t;
    const int n = static_cast<int>(tre_length(*t));
    for (int pos = 1; pos <= n; ++pos) {
        TrePtr candidate = strip_restriction_at(current, pos);
        if (candidate != current && verify_consistent(*candidate, positives, negatives)) current = candidate;
    }
    return current;
}

// ===========================================================================
// Report serialization
// ===========================================================================

std::string report_to_json(const SynthReport& report) {
    nlohmann::json j;
    switch (report.outcome) {
        case Outcome::Found: j["outcome"] = "found"; break;
        case Outcome::NoTreExists: j["outcome"] = "no_tre_exists"; break;
        case Outcome::LengthCapped: j["outcome"] = "length_capped"; break;
        case Outcome::BudgetExceeded: j["outcome"] = "budget_exceeded"; break;
    }
    j["tre"] = report.tre ? nlohmann::json(format_tre(*report.tre)) : nlohmann::json(nullptr);
    j["witness"] = report.witness ? nlohmann::json(format_timed_word(*report.witness)) : nlohmann::json(nullptr);
    j["stats"] = nlohmann::json::array();
    for (const LengthStats& s : report.stats) {
        j["stats"].push_back({{"length", s.length},
                              {"generated", s.generated},
                              {"pruned", s.pruned},
                              {"sat_checks", s.sat_checks},
                              {"elapsed_ms", s.elapsed_ms}});
    }
    return j.dump(2);
}

// ===========================================================================
// Search loop
// ===========================================================================

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

struct LengthCandidates {
    std::vector<PTrePtr> survivors;
    std::uint64_t generated = 0;
    std::uint64_t pruned = 0;
};

LengthCandidates candidates_at(int k, Strategy strategy, const Alphabet& sigma,
                               const std::vector<TimedWord>& positives, std::optional<int> cap) {
    LengthCandidates out;
    if (strategy == Strategy::Trivial) {
        out.survivors = enumerate_trivial(k, sigma, positives);
        for (const PTrePtr& s : skeletons(k)) out.generated += ipow(sigma.size(), hole_count(*s));
        out.pruned = out.generated - out.survivors.size();
        return out;
    }
    EnumerateOptions opts;
    opts.containment_pruning = strategy == Strategy::Containment;
    opts.max_length = cap ? std::min(*cap, k) : k;
    RecursiveEnumerator walker(sigma, positives, opts);
    EnumerateStats before;
    if (k > 1) {
        walker.at_length(k - 1);
        before = walker.stats();
    }
    out.survivors = walker.at_length(k);
    const EnumerateStats& after = walker.stats();
    const std::uint64_t closed = after.closed - before.closed;
    const std::uint64_t edge = after.edge_pruned - before.edge_pruned;
    const std::uint64_t contain = after.containment_pruned - before.containment_pruned;
    const std::uint64_t accepted = after.accepted - before.accepted;
    out.generated = closed + edge + contain;
    out.pruned = (closed - accepted) + edge + contain;
    return out;
}

TrePtr fold_or(const std::vector<TrePtr>& parts) {
    TrePtr acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = make_or(acc, parts[i]);
    return acc;
}

}  // namespace

SynthReport synthesize(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                       const SynthConfig& config) {
    if (config.start_length < 1) throw std::invalid_argument("synthesize: start_length must be at least 1");
    if (config.solver == SolverChoice::External && !config.external)
        throw std::invalid_argument("synthesize: external solver selected but no command configured");

    SynthReport report;

    const auto finish_found = [&](TrePtr t) {
        if (config.widen) t = widen_result(t, positives, negatives);
        if (!verify_consistent(*t, positives, negatives))
            throw std::logic_error("synthesize: produced an expression inconsistent with the examples");
        report.outcome = Outcome::Found;
        report.tre = std::move(t);
        return report;
    };

    /* A word in both sets can never be classified. */
    for (const TimedWord& w : positives) {
        if (std::find(negatives.begin(), negatives.end(), w) != negatives.end()) {
            report.outcome = Outcome::NoTreExists;
            report.witness = w;
            return report;
        }
    }

    /* Degenerate corners that the candidate grammar (atoms and up) cannot
     * reach: all-empty positives are matched exactly by the empty expression,
     * and with no examples at all it is the canonical minimal answer. */
    const bool all_pos_empty = std::all_of(positives.begin(), positives.end(),
                                           [](const TimedWord& w) { return w.empty(); });
    if (!positives.empty() && all_pos_empty) return finish_found(make_epsilon());

    Alphabet sigma = config.alphabet ? *config.alphabet : alphabet_of(positives, negatives);
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    for (const TimedWord& w : positives)
        for (const auto& [e, d] : w.letters)
            if (!std::binary_search(sigma.begin(), sigma.end(), e))
                throw std::invalid_argument("synthesize: alphabet override is missing the positive event '" + e + "'");

    if (positives.empty()) {
        if (negatives.empty()) return finish_found(make_epsilon());
        if (sigma.empty()) {
            /* Negatives are all the empty word: reject it with an
             * unsatisfiable delay-sum restriction. */
            return finish_found(with_restriction(make_epsilon(), Interval::greater_than(0)));
        }
    }

    /* Solvability gate and termination bound. */
    std::optional<int> naive_cap;
    if (config.check_solvable_first) {
        const SolvableResult solvable = check_solvable(positives, negatives, config.solvable_options);
        if (solvable.status == SolvableResult::Status::Unsolvable) {
            report.outcome = Outcome::NoTreExists;
            report.witness = solvable.witness;
            return report;
        }
        if (solvable.status == SolvableResult::Status::Solvable && !solvable.positive_witnesses.empty())
            naive_cap = static_cast<int>(tre_length(*fold_or(solvable.positive_witnesses)));
    }

    std::optional<int> cap = config.max_length;
    if (naive_cap && (!cap || *naive_cap < *cap)) cap = naive_cap;

    bool inconclusive = false;
    for (int k = config.start_length;; ++k) {
        if (cap && k > *cap) break;
        const auto t0 = std::chrono::steady_clock::now();
        LengthStats ls;
        ls.length = k;
        LengthCandidates cands = candidates_at(k, config.strategy, sigma, positives, cap);
        ls.generated = cands.generated;
        ls.pruned = cands.pruned;
        for (const PTrePtr& cand : cands.survivors) {
            const Problem problem = build_problem(*cand, positives, negatives);
            ++ls.sat_checks;
            std::optional<Assignment> model;
            if (config.solver == SolverChoice::Builtin) {
                SolveResult r = solve_builtin(problem, config.solve_budget);
                if (r.status == SolveStatus::Sat) model = std::move(r.assignment);
                else if (r.status == SolveStatus::Budget) inconclusive = true;
            } else {
                ExternalResult r = solve_external(*config.external, problem);
                if (r.verdict == SmtVerdict::Sat) model = std::move(r.assignment);
                else if (r.verdict == SmtVerdict::Unknown) inconclusive = true;
                else if (r.verdict == SmtVerdict::Error)
                    throw std::runtime_error("external solver failed: " + r.detail);
            }
            if (model) {
                ls.elapsed_ms = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                        .count());
                report.stats.push_back(ls);
                return finish_found(instantiate(*cand, *model));
            }
        }
        ls.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
        report.stats.push_back(ls);
    }

    if (inconclusive) {
        report.outcome = Outcome::BudgetExceeded;
        return report;
    }
    if (naive_cap && config.start_length <= *naive_cap && (!config.max_length || *naive_cap <= *config.max_length))
        /* The fallback disjunction itself is a satisfiable candidate at its
         * own length, so a complete sweep through that length cannot come up
         * empty. */
        throw std::logic_error("synthesize: exhausted the termination bound without finding a solution");
    report.outcome = Outcome::LengthCapped;
    return report;
}

}  // namespace tresyn
