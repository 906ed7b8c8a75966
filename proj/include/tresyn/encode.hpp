#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tresyn/derive.hpp"
#include "tresyn/ptre.hpp"
#include "tresyn/timed_word.hpp"

namespace tresyn {

/* "value lies in the unknown interval with this id" (ids = node positions). */
struct Atom {
    std::uint32_t interval{0};
    Rat value;

    bool operator==(const Atom& o) const { return interval == o.interval && value == o.value; }
    bool operator<(const Atom& o) const {
        if (interval != o.interval) return interval < o.interval;
        return value < o.value;
    }
};

/*
 * Conjunction of atoms describing one derivation: the word matches along this
 * derivation exactly when all atoms hold.  Atoms are sorted and deduplicated,
 * and formulas compare as atom sets.
 */
struct PathFormula {
    std::vector<Atom> atoms;

    bool operator==(const PathFormula& o) const { return atoms == o.atoms; }
    bool operator<(const PathFormula& o) const { return atoms < o.atoms; }
};

/*
 * Constraint system for one closed candidate against the examples: each
 * positive word contributes a disjunction (its formulas, one of which must
 * hold), each negative word a set of formulas that must all be falsified.
 */
struct Problem {
    std::vector<std::uint32_t> interval_ids;
    std::vector<std::vector<PathFormula>> positive_groups;
    std::vector<std::vector<PathFormula>> negative_groups;
};

/*
 * One atom per node occurrence of the derivation: the occurrence's interval
 * id paired with the delay sum of its segment.  Star bodies occur once per
 * iteration; a zero-iteration star still contributes its own atom on 0.
 */
PathFormula encode_derivation(const LabeledTree& tree, const Derivation& d, const TimedWord& w);

/*
 * Formulas of all derivations of the word against the closed candidate,
 * deduplicated and sorted.  Throws when the event sequence has no derivation
 * (such candidates should have been filtered out beforehand).
 */
std::vector<PathFormula> encode_positive(const PTre& p, const TimedWord& w);

/*
 * Like encode_positive, but a word whose event sequence the candidate cannot
 * match yields the empty list: it is rejected for free.
 */
std::vector<PathFormula> encode_negative(const PTre& p, const TimedWord& w);

Problem build_problem(const PTre& p, const std::vector<TimedWord>& positives,
                      const std::vector<TimedWord>& negatives);

/*
 * Is there an integer-endpoint interval containing every value of `contain`
 * and none of `exclude`?  Returns the widest such interval (smallest feasible
 * lower bound, largest feasible upper bound, unbounded when nothing above the
 * hull must be excluded), or nullopt.  This is the per-interval theory
 * decision at the heart of the solver: atoms never couple two intervals, so
 * feasibility decomposes into one such call per interval id.
 */
std::optional<Interval> interval_feasible(const std::set<Rat>& contain, const std::set<Rat>& exclude);

enum class SolveStatus : std::uint8_t { Sat, Unsat, Budget };

struct SolveResult {
    SolveStatus status{SolveStatus::Unsat};
    Assignment assignment;  /* Sat only; every id mapped, [0, inf) when free */
    std::uint64_t nodes{0}; /* branch nodes visited */
};

/*
 * Built-in lazy search: pick one formula per positive group (those atoms
 * become required-true), then falsify at least one atom of every negative
 * formula, pruning with interval_feasible after each tentative exclusion.
 * Backtracks over both levels; `budget` caps the visited branch nodes and
 * overrunning it reports Budget rather than a verdict.
 */
SolveResult solve_builtin(const Problem& problem, std::uint64_t budget = 1'000'000);

/*
 * Render the problem as an SMT-LIB 2 (QF_LIA) script: per interval id,
 * integer endpoints l_<id>, u_<id> and booleans lc_<id>, uc_<id>, uinf_<id>
 * with l >= 0, l <= u unless unbounded, and point intervals forced closed;
 * rational atom values are scaled integer-free (value num/den in the interval
 * becomes den*l < num or closed equality, and symmetrically above).  Ends
 * with (check-sat) and (get-model).
 */
std::string emit_smtlib(const Problem& problem);

}  // namespace tresyn
