#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tresyn/enumerate.hpp"
#include "tresyn/simple.hpp"
#include "tresyn/smtlib.hpp"
#include "tresyn/timed_word.hpp"
#include "tresyn/tre.hpp"

namespace tresyn {

// ===========================================================================
// Minimal-length synthesis
// ===========================================================================

enum class Strategy : std::uint8_t { Trivial, Edge, Containment };
enum class SolverChoice : std::uint8_t { Builtin, External };

struct SynthConfig {
    Strategy strategy = Strategy::Edge;
    int start_length = 1;
    /* Hard ceiling on candidate length; exceeded → length_capped. */
    std::optional<int> max_length;
    SolverChoice solver = SolverChoice::Builtin;
    /* Required when solver == External. */
    std::optional<ExternalSolver> external;
    /*
     * Decide solvability up front: an impossible instance (some positive
     * indistinguishable from the negatives) returns no_tre_exists with the
     * witness word instead of searching forever, and a possible one bounds
     * the search by the fallback solution's length, guaranteeing
     * termination.  On by default; turn off to run the bare search loop.
     */
    bool check_solvable_first = true;
    /* Post-process the answer: drop each restriction that consistency
     * does not require, widest-first. */
    bool widen = false;
    /* Search-node budget per candidate for the built-in solver. */
    std::uint64_t solve_budget = 1'000'000;
    /* Budgets for the solvability decision. */
    ObscurationOptions solvable_options;
    /* Events to enumerate over; defaults to those observed in the examples. */
    std::optional<Alphabet> alphabet;
};

enum class Outcome : std::uint8_t { Found, NoTreExists, LengthCapped, BudgetExceeded };

struct LengthStats {
    int length = 0;
    std::uint64_t generated = 0;  /* candidates reached at this length        */
    std::uint64_t pruned = 0;     /* ... of which discarded before solving    */
    std::uint64_t sat_checks = 0; /* constraint problems actually solved      */
    std::uint64_t elapsed_ms = 0;
};

/* pruned + (candidates solved or skipped as survivors) = generated, per length. */
struct SynthReport {
    Outcome outcome = Outcome::LengthCapped;
    TrePtr tre;                        /* Found */
    std::optional<TimedWord> witness;  /* NoTreExists: the obscured positive  */
    std::vector<LengthStats> stats;
};

/*
 * Search for a shortest timed regular expression accepting every positive
 * and rejecting every negative word.  Lengths are tried in increasing
 * order; within one length, candidates are tried in canonical-print order
 * and the first satisfiable one wins, so results are deterministic.
 */
SynthReport synthesize(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                       const SynthConfig& config = {});

/* Membership accepts every positive and rejects every negative. */
bool verify_consistent(const Tre& t, const std::vector<TimedWord>& positives,
                       const std::vector<TimedWord>& negatives);

/*
 * Drop restrictions the examples do not require: try removing each one,
 * outermost first, keeping the removal when the expression stays
 * consistent.  Never changes the node count.
 */
TrePtr widen_result(const TrePtr& t, const std::vector<TimedWord>& positives,
                    const std::vector<TimedWord>& negatives);

/*
 * Stable JSON rendering: {"outcome": ..., "tre": ..., "witness": ...,
 * "stats": [{"length", "generated", "pruned", "sat_checks", "elapsed_ms"}]}.
 */
std::string report_to_json(const SynthReport& report);

}  // namespace tresyn
