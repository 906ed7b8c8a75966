#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "tresyn/ptre.hpp"
#include "tresyn/timed_word.hpp"

namespace tresyn {

// ===========================================================================
// Candidate enumeration
// ===========================================================================
//
// Candidates grow from a single hole by four substitution rules applied to
// the leftmost hole only: replace it with an event atom, with a starred hole,
// with a concatenation of two holes, or with an alternation of two holes.
// Leftmost-only expansion gives every shape exactly one generation path, so
// the explored set never holds duplicates, and a shape that is closed after
// exactly k rule applications has exactly k nodes.
//
// Three strategies produce the acceptable candidates of a given length:
//   - trivial:      build every shape of that length outright, then keep the
//                   ones whose loosest instance covers all positive words;
//   - edge pruning: walk the generation tree, discarding any one-hole
//                   candidate that already fails the positives when its hole
//                   is read as "any event sequence";
//   - containment:  edge pruning plus a store of discarded shapes used to
//                   drop candidates that begin with a known-doomed shape.

/* Sorted, duplicate-free event names. */
using Alphabet = std::vector<Event>;

/* Union of the events appearing in both samples, sorted. */
Alphabet alphabet_of(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives);

/*
 * Every candidate shape of exactly `k` nodes whose leaves are all holes,
 * i.e. the shapes reachable by the three structural rules alone.  There is
 * one shape of length 1 (the hole itself) and of length 2 (the starred
 * hole); lengths 3, 4, 5 have 3, 7, and 21.
 */
std::vector<PTrePtr> skeletons(int k);

/*
 * All closed candidates obtained by stamping one alphabet event onto each
 * hole of the skeleton: |alphabet| ^ (hole count) results.
 */
std::vector<PTrePtr> fill_atoms(const PTrePtr& skeleton, const Alphabet& sigma);

/*
 * True when the loosest instance of the closed candidate accepts every
 * positive word.  Intervals set to [0, inf) never reject, so this is a
 * purely untimed check of the event sequences.  Throws when `p` has holes.
 */
bool check_acceptable(const PTre& p, const std::vector<TimedWord>& positives);

/*
 * The acceptable closed candidates of exactly length `k`, built by filling
 * every skeleton of that length.  Sorted by canonical print.
 */
std::vector<PTrePtr> enumerate_trivial(int k, const Alphabet& sigma, const std::vector<TimedWord>& positives);

/*
 * The single-step expansions of the leftmost hole: one per alphabet event,
 * then the starred hole, the two-hole concatenation, and the two-hole
 * alternation — 3 + |alphabet| children.  Throws when `p` is closed.
 */
std::vector<PTrePtr> children(const PTrePtr& p, const Alphabet& sigma);

/*
 * Decides whether a one-hole candidate can be discarded outright: the hole
 * is over-approximated by a sub-language matching any event sequence
 * (including the empty one), and if even that fails to accept some positive
 * word's event sequence, no way of filling the hole can succeed.  Throws
 * unless `p` has exactly one hole.
 */
bool edge_prunable(const PTre& p, const std::vector<TimedWord>& positives);

/*
 * Structural embedding: does `doomed`'s syntax tree occur as a subtree of
 * `longer`, matching node kinds and atom events, with holes in `doomed`
 * matching arbitrary subtrees?
 */
bool syntactic_contains(const PTre& longer, const PTre& doomed);

struct EnumerateOptions {
    bool edge_pruning = true;
    bool containment_pruning = false;
    /* FIFO bound on the doomed-shape store, to cap the per-candidate scan. */
    std::size_t doomed_cap = 4096;
    /* Branches that can only produce longer candidates are dropped early. */
    std::optional<int> max_length;
};

struct EnumerateStats {
    std::uint64_t generated = 0;           /* expansion products of any shape */
    std::uint64_t edge_pruned = 0;         /* one-hole candidates discarded   */
    std::uint64_t containment_pruned = 0;  /* dropped via the doomed store    */
    std::uint64_t closed = 0;              /* closed candidates reached       */
    std::uint64_t accepted = 0;            /* ... of which passed the check   */
};

/*
 * Incremental generation-tree walker.  Step i expands every surviving open
 * candidate of step i-1; the closed candidates appearing at step k are
 * exactly the length-k shapes, so `at_length` may be called with increasing
 * lengths to stream candidates without re-exploration.
 *
 * The doomed-shape store is consulted with a root-anchored match (the
 * candidate begins with the doomed shape, holes matching anything): if a
 * candidate extends a shape whose loosest reading already fails a positive,
 * its own loosest reading fails the same word, so discarding it is safe.
 * An embedding-anywhere match (see syntactic_contains) is not: a doomed
 * shape sitting under an alternation, say, can be rescued by the other
 * branch, and pruning on it would lose valid candidates.
 */
class RecursiveEnumerator {
public:
    RecursiveEnumerator(Alphabet sigma, std::vector<TimedWord> positives, EnumerateOptions opts = {});

    /*
     * Acceptable closed candidates of exactly length `k`, sorted by
     * canonical print.  `k` must not decrease across calls.
     */
    std::vector<PTrePtr> at_length(int k);

    const EnumerateStats& stats() const { return stats_; }

private:
    void advance();
    bool starts_with_doomed(const PTre& p) const;
    void remember_doomed(PTrePtr p);

    Alphabet sigma_;
    std::vector<std::vector<Event>> pos_untimed_;
    EnumerateOptions opts_;
    EnumerateStats stats_;
    int step_ = 0;
    std::vector<PTrePtr> frontier_;  /* open candidates after step_ steps */
    std::vector<PTrePtr> harvest_;   /* acceptable closed candidates of length step_ */
    std::deque<PTrePtr> doomed_;
};

/*
 * The acceptable closed candidates of exactly length `k` via the pruning
 * walk; equals enumerate_trivial on the same inputs.  Sorted by canonical
 * print.  Cumulative walk statistics are added to `*stats` when given.
 */
std::vector<PTrePtr> enumerate_recursive(int k, const Alphabet& sigma, const std::vector<TimedWord>& positives,
                                         bool use_containment, EnumerateStats* stats = nullptr);

}  // namespace tresyn
