#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tresyn/timed_word.hpp"
#include "tresyn/tre.hpp"

namespace tresyn {

/* Contiguous letter range of a word, 1-based inclusive on both ends. */
struct Span {
    int begin{1};
    int end{1};

    bool operator==(const Span& o) const { return begin == o.begin && end == o.end; }
    bool operator<(const Span& o) const { return begin != o.begin ? begin < o.begin : end < o.end; }
    /* Nested or disjoint — the compatibility required inside one family. */
    static bool laminar(const Span& a, const Span& b);
    bool contains(const Span& o) const { return begin <= o.begin && o.end <= end; }
};

/*
 * The tightest integer-endpoint interval around a delay sum: [d,d] when the
 * sum is the integer d, (d,d+1) when it lies strictly between d and d+1.
 * Two words are timing-indistinguishable by simple expressions exactly when
 * all their span sums share these.
 */
Interval tight_interval(const Rat& sum);

/* Tight intervals of every span of the word; errors on the empty word. */
std::map<Span, Interval> span_constraints(const TimedWord& w);

/* Same event sequence and same tight interval on every span. */
bool sel_equal(const TimedWord& a, const TimedWord& b);

/*
 * A set of spans that is pairwise nested-or-disjoint.  These are exactly the
 * span sets realizable as one simple expression (concatenation + restriction
 * only): the restricted nodes of such an expression cover contiguous ranges
 * that never partially overlap, and conversely any laminar set extends to a
 * full syntax tree.  Kept sorted by (begin, end).
 */
using LaminarFamily = std::vector<Span>;

bool is_laminar(const LaminarFamily& family);

/*
 * The simple expression for a word and a laminar family: each family span
 * becomes a restricted node carrying the word's tight interval for that span;
 * gaps become plain letters and sibling blocks fold into left-leaning
 * concatenations.  Precondition: family is laminar over [1, size].
 */
TrePtr family_to_tre(const TimedWord& w, const LaminarFamily& family);

/*
 * Stream every laminar family over the word's spans together with its
 * realizing expression; stop early when the callback returns false.  The
 * family count is at most 2^(n(n+1)/2) for an n-letter word.
 */
void enumerate_simple_tres(const TimedWord& w,
                           const std::function<bool(const LaminarFamily&, const TrePtr&)>& yield);

/* Convenience collector for the enumeration above. */
std::vector<std::pair<LaminarFamily, TrePtr>> all_simple_tres(const TimedWord& w);

struct ObscurationOptions {
    /* Words longer than this run under the search budget and may come back
     * unknown; shorter words are decided exactly. */
    std::size_t exact_cap = 12;
    std::uint64_t budget = 1'000'000;
};

struct ObscurationResult {
    enum class Status { Obscured, NotObscured, Unknown };
    Status status{Status::Obscured};
    /* NotObscured: a family whose expression accepts the word and rejects
     * every `other`, and that expression. */
    LaminarFamily family;
    TrePtr witness;
};

/*
 * Is every simple expression accepting `word` also accepting some word in
 * `others`?  If not, the word can be separated, and the witness expression
 * proves it.  Decided by a backtracking hitting-set search: each same-event
 * other word must be excluded by at least one family span whose tight
 * interval it misses.
 */
ObscurationResult is_obscured(const TimedWord& word, const std::vector<TimedWord>& others,
                              const ObscurationOptions& options = {});

struct SolvableResult {
    enum class Status { Solvable, Unsolvable, Unknown };
    Status status{Status::Solvable};
    /* Unsolvable: an offending positive (obscured, or listed as negative too). */
    std::optional<TimedWord> witness;
    /* Solvable: per positive, an expression accepting it and rejecting every
     * negative — the ingredients of naive_solution. */
    std::vector<TrePtr> positive_witnesses;
};

/*
 * Does any expression accept all positives and reject all negatives?  This
 * holds exactly when no positive is obscured by the negatives; a word listed
 * on both sides is an immediate no.
 */
SolvableResult check_solvable(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                              const ObscurationOptions& options = {});

/*
 * A (generally far from minimal) consistent expression: the disjunction of
 * one witness per positive.  Throws when the instance is not solvable, or
 * when the obscuration search came back unknown.
 */
TrePtr naive_solution(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                      const ObscurationOptions& options = {});

}  // namespace tresyn
