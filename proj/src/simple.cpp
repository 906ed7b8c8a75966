#include "tresyn/simple.hpp"

#include <algorithm>
#include <stdexcept>

namespace tresyn {

bool Span::laminar(const Span& a, const Span& b) {
    if (a.contains(b) || b.contains(a)) return true;
    return a.end < b.begin || b.end < a.begin;
}

Interval tight_interval(const Rat& sum) {
    if (sum.is_negative()) throw std::invalid_argument("negative delay sum");
    const std::int64_t d = sum.floor();
    if (sum.is_integer()) return Interval::closed(d, d);
    return Interval::open(d, d + 1);
}

std::map<Span, Interval> span_constraints(const TimedWord& w) {
    if (w.empty()) throw std::invalid_argument("span constraints of the empty word");
    std::map<Span, Interval> theta;
    const int n = static_cast<int>(w.size());
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k)
            theta.emplace(Span{j, k},
                          tight_interval(w.delay_sum(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k))));
    return theta;
}

bool sel_equal(const TimedWord& a, const TimedWord& b) {
    if (untime(a) != untime(b)) return false;
    if (a.empty()) return true;
    return span_constraints(a) == span_constraints(b);
}

bool is_laminar(const LaminarFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!Span::laminar(family[i], family[j])) return false;
    return true;
}

// ===========================================================================
// Realizing a family as one simple expression
// ===========================================================================

namespace {

TrePtr build_block(const TimedWord& w, Span span, std::vector<Span> inside) {
    /* A family span realizes as a restriction wrapping its interior. */
    const auto self = std::find(inside.begin(), inside.end(), span);
    if (self != inside.end()) {
        inside.erase(self);
        TrePtr body = build_block(w, span, std::move(inside));
        const Rat sum = w.delay_sum(static_cast<std::size_t>(span.begin - 1), static_cast<std::size_t>(span.end));
        return with_restriction(body, tight_interval(sum));
    }
    if (span.begin == span.end) return make_atom(w.letters[static_cast<std::size_t>(span.begin - 1)].first);
    /* Partition into maximal member spans and singleton gaps, left to right,
     * and fold the blocks into a left-leaning concatenation. */
    TrePtr acc;
    int p = span.begin;
    while (p <= span.end) {
        Span block{p, p};
        for (const Span& s : inside)
            if (s.begin == p && s.end > block.end) block.end = s.end;
        std::vector<Span> sub;
        for (const Span& s : inside)
            if (block.contains(s)) sub.push_back(s);
        TrePtr part = build_block(w, block, std::move(sub));
        acc = acc ? make_concat(acc, part) : part;
        p = block.end + 1;
    }
    return acc;
}

}  // namespace

TrePtr family_to_tre(const TimedWord& w, const LaminarFamily& family) {
    if (w.empty()) throw std::invalid_argument("cannot realize a family over the empty word");
    if (!is_laminar(family)) throw std::invalid_argument("span family is not laminar");
    const int n = static_cast<int>(w.size());
    for (const Span& s : family)
        if (s.begin < 1 || s.end > n || s.begin > s.end) throw std::invalid_argument("span out of range");
    return build_block(w, Span{1, n}, family);
}

// ===========================================================================
// Enumeration
// ===========================================================================

namespace {

std::vector<Span> all_spans(int n) {
    std::vector<Span> spans;
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) spans.push_back({j, k});
    return spans;
}

}  // namespace

void enumerate_simple_tres(const TimedWord& w,
                           const std::function<bool(const LaminarFamily&, const TrePtr&)>& yield) {
    if (w.empty()) throw std::invalid_argument("cannot enumerate simple expressions of the empty word");
    const std::vector<Span> spans = all_spans(static_cast<int>(w.size()));
    LaminarFamily family;
    bool stop = false;
    /* Branch on each span in order: leave it out or, when compatible with
     * everything chosen so far, put it in. */
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (stop) return;
        if (i == spans.size()) {
            LaminarFamily sorted = family;
            std::sort(sorted.begin(), sorted.end());
            if (!yield(sorted, family_to_tre(w, sorted))) stop = true;
            return;
        }
        self(self, i + 1);
        if (stop) return;
        const bool compatible =
            std::all_of(family.begin(), family.end(), [&](const Span& s) { return Span::laminar(s, spans[i]); });
        if (compatible) {
            family.push_back(spans[i]);
            self(self, i + 1);
            family.pop_back();
        }
    };
    walk(walk, 0);
}

std::vector<std::pair<LaminarFamily, TrePtr>> all_simple_tres(const TimedWord& w) {
    std::vector<std::pair<LaminarFamily, TrePtr>> out;
    enumerate_simple_tres(w, [&](const LaminarFamily& family, const TrePtr& tre) {
        out.emplace_back(family, tre);
        return true;
    });
    return out;
}

// ===========================================================================
// Obscuration
// ===========================================================================

ObscurationResult is_obscured(const TimedWord& word, const std::vector<TimedWord>& others,
                              const ObscurationOptions& options) {
    if (word.empty()) throw std::invalid_argument("obscuration of the empty word");
    const std::vector<Event> events = untime(word);
    const auto theta = span_constraints(word);

    /* Every same-event other word must be missed by some chosen span: collect
     * the spans on which it falls outside this word's tight interval. */
    std::vector<std::vector<Span>> distinguishers;
    for (const TimedWord& other : others) {
        if (untime(other) != events) continue;
        std::vector<Span> d;
        for (const auto& [span, tight] : theta) {
            const Rat other_sum =
                other.delay_sum(static_cast<std::size_t>(span.begin - 1), static_cast<std::size_t>(span.end));
            if (!tight.contains(other_sum)) d.push_back(span);
        }
        if (d.empty()) return {ObscurationResult::Status::Obscured, {}, nullptr};
        distinguishers.push_back(std::move(d));
    }

    /* Hitting-set search, most constrained words first. */
    std::sort(distinguishers.begin(), distinguishers.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const bool budgeted = word.size() > options.exact_cap;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    LaminarFamily family;
    std::optional<LaminarFamily> found;
    auto solve = [&](auto&& self, std::size_t i) -> bool {
        if (budgeted && ++nodes > options.budget) {
            out_of_budget = true;
            return false;
        }
        if (i == distinguishers.size()) {
            found = family;
            return true;
        }
        const auto& d = distinguishers[i];
        if (std::any_of(d.begin(), d.end(),
                        [&](const Span& s) { return std::find(family.begin(), family.end(), s) != family.end(); }))
            return self(self, i + 1);
        for (const Span& candidate : d) {
            const bool compatible = std::all_of(family.begin(), family.end(),
                                                [&](const Span& s) { return Span::laminar(s, candidate); });
            if (!compatible) continue;
            family.push_back(candidate);
            if (self(self, i + 1)) return true;
            family.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    };
    if (solve(solve, 0)) {
        std::sort(found->begin(), found->end());
        return {ObscurationResult::Status::NotObscured, *found, family_to_tre(word, *found)};
    }
    if (out_of_budget) return {ObscurationResult::Status::Unknown, {}, nullptr};
    return {ObscurationResult::Status::Obscured, {}, nullptr};
}

// ===========================================================================
// Solvability and the naive solution
// ===========================================================================

SolvableResult check_solvable(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                              const ObscurationOptions& options) {
    SolvableResult result;
    for (const TimedWord& pos : positives)
        if (std::find(negatives.begin(), negatives.end(), pos) != negatives.end()) {
            result.status = SolvableResult::Status::Unsolvable;
            result.witness = pos;
            return result;
        }
    for (const TimedWord& pos : positives) {
        if (pos.empty()) {
            /* Only the empty word itself matches an `eps` expression, so an
             * empty positive is separable from any negatives not containing
             * it — and that case was rejected above. */
            result.positive_witnesses.push_back(make_epsilon());
            continue;
        }
        ObscurationResult ob = is_obscured(pos, negatives, options);
        switch (ob.status) {
            case ObscurationResult::Status::Obscured:
                result.status = SolvableResult::Status::Unsolvable;
                result.witness = pos;
                result.positive_witnesses.clear();
                return result;
            case ObscurationResult::Status::Unknown:
                result.status = SolvableResult::Status::Unknown;
                result.positive_witnesses.clear();
                return result;
            case ObscurationResult::Status::NotObscured:
                result.positive_witnesses.push_back(ob.witness);
                break;
        }
    }
    result.status = SolvableResult::Status::Solvable;
    return result;
}

TrePtr naive_solution(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives,
                      const ObscurationOptions& options) {
    if (positives.empty()) throw std::invalid_argument("naive solution needs at least one positive word");
    const SolvableResult solvable = check_solvable(positives, negatives, options);
    if (solvable.status == SolvableResult::Status::Unsolvable)
        throw std::invalid_argument("instance is unsolvable; obscured word: " +
                                    format_timed_word(solvable.witness.value_or(TimedWord{})));
    if (solvable.status == SolvableResult::Status::Unknown)
        throw std::runtime_error("obscuration search exceeded its budget");
    TrePtr acc;
    for (const TrePtr& witness : solvable.positive_witnesses) acc = acc ? make_or(acc, witness) : witness;
    return acc;
}

}  // namespace tresyn
