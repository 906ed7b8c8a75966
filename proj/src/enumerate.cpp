#include "tresyn/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tresyn/derive.hpp"

namespace tresyn {

// ===========================================================================
// Alphabet
// ===========================================================================

Alphabet alphabet_of(const std::vector<TimedWord>& positives, const std::vector<TimedWord>& negatives) {
    std::set<Event> events;
    for (const TimedWord& w : positives)
        for (const auto& [e, d] : w.letters) events.insert(e);
    for (const TimedWord& w : negatives)
        for (const auto& [e, d] : w.letters) events.insert(e);
    return Alphabet(events.begin(), events.end());
}

// ===========================================================================
// Shapes
// ===========================================================================

std::vector<PTrePtr> skeletons(int k) {
    if (k < 1) throw std::invalid_argument("skeletons: length must be at least 1");
    std::vector<std::vector<PTrePtr>> by_len(static_cast<std::size_t>(k) + 1);
    by_len[1] = {make_hole()};
    for (int n = 2; n <= k; ++n) {
        auto& out = by_len[static_cast<std::size_t>(n)];
        for (const PTrePtr& body : by_len[static_cast<std::size_t>(n - 1)]) out.push_back(make_pstar(body));
        for (int l = 1; l <= n - 2; ++l)
            for (const PTrePtr& a : by_len[static_cast<std::size_t>(l)])
                for (const PTrePtr& b : by_len[static_cast<std::size_t>(n - 1 - l)]) out.push_back(make_pconcat(a, b));
        for (int l = 1; l <= n - 2; ++l)
            for (const PTrePtr& a : by_len[static_cast<std::size_t>(l)])
                for (const PTrePtr& b : by_len[static_cast<std::size_t>(n - 1 - l)]) out.push_back(make_por(a, b));
    }
    return by_len[static_cast<std::size_t>(k)];
}

namespace {

PTrePtr stamp_events(const PTrePtr& p, const std::vector<Event>& picks, std::size_t& next) {
    switch (p->kind) {
        case PTreKind::Hole:
            return make_patom(picks[next++]);
        case PTreKind::Atom:
            return p;
        case PTreKind::Star:
            return make_pstar(stamp_events(p->left, picks, next));
        case PTreKind::Concat: {
            PTrePtr l = stamp_events(p->left, picks, next);
            return make_pconcat(l, stamp_events(p->right, picks, next));
        }
        case PTreKind::Or: {
            PTrePtr l = stamp_events(p->left, picks, next);
            return make_por(l, stamp_events(p->right, picks, next));
        }
    }
    throw std::logic_error("stamp_events: bad kind");
}

}  // namespace

std::vector<PTrePtr> fill_atoms(const PTrePtr& skeleton, const Alphabet& sigma) {
    const std::size_t holes = hole_count(*skeleton);
    if (holes == 0) return {skeleton};
    if (sigma.empty()) return {};
    std::vector<PTrePtr> out;
    std::vector<std::size_t> digits(holes, 0); /* leftmost hole = most significant */
    for (;;) {
        std::vector<Event> picks(holes);
        for (std::size_t i = 0; i < holes; ++i) picks[i] = sigma[digits[i]];
        std::size_t next = 0;
        out.push_back(stamp_events(skeleton, picks, next));
        std::size_t i = holes;
        while (i > 0) {
            --i;
            if (++digits[i] < sigma.size()) break;
            digits[i] = 0;
            if (i == 0) return out;
        }
    }
}

// ===========================================================================
// Untimed acceptability
// ===========================================================================

namespace {

/* The candidate's untimed language (holes reading as any event sequence)
 * covers every given event sequence. */
bool covers_untimed(const PTre& p, const std::vector<std::vector<Event>>& words) {
    const GlushkovNfa nfa = glushkov(label_positions(p));
    for (const auto& w : words)
        if (!untimed_accepts(nfa, w)) return false;
    return true;
}

std::vector<std::vector<Event>> untimed_of(const std::vector<TimedWord>& words) {
    std::vector<std::vector<Event>> out;
    out.reserve(words.size());
    for (const TimedWord& w : words) out.push_back(untime(w));
    return out;
}

}  // namespace

bool check_acceptable(const PTre& p, const std::vector<TimedWord>& positives) {
    if (!is_closed(p)) throw std::invalid_argument("check_acceptable: candidate has holes");
    return covers_untimed(p, untimed_of(positives));
}

std::vector<PTrePtr> enumerate_trivial(int k, const Alphabet& sigma, const std::vector<TimedWord>& positives) {
    const auto pos_untimed = untimed_of(positives);
    std::vector<PTrePtr> out;
    for (const PTrePtr& s : skeletons(k))
        for (const PTrePtr& c : fill_atoms(s, sigma))
            if (covers_untimed(*c, pos_untimed)) out.push_back(c);
    std::sort(out.begin(), out.end(),
              [](const PTrePtr& a, const PTrePtr& b) { return format_ptre(*a) < format_ptre(*b); });
    return out;
}

// ===========================================================================
// Expansion
// ===========================================================================

namespace {

PTrePtr replace_leftmost(const PTrePtr& p, const PTrePtr& replacement, bool& done) {
    if (done) return p;
    switch (p->kind) {
        case PTreKind::Hole:
            done = true;
            return replacement;
        case PTreKind::Atom:
            return p;
        case PTreKind::Star: {
            PTrePtr body = replace_leftmost(p->left, replacement, done);
            return body == p->left ? p : make_pstar(body);
        }
        case PTreKind::Concat:
        case PTreKind::Or: {
            PTrePtr l = replace_leftmost(p->left, replacement, done);
            if (l != p->left) return p->kind == PTreKind::Concat ? make_pconcat(l, p->right) : make_por(l, p->right);
            PTrePtr r = replace_leftmost(p->right, replacement, done);
            if (r != p->right) return p->kind == PTreKind::Concat ? make_pconcat(p->left, r) : make_por(p->left, r);
            return p;
        }
    }
    throw std::logic_error("replace_leftmost: bad kind");
}

PTrePtr expand(const PTrePtr& p, const PTrePtr& replacement) {
    bool done = false;
    return replace_leftmost(p, replacement, done);
}

}  // namespace

std::vector<PTrePtr> children(const PTrePtr& p, const Alphabet& sigma) {
    if (is_closed(*p)) throw std::invalid_argument("children: candidate is already closed");
    std::vector<PTrePtr> out;
    out.reserve(sigma.size() + 3);
    for (const Event& e : sigma) out.push_back(expand(p, make_patom(e)));
    out.push_back(expand(p, make_pstar(make_hole())));
    out.push_back(expand(p, make_pconcat(make_hole(), make_hole())));
    out.push_back(expand(p, make_por(make_hole(), make_hole())));
    return out;
}

bool edge_prunable(const PTre& p, const std::vector<TimedWord>& positives) {
    if (hole_count(p) != 1) throw std::invalid_argument("edge_prunable: candidate must have exactly one hole");
    return !covers_untimed(p, untimed_of(positives));
}

// ===========================================================================
// Containment
// ===========================================================================

namespace {

/* `pattern`'s tree matches at this exact node, its holes matching anything. */
bool match_here(const PTre& node, const PTre& pattern) {
    if (pattern.kind == PTreKind::Hole) return true;
    if (node.kind != pattern.kind) return false;
    switch (pattern.kind) {
        case PTreKind::Atom:
            return node.event == pattern.event;
        case PTreKind::Star:
            return match_here(*node.left, *pattern.left);
        case PTreKind::Concat:
        case PTreKind::Or:
            return match_here(*node.left, *pattern.left) && match_here(*node.right, *pattern.right);
        case PTreKind::Hole:
            break;
    }
    throw std::logic_error("match_here: bad kind");
}

}  // namespace

bool syntactic_contains(const PTre& longer, const PTre& doomed) {
    if (match_here(longer, doomed)) return true;
    switch (longer.kind) {
        case PTreKind::Hole:
        case PTreKind::Atom:
            return false;
        case PTreKind::Star:
            return syntactic_contains(*longer.left, doomed);
        case PTreKind::Concat:
        case PTreKind::Or:
            return syntactic_contains(*longer.left, doomed) || syntactic_contains(*longer.right, doomed);
    }
    throw std::logic_error("syntactic_contains: bad kind");
}

// ===========================================================================
// Pruning walk
// ===========================================================================

RecursiveEnumerator::RecursiveEnumerator(Alphabet sigma, std::vector<TimedWord> positives, EnumerateOptions opts)
    : sigma_(std::move(sigma)), pos_untimed_(untimed_of(positives)), opts_(opts) {
    frontier_.push_back(make_hole());
}

bool RecursiveEnumerator::starts_with_doomed(const PTre& p) const {
    for (const PTrePtr& d : doomed_)
        if (match_here(p, *d)) return true;
    return false;
}

void RecursiveEnumerator::remember_doomed(PTrePtr p) {
    if (!opts_.containment_pruning) return;
    if (doomed_.size() >= opts_.doomed_cap) doomed_.pop_front();
    doomed_.push_back(std::move(p));
}

void RecursiveEnumerator::advance() {
    ++step_;
    std::vector<PTrePtr> next;
    std::vector<PTrePtr> closed_now;
    for (const PTrePtr& p : frontier_) {
        for (PTrePtr& c : children(p, sigma_)) {
            ++stats_.generated;
            if (opts_.containment_pruning && starts_with_doomed(*c)) {
                ++stats_.containment_pruned;
                remember_doomed(std::move(c));
                continue;
            }
            if (is_closed(*c)) {
                ++stats_.closed;
                if (covers_untimed(*c, pos_untimed_)) {
                    ++stats_.accepted;
                    closed_now.push_back(std::move(c));
                }
                continue;
            }
            if (opts_.max_length && static_cast<int>(ptre_length(*c)) > *opts_.max_length) continue;
            if (opts_.edge_pruning && hole_count(*c) == 1 && !covers_untimed(*c, pos_untimed_)) {
                ++stats_.edge_pruned;
                remember_doomed(std::move(c));
                continue;
            }
            next.push_back(std::move(c));
        }
    }
    frontier_ = std::move(next);
    harvest_ = std::move(closed_now);
}

std::vector<PTrePtr> RecursiveEnumerator::at_length(int k) {
    if (k < 1) throw std::invalid_argument("at_length: length must be at least 1");
    if (k < step_) throw std::logic_error("at_length: lengths must not decrease");
    while (step_ < k) advance();
    std::vector<PTrePtr> out = harvest_;
    std::sort(out.begin(), out.end(),
              [](const PTrePtr& a, const PTrePtr& b) { return format_ptre(*a) < format_ptre(*b); });
    return out;
}

std::vector<PTrePtr> enumerate_recursive(int k, const Alphabet& sigma, const std::vector<TimedWord>& positives,
                                         bool use_containment, EnumerateStats* stats) {
    EnumerateOptions opts;
    opts.containment_pruning = use_containment;
    opts.max_length = k;
    RecursiveEnumerator walker(sigma, positives, opts);
    std::vector<PTrePtr> out = walker.at_length(k);
    if (stats) {
        stats->generated += walker.stats().generated;
        stats->edge_pruned += walker.stats().edge_pruned;
        stats->containment_pruned += walker.stats().containment_pruned;
        stats->closed += walker.stats().closed;
        stats->accepted += walker.stats().accepted;
    }
    return out;
}

}  // namespace tresyn
