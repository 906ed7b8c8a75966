#include "tresyn/datagen.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "tresyn/membership.hpp"

#include "json.hpp"

namespace tresyn {

namespace {

// ===========================================================================
// Deterministic uniform draws
// ===========================================================================
// std::uniform_int_distribution is implementation-defined, so datasets drawn
// through it would differ across standard libraries.  mt19937_64 itself is
// pinned by the standard; drawing uniformly by rejection keeps regenerated
// datasets byte-identical everywhere.

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

// ===========================================================================
// Derivation-shape sampling
// ===========================================================================

struct Sketch {
    std::vector<Event> events;
    /* Restriction plus the letter span [begin, end) it covers. */
    std::vector<std::pair<Interval, std::pair<int, int>>> constraints;
};

void sketch_node(const Tre& n, const SampleLimits& limits, std::mt19937_64& rng, Sketch& out) {
    const int begin = static_cast<int>(out.events.size());
    switch (n.kind) {
        case TreKind::Epsilon:
            break;
        case TreKind::Atom:
            out.events.push_back(n.event);
            break;
        case TreKind::Concat:
            sketch_node(*n.left, limits, rng, out);
            sketch_node(*n.right, limits, rng, out);
            break;
        case TreKind::Or:
            sketch_node(coin(rng) ? *n.left : *n.right, limits, rng, out);
            break;
        case TreKind::Star: {
            int iterations = 0;
            while (iterations < limits.max_star_iterations && coin(rng)) ++iterations;
            for (int i = 0; i < iterations; ++i) sketch_node(*n.left, limits, rng, out);
            break;
        }
    }
    if (n.restricted())
        out.constraints.push_back({*n.restriction, {begin, static_cast<int>(out.events.size())}});
}

/* Largest endpoint mentioned anywhere in the target, as the delay range to
 * sample from: +2 leaves room to overshoot every bound. */
std::int64_t delay_ceiling(const Tre& n) {
    std::int64_t best = 0;
    if (n.restriction) {
        best = std::max(best, n.restriction->lo());
        if (n.restriction->hi()) best = std::max(best, *n.restriction->hi());
    }
    if (n.left) best = std::max(best, delay_ceiling(*n.left));
    if (n.right) best = std::max(best, delay_ceiling(*n.right));
    return best + 2;
}

bool decimal_grid(int grid) {
    if (grid < 1) return false;
    int g = grid;
    while (g % 2 == 0) g /= 2;
    while (g % 5 == 0) g /= 5;
    return g == 1;
}

void check_limits(const SampleLimits& limits) {
    if (limits.max_word_length < 1 || limits.max_star_iterations < 0 || limits.max_rejection_attempts < 1)
        throw std::invalid_argument("sample limits must be positive");
    if (!decimal_grid(limits.delay_grid))
        throw std::invalid_argument("delay_grid must divide a power of ten so delays print exactly");
}

std::vector<Rat> draw_delays(std::size_t count, std::int64_t ceiling, int grid, std::mt19937_64& rng) {
    const std::uint64_t options = static_cast<std::uint64_t>(ceiling) * static_cast<std::uint64_t>(grid) + 1;
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(Rat(static_cast<std::int64_t>(uniform_below(rng, options)), grid));
    return out;
}

}  // namespace

TimedWord sample_word(const Tre& target, const SampleLimits& limits, std::mt19937_64& rng) {
    check_limits(limits);
    const std::int64_t ceiling = delay_ceiling(target);
    int too_long = 0;
    std::map<std::string, int> violations;
    for (int attempt = 0; attempt < limits.max_rejection_attempts; ++attempt) {
        Sketch sketch;
        sketch_node(target, limits, rng, sketch);
        if (static_cast<int>(sketch.events.size()) > limits.max_word_length) {
            ++too_long;
            continue;
        }
        const std::vector<Rat> delays = draw_delays(sketch.events.size(), ceiling, limits.delay_grid, rng);
        std::vector<Rat> prefix(delays.size() + 1, Rat(0));
        for (std::size_t i = 0; i < delays.size(); ++i) prefix[i + 1] = prefix[i] + delays[i];
        bool ok = true;
        for (const auto& [interval, span] : sketch.constraints) {
            const Rat sum = prefix[static_cast<std::size_t>(span.second)] - prefix[static_cast<std::size_t>(span.first)];
            if (!interval.contains(sum)) {
                ++violations[interval.to_string()];
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        TimedWord w;
        for (std::size_t i = 0; i < delays.size(); ++i) w.letters.emplace_back(sketch.events[i], delays[i]);
        if (!membership(target, w))
            throw std::logic_error("sample_word: constraint-satisfying draw rejected by membership");
        return w;
    }
    std::string why;
    int worst = -1;
    for (const auto& [text, count] : violations) {
        if (count > worst) {
            worst = count;
            why = "restriction " + text + " (" + std::to_string(count) + " failures)";
        }
    }
    if (too_long > worst)
        why = "word length cap " + std::to_string(limits.max_word_length) + " (" + std::to_string(too_long) +
              " oversize draws)";
    throw sample_error("sample_word: no draw from '" + format_tre(target) + "' survived " +
                       std::to_string(limits.max_rejection_attempts) + " attempts; tightest: " + why);
}

// ===========================================================================
// Dataset assembly
// ===========================================================================

namespace {

std::vector<Event> collect_events(const Tre& n) {
    std::set<Event> events;
    const std::function<void(const Tre&)> walk = [&](const Tre& t) {
        if (t.kind == TreKind::Atom) events.insert(t.event);
        if (t.left) walk(*t.left);
        if (t.right) walk(*t.right);
    };
    walk(n);
    return {events.begin(), events.end()};
}

}  // namespace

Dataset generate_dataset(const Tre& target, int n_pos, int n_neg, const SampleLimits& limits) {
    check_limits(limits);
    if (n_pos < 0 || n_neg < 0) throw std::invalid_argument("generate_dataset: counts must be nonnegative");
    std::mt19937_64 rng(limits.seed);
    Dataset out;
    out.requested_positives = n_pos;
    out.requested_negatives = n_neg;

    for (int i = 0; i < n_pos; ++i) {
        try {
            out.positives.push_back(sample_word(target, limits, rng));
        } catch (const sample_error&) {
            break; /* budget spent; report the partial count */
        }
    }

    const std::vector<Event> sigma = collect_events(target);
    const std::int64_t ceiling = delay_ceiling(target);
    long attempts = static_cast<long>(limits.max_rejection_attempts) * std::max(1, n_neg);
    while (static_cast<int>(out.negatives.size()) < n_neg && attempts-- > 0) {
        TimedWord w;
        if (!out.positives.empty() && coin(rng)) {
            /* Same event sequence as a positive, delays redrawn. */
            const TimedWord& base =
                out.positives[static_cast<std::size_t>(uniform_below(rng, out.positives.size()))];
            const std::vector<Rat> delays = draw_delays(base.size(), ceiling, limits.delay_grid, rng);
            for (std::size_t i = 0; i < base.size(); ++i) w.letters.emplace_back(base.letters[i].first, delays[i]);
        } else if (!sigma.empty()) {
            const std::size_t len = uniform_below(rng, static_cast<std::uint64_t>(limits.max_word_length) + 1);
            const std::vector<Rat> delays = draw_delays(len, ceiling, limits.delay_grid, rng);
            for (std::size_t i = 0; i < len; ++i)
                w.letters.emplace_back(sigma[uniform_below(rng, sigma.size())], delays[i]);
        } else {
            break; /* no events to build negatives from */
        }
        if (!membership(target, w)) out.negatives.push_back(std::move(w));
    }
    return out;
}

std::string dataset_manifest(const Tre& target, const SampleLimits& limits, const Dataset& dataset) {
    nlohmann::json j;
    j["target"] = format_tre(target);
    j["seed"] = limits.seed;
    j["limits"] = {{"max_word_length", limits.max_word_length},
                   {"max_star_iterations", limits.max_star_iterations},
                   {"delay_grid", limits.delay_grid},
                   {"max_rejection_attempts", limits.max_rejection_attempts}};
    j["requested_positives"] = dataset.requested_positives;
    j["requested_negatives"] = dataset.requested_negatives;
    j["positives"] = dataset.positives.size();
    j["negatives"] = dataset.negatives.size();
    return j.dump(2);
}

}  // namespace tresyn
