#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tresyn/rational.hpp"

namespace tresyn {

/*
 * Interval over the nonnegative reals with integer endpoints: [l,u], (l,u],
 * [l,u), (l,u), [l,inf) or (l,inf).  Endpoints are naturals; the upper bound
 * may be absent (unbounded).  Construction rejects empty sets, so every
 * Interval value denotes a nonempty set of durations.
 */
class Interval {
public:
    /* [0, inf): the restriction that restricts nothing. */
    Interval() = default;

    static Interval closed(std::int64_t lo, std::int64_t hi) { return make(lo, true, hi, true); }
    static Interval open(std::int64_t lo, std::int64_t hi) { return make(lo, false, hi, false); }
    static Interval open_closed(std::int64_t lo, std::int64_t hi) { return make(lo, false, hi, true); }
    static Interval closed_open(std::int64_t lo, std::int64_t hi) { return make(lo, true, hi, false); }
    static Interval at_least(std::int64_t lo) { return make(lo, true, std::nullopt, false); }
    static Interval greater_than(std::int64_t lo) { return make(lo, false, std::nullopt, false); }
    /* General constructor; `hi == nullopt` means unbounded. */
    static Interval make(std::int64_t lo, bool lo_closed, std::optional<std::int64_t> hi, bool hi_closed);

    std::int64_t lo() const { return lo_; }
    std::optional<std::int64_t> hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }
    bool unbounded() const { return !hi_.has_value(); }

    /* True for [0, inf), i.e. a restriction that can be dropped. */
    bool is_universal() const { return lo_ == 0 && lo_closed_ && unbounded(); }

    bool contains(const Rat& value) const;

    /* Set intersection; nullopt when the result would be empty. */
    static std::optional<Interval> intersect(const Interval& a, const Interval& b);

    /* Text form used by the expression syntax: "[3,7]", "(1,2]", "[0,inf)". */
    std::string to_string() const;

    bool operator==(const Interval& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && lo_closed_ == o.lo_closed_ && hi_closed_ == o.hi_closed_;
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

private:
    std::int64_t lo_{0};
    std::optional<std::int64_t> hi_{};
    bool lo_closed_{true};
    bool hi_closed_{false};
};

}  // namespace tresyn
