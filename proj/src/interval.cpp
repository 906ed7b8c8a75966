#include "tresyn/interval.hpp"

#include <stdexcept>

namespace tresyn {

Interval Interval::make(std::int64_t lo, bool lo_closed, std::optional<std::int64_t> hi, bool hi_closed) {
    if (lo < 0) throw std::invalid_argument("interval lower bound must be a natural number");
    if (hi) {
        if (*hi < lo) throw std::invalid_argument("interval upper bound below lower bound");
        if (*hi == lo && !(lo_closed && hi_closed))
            throw std::invalid_argument("empty interval: point interval needs both ends closed");
    }
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    r.lo_closed_ = lo_closed;
    r.hi_closed_ = hi ? hi_closed : false; /* an unbounded side is never closed */
    return r;
}

bool Interval::contains(const Rat& value) const {
    const Rat lo_rat(lo_);
    if (lo_closed_ ? value < lo_rat : value <= lo_rat) return false;
    if (hi_) {
        const Rat hi_rat(*hi_);
        if (hi_closed_ ? value > hi_rat : value >= hi_rat) return false;
    }
    return true;
}

std::optional<Interval> Interval::intersect(const Interval& a, const Interval& b) {
    std::int64_t lo = a.lo_;
    bool lo_closed = a.lo_closed_;
    if (b.lo_ > lo || (b.lo_ == lo && !b.lo_closed_)) {
        lo = b.lo_;
        lo_closed = lo == a.lo_ ? (a.lo_closed_ && b.lo_closed_) : b.lo_closed_;
    }
    std::optional<std::int64_t> hi;
    bool hi_closed = false;
    if (a.hi_ && b.hi_) {
        if (*a.hi_ < *b.hi_) {
            hi = a.hi_;
            hi_closed = a.hi_closed_;
        } else if (*b.hi_ < *a.hi_) {
            hi = b.hi_;
            hi_closed = b.hi_closed_;
        } else {
            hi = a.hi_;
            hi_closed = a.hi_closed_ && b.hi_closed_;
        }
    } else if (a.hi_) {
        hi = a.hi_;
        hi_closed = a.hi_closed_;
    } else if (b.hi_) {
        hi = b.hi_;
        hi_closed = b.hi_closed_;
    }
    if (hi) {
        if (*hi < lo) return std::nullopt;
        if (*hi == lo && !(lo_closed && hi_closed)) return std::nullopt;
    }
    return make(lo, lo_closed, hi, hi_closed);
}

std::string Interval::to_string() const {
    std::string out;
    out += lo_closed_ ? '[' : '(';
    out += std::to_string(lo_);
    out += ',';
    if (hi_) {
        out += std::to_string(*hi_);
        out += hi_closed_ ? ']' : ')';
    } else {
        out += "inf)";
    }
    return out;
}

}  // namespace tresyn
