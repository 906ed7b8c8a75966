#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tresyn {

/* Thrown by the text-format parsers (rationals, timed words, expressions). */
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/*
 * Exact rational number, always kept in lowest terms with a positive
 * denominator.  Delay arithmetic must be exact: whether a sum of delays is an
 * integer or falls strictly between two integers decides which constraint a
 * word induces, and binary floating point cannot represent decimals like 0.1
 * faithfully.  Magnitudes stay tiny here (sums of small decimal delays), so
 * 64-bit components with 128-bit intermediates are plenty.
 */
class Rat {
public:
    constexpr Rat() = default;
    Rat(std::int64_t numerator, std::int64_t denominator) { assign(numerator, denominator); }
    /* Implicit from integers so `sum == 3` and `Rat(3)` read naturally. */
    constexpr Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

    /*
     * Parse a decimal literal ("2", "1.5", "0.25", "-3.0") exactly.
     * Accepts an optional sign, digits, and at most one fractional part.
     */
    static Rat from_decimal(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /* Largest integer <= this value. */
    std::int64_t floor() const;

    /* Smallest integer >= this value. */
    std::int64_t ceil() const;

    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    /*
     * Exact decimal rendering ("1.5", "0.25", "3").  Every value in the system
     * originates from decimal literals and sums thereof, so the reduced
     * denominator only ever carries factors 2 and 5; anything else is a logic
     * error and throws.
     */
    std::string to_decimal() const;

private:
    void assign(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num_{0};
    std::int64_t den_{1};
};

}  // namespace tresyn
