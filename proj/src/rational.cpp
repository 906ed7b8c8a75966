#include "tresyn/rational.hpp"

#include <cctype>
#include <numeric>

namespace tresyn {

void Rat::assign(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    num_ = g ? numerator / g : 0;
    den_ = g ? denominator / g : 1;
}

Rat Rat::from_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::size_t digits_begin = i;
    std::int64_t whole = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        whole = whole * 10 + (text[i] - '0');
        ++i;
    }
    if (i == digits_begin) throw parse_error("expected a decimal number, got '" + text + "'");
    std::int64_t num = whole;
    std::int64_t den = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        const std::size_t frac_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i] - '0');
            den *= 10;
            ++i;
        }
        if (i == frac_begin) throw parse_error("expected digits after '.' in '" + text + "'");
    }
    if (i != text.size()) throw parse_error("trailing characters in number '" + text + "'");
    return Rat(negative ? -num : num, den);
}

std::int64_t Rat::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rat::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rat::to_decimal() const {
    std::int64_t n = num_ < 0 ? -num_ : num_;
    std::int64_t d = den_;
    /* Scale the denominator to a power of ten: den = 2^a * 5^b after reduction. */
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) throw std::logic_error("rational " + std::to_string(num_) + "/" + std::to_string(den_) + " has no finite decimal form");
    while (twos < fives) {
        n *= 2;
        ++twos;
    }
    while (fives < twos) {
        n *= 5;
        ++fives;
    }
    /* Now the value is n / 10^twos. */
    std::string digits = std::to_string(n);
    std::string out;
    if (num_ < 0) out += '-';
    if (twos == 0) {
        out += digits;
        return out;
    }
    if (digits.size() <= static_cast<std::size_t>(twos))
        digits.insert(0, static_cast<std::size_t>(twos) + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - twos);
    std::string frac = digits.substr(digits.size() - twos);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += '.' + frac;
    return out;
}

}  // namespace tresyn
