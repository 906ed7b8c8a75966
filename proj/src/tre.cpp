#include "tresyn/tre.hpp"

#include <cctype>

namespace tresyn {

namespace {

TrePtr make_node(Tre node) { return std::make_shared<const Tre>(std::move(node)); }

}  // namespace

TrePtr make_epsilon(std::optional<Interval> restriction) {
    return make_node({TreKind::Epsilon, {}, nullptr, nullptr, std::move(restriction)});
}

TrePtr make_atom(Event event, std::optional<Interval> restriction) {
    return make_node({TreKind::Atom, std::move(event), nullptr, nullptr, std::move(restriction)});
}

TrePtr make_concat(TrePtr left, TrePtr right, std::optional<Interval> restriction) {
    return make_node({TreKind::Concat, {}, std::move(left), std::move(right), std::move(restriction)});
}

TrePtr make_or(TrePtr left, TrePtr right, std::optional<Interval> restriction) {
    return make_node({TreKind::Or, {}, std::move(left), std::move(right), std::move(restriction)});
}

TrePtr make_star(TrePtr body, std::optional<Interval> restriction) {
    return make_node({TreKind::Star, {}, std::move(body), nullptr, std::move(restriction)});
}

TrePtr with_restriction(const TrePtr& t, std::optional<Interval> restriction) {
    Tre copy = *t;
    copy.restriction = std::move(restriction);
    return make_node(std::move(copy));
}

std::size_t tre_length(const Tre& t) {
    std::size_t n = 1;
    if (t.left) n += tre_length(*t.left);
    if (t.right) n += tre_length(*t.right);
    return n;
}

bool structural_equal(const Tre& a, const Tre& b) {
    if (a.kind != b.kind || a.event != b.event) return false;
    const bool a_res = a.restricted();
    if (a_res != b.restricted()) return false;
    if (a_res && *a.restriction != *b.restriction) return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
    if (a.left && !structural_equal(*a.left, *b.left)) return false;
    if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
    if (a.right && !structural_equal(*a.right, *b.right)) return false;
    return true;
}

// ===========================================================================
// Parser
// ===========================================================================

namespace {

class TreParser {
public:
    explicit TreParser(const std::string& text) : text_(text) {}

    TrePtr run() {
        TrePtr t = parse_alt();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error("expression, column " + std::to_string(pos_ + 1) + ": " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_digit_after() {
        /* Look past the already-peeked opener for the first non-space char. */
        std::size_t i = pos_ + 1;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
    }

    TrePtr parse_alt() {
        TrePtr t = parse_cat();
        while (peek() == '|') {
            ++pos_;
            t = make_or(t, parse_cat());
        }
        return t;
    }

    bool starts_factor() {
        const char c = peek();
        if (c == '\0' || c == '|' || c == ')' || c == '*' || c == '[') return false;
        if (c == '(') return !at_digit_after();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    TrePtr parse_cat() {
        TrePtr t = parse_unary();
        for (;;) {
            if (peek() == '.') {
                ++pos_;
                t = make_concat(t, parse_unary());
            } else if (starts_factor()) {
                t = make_concat(t, parse_unary());
            } else {
                return t;
            }
        }
    }

    TrePtr parse_unary() {
        TrePtr t = parse_atom();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                t = make_star(t);
            } else if (c == '[' || (c == '(' && at_digit_after())) {
                const Interval iv = parse_interval();
                if (t->restricted()) {
                    const auto meet = Interval::intersect(*t->restriction, iv);
                    if (!meet) fail("stacked restrictions have empty intersection");
                    t = with_restriction(t, *meet);
                } else {
                    t = with_restriction(t, iv);
                }
            } else {
                return t;
            }
        }
    }

    TrePtr parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            TrePtr t = parse_alt();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            if (name == "eps") return make_epsilon();
            return make_atom(name);
        }
        fail(c == '\0' ? std::string("unexpected end of input") : "expected an atom, got '" + std::string(1, c) + "'");
    }

    std::int64_t parse_nat() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a natural number");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            value = value * 10 + (text_[pos_++] - '0');
        return value;
    }

    Interval parse_interval() {
        const bool lo_closed = peek() == '[';
        ++pos_;
        const std::int64_t lo = parse_nat();
        if (peek() != ',') fail("expected ',' in interval");
        ++pos_;
        skip_space();
        std::optional<std::int64_t> hi;
        if (text_.compare(pos_, 3, "inf") == 0) {
            pos_ += 3;
        } else {
            hi = parse_nat();
        }
        const char closer = peek();
        if (closer != ']' && closer != ')') fail("expected ']' or ')' to close interval");
        ++pos_;
        if (!hi && closer == ']') fail("an unbounded interval cannot be closed above");
        if (hi && *hi < lo) fail("interval upper bound below lower bound");
        if (hi && *hi == lo && !(lo_closed && closer == ']')) fail("empty interval");
        return Interval::make(lo, lo_closed, hi, closer == ']');
    }

    const std::string& text_;
    std::size_t pos_{0};
};

}  // namespace

TrePtr parse_tre(const std::string& text) { return TreParser(text).run(); }

// ===========================================================================
// Canonical printer
// ===========================================================================

namespace {

std::string render(const Tre& t);

bool is_composite(const Tre& t) {
    return t.kind == TreKind::Concat || t.kind == TreKind::Or || t.kind == TreKind::Star;
}

/* Child position: parenthesize composites and restricted leaves. */
std::string render_child(const Tre& t) {
    const std::string body = render(t);
    if (is_composite(t) || t.restricted()) return "(" + body + ")";
    return body;
}

std::string render_core(const Tre& t) {
    switch (t.kind) {
        case TreKind::Epsilon: return "eps";
        case TreKind::Atom: return t.event;
        case TreKind::Concat: return render_child(*t.left) + " " + render_child(*t.right);
        case TreKind::Or: return render_child(*t.left) + " | " + render_child(*t.right);
        case TreKind::Star: return render_child(*t.left) + "*";
    }
    return {};
}

std::string render(const Tre& t) {
    std::string core = render_core(t);
    if (!t.restricted()) return core;
    if (is_composite(t)) core = "(" + core + ")";
    return core + t.restriction->to_string();
}

}  // namespace

std::string format_tre(const Tre& t) { return render(t); }

}  // namespace tresyn
