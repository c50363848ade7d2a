#include "kalg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace kalg {

namespace {

struct ParsedTerm {
    GaussianRational coeff;
    char symbol = 0;  // 'L', 'K' or 'C'; 0 for a bare zero scalar
    long index = 0;
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    std::size_t pos() const { return pos_; }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail(start, "expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (pos_ == start)
            fail(start, "expected a rational number");
        return Rational::from_string(text_.substr(start, pos_ - start));
    }

    GaussianRational parse_paren_scalar() {
        skip_ws();
        std::size_t open = pos_;
        expect('(');
        std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos)
            fail(open, "unmatched '('");
        std::string inner(text_.substr(pos_, close - pos_));
        inner.erase(std::remove_if(inner.begin(), inner.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    inner.end());
        pos_ = close + 1;
        try {
            return GaussianRational::from_string(inner);
        } catch (const std::invalid_argument& e) {
            fail(open, e.what());
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

ParsedTerm parse_term(Cursor& c) {
    ParsedTerm t;
    t.coeff = GaussianRational(1);
    c.skip_ws();
    char ch = c.peek();
    bool have_scalar = false;
    if (ch == '(') {
        t.coeff = c.parse_paren_scalar();
        have_scalar = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff = GaussianRational(c.parse_rational());
        have_scalar = true;
    }
    if (have_scalar) {
        c.skip_ws();
        if (c.peek() != '*') {
            if (t.coeff.is_zero())
                return t;  // bare zero term
            fail(c.pos(), "expected '*' between scalar and generator");
        }
        c.take();
        c.skip_ws();
        ch = c.peek();
    }
    std::size_t gen_pos = c.pos();
    if (ch == 'C') {
        c.take();
        t.symbol = 'C';
        return t;
    }
    if (ch != 'L' && ch != 'K')
        fail(gen_pos, "expected a generator L[n], K[n] or C");
    c.take();
    t.symbol = ch;
    c.expect('[');
    t.index = c.parse_int();
    c.expect(']');
    if (t.symbol == 'K' && t.index == 0)
        fail(gen_pos, "index 0 not in K basis");
    return t;
}

}  // namespace

LieElement parse_element(std::string_view text, std::optional<AlgebraKind> kind_hint) {
    Cursor c(text);
    std::vector<ParsedTerm> terms;
    bool first = true;
    while (!c.done()) {
        GaussianRational sign(1);
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.take() == '-')
                sign = GaussianRational(-1);
        } else if (!first) {
            fail(c.pos(), "expected '+' or '-' between terms");
        }
        ParsedTerm t = parse_term(c);
        t.coeff *= sign;
        terms.push_back(t);
        first = false;
    }
    if (first)
        fail(0, "empty element");

    bool has_l = false, has_k = false;
    for (const auto& t : terms) {
        has_l = has_l || t.symbol == 'L';
        has_k = has_k || t.symbol == 'K';
    }
    if (has_l && has_k)
        fail(0, "cannot mix L and K generators in one element");

    AlgebraKind kind;
    if (kind_hint) {
        kind = *kind_hint;
        if (has_l && is_k_family(kind))
            throw std::invalid_argument("L generators do not belong to " + kind_name(kind));
        if (has_k && !is_k_family(kind))
            throw std::invalid_argument("K generators do not belong to " + kind_name(kind));
    } else {
        kind = has_l ? AlgebraKind::Vir : AlgebraKind::K;
    }

    LieElement x(kind);
    for (const auto& t : terms) {
        if (t.symbol == 'C')
            x.add_central(t.coeff);
        else if (t.symbol != 0)
            x.add_term(t.index, t.coeff);
    }
    return x;
}

namespace {

void append_term(std::string& out, const GaussianRational& coeff, const std::string& symbol) {
    bool negative = coeff.is_real() && coeff.re().is_negative();
    GaussianRational mag = negative ? -coeff : coeff;
    std::string piece;
    if (mag.is_real() && mag.re() == Rational(1))
        piece = symbol;
    else if (mag.is_real())
        piece = mag.to_string() + "*" + symbol;
    else
        piece = "(" + mag.to_string() + ")*" + symbol;
    if (out.empty())
        out = negative ? "-" + piece : piece;
    else
        out += (negative ? " - " : " + ") + piece;
}

}  // namespace

std::string format_element(const LieElement& x) {
    if (x.is_zero())
        return "0";
    const bool k_family = is_k_family(x.kind());
    std::vector<long> order;
    for (const auto& [n, q] : x.terms())
        order.push_back(n);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        auto key = [&](long n) {
            bool front = k_family ? n > 0 : n >= 0;
            return std::make_pair(front ? 0L : 1L, front ? n : -n);
        };
        return key(a) < key(b);
    });
    std::string out;
    for (long n : order)
        append_term(out, x.coeff(n),
                    std::string(k_family ? "K[" : "L[") + std::to_string(n) + "]");
    if (!x.central_coeff().is_zero())
        append_term(out, x.central_coeff(), "C");
    return out;
}

}  // namespace kalg
