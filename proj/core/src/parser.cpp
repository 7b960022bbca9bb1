#include "planarize/parser.hpp"

#include <cctype>
#include <optional>

namespace planarize {

namespace {

class Parser {
   public:
    Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
        throw ParseError(pos_, what + ", found " + found);
    }

    Poly poly() {
        Poly sum(ring_);
        bool first = true;
        while (true) {
            const char c = peek();
            const std::size_t op_pos = pos_;
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            if (!starts_factor(peek())) {
                if (!first || c == '+' || c == '-')
                    throw ParseError(op_pos, std::string("'") + c + "' is not followed by a term");
                fail("expected a term");
            }
            Poly t = term();
            sum += negative ? -t : t;
            check_size(sum);
            first = false;
        }
        return sum;
    }

   private:
    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    void check_size(const Poly& p) const {
        if (p.size() > kMaxParsedTerms)
            throw ParseError(pos_, "more than " + std::to_string(kMaxParsedTerms) + " terms");
    }

    Poly term() {
        Poly prod = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                if (!starts_factor(peek())) fail("expected a factor after '*'");
            } else if (!starts_factor(c)) {
                break;
            }
            prod = prod * factor();
            check_size(prod);
        }
        return prod;
    }

    unsigned exponent() {
        if (peek() != '^') return 1;
        const std::size_t caret = pos_;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        const std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.size() > 2 || std::stoul(std::string(digits)) > kMaxParsedExponent)
            throw ParseError(caret, "exponent exceeds " + std::to_string(kMaxParsedExponent));
        return static_cast<unsigned>(std::stoul(std::string(digits)));
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Poly factor() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = (skip_ws(), pos_);
                den = integer();
                if (den == 0) throw ParseError(at, "zero denominator");
            }
            return Poly::constant(ring_, Rational(num, den));
        }
        if (c == '(') {
            ++pos_;
            Poly inner = poly();
            expect(')');
            return inner.pow(exponent());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            // Single-letter variables may be juxtaposed: "xy" is x*y.
            const std::string name(1, c);
            const auto idx = ring_.index_of(name);
            if (!idx) throw ParseError(at, "unknown variable '" + name + "'");
            ++pos_;
            Poly v = Poly::variable(ring_, *idx);
            return v.pow(exponent());
        }
        fail("expected a number, variable or '('");
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

// Chooses (x, y, z) or (t, u, v, w) from the letters present.
const Ring& infer_ring(std::string_view text, bool map_only) {
    std::optional<std::size_t> source_at, target_at;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isalpha(static_cast<unsigned char>(c))) continue;
        if (c == 'x' || c == 'y' || c == 'z') {
            if (target_at) throw ParseError(i, "mixed variable alphabets");
            if (!source_at) source_at = i;
        } else if (c == 't' || c == 'u' || c == 'v' || c == 'w') {
            if (map_only) throw ParseError(i, std::string("variable '") + c + "' is not a source variable");
            if (source_at) throw ParseError(i, "mixed variable alphabets");
            if (!target_at) target_at = i;
        } else {
            throw ParseError(i, std::string("unknown variable '") + c + "'");
        }
    }
    return target_at ? Ring::tuvw() : Ring::xyz();
}

}  // namespace

Poly parse_poly(std::string_view text) {
    Parser p(text, infer_ring(text, false));
    Poly out = p.poly();
    if (!p.at_end()) p.fail("unexpected character");
    return out;
}

MapExpression parse_map(std::string_view text) {
    Parser p(text, infer_ring(text, true));
    MapExpression out;
    p.expect('[');
    int degree = -1;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i > 0) p.expect(':');
        p.skip_ws();
        const std::size_t start = p.pos();
        Poly c = p.poly();
        if (!c.is_zero()) {
            if (!c.is_homogeneous()) throw ParseError(start, "component " + std::to_string(i + 1) + " is not homogeneous");
            if (c.total_degree() == 0) throw ParseError(start, "component " + std::to_string(i + 1) + " has degree 0");
            if (degree >= 0 && c.total_degree() != degree)
                throw ParseError(start, "component " + std::to_string(i + 1) + " has degree " +
                                            std::to_string(c.total_degree()) + ", expected " + std::to_string(degree));
            degree = c.total_degree();
        }
        out.components[i] = std::move(c);
    }
    p.expect(']');
    if (!p.at_end()) p.fail("unexpected text after the map");
    if (degree < 0) throw ParseError(0, "all components are zero");
    return out;
}

RationalMap parse_rational_map(std::string_view text) { return RationalMap::normalize(parse_map(text).components); }

std::string print_map(const MapExpression& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += " : ";
        out += to_string(m.components[i]);
    }
    return out + "]";
}

}  // namespace planarize
