#ifndef POLYAUT_POLY_TEXT_HPP
#define POLYAUT_POLY_TEXT_HPP

#include <polyaut/errors.hpp>
#include <polyaut/polynomial.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polyaut {

/// x, y, z for up to three variables, otherwise x1, ..., xn.
inline std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> names;
    static const char* const short_names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(n <= 3 ? short_names[i] : "x" + std::to_string(i + 1));
    }
    return names;
}

/*
 * Renders p in graded-lexicographic descending order, e.g. "x*z + y^2 - 1/2*x".
 * The output is canonical: parse(render(p)) == p and equal polynomials render
 * to identical strings.
 */
inline std::string render(const Polynomial& p, const std::vector<std::string>& var_names) {
    if (var_names.size() != p.var_count()) {
        throw DimensionError("render needs one name per variable");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const Rational magnitude = abs(c);
        const bool is_unit = magnitude == 1;
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += var_names[i];
            if (e[i] > 1) {
                monomial += '^' + std::to_string(e[i]);
            }
        }
        if (monomial.empty()) {
            out += magnitude.get_str();
        } else if (is_unit) {
            out += monomial;
        } else {
            out += magnitude.get_str() + '*' + monomial;
        }
    }
    return out;
}

inline std::string render(const Polynomial& p) {
    return render(p, default_var_names(p.var_count()));
}

namespace detail {

/*
 * Recursive-descent parser.
 *
 *   expression := ['+'|'-'] term (('+'|'-') term)*
 *   term       := factor ('*' factor)*
 *   factor     := primary ('^' positive-int)?
 *   primary    := int ('/' positive-int)? | var | '(' expression ')'
 */
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    static constexpr unsigned max_exponent = 100000;

    Polynomial expression() {
        Polynomial acc(names_.size());
        bool negate = false;
        skip_space();
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
        }
        acc = term();
        if (negate) {
            acc = -acc;
        }
        for (;;) {
            skip_space();
            const char op = peek();
            if (op != '+' && op != '-') {
                return acc;
            }
            ++pos_;
            if (op == '+') {
                acc += term();
            } else {
                acc -= term();
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') {
                return acc;
            }
            ++pos_;
            acc *= factor();
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        skip_space();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const std::string digits = read_digits();
        if (digits.empty()) {
            throw ParseError("expected exponent", at);
        }
        if (digits.size() > 6 || std::stoul(digits) > max_exponent) {
            throw ParseError("exponent too large", at);
        }
        const unsigned k = static_cast<unsigned>(std::stoul(digits));
        if (k == 0) {
            throw ParseError("exponent must be positive", at);
        }
        return base.pow(k);
    }

    Polynomial primary() {
        skip_space();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            skip_space();
            if (peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(read_digits());
            mpz_class den = 1;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                const std::size_t den_at = pos_;
                const std::string digits = read_digits();
                if (digits.empty()) {
                    throw ParseError("expected denominator", den_at);
                }
                den = mpz_class(digits);
                if (den == 0) {
                    throw ParseError("zero denominator", den_at);
                }
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(names_.size(), q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            for (std::size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == name) {
                    return Polynomial::variable(names_.size(), i);
                }
            }
            throw UnknownVariableError(name, at);
        }
        if (c == '\0') {
            throw ParseError("unexpected end of input", at);
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string read_digits() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        return digits;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse(std::string_view text, const std::vector<std::string>& var_names) {
    if (var_names.empty()) {
        throw DimensionError("parse needs at least one variable name");
    }
    return detail::PolyParser(text, var_names).parse();
}

/// Parses over the default variables x, y, z.
inline Polynomial parse(std::string_view text) {
    return parse(text, default_var_names(3));
}

} // namespace polyaut

#endif // POLYAUT_POLY_TEXT_HPP
