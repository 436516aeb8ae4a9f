#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfd {

/// Exponents closer than this are treated as the same power of t.
inline constexpr double exponent_merge_tolerance = 1e-12;

struct Term {
    double coeff;
    double exponent;
};

/// Finite sum of c * t^k with real exponents k > -1.
///
/// Always held in canonical form: strictly increasing exponents, no two
/// exponents within exponent_merge_tolerance of each other, no zero
/// coefficients.
class GeneralizedPolynomial {
  public:
    GeneralizedPolynomial() = default;
    GeneralizedPolynomial(std::initializer_list<Term> terms)
        : terms_(terms) { normalize(); }
    explicit GeneralizedPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

    static GeneralizedPolynomial constant(double c) { return GeneralizedPolynomial{{c, 0.0}}; }
    static GeneralizedPolynomial monomial(double c, double k) { return GeneralizedPolynomial{{c, k}}; }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    double min_exponent() const { return terms_.empty() ? 0.0 : terms_.front().exponent; }

    /// Sum of c * t^k in increasing-exponent order. t^k is exp(k ln t) for t > 0.
    double eval(double t) const {
        if (t < 0.0 || std::isnan(t))
            throw std::domain_error("generalized polynomial evaluated at negative t");
        double sum = 0.0;
        for (const auto& [c, k] : terms_) {
            if (t == 0.0) {
                if (k < 0.0) throw std::domain_error("negative exponent evaluated at t = 0");
                sum += (k == 0.0) ? c : 0.0;
            } else {
                sum += c * std::exp(k * std::log(t));
            }
        }
        return sum;
    }

    /// Classical first derivative, termwise k c t^(k-1).
    double eval_derivative(double t) const {
        if (!(t > 0.0)) throw std::domain_error("derivative evaluated at non-positive t");
        double sum = 0.0;
        for (const auto& [c, k] : terms_) {
            if (k != 0.0) sum += k * c * std::exp((k - 1.0) * std::log(t));
        }
        return sum;
    }

    GeneralizedPolynomial operator+(const GeneralizedPolynomial& other) const {
        std::vector<Term> all = terms_;
        all.insert(all.end(), other.terms_.begin(), other.terms_.end());
        return GeneralizedPolynomial(std::move(all));
    }

    GeneralizedPolynomial operator*(double s) const {
        std::vector<Term> scaled = terms_;
        for (auto& term : scaled) term.coeff *= s;
        return GeneralizedPolynomial(std::move(scaled));
    }

    friend bool operator==(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].exponent != b.terms_[i].exponent)
                return false;
        }
        return true;
    }

  private:
    void normalize() {
        for (const auto& term : terms_) {
            if (!std::isfinite(term.coeff) || !std::isfinite(term.exponent))
                throw std::domain_error("non-finite polynomial term");
            if (!(term.exponent > -1.0))
                throw std::domain_error("polynomial exponent must exceed -1, got " +
                                        std::to_string(term.exponent));
        }
        std::stable_sort(terms_.begin(), terms_.end(),
                         [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (const auto& term : terms_) {
            if (!merged.empty() &&
                std::abs(term.exponent - merged.back().exponent) <= exponent_merge_tolerance) {
                merged.back().coeff += term.coeff;
            } else {
                merged.push_back(term);
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

enum class ElementaryKind { Exp, Sin, Cos };

struct ElementarySpec {
    ElementaryKind kind;
    double rate;  // lambda for Exp, omega for Sin/Cos
    int truncation_order = 30;
};

/// Maclaurin truncation of exp(rate t), sin(rate t) or cos(rate t).
///
/// Exp keeps powers 0..N, Sin odd powers up to 2N+1, Cos even powers up to 2N.
inline GeneralizedPolynomial taylor_expand(const ElementarySpec& spec) {
    if (spec.truncation_order < 1) throw std::invalid_argument("truncation order must be >= 1");
    const int n = spec.truncation_order;
    const double r = spec.rate;
    std::vector<Term> terms;
    switch (spec.kind) {
        case ElementaryKind::Exp: {
            double c = 1.0;
            for (int k = 0; k <= n; ++k) {
                if (k > 0) c *= r / k;
                terms.push_back({c, static_cast<double>(k)});
            }
            break;
        }
        case ElementaryKind::Sin: {
            double c = r;  // r^(2m+1) / (2m+1)! with sign
            for (int m = 0; m <= n; ++m) {
                if (m > 0) c *= -r * r / ((2.0 * m) * (2.0 * m + 1.0));
                terms.push_back({c, 2.0 * m + 1.0});
            }
            break;
        }
        case ElementaryKind::Cos: {
            double c = 1.0;
            for (int m = 0; m <= n; ++m) {
                if (m > 0) c *= -r * r / ((2.0 * m - 1.0) * (2.0 * m));
                terms.push_back({c, 2.0 * m});
            }
            break;
        }
    }
    return GeneralizedPolynomial(std::move(terms));
}

inline double eval(const GeneralizedPolynomial& poly, double t) { return poly.eval(t); }

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }

    GeneralizedPolynomial parse() {
        if (src_.empty()) fail("empty expression");
        std::vector<Term> terms;
        bool first = true;
        while (pos_ < src_.size()) {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = (src_[pos_] == '-') ? -1.0 : 1.0;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            terms.push_back(parse_term(sign));
        }
        return GeneralizedPolynomial(std::move(terms));
    }

  private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse polynomial '" + src_ + "' at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    Term parse_term(double sign) {
        double coeff = 1.0;
        double exponent = 0.0;
        if (peek() == 't') {
            exponent = parse_power();
        } else {
            coeff = parse_rational();
            if (peek() == '*') {
                ++pos_;
                if (peek() != 't') fail("expected 't' after '*'");
                exponent = parse_power();
            } else if (peek() == 't') {
                exponent = parse_power();
            }
        }
        return {sign * coeff, exponent};
    }

    // t, t^k, t^(k)
    double parse_power() {
        ++pos_;  // 't'
        if (peek() != '^') return 1.0;
        ++pos_;
        if (peek() == '(') {
            ++pos_;
            double sign = 1.0;
            if (peek() == '-' || peek() == '+') sign = (src_[pos_++] == '-') ? -1.0 : 1.0;
            const double k = sign * parse_rational();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return k;
        }
        double sign = 1.0;
        if (peek() == '-') {
            sign = -1.0;
            ++pos_;
        }
        return sign * parse_rational();
    }

    // decimal or p/q
    double parse_rational() {
        const double num = parse_number();
        if (peek() == '/') {
            ++pos_;
            const double den = parse_number();
            if (den == 0.0) fail("zero denominator");
            return num / den;
        }
        return num;
    }

    double parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        if ((peek() == 'e' || peek() == 'E') && pos_ > start) {
            std::size_t save = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;
            } else {
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
        }
        if (pos_ == start) fail("expected a number");
        const std::string token = src_.substr(start, pos_ - start);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            fail("malformed number '" + token + "'");
        }
        if (used != token.size()) fail("malformed number '" + token + "'");
        return value;
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses literals like "3*t^2 - 0.5*t^(1/2) + 7". Whitespace is ignored and
/// exponents may be decimals or fractions p/q.
inline GeneralizedPolynomial parse_polynomial(std::string_view text) {
    return detail::PolyParser(text).parse();
}

inline std::string to_string(const GeneralizedPolynomial& poly) {
    if (poly.empty()) return "0";
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < poly.terms().size(); ++i) {
        const auto& [c, k] = poly.terms()[i];
        if (i == 0) {
            std::snprintf(buf, sizeof buf, "%.12g", c);
        } else {
            std::snprintf(buf, sizeof buf, " %c %.12g", c < 0 ? '-' : '+', std::abs(c));
        }
        out += buf;
        if (k != 0.0) {
            std::snprintf(buf, sizeof buf, "*t^%.12g", k);
            out += buf;
        }
    }
    return out;
}

}  // namespace gfd
