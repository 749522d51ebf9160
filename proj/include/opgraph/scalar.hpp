/**
 * @file scalar.hpp
 * @brief Exact scalar arithmetic over the Gaussian rationals Q(i).
 *
 * Every computation in this library is carried out over Q(i) = {a + b*i}
 * with arbitrary-precision rational parts, so structural claims (ranks,
 * dimensions, subspace equalities) are decided exactly, with no tolerance
 * policy anywhere.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// A Gaussian rational a + b*i. Value type, immutable in spirit: all
/// operations return fresh values.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int n) : re_(n) {}  // NOLINT: implicit by design
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    /// |a|^2 = a * conj(a), as a rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }

    GaussRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussRational: division by zero");
        Rational n = norm2();
        return GaussRational(re_ / n, -im_ / n);
    }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        return a * b.inverse();
    }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// Total order (lexicographic on (re, im)); used only for canonical
    /// sorting and map keys, it has no algebraic meaning.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& v) {
        return os << v.to_string();
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussRational pow(const GaussRational& base, long exp) {
    GaussRational b = exp < 0 ? base.inverse() : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    GaussRational result(1);
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text format, shared by every module and the CLI.
//
//   rational:  "a" or "a/b"
//   scalar:    "a/b", "a/b+c/d*i", "c/d*i", "i", "-i", "1+i", ...
//
// Omitted parts default to 0; "i" alone means 0+1i.
// ---------------------------------------------------------------------------

inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string GaussRational::to_string() const {
    auto im_part = [](const Rational& r) -> std::string {
        if (r == 1) return "i";
        if (r == -1) return "-i";
        return rational_to_string(r) + "*i";
    };
    if (im_ == 0) return rational_to_string(re_);
    if (re_ == 0) return im_part(im_);
    std::string s = rational_to_string(re_);
    if (im_ > 0) s += "+";
    return s + im_part(im_);
}

inline Rational parse_rational(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = cleaned.find('/');
    auto check_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    auto to_bigint = [](std::string s) {  // cpp_int rejects a leading '+'
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return BigInt(s);
    };
    if (slash == std::string::npos) {
        if (!check_int(cleaned)) throw std::invalid_argument("bad rational literal: " + cleaned);
        return Rational(to_bigint(cleaned));
    }
    std::string num = cleaned.substr(0, slash);
    std::string den = cleaned.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("bad rational literal: " + cleaned);
    BigInt d = to_bigint(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + cleaned);
    return Rational(to_bigint(num), d);
}

/// Parse the scalar text format. Accepts one or two signed terms, each a
/// rational, "i", or "rational*i" (also plain "rational i"-style products
/// such as "2*i").
inline GaussRational parse_scalar(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    GaussRational total(0);
    std::size_t pos = 0;
    int terms = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (terms > 0) {
            throw std::invalid_argument("expected '+' or '-' in scalar: " + s);
        }
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("empty term in scalar: " + s);
        bool imag = false;
        if (term.back() == 'i') {
            imag = true;
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        Rational mag = term.empty() ? Rational(1) : parse_rational(term);
        if (term.empty() && !imag)
            throw std::invalid_argument("bad term in scalar: " + s);
        if (sign < 0) mag = -mag;
        total += imag ? GaussRational(Rational(0), mag) : GaussRational(mag);
        ++terms;
        if (terms > 2) throw std::invalid_argument("too many terms in scalar: " + s);
    }
    return total;
}

}  // namespace opgraph
