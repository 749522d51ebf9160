/**
 * @file polynomial.hpp
 * @brief Small exact polynomial utilities over Q(i): evaluation, deflation,
 *        square roots in Q(i), and root extraction for the polynomials that
 *        arise from minimal and characteristic polynomials here.
 *
 * Root extraction is exact: linear and quadratic factors are solved in
 * closed form (a quadratic splits over Q(i) iff its discriminant is a square
 * there), and higher degrees fall back to a Gaussian-integer rational-root
 * search after clearing denominators. Polynomials that do not split over
 * Q(i) are returned with a nonconstant remainder rather than approximated.
 */

#pragma once

#include "opgraph/scalar.hpp"

#include <optional>
#include <vector>

namespace opgraph {

/// Coefficients low degree -> high degree; trailing zeros trimmed.
using Poly = std::vector<GaussRational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline GaussRational poly_eval(const Poly& p, const GaussRational& x) {
    GaussRational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Divide by (t - root); the root must be exact (zero remainder).
inline Poly poly_deflate(const Poly& p, const GaussRational& root) {
    if (p.size() < 2) throw std::invalid_argument("poly_deflate: degree too small");
    Poly q(p.size() - 1);
    GaussRational carry = p.back();
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = p[k] + root * carry;
    }
    if (!carry.is_zero()) throw std::invalid_argument("poly_deflate: not a root");
    poly_trim(q);
    return q;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt n = numerator(r), d = denominator(r);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

/// Exact square root in Q(i), if one exists.
inline std::optional<GaussRational> gauss_sqrt(const GaussRational& w) {
    if (w.is_zero()) return GaussRational(0);
    const Rational& a = w.re();
    const Rational& b = w.im();
    if (b == 0) {
        if (auto s = rational_sqrt(a)) return GaussRational(*s);
        if (auto s = rational_sqrt(-a)) return GaussRational(Rational(0), *s);
        return std::nullopt;
    }
    // (x + yi)^2 = a + bi  =>  x^2 = (a + |w|)/2, y = b / (2x).
    auto n = rational_sqrt(a * a + b * b);
    if (!n) return std::nullopt;
    auto x = rational_sqrt((a + *n) / 2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = b / (2 * (*x));
    GaussRational s(*x, y);
    if (s * s != w) return std::nullopt;
    return s;
}

namespace detail {

/// All Gaussian-integer divisors of w = u + vi (including unit multiples).
/// Brute force over the norm lattice; callers cap the norm.
inline std::vector<GaussRational> gaussian_divisors(const BigInt& u, const BigInt& v) {
    BigInt norm = u * u + v * v;
    std::vector<GaussRational> out;
    if (norm == 0) return out;
    BigInt bound = sqrt(norm);
    for (BigInt p = 0; p <= bound; ++p) {
        for (BigInt q = 0; p * p + q * q <= norm; ++q) {
            BigInt dn = p * p + q * q;
            if (dn == 0 || norm % dn != 0) continue;
            // d | w  iff  w * conj(d) is divisible by |d|^2 componentwise.
            BigInt re = u * p + v * q;
            BigInt im = v * p - u * q;
            if (re % dn != 0 || im % dn != 0) continue;
            GaussRational d{Rational(p), Rational(q)};
            out.push_back(d);
            out.push_back(-d);
            out.push_back(d * GaussRational::i());
            out.push_back(-(d * GaussRational::i()));
        }
    }
    return out;
}

}  // namespace detail

struct RootExtraction {
    std::vector<GaussRational> roots;  // with multiplicity, in discovery order
    Poly remainder;                    // constant iff the polynomial split
    bool fully_split() const { return remainder.size() <= 1; }
};

/**
 * Extract the roots of p lying in Q(i). Linear and quadratic factors are
 * exact; for degree >= 3 a rational-root search runs over Gaussian-integer
 * divisor candidates, skipped when the cleared coefficients exceed norm_cap.
 */
inline RootExtraction extract_roots(Poly p, const BigInt& norm_cap = BigInt(1000000)) {
    RootExtraction out;
    poly_trim(p);
    if (p.empty()) throw std::invalid_argument("extract_roots: zero polynomial");
    while (p.size() > 1) {
        std::size_t deg = p.size() - 1;
        if (p[0].is_zero()) {
            out.roots.emplace_back(0);
            p = poly_deflate(p, GaussRational(0));
            continue;
        }
        if (deg == 1) {
            out.roots.push_back(-(p[0] / p[1]));
            p = {p[1]};
            continue;
        }
        if (deg == 2) {
            GaussRational disc = p[1] * p[1] - GaussRational(4) * p[2] * p[0];
            auto s = gauss_sqrt(disc);
            if (!s) break;  // irreducible over Q(i)
            GaussRational half = GaussRational(Rational(1, 2)) * p[2].inverse();
            GaussRational r1 = (-p[1] + *s) * half;
            GaussRational r2 = (-p[1] - *s) * half;
            out.roots.push_back(r1);
            out.roots.push_back(r2);
            p = {p[2]};
            continue;
        }
        // Degree >= 3: clear denominators, then search r/s with r | a0, s | an.
        BigInt lcm = 1;
        for (const auto& c : p) {
            lcm = boost::multiprecision::lcm(lcm, denominator(c.re()));
            lcm = boost::multiprecision::lcm(lcm, denominator(c.im()));
        }
        std::vector<GaussRational> cleared;
        cleared.reserve(p.size());
        for (const auto& c : p) cleared.push_back(GaussRational(Rational(lcm)) * c);
        BigInt a0_re = numerator(cleared.front().re());
        BigInt a0_im = numerator(cleared.front().im());
        BigInt an_re = numerator(cleared.back().re());
        BigInt an_im = numerator(cleared.back().im());
        if (a0_re * a0_re + a0_im * a0_im > norm_cap ||
            an_re * an_re + an_im * an_im > norm_cap)
            break;
        std::vector<GaussRational> nums = detail::gaussian_divisors(a0_re, a0_im);
        std::vector<GaussRational> dens = detail::gaussian_divisors(an_re, an_im);
        bool found = false;
        for (const auto& r : nums) {
            for (const auto& s : dens) {
                GaussRational cand = r / s;
                if (poly_eval(p, cand).is_zero()) {
                    out.roots.push_back(cand);
                    p = poly_deflate(p, cand);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.remainder = std::move(p);
    return out;
}

}  // namespace opgraph
