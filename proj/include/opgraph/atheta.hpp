/**
 * @file atheta.hpp
 * @brief The 8-dimensional quotient algebras A_theta of CG by the relation
 *        (xy + yx) z = (theta + 1/theta) * 1, and the 4x4 representation phi.
 *
 * Writing b = theta + 1/theta, two presentations cover all theta != 0:
 *
 *   b != 0:  basis 1, g, g^2, g^3, x, xg, xg^2, xg^3 with
 *            x^2 = 1, g^4 + (2 - b^2) g^2 + 1 = 0, xgx = g^-1 = (b^2-2)g - g^3,
 *            and z = (g + g^-1)/b eliminated.
 *   b  = 0:  basis 1, g, x, z, xg, xz, gz, xgz with
 *            x^2 = z^2 = 1, g^2 = -1, xgx = g^-1, z central.
 *
 * Elements carry their theta; mixing thetas is an error, not a coercion.
 */

#pragma once

#include "opgraph/algebra.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/group.hpp"

#include <array>
#include <map>

namespace opgraph {

inline GaussRational atheta_b(const GaussRational& theta) {
    if (theta.is_zero()) throw std::domain_error("theta must be nonzero");
    return theta + theta.inverse();
}

/// The canonical basis as group words (normal form); x g^k has normal form
/// g^{-k} x.
inline std::array<GroupWord, 8> atheta_basis_words(bool b_zero) {
    if (b_zero)
        return {GroupWord{0, 0, 0}, GroupWord{1, 0, 0},  GroupWord{0, 0, 1}, GroupWord{0, 1, 0},
                GroupWord{-1, 0, 1}, GroupWord{0, 1, 1}, GroupWord{1, 1, 0}, GroupWord{-1, 1, 1}};
    return {GroupWord{0, 0, 0},  GroupWord{1, 0, 0},  GroupWord{2, 0, 0},  GroupWord{3, 0, 0},
            GroupWord{0, 0, 1},  GroupWord{-1, 0, 1}, GroupWord{-2, 0, 1}, GroupWord{-3, 0, 1}};
}

inline std::array<const char*, 8> atheta_basis_names(bool b_zero) {
    if (b_zero) return {"1", "g", "x", "z", "xg", "xz", "gz", "xgz"};
    return {"1", "g", "g^2", "g^3", "x", "xg", "xg^2", "xg^3"};
}

namespace detail {

/// Rewriting engine for one fixed theta: reduces any group word to canonical
/// basis coordinates.
class AThetaReduction {
public:
    explicit AThetaReduction(const GaussRational& theta)
        : theta_(theta), b_(atheta_b(theta)), b_zero_(b_.is_zero()) {}

    bool b_zero() const { return b_zero_; }
    const GaussRational& b() const { return b_; }

    std::array<GaussRational, 8> word_coords(const GroupWord& w) {
        std::array<GaussRational, 8> out{};
        // Move x to the left: g^n z^e x = x g^{-n} z^e (an exact group identity).
        long m = w.x_bit ? -w.g_exp : w.g_exp;
        if (b_zero_) {
            long r = ((m % 4) + 4) % 4;
            GaussRational sign(r >= 2 ? -1 : 1);
            int mbit = static_cast<int>(r % 2);
            out[index_b0(mbit, w.z_bit, w.x_bit)] = sign;
            return out;
        }
        std::array<GaussRational, 4> p = reduce_power(m);
        if (w.z_bit) p = mul_mod(p, z_poly());
        for (std::size_t k = 0; k < 4; ++k) out[w.x_bit ? 4 + k : k] = p[k];
        return out;
    }

private:
    static std::size_t index_b0(int mbit, int zbit, int xbit) {
        // basis order 1, g, x, z, xg, xz, gz, xgz
        static constexpr std::size_t table[2][2][2] = {
            //            x=0  x=1
            {{0, 2},   // m=0, z=0
             {3, 5}},  // m=0, z=1
            {{1, 4},   // m=1, z=0
             {6, 7}},  // m=1, z=1
        };
        return table[mbit][zbit][xbit];
    }

    /// g^m as a polynomial in 1, g, g^2, g^3 using
    /// g^{m} = (b^2-2) g^{m-2} - g^{m-4} (and its inverse shift for m < 0).
    std::array<GaussRational, 4> reduce_power(long m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        std::array<GaussRational, 4> out{};
        if (m >= 0 && m <= 3) {
            out[static_cast<std::size_t>(m)] = GaussRational(1);
        } else {
            GaussRational c = b_ * b_ - GaussRational(2);
            std::array<GaussRational, 4> hi{}, lo{};
            if (m > 3) {
                hi = reduce_power(m - 2);
                lo = reduce_power(m - 4);
            } else {
                hi = reduce_power(m + 2);
                lo = reduce_power(m + 4);
            }
            for (std::size_t k = 0; k < 4; ++k) out[k] = c * hi[k] - lo[k];
        }
        memo_.emplace(m, out);
        return out;
    }

    /// z = (g + g^-1)/b as a polynomial in g (only used when b != 0).
    std::array<GaussRational, 4> z_poly() {
        std::array<GaussRational, 4> p = reduce_power(1);
        std::array<GaussRational, 4> q = reduce_power(-1);
        GaussRational inv = b_.inverse();
        for (std::size_t k = 0; k < 4; ++k) p[k] = inv * (p[k] + q[k]);
        return p;
    }

    std::array<GaussRational, 4> mul_mod(const std::array<GaussRational, 4>& a,
                                         const std::array<GaussRational, 4>& b) {
        std::array<GaussRational, 7> conv{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) conv[i + j] += a[i] * b[j];
        std::array<GaussRational, 4> out{};
        for (std::size_t k = 0; k < 4; ++k) out[k] = conv[k];
        for (std::size_t k = 4; k < 7; ++k) {
            if (conv[k].is_zero()) continue;
            std::array<GaussRational, 4> red = reduce_power(static_cast<long>(k));
            for (std::size_t j = 0; j < 4; ++j) out[j] += conv[k] * red[j];
        }
        return out;
    }

    GaussRational theta_, b_;
    bool b_zero_;
    std::map<long, std::array<GaussRational, 4>> memo_;
};

}  // namespace detail

class AThetaElement {
public:
    AThetaElement(GaussRational theta, std::array<GaussRational, 8> coords)
        : theta_(std::move(theta)), b_(atheta_b(theta_)), coords_(std::move(coords)) {}

    static AThetaElement zero(const GaussRational& theta) { return {theta, {}}; }
    static AThetaElement unit(const GaussRational& theta) {
        std::array<GaussRational, 8> c{};
        c[0] = GaussRational(1);
        return {theta, c};
    }
    static AThetaElement basis_element(const GaussRational& theta, std::size_t k) {
        std::array<GaussRational, 8> c{};
        c.at(k) = GaussRational(1);
        return {theta, c};
    }

    const GaussRational& theta() const { return theta_; }
    const GaussRational& b() const { return b_; }
    bool b_is_zero() const { return b_.is_zero(); }
    const std::array<GaussRational, 8>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    AThetaElement operator-() const {
        std::array<GaussRational, 8> c;
        for (std::size_t k = 0; k < 8; ++k) c[k] = -coords_[k];
        return {theta_, c};
    }

    friend AThetaElement operator+(const AThetaElement& a, const AThetaElement& b) {
        a.check_theta(b);
        std::array<GaussRational, 8> c;
        for (std::size_t k = 0; k < 8; ++k) c[k] = a.coords_[k] + b.coords_[k];
        return {a.theta_, c};
    }
    friend AThetaElement operator-(const AThetaElement& a, const AThetaElement& b) {
        return a + (-b);
    }
    friend AThetaElement operator*(const GaussRational& s, const AThetaElement& e) {
        std::array<GaussRational, 8> c;
        for (std::size_t k = 0; k < 8; ++k) c[k] = s * e.coords_[k];
        return {e.theta_, c};
    }
    friend AThetaElement operator*(const AThetaElement& a, const AThetaElement& b);

    friend bool operator==(const AThetaElement& a, const AThetaElement& b) {
        a.check_theta(b);
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const AThetaElement& a, const AThetaElement& b) { return !(a == b); }

    std::string to_string() const {
        auto names = atheta_basis_names(b_is_zero());
        std::string s;
        for (std::size_t k = 0; k < 8; ++k) {
            if (coords_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coords_[k].to_string() + ")*" + names[k];
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_theta(const AThetaElement& o) const {
        if (theta_ != o.theta_)
            throw std::invalid_argument("A_theta elements with different theta cannot be mixed");
    }

    GaussRational theta_, b_;
    std::array<GaussRational, 8> coords_;
};

/// Ring homomorphism CG -> A_theta rewriting every word into the canonical basis.
inline AThetaElement project_to_atheta(const GroupAlgElement& e, const GaussRational& theta) {
    detail::AThetaReduction red(theta);
    std::array<GaussRational, 8> coords{};
    for (const auto& [w, c] : e.terms()) {
        std::array<GaussRational, 8> wc = red.word_coords(w);
        for (std::size_t k = 0; k < 8; ++k)
            if (!wc[k].is_zero()) coords[k] += c * wc[k];
    }
    return {theta, coords};
}

/// Section of the projection sending each basis coordinate to its group word.
inline GroupAlgElement atheta_lift(const AThetaElement& e) {
    auto words = atheta_basis_words(e.b_is_zero());
    GroupAlgElement out;
    for (std::size_t k = 0; k < 8; ++k)
        if (!e.coords()[k].is_zero()) out += GroupAlgElement::from_word(words[k], e.coords()[k]);
    return out;
}

inline AThetaElement operator*(const AThetaElement& a, const AThetaElement& b) {
    a.check_theta(b);
    return project_to_atheta(atheta_lift(a) * atheta_lift(b), a.theta());
}

/// Structure constants in the canonical basis: c[i][j] = coords of e_i e_j.
inline std::vector<std::vector<std::array<GaussRational, 8>>> atheta_structure_constants(
    const GaussRational& theta) {
    std::vector<std::vector<std::array<GaussRational, 8>>> c(
        8, std::vector<std::array<GaussRational, 8>>(8));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            c[i][j] = (AThetaElement::basis_element(theta, i) *
                       AThetaElement::basis_element(theta, j))
                          .coords();
    return c;
}

/// Faithful left-regular model: the images of the 8 basis elements under
/// left multiplication, as an 8x8 spanned algebra of dimension 8.
inline SpannedAlgebra atheta_regular_representation(const GaussRational& theta) {
    auto sc = atheta_structure_constants(theta);
    std::vector<ExactMatrix> left;
    for (std::size_t i = 0; i < 8; ++i) {
        ExactMatrix m(8, 8);
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t k = 0; k < 8; ++k) m(k, j) = sc[i][j][k];
        left.push_back(std::move(m));
    }
    return SpannedAlgebra::from_closed_basis(left, /*validate=*/true);
}

/// {1, g + g^-1} when b != 0, {1, z} when b = 0; centrality is checked
/// against all 8 basis elements before returning.
inline std::vector<AThetaElement> atheta_center_basis(const GaussRational& theta) {
    GaussRational b = atheta_b(theta);
    std::vector<AThetaElement> out;
    out.push_back(AThetaElement::unit(theta));
    GroupAlgElement second =
        b.is_zero() ? GroupAlgElement::from_word(z_word()) : u_element();
    out.push_back(project_to_atheta(second, theta));
    for (const auto& c : out)
        for (std::size_t k = 0; k < 8; ++k) {
            AThetaElement e = AThetaElement::basis_element(theta, k);
            if (!(c * e - e * c).is_zero())
                throw std::logic_error("atheta_center_basis: element is not central");
        }
    return out;
}

// ---------------------------------------------------------------------------
// The representation phi: x -> X, y -> Y, z -> Z (hence g = xy -> XY).
// ---------------------------------------------------------------------------

inline ExactMatrix phi_word(const GroupWord& w, const GaussRational& theta) {
    ThetaGenerators gen = theta_generators(theta);
    ExactMatrix xy = gen.x * gen.y;
    ExactMatrix m = w.g_exp >= 0 ? xy.pow(static_cast<unsigned long>(w.g_exp))
                                 : (gen.y * gen.x).pow(static_cast<unsigned long>(-w.g_exp));
    if (w.z_bit) m = m * gen.z;
    if (w.x_bit) m = m * gen.x;
    return m;
}

/// The algebra homomorphism CG -> Mat_4; factors through A_theta.
inline ExactMatrix phi(const GroupAlgElement& e, const GaussRational& theta) {
    if (theta.is_zero()) throw std::domain_error("theta must be nonzero");
    ExactMatrix out(4, 4);
    for (const auto& [w, c] : e.terms()) out += c * phi_word(w, theta);
    return out;
}

inline ExactMatrix phi(const AThetaElement& e) { return phi(atheta_lift(e), e.theta()); }

/// Images of the 8 canonical basis elements under phi.
inline std::vector<ExactMatrix> phi_on_atheta_basis(const GaussRational& theta) {
    auto words = atheta_basis_words(atheta_b(theta).is_zero());
    std::vector<ExactMatrix> out;
    for (const auto& w : words) out.push_back(phi_word(w, theta));
    return out;
}

/// The 16x8 matrix of the induced linear map A_theta -> Mat_4; its rank is 8
/// exactly when phi restricts to an isomorphism onto M_theta.
inline ExactMatrix atheta_phi_matrix(const GaussRational& theta) {
    std::vector<std::vector<GaussRational>> cols;
    for (const auto& m : phi_on_atheta_basis(theta)) cols.push_back(m.vectorize());
    return matrix_from_columns(cols);
}

}  // namespace opgraph
