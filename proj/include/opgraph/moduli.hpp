/**
 * @file moduli.hpp
 * @brief The 2-dimensional representation variety of CG in trace
 *        coordinates: the catalog of isolated moduli points, the two
 *        one-parameter families, and the restriction map to the moduli of CP.
 *
 * Moduli points are identified with their trace tuples
 * (Tr x, Tr y, Tr z, Tr xy, Tr xz, Tr yz): these six traces generate the
 * coordinate ring, and semisimplification classes with equal generator
 * traces coincide. The isolated-point catalog lists one representative per
 * case and sign choice of the commuting-shape case analysis;
 * audit_sign_classes compares it against the brute-force enumeration of all
 * commuting sign representations and reports (rather than reconciles) the
 * classes the case counts leave out.
 */

#pragma once

#include "opgraph/linalg.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <vector>

namespace opgraph {

/// A point of Rep_2(CG): images of x, y, z satisfying x^2 = y^2 = z^2 = 1
/// with z commuting with x and y (x and y need not commute). Validated on
/// construction.
class Rep2Point {
public:
    Rep2Point(ExactMatrix x, ExactMatrix y, ExactMatrix z)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
        ExactMatrix id = ExactMatrix::identity(2);
        if (x_.rows() != 2 || y_.rows() != 2 || z_.rows() != 2 || !x_.is_square() ||
            !y_.is_square() || !z_.is_square())
            throw std::invalid_argument("Rep2Point: images must be 2x2");
        if (x_ * x_ != id || y_ * y_ != id || z_ * z_ != id)
            throw std::invalid_argument("Rep2Point: x^2 = y^2 = z^2 = 1 violated");
        if (x_ * z_ != z_ * x_ || y_ * z_ != z_ * y_)
            throw std::invalid_argument("Rep2Point: z must commute with x and y");
    }

    const ExactMatrix& x_img() const { return x_; }
    const ExactMatrix& y_img() const { return y_; }
    const ExactMatrix& z_img() const { return z_; }

    Rep2Point conjugate(const ExactMatrix& t) const {
        ExactMatrix ti = inverse(t);
        return Rep2Point(ti * x_ * t, ti * y_ * t, ti * z_ * t);
    }

private:
    ExactMatrix x_, y_, z_;
};

struct TraceTuple {
    GaussRational tr_x, tr_y, tr_z, tr_xy, tr_xz, tr_yz;

    std::array<GaussRational, 6> as_array() const {
        return {tr_x, tr_y, tr_z, tr_xy, tr_xz, tr_yz};
    }
    friend bool operator==(const TraceTuple& a, const TraceTuple& b) {
        return a.as_array() == b.as_array();
    }
    friend bool operator<(const TraceTuple& a, const TraceTuple& b) {
        return a.as_array() < b.as_array();
    }
};

inline TraceTuple trace_tuple(const Rep2Point& p) {
    return TraceTuple{p.x_img().trace(),
                      p.y_img().trace(),
                      p.z_img().trace(),
                      (p.x_img() * p.y_img()).trace(),
                      (p.x_img() * p.z_img()).trace(),
                      (p.y_img() * p.z_img()).trace()};
}

namespace detail {

inline ExactMatrix sign_matrix(int s) {  // +-I
    return GaussRational(s) * ExactMatrix::identity(2);
}
inline ExactMatrix reflection(int s) {  // +-diag(1, -1)
    return ExactMatrix::diagonal({GaussRational(s), GaussRational(-s)});
}

}  // namespace detail

/**
 * One representative per case and sign choice of the isolated-point
 * analysis, grouped by case:
 *   0: x, y, z reflections                      (3 points)
 *   1: x scalar, y, z reflections               (2 points)
 *   2: y scalar, x, z reflections               (2 points)
 *   3: x reflection, y, z scalars               (4 points)
 *   4: y reflection, x, z scalars               (4 points)
 *   5: x, y, z scalars                          (8 points)
 *   6: z reflection, x, y scalars               (4 points)
 * The eighth case (z scalar, x and y reflections) is the pair of
 * one-parameter families and is excluded here.
 */
inline std::vector<std::vector<Rep2Point>> isolated_point_cases() {
    using detail::reflection;
    using detail::sign_matrix;
    ExactMatrix d = reflection(1);
    std::vector<std::vector<Rep2Point>> cases(7);
    // x, y, z reflections, not all equal: (Tr xy, Tr xz, Tr yz) as listed.
    cases[0].emplace_back(d, d, -d);
    cases[0].emplace_back(d, -d, d);
    cases[0].emplace_back(-d, d, d);
    // x scalar; y, z commuting reflections, sign choices linked.
    cases[1].emplace_back(sign_matrix(1), d, d);
    cases[1].emplace_back(sign_matrix(-1), d, -d);
    // y scalar; x, z commuting reflections, sign choices linked.
    cases[2].emplace_back(d, sign_matrix(1), d);
    cases[2].emplace_back(d, sign_matrix(-1), -d);
    // x reflection; y, z scalars (all four sign choices).
    for (int sy : {1, -1})
        for (int sz : {1, -1}) cases[3].emplace_back(d, sign_matrix(sy), sign_matrix(sz));
    // y reflection; x, z scalars.
    for (int sx : {1, -1})
        for (int sz : {1, -1}) cases[4].emplace_back(sign_matrix(sx), d, sign_matrix(sz));
    // x, y, z scalars.
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                cases[5].emplace_back(sign_matrix(sx), sign_matrix(sy), sign_matrix(sz));
    // z reflection; x, y scalars.
    for (int sx : {1, -1})
        for (int sy : {1, -1}) cases[6].emplace_back(sign_matrix(sx), sign_matrix(sy), d);
    return cases;
}

/// The catalog of isolated moduli points: deduplicated trace tuples of the
/// case representatives, sorted lexicographically. Exactly 27 tuples.
inline std::vector<TraceTuple> enumerate_isolated_points() {
    std::vector<TraceTuple> out;
    for (const auto& grp : isolated_point_cases())
        for (const auto& p : grp) out.push_back(trace_tuple(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// A representative of the one-parameter family with z = (sign) I,
/// x = diag(1,-1), and y the reflection with Tr(xy) = s (so y = y(c), s = 2c).
inline Rep2Point family_point(int sign, const GaussRational& s) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("family_point: sign must be +-1");
    GaussRational c = GaussRational(Rational(1, 2)) * s;
    ExactMatrix y(2, 2);
    y(0, 0) = c;
    y(0, 1) = GaussRational(1);
    y(1, 0) = GaussRational(1) - c * c;
    y(1, 1) = -c;
    return Rep2Point(detail::reflection(1), std::move(y), detail::sign_matrix(sign));
}

/// Restriction to P: with g = xy, the coordinates (Tr g, Tr g^2, Tr z).
inline std::tuple<GaussRational, GaussRational, GaussRational> restrict_to_p(const Rep2Point& p) {
    ExactMatrix g = p.x_img() * p.y_img();
    return {g.trace(), (g * g).trace(), p.z_img().trace()};
}

enum class ModuliComponent { UMinus, UZero, UPlus };

inline const char* to_string(ModuliComponent c) {
    switch (c) {
        case ModuliComponent::UMinus: return "U-";
        case ModuliComponent::UZero: return "U0";
        case ModuliComponent::UPlus: return "U+";
    }
    return "?";
}

struct ComponentReport {
    ModuliComponent component;
    GaussRational tr_g, tr_g2;
};

/// Component of M_2(CP) under the restriction map, indexed by Tr z, with the
/// open condition (Tr g)^2 - Tr g^2 != 0 checked (it encodes det g != 0).
inline ComponentReport moduli_component(const Rep2Point& p) {
    auto [tg, tg2, tz] = restrict_to_p(p);
    if (tg * tg - tg2 == GaussRational(0))
        throw std::logic_error("moduli_component: (Tr g)^2 - Tr g^2 = 0 (g not invertible?)");
    ModuliComponent c;
    if (tz == GaussRational(2))
        c = ModuliComponent::UPlus;
    else if (tz == GaussRational(-2))
        c = ModuliComponent::UMinus;
    else if (tz == GaussRational(0))
        c = ModuliComponent::UZero;
    else
        throw std::logic_error("moduli_component: Tr z outside {-2, 0, 2}");
    return ComponentReport{c, tg, tg2};
}

/// Common eigenbasis of two commuting exact involutions: a basis in which
/// both act diagonally with entries +-1.
inline ExactMatrix simultaneous_involution_basis(const ExactMatrix& a, const ExactMatrix& b) {
    std::size_t n = a.rows();
    ExactMatrix id = ExactMatrix::identity(n);
    if (a * a != id || b * b != id || a * b != b * a)
        throw std::invalid_argument("simultaneous_involution_basis: need commuting involutions");
    std::vector<std::vector<GaussRational>> columns;
    for (int sa : {1, -1}) {
        ExactMatrix pa = a - GaussRational(sa) * id;
        for (int sb : {1, -1}) {
            Subspace joint = kernel(vstack(pa, b - GaussRational(sb) * id));
            for (const auto& v : joint.basis()) columns.push_back(v);
        }
    }
    ExactMatrix t = matrix_from_columns(columns);
    if (t.cols() != n) throw std::logic_error("simultaneous_involution_basis: basis incomplete");
    ExactMatrix ti = inverse(t);
    ExactMatrix da = ti * a * t, db = ti * b * t;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c && (!da(r, c).is_zero() || !db(r, c).is_zero()))
                throw std::logic_error("simultaneous_involution_basis: not diagonalized");
    return t;
}

/// All 64 representations with x, y, z in {+-I, +-diag(1,-1)} (commuting
/// sign patterns); the brute-force ground truth behind the catalog audit.
inline std::vector<Rep2Point> all_diagonal_sign_reps() {
    std::vector<ExactMatrix> choices = {detail::sign_matrix(1), detail::sign_matrix(-1),
                                        detail::reflection(1), detail::reflection(-1)};
    std::vector<Rep2Point> out;
    for (const auto& x : choices)
        for (const auto& y : choices)
            for (const auto& z : choices) out.emplace_back(x, y, z);
    return out;
}

struct CatalogAudit {
    std::vector<TraceTuple> catalog;         // the 27 listed isolated points
    std::vector<TraceTuple> on_families;     // sign classes lying on the families
    std::vector<TraceTuple> beyond_catalog;  // sign classes the case counts omit
};

/// Classify every commuting-sign semisimplification class against the
/// catalog. Classes of family shape (Tr x = Tr y = 0, Tr z = +-2,
/// Tr xz = Tr yz = 0) are the s = +-2 members of the one-parameter families;
/// anything else missing from the catalog is reported, not absorbed.
inline CatalogAudit audit_sign_classes() {
    CatalogAudit audit;
    audit.catalog = enumerate_isolated_points();
    std::vector<TraceTuple> classes;
    for (const auto& p : all_diagonal_sign_reps()) classes.push_back(trace_tuple(p));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    GaussRational zero(0);
    for (const auto& t : classes) {
        if (std::binary_search(audit.catalog.begin(), audit.catalog.end(), t)) continue;
        bool family_shape = t.tr_x == zero && t.tr_y == zero &&
                            (t.tr_z == GaussRational(2) || t.tr_z == GaussRational(-2)) &&
                            t.tr_xz == zero && t.tr_yz == zero;
        (family_shape ? audit.on_families : audit.beyond_catalog).push_back(t);
    }
    return audit;
}

}  // namespace opgraph
