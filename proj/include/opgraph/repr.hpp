/**
 * @file repr.hpp
 * @brief Characters of CP, induced 2-dimensional modules, generalized
 *        eigenspaces V_chi(k), the exact block decomposition of phi, and the
 *        Klein-character decomposition at theta = +-1.
 */

#pragma once

#include "opgraph/atheta.hpp"
#include "opgraph/linalg.hpp"
#include "opgraph/polynomial.hpp"

#include <map>
#include <vector>

namespace opgraph {

/// A point of Spec CP: (chi(g) nonzero, chi(z) = +-1).
struct PCharacter {
    GaussRational g_val;
    int z_val;

    PCharacter(GaussRational g, int z) : g_val(std::move(g)), z_val(z) {
        if (g_val.is_zero()) throw std::invalid_argument("PCharacter: chi(g) must be nonzero");
        if (z_val != 1 && z_val != -1)
            throw std::invalid_argument("PCharacter: chi(z) must be +-1");
    }

    /// c_x(chi): g -> g^-1 with the same z-value.
    PCharacter inverse() const { return PCharacter(g_val.inverse(), z_val); }

    friend bool operator==(const PCharacter& a, const PCharacter& b) {
        return a.g_val == b.g_val && a.z_val == b.z_val;
    }
    friend bool operator!=(const PCharacter& a, const PCharacter& b) { return !(a == b); }

    std::string to_string() const {
        return g_val.to_string() + "," + (z_val > 0 ? "+1" : "-1");
    }

    static PCharacter parse(std::string_view text) {
        auto comma = text.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("PCharacter: expected \"g,+1\" or \"g,-1\"");
        GaussRational g = parse_scalar(text.substr(0, comma));
        std::string zs(text.substr(comma + 1));
        std::erase_if(zs, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        int z;
        if (zs == "+1" || zs == "1")
            z = 1;
        else if (zs == "-1")
            z = -1;
        else
            throw std::invalid_argument("PCharacter: bad z value: " + zs);
        return PCharacter(g, z);
    }
};

/// A point of Spec C: (value at u = g + g^-1, value at z).
struct CCharacter {
    GaussRational u_val;
    int z_val;
};

/// pr: Spec CP -> Spec C, (a, s) -> (a + a^-1, s).
inline CCharacter project_to_center_character(const PCharacter& chi) {
    return CCharacter{chi.g_val + chi.g_val.inverse(), chi.z_val};
}

/**
 * A representation of G given by the images of x, z, g. The constructor
 * verifies the defining relations exactly, so invalid representations
 * cannot be built.
 */
class MatrixRepresentation {
public:
    MatrixRepresentation(ExactMatrix x, ExactMatrix z, ExactMatrix g)
        : x_(std::move(x)), z_(std::move(z)), g_(std::move(g)) {
        std::size_t n = x_.rows();
        if (!x_.is_square() || !z_.is_square() || !g_.is_square() || z_.rows() != n ||
            g_.rows() != n)
            throw std::invalid_argument("MatrixRepresentation: images must be square, same size");
        ExactMatrix id = ExactMatrix::identity(n);
        if (x_ * x_ != id || z_ * z_ != id)
            throw std::invalid_argument("MatrixRepresentation: x^2 = z^2 = 1 violated");
        if (x_ * z_ != z_ * x_ || g_ * z_ != z_ * g_)
            throw std::invalid_argument("MatrixRepresentation: z is not central");
        if (x_ * g_ * x_ * g_ != id)
            throw std::invalid_argument("MatrixRepresentation: xgx = g^-1 violated");
    }

    std::size_t dim() const { return x_.rows(); }
    const ExactMatrix& image_x() const { return x_; }
    const ExactMatrix& image_z() const { return z_; }
    const ExactMatrix& image_g() const { return g_; }

    /// g^-1 = x g x, so negative powers need no matrix inversion.
    ExactMatrix image_of_word(const GroupWord& w) const {
        ExactMatrix m = w.g_exp >= 0
                            ? g_.pow(static_cast<unsigned long>(w.g_exp))
                            : (x_ * g_ * x_).pow(static_cast<unsigned long>(-w.g_exp));
        if (w.z_bit) m = m * z_;
        if (w.x_bit) m = m * x_;
        return m;
    }

    ExactMatrix image_of(const GroupAlgElement& e) const {
        ExactMatrix out(dim(), dim());
        for (const auto& [w, c] : e.terms()) out += c * image_of_word(w);
        return out;
    }

    static MatrixRepresentation direct_sum(const MatrixRepresentation& a,
                                           const MatrixRepresentation& b) {
        return MatrixRepresentation(block_diagonal(a.x_, b.x_), block_diagonal(a.z_, b.z_),
                                    block_diagonal(a.g_, b.g_));
    }

    MatrixRepresentation conjugate(const ExactMatrix& t) const {
        ExactMatrix ti = inverse(t);
        return MatrixRepresentation(ti * x_ * t, ti * z_ * t, ti * g_ * t);
    }

private:
    ExactMatrix x_, z_, g_;
};

/// The induced module W_chi = CG (x)_{CP} C^chi in its standard matrix model:
/// g -> diag(chi(g), chi(g)^-1), x -> swap, z -> chi(z) I.
inline MatrixRepresentation induced_module(const PCharacter& chi) {
    ExactMatrix x(2, 2), z(2, 2), g(2, 2);
    x(0, 1) = GaussRational(1);
    x(1, 0) = GaussRational(1);
    z(0, 0) = GaussRational(chi.z_val);
    z(1, 1) = GaussRational(chi.z_val);
    g(0, 0) = chi.g_val;
    g(1, 1) = chi.g_val.inverse();
    return MatrixRepresentation(std::move(x), std::move(z), std::move(g));
}

/// phi as a validated representation: x -> X, z -> Z, g -> XY.
inline MatrixRepresentation phi_representation(const GaussRational& theta) {
    ThetaGenerators gen = theta_generators(theta);
    return MatrixRepresentation(gen.x, gen.z, gen.x * gen.y);
}

/// V_chi(k) = {v : (g - chi(g))^k v = 0, (z - chi(z)) v = 0}.
inline Subspace v_chi_k(const MatrixRepresentation& rep, const PCharacter& chi, unsigned k) {
    if (k == 0) throw std::invalid_argument("v_chi_k: k must be >= 1");
    std::size_t n = rep.dim();
    ExactMatrix gshift = rep.image_g() - chi.g_val * ExactMatrix::identity(n);
    ExactMatrix zshift = rep.image_z() - GaussRational(chi.z_val) * ExactMatrix::identity(n);
    return kernel(vstack(gshift.pow(k), zshift));
}

/// Characteristic polynomial by exact expansion of det(t I - m) via the
/// Faddeev-LeVerrier recurrence.
inline Poly characteristic_polynomial(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial: square only");
    std::size_t n = m.rows();
    std::vector<GaussRational> c(n + 1);
    c[n] = GaussRational(1);
    ExactMatrix mk = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        GaussRational ck = -(GaussRational(Rational(1, static_cast<int>(k))) * mk.trace());
        c[n - k] = ck;
        for (std::size_t d = 0; d < n; ++d) mk(d, d) += ck;
    }
    return c;
}

/**
 * The sublist of candidates chi with V_chi(1) != 0. The candidate list must
 * cover every eigenvalue of the g-image lying in Q(i); an uncovered or
 * out-of-field eigenvalue is reported as an error since exact eigenvalue
 * extraction outside Q(i) is unsupported.
 */
inline std::vector<PCharacter> char_set(const MatrixRepresentation& rep,
                                        const std::vector<PCharacter>& candidates) {
    RootExtraction roots = extract_roots(characteristic_polynomial(rep.image_g()));
    if (!roots.fully_split())
        throw std::domain_error("char_set: g-image has eigenvalues outside the ground field");
    for (const auto& r : roots.roots) {
        bool covered = false;
        for (const auto& chi : candidates)
            if (chi.g_val == r) covered = true;
        if (!covered)
            throw std::domain_error("char_set: eigenvalue " + r.to_string() +
                                    " of the g-image is not covered by candidates");
    }
    std::vector<PCharacter> out;
    for (const auto& chi : candidates)
        if (v_chi_k(rep, chi, 1).dim() > 0) out.push_back(chi);
    return out;
}

/// Dimension of {m : m commutes with the images of x, z, g}.
inline std::size_t commutant_dimension(const MatrixRepresentation& rep) {
    std::size_t n = rep.dim(), nn = n * n;
    const ExactMatrix words[3] = {rep.image_x(), rep.image_z(), rep.image_g()};
    ExactMatrix stacked(3 * nn, nn);
    for (std::size_t wi = 0; wi < 3; ++wi) {
        const ExactMatrix& w = words[wi];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                ExactMatrix e(n, n);
                e(r, c) = GaussRational(1);
                std::vector<GaussRational> comm = (e * w - w * e).vectorize();
                for (std::size_t k = 0; k < nn; ++k)
                    stacked(wi * nn + k, r * n + c) = comm[k];
            }
    }
    return kernel(stacked).dim();
}

/// Irreducibility via the commutant criterion: commutant = scalars.
inline bool is_irreducible(const MatrixRepresentation& rep) {
    return commutant_dimension(rep) == 1;
}

// ---------------------------------------------------------------------------
// Exact decomposition of phi for theta != 0, +-1.
// ---------------------------------------------------------------------------

struct PhiDecomposition {
    GaussRational theta;
    ExactMatrix transform;  // T with T^-1 phi(w) T = diag(W_chi1(w), W_chi2(w))
    PCharacter chi1, chi2;
};

/**
 * Builds T from eigenvectors of XY paired by the Z-eigenvalue and normalized
 * so that the conjugated blocks equal induced_module(chi1) and
 * induced_module(chi2) entry-wise (not merely up to equivalence); the
 * conjugation identities are verified before returning.
 */
inline PhiDecomposition decompose_phi(const GaussRational& theta) {
    if (theta.is_zero()) throw std::domain_error("decompose_phi: theta must be nonzero");
    if (theta == GaussRational(1) || theta == GaussRational(-1))
        throw std::domain_error("decompose_phi: theta = +-1 degenerates (use klein_decompose)");

    MatrixRepresentation rep = phi_representation(theta);
    PCharacter chi1(theta, 1), chi2(-theta, -1);

    auto line = [&](const PCharacter& chi) {
        Subspace s = v_chi_k(rep, chi, 1);
        if (s.dim() != 1) throw std::logic_error("decompose_phi: eigenline is not 1-dimensional");
        return s.basis().front();
    };
    std::vector<GaussRational> v1 = line(chi1);
    std::vector<GaussRational> v2 = rep.image_x().apply(v1);
    std::vector<GaussRational> v3 = line(chi2);
    std::vector<GaussRational> v4 = rep.image_x().apply(v3);
    ExactMatrix t = matrix_from_columns({v1, v2, v3, v4});
    ExactMatrix ti = inverse(t);

    MatrixRepresentation w1 = induced_module(chi1), w2 = induced_module(chi2);
    const ExactMatrix expected[3] = {block_diagonal(w1.image_x(), w2.image_x()),
                                     block_diagonal(w1.image_z(), w2.image_z()),
                                     block_diagonal(w1.image_g(), w2.image_g())};
    const ExactMatrix actual[3] = {ti * rep.image_x() * t, ti * rep.image_z() * t,
                                   ti * rep.image_g() * t};
    for (int k = 0; k < 3; ++k)
        if (actual[k] != expected[k])
            throw std::logic_error("decompose_phi: conjugated images do not match the blocks");
    return PhiDecomposition{theta, std::move(t), chi1, chi2};
}

// ---------------------------------------------------------------------------
// Klein degeneration at theta = +-1.
// ---------------------------------------------------------------------------

struct KleinLine {
    int x_sign;  // eigenvalue of X
    int y_sign;  // eigenvalue of the Klein generator image (Y at +1, -Y at -1)
    int z_sign;  // eigenvalue of Z
    std::vector<GaussRational> vec;
};

/**
 * Simultaneous eigenbasis of X, Y, Z at theta = +-1 with the four character
 * sign patterns, each of multiplicity one. Verifies that the images commute
 * and that Z = XY at theta = 1, Z = -XY at theta = -1.
 */
inline std::vector<KleinLine> klein_decompose(const GaussRational& theta) {
    bool plus = theta == GaussRational(1);
    if (!plus && theta != GaussRational(-1))
        throw std::domain_error("klein_decompose: theta must be +-1");
    ThetaGenerators gen = theta_generators(theta);
    if (!(gen.x.commutes_with(gen.y) && gen.x.commutes_with(gen.z) &&
          gen.y.commutes_with(gen.z)))
        throw std::logic_error("klein_decompose: images do not commute");
    ExactMatrix xy = gen.x * gen.y;
    if (plus ? gen.z != xy : gen.z != -xy)
        throw std::logic_error("klein_decompose: Z = +-XY identity fails");

    auto scaled = [](int f, const std::vector<GaussRational>& v) {
        std::vector<GaussRational> out;
        out.reserve(v.size());
        for (const auto& e : v) out.push_back(GaussRational(f) * e);
        return out;
    };
    ExactMatrix klein_y_image = plus ? gen.y : -gen.y;
    std::vector<KleinLine> out;
    for (int s : {1, -1})
        for (int t : {1, -1}) {
            std::vector<GaussRational> v = {GaussRational(1), GaussRational(s), GaussRational(t),
                                            GaussRational(s * t)};
            if (gen.x.apply(v) != scaled(s, v) || klein_y_image.apply(v) != scaled(t, v) ||
                gen.z.apply(v) != scaled(s * t, v))
                throw std::logic_error("klein_decompose: eigenvector verification failed");
            out.push_back(KleinLine{s, t, s * t, std::move(v)});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Constructive Mat_2 (+) Mat_2 certification of A_theta.
// ---------------------------------------------------------------------------

struct Mat2Certificate {
    PCharacter chi1, chi2;
    bool homomorphism = false;   // products of basis images match image of products
    bool descends = false;       // both modules kill (g + g^-1) z - b
    std::size_t rank = 0;        // of the 8x8 map A_theta -> Mat_2 (+) Mat_2
    bool is_isomorphism() const { return homomorphism && descends && rank == 8; }
};

/**
 * The explicit algebra map A_theta -> Mat_2 (+) Mat_2 given by the induced
 * modules at (theta, +1) and (-theta, -1). Certifies the Mat_2 (+) Mat_2
 * identification constructively, never from dimensions alone.
 */
inline Mat2Certificate atheta_mat2_certificate(const GaussRational& theta) {
    if (theta == GaussRational(1) || theta == GaussRational(-1))
        throw std::domain_error("atheta_mat2_certificate: requires theta != +-1");
    PCharacter chi1(theta, 1), chi2(-theta, -1);
    MatrixRepresentation w1 = induced_module(chi1), w2 = induced_module(chi2);
    Mat2Certificate cert{chi1, chi2};

    GroupAlgElement rel = v_element();  // (g + g^-1) z
    GaussRational b = atheta_b(theta);
    cert.descends = w1.image_of(rel) == b * ExactMatrix::identity(2) &&
                    w2.image_of(rel) == b * ExactMatrix::identity(2);

    auto words = atheta_basis_words(b.is_zero());
    std::vector<std::vector<GaussRational>> cols;
    for (const auto& w : words) {
        std::vector<GaussRational> col = w1.image_of_word(w).vectorize();
        for (const auto& e : w2.image_of_word(w).vectorize()) col.push_back(e);
        cols.push_back(std::move(col));
    }
    cert.rank = rank(matrix_from_columns(cols));

    cert.homomorphism = true;
    for (std::size_t i = 0; i < 8 && cert.homomorphism; ++i)
        for (std::size_t j = 0; j < 8 && cert.homomorphism; ++j) {
            AThetaElement prod = AThetaElement::basis_element(theta, i) *
                                 AThetaElement::basis_element(theta, j);
            GroupAlgElement lift = atheta_lift(prod);
            if (w1.image_of_word(words[i]) * w1.image_of_word(words[j]) != w1.image_of(lift) ||
                w2.image_of_word(words[i]) * w2.image_of_word(words[j]) != w2.image_of(lift))
                cert.homomorphism = false;
        }
    return cert;
}

/// The default 12-point character grid used by the verification suites.
inline std::vector<PCharacter> default_character_grid() {
    std::vector<PCharacter> grid;
    for (const auto& g :
         {GaussRational(1), GaussRational(-1), GaussRational(2), GaussRational(Rational(1, 2)),
          GaussRational(3), GaussRational::i()})
        for (int z : {1, -1}) grid.emplace_back(g, z);
    return grid;
}

}  // namespace opgraph
