/**
 * @file ext.hpp
 * @brief Ext^1 for characters of CP and for induced CG-modules, computed
 *        from the explicit two-term projective resolutions.
 *
 * The resolution of C^chi over CP is 0 -> CP(z +- 1) -> CP(z +- 1) -> C^chi
 * -> 0 with j = multiplication by (g - chi(g)) and the sign matching chi(z);
 * tensoring with CG gives the induced resolution of W_chi. Applying
 * Hom(-, target) collapses each Hom space to a finite-dimensional one:
 *
 *   over CP:  dimension 1 when the z-values agree (else 0), differential the
 *             scalar psi(g) - chi(g);
 *   over CG:  the chi(z)-eigenspace of z on W_psi, of dimension 2 when the
 *             z-values agree (else 0), differential
 *             diag(psi(g) - chi(g), psi(g)^-1 - chi(g)).
 *
 * Kernel and cokernel dimensions of these differentials are Hom and Ext^1.
 * The two-term complexes make every higher Ext^i vanish.
 */

#pragma once

#include "opgraph/linalg.hpp"
#include "opgraph/repr.hpp"

namespace opgraph {

enum class ExtBase { CP, CG };

/// An Ext computation request: the base algebra, the resolved character
/// (whose z-value fixes the sign of the projective CP(z +- 1)), and the
/// target character defining C^psi or W_psi.
struct ExtProblem {
    ExtBase base;
    PCharacter source_char;
    PCharacter target;
};

struct ExtResult {
    std::size_t hom_dim = 0;   // kernel of the boundary
    std::size_t ext1_dim = 0;  // cokernel of the boundary
    ExactMatrix boundary;      // the Hom-complex differential
};

namespace detail {

inline ExtResult ext_from_boundary(ExactMatrix boundary) {
    ExtResult out;
    std::size_t r = rank(boundary);
    out.hom_dim = boundary.cols() - r;
    out.ext1_dim = boundary.rows() - r;
    out.boundary = std::move(boundary);
    return out;
}

}  // namespace detail

/// Ext between one-dimensional CP-modules: Ext^1 = C iff chi = psi, else 0.
inline ExtResult ext_cp(const PCharacter& chi, const PCharacter& psi) {
    if (chi.z_val != psi.z_val) return detail::ext_from_boundary(ExactMatrix(0, 0));
    ExactMatrix boundary(1, 1);
    boundary(0, 0) = psi.g_val - chi.g_val;
    return detail::ext_from_boundary(std::move(boundary));
}

/// Ext between induced CG-modules W_chi, W_psi. Hom and Ext^1 are always
/// isomorphic here (the complex is two-term with equal ends), which is
/// asserted before returning.
inline ExtResult ext_cg(const PCharacter& chi, const PCharacter& psi) {
    ExtResult out;
    if (chi.z_val != psi.z_val) {
        out = detail::ext_from_boundary(ExactMatrix(0, 0));
    } else {
        ExactMatrix boundary(2, 2);
        boundary(0, 0) = psi.g_val - chi.g_val;
        boundary(1, 1) = psi.g_val.inverse() - chi.g_val;
        out = detail::ext_from_boundary(std::move(boundary));
    }
    if (out.hom_dim != out.ext1_dim)
        throw std::logic_error("ext_cg: zeroth and first cohomology must be isomorphic");
    return out;
}

inline ExtResult solve_ext(const ExtProblem& p) {
    return p.base == ExtBase::CP ? ext_cp(p.source_char, p.target)
                                 : ext_cg(p.source_char, p.target);
}

namespace detail {

/// Exactness of 0 -> CP(z±1) -j-> CP(z±1) -p-> C^chi -> 0 on a truncated
/// Laurent window, with j = multiplication by (g - j_root). The resolution
/// is exact precisely when j_root = chi(g); other roots are for corruption
/// tests.
inline bool resolution_window_exact(const PCharacter& chi, const GaussRational& j_root,
                                    long window = 8) {
    // The z-factor of CP(z±1) acts as the scalar chi(z) on the projective,
    // so the window reduces to Laurent degrees [-N, N] in g. The domain is
    // restricted to [-N, N-1] so that multiplication by (g - j_root) stays
    // inside the window.
    std::size_t dom = static_cast<std::size_t>(2 * window);
    std::size_t cod = dom + 1;
    ExactMatrix j(cod, dom);
    for (std::size_t c = 0; c < dom; ++c) {
        j(c + 1, c) = GaussRational(1);  // g^(n+1)
        j(c, c) -= j_root;               // -j_root * g^n
    }
    // p = evaluation at chi: g^n -> chi(g)^n.
    ExactMatrix p(1, cod);
    for (std::size_t c = 0; c < cod; ++c)
        p(0, c) = pow(chi.g_val, static_cast<long>(c) - window);

    if (rank(j) != dom) return false;          // j injective
    if (!(p * j).is_zero()) return false;      // p o j = 0
    Subspace kerp = kernel(p);
    if (kerp.dim() != dom) return false;
    std::vector<std::vector<GaussRational>> image_cols;
    for (std::size_t c = 0; c < dom; ++c) {
        std::vector<GaussRational> col(cod);
        for (std::size_t r = 0; r < cod; ++r) col[r] = j(r, c);
        image_cols.push_back(std::move(col));
    }
    return Subspace::from_vectors(cod, image_cols) == kerp;  // ker p = im j
}

}  // namespace detail

/// Exactness of the projective resolution of C^chi on the truncated window.
inline bool verify_resolution(const PCharacter& chi) {
    return detail::resolution_window_exact(chi, chi.g_val);
}

}  // namespace opgraph
