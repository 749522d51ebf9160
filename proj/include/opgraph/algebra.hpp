/**
 * @file algebra.hpp
 * @brief Spanned matrix subalgebras and their structure: closure of a
 *        generating set under multiplication, center, Dickson radical,
 *        nilpotent-ideal tests, and Wedderburn-style structure reports.
 *
 * The radical is computed by Dickson's criterion on the regular
 * representation: over a characteristic-zero field the Jacobson radical of a
 * finite-dimensional unital algebra is the radical of the trace form
 * (x, y) -> tr(L_x L_y). Block decompositions come from primitive central
 * idempotents, found by exactly factoring minimal polynomials of central
 * elements over Q(i); when such a polynomial fails to split over the ground
 * field the blocks are reported as unresolved rather than approximated.
 */

#pragma once

#include "opgraph/linalg.hpp"
#include "opgraph/polynomial.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace opgraph {

/**
 * A unital-or-not subalgebra of Mat_n given by a linearly independent basis
 * of matrices whose pairwise products stay inside the span.
 */
class SpannedAlgebra {
public:
    /// Smallest subalgebra containing the generators (and I when flagged).
    /// Each round multiplies the current basis by the original generators on
    /// the left; the span of all generator words is reached when no product
    /// adds dimension.
    static SpannedAlgebra close(const std::vector<ExactMatrix>& generators,
                                bool include_identity) {
        if (generators.empty() && !include_identity)
            throw std::invalid_argument("close: no generators");
        std::size_t n = include_identity && generators.empty() ? 1 : generators.front().rows();
        for (const auto& g : generators)
            if (!g.is_square() || g.rows() != n)
                throw std::invalid_argument("close: generators must be square of equal size");

        SpannedAlgebra a(n);
        if (include_identity) a.try_add(ExactMatrix::identity(n));
        for (const auto& g : generators) a.try_add(g);

        std::size_t rounds = 0;
        bool grew = true;
        while (grew) {
            grew = false;
            ++rounds;
            std::vector<ExactMatrix> snapshot = a.basis_;
            for (const auto& g : generators)
                for (const auto& b : snapshot)
                    if (a.try_add(g * b)) grew = true;
        }
        a.rounds_ = rounds;
        a.contains_identity_ = a.span_.contains(ExactMatrix::identity(n).vectorize());
        return a;
    }

    /// Wrap an already multiplicatively closed independent basis.
    static SpannedAlgebra from_closed_basis(const std::vector<ExactMatrix>& basis,
                                            bool validate = true) {
        if (basis.empty()) throw std::invalid_argument("from_closed_basis: empty basis");
        std::size_t n = basis.front().rows();
        SpannedAlgebra a(n);
        for (const auto& b : basis) {
            if (!b.is_square() || b.rows() != n)
                throw std::invalid_argument("from_closed_basis: shape mismatch");
            if (!a.try_add(b)) throw std::invalid_argument("from_closed_basis: dependent basis");
        }
        if (validate)
            for (const auto& u : basis)
                for (const auto& v : basis)
                    if (!a.contains(u * v))
                        throw std::invalid_argument("from_closed_basis: not closed under products");
        a.contains_identity_ = a.span_.contains(ExactMatrix::identity(n).vectorize());
        return a;
    }

    std::size_t ambient_n() const { return ambient_n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ExactMatrix>& basis() const { return basis_; }
    const Subspace& span() const { return span_; }
    bool contains_identity() const { return contains_identity_; }
    std::size_t closure_rounds() const { return rounds_; }

    bool contains(const ExactMatrix& m) const { return span_.contains(m.vectorize()); }

    /// Coordinates of m in the stored basis, if m lies in the span.
    std::optional<std::vector<GaussRational>> coords_of(const ExactMatrix& m) const {
        std::vector<std::vector<GaussRational>> cols;
        cols.reserve(basis_.size());
        for (const auto& b : basis_) cols.push_back(b.vectorize());
        return solve(matrix_from_columns(cols), m.vectorize());
    }

    ExactMatrix from_coords(const std::vector<GaussRational>& coords) const {
        if (coords.size() != basis_.size())
            throw std::invalid_argument("from_coords: length mismatch");
        ExactMatrix m(ambient_n_, ambient_n_);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) m += coords[k] * basis_[k];
        return m;
    }

private:
    explicit SpannedAlgebra(std::size_t n) : ambient_n_(n), span_(n * n) {}

    bool try_add(const ExactMatrix& m) {
        std::vector<GaussRational> v = m.vectorize();
        if (span_.contains(v)) return false;
        basis_.push_back(m);
        span_ = span_.join({v});
        return true;
    }

    std::size_t ambient_n_;
    std::vector<ExactMatrix> basis_;
    Subspace span_;
    bool contains_identity_ = false;
    std::size_t rounds_ = 0;
};

inline SpannedAlgebra close_algebra(const std::vector<ExactMatrix>& generators,
                                    bool include_identity) {
    return SpannedAlgebra::close(generators, include_identity);
}

/// Span equality as subspaces of the ambient matrix space.
inline bool algebras_equal(const SpannedAlgebra& a, const SpannedAlgebra& b) {
    if (a.ambient_n() != b.ambient_n())
        throw std::invalid_argument("algebras_equal: ambient size mismatch");
    return a.span() == b.span();
}

// ---------------------------------------------------------------------------
// Abstract structure-constant view, used for quotients and block splitting.
// ---------------------------------------------------------------------------

struct StructureConstants {
    std::size_t dim = 0;
    // table[i][j] = coordinates of b_i * b_j
    std::vector<std::vector<std::vector<GaussRational>>> table;
    std::vector<GaussRational> unit;  // coordinates of 1

    std::vector<GaussRational> mult(const std::vector<GaussRational>& u,
                                    const std::vector<GaussRational>& v) const {
        std::vector<GaussRational> out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                GaussRational f = u[i] * v[j];
                const auto& cij = table[i][j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!cij[k].is_zero()) out[k] += f * cij[k];
            }
        }
        return out;
    }

    ExactMatrix left_mult_matrix(const std::vector<GaussRational>& u) const {
        ExactMatrix m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<GaussRational> ej(dim);
            ej[j] = GaussRational(1);
            std::vector<GaussRational> col = mult(u, ej);
            for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
        }
        return m;
    }

    /// Gram matrix of the trace form tr(L_i L_j) of the regular representation.
    ExactMatrix trace_form_gram() const {
        std::vector<ExactMatrix> left;
        left.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<GaussRational> ei(dim);
            ei[i] = GaussRational(1);
            left.push_back(left_mult_matrix(ei));
        }
        ExactMatrix gram(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) gram(i, j) = (left[i] * left[j]).trace();
        return gram;
    }

    /// Coordinate-space center: kernel of the stacked commutator maps.
    Subspace center_coords() const {
        ExactMatrix stacked(dim * dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<GaussRational> ej(dim);
            ej[j] = GaussRational(1);
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<GaussRational> ei(dim);
                ei[i] = GaussRational(1);
                std::vector<GaussRational> comm = mult(ei, ej);
                std::vector<GaussRational> ji = mult(ej, ei);
                for (std::size_t k = 0; k < dim; ++k)
                    stacked(j * dim + k, i) = comm[k] - ji[k];
            }
        }
        return kernel(stacked);
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                if (table[i][j] != table[j][i]) return false;
        return true;
    }
};

/// Structure constants of a closed spanned algebra (products must resolve in
/// the span; contains_identity is required for a unit).
inline StructureConstants structure_constants(const SpannedAlgebra& a) {
    StructureConstants sc;
    sc.dim = a.dim();
    sc.table.assign(sc.dim, std::vector<std::vector<GaussRational>>(sc.dim));
    for (std::size_t i = 0; i < sc.dim; ++i)
        for (std::size_t j = 0; j < sc.dim; ++j) {
            auto coords = a.coords_of(a.basis()[i] * a.basis()[j]);
            if (!coords)
                throw std::invalid_argument("structure_constants: algebra is not closed");
            sc.table[i][j] = std::move(*coords);
        }
    if (a.contains_identity()) {
        auto unit = a.coords_of(ExactMatrix::identity(a.ambient_n()));
        sc.unit = std::move(*unit);
    }
    return sc;
}

/// Quotient of sc by the (two-sided ideal) coordinate subspace given in RREF.
inline StructureConstants quotient_algebra(const StructureConstants& sc, const Subspace& ideal) {
    std::vector<bool> is_pivot(sc.dim, false);
    std::vector<std::size_t> pivots;
    for (const auto& row : ideal.basis()) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        is_pivot[lead] = true;
        pivots.push_back(lead);
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < sc.dim; ++k)
        if (!is_pivot[k]) keep.push_back(k);

    auto reduce = [&](std::vector<GaussRational> v) {
        const auto& rows = ideal.basis();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const GaussRational& f = v[pivots[r]];
            if (f.is_zero()) continue;
            GaussRational fv = f;
            for (std::size_t c = 0; c < sc.dim; ++c) v[c] -= fv * rows[r][c];
        }
        std::vector<GaussRational> out(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) out[k] = v[keep[k]];
        return out;
    };

    StructureConstants q;
    q.dim = keep.size();
    q.table.assign(q.dim, std::vector<std::vector<GaussRational>>(q.dim));
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) {
            std::vector<GaussRational> ei(sc.dim), ej(sc.dim);
            ei[keep[i]] = GaussRational(1);
            ej[keep[j]] = GaussRational(1);
            q.table[i][j] = reduce(sc.mult(ei, ej));
        }
    if (!sc.unit.empty()) q.unit = reduce(sc.unit);
    return q;
}

// ---------------------------------------------------------------------------
// Center, radical, nilpotent ideals (ambient-matrix interfaces).
// ---------------------------------------------------------------------------

/// {c in span : c b = b c for every basis b}, as vectorized matrices.
inline Subspace center(const SpannedAlgebra& a) {
    std::size_t d = a.dim(), nn = a.ambient_n() * a.ambient_n();
    ExactMatrix stacked(d * nn, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            ExactMatrix comm = a.basis()[i] * a.basis()[j] - a.basis()[j] * a.basis()[i];
            std::vector<GaussRational> v = comm.vectorize();
            for (std::size_t k = 0; k < nn; ++k) stacked(j * nn + k, i) = v[k];
        }
    Subspace coords = kernel(stacked);
    std::vector<std::vector<GaussRational>> vectors;
    for (const auto& c : coords.basis()) vectors.push_back(a.from_coords(c).vectorize());
    return Subspace::from_vectors(nn, vectors);
}

/// Dickson radical: the trace-form radical of the regular representation,
/// which in characteristic zero is the Jacobson radical.
inline Subspace dickson_radical(const SpannedAlgebra& a) {
    if (!a.contains_identity())
        throw std::invalid_argument("dickson_radical: algebra must contain the identity");
    StructureConstants sc = structure_constants(a);
    Subspace coords = kernel(sc.trace_form_gram());
    std::vector<std::vector<GaussRational>> vectors;
    for (const auto& c : coords.basis()) vectors.push_back(a.from_coords(c).vectorize());
    return Subspace::from_vectors(a.ambient_n() * a.ambient_n(), vectors);
}

/// True iff j is a two-sided ideal of a and some power J^k vanishes.
inline bool is_nilpotent_ideal(const SpannedAlgebra& a, const Subspace& j) {
    std::size_t nn = a.ambient_n() * a.ambient_n();
    if (j.ambient_dim() != nn)
        throw std::invalid_argument("is_nilpotent_ideal: ambient dimension mismatch");
    for (const auto& v : j.basis())
        if (!a.span().contains(v))
            throw std::invalid_argument("is_nilpotent_ideal: subspace not contained in algebra");
    if (j.dim() == 0) return true;

    auto unvec = [&](const std::vector<GaussRational>& v) {
        return ExactMatrix::from_vector(v, a.ambient_n(), a.ambient_n());
    };
    std::vector<ExactMatrix> jb;
    for (const auto& v : j.basis()) jb.push_back(unvec(v));

    for (const auto& u : jb)
        for (const auto& b : a.basis())
            if (!j.contains((u * b).vectorize()) || !j.contains((b * u).vectorize()))
                return false;  // not a two-sided ideal

    Subspace power = j;
    for (std::size_t k = 0; k < a.dim() + 1; ++k) {
        std::vector<std::vector<GaussRational>> next;
        for (const auto& uv : power.basis())
            for (const auto& v : jb) next.push_back((unvec(uv) * v).vectorize());
        Subspace np = Subspace::from_vectors(nn, next);
        if (np.dim() == 0) return true;
        if (np == power) return false;  // stabilized nonzero
        power = np;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Block splitting via primitive central idempotents.
// ---------------------------------------------------------------------------

namespace detail {

struct Block {
    std::vector<GaussRational> idempotent;               // block unit
    std::vector<std::vector<GaussRational>> basis;       // coordinates in the parent
};

/// Minimal polynomial of the element y inside the unital span with unit e:
/// first monic dependence among e, y, y^2, ...
inline Poly minimal_polynomial(const StructureConstants& sc,
                               const std::vector<GaussRational>& y,
                               const std::vector<GaussRational>& e) {
    std::vector<std::vector<GaussRational>> powers = {e};
    std::vector<GaussRational> cur = e;
    for (std::size_t deg = 1; deg <= sc.dim + 1; ++deg) {
        cur = sc.mult(cur, y);
        auto dep = solve(matrix_from_columns(powers), cur);
        if (dep) {
            Poly p(deg + 1);
            for (std::size_t k = 0; k < deg; ++k) p[k] = -(*dep)[k];
            p[deg] = GaussRational(1);
            return p;
        }
        powers.push_back(cur);
    }
    throw std::logic_error("minimal_polynomial: no dependence found");
}

inline std::vector<std::vector<GaussRational>> independent_span(
    std::size_t dim, const std::vector<std::vector<GaussRational>>& vectors) {
    return Subspace::from_vectors(dim, vectors).basis();
}

struct SplitResult {
    std::vector<Block> blocks;
    bool fully_split = true;
};

/// Refine the trivial block of the (semisimple, unital) algebra into minimal
/// two-sided ideals by repeatedly splitting along central elements whose
/// minimal polynomial splits over Q(i).
inline SplitResult split_blocks(const StructureConstants& sc) {
    Subspace zc = sc.center_coords();
    std::vector<std::vector<GaussRational>> cand(zc.basis().begin(), zc.basis().end());
    // Fallback separators: small integer combinations of the center basis.
    for (std::size_t a = 0; a < zc.basis().size(); ++a)
        for (std::size_t b = a + 1; b < zc.basis().size(); ++b)
            for (int m = 1; m <= 3; ++m) {
                std::vector<GaussRational> v = zc.basis()[a];
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] += GaussRational(m) * zc.basis()[b][k];
                cand.push_back(std::move(v));
            }
    for (int m = 2; m <= 5; ++m) {
        std::vector<GaussRational> v(sc.dim);
        GaussRational f(1);
        for (const auto& z : zc.basis()) {
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += f * z[k];
            f *= GaussRational(m);
        }
        cand.push_back(std::move(v));
    }

    std::vector<std::vector<GaussRational>> full;
    for (std::size_t k = 0; k < sc.dim; ++k) {
        std::vector<GaussRational> ek(sc.dim);
        ek[k] = GaussRational(1);
        full.push_back(std::move(ek));
    }
    SplitResult out;
    out.blocks.push_back(Block{sc.unit, full});

    auto block_center_rank = [&](const Block& blk) {
        std::vector<std::vector<GaussRational>> restricted;
        for (const auto& z : zc.basis()) restricted.push_back(sc.mult(blk.idempotent, z));
        return Subspace::from_vectors(sc.dim, restricted).dim();
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t bi = 0; bi < out.blocks.size(); ++bi) {
            if (block_center_rank(out.blocks[bi]) <= 1) continue;
            for (const auto& z : cand) {
                const Block& blk = out.blocks[bi];
                std::vector<GaussRational> y = sc.mult(blk.idempotent, z);
                Poly mp = minimal_polynomial(sc, y, blk.idempotent);
                RootExtraction rx = extract_roots(mp);
                if (!rx.fully_split() || rx.roots.size() < 2) continue;
                // Lagrange idempotents of y inside the block.
                std::vector<Block> pieces;
                for (std::size_t m = 0; m < rx.roots.size(); ++m) {
                    std::vector<GaussRational> em = blk.idempotent;
                    for (std::size_t j = 0; j < rx.roots.size(); ++j) {
                        if (j == m) continue;
                        // em *= (y - root_j * E) / (root_m - root_j)
                        std::vector<GaussRational> factor = y;
                        for (std::size_t k = 0; k < factor.size(); ++k)
                            factor[k] -= rx.roots[j] * blk.idempotent[k];
                        GaussRational scale = (rx.roots[m] - rx.roots[j]).inverse();
                        em = sc.mult(em, factor);
                        for (auto& c : em) c *= scale;
                    }
                    std::vector<std::vector<GaussRational>> span_vecs;
                    for (const auto& b : blk.basis) span_vecs.push_back(sc.mult(em, b));
                    pieces.push_back(Block{em, independent_span(sc.dim, span_vecs)});
                }
                out.blocks.erase(out.blocks.begin() + static_cast<long>(bi));
                out.blocks.insert(out.blocks.begin() + static_cast<long>(bi), pieces.begin(),
                                  pieces.end());
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    for (const auto& blk : out.blocks)
        if (block_center_rank(blk) > 1) out.fully_split = false;
    return out;
}

/// Structure constants of a block (unital two-sided ideal) inside sc.
inline StructureConstants block_structure(const StructureConstants& sc, const Block& blk) {
    StructureConstants bs;
    bs.dim = blk.basis.size();
    bs.table.assign(bs.dim, std::vector<std::vector<GaussRational>>(bs.dim));
    ExactMatrix basis_cols = matrix_from_columns(blk.basis);
    for (std::size_t i = 0; i < bs.dim; ++i)
        for (std::size_t j = 0; j < bs.dim; ++j) {
            auto coords = solve(basis_cols, sc.mult(blk.basis[i], blk.basis[j]));
            if (!coords) throw std::logic_error("block_structure: block is not closed");
            bs.table[i][j] = std::move(*coords);
        }
    auto unit = solve(basis_cols, blk.idempotent);
    if (!unit) throw std::logic_error("block_structure: idempotent outside block");
    bs.unit = std::move(*unit);
    return bs;
}

}  // namespace detail

struct StructureReport {
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    std::size_t center_dim = 0;
    std::size_t semisimple_quotient_dim = 0;
    std::vector<std::size_t> block_dims;  // empty when the center does not split
    std::string notes;
};

/**
 * Full structure report: dimensions, Dickson radical, center, and the block
 * dimensions of the semisimple quotient obtained from primitive central
 * idempotents. Notes record per-block commutativity and trace-form
 * nondegeneracy; a Mat_2 identification is only ever *certified* elsewhere,
 * by an explicit 2-dimensional representation.
 */
inline StructureReport structure_report(const SpannedAlgebra& a) {
    if (!a.contains_identity())
        throw std::invalid_argument("structure_report: algebra must contain the identity");
    StructureReport rep;
    rep.dim = a.dim();
    StructureConstants sc = structure_constants(a);

    Subspace radical_coords = kernel(sc.trace_form_gram());
    rep.radical_dim = radical_coords.dim();
    rep.center_dim = sc.center_coords().dim();
    rep.semisimple_quotient_dim = rep.dim - rep.radical_dim;

    StructureConstants ss = rep.radical_dim == 0 ? sc : quotient_algebra(sc, radical_coords);

    std::ostringstream notes;
    detail::SplitResult split = detail::split_blocks(ss);
    if (!split.fully_split) {
        notes << "center does not split over ground field";
        rep.notes = notes.str();
        return rep;
    }
    std::vector<std::pair<std::size_t, std::string>> described;
    for (const auto& blk : split.blocks) {
        StructureConstants bs = detail::block_structure(ss, blk);
        bool comm = bs.is_commutative();
        bool nondeg = rank(bs.trace_form_gram()) == bs.dim;
        std::ostringstream d;
        d << "dim " << bs.dim << ": " << (comm ? "commutative" : "noncommutative")
          << ", trace form " << (nondeg ? "nondegenerate" : "degenerate");
        described.emplace_back(bs.dim, d.str());
    }
    std::sort(described.begin(), described.end());
    for (const auto& [d, s] : described) rep.block_dims.push_back(d);
    notes << "blocks [";
    for (std::size_t k = 0; k < described.size(); ++k)
        notes << (k ? "; " : "") << described[k].second;
    notes << "]";
    if (ss.is_commutative()) notes << "; semisimple quotient is commutative";
    rep.notes = notes.str();
    return rep;
}

}  // namespace opgraph
