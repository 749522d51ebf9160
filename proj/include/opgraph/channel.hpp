/**
 * @file channel.hpp
 * @brief Kraus channels, the dephasing channel over the Klein sign matrices,
 *        noncommutative graphs span(V_j* V_k), and membership in the operator
 *        subspace L_theta.
 *
 * Kraus operators are stored factored as (matrix, positive rational weight)
 * with the physical operator sqrt(weight) * matrix. Every check the library
 * makes (trace preservation, channel action, graph span) depends only on the
 * weight, so square roots never leave Q(i).
 */

#pragma once

#include "opgraph/generators.hpp"
#include "opgraph/linalg.hpp"

#include <optional>
#include <vector>

namespace opgraph {

struct WeightedKraus {
    ExactMatrix matrix;
    Rational weight;  // the physical operator is sqrt(weight) * matrix
};

/// A channel in Kraus form. Trace preservation
/// sum_k w_k M_k* M_k = I is verified exactly on construction.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<WeightedKraus> ops) : ops_(std::move(ops)) {
        if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
        dim_ = ops_.front().matrix.rows();
        ExactMatrix sum(dim_, dim_);
        for (const auto& op : ops_) {
            if (!op.matrix.is_square() || op.matrix.rows() != dim_)
                throw std::invalid_argument("KrausChannel: operators must be square, same size");
            if (op.weight < 0) throw std::invalid_argument("KrausChannel: negative weight");
            sum += GaussRational(op.weight) *
                   (op.matrix.conjugate_transpose() * op.matrix);
        }
        if (sum != ExactMatrix::identity(dim_))
            throw std::invalid_argument("KrausChannel: sum w V*V = I violated");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<WeightedKraus>& ops() const { return ops_; }

private:
    std::vector<WeightedKraus> ops_;
    std::size_t dim_ = 0;
};

/// Phi(rho) = (1-a-b) rho + a x rho x + b y rho y over the diagonal Klein
/// sign matrices; requires a, b >= 0 and a + b <= 1.
inline KrausChannel dephasing_channel(const Rational& alpha, const Rational& beta) {
    if (alpha < 0 || beta < 0 || alpha + beta > 1)
        throw std::domain_error("dephasing_channel: need alpha, beta >= 0 and alpha + beta <= 1");
    std::vector<WeightedKraus> ops;
    ops.push_back({ExactMatrix::identity(4), Rational(1) - alpha - beta});
    ops.push_back({klein_x(), alpha});
    ops.push_back({klein_y(), beta});
    return KrausChannel(std::move(ops));
}

/// Phi(rho) = sum_k w_k M_k rho M_k*.
inline ExactMatrix apply_channel(const KrausChannel& ch, const ExactMatrix& rho) {
    if (!rho.is_square() || rho.rows() != ch.dim())
        throw std::invalid_argument("apply_channel: state size mismatch");
    ExactMatrix out(ch.dim(), ch.dim());
    for (const auto& op : ch.ops()) {
        if (op.weight == 0) continue;
        out += GaussRational(op.weight) * (op.matrix * rho * op.matrix.conjugate_transpose());
    }
    return out;
}

/// The noncommutative graph span{V_j* V_k} over operators of strictly
/// positive weight (weights scale but never change the span).
inline Subspace noncommutative_graph(const KrausChannel& ch) {
    std::size_t nn = ch.dim() * ch.dim();
    std::vector<std::vector<GaussRational>> vecs;
    for (const auto& a : ch.ops()) {
        if (a.weight == 0) continue;
        for (const auto& b : ch.ops()) {
            if (b.weight == 0) continue;
            vecs.push_back((a.matrix.conjugate_transpose() * b.matrix).vectorize());
        }
    }
    return Subspace::from_vectors(nn, vecs);
}

/// The operator subspace L_theta = {aI + bX + cY + dZ} as a canonical
/// subspace of the vectorized 4x4 matrices. Contains I by construction.
class LThetaSpace {
public:
    explicit LThetaSpace(GaussRational theta)
        : theta_(std::move(theta)), span_(16) {
        ThetaGenerators g = theta_generators(theta_);
        span_ = Subspace::from_vectors(
            16, {ExactMatrix::identity(4).vectorize(), g.x.vectorize(), g.y.vectorize(),
                 g.z.vectorize()});
        if (span_.dim() != 4) throw std::logic_error("LThetaSpace: basis is not independent");
    }

    const GaussRational& theta() const { return theta_; }
    const Subspace& span() const { return span_; }
    std::size_t dim() const { return span_.dim(); }

private:
    GaussRational theta_;
    Subspace span_;
};

/// Coefficients (a, b, c, d) with m = aI + bX + cY + dZ, if m lies in
/// L_theta; nullopt otherwise.
inline std::optional<std::array<GaussRational, 4>> l_theta_membership(
    const ExactMatrix& m, const GaussRational& theta) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("l_theta_membership: matrix must be 4x4");
    ThetaGenerators g = theta_generators(theta);
    auto sol = solve(matrix_from_columns({ExactMatrix::identity(4).vectorize(), g.x.vectorize(),
                                          g.y.vectorize(), g.z.vectorize()}),
                     m.vectorize());
    if (!sol) return std::nullopt;
    return std::array<GaussRational, 4>{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

/// True iff the noncommutative graph of the dephasing channel equals the
/// span of {I, x, y, xy} (the Klein-group image). Requires the interior
/// parameter range 0 < alpha, 0 < beta, alpha + beta < 1, so that no Kraus
/// operator drops out of the graph.
inline bool graph_matches_klein(const Rational& alpha, const Rational& beta) {
    if (alpha <= 0 || beta <= 0 || alpha + beta >= 1)
        throw std::domain_error("graph_matches_klein: need 0 < alpha, beta with alpha + beta < 1");
    Subspace graph = noncommutative_graph(dephasing_channel(alpha, beta));
    Subspace klein = Subspace::from_vectors(
        16, {ExactMatrix::identity(4).vectorize(), klein_x().vectorize(), klein_y().vectorize(),
             (klein_x() * klein_y()).vectorize()});
    return graph == klein;
}

}  // namespace opgraph
