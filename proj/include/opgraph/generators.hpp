/**
 * @file generators.hpp
 * @brief The 4x4 generator matrices X, Y, Z of the operator subspace L_theta,
 *        and the commuting diagonal sign matrices of the Klein model.
 */

#pragma once

#include "opgraph/matrix.hpp"

namespace opgraph {

struct ThetaGenerators {
    ExactMatrix x, y, z;
};

/// X, Y, Z with X swapping (1 2)(3 4), Z the antidiagonal, and Y carrying
/// the theta / 1/theta weights. Requires theta != 0.
inline ThetaGenerators theta_generators(const GaussRational& theta) {
    if (theta.is_zero()) throw std::domain_error("theta must be nonzero");
    GaussRational one(1), inv = theta.inverse();
    ExactMatrix x(4, 4), y(4, 4), z(4, 4);
    x(0, 1) = one; x(1, 0) = one; x(2, 3) = one; x(3, 2) = one;
    y(0, 2) = theta; y(1, 3) = inv; y(2, 0) = inv; y(3, 1) = theta;
    z(0, 3) = one; z(1, 2) = one; z(2, 1) = one; z(3, 0) = one;
    return {std::move(x), std::move(y), std::move(z)};
}

/// a*I + b*X + c*Y + d*Z, the general element of L_theta.
inline ExactMatrix ltheta_element(const GaussRational& a, const GaussRational& b,
                                  const GaussRational& c, const GaussRational& d,
                                  const GaussRational& theta) {
    ThetaGenerators g = theta_generators(theta);
    return a * ExactMatrix::identity(4) + b * g.x + c * g.y + d * g.z;
}

// Diagonal sign matrices of the standard faithful Klein-group representation;
// the dephasing channel is built from these.
inline ExactMatrix klein_x() {
    return ExactMatrix::diagonal({GaussRational(1), GaussRational(-1), GaussRational(1), GaussRational(-1)});
}
inline ExactMatrix klein_y() {
    return ExactMatrix::diagonal({GaussRational(1), GaussRational(-1), GaussRational(-1), GaussRational(1)});
}
inline ExactMatrix klein_z() {
    return ExactMatrix::diagonal({GaussRational(1), GaussRational(1), GaussRational(-1), GaussRational(-1)});
}

}  // namespace opgraph
