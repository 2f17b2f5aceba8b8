#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "g2s6/equator.hpp"

namespace g2s6 {

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix5 = Eigen::Matrix<double, 5, 5>;

/// First column of the closed-form transition matrix, as a map of R^6:
/// (u, v, w) -> (u^2, uv - conj(w), uw + conj(v)).
Vector6 pi_theta(const Vector6& z);

Vector6 to_vector6(const EquatorPoint& z);
EquatorPoint to_equator_point(const Vector6& z);

/// Positively oriented orthonormal basis of the tangent space at p in S^5:
/// Gram-Schmidt on the standard axes minus the largest-|component| one, with
/// the last two vectors swapped if needed so that det[p | basis] > 0.
std::array<Vector6, 5> tangent_basis(const Vector6& p);

struct DegreeReport {
    struct Preimage {
        Vector6 point;
        double jacobian_det = 0.0;
        int sign = 0;
    };
    std::vector<Preimage> preimages;
    int degree = 0;
};

/// Mapping degree of pi . theta at the given regular value by signed
/// preimage count. The value must be near (1, 0, 0): preimages are the
/// exact pair +-(1,0,0) for the value itself, or Gauss-Newton refinements
/// seeded there for perturbed values. Jacobians are 5x5 central differences
/// in oriented orthonormal tangent charts.
/// Throws SingularJacobian when |det| < 1e-6 at a preimage, NotUnit for a
/// non-unit value.
DegreeReport compute_degree(const EquatorPoint& value = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                            double fd_step = 1e-5);

int degree_pi_theta(const EquatorPoint& value = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                    double fd_step = 1e-5);

} // namespace g2s6
