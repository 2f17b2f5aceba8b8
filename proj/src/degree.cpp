#include "g2s6/degree.hpp"

#include <cmath>
#include <string>

namespace g2s6 {

Vector6 to_vector6(const EquatorPoint& z) {
    Vector6 out;
    out << z.u.real(), z.u.imag(), z.v.real(), z.v.imag(), z.w.real(), z.w.imag();
    return out;
}

EquatorPoint to_equator_point(const Vector6& z) {
    return {{z[0], z[1]}, {z[2], z[3]}, {z[4], z[5]}};
}

Vector6 pi_theta(const Vector6& z) {
    const Complex u(z[0], z[1]), v(z[2], z[3]), w(z[4], z[5]);
    const Complex a = u * u;
    const Complex b = u * v - std::conj(w);
    const Complex c = u * w + std::conj(v);
    Vector6 out;
    out << a.real(), a.imag(), b.real(), b.imag(), c.real(), c.imag();
    return out;
}

std::array<Vector6, 5> tangent_basis(const Vector6& p) {
    int drop = 0;
    for (int n = 1; n < 6; ++n)
        if (std::abs(p[n]) > std::abs(p[drop])) drop = n;

    std::array<Vector6, 5> basis;
    int out = 0;
    for (int n = 0; n < 6; ++n) {
        if (n == drop) continue;
        Vector6 v = Vector6::Unit(n);
        v -= v.dot(p) * p;
        for (int m = 0; m < out; ++m) v -= v.dot(basis[m]) * basis[m];
        basis[out++] = v.normalized();
    }

    Eigen::Matrix<double, 6, 6> full;
    full.col(0) = p;
    for (int n = 0; n < 5; ++n) full.col(n + 1) = basis[n];
    if (full.determinant() < 0.0) std::swap(basis[3], basis[4]);
    return basis;
}

namespace {

Matrix5 chart_jacobian(const Vector6& p, double fd_step) {
    const Vector6 q = pi_theta(p).normalized();
    const auto basis_p = tangent_basis(p);
    const auto basis_q = tangent_basis(q);
    Matrix5 jac;
    for (int n = 0; n < 5; ++n) {
        const Vector6 plus = (p + fd_step * basis_p[n]).normalized();
        const Vector6 minus = (p - fd_step * basis_p[n]).normalized();
        const Vector6 diff = (pi_theta(plus) - pi_theta(minus)) / (2.0 * fd_step);
        for (int m = 0; m < 5; ++m) jac(m, n) = basis_q[m].dot(diff);
    }
    return jac;
}

Vector6 polish_preimage(Vector6 z, const Vector6& value, double fd_step) {
    for (int iter = 0; iter < 80; ++iter) {
        const Vector6 residual = value - pi_theta(z);
        if (residual.norm() < 1e-13) break;
        const auto basis = tangent_basis(z);
        Eigen::Matrix<double, 6, 5> jac;
        for (int n = 0; n < 5; ++n) {
            const Vector6 plus = (z + fd_step * basis[n]).normalized();
            const Vector6 minus = (z - fd_step * basis[n]).normalized();
            jac.col(n) = (pi_theta(plus) - pi_theta(minus)) / (2.0 * fd_step);
        }
        Eigen::Matrix<double, 5, 1> delta =
            jac.colPivHouseholderQr().solve(residual);
        const double step = delta.norm();
        if (step > 0.5) delta *= 0.5 / step; // damping
        for (int n = 0; n < 5; ++n) z += delta[n] * basis[n];
        z.normalize();
    }
    return z;
}

} // namespace

DegreeReport compute_degree(const EquatorPoint& value, double fd_step) {
    const Vector6 target = to_vector6(value);
    if (std::abs(target.squaredNorm() - 1.0) > 1e-9)
        throw NotUnit("degree: regular value is not on S^5");

    Vector6 seed_plus = Vector6::Unit(0);
    Vector6 seed_minus = -seed_plus;
    if ((target - seed_plus).norm() > 1e-12) {
        seed_plus = polish_preimage(seed_plus, target, fd_step);
        seed_minus = polish_preimage(seed_minus, target, fd_step);
        const double gap = (seed_plus - seed_minus).norm();
        if (gap < 1e-6)
            throw SingularJacobian("degree: polished preimages collapsed together");
        for (const auto& z : {seed_plus, seed_minus}) {
            const double miss = (pi_theta(z) - target).norm();
            if (miss > 1e-9)
                throw SingularJacobian("degree: preimage polish residual " +
                                       std::to_string(miss));
        }
    }

    DegreeReport report;
    for (const Vector6& z : {seed_plus, seed_minus}) {
        const double det = chart_jacobian(z, fd_step).determinant();
        if (std::abs(det) < 1e-6)
            throw SingularJacobian("degree: Jacobian determinant " +
                                   std::to_string(det) + " too close to zero");
        const int sign = det > 0.0 ? 1 : -1;
        report.preimages.push_back({z, det, sign});
        report.degree += sign;
    }
    return report;
}

int degree_pi_theta(const EquatorPoint& value, double fd_step) {
    return compute_degree(value, fd_step).degree;
}

} // namespace g2s6
