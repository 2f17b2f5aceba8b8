#pragma once

#include <complex>

#include <Eigen/Dense>

#include "g2s6/errors.hpp"
#include "g2s6/random.hpp"
#include "json.hpp"

namespace g2s6 {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;

/// true iff max|M^dagger M - I| < tol and |det(M) - 1| < tol.
bool su3_check(const Matrix3c& m, double tol);

/// A 3x3 complex matrix validated to be special unitary.
class SU3Matrix {
  public:
    /// Throws NonUnitary if su3_check fails at tol (default 1e-8).
    static SU3Matrix checked(const Matrix3c& m, double tol = 1e-8);

    static SU3Matrix identity() { return SU3Matrix(Matrix3c::Identity()); }

    const Matrix3c& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    nlohmann::json to_json() const; // {"rows": [[[re,im] x3] x3]}
    static SU3Matrix from_json(const nlohmann::json& j, double tol = 1e-8);

  private:
    explicit SU3Matrix(const Matrix3c& m) : m_(m) {}
    Matrix3c m_;
};

inline double max_abs_diff(const Matrix3c& a, const Matrix3c& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Haar-ish random special unitary matrix (Gaussian QR with phase fixing).
SU3Matrix random_su3(Rng& rng);

} // namespace g2s6
