#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "g2s6/octonion.hpp"
#include "g2s6/random.hpp"
#include "g2s6/report.hpp"
#include "g2s6/sphere_point.hpp"
#include "json.hpp"

namespace g2s6 {

using Matrix7 = Eigen::Matrix<double, 7, 7>;

/// Default tolerance for the orthogonality preconditions of a frame triple.
inline constexpr double kFrameTol = 1e-9;

/// An automorphism of the octonions, represented by its action on the
/// seven-dimensional space of imaginary octonions (the real part is always
/// fixed). Carries the defining triple (xi, eta, zeta) = images of (i, j, e).
///
/// Every constructor validates that the matrix is orthogonal, has
/// determinant +1 and is multiplicative on all 49 imaginary basis pairs.
class G2Element {
  public:
    static G2Element identity();

    /// The unique automorphism with i -> xi, j -> eta, e -> zeta.
    /// Remaining basis images are the products k -> xi eta, f -> xi zeta,
    /// g -> eta zeta, h -> (xi eta) zeta.
    /// Throws OrthogonalityViolation naming the first inner product of
    /// (eta,xi), (zeta,xi), (zeta,eta), (zeta,xi eta) exceeding tol.
    static G2Element from_triple(const SpherePoint6& xi, const SpherePoint6& eta,
                                 const SpherePoint6& zeta, double tol = kFrameTol);

    /// Wraps a 7x7 matrix after checking all invariants.
    static G2Element from_matrix(const Matrix7& m, double tol = kFrameTol);

    const Matrix7& matrix() const { return m_; }
    const SpherePoint6& xi() const { return xi_; }
    const SpherePoint6& eta() const { return eta_; }
    const SpherePoint6& zeta() const { return zeta_; }

    nlohmann::json to_json() const;
    static G2Element from_json(const nlohmann::json& j);

  private:
    G2Element(const Matrix7& m, const SpherePoint6& xi, const SpherePoint6& eta,
              const SpherePoint6& zeta)
        : m_(m), xi_(xi), eta_(eta), zeta_(zeta) {}

    Matrix7 m_;
    SpherePoint6 xi_, eta_, zeta_;
};

/// Applies the automorphism: fixes the real part, acts by the matrix on the
/// imaginary part.
Octonion apply(const G2Element& g, const Octonion& x);
Octonion apply(const Matrix7& m, const Octonion& x);
SpherePoint6 apply(const G2Element& g, const SpherePoint6& x);

/// Group operations. The inverse of an orthogonal matrix is its transpose.
G2Element compose(const G2Element& g, const G2Element& h);
G2Element inverse(const G2Element& g);

/// max over the 49 imaginary basis pairs (p, q) of
/// |Phi(b_p b_q) - Phi(b_p) Phi(b_q)| for the linear map given by m.
double multiplicativity_residual(const Matrix7& m);

double orthogonality_residual(const Matrix7& m);

/// The linear map x -> r x r^-1 restricted to imaginary octonions, as a raw
/// matrix. Defined for every invertible r; an automorphism only when
/// 4 r1^2 = |r|^2.
Matrix7 conjugation_matrix(const Octonion& r);

/// Normalized residual |4 r1^2 - |r|^2| / |r|^2 of the inner-automorphism
/// criterion.
double inner_automorphism_criterion(const Octonion& r);

/// The automorphism x -> r x r^-1 for admissible r.
/// Throws ZeroDivisor for r = 0, NotInnerAutomorphism when r is real or the
/// criterion residual exceeds tol.
G2Element inner_automorphism(const Octonion& r, double tol = 1e-9);

/// Random element: xi uniform on S^6, eta uniform on the xi-orthogonal unit
/// sphere, zeta uniform on the {xi, eta, xi eta}-orthogonal unit sphere.
G2Element random_g2(Rng& rng);
G2Element random_g2(std::uint64_t seed);

/// max over samples of |m(xi v) - (m xi)(m v)| for random xi in S^6 and unit
/// tangents v at xi. Zero for every G2 element; bounded away from zero for
/// rotations outside G2.
double j_equivariance_residual(const Matrix7& m, std::size_t n_samples, Rng& rng);
double j_equivariance_residual(const G2Element& g, std::size_t n_samples,
                               std::uint64_t seed);

IdentityReport check_j_equivariance(const G2Element& g, std::size_t n_samples,
                                    std::uint64_t seed, double tol = 1e-9);

/// Orthogonal map that swaps the j and e coordinates: the documented
/// negative control, in O(7) but not in G2.
Matrix7 j_swap_control();

} // namespace g2s6
