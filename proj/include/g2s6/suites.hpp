#pragma once

#include <cstdint>
#include <vector>

#include "g2s6/octonion.hpp"
#include "g2s6/report.hpp"

namespace g2s6 {

struct SuiteConfig {
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol_algebra = 1e-10;
    double tol_bundle = 1e-9;
    double fd_step = 1e-5;
};

/// Residual checks for the algebra laws: alternativity, flexibility, norm
/// multiplicativity, the three linearized product identities, Moufang,
/// conjugation properties, inversion and well-bracketed conjugation.
/// The table argument exists for mutation tests; production callers use the
/// standard table.
IdentityReport algebra_suite(const SuiteConfig& cfg,
                             const MultiplicationTable& table =
                                 MultiplicationTable::standard());

/// Automorphism-group checks: triple construction, orthogonality and
/// determinant invariants, multiplicativity of the action, composition,
/// the inner-automorphism criterion with positive and negative controls,
/// and J-equivariance with its non-member control.
IdentityReport g2_suite(const SuiteConfig& cfg);

/// Chart machinery: translator solution contracts, frames, fiber
/// coordinates, trivialization round trips, transition linearity, cocycle.
IdentityReport charts_suite(const SuiteConfig& cfg);

/// Equatorial transition function: closed forms, annihilation identities,
/// the conjugation-pipeline matrix, agreement with the chart transition
/// (transposed; see README), and the mapping degree.
IdentityReport transition_suite(const SuiteConfig& cfg);

std::vector<IdentityReport> all_suites(const SuiteConfig& cfg);

} // namespace g2s6
