#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace g2s6 {

/// One verified identity: its max residual over the sampled inputs and the
/// threshold it was held against. Negative controls invert the sense: they
/// pass only when the residual exceeds the threshold.
struct IdentityCheck {
    enum class Sense { BelowTol, AboveTol };

    std::string name;
    std::string reference; // mathematical statement being exercised
    double residual = 0.0;
    double tol = 0.0;
    Sense sense = Sense::BelowTol;
    bool pass = false;
    std::size_t samples = 0;
};

struct IdentityReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<IdentityCheck> checks;

    IdentityCheck& add(std::string name, std::string reference, double residual,
                       double tol, std::size_t samples,
                       IdentityCheck::Sense sense = IdentityCheck::Sense::BelowTol);

    bool all_passed() const;
    double max_residual() const;

    void print(std::ostream& os) const;
};

nlohmann::json to_json(const IdentityReport& report);

} // namespace g2s6
