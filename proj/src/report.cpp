#include "g2s6/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace g2s6 {

IdentityCheck& IdentityReport::add(std::string name, std::string reference,
                                   double residual, double tol, std::size_t samples,
                                   IdentityCheck::Sense sense) {
    IdentityCheck check;
    check.name = std::move(name);
    check.reference = std::move(reference);
    check.residual = residual;
    check.tol = tol;
    check.sense = sense;
    check.pass = sense == IdentityCheck::Sense::BelowTol ? residual < tol
                                                         : residual > tol;
    check.samples = samples;
    checks.push_back(std::move(check));
    return checks.back();
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.pass; });
}

double IdentityReport::max_residual() const {
    double worst = 0.0;
    for (const auto& c : checks) worst = std::max(worst, c.residual);
    return worst;
}

void IdentityReport::print(std::ostream& os) const {
    os << "suite " << suite << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
        const char* rel = c.sense == IdentityCheck::Sense::BelowTol ? "<" : ">";
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << std::left
           << std::setw(40) << c.name << " residual " << std::scientific
           << std::setprecision(3) << c.residual << " " << rel << " " << c.tol
           << std::defaultfloat << "  (" << c.reference << ")\n";
    }
}

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"paper_ref", c.reference},
                          {"residual", c.residual},
                          {"tol", c.tol},
                          {"pass", c.pass}});
    }
    return {{"suite", report.suite}, {"checks", checks}, {"seed", report.seed}};
}

} // namespace g2s6
