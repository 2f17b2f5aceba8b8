#pragma once

#include <cstdint>
#include <random>

#include "g2s6/octonion.hpp"

namespace g2s6 {

/// Named seeded generator used by every randomized check in the library.
/// All sampling is explicit-seed; there is no global generator.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double normal() { return normal_(gen_); }
    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Eight independent standard normal coordinates.
Octonion random_octonion(Rng& rng);

/// Normalized standard-normal octonion (uniform on the unit 7-sphere).
Octonion random_unit_octonion(Rng& rng);

} // namespace g2s6
