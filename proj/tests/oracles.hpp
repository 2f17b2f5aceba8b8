#pragma once

// Test-only oracles, kept independent of the library's evaluation paths.

#include <array>
#include <cstddef>

#include "g2s6/octonion.hpp"

namespace g2s6::testing {

// Plain doubling-rule product (a,b)(u,v) = (au - conj(v)b, b conj(u) + va),
// evaluated recursively on coordinate halves.
namespace detail {

template <std::size_t N>
std::array<double, N> rec_conj(std::array<double, N> x) {
    for (std::size_t t = 1; t < N; ++t) x[t] = -x[t];
    return x;
}

template <std::size_t N>
std::array<double, N> rec_mul(const std::array<double, N>& lhs,
                              const std::array<double, N>& rhs) {
    if constexpr (N == 1) {
        return {lhs[0] * rhs[0]};
    } else {
        constexpr std::size_t H = N / 2;
        std::array<double, H> a, b, u, v;
        for (std::size_t t = 0; t < H; ++t) {
            a[t] = lhs[t];
            b[t] = lhs[H + t];
            u[t] = rhs[t];
            v[t] = rhs[H + t];
        }
        const auto au = rec_mul(a, u);
        const auto vcb = rec_mul(rec_conj(v), b);
        const auto buc = rec_mul(b, rec_conj(u));
        const auto va = rec_mul(v, a);
        std::array<double, N> out;
        for (std::size_t t = 0; t < H; ++t) {
            out[t] = au[t] - vcb[t];
            out[H + t] = buc[t] + va[t];
        }
        return out;
    }
}

} // namespace detail

inline Octonion doubling_rule_mul(const Octonion& a, const Octonion& b) {
    return Octonion(detail::rec_mul(a.c, b.c));
}

} // namespace g2s6::testing
