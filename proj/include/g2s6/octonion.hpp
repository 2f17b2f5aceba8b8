#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "g2s6/errors.hpp"

namespace g2s6 {

/// An element of the octonion algebra, stored as eight real coordinates in
/// the basis (1, i, j, k, e, f, g, h) with f = ie, g = je, h = ke.
struct Octonion {
    std::array<double, 8> c{};

    Octonion() = default;
    explicit Octonion(const std::array<double, 8>& coords) : c(coords) {}
    Octonion(double c1, double c2, double c3, double c4, double c5, double c6,
             double c7, double c8)
        : c{c1, c2, c3, c4, c5, c6, c7, c8} {}

    double& operator[](int idx) { return c[static_cast<std::size_t>(idx)]; }
    double operator[](int idx) const { return c[static_cast<std::size_t>(idx)]; }

    /// Basis element by index, 0 = 1, 1 = i, ..., 7 = h.
    static Octonion basis(int idx);
    static Octonion zero() { return Octonion{}; }
    static Octonion one() { return basis(0); }
    static Octonion i() { return basis(1); }
    static Octonion j() { return basis(2); }
    static Octonion k() { return basis(3); }
    static Octonion e() { return basis(4); }
    static Octonion f() { return basis(5); }
    static Octonion g() { return basis(6); }
    static Octonion h() { return basis(7); }

    double real() const { return c[0]; }
    /// Euclidean norm of the imaginary part.
    double imag_norm() const;

    Octonion operator-() const;
    Octonion operator+(const Octonion& rhs) const;
    Octonion operator-(const Octonion& rhs) const;
    Octonion operator*(double s) const;
    friend Octonion operator*(double s, const Octonion& a) { return a * s; }
    bool operator==(const Octonion& rhs) const = default;
};

/// Signed basis-product table of the algebra, generated once from the
/// doubling rule (a,b)(u,v) = (au - conj(v)b, b conj(u) + va).
///
/// Two views of the same data are kept: `cell[p][q]` gives the product of
/// basis elements p and q as a signed basis index, and `terms[r]` lists, in
/// the order the doubling recursion emits them, the eight bilinear terms
/// feeding output coordinate r. Products are accumulated pairwise over that
/// order, which reproduces the recursion's floating-point results bit for
/// bit.
struct MultiplicationTable {
    struct Cell {
        std::int8_t sign;
        std::uint8_t index;
    };
    struct Term {
        std::int8_t sign;
        std::uint8_t p; // left-factor coordinate
        std::uint8_t q; // right-factor coordinate
    };

    std::array<std::array<Cell, 8>, 8> cell{};
    std::array<std::array<Term, 8>, 8> terms{};

    /// Regenerates the table from the doubling rule.
    static MultiplicationTable from_doubling_rule();

    /// The shared default table (built once, thread-safe).
    static const MultiplicationTable& standard();

    /// Copy of the table with the sign of basis product p*q flipped in both
    /// views. Used by negative-control tests.
    MultiplicationTable with_flipped_sign(int p, int q) const;

    bool operator==(const MultiplicationTable& rhs) const;

    /// Writes eight lines of eight entries "+name"/"-name" with
    /// name in {1,i,j,k,e,f,g,h}; row = left factor, column = right factor.
    void dump(std::ostream& os) const;
    std::string dump_string() const;
};

/// Octonion product via the given table.
Octonion mul(const Octonion& a, const Octonion& b, const MultiplicationTable& table);

inline Octonion operator*(const Octonion& a, const Octonion& b) {
    return mul(a, b, MultiplicationTable::standard());
}

/// Conjugation: negates the seven imaginary coordinates.
Octonion conj(const Octonion& a);

/// Euclidean inner product of the eight coordinates.
double inner(const Octonion& a, const Octonion& b);

double norm_sq(const Octonion& a);
double norm(const Octonion& a);

/// Multiplicative inverse conj(a)/|a|^2.
/// Throws ZeroDivisor if |a|^2 <= epsilon (default 1e-30).
Octonion inverse(const Octonion& a, double epsilon = 1e-30);

/// Well-bracketed conjugation (r x) r^-1. The two bracketings agree for
/// octonions, so the left-to-right evaluation order is canonical here.
Octonion conjugate_by(const Octonion& r, const Octonion& x);

} // namespace g2s6
