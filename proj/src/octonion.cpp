#include "g2s6/octonion.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace g2s6 {

Octonion Octonion::basis(int idx) {
    Octonion out;
    out.c[static_cast<std::size_t>(idx)] = 1.0;
    return out;
}

double Octonion::imag_norm() const {
    double s = 0.0;
    for (int p = 1; p < 8; ++p) s += c[p] * c[p];
    return std::sqrt(s);
}

Octonion Octonion::operator-() const {
    Octonion out;
    for (int p = 0; p < 8; ++p) out.c[p] = -c[p];
    return out;
}

Octonion Octonion::operator+(const Octonion& rhs) const {
    Octonion out;
    for (int p = 0; p < 8; ++p) out.c[p] = c[p] + rhs.c[p];
    return out;
}

Octonion Octonion::operator-(const Octonion& rhs) const {
    Octonion out;
    for (int p = 0; p < 8; ++p) out.c[p] = c[p] - rhs.c[p];
    return out;
}

Octonion Octonion::operator*(double s) const {
    Octonion out;
    for (int p = 0; p < 8; ++p) out.c[p] = c[p] * s;
    return out;
}

namespace {

// One coordinate of one doubling operand: a signed slot of the original
// left ('a') or right ('b') input vector.
struct Atom {
    int sign;
    char side;
    int index;
};

using Operand = std::vector<Atom>;
using TermList = std::vector<MultiplicationTable::Term>;

Operand conjugated(Operand x) {
    for (std::size_t t = 1; t < x.size(); ++t) x[t].sign = -x[t].sign;
    return x;
}

// Symbolic doubling product. Returns, per output coordinate, the bilinear
// terms in emission order of (a,b)(u,v) = (au - conj(v)b, b conj(u) + va).
std::vector<TermList> symbolic_mul(const Operand& lhs, const Operand& rhs) {
    const std::size_t m = lhs.size();
    if (m == 1) {
        const Atom &x = lhs[0], &y = rhs[0];
        const Atom& a_atom = (x.side == 'a') ? x : y;
        const Atom& b_atom = (x.side == 'a') ? y : x;
        MultiplicationTable::Term term{
            static_cast<std::int8_t>(x.sign * y.sign),
            static_cast<std::uint8_t>(a_atom.index),
            static_cast<std::uint8_t>(b_atom.index)};
        return {TermList{term}};
    }
    const std::size_t h = m / 2;
    const Operand a(lhs.begin(), lhs.begin() + static_cast<long>(h));
    const Operand b(lhs.begin() + static_cast<long>(h), lhs.end());
    const Operand u(rhs.begin(), rhs.begin() + static_cast<long>(h));
    const Operand v(rhs.begin() + static_cast<long>(h), rhs.end());

    const auto au = symbolic_mul(a, u);
    const auto vcb = symbolic_mul(conjugated(v), b);
    const auto buc = symbolic_mul(b, conjugated(u));
    const auto va = symbolic_mul(v, a);

    std::vector<TermList> out(m);
    for (std::size_t t = 0; t < h; ++t) {
        out[t] = au[t];
        for (auto term : vcb[t]) {
            term.sign = static_cast<std::int8_t>(-term.sign);
            out[t].push_back(term);
        }
    }
    for (std::size_t t = 0; t < h; ++t) {
        out[h + t] = buc[t];
        out[h + t].insert(out[h + t].end(), va[t].begin(), va[t].end());
    }
    return out;
}

constexpr const char* kBasisNames[8] = {"1", "i", "j", "k", "e", "f", "g", "h"};

} // namespace

MultiplicationTable MultiplicationTable::from_doubling_rule() {
    Operand lhs, rhs;
    for (int p = 0; p < 8; ++p) {
        lhs.push_back({1, 'a', p});
        rhs.push_back({1, 'b', p});
    }
    const auto term_lists = symbolic_mul(lhs, rhs);

    MultiplicationTable table;
    for (int r = 0; r < 8; ++r) {
        for (int t = 0; t < 8; ++t) {
            const Term term = term_lists[r][static_cast<std::size_t>(t)];
            table.terms[r][t] = term;
            table.cell[term.p][term.q] = {term.sign, static_cast<std::uint8_t>(r)};
        }
    }
    return table;
}

const MultiplicationTable& MultiplicationTable::standard() {
    static const MultiplicationTable table = from_doubling_rule();
    return table;
}

MultiplicationTable MultiplicationTable::with_flipped_sign(int p, int q) const {
    MultiplicationTable out = *this;
    out.cell[p][q].sign = static_cast<std::int8_t>(-out.cell[p][q].sign);
    const int r = out.cell[p][q].index;
    for (auto& term : out.terms[r]) {
        if (term.p == p && term.q == q) term.sign = static_cast<std::int8_t>(-term.sign);
    }
    return out;
}

bool MultiplicationTable::operator==(const MultiplicationTable& rhs) const {
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            if (cell[p][q].sign != rhs.cell[p][q].sign ||
                cell[p][q].index != rhs.cell[p][q].index)
                return false;
            if (terms[p][q].sign != rhs.terms[p][q].sign ||
                terms[p][q].p != rhs.terms[p][q].p || terms[p][q].q != rhs.terms[p][q].q)
                return false;
        }
    }
    return true;
}

void MultiplicationTable::dump(std::ostream& os) const {
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            os << (q ? " " : "") << (cell[p][q].sign > 0 ? '+' : '-')
               << kBasisNames[cell[p][q].index];
        }
        os << '\n';
    }
}

std::string MultiplicationTable::dump_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

Octonion mul(const Octonion& a, const Octonion& b, const MultiplicationTable& table) {
    Octonion out;
    for (int r = 0; r < 8; ++r) {
        const auto& terms = table.terms[r];
        double t[8];
        for (int n = 0; n < 8; ++n)
            t[n] = static_cast<double>(terms[n].sign) * a.c[terms[n].p] * b.c[terms[n].q];
        // Pairwise accumulation in emission order matches the doubling
        // recursion's rounding exactly.
        out.c[r] = ((t[0] + t[1]) + (t[2] + t[3])) + ((t[4] + t[5]) + (t[6] + t[7]));
    }
    return out;
}

Octonion conj(const Octonion& a) {
    Octonion out = -a;
    out.c[0] = a.c[0];
    return out;
}

double inner(const Octonion& a, const Octonion& b) {
    double s = 0.0;
    for (int p = 0; p < 8; ++p) s += a.c[p] * b.c[p];
    return s;
}

double norm_sq(const Octonion& a) { return inner(a, a); }

double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

Octonion inverse(const Octonion& a, double epsilon) {
    const double n2 = norm_sq(a);
    if (n2 <= epsilon)
        throw ZeroDivisor("octonion inverse: |a|^2 = " + std::to_string(n2) +
                          " below epsilon");
    return conj(a) * (1.0 / n2);
}

Octonion conjugate_by(const Octonion& r, const Octonion& x) {
    return (r * x) * inverse(r);
}

} // namespace g2s6
