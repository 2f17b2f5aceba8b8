#include "g2s6/su3.hpp"

#include <cmath>
#include <string>

namespace g2s6 {

bool su3_check(const Matrix3c& m, double tol) {
    const double unit = (m.adjoint() * m - Matrix3c::Identity()).cwiseAbs().maxCoeff();
    const double det = std::abs(m.determinant() - Complex(1.0, 0.0));
    return unit < tol && det < tol;
}

SU3Matrix SU3Matrix::checked(const Matrix3c& m, double tol) {
    if (!su3_check(m, tol)) {
        const double unit =
            (m.adjoint() * m - Matrix3c::Identity()).cwiseAbs().maxCoeff();
        throw NonUnitary("matrix is not special unitary at tol " + std::to_string(tol) +
                         ": unitarity residual " + std::to_string(unit) +
                         ", |det - 1| = " + std::to_string(std::abs(m.determinant() - 1.0)));
    }
    return SU3Matrix(m);
}

nlohmann::json SU3Matrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c)
            row.push_back({m_(r, c).real(), m_(r, c).imag()});
        rows.push_back(row);
    }
    return {{"rows", rows}};
}

SU3Matrix SU3Matrix::from_json(const nlohmann::json& j, double tol) {
    Matrix3c m;
    const auto& rows = j.at("rows");
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m(r, c) = Complex(rows.at(r).at(c).at(0).get<double>(),
                              rows.at(r).at(c).at(1).get<double>());
    return checked(m, tol);
}

SU3Matrix random_su3(Rng& rng) {
    Matrix3c z;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) z(r, c) = Complex(rng.normal(), rng.normal());
    const Eigen::HouseholderQR<Matrix3c> qr(z);
    Matrix3c q = qr.householderQ();
    const Matrix3c r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 3; ++c) {
        const Complex d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    q.col(0) /= q.determinant();
    return SU3Matrix::checked(q, 1e-10);
}

} // namespace g2s6
