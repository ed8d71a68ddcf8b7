#include "ldpcopt/sos.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace ldpcopt {

Scalar binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    // One row of Pascal's triangle; all-positive additions keep this accurate.
    std::vector<Scalar> row(static_cast<size_t>(k) + 1, 0.0);
    row[0] = 1.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

namespace {

// Pi_{2j} = sum_{i=0..j} p_i * C(q-i, j-i), applied per coefficient column.
Matrix lift_forms(const Matrix& p_forms, int p_degree, int q) {
    if (q < 1) throw std::invalid_argument("lift: q must be at least 1");
    if (q < p_degree) throw std::invalid_argument("lift: q below polynomial degree");
    Matrix out = Matrix::Zero(2 * q + 1, p_forms.cols());
    for (int j = 0; j <= q; ++j) {
        for (int i = 0; i <= std::min(j, p_degree); ++i) {
            out.row(2 * j) += binomial(q - i, j - i) * p_forms.row(i);
        }
    }
    return out;
}

}  // namespace

SosLift lift(const Poly& p, int q) {
    SosLift lf;
    lf.q = q;
    lf.n_vars = 0;
    Matrix forms = Matrix::Zero(p.degree() + 1, 1);
    for (int k = 0; k <= p.degree(); ++k) forms(k, 0) = p.coeff(k);
    lf.pi_forms = lift_forms(forms, p.degree(), q);
    return lf;
}

SosLift lift(const AffinePoly& p, int q) {
    SosLift lf;
    lf.q = q;
    lf.n_vars = p.n_vars();
    const int deg = p.degree();
    lf.pi_forms = lift_forms(p.forms().topRows(deg + 1), deg, q);
    return lf;
}

std::vector<GramEquation> gram_constraints(const SosLift& lf) {
    const int m = lf.gram_dim();
    std::vector<GramEquation> eqs;
    eqs.reserve(2 * lf.q + 1);
    for (int l = 0; l <= 2 * lf.q; ++l) {
        GramEquation eq;
        eq.l = l;
        for (int i = std::max(0, l - m + 1); i <= l / 2; ++i) eq.entries.emplace_back(i, l - i);
        eq.rhs_form = lf.pi_forms.row(l).transpose();
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

Scalar antidiag_sum(const Matrix& B, int l) {
    const int m = static_cast<int>(B.rows());
    Scalar s = 0.0;
    for (int i = std::max(0, l - m + 1); i <= std::min(l, m - 1); ++i) s += B(i, l - i);
    return s;
}

GramCertificate verify_certificate(const Poly& p, int q, const Matrix& B) {
    if (B.rows() != B.cols() || B.rows() != q + 1)
        throw std::invalid_argument("verify_certificate: B must be symmetric of order q+1");
    const SosLift lf = lift(p, q);
    GramCertificate cert;
    cert.q = q;
    cert.B = B;
    cert.pi_scale = std::max(1.0, lf.pi_forms.col(0).cwiseAbs().maxCoeff());
    Scalar residual = 0.0;
    for (int l = 0; l <= 2 * q; ++l)
        residual = std::max(residual, std::abs(lf.pi(l) - antidiag_sum(B, l)));
    cert.reconstruction_residual = residual;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (B + B.transpose()), Eigen::EigenvaluesOnly);
    cert.min_eigenvalue = es.eigenvalues().minCoeff();
    return cert;
}

}  // namespace ldpcopt
