#include "ldpcopt/poly.hpp"

#include <stdexcept>

namespace ldpcopt {

Poly operator+(const Poly& a, const Poly& b) {
    const Eigen::Index n = std::max(a.coeffs().size(), b.coeffs().size());
    Vector out = Vector::Zero(n);
    out.head(a.coeffs().size()) = a.coeffs();
    out.head(b.coeffs().size()) += b.coeffs();
    return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
    return Poly(Vector(-a.coeffs()));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    const Eigen::Index na = a.coeffs().size(), nb = b.coeffs().size();
    Vector out = Vector::Zero(na + nb - 1);
    for (Eigen::Index i = 0; i < na; ++i) {
        const Scalar ai = a.coeffs()[i];
        if (ai == 0.0) continue;
        out.segment(i, nb) += ai * b.coeffs();
    }
    return Poly(std::move(out));
}

Poly operator*(Scalar s, const Poly& a) {
    return Poly(Vector(s * a.coeffs()));
}

Poly poly_pow(const Poly& a, int n) {
    if (n < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Poly result = Poly::constant(1.0);
    Poly base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Poly poly_compose(const Poly& outer, const Poly& inner) {
    // Horner over Poly arithmetic.
    Poly result = Poly::constant(outer.coeffs()[outer.coeffs().size() - 1]);
    for (Eigen::Index k = outer.coeffs().size() - 2; k >= 0; --k) {
        result = result * inner + Poly::constant(outer.coeffs()[k]);
    }
    return result;
}

Scalar poly_eval(const Poly& a, Scalar x) {
    Scalar acc = 0.0;
    for (Eigen::Index k = a.coeffs().size() - 1; k >= 0; --k)
        acc = acc * x + a.coeffs()[k];
    return acc;
}

Poly poly_derivative(const Poly& a) {
    if (a.coeffs().size() <= 1) return Poly();
    Vector out(a.coeffs().size() - 1);
    for (Eigen::Index k = 1; k < a.coeffs().size(); ++k)
        out[k - 1] = static_cast<Scalar>(k) * a.coeffs()[k];
    return Poly(std::move(out));
}

void AffinePoly::add_constant(const Poly& p) {
    if (p.degree() > max_degree())
        throw std::invalid_argument("AffinePoly::add_constant: degree exceeds max_degree");
    for (int k = 0; k <= p.degree(); ++k) forms_(k, 0) += p.coeff(k);
}

void AffinePoly::add_scaled(int var, const Poly& p, Scalar w) {
    if (var < 0 || var >= n_vars_)
        throw std::invalid_argument("AffinePoly::add_scaled: variable index out of range");
    if (p.degree() > max_degree())
        throw std::invalid_argument("AffinePoly::add_scaled: degree exceeds max_degree");
    for (int k = 0; k <= p.degree(); ++k) forms_(k, var + 1) += w * p.coeff(k);
}

int AffinePoly::degree() const {
    for (Eigen::Index k = forms_.rows() - 1; k > 0; --k)
        if (!forms_.row(k).isZero(0.0)) return static_cast<int>(k);
    return 0;
}

Poly AffinePoly::substitute(const Vector& z) const {
    if (z.size() != n_vars_)
        throw std::invalid_argument("AffinePoly::substitute: dimension mismatch");
    Vector coeffs = forms_.col(0);
    if (n_vars_ > 0) coeffs += forms_.rightCols(n_vars_) * z;
    Poly p(std::move(coeffs));
    p.normalize();
    return p;
}

}  // namespace ldpcopt
