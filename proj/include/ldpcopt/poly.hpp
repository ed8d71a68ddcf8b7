#pragma once

#include <Eigen/Dense>

namespace ldpcopt {

using Scalar = double;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense univariate polynomial with real coefficients in ascending powers:
/// coeffs()[k] is the coefficient of x^k. Arithmetic never trims storage;
/// normalize() is the only operation that drops trailing near-zero terms.
class Poly {
  public:
    Poly() : coeffs_(Vector::Zero(1)) {}
    explicit Poly(Vector coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() == 0) coeffs_ = Vector::Zero(1);
    }
    Poly(std::initializer_list<Scalar> cs) : coeffs_(Eigen::Map<const Vector>(cs.begin(), static_cast<Eigen::Index>(cs.size()))) {
        if (coeffs_.size() == 0) coeffs_ = Vector::Zero(1);
    }

    static Poly constant(Scalar c) { return Poly{c}; }
    static Poly identity() { return Poly{0.0, 1.0}; }  // the polynomial x
    static Poly monomial(int k, Scalar c = 1.0) {
        Vector v = Vector::Zero(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    const Vector& coeffs() const { return coeffs_; }

    // Largest index with a nonzero coefficient; 0 for the zero polynomial.
    int degree() const {
        for (Eigen::Index k = coeffs_.size() - 1; k > 0; --k)
            if (coeffs_[k] != 0.0) return static_cast<int>(k);
        return 0;
    }

    Scalar coeff(int k) const {
        return (k >= 0 && k < coeffs_.size()) ? coeffs_[k] : 0.0;
    }

    // Trims trailing coefficients with |c| < tol; keeps at least one entry.
    void normalize(Scalar tol = 1e-14) {
        Eigen::Index n = coeffs_.size();
        while (n > 1 && std::abs(coeffs_[n - 1]) < tol) --n;
        coeffs_.conservativeResize(n);
    }
    Poly normalized(Scalar tol = 1e-14) const {
        Poly p = *this;
        p.normalize(tol);
        return p;
    }

    bool is_zero() const { return coeffs_.isZero(0.0); }

  private:
    Vector coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Scalar s, const Poly& a);
inline Poly operator*(const Poly& a, Scalar s) { return s * a; }
Poly operator-(const Poly& a);

Poly poly_pow(const Poly& a, int n);
Poly poly_compose(const Poly& outer, const Poly& inner);
Scalar poly_eval(const Poly& a, Scalar x);
Poly poly_derivative(const Poly& a);

/// Polynomial whose coefficients are affine forms of decision variables.
/// Row k of forms() is the coefficient of x^k: column 0 is the constant
/// term, column v (1-based) the weight on decision variable v-1.
class AffinePoly {
  public:
    AffinePoly(int max_degree, int n_vars)
        : forms_(Matrix::Zero(max_degree + 1, n_vars + 1)), n_vars_(n_vars) {}

    int n_vars() const { return n_vars_; }
    int max_degree() const { return static_cast<int>(forms_.rows()) - 1; }
    const Matrix& forms() const { return forms_; }

    Scalar constant_term(int k) const { return forms_(k, 0); }
    Scalar weight(int k, int var) const { return forms_(k, var + 1); }

    void add_constant(const Poly& p);
    void add_scaled(int var, const Poly& p, Scalar w = 1.0);

    // Largest x-degree with any nonzero form entry.
    int degree() const;

    Poly substitute(const Vector& z) const;

  private:
    Matrix forms_;
    int n_vars_;
};

}  // namespace ldpcopt
