#pragma once

#include <utility>
#include <vector>

#include "ldpcopt/poly.hpp"

namespace ldpcopt {

/// Coefficients of the even polynomial Pi(u) = (1+u^2)^q P(u^2/(1+u^2)).
/// Nonnegativity of P on [0,1) is equivalent to nonnegativity of Pi on all
/// of R, which a positive semidefinite Gram matrix of order q+1 certifies.
struct SosLift {
    int q = 0;        // degree bound of the source polynomial
    int n_vars = 0;   // 0 for a plain Poly input
    Matrix pi_forms;  // (2q+1) x (n_vars+1); column 0 is the constant part

    int gram_dim() const { return q + 1; }
    Scalar pi(int l) const { return pi_forms(l, 0); }
};

SosLift lift(const Poly& p, int q);
SosLift lift(const AffinePoly& p, int q);

/// One equation of the Gram system: the anti-diagonal sum of B over ordered
/// index pairs i+j = l equals Pi_l. Off-diagonal entries therefore count
/// twice; `entries` lists the distinct pairs with i <= j.
struct GramEquation {
    int l = 0;
    std::vector<std::pair<int, int>> entries;
    Vector rhs_form;  // length n_vars+1, constant first
};

std::vector<GramEquation> gram_constraints(const SosLift& lift);

// Sum of B_ij over ordered pairs with i+j = l.
Scalar antidiag_sum(const Matrix& B, int l);

struct GramCertificate {
    int q = 0;
    Matrix B;
    Scalar reconstruction_residual = 0.0;
    Scalar min_eigenvalue = 0.0;
    Scalar pi_scale = 1.0;  // max(1, max |Pi_l|), the residual reference scale

    bool valid() const {
        return reconstruction_residual <= 1e-6 * pi_scale &&
               min_eigenvalue >= -1e-8 * (B.trace() + 1.0);
    }
};

GramCertificate verify_certificate(const Poly& p, int q, const Matrix& B);

// C(n, k) evaluated in double precision (Pascal's triangle).
Scalar binomial(int n, int k);

}  // namespace ldpcopt
