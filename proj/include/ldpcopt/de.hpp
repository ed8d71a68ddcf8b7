#pragma once

#include "ldpcopt/poly.hpp"

namespace ldpcopt {

struct DeReport {
    Scalar epsilon_tested = 0.0;
    bool converged = false;
    Scalar final_erasure = 0.0;
    int iterations_used = 0;
    Scalar threshold_estimate = 0.0;  // filled by threshold_bisect callers
    Scalar grid_min = 0.0;            // filled by grid_check callers
};

// One decoder recursion step on the erasure fraction: eps * lambda(1 - rho(1 - x)).
Scalar de_step(Scalar x, Scalar epsilon, const Poly& lambda, const Poly& rho);

// Iterates de_step from x0 = epsilon. The sequence is non-increasing for
// valid degree polynomials; iteration stops early once it stops moving.
DeReport de_converges(Scalar epsilon, const Poly& lambda, const Poly& rho,
                      int max_iter = 10000, Scalar tol = 1e-10);

// Bisection on epsilon over [0,1] with de_converges as predicate.
Scalar threshold_bisect(const Poly& lambda, const Poly& rho, Scalar tol = 1e-4);

// Minimum of q over the uniform grid x_k = k/n, k = 0..n.
Scalar grid_check(const Poly& q, int n);

}  // namespace ldpcopt
