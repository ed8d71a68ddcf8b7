#include "ldpcopt/de.hpp"

#include <stdexcept>

namespace ldpcopt {

Scalar de_step(Scalar x, Scalar epsilon, const Poly& lambda, const Poly& rho) {
    return epsilon * poly_eval(lambda, 1.0 - poly_eval(rho, 1.0 - x));
}

DeReport de_converges(Scalar epsilon, const Poly& lambda, const Poly& rho, int max_iter,
                      Scalar tol) {
    if (max_iter <= 0 || tol <= 0.0)
        throw std::invalid_argument("de_converges: parameters must be positive");
    DeReport rep;
    rep.epsilon_tested = epsilon;
    Scalar x = epsilon;
    int used = 0;
    while (used < max_iter && x > tol) {
        const Scalar next = de_step(x, epsilon, lambda, rho);
        ++used;
        if (next >= x) {
            // Fixed point reached in floating point; no further progress possible.
            x = next;
            break;
        }
        x = next;
    }
    rep.final_erasure = x;
    rep.iterations_used = used;
    rep.converged = (x <= tol);
    return rep;
}

Scalar threshold_bisect(const Poly& lambda, const Poly& rho, Scalar tol) {
    if (tol <= 0.0) throw std::invalid_argument("threshold_bisect: tol must be positive");
    Scalar lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const Scalar mid = 0.5 * (lo + hi);
        if (de_converges(mid, lambda, rho).converged)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Scalar grid_check(const Poly& q, int n) {
    if (n < 2) throw std::invalid_argument("grid_check: n must be at least 2");
    Scalar mn = poly_eval(q, 0.0);
    for (int k = 1; k <= n; ++k)
        mn = std::min(mn, poly_eval(q, static_cast<Scalar>(k) / static_cast<Scalar>(n)));
    return mn;
}

}  // namespace ldpcopt
