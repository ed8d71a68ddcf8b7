#pragma once

#include <map>
#include <string>
#include <vector>

#include "ldpcopt/poly.hpp"

namespace ldpcopt {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Edge-perspective degree distribution: coeffs[d] is the fraction of edges
/// attached to nodes of degree d (d >= 2). As a polynomial the coefficient
/// of x^{d-1} is coeffs[d]; the constant term is always zero.
class DegreeDistribution {
  public:
    DegreeDistribution() = default;
    explicit DegreeDistribution(std::map<int, Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

    static DegreeDistribution single(int degree) { return DegreeDistribution({{degree, 1.0}}); }

    const std::map<int, Scalar>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    Scalar fraction(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    Scalar sum() const;

    // Divides every fraction by the current sum. Returns the factor applied.
    Scalar renormalize();

    // Drops fractions below threshold and renormalizes. Returns the mass removed.
    Scalar prune(Scalar threshold = 1e-8);

    ValidationReport validate() const;

  private:
    std::map<int, Scalar> coeffs_;
};

struct Ensemble {
    DegreeDistribution lambda;  // variable side
    DegreeDistribution rho;     // check side
};

Poly dd_to_poly(const DegreeDistribution& d);

// Sum of coeffs[d]/d, the reciprocal of the average node degree.
Scalar inv_avg(const DegreeDistribution& d);

// R = 1 - inv_avg(rho)/inv_avg(lambda).
Scalar rate(const Ensemble& e);

// delta = 1 - rate/(1 - epsilon). Throws for epsilon outside (0,1).
Scalar capacity_gap(Scalar rate, Scalar epsilon);

}  // namespace ldpcopt
