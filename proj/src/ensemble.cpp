#include "ldpcopt/ensemble.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ldpcopt {

Scalar DegreeDistribution::sum() const {
    Scalar s = 0.0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

Scalar DegreeDistribution::renormalize() {
    const Scalar s = sum();
    if (s <= 0.0) throw std::invalid_argument("DegreeDistribution::renormalize: nonpositive mass");
    for (auto& [d, c] : coeffs_) c /= s;
    return s;
}

Scalar DegreeDistribution::prune(Scalar threshold) {
    Scalar removed = 0.0;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second < threshold) {
            removed += it->second;
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
    if (!coeffs_.empty() && removed > 0.0) renormalize();
    return removed;
}

ValidationReport DegreeDistribution::validate() const {
    ValidationReport report;
    std::ostringstream os;
    if (coeffs_.empty()) {
        report.violations.push_back("empty distribution");
        return report;
    }
    for (const auto& [d, c] : coeffs_) {
        if (d < 2) {
            os.str("");
            os << "degree " << d << " below minimum 2";
            report.violations.push_back(os.str());
        }
        if (c < 0.0) {
            os.str("");
            os << "negative fraction " << c << " at degree " << d;
            report.violations.push_back(os.str());
        }
    }
    const Scalar s = sum();
    if (std::abs(s - 1.0) > 1e-9) {
        os.str("");
        os << "fractions sum to " << s << ", not 1 within 1e-9";
        report.violations.push_back(os.str());
    }
    return report;
}

Poly dd_to_poly(const DegreeDistribution& d) {
    Vector coeffs = Vector::Zero(std::max(1, d.max_degree()));
    for (const auto& [deg, c] : d.coeffs()) coeffs[deg - 1] = c;
    return Poly(std::move(coeffs));
}

Scalar inv_avg(const DegreeDistribution& d) {
    Scalar s = 0.0;
    for (const auto& [deg, c] : d.coeffs()) s += c / static_cast<Scalar>(deg);
    return s;
}

Scalar rate(const Ensemble& e) {
    return 1.0 - inv_avg(e.rho) / inv_avg(e.lambda);
}

Scalar capacity_gap(Scalar rate, Scalar epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("capacity_gap: epsilon must lie in (0,1)");
    if (rate < 0.0) throw std::invalid_argument("capacity_gap: negative rate");
    return 1.0 - rate / (1.0 - epsilon);
}

}  // namespace ldpcopt
