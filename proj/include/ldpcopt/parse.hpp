#pragma once

#include <stdexcept>
#include <string>

#include "ldpcopt/ensemble.hpp"

namespace ldpcopt {

struct PolySpecError : std::runtime_error {
    PolySpecError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

/// Parses a degree-distribution polynomial written the usual way, e.g.
/// "0.48555*x^5 + 0.51445*x^6" or "x^4". Each term c*x^k (k >= 1) maps to
/// node degree k+1 with edge fraction c. Coefficients must be nonnegative
/// and sum to 1 within 1e-6.
DegreeDistribution parse_poly_spec(const std::string& s);

// Inverse of parse_poly_spec's convention, for reports.
std::string poly_spec_string(const DegreeDistribution& d);

}  // namespace ldpcopt
