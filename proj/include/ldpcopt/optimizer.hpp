#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldpcopt/de.hpp"
#include "ldpcopt/ensemble.hpp"
#include "ldpcopt/sdp.hpp"
#include "ldpcopt/sos.hpp"

namespace ldpcopt {

enum class DesignMode { MaxThreshold, MaxRateVariableSide, MinCheckAverage };

const char* to_string(DesignMode m);

/// One design task. fixed_side is rho for MaxThreshold/MaxRateVariableSide
/// and lambda for MinCheckAverage; max_free_degree bounds the node degree of
/// the optimized side. epsilon is required for the fixed-epsilon modes.
struct DesignProblem {
    DesignMode mode = DesignMode::MaxThreshold;
    DegreeDistribution fixed_side;
    int max_free_degree = 2;
    std::optional<Scalar> epsilon;
    int grid_size = 0;  // baseline LP only
    // Optional linear anchor rate >= value. MaxThreshold drives this to its
    // fixed point; setting it explicitly freezes a single anchored solve.
    std::optional<Scalar> rate_floor;
    SolverSettings solver;

    void validate_or_throw() const;
};

struct DesignResult {
    DesignMode mode = DesignMode::MaxThreshold;
    SolveStatus solver_status = SolveStatus::NumericalFailure;
    DegreeDistribution free_side;
    Ensemble ensemble;
    Scalar t_star = 0.0;
    Scalar objective = 0.0;      // reported optimal value of the mode objective
    Scalar objective_lo = 0.0;   // certified bracket from the conic solver
    Scalar objective_hi = 0.0;
    Scalar rate = 0.0;
    Scalar epsilon_used = 0.0;
    Scalar delta = 0.0;
    GramCertificate certificate;  // absent (invalid) for the LP baseline
    bool has_certificate = false;
    DeReport de;
    Poly constraint_poly;  // Q at the reported solution
    int q = 0;
    int solver_iterations = 0;
    Scalar solver_gap = 0.0;
    std::optional<Scalar> rate_floor_used;
    int outer_iterations = 0;
    Scalar pruned_mass = 0.0;
    std::string notes;
};

// Constraint polynomial Q(x; z) whose nonnegativity on [0,1] encodes the DE
// condition. Decision variables z: (lambda_2..lambda_Dv[, t]) for the
// variable-side modes, (rho_2..rho_Dc) for MinCheckAverage.
AffinePoly build_constraint_poly(const DesignProblem& problem);

/// Generic program: minimize objective.z subject to Q(x; z) >= 0 on [0,1],
/// linear equalities/inequalities over z, and z - shift >= 0 (free variables
/// are split into differences of two nonnegative ones).
struct PolyProgram {
    AffinePoly constraint{0, 0};
    Vector objective;
    std::vector<bool> is_free;  // per decision variable; default all false
    Vector shift;               // lower bounds absorbed as z = shift + z'
    Matrix eq_lhs;              // may have zero rows
    Vector eq_rhs;
    Matrix ineq_lhs;  // rows: lhs.z >= rhs
    Vector ineq_rhs;
};

struct SdpAssembly {
    ConicProblem problem;
    int q = 0;
    int n_dec = 0;
    Scalar objective_offset = 0.0;
    Vector shift;
    std::vector<int> pos_index;
    std::vector<int> neg_index;  // -1 unless the variable is free
    // The PSD block is carried in the binomial-scaled basis
    // v_i(u) = sqrt(C(q,i)) u^i so its entries stay O(1); gram_of converts
    // back to the plain monomial Gram convention (anti-diagonal sums).
    Vector gram_basis_scale;

    Vector decision_of(const Vector& primal) const;
    Matrix gram_of(const Vector& primal) const;
};

SdpAssembly assemble_poly_program(const PolyProgram& prog);

// Theorem-style assembly of a DesignProblem: simplex row, 2q+1 Gram rows,
// the optional rate-anchor row, one PSD block of order q+1.
SdpAssembly assemble_sdp(const DesignProblem& problem);

DesignResult solve_design(const DesignProblem& problem);

// Prior-art baseline: the polynomial constraint is enforced only on the
// grid x_k = k/N; solved as a pure LP (through its dual so the Schur system
// stays small). The optimum is a relaxation bound for solve_design's.
DesignResult solve_baseline_lp(const DesignProblem& problem);

}  // namespace ldpcopt
