#pragma once

#include <string>
#include <vector>

#include "ldpcopt/poly.hpp"

namespace ldpcopt {

enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIterations, NumericalFailure };

const char* to_string(SolveStatus s);

struct SolverSettings {
    Scalar gap_tol = 1e-8;
    Scalar feas_tol = 1e-8;
    int max_iter = 200;
    Scalar step_fraction = 0.98;  // fraction-to-boundary factor
    bool verbose = false;
};

/// Standard-form conic problem
///     min c.x   s.t.  A x = b,  x in R^orthant_dim_+ x S^psd_order_+
/// Variable layout: the orthant scalars first, then the distinct entries of
/// the symmetric block in row-major upper-triangle order with off-diagonal
/// entries scaled by sqrt(2) so the vector inner product equals the matrix
/// trace inner product (svec).
struct ConicProblem {
    Vector c;
    Matrix A;
    Vector b;
    int orthant_dim = 0;
    int psd_order = 0;

    // Optional structure: when has_psd_rank1 is set, the PSD part of A's row
    // k equals -svec(w_k w_k') with w_k = psd_rank1.row(k). The solver then
    // builds the Schur complement via (w_k' T w_l)^2 instead of the generic
    // sparse accumulation. Purely an acceleration; A stays complete.
    Matrix psd_rank1;
    bool has_psd_rank1 = false;

    int n() const { return orthant_dim + psd_order * (psd_order + 1) / 2; }
    void check_dimensions() const;
};

struct ConicSolution {
    Vector primal;
    Vector dual;        // one multiplier per original equation
    Vector dual_slack;  // s = c - A'y, in the cone at optimality
    SolveStatus status = SolveStatus::NumericalFailure;
    int iterations = 0;
    Scalar duality_gap = 0.0;  // complementarity <x,s>
    Scalar primal_residual = 0.0;
    Scalar dual_residual = 0.0;
    Scalar primal_objective = 0.0;
    Scalar dual_objective = 0.0;
    std::vector<int> dropped_rows;  // dependent equations removed in preprocessing
    std::string message;
};

ConicSolution solve(const ConicProblem& p, const SolverSettings& settings = {});

struct KktReport {
    Scalar primal_residual = 0.0;  // max row-relative equality violation
    Scalar dual_residual = 0.0;
    Scalar gap = 0.0;
    Scalar orthant_min = 0.0;
    Scalar psd_min_eigenvalue = 0.0;
    std::vector<std::string> flags;
    bool ok() const { return flags.empty(); }
};

// Recomputes residuals, gap, and cone membership from scratch; flags any
// violation beyond 10x the solver tolerance.
KktReport check_kkt(const ConicProblem& p, const ConicSolution& s, const SolverSettings& settings = {});

// svec packing helpers shared with the problem assemblers.
int svec_dim(int m);
int svec_index(int m, int i, int j);  // requires i <= j
Vector svec(const Matrix& M);
Matrix smat(const Vector& v, int m);

// svec coordinates of the functional X -> sum of X_ij over ordered pairs
// with i+j = l (the Gram anti-diagonal sum).
Vector antidiag_svec_row(int m, int l);

}  // namespace ldpcopt
