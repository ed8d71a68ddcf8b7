#include "ldpcopt/optimizer.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ldpcopt {

namespace {
constexpr Scalar kPi = 3.14159265358979323846;
const Scalar kSqrt2Local = std::sqrt(2.0);
}  // namespace

const char* to_string(DesignMode m) {
    switch (m) {
        case DesignMode::MaxThreshold: return "max-threshold";
        case DesignMode::MaxRateVariableSide: return "max-rate";
        case DesignMode::MinCheckAverage: return "min-check-avg";
    }
    return "?";
}

void DesignProblem::validate_or_throw() const {
    const auto report = fixed_side.validate();
    if (!report.ok()) {
        std::ostringstream os;
        os << "DesignProblem: fixed side invalid:";
        for (const auto& v : report.violations) os << " " << v << ";";
        throw std::invalid_argument(os.str());
    }
    if (max_free_degree < 2)
        throw std::invalid_argument("DesignProblem: max_free_degree must be at least 2");
    const bool needs_eps = mode != DesignMode::MaxThreshold;
    if (needs_eps && !epsilon)
        throw std::invalid_argument("DesignProblem: epsilon required for this mode");
    if (epsilon && !(*epsilon > 0.0 && *epsilon < 1.0))
        throw std::invalid_argument("DesignProblem: epsilon must lie in (0,1)");
    if (rate_floor && mode == DesignMode::MinCheckAverage)
        throw std::invalid_argument("DesignProblem: rate_floor applies to variable-side modes");
}

AffinePoly build_constraint_poly(const DesignProblem& problem) {
    problem.validate_or_throw();
    const int free_deg = problem.max_free_degree;

    if (problem.mode == DesignMode::MinCheckAverage) {
        // Q(x) = sum_j rho_j (1 - eps*lambda(x))^{j-1} - (1 - x)
        const Poly lambda = dd_to_poly(problem.fixed_side);
        const int max_deg = std::max(1, (problem.fixed_side.max_degree() - 1) * (free_deg - 1));
        AffinePoly q(max_deg, free_deg - 1);
        const Poly base = Poly::constant(1.0) - *problem.epsilon * lambda;
        Poly power = Poly::constant(1.0);
        for (int j = 2; j <= free_deg; ++j) {
            power = power * base;
            q.add_scaled(j - 2, power);
        }
        q.add_constant(Poly{-1.0, 1.0});  // -(1 - x)
        return q;
    }

    // Variable-side modes: Q(x) = s*x - sum_i lambda_i B_i(x) with
    // B_i(x) = (1 - rho(1-x))^{i-1}; s is t (a variable) or the constant 1/eps.
    const Poly rho = dd_to_poly(problem.fixed_side);
    const bool with_t = problem.mode == DesignMode::MaxThreshold;
    const int n_vars = (free_deg - 1) + (with_t ? 1 : 0);
    const int max_deg = std::max(1, (problem.fixed_side.max_degree() - 1) * (free_deg - 1));
    AffinePoly q(max_deg, n_vars);

    const Poly inner = Poly::constant(1.0) - poly_compose(rho, Poly{1.0, -1.0});  // 1 - rho(1-x)
    Poly basis = Poly::constant(1.0);
    for (int i = 2; i <= free_deg; ++i) {
        basis = basis * inner;
        q.add_scaled(i - 2, basis, -1.0);
    }
    if (with_t)
        q.add_scaled(n_vars - 1, Poly::identity());
    else
        q.add_constant((1.0 / *problem.epsilon) * Poly::identity());
    return q;
}

Vector SdpAssembly::decision_of(const Vector& primal) const {
    Vector z(n_dec);
    for (int j = 0; j < n_dec; ++j) {
        z[j] = shift[j] + primal[pos_index[j]];
        if (neg_index[j] >= 0) z[j] -= primal[neg_index[j]];
    }
    return z;
}

Matrix SdpAssembly::gram_of(const Vector& primal) const {
    const int m = problem.psd_order;
    const Matrix Bs = smat(primal.tail(svec_dim(m)), m);
    return gram_basis_scale.asDiagonal() * Bs * gram_basis_scale.asDiagonal();
}

SdpAssembly assemble_poly_program(const PolyProgram& prog) {
    const int n_dec = prog.constraint.n_vars();
    if (prog.objective.size() != n_dec)
        throw std::invalid_argument("assemble_poly_program: objective length mismatch");

    SdpAssembly out;
    out.q = std::max(1, prog.constraint.degree());
    out.n_dec = n_dec;
    out.shift = prog.shift.size() == n_dec ? prog.shift : Vector::Zero(n_dec);

    const int m = out.q + 1;
    const int ns = svec_dim(m);
    const int n_ineq = static_cast<int>(prog.ineq_lhs.rows());
    const int n_eq = static_cast<int>(prog.eq_lhs.rows());

    out.pos_index.resize(n_dec);
    out.neg_index.assign(n_dec, -1);
    int col = 0;
    for (int j = 0; j < n_dec; ++j) {
        out.pos_index[j] = col++;
        if (j < static_cast<int>(prog.is_free.size()) && prog.is_free[j]) out.neg_index[j] = col++;
    }
    const int slack0 = col;
    const int orthant_dim = col + n_ineq;
    const int n_total = orthant_dim + ns;
    const int rows = n_eq + n_ineq + (2 * out.q + 1);

    ConicProblem& p = out.problem;
    p.orthant_dim = orthant_dim;
    p.psd_order = m;
    p.A = Matrix::Zero(rows, n_total);
    p.b = Vector::Zero(rows);
    p.c = Vector::Zero(n_total);

    auto put_decision_row = [&](int row, const Vector& coeffs) {
        for (int j = 0; j < n_dec; ++j) {
            p.A(row, out.pos_index[j]) = coeffs[j];
            if (out.neg_index[j] >= 0) p.A(row, out.neg_index[j]) = -coeffs[j];
        }
        p.b[row] -= coeffs.dot(out.shift);
    };

    int row = 0;
    for (int k = 0; k < n_eq; ++k, ++row) {
        p.b[row] = prog.eq_rhs[k];
        put_decision_row(row, prog.eq_lhs.row(k).transpose());
    }
    for (int k = 0; k < n_ineq; ++k, ++row) {
        p.b[row] = prog.ineq_rhs[k];
        put_decision_row(row, prog.ineq_lhs.row(k).transpose());
        p.A(row, slack0 + k) = -1.0;
    }

    // Gram rows, in sampled form: the identity Pi(u) = v(u)' B v(u) holds iff
    // it holds at 2q+1 distinct points. With u = tan(psi) and the
    // binomial-scaled basis, dividing through by (1+u^2)^q gives
    //   Q(sin^2 psi_r; z) = w_r' Bs w_r,   w_r(i) = sqrt(C(q,i)) sin^i cos^{q-i},
    // whose rows are unit-scaled for any q (the monomial anti-diagonal form
    // overflows double precision once the binomials reach ~2^q).
    p.psd_rank1 = Matrix::Zero(rows, m);
    p.has_psd_rank1 = true;
    out.gram_basis_scale = Vector(m);
    for (int i = 0; i < m; ++i) out.gram_basis_scale[i] = std::sqrt(binomial(out.q, i));
    const Matrix& forms = prog.constraint.forms();
    for (int r = 0; r <= 2 * out.q; ++r, ++row) {
        const Scalar psi = kPi * static_cast<Scalar>(r - out.q) / static_cast<Scalar>(2 * out.q + 1);
        const Scalar sn = std::sin(psi), cs = std::cos(psi);
        const Scalar x = sn * sn;
        Vector vals = Vector::Zero(forms.cols());
        for (Eigen::Index k = forms.rows() - 1; k >= 0; --k)
            vals = x * vals + forms.row(k).transpose();
        p.b[row] = -vals[0];
        put_decision_row(row, vals.tail(n_dec));
        Vector w(m);
        Scalar spow = 1.0;
        for (int i = 0; i < m; ++i) {
            w[i] = out.gram_basis_scale[i] * spow * std::pow(cs, out.q - i);
            spow *= sn;
        }
        p.psd_rank1.row(row) = w.transpose();
        // svec of the rank-1 form: diagonal w_i^2, off-diagonal sqrt(2) w_i w_j.
        int idx = orthant_dim;
        for (int i = 0; i < m; ++i) {
            p.A(row, idx++) = -w[i] * w[i];
            for (int j = i + 1; j < m; ++j) p.A(row, idx++) = -kSqrt2Local * w[i] * w[j];
        }
    }

    for (int j = 0; j < n_dec; ++j) {
        p.c[out.pos_index[j]] = prog.objective[j];
        if (out.neg_index[j] >= 0) p.c[out.neg_index[j]] = -prog.objective[j];
    }
    out.objective_offset = prog.objective.dot(out.shift);
    return out;
}

namespace {

PolyProgram design_program(const DesignProblem& problem) {
    PolyProgram prog;
    prog.constraint = build_constraint_poly(problem);
    const int n_dec = prog.constraint.n_vars();
    const int n_frac = problem.max_free_degree - 1;  // simplex variables

    prog.objective = Vector::Zero(n_dec);
    prog.shift = Vector::Zero(n_dec);
    switch (problem.mode) {
        case DesignMode::MaxThreshold:
            prog.objective[n_dec - 1] = 1.0;  // min t
            prog.shift[n_dec - 1] = 1.0;      // t >= 1
            break;
        case DesignMode::MaxRateVariableSide:
            for (int i = 2; i <= problem.max_free_degree; ++i)
                prog.objective[i - 2] = -1.0 / static_cast<Scalar>(i);
            break;
        case DesignMode::MinCheckAverage:
            for (int j = 2; j <= problem.max_free_degree; ++j)
                prog.objective[j - 2] = 1.0 / static_cast<Scalar>(j);
            break;
    }

    prog.eq_lhs = Matrix::Zero(1, n_dec);
    prog.eq_lhs.row(0).head(n_frac).setOnes();
    prog.eq_rhs = Vector::Constant(1, 1.0);

    if (problem.rate_floor) {
        // rate >= r0  <=>  sum lambda_i/i >= inv_avg(rho)/(1 - r0)
        prog.ineq_lhs = Matrix::Zero(1, n_dec);
        for (int i = 2; i <= problem.max_free_degree; ++i)
            prog.ineq_lhs(0, i - 2) = 1.0 / static_cast<Scalar>(i);
        prog.ineq_rhs =
            Vector::Constant(1, inv_avg(problem.fixed_side) / (1.0 - *problem.rate_floor));
    } else {
        prog.ineq_lhs = Matrix::Zero(0, n_dec);
        prog.ineq_rhs = Vector::Zero(0);
    }
    return prog;
}

DegreeDistribution distribution_of(const Vector& z, int max_degree) {
    std::map<int, Scalar> coeffs;
    for (int d = 2; d <= max_degree; ++d) {
        const Scalar v = z[d - 2];
        if (v > 0.0) coeffs[d] = v;
    }
    return DegreeDistribution(std::move(coeffs));
}

struct InnerSolve {
    SdpAssembly assembly;
    ConicSolution solution;
    Scalar objective_lo = 0.0;
    Scalar objective_hi = 0.0;
    Vector z;  // recovered decision variables (valid when Optimal)
};

InnerSolve solve_inner_sdp(const DesignProblem& problem) {
    InnerSolve inner;
    inner.assembly = assemble_sdp(problem);
    inner.solution = solve(inner.assembly.problem, problem.solver);
    inner.objective_lo = inner.solution.dual_objective + inner.assembly.objective_offset;
    inner.objective_hi = inner.solution.primal_objective + inner.assembly.objective_offset;
    if (inner.solution.status == SolveStatus::Optimal)
        inner.z = inner.assembly.decision_of(inner.solution.primal);
    return inner;
}

// Grid LP solved through its dual: one standard-form row per design
// variable, one orthant column per grid multiplier.
InnerSolve solve_inner_grid(const DesignProblem& problem) {
    const PolyProgram prog = design_program(problem);
    const int n_dec = prog.constraint.n_vars();
    const int N = problem.grid_size;

    // Primal data over shifted variables z' >= 0:
    //   min f.z'  s.t.  E z' = e,  G z' >= h
    // with the grid rows Q(x_k) >= 0 appended to the explicit inequalities.
    const int n_eq = static_cast<int>(prog.eq_lhs.rows());
    const int n_in0 = static_cast<int>(prog.ineq_lhs.rows());
    const int n_in = n_in0 + N;

    Matrix G(n_in, n_dec);
    Vector h(n_in);
    for (int k = 0; k < n_in0; ++k) {
        G.row(k) = prog.ineq_lhs.row(k);
        h[k] = prog.ineq_rhs[k] - prog.ineq_lhs.row(k).dot(prog.shift);
    }
    const Matrix& forms = prog.constraint.forms();
    for (int k = 1; k <= N; ++k) {
        const Scalar x = static_cast<Scalar>(k) / static_cast<Scalar>(N);
        Vector vals = Vector::Zero(forms.cols());
        for (Eigen::Index r = forms.rows() - 1; r >= 0; --r)
            vals = x * vals + forms.row(r).transpose();
        const int row = n_in0 + k - 1;
        G.row(row) = vals.tail(n_dec).transpose();
        h[row] = -vals[0] - G.row(row).dot(prog.shift);
    }

    Matrix E(n_eq, n_dec);
    Vector e(n_eq);
    for (int k = 0; k < n_eq; ++k) {
        E.row(k) = prog.eq_lhs.row(k);
        e[k] = prog.eq_rhs[k] - prog.eq_lhs.row(k).dot(prog.shift);
    }

    // Dual standard form over (nu+, nu-, w, r) >= 0:
    //   min (-e, e, -h, 0) . v  s.t.  [E' | -E' | G' | I] v = f.
    ConicProblem dual;
    dual.orthant_dim = 2 * n_eq + n_in + n_dec;
    dual.psd_order = 0;
    dual.A = Matrix::Zero(n_dec, dual.orthant_dim);
    dual.A.block(0, 0, n_dec, n_eq) = E.transpose();
    dual.A.block(0, n_eq, n_dec, n_eq) = -E.transpose();
    dual.A.block(0, 2 * n_eq, n_dec, n_in) = G.transpose();
    dual.A.block(0, 2 * n_eq + n_in, n_dec, n_dec) = Matrix::Identity(n_dec, n_dec);
    dual.b = prog.objective;
    dual.c = Vector::Zero(dual.orthant_dim);
    dual.c.segment(0, n_eq) = -e;
    dual.c.segment(n_eq, n_eq) = e;
    dual.c.segment(2 * n_eq, n_in) = -h;

    InnerSolve inner;
    inner.solution = solve(dual, problem.solver);
    // Infeasibility and unboundedness swap roles under dualization.
    if (inner.solution.status == SolveStatus::Infeasible)
        inner.solution.status = SolveStatus::Unbounded;
    else if (inner.solution.status == SolveStatus::Unbounded)
        inner.solution.status = SolveStatus::Infeasible;

    const Scalar off = prog.objective.dot(prog.shift);
    inner.objective_lo = -inner.solution.primal_objective + off;
    inner.objective_hi = -inner.solution.dual_objective + off;
    if (inner.solution.status == SolveStatus::Optimal)
        inner.z = prog.shift - inner.solution.dual;  // design vars are the row multipliers
    return inner;
}

// Shared result packaging once a variable assignment z is known.
void package_result(const DesignProblem& problem, const Vector& z, DesignResult& res) {
    const bool check_side_free = problem.mode == DesignMode::MinCheckAverage;

    DegreeDistribution free_side = distribution_of(z, problem.max_free_degree);
    res.pruned_mass = free_side.prune(1e-8);
    free_side.renormalize();
    if (res.pruned_mass > 0.0) {
        std::ostringstream os;
        os << "pruned " << res.pruned_mass << " edge mass below 1e-8 and renormalized; ";
        res.notes += os.str();
    }
    res.free_side = free_side;
    res.ensemble = check_side_free ? Ensemble{problem.fixed_side, free_side}
                                   : Ensemble{free_side, problem.fixed_side};

    if (problem.mode == DesignMode::MaxThreshold) {
        res.t_star = z[z.size() - 1];
        res.epsilon_used = 1.0 / res.t_star;
    } else {
        res.epsilon_used = *problem.epsilon;
        res.t_star = 1.0 / res.epsilon_used;
    }
    res.rate = rate(res.ensemble);
    res.delta = res.rate >= 0.0 ? capacity_gap(res.rate, res.epsilon_used)
                                : std::numeric_limits<Scalar>::quiet_NaN();

    // Reported constraint polynomial at the pruned solution.
    Vector z_rep = z;
    for (int d = 2; d <= problem.max_free_degree; ++d)
        z_rep[d - 2] = res.free_side.fraction(d);
    const AffinePoly qpoly = build_constraint_poly(problem);
    res.constraint_poly = qpoly.substitute(z_rep);
    res.q = std::max(1, qpoly.degree());

    // Density-evolution verification.
    const Poly lam = dd_to_poly(res.ensemble.lambda);
    const Poly rho = dd_to_poly(res.ensemble.rho);
    DeReport rep = de_converges(std::max(1e-6, res.epsilon_used - 0.005), lam, rho);
    rep.threshold_estimate = threshold_bisect(lam, rho);
    rep.grid_min = grid_check(res.constraint_poly, 100000);
    res.de = rep;
}

DesignResult failed_result(const DesignProblem& problem, const InnerSolve& inner) {
    DesignResult res;
    res.mode = problem.mode;
    res.solver_status = inner.solution.status;
    res.solver_iterations = inner.solution.iterations;
    res.solver_gap = inner.solution.duality_gap;
    res.notes = inner.solution.message;
    res.rate_floor_used = problem.rate_floor;
    return res;
}

DesignResult finish_sdp_result(const DesignProblem& problem, const InnerSolve& inner) {
    if (inner.solution.status != SolveStatus::Optimal) return failed_result(problem, inner);

    DesignResult res;
    res.mode = problem.mode;
    res.solver_status = inner.solution.status;
    res.solver_iterations = inner.solution.iterations;
    res.solver_gap = inner.solution.duality_gap;
    res.objective_lo = inner.objective_lo;
    res.objective_hi = inner.objective_hi;
    res.objective = inner.objective_hi;
    res.rate_floor_used = problem.rate_floor;

    package_result(problem, inner.z, res);
    res.certificate = verify_certificate(res.constraint_poly, res.q,
                                         inner.assembly.gram_of(inner.solution.primal));
    res.has_certificate = true;
    return res;
}

DesignResult finish_grid_result(const DesignProblem& problem, const InnerSolve& inner) {
    if (inner.solution.status != SolveStatus::Optimal) {
        DesignResult res = failed_result(problem, inner);
        res.notes += " (grid baseline)";
        return res;
    }
    DesignResult res;
    res.mode = problem.mode;
    res.solver_status = inner.solution.status;
    res.solver_iterations = inner.solution.iterations;
    res.solver_gap = inner.solution.duality_gap;
    res.objective_lo = inner.objective_lo;
    res.objective_hi = inner.objective_hi;
    res.objective = inner.objective_hi;
    res.rate_floor_used = problem.rate_floor;
    package_result(problem, inner.z, res);
    res.has_certificate = false;
    res.notes += "grid relaxation; no sum-of-squares certificate; ";
    return res;
}

using InnerFn = InnerSolve (*)(const DesignProblem&);
using FinishFn = DesignResult (*)(const DesignProblem&, const InnerSolve&);

// Largest epsilon whose anchored min-t solve certifies a threshold at least
// as large as the anchor: regula falsi on g(r) = 1/t*(r) - r, decreasing in r.
DesignResult solve_max_threshold(const DesignProblem& problem, InnerFn inner_solve,
                                 FinishFn finish) {
    DesignProblem sub = problem;

    const Scalar rate_cap = std::max(0.0, 1.0 - 2.0 * inv_avg(problem.fixed_side));
    Scalar lo = 0.0;
    Scalar hi = std::min(0.999, rate_cap + 1e-6);

    sub.rate_floor = lo;
    InnerSolve best = inner_solve(sub);
    int outer = 1;
    if (best.solution.status != SolveStatus::Optimal) {
        DesignResult res = finish(sub, best);
        res.outer_iterations = outer;
        return res;
    }
    Scalar g_lo = 1.0 / best.objective_hi - lo;
    Scalar best_floor = lo;
    Scalar g_best = g_lo;
    bool have_g_hi = false;
    Scalar g_hi = 0.0;

    for (; outer < 40 && std::abs(g_best) > 1e-7 && hi - lo > 1e-9; ++outer) {
        Scalar cand;
        if (have_g_hi && g_lo - g_hi > 1e-15) {
            cand = lo + g_lo * (hi - lo) / (g_lo - g_hi);  // secant through the bracket
        } else if (outer == 1) {
            cand = 1.0 / best.objective_hi;  // natural first guess: the unanchored threshold
        } else {
            cand = 0.5 * (lo + hi);
        }
        if (!(cand > lo + 1e-12 && cand < hi - 1e-12)) cand = 0.5 * (lo + hi);

        sub.rate_floor = cand;
        InnerSolve trial = inner_solve(sub);
        if (trial.solution.status != SolveStatus::Optimal) {
            hi = cand;
            have_g_hi = false;
            continue;
        }
        const Scalar g = 1.0 / trial.objective_hi - cand;
        if (std::abs(g) < std::abs(g_best)) {
            best = std::move(trial);
            best_floor = cand;
            g_best = g;
        }
        if (g >= 0.0) {
            lo = cand;
            g_lo = g;
        } else {
            hi = cand;
            g_hi = g;
            have_g_hi = true;
        }
    }

    sub.rate_floor = best_floor;
    DesignResult res = finish(sub, best);
    res.outer_iterations = outer;
    return res;
}

}  // namespace

SdpAssembly assemble_sdp(const DesignProblem& problem) {
    return assemble_poly_program(design_program(problem));
}

DesignResult solve_design(const DesignProblem& problem) {
    problem.validate_or_throw();
    if (problem.mode == DesignMode::MaxThreshold && !problem.rate_floor)
        return solve_max_threshold(problem, &solve_inner_sdp, &finish_sdp_result);
    return finish_sdp_result(problem, solve_inner_sdp(problem));
}

DesignResult solve_baseline_lp(const DesignProblem& problem) {
    problem.validate_or_throw();
    if (problem.grid_size < 2)
        throw std::invalid_argument("solve_baseline_lp: grid_size must be at least 2");
    if (problem.mode == DesignMode::MaxThreshold && !problem.rate_floor)
        return solve_max_threshold(problem, &solve_inner_grid, &finish_grid_result);
    return finish_grid_result(problem, solve_inner_grid(problem));
}

}  // namespace ldpcopt
