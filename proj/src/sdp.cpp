#include "ldpcopt/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ldpcopt {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::Unbounded: return "Unbounded";
        case SolveStatus::MaxIterations: return "MaxIterations";
        case SolveStatus::NumericalFailure: return "NumericalFailure";
    }
    return "?";
}

void ConicProblem::check_dimensions() const {
    if (orthant_dim < 0 || psd_order < 0)
        throw std::invalid_argument("ConicProblem: negative cone dimension");
    if (c.size() != n()) throw std::invalid_argument("ConicProblem: c has wrong length");
    if (A.cols() != n()) throw std::invalid_argument("ConicProblem: A has wrong column count");
    if (A.rows() != b.size()) throw std::invalid_argument("ConicProblem: A/b row mismatch");
    if (has_psd_rank1 && (psd_rank1.rows() != A.rows() || psd_rank1.cols() != psd_order))
        throw std::invalid_argument("ConicProblem: psd_rank1 shape mismatch");
}

int svec_dim(int m) { return m * (m + 1) / 2; }

int svec_index(int m, int i, int j) {
    // row-major upper triangle: (0,0),(0,1),...,(0,m-1),(1,1),...
    return i * m - i * (i - 1) / 2 + (j - i);
}

static const Scalar kSqrt2 = std::sqrt(2.0);

Vector svec(const Matrix& M) {
    const int m = static_cast<int>(M.rows());
    Vector v(svec_dim(m));
    int k = 0;
    for (int i = 0; i < m; ++i) {
        v[k++] = M(i, i);
        for (int j = i + 1; j < m; ++j) v[k++] = kSqrt2 * M(i, j);
    }
    return v;
}

Matrix smat(const Vector& v, int m) {
    Matrix M(m, m);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        M(i, i) = v[k++];
        for (int j = i + 1; j < m; ++j) {
            M(i, j) = M(j, i) = v[k++] / kSqrt2;
        }
    }
    return M;
}

Vector antidiag_svec_row(int m, int l) {
    Vector row = Vector::Zero(svec_dim(m));
    for (int i = std::max(0, l - m + 1); i <= l / 2 && i < m; ++i) {
        const int j = l - i;
        if (j >= m) continue;
        row[svec_index(m, i, j)] = (i == j) ? 1.0 : kSqrt2;
    }
    return row;
}

namespace {

struct PsdEntry {
    int i, j;   // i <= j
    Scalar v;   // symmetric matrix entry value (both (i,j) and (j,i))
};

// Sparse symmetric-matrix representers of each equality row's PSD part.
std::vector<std::vector<PsdEntry>> build_psd_rows(const Matrix& A, int orthant_dim, int m) {
    std::vector<std::vector<PsdEntry>> rows(A.rows());
    for (int k = 0; k < A.rows(); ++k) {
        int idx = orthant_dim;
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j, ++idx) {
                const Scalar a = A(k, idx);
                if (a != 0.0) rows[k].push_back({i, j, i == j ? a : a / kSqrt2});
            }
        }
    }
    return rows;
}

struct Blocks {
    int no;  // orthant dimension
    int m;   // psd order
    int ns;  // svec length

    auto orth(Vector& v) const { return v.head(no); }
    auto orth(const Vector& v) const { return v.head(no); }
    auto psd(Vector& v) const { return v.tail(ns); }
    auto psd(const Vector& v) const { return v.tail(ns); }
};

Scalar max_step_orth(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& dx) {
    Scalar amax = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (dx[i] < 0.0) amax = std::min(amax, -x[i] / dx[i]);
    return amax;
}

class SolveDriver {
  public:
    SolveDriver(const ConicProblem& p, const SolverSettings& st) : prob_(p), st_(st) {}

    ConicSolution run();

  private:
    const ConicProblem& prob_;
    const SolverSettings& st_;

    Blocks bl_{};
    Matrix A_;        // equilibrated, full-rank working matrix
    Vector b_, c_;
    Matrix W_;        // rank-1 PSD row factors (scaled), when provided
    Vector row_scale_;
    std::vector<int> kept_rows_, dropped_rows_;
    std::vector<std::vector<PsdEntry>> psd_rows_;

    // iterates
    Vector x_, y_, s_;

    // Cholesky of A A' for primal-direction cleanup (A is fixed data).
    Eigen::LDLT<Matrix> aat_;

    // per-iteration NT scaling state
    Vector d_orth_, lam_orth_;
    Matrix R_, Rinv_, T_;
    Vector lam_psd_;

    bool preprocess(ConicSolution& sol);
    void initialize();
    bool compute_scaling();
    Matrix schur();
    Vector apply_P(const Vector& w) const;
    Scalar max_step(const Vector& v, const Vector& dv, bool primal) const;
    ConicSolution finish(SolveStatus status, int iters, const std::string& msg) const;
};

bool SolveDriver::preprocess(ConicSolution& sol) {
    prob_.check_dimensions();
    bl_ = Blocks{prob_.orthant_dim, prob_.psd_order, svec_dim(prob_.psd_order)};

    const int me = static_cast<int>(prob_.A.rows());
    Matrix As = prob_.A;
    Vector bs = prob_.b;
    W_ = prob_.has_psd_rank1 ? prob_.psd_rank1 : Matrix();
    row_scale_ = Vector::Ones(me);
    for (int k = 0; k < me; ++k) {
        const Scalar sc = std::max(As.row(k).cwiseAbs().maxCoeff(), 1e-12);
        row_scale_[k] = sc;
        As.row(k) /= sc;
        bs[k] /= sc;
        if (W_.size() > 0) W_.row(k) /= std::sqrt(sc);
    }

    // Rank check; dependent rows are dropped (warning) unless inconsistent.
    Eigen::ColPivHouseholderQR<Matrix> qr(As.transpose());
    qr.setThreshold(1e-10);
    const int rank = static_cast<int>(qr.rank());
    if (rank < me) {
        const auto perm = qr.colsPermutation().indices();
        std::vector<bool> keep(me, false);
        for (int k = 0; k < rank; ++k) keep[perm[k]] = true;
        Matrix Ak(rank, As.cols());
        Vector bk(rank);
        Matrix Wk(W_.size() > 0 ? rank : 0, W_.cols());
        int r = 0;
        for (int k = 0; k < me; ++k) {
            if (keep[k]) {
                Ak.row(r) = As.row(k);
                bk[r] = bs[k];
                if (W_.size() > 0) Wk.row(r) = W_.row(k);
                kept_rows_.push_back(k);
                ++r;
            } else {
                dropped_rows_.push_back(k);
            }
        }
        // Consistency of the dropped rows: b must lie in the row space image.
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(Ak.transpose());
        for (int k : dropped_rows_) {
            const Vector combo = cod.solve(As.row(k).transpose());
            const Scalar pred = combo.dot(bk);
            if (std::abs(pred - bs[k]) > 1e-8 * (1.0 + std::abs(bs[k]))) {
                sol = finish(SolveStatus::Infeasible, 0, "inconsistent dependent equality rows");
                return false;
            }
        }
        A_ = std::move(Ak);
        b_ = std::move(bk);
        if (W_.size() > 0) W_ = std::move(Wk);
    } else {
        for (int k = 0; k < me; ++k) kept_rows_.push_back(k);
        A_ = std::move(As);
        b_ = std::move(bs);
    }
    c_ = prob_.c;
    if (W_.size() == 0) psd_rows_ = build_psd_rows(A_, bl_.no, bl_.m);
    aat_.compute(A_ * A_.transpose());
    return true;
}

void SolveDriver::initialize() {
    const int n = prob_.n();
    const Scalar xi = std::max(1.0, b_.size() > 0 ? b_.cwiseAbs().maxCoeff() : 1.0);
    x_ = Vector::Zero(n);
    bl_.orth(x_).setConstant(xi);
    if (bl_.m > 0) bl_.psd(x_) = svec(xi * Matrix::Identity(bl_.m, bl_.m));

    // Least-squares multipliers, then shift the slack into the cone interior.
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A_.transpose());
    y_ = cod.solve(c_);
    Vector s_raw = c_ - A_.transpose() * y_;
    s_ = s_raw;
    const Scalar tau = std::max(0.1, 0.1 * s_raw.cwiseAbs().maxCoeff());
    if (bl_.no > 0) {
        const Scalar mn = bl_.orth(s_raw).minCoeff();
        bl_.orth(s_).array() += std::max(0.0, -mn) + tau;
    }
    if (bl_.m > 0) {
        Matrix S = smat(bl_.psd(s_raw), bl_.m);
        Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
        S += (std::max(0.0, -es.eigenvalues().minCoeff()) + tau) * Matrix::Identity(bl_.m, bl_.m);
        bl_.psd(s_) = svec(S);
    }
}

bool SolveDriver::compute_scaling() {
    if (bl_.no > 0) {
        d_orth_ = (bl_.orth(x_).array() / bl_.orth(s_).array()).sqrt();
        lam_orth_ = (bl_.orth(x_).array() * bl_.orth(s_).array()).sqrt();
    }
    if (bl_.m > 0) {
        // Any factor F with M = F F' works for the NT recipe; fall back to a
        // clamped eigenfactor when Cholesky loses positivity to rounding.
        auto factor = [](const Matrix& M, Matrix& F) {
            Eigen::LLT<Matrix> llt(M);
            if (llt.info() == Eigen::Success) {
                F = llt.matrixL();
                return true;
            }
            Eigen::SelfAdjointEigenSolver<Matrix> es(M);
            if (es.info() != Eigen::Success) return false;
            const Scalar top = es.eigenvalues().maxCoeff();
            if (!(top > 0.0)) return false;
            const Vector ev = es.eigenvalues().cwiseMax(1e-14 * top);
            F = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();
            return true;
        };
        Matrix Lx, Ls;
        if (!factor(smat(bl_.psd(x_), bl_.m), Lx) || !factor(smat(bl_.psd(s_), bl_.m), Ls))
            return false;
        Eigen::BDCSVD<Matrix> svd(Ls.transpose() * Lx, Eigen::ComputeFullU | Eigen::ComputeFullV);
        lam_psd_ = svd.singularValues();
        if (lam_psd_.minCoeff() <= 0.0) return false;
        const Vector isqrt = lam_psd_.cwiseSqrt().cwiseInverse();
        R_ = Lx * svd.matrixV() * isqrt.asDiagonal();
        Rinv_ = isqrt.asDiagonal() * svd.matrixU().transpose() * Ls.transpose();
        T_ = R_ * R_.transpose();
    }
    return true;
}

Matrix SolveDriver::schur() {
    const int me = static_cast<int>(A_.rows());
    Matrix M = Matrix::Zero(me, me);
    if (bl_.no > 0) {
        const Matrix Ao = A_.leftCols(bl_.no);
        M = Ao * d_orth_.cwiseAbs2().asDiagonal() * Ao.transpose();
    }
    if (bl_.m > 0 && W_.size() > 0) {
        // Rank-1 PSD rows: <w_k w_k', T w_l w_l' T> = (w_k' T w_l)^2.
        const Matrix G = W_ * T_ * W_.transpose();
        M += G.cwiseAbs2();
    } else if (bl_.m > 0) {
        // M_kl += <A_l, T A_k T> accumulated over sparse representer entries.
        for (int k = 0; k < me; ++k) {
            for (int l = k; l < me; ++l) {
                Scalar acc = 0.0;
                for (const auto& e : psd_rows_[l]) {
                    const Scalar wfac = (e.i == e.j) ? e.v : 2.0 * e.v;
                    Scalar mrc = 0.0;
                    for (const auto& f : psd_rows_[k]) {
                        Scalar t = T_(e.i, f.i) * T_(f.j, e.j);
                        if (f.i != f.j) t += T_(e.i, f.j) * T_(f.i, e.j);
                        mrc += f.v * t;
                    }
                    acc += wfac * mrc;
                }
                M(k, l) += acc;
                if (l != k) M(l, k) += acc;
            }
        }
    }
    return M;
}

Vector SolveDriver::apply_P(const Vector& w) const {
    Vector out(w.size());
    if (bl_.no > 0) bl_.orth(out) = d_orth_.cwiseAbs2().cwiseProduct(bl_.orth(w));
    if (bl_.m > 0) bl_.psd(out) = svec(T_ * smat(bl_.psd(w), bl_.m) * T_);
    return out;
}

Scalar SolveDriver::max_step(const Vector& v, const Vector& dv, bool primal) const {
    Scalar amax = std::numeric_limits<Scalar>::infinity();
    if (bl_.no > 0) amax = std::min(amax, max_step_orth(bl_.orth(v), bl_.orth(dv)));
    if (bl_.m > 0) {
        // In scaled coordinates both X and S sit at diag(lam_psd).
        const Matrix D = primal ? Matrix(Rinv_ * smat(bl_.psd(dv), bl_.m) * Rinv_.transpose())
                                : Matrix(R_.transpose() * smat(bl_.psd(dv), bl_.m) * R_);
        const Vector isqrt = lam_psd_.cwiseSqrt().cwiseInverse();
        const Matrix G = isqrt.asDiagonal() * D * isqrt.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Matrix> es(G, Eigen::EigenvaluesOnly);
        const Scalar emin = es.eigenvalues().minCoeff();
        if (emin < 0.0) amax = std::min(amax, -1.0 / emin);
    }
    return amax;
}

ConicSolution SolveDriver::finish(SolveStatus status, int iters, const std::string& msg) const {
    ConicSolution sol;
    sol.status = status;
    sol.iterations = iters;
    sol.message = msg;
    const int n = prob_.n();
    sol.primal = x_.size() == n ? x_ : Vector::Zero(n);
    sol.dual = Vector::Zero(prob_.A.rows());
    sol.dual_slack = s_.size() == n ? s_ : Vector::Zero(n);
    if (y_.size() == static_cast<Eigen::Index>(kept_rows_.size())) {
        for (size_t k = 0; k < kept_rows_.size(); ++k)
            sol.dual[kept_rows_[k]] = y_[static_cast<Eigen::Index>(k)] / row_scale_[kept_rows_[k]];
    }
    sol.dropped_rows = dropped_rows_;
    if (x_.size() == n) {
        sol.primal_objective = prob_.c.dot(x_);
        sol.dual_objective = prob_.b.dot(sol.dual);
        sol.duality_gap = x_.dot(sol.dual_slack);
        sol.primal_residual = (prob_.A * x_ - prob_.b).cwiseAbs().maxCoeff() /
                              (1.0 + prob_.b.cwiseAbs().maxCoeff());
        sol.dual_residual =
            (prob_.c - prob_.A.transpose() * sol.dual - sol.dual_slack).cwiseAbs().maxCoeff() /
            (1.0 + prob_.c.cwiseAbs().maxCoeff());
    }
    return sol;
}

ConicSolution SolveDriver::run() {
    ConicSolution pre;
    if (!preprocess(pre)) return pre;
    if (prob_.n() == 0) return finish(SolveStatus::Optimal, 0, "empty problem");
    initialize();

    const Scalar nu = static_cast<Scalar>(bl_.no + bl_.m);
    const Scalar bscale = 1.0 + b_.cwiseAbs().maxCoeff();
    const Scalar cscale = 1.0 + c_.cwiseAbs().maxCoeff();
    int stalls = 0;
    int no_progress = 0;

    // Snapshot of the best iterate by worst-case optimality measure; the
    // endgame can lose ground numerically after the gap has converged.
    Vector best_x = x_, best_y = y_, best_s = s_;
    Scalar best_merit = std::numeric_limits<Scalar>::infinity();
    Scalar prev_ap = 1.0, prev_ad = 1.0;

    auto finish_from_best = [&](SolveStatus fallback, int iter, const std::string& msg) {
        x_ = best_x;
        y_ = best_y;
        s_ = best_s;
        return finish(best_merit <= 1.0 ? SolveStatus::Optimal : fallback, iter, msg);
    };

    for (int iter = 0; iter < st_.max_iter; ++iter) {
        if (!x_.allFinite() || !s_.allFinite() || !y_.allFinite())
            return finish(SolveStatus::NumericalFailure, iter, "non-finite iterate");

        const Vector rp = b_ - A_ * x_;
        const Vector rd = c_ - A_.transpose() * y_ - s_;
        const Scalar gap = x_.dot(s_);
        const Scalar obj = c_.dot(x_);
        const Scalar rp_norm = rp.cwiseAbs().maxCoeff() / bscale;
        const Scalar rd_norm = rd.cwiseAbs().maxCoeff() / cscale;

        if (st_.verbose) {
            std::ostringstream os;
            os << "iter " << iter << " gap " << gap << " rp " << rp_norm << " rd " << rd_norm;
            std::fputs((os.str() + "\n").c_str(), stderr);
        }

        const Scalar merit = std::max({gap / (st_.gap_tol * (1.0 + std::abs(obj))),
                                       rp_norm / st_.feas_tol, rd_norm / st_.feas_tol});
        if (merit < best_merit) {
            best_merit = merit;
            best_x = x_;
            best_y = y_;
            best_s = s_;
            no_progress = 0;
        } else if (++no_progress >= 10) {
            return finish_from_best(SolveStatus::MaxIterations, iter,
                                    "no further progress; returning best iterate");
        }

        if (merit <= 1.0) return finish(SolveStatus::Optimal, iter, "converged");

        // Farkas-style certificates from the diverging iterates.
        const Scalar bty = b_.dot(y_);
        if (bty > 1.0) {
            const Scalar certres = (A_.transpose() * y_ + s_).cwiseAbs().maxCoeff() / bty;
            if (certres <= 1e-9 * cscale)
                return finish(SolveStatus::Infeasible, iter, "primal infeasibility certificate");
        }
        if (obj < -1.0) {
            const Scalar certres = (A_ * x_).cwiseAbs().maxCoeff() / (-obj);
            if (certres <= 1e-9 * bscale)
                return finish(SolveStatus::Unbounded, iter, "dual infeasibility certificate");
        }

        if (!compute_scaling())
            return finish_from_best(SolveStatus::NumericalFailure, iter,
                                    "iterate left the cone interior");

        Matrix M = schur();
        Eigen::LLT<Matrix> llt(M);
        Eigen::LDLT<Matrix> ldlt;
        const bool use_llt = (llt.info() == Eigen::Success);
        if (!use_llt) {
            ldlt.compute(M + 1e-13 * std::max(1.0, M.trace()) * Matrix::Identity(M.rows(), M.cols()));
            if (ldlt.info() != Eigen::Success)
                return finish_from_best(SolveStatus::NumericalFailure, iter,
                                        "singular Newton system");
        }
        auto schur_solve = [&](const Vector& rhs) {
            Vector dy = use_llt ? Vector(llt.solve(rhs)) : Vector(ldlt.solve(rhs));
            for (int refine = 0; refine < 2; ++refine) {
                const Vector resid = rhs - M * dy;
                if (use_llt)
                    dy += llt.solve(resid);
                else
                    dy += ldlt.solve(resid);
            }
            return dy;
        };
        auto solve_newton = [&](const Vector& c0, Vector& dx, Vector& dy, Vector& ds) {
            const Vector rhs = rp - A_ * c0 + A_ * apply_P(rd);
            dy = schur_solve(rhs);
            ds = rd - A_.transpose() * dy;
            dx = c0 - apply_P(ds);
            // The sandwich through the NT scaling loses digits near the
            // boundary; restore A dx = rp exactly with a row-space correction.
            dx += A_.transpose() * aat_.solve(rp - A_ * dx);
        };

        const Scalar mu = gap / nu;

        // Fraction-to-boundary factor backs off after short steps.
        const Scalar gamma = std::min(st_.step_fraction, 0.9 + 0.09 * std::min(prev_ap, prev_ad));

        // Predictor.
        Vector dx_a, dy_a, ds_a;
        solve_newton(Vector(-x_), dx_a, dy_a, ds_a);
        const Scalar ap_a = std::min(1.0, gamma * max_step(x_, dx_a, true));
        const Scalar ad_a = std::min(1.0, gamma * max_step(s_, ds_a, false));
        const Scalar mu_aff = (x_ + ap_a * dx_a).dot(s_ + ad_a * ds_a) / nu;
        const Scalar sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        // Corrector right-hand side in the scaled space.
        Vector c0 = Vector::Zero(prob_.n());
        if (bl_.no > 0) {
            const Vector dxh = bl_.orth(dx_a).cwiseQuotient(d_orth_);
            const Vector dsh = d_orth_.cwiseProduct(bl_.orth(ds_a));
            const Vector rhs = (sigma * mu - lam_orth_.array().square()).matrix() -
                               dxh.cwiseProduct(dsh);
            bl_.orth(c0) = d_orth_.cwiseProduct(rhs.cwiseQuotient(lam_orth_));
        }
        if (bl_.m > 0) {
            const Matrix dXh = Rinv_ * smat(bl_.psd(dx_a), bl_.m) * Rinv_.transpose();
            const Matrix dSh = R_.transpose() * smat(bl_.psd(ds_a), bl_.m) * R_;
            const Matrix cross = dXh * dSh;
            Matrix rhs = sigma * mu * Matrix::Identity(bl_.m, bl_.m);
            rhs -= lam_psd_.cwiseAbs2().asDiagonal();
            rhs -= 0.5 * (cross + cross.transpose());
            for (int i = 0; i < bl_.m; ++i)
                for (int j = 0; j < bl_.m; ++j) rhs(i, j) /= 0.5 * (lam_psd_[i] + lam_psd_[j]);
            bl_.psd(c0) = svec(R_ * rhs * R_.transpose());
        }

        Vector dx, dy, ds;
        solve_newton(c0, dx, dy, ds);
        const Scalar ap = std::min(1.0, gamma * max_step(x_, dx, true));
        const Scalar ad = std::min(1.0, gamma * max_step(s_, ds, false));

        x_ += ap * dx;
        y_ += ad * dy;
        s_ += ad * ds;
        prev_ap = ap;
        prev_ad = ad;

        if (ap < 1e-8 && ad < 1e-8) {
            if (++stalls >= 3)
                return finish_from_best(SolveStatus::MaxIterations, iter, "step sizes collapsed");
        } else {
            stalls = 0;
        }
        if (gap / nu < 1e-300)
            return finish_from_best(SolveStatus::MaxIterations, iter, "mu underflow");
    }
    return finish_from_best(SolveStatus::MaxIterations, st_.max_iter, "iteration limit reached");
}

}  // namespace

ConicSolution solve(const ConicProblem& p, const SolverSettings& settings) {
    SolveDriver driver(p, settings);
    return driver.run();
}

KktReport check_kkt(const ConicProblem& p, const ConicSolution& s, const SolverSettings& settings) {
    p.check_dimensions();
    KktReport rep;
    std::ostringstream os;
    const Vector& x = s.primal;

    Scalar worst = 0.0;
    for (int k = 0; k < p.A.rows(); ++k) {
        const Scalar resid = std::abs(p.A.row(k).dot(x) - p.b[k]);
        const Scalar scale = 1.0 + std::abs(p.b[k]) + p.A.row(k).cwiseAbs().maxCoeff() *
                                                          x.cwiseAbs().maxCoeff();
        worst = std::max(worst, resid / scale);
    }
    rep.primal_residual = worst;
    if (worst > 10.0 * settings.feas_tol) {
        os.str("");
        os << "primal equality violation " << worst;
        rep.flags.push_back(os.str());
    }

    const Vector sd = p.c - p.A.transpose() * s.dual;
    rep.dual_residual = (sd - s.dual_slack).cwiseAbs().maxCoeff() /
                        (1.0 + p.c.cwiseAbs().maxCoeff());
    if (rep.dual_residual > 10.0 * settings.feas_tol) {
        os.str("");
        os << "dual equality violation " << rep.dual_residual;
        rep.flags.push_back(os.str());
    }

    rep.gap = x.dot(s.dual_slack) / (1.0 + std::abs(p.c.dot(x)));
    if (rep.gap > 10.0 * settings.gap_tol) {
        os.str("");
        os << "complementarity gap " << rep.gap;
        rep.flags.push_back(os.str());
    }

    if (p.orthant_dim > 0) {
        rep.orthant_min = x.head(p.orthant_dim).minCoeff();
        if (rep.orthant_min < -10.0 * settings.feas_tol) {
            os.str("");
            os << "orthant violation " << rep.orthant_min;
            rep.flags.push_back(os.str());
        }
    }
    if (p.psd_order > 0) {
        const Matrix X = smat(x.tail(svec_dim(p.psd_order)), p.psd_order);
        Eigen::SelfAdjointEigenSolver<Matrix> es(X, Eigen::EigenvaluesOnly);
        rep.psd_min_eigenvalue = es.eigenvalues().minCoeff();
        if (rep.psd_min_eigenvalue < -10.0 * settings.feas_tol * (X.trace() + 1.0)) {
            os.str("");
            os << "PSD violation " << rep.psd_min_eigenvalue;
            rep.flags.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace ldpcopt
