// tridiag.hpp — extreme eigenpair of a symmetric tridiagonal matrix
//
// The solver isolates the smallest eigenvalue with Sturm-sequence bisection
// (O(d) per step) and recovers the eigenvector with shifted inverse
// iteration.  Only the extreme pair is ever needed on the hot path; the
// full-spectrum routine is validation-grade and backed by a dense solver.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tc {

struct EigenSolution {
    double value = 0.0;
    std::vector<double> vector;  // unit norm, first nonzero component positive
    int iterations = 0;
    double residual = 0.0;  // ||T v - value v||_2
};

namespace detail {

inline void check_tridiagonal(const std::vector<double>& diag,
                              const std::vector<double>& sub) {
    if (diag.empty()) {
        throw std::invalid_argument("tridiagonal: empty diagonal");
    }
    if (sub.size() + 1 != diag.size()) {
        throw std::invalid_argument("tridiagonal: sub-diagonal length must be dim-1");
    }
    for (double v : diag) {
        if (!std::isfinite(v)) throw std::invalid_argument("tridiagonal: non-finite diagonal entry");
    }
    for (double v : sub) {
        if (!std::isfinite(v)) throw std::invalid_argument("tridiagonal: non-finite sub-diagonal entry");
    }
}

// Infinity norm (max absolute row sum); the natural scale of the matrix.
inline double tridiag_scale(const std::vector<double>& diag,
                            const std::vector<double>& sub) {
    const std::size_t d = diag.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(sub[i - 1]);
        if (i + 1 < d) row += std::abs(sub[i]);
        scale = std::max(scale, row);
    }
    return scale;
}

// Minimum admissible pivot for the Sturm recurrence, LAPACK style.
inline double sturm_pivmin(const std::vector<double>& sub) {
    double max_b2 = 1.0;
    for (double b : sub) max_b2 = std::max(max_b2, b * b);
    return std::numeric_limits<double>::min() * max_b2;
}

// Number of eigenvalues strictly below x, by counting negative pivots of the
// LDL^T factorization of T - x I.
inline int sturm_count_prepared(const std::vector<double>& diag,
                                const std::vector<double>& b2,
                                double x, double pivmin) {
    int count = 0;
    double d = diag[0] - x;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        double piv = d;
        if (std::abs(piv) < pivmin) piv = (piv < 0.0) ? -pivmin : pivmin;
        d = (diag[i] - x) - b2[i - 1] / piv;
        if (d < 0.0) ++count;
    }
    return count;
}

// Gaussian elimination with partial pivoting for (T - sigma I) x = b.
// Row swaps introduce a second super-diagonal (du2).
struct ShiftedTridiagLU {
    std::vector<double> d, dl, du, du2;
    std::vector<char> swapped;
    double pivot_floor = 0.0;

    ShiftedTridiagLU(const std::vector<double>& diag,
                     const std::vector<double>& sub,
                     double sigma, double scale) {
        const std::size_t n = diag.size();
        d.resize(n);
        dl.assign(sub.begin(), sub.end());
        du.assign(sub.begin(), sub.end());
        du2.assign(n > 2 ? n - 2 : 0, 0.0);
        swapped.assign(n > 1 ? n - 1 : 0, 0);
        for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - sigma;
        pivot_floor = std::numeric_limits<double>::epsilon() *
                      std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (std::abs(d[i]) < pivot_floor) {
                    d[i] = (d[i] < 0.0) ? -pivot_floor : pivot_floor;
                }
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
                if (i + 2 < n) du2[i] = 0.0;
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = 1;
            }
        }
        if (std::abs(d[n - 1]) < pivot_floor) {
            d[n - 1] = (d[n - 1] < 0.0) ? -pivot_floor : pivot_floor;
        }
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n >= 2) {
            b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        }
        for (std::size_t ir = n; ir >= 3; --ir) {
            const std::size_t i = ir - 3;
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }
};

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Recompute an eigenvector from the three-term recurrence, propagating from
// both ends toward its largest component.  Inverse iteration only resolves
// entries down to eps * ||v||; strongly graded eigenvectors (tiny eta) have
// tails far below that, and recurrence toward the peak recovers them with
// componentwise relative accuracy.  Requires an irreducible matrix.
inline bool refine_two_sided(const std::vector<double>& diag,
                             const std::vector<double>& sub,
                             double lambda, std::vector<double>& v) {
    const std::size_t n = diag.size();
    if (n < 2) return false;
    for (double b : sub) {
        if (b == 0.0) return false;
    }

    std::size_t peak = 0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(v[i]) > vmax) {
            vmax = std::abs(v[i]);
            peak = i;
        }
    }

    std::vector<double> x(n, 0.0);
    x[peak] = 1.0;

    if (peak > 0) {
        std::vector<double> w(peak + 1, 0.0);
        w[0] = 1.0;
        w[1] = (lambda - diag[0]) * w[0] / sub[0];
        for (std::size_t i = 1; i < peak; ++i) {
            w[i + 1] = ((lambda - diag[i]) * w[i] - sub[i - 1] * w[i - 1]) / sub[i];
            if (std::abs(w[i + 1]) > 1e250) {
                const double s = 1.0 / std::abs(w[i + 1]);
                for (std::size_t j = 0; j <= i + 1; ++j) w[j] *= s;
            }
        }
        if (!std::isfinite(w[peak]) || w[peak] == 0.0) return false;
        for (std::size_t i = 0; i < peak; ++i) x[i] = w[i] / w[peak];
    }
    if (peak + 1 < n) {
        std::vector<double> u(n, 0.0);
        u[n - 1] = 1.0;
        u[n - 2] = (lambda - diag[n - 1]) * u[n - 1] / sub[n - 2];
        for (std::size_t i = n - 2; i > peak + 1; --i) {
            u[i - 1] = ((lambda - diag[i]) * u[i] - sub[i] * u[i + 1]) / sub[i - 1];
            if (std::abs(u[i - 1]) > 1e250) {
                const double s = 1.0 / std::abs(u[i - 1]);
                for (std::size_t j = i - 1; j < n; ++j) u[j] *= s;
            }
        }
        if (!std::isfinite(u[peak + 1])) return false;
        // Scale the right sweep so that row `peak + 1` of (T - lambda I)x = 0
        // holds exactly, anchoring both sweeps to the same eigenvector.
        const double row = (lambda - diag[peak + 1]) * u[peak + 1] -
                           (peak + 2 < n ? sub[peak + 1] * u[peak + 2] : 0.0);
        const double anchor = row / sub[peak];  // x[peak] implied by right sweep
        if (!std::isfinite(anchor) || anchor == 0.0) return false;
        for (std::size_t i = peak + 1; i < n; ++i) x[i] = u[i] / anchor;
    }

    const double nrm = norm2(x);
    if (!std::isfinite(nrm) || nrm == 0.0) return false;
    for (double& xi : x) xi /= nrm;
    v = x;
    return true;
}

// y = T v for tridiagonal T.
inline void tridiag_apply(const std::vector<double>& diag,
                          const std::vector<double>& sub,
                          const std::vector<double>& v,
                          std::vector<double>& y) {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * v[i];
        if (i > 0) acc += sub[i - 1] * v[i - 1];
        if (i + 1 < n) acc += sub[i] * v[i + 1];
        y[i] = acc;
    }
}

}  // namespace detail

// Number of eigenvalues strictly below x.
inline int sturm_count(const std::vector<double>& diag,
                       const std::vector<double>& sub, double x) {
    detail::check_tridiagonal(diag, sub);
    if (!std::isfinite(x)) throw std::invalid_argument("sturm_count: non-finite threshold");
    std::vector<double> b2(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) b2[i] = sub[i] * sub[i];
    return detail::sturm_count_prepared(diag, b2, x, detail::sturm_pivmin(sub));
}

// Smallest eigenvalue only, bisected to absolute accuracy tol (plus an
// epsilon floor at the scale of the bracket).  This is the hot path of the
// sector scan, so no eigenvector work happens here.
inline double lowest_eigenvalue(const std::vector<double>& diag,
                                const std::vector<double>& sub,
                                double tol = 1e-12) {
    detail::check_tridiagonal(diag, sub);
    if (!(tol > 0.0)) throw std::invalid_argument("lowest_eigenvalue: tol must be > 0");
    const std::size_t n = diag.size();
    if (n == 1) return diag[0];

    std::vector<double> b2(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) b2[i] = sub[i] * sub[i];
    const double pivmin = detail::sturm_pivmin(sub);

    // Gershgorin bracket.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(sub[i - 1]);
        if (i + 1 < n) r += std::abs(sub[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 210; ++iter) {
        const double width_floor =
            2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + 2.0 * std::numeric_limits<double>::min();
        if (hi - lo <= std::max(tol, width_floor)) break;
        const double mid = 0.5 * (lo + hi);
        if (detail::sturm_count_prepared(diag, b2, mid, pivmin) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Smallest eigenpair: Sturm bisection for the value, shifted inverse
// iteration for the vector, Rayleigh quotient as the returned eigenvalue.
inline EigenSolution lowest_eigenpair(const std::vector<double>& diag,
                                      const std::vector<double>& sub,
                                      double tol = 1e-12) {
    detail::check_tridiagonal(diag, sub);
    if (!(tol > 0.0)) throw std::invalid_argument("lowest_eigenpair: tol must be > 0");
    const std::size_t n = diag.size();

    EigenSolution out;
    if (n == 1) {
        out.value = diag[0];
        out.vector = {1.0};
        return out;
    }

    const double scale = detail::tridiag_scale(diag, sub);
    const double accept_res = 1e-10 * (1.0 + scale);
    const double target_res = 1e-13 * (1.0 + scale);

    std::vector<double> b2(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) b2[i] = sub[i] * sub[i];
    const double pivmin = detail::sturm_pivmin(sub);

    const double lambda = lowest_eigenvalue(diag, sub, tol);

    // A cluster of >= 2 eigenvalues inside a vanishing bracket can only be a
    // rounding artifact (the blocks are irreducible for g > 0); fall back to
    // a uniform-sign candidate in that case.
    const double cluster_pad = 1e-14 * (1.0 + scale);
    const bool near_degenerate =
        detail::sturm_count_prepared(diag, b2, lambda + cluster_pad, pivmin) -
            detail::sturm_count_prepared(diag, b2, lambda - cluster_pad, pivmin) >= 2;

    double sigma = lambda;
    detail::ShiftedTridiagLU lu(diag, sub, sigma, scale);

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> work(n);
    double theta = lambda;
    double res = std::numeric_limits<double>::infinity();
    double prev_res = std::numeric_limits<double>::infinity();
    int stagnant = 0;

    int iter = 0;
    while (iter < 50) {
        ++iter;
        work = v;
        lu.solve(work);
        const double nrm = detail::norm2(work);
        if (!std::isfinite(nrm) || nrm == 0.0) {
            sigma = lambda + iter * 4.0 * cluster_pad;
            lu = detail::ShiftedTridiagLU(diag, sub, sigma, scale);
            std::fill(v.begin(), v.end(), 1.0 / std::sqrt(static_cast<double>(n)));
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = work[i] / nrm;

        detail::tridiag_apply(diag, sub, v, work);
        theta = std::inner_product(v.begin(), v.end(), work.begin(), 0.0);
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = work[i] - theta * v[i];
            r2 += ri * ri;
        }
        res = std::sqrt(r2);
        if (res <= target_res) break;
        if (res > 0.5 * prev_res) {
            if (++stagnant >= 3) {  // restart from a slightly moved shift
                sigma = lambda + iter * 4.0 * cluster_pad;
                lu = detail::ShiftedTridiagLU(diag, sub, sigma, scale);
                stagnant = 0;
            }
        } else {
            stagnant = 0;
        }
        prev_res = res;
    }

    // Recurrence-based polish: replaces noise-level tail entries of graded
    // eigenvectors with componentwise-accurate values.
    {
        std::vector<double> refined = v;
        if (detail::refine_two_sided(diag, sub, theta, refined)) {
            detail::tridiag_apply(diag, sub, refined, work);
            const double theta_r =
                std::inner_product(refined.begin(), refined.end(), work.begin(), 0.0);
            double r2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double ri = work[i] - theta_r * refined[i];
                r2 += ri * ri;
            }
            const double res_r = std::sqrt(r2);
            if (res_r <= std::max(res, target_res)) {
                v = std::move(refined);
                theta = theta_r;
                res = res_r;
            }
        }
    }

    if (near_degenerate) {
        for (double& x : v) x = std::abs(x);
        const double nrm = detail::norm2(v);
        for (double& x : v) x /= nrm;
        detail::tridiag_apply(diag, sub, v, work);
        theta = std::inner_product(v.begin(), v.end(), work.begin(), 0.0);
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = work[i] - theta * v[i];
            r2 += ri * ri;
        }
        res = std::sqrt(r2);
    }

    if (!(res <= accept_res)) {
        throw std::runtime_error("lowest_eigenpair: inverse iteration failed to converge");
    }

    // Sign convention: first nonzero component positive.
    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0) {
                for (double& y : v) y = -y;
            }
            break;
        }
    }

    out.value = theta;
    out.vector = std::move(v);
    out.iterations = iter;
    out.residual = res;
    return out;
}

// Full spectrum in non-decreasing order, for validation only.  Dense route
// (independent of the Sturm/inverse-iteration machinery above).
inline std::vector<double> dense_spectrum(const std::vector<double>& diag,
                                          const std::vector<double>& sub) {
    detail::check_tridiagonal(diag, sub);
    const std::size_t n = diag.size();
    if (n > 2000) {
        throw std::invalid_argument("dense_spectrum: dimension capped at 2000");
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
        if (i + 1 < n) {
            t(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = sub[i];
            t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = sub[i];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense_spectrum: eigensolver failed");
    }
    return std::vector<double>(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + n);
}

}  // namespace tc
