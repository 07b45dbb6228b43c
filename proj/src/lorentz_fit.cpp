#include "wgmcool/lorentz_fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "wgmcool/errors.hpp"

namespace wgmcool {

double LorentzianFit::operator()(double x) const {
    const double u = x - center;
    return offset + peak * half_width * half_width / (u * u + half_width * half_width);
}

namespace {

constexpr int max_iterations = 500;

// Parameters in scaled coordinates: offset, peak, center, log(width).
using Params = Eigen::Vector4d;

double model(const Params& p, double u) {
    const double w = std::exp(p[3]);
    const double d = u - p[2];
    return p[0] + p[1] * w * w / (d * d + w * w);
}

double sum_sq(const Params& p, const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = v[i] - model(p, u[i]);
        s += r * r;
    }
    return s;
}

// Initial width: distance from the extremum to the first half-level
// crossing on either side, averaged.
double initial_width(const std::vector<double>& u, const std::vector<double>& v, std::size_t peak,
                     double offset, double amp) {
    const double half = offset + 0.5 * amp;
    auto crossed = [&](std::size_t i) { return amp > 0 ? v[i] <= half : v[i] >= half; };
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = peak; i-- > 0;) {
        if (crossed(i)) {
            left = u[peak] - u[i];
            break;
        }
    }
    for (std::size_t i = peak + 1; i < u.size(); ++i) {
        if (crossed(i)) {
            right = u[i] - u[peak];
            break;
        }
    }
    double w = 0.0;
    if (left > 0 && right > 0) {
        w = 0.5 * (left + right);
    } else {
        w = std::max(left, right);
    }
    if (!(w > 0.0)) {
        w = (u.back() - u.front()) / 20.0;
    }
    return w;
}

struct Solution {
    Params p = Params::Zero();
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

Solution levenberg_marquardt(Params p, const std::vector<double>& u, const std::vector<double>& v) {
    const std::size_t n = u.size();
    double cost = sum_sq(p, u, v);
    double lambda = 1e-3;
    int it = 0;
    bool converged = false;
    for (; it < max_iterations && !converged; ++it) {
        Eigen::Matrix4d jtj = Eigen::Matrix4d::Zero();
        Eigen::Vector4d jtr = Eigen::Vector4d::Zero();
        const double w = std::exp(p[3]);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = u[i] - p[2];
            const double den = d * d + w * w;
            const double shape = w * w / den;
            Eigen::Vector4d g;
            g[0] = 1.0;
            g[1] = shape;
            g[2] = p[1] * 2.0 * d * w * w / (den * den);
            g[3] = p[1] * 2.0 * shape * d * d / den;  // d/d(log w)
            const double r = v[i] - (p[0] + p[1] * shape);
            jtj.noalias() += g * g.transpose();
            jtr.noalias() += g * r;
        }

        bool stepped = false;
        while (!stepped) {
            Eigen::Matrix4d a = jtj;
            a.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-30);
            const Params delta = a.ldlt().solve(jtr);
            const Params trial = p + delta;
            const double trial_cost = sum_sq(trial, u, v);
            if (std::isfinite(trial_cost) && trial_cost <= cost) {
                const double change = delta.cwiseAbs().maxCoeff();
                const double drop = cost - trial_cost;
                p = trial;
                cost = trial_cost;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (change < 1e-13 || drop <= 1e-15 * cost || cost < 1e-30) {
                    converged = true;
                }
            } else {
                lambda *= 10.0;
                if (lambda > 1e12) {
                    // No descent direction left: at the minimum to rounding.
                    converged = true;
                    break;
                }
            }
        }
    }
    return {p, cost, it, converged};
}

}  // namespace

LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DomainError("fit_lorentzian: x and y differ in length");
    }
    const std::size_t n = x.size();
    if (n < 7) {
        throw DomainError("fit_lorentzian: need at least 7 samples");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw DomainError("fit_lorentzian: non-finite sample");
        }
        if (i > 0 && !(x[i] > x[i - 1])) {
            throw DomainError("fit_lorentzian: x must be strictly increasing");
        }
    }

    // Work in u = (x - x_mid)/x_scale, v = (y - y_ref)/y_scale.
    const double x_mid = 0.5 * (x.front() + x.back());
    const double x_scale = 0.5 * (x.back() - x.front());
    const auto [y_lo, y_hi] = std::minmax_element(y.begin(), y.end());
    const double y_range = *y_hi - *y_lo;
    const double y_mag = std::max(std::abs(*y_lo), std::abs(*y_hi));
    if (!(y_range > 1e-12 * y_mag) || y_range == 0.0) {
        throw NotFoundError("fit_lorentzian: flat input, no peak to fit");
    }
    const double y_ref = *y_lo;
    const double y_scale = y_range;

    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = (x[i] - x_mid) / x_scale;
        v[i] = (y[i] - y_ref) / y_scale;
    }

    // Offset from the median: the baseline dominates a window that spans
    // several half-widths. The extremum farthest from it is the peak.
    std::vector<double> sorted = v;
    std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
    const double median = sorted[n / 2];
    std::size_t peak = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(v[i] - median) > std::abs(v[peak] - median)) {
            peak = i;
        }
    }
    const double edge = 0.5 * (v.front() + v.back());
    const double offset0 = std::abs(edge - median) < 0.5 * std::abs(v[peak] - median) ? edge : median;
    const double amp0 = v[peak] - offset0;

    // The median heuristic picks the wrong sign when the window holds
    // little baseline, so an upward and a downward start are tried as well.
    const auto lo_i = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
    const auto hi_i = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    std::vector<Params> starts(3);
    starts[0] << offset0, amp0, u[peak], std::log(initial_width(u, v, peak, offset0, amp0));
    starts[1] << 0.0, 1.0, u[hi_i], std::log(initial_width(u, v, hi_i, 0.0, 1.0));
    starts[2] << 1.0, -1.0, u[lo_i], std::log(initial_width(u, v, lo_i, 1.0, -1.0));

    Solution best;
    for (const auto& start : starts) {
        const Solution sol = levenberg_marquardt(start, u, v);
        if (sol.converged && (!best.converged || sol.cost < best.cost)) {
            best = sol;
        }
    }
    if (!best.converged) {
        const double residual = std::sqrt(sum_sq(starts[0], u, v)) * y_scale;
        std::ostringstream msg;
        msg << "fit_lorentzian: no convergence after " << max_iterations
            << " iterations (residual norm " << residual << ")";
        throw ConvergenceError(msg.str(), residual);
    }
    const Params& p = best.p;
    const double cost = best.cost;
    const int it = best.iterations;

    LorentzianFit fit;
    fit.offset = y_ref + p[0] * y_scale;
    fit.peak = p[1] * y_scale;
    fit.center = x_mid + p[2] * x_scale;
    fit.half_width = std::exp(p[3]) * x_scale;
    fit.iterations = it;

    const double mean_v = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    double total = 0.0;
    for (double vi : v) {
        total += (vi - mean_v) * (vi - mean_v);
    }
    fit.r_squared = std::clamp(1.0 - cost / total, 0.0, 1.0);

    if (!(fit.half_width > 0.0) || !std::isfinite(fit.half_width)) {
        throw ConvergenceError("fit_lorentzian: width collapsed", std::sqrt(cost) * y_scale);
    }
    if (x.back() - x.front() < 4.0 * fit.half_width) {
        std::ostringstream msg;
        msg << "fit_lorentzian: samples span " << (x.back() - x.front())
            << ", less than 4 fitted half-widths (" << 4.0 * fit.half_width << ")";
        throw DomainError(msg.str());
    }
    return fit;
}

}  // namespace wgmcool
