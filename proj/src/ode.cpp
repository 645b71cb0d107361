#include "ttshs/ode.hpp"

#include <algorithm>
#include <cmath>

namespace ttshs {

Vector OdeSolution::eval(double tau) const {
    if (t.empty()) throw Error(ErrorCode::ode_failure, "empty solution table");
    if (tau <= t.front()) return y.front();
    if (tau >= t.back()) return y.back();
    const auto it = std::upper_bound(t.begin(), t.end(), tau);
    const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
    const double h = t[i + 1] - t[i];
    const double s = (tau - t[i]) / h;
    // cubic Hermite basis
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y[i] + (h10 * h) * dy[i] + h01 * y[i + 1] + (h11 * h) * dy[i + 1];
}

namespace {

// Dormand-Prince coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order embedded weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

} // namespace

OdeSolution integrate_ode(const OdeRhs& rhs, Vector y0, double t0, double t1,
                          const OdeOptions& opts) {
    OdeSolution sol;
    sol.tol_achieved = opts.rel_tol;
    double t = t0;
    Vector y = std::move(y0);
    Vector k1 = rhs(t, y);
    if (opts.store_dense) {
        sol.t.push_back(t);
        sol.y.push_back(y);
        sol.dy.push_back(k1);
    }

    const double span = t1 - t0;
    if (span <= 0.0) {
        if (!opts.store_dense) {
            sol.t.push_back(t);
            sol.y.push_back(y);
            sol.dy.push_back(k1);
        }
        return sol;
    }

    double h = span / 128.0;
    if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
    const double h_min = span * 0x1p-40;

    while (t < t1) {
        h = std::min(h, t1 - t);
        const Vector k2 = rhs(t + c2 * h, y + h * (a21 * k1));
        const Vector k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const Vector k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vector k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vector k6 =
            rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vector y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vector k7 = rhs(t + h, y5); // FSAL
        const Vector y4 =
            y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double scale =
                opts.abs_tol + opts.rel_tol * std::max(std::abs(y(i)), std::abs(y5(i)));
            err = std::max(err, std::abs(y5(i) - y4(i)) / scale);
        }
        if (!std::isfinite(err)) err = 1e10;

        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7;
            if (opts.store_dense) {
                sol.t.push_back(t);
                sol.y.push_back(y);
                sol.dy.push_back(k1);
            }
        }
        double factor = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
        if (h < h_min)
            throw Error(ErrorCode::ode_failure, "step size underflow at t=" + std::to_string(t));
    }

    if (!opts.store_dense) {
        sol.t.push_back(t);
        sol.y.push_back(y);
        sol.dy.push_back(k1);
    }
    return sol;
}

} // namespace ttshs
