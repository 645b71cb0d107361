#pragma once

#include "ttshs/types.hpp"

#include <functional>
#include <vector>

namespace ttshs {

using OdeRhs = std::function<Vector(double, const Vector&)>;

/// Solution of an initial value problem stored on the accepted step grid,
/// with cubic Hermite interpolation between nodes (derivatives are kept).
struct OdeSolution {
    std::vector<double> t;
    std::vector<Vector> y;
    std::vector<Vector> dy;
    double tol_achieved = 0.0;

    Vector eval(double tau) const;
    const Vector& back() const { return y.back(); }
};

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0; // 0: no cap
    bool store_dense = true;
};

/// Dormand-Prince 5(4) with PI-free step control. Throws ode_failure on
/// step underflow.
OdeSolution integrate_ode(const OdeRhs& rhs, Vector y0, double t0, double t1,
                          const OdeOptions& opts = {});

} // namespace ttshs
