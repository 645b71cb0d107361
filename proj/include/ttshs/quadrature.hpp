#pragma once

#include "ttshs/types.hpp"

#include <functional>

namespace ttshs {

using MatrixFn = std::function<Matrix(double)>;

struct QuadResult {
    Matrix value;
    double abs_error = 0.0; // accumulated per-entry bound, max over entries
};

/// Absolute per-entry quadrature tolerance used throughout the library.
/// Reads TTSHS_QUAD_TOL once on first use; defaults to 1e-10.
double default_quad_tol();

/// Adaptive Gauss-Kronrod (G7,K15) integration of a matrix-valued function
/// over the finite interval [a, b]. The error target is absolute, per entry.
QuadResult integrate(const MatrixFn& g, double a, double b, double tol_abs);

/// Scalar convenience wrapper.
double integrate_scalar(const std::function<double(double)>& g, double a, double b,
                        double tol_abs);

} // namespace ttshs
