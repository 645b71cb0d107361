#pragma once

#include "ttshs/types.hpp"

namespace ttshs {

/// State transition e^{A tau} together with the forced response
/// e^{A tau} * integral_0^tau e^{-A l} a_hat dl of the affine flow
/// dx/dt = a_hat + A x. At tau = 0 this is (I, 0).
struct FlowSegment {
    Matrix state_transition;
    Vector forced_response;
};

/// Dense matrix exponential, Pade approximant with scaling and squaring.
Matrix matrix_exponential(const Matrix& m);

/// Flow of dx/dt = a_hat + A x over [0, tau], computed from one exponential
/// of the augmented matrix [[A, a_hat], [0, 0]]. Valid for singular A.
FlowSegment flow_segment(const Matrix& a, const Vector& a_hat, double tau);

Matrix kron(const Matrix& m1, const Matrix& m2);

/// Column-stacking vectorization; unvec is its inverse for n x n matrices.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index n);

/// Largest eigenvalue magnitude of a square (generally nonsymmetric) matrix.
double spectral_radius(const Matrix& m);

/// All eigenvalues, via the real Schur form.
Eigen::VectorXcd eigenvalues(const Matrix& m);

/// True when every eigenvalue has strictly negative real part.
bool is_hurwitz(const Matrix& m, double margin = 0.0);

/// Solves (I - M) x = rhs by partial-pivot LU and re-checks the residual.
Vector solve_resolvent(const Matrix& m, const Vector& rhs, double residual_tol = 1e-9);

} // namespace ttshs
