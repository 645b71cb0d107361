#include "ttshs/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ttshs {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::overflow: return "overflow";
        case ErrorCode::eigensolver_failure: return "eigensolver_failure";
        case ErrorCode::survival_exhausted: return "survival_exhausted";
        case ErrorCode::divergent_moment: return "divergent_moment";
        case ErrorCode::divergence_detected: return "divergence_detected";
        case ErrorCode::unstable_model: return "unstable_model";
        case ErrorCode::subclass_violation: return "subclass_violation";
        case ErrorCode::ode_failure: return "ode_failure";
        case ErrorCode::noninvertible_psi: return "noninvertible_psi";
        case ErrorCode::nonfinite_state: return "nonfinite_state";
        case ErrorCode::constraint_unsatisfiable: return "constraint_unsatisfiable";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

namespace {

// Pade approximants of orders 3/5/7/9/13 with the Higham theta thresholds.
void pade3(const Matrix& a, const Matrix& a2, Matrix& u, Matrix& v) {
    const double b[] = {120., 60., 12., 1.};
    const Matrix i = Matrix::Identity(a.rows(), a.cols());
    u = a * (b[3] * a2 + b[1] * i);
    v = b[2] * a2 + b[0] * i;
}

void pade5(const Matrix& a, const Matrix& a2, Matrix& u, Matrix& v) {
    const double b[] = {30240., 15120., 3360., 420., 30., 1.};
    const Matrix i = Matrix::Identity(a.rows(), a.cols());
    const Matrix a4 = a2 * a2;
    u = a * (b[5] * a4 + b[3] * a2 + b[1] * i);
    v = b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade7(const Matrix& a, const Matrix& a2, Matrix& u, Matrix& v) {
    const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const Matrix i = Matrix::Identity(a.rows(), a.cols());
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
    v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade9(const Matrix& a, const Matrix& a2, Matrix& u, Matrix& v) {
    const double b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                        2162160., 110880., 3960., 90., 1.};
    const Matrix i = Matrix::Identity(a.rows(), a.cols());
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix a8 = a6 * a2;
    u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
    v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade13(const Matrix& a, const Matrix& a2, Matrix& u, Matrix& v) {
    const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                        1187353796428800.,  129060195264000.,   10559470521600.,
                        670442572800.,      33522128640.,       1323241920.,
                        40840800.,          960960.,            16380.,
                        182.,               1.};
    const Matrix i = Matrix::Identity(a.rows(), a.cols());
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
             b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
        b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
}

} // namespace

Matrix matrix_exponential(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::shape_mismatch, "matrix_exponential needs a square matrix");
    if (!m.allFinite())
        throw Error(ErrorCode::overflow, "matrix_exponential: non-finite entries");

    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff(); // induced inf-norm
    if (norm > 700.0 * 32.0)
        throw Error(ErrorCode::overflow, "matrix_exponential: norm beyond representable range");

    Matrix u, v;
    int squarings = 0;
    Matrix a = m;
    if (norm < 1.495585217958292e-2) {
        pade3(a, a * a, u, v);
    } else if (norm < 2.539398330063230e-1) {
        pade5(a, a * a, u, v);
    } else if (norm < 9.504178996162932e-1) {
        pade7(a, a * a, u, v);
    } else if (norm < 2.097847961257068e0) {
        pade9(a, a * a, u, v);
    } else {
        const double theta13 = 5.371920351148152;
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
        a = m / std::pow(2.0, squarings);
        pade13(a, a * a, u, v);
    }

    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

FlowSegment flow_segment(const Matrix& a, const Vector& a_hat, double tau) {
    const auto n = a.rows();
    if (a.cols() != n || a_hat.size() != n)
        throw Error(ErrorCode::shape_mismatch, "flow_segment: nonconforming A / a_hat");
    Matrix aug = Matrix::Zero(n + 1, n + 1);
    aug.topLeftCorner(n, n) = a;
    aug.topRightCorner(n, 1) = a_hat;
    const Matrix e = matrix_exponential(aug * tau);
    return FlowSegment{e.topLeftCorner(n, n), e.topRightCorner(n, 1)};
}

Matrix kron(const Matrix& m1, const Matrix& m2) {
    Matrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
    for (Eigen::Index i = 0; i < m1.rows(); ++i)
        for (Eigen::Index j = 0; j < m1.cols(); ++j)
            out.block(i * m2.rows(), j * m2.cols(), m2.rows(), m2.cols()) = m1(i, j) * m2;
    return out;
}

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index n) {
    if (v.size() != n * n)
        throw Error(ErrorCode::shape_mismatch, "unvec: size is not n^2");
    return Eigen::Map<const Matrix>(v.data(), n, n);
}

Eigen::VectorXcd eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::shape_mismatch, "eigenvalues: square matrix required");
    Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::eigensolver_failure, "QR iteration did not converge");
    return solver.eigenvalues();
}

double spectral_radius(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return eigenvalues(m).cwiseAbs().maxCoeff();
}

bool is_hurwitz(const Matrix& m, double margin) {
    const auto eig = eigenvalues(m);
    for (Eigen::Index i = 0; i < eig.size(); ++i)
        if (eig(i).real() >= -margin) return false;
    return true;
}

Vector solve_resolvent(const Matrix& m, const Vector& rhs, double residual_tol) {
    const Matrix lhs = Matrix::Identity(m.rows(), m.cols()) - m;
    const Vector x = lhs.partialPivLu().solve(rhs);
    const double resid = (lhs * x - rhs).cwiseAbs().maxCoeff();
    const double scale = std::max(rhs.cwiseAbs().maxCoeff(), 1e-300);
    if (resid > residual_tol * scale)
        throw Error(ErrorCode::unstable_model,
                    "resolvent solve residual " + std::to_string(resid) +
                        " exceeds tolerance; (I - M) is numerically singular");
    return x;
}

} // namespace ttshs
