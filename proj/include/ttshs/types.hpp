#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ttshs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ErrorCode {
    shape_mismatch,
    overflow,
    eigensolver_failure,
    survival_exhausted,
    divergent_moment,
    divergence_detected,
    unstable_model,
    subclass_violation,
    ode_failure,
    noninvertible_psi,
    nonfinite_state,
    constraint_unsatisfiable,
    parse_error,
    io_error,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ttshs
