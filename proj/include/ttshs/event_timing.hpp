#pragma once

#include "ttshs/quadrature.hpp"
#include "ttshs/types.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace ttshs {

enum class DistFamily { exponential, gamma, weibull, lognormal, deterministic, empirical };

const char* family_name(DistFamily family);

/// A moment that may be infinite (flagged, not thrown).
struct MomentValue {
    double value = 0.0;
    bool divergent = false;
};

struct ExpectResult {
    Matrix value;
    double abs_error = 0.0;
    bool divergent = false;
};

/// Uniform draws in (0,1), strictly open, from a mt19937_64 stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return ((gen_() >> 11) + 0.5) * 0x1p-53; }
    double normal() { return normal_(gen_); }
    std::mt19937_64& generator() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// The inter-event time law: pdf f, cdf F, survival, hazard, quantiles,
/// closed-form raw moments, samplers, and the two expectation operators
/// the moment formulas consume (against f and against the stationary
/// timer law p = survival / mean).
class EventTimeDistribution {
public:
    static EventTimeDistribution exponential(double mean);
    static EventTimeDistribution gamma(double shape, double scale);
    static EventTimeDistribution weibull(double k, double lambda);
    static EventTimeDistribution lognormal(double mu_log, double sigma_log);
    static EventTimeDistribution deterministic(double t);
    static EventTimeDistribution empirical(std::vector<double> samples);

    DistFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& samples() const { return samples_; }

    double pdf(double tau) const;
    double cdf(double tau) const;
    double survival(double tau) const;
    double quantile(double p) const;

    /// f(tau) / (1 - F(tau)); throws survival_exhausted once the tail mass
    /// at tau drops below eps_tail.
    double hazard_rate(double tau) const;

    /// Stationary timer density p(tau) = survival(tau) / <tau_s>.
    double timer_pdf(double tau) const;

    /// <tau_s^i>, closed form for parametric families, sample moments for
    /// empirical. Divergence (overflow to infinity) is flagged.
    MomentValue interevent_moment(int i) const;

    /// <tau^i> = <tau_s^{i+1}> / ((i+1) <tau_s>).
    MomentValue timer_moment(int i) const;

    double mean_interevent() const { return interevent_moment(1).value; }

    /// Upper truncation point q_{1 - eps_tail}(f).
    double tau_max() const;

    /// E_f[g(tau_s)] with tail bound and MGF-existence probing.
    ExpectResult expect_interevent(const MatrixFn& g, double tol = default_quad_tol()) const;

    /// E_p[g(tau)] against the stationary timer law.
    ExpectResult expect_timer(const MatrixFn& g, double tol = default_quad_tol()) const;

    /// Scalar MGF E[e^{s tau_s}] in closed form, when the family has one.
    std::optional<double> mgf_closed(double s) const;

    /// E[1 - e^{-g tau_s}] for g >= 0, computed without cancellation.
    double one_minus_exp_moment(double g) const;

    /// E[e^{-g tau_s}] for g >= 0.
    double exp_neg_moment(double g) const;

    /// Inverse-transform draw (resampling for the empirical family).
    double sample(RngStream& rng) const;

    static constexpr double eps_tail = 1e-12;

private:
    EventTimeDistribution(DistFamily family, std::vector<double> params,
                          std::vector<double> samples = {});
    void validate() const;
    bool divergence_probe(const MatrixFn& g) const;

    DistFamily family_;
    std::vector<double> params_;
    std::vector<double> samples_; // sorted, empirical only
    double mean_ = 0.0;
};

struct TimerLaw {
    const EventTimeDistribution* parent;
    double pdf(double tau) const { return parent->timer_pdf(tau); }
};

/// Hazard rate of a distribution at tau (free-function form).
inline double hazard_rate(const EventTimeDistribution& dist, double tau) {
    return dist.hazard_rate(tau);
}

inline MomentValue interevent_moment(const EventTimeDistribution& dist, int i) {
    return dist.interevent_moment(i);
}

inline MomentValue timer_moment(const EventTimeDistribution& dist, int i) {
    return dist.timer_moment(i);
}

inline ExpectResult expect_interevent(const EventTimeDistribution& dist, const MatrixFn& g,
                                      double tol = default_quad_tol()) {
    return dist.expect_interevent(g, tol);
}

inline ExpectResult expect_timer(const EventTimeDistribution& dist, const MatrixFn& g,
                                 double tol = default_quad_tol()) {
    return dist.expect_timer(g, tol);
}

inline double sample_interevent(const EventTimeDistribution& dist, RngStream& rng) {
    return dist.sample(rng);
}

} // namespace ttshs
