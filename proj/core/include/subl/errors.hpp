#ifndef SUBL_ERRORS_HPP
#define SUBL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subl {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonpositiveTime : DomainError {
    using DomainError::DomainError;
};

struct QuadratureFailure : std::runtime_error {
    QuadratureFailure(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_bound(err) {}
    double best_estimate;
    double error_bound;
};

struct NonConvergence : QuadratureFailure {
    using QuadratureFailure::QuadratureFailure;
};

struct TailDominates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CalibrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtrapolationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StencilTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegimeRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterOutOfRange : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedFunction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace subl

#endif
