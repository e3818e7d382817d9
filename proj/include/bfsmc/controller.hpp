#pragma once

#include <optional>
#include <variant>

namespace bfsmc {

/// Pure barrier-function law u = -x / (eps - |x|).
struct BfaController {
    double epsilon = 0.01;

    bool operator==(const BfaController&) const = default;
};

/// Barrier law inside the authority band, constant -c1 sign(x) outside it.
struct BfsatController {
    double epsilon = 0.01;
    double c1 = 5.0;

    bool operator==(const BfsatController&) const = default;
};

/// u = clamp(-k x, -c1, c1).
struct LinearSatController {
    double k = 17.0;
    double c1 = 7.5;

    bool operator==(const LinearSatController&) const = default;
};

using ControllerSpec = std::variant<BfaController, BfsatController, LinearSatController>;

/// Throws DomainError on non-positive parameters.
void validate(const ControllerSpec& spec);

/// Barrier law. Throws DomainError for |x| >= eps; the law is not clamped.
double bfa(double x, double epsilon);

/// Saturated barrier law, total on the real line, |u| <= c1.
double bfsat(double x, double epsilon, double c1);

double linear_sat(double x, double k, double c1);

/// Adaptive gain 1 / (eps - |x|) such that bfa(x) = -gain * x.
double barrier_gain(double x, double epsilon);

/// Control value at a sampling instant. BFA throws DomainError outside the barrier.
double evaluate(const ControllerSpec& spec, double x);

/// Barrier half-width when the law has one (BFA, BFSAT).
std::optional<double> barrier_epsilon(const ControllerSpec& spec);
/// Actuator bound when the law has one (BFSAT, linear).
std::optional<double> actuator_bound(const ControllerSpec& spec);

}  // namespace bfsmc
