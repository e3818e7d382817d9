#include "bfsmc/controller.hpp"

#include <algorithm>
#include <cmath>

#include "bfsmc/detail/overloaded.hpp"
#include "bfsmc/errors.hpp"
#include "bfsmc/model.hpp"
#include "bfsmc/regions.hpp"

namespace bfsmc {

using detail::overloaded;

void validate(const ControllerSpec& spec) {
    std::visit(overloaded{
                   [](const BfaController& c) {
                       if (!(c.epsilon > 0.0)) throw DomainError("controller: epsilon must be positive");
                   },
                   [](const BfsatController& c) {
                       if (!(c.epsilon > 0.0)) throw DomainError("controller: epsilon must be positive");
                       if (!(c.c1 > 0.0)) throw DomainError("controller: c1 must be positive");
                   },
                   [](const LinearSatController& c) {
                       if (!(c.k > 0.0)) throw DomainError("controller: k must be positive");
                       if (!(c.c1 > 0.0)) throw DomainError("controller: c1 must be positive");
                   },
               },
               spec);
}

double barrier_gain(double x, double epsilon) {
    if (!(std::abs(x) < epsilon)) throw DomainError("barrier law evaluated at |x| >= epsilon");
    return 1.0 / (epsilon - std::abs(x));
}

double bfa(double x, double epsilon) {
    return -barrier_gain(x, epsilon) * x;
}

double bfsat(double x, double epsilon, double c1) {
    if (std::abs(x) > saturation_boundary(epsilon, c1)) return -c1 * sign(x);
    // At the boundary the barrier value equals c1 up to rounding; keep |u| <= c1 exact.
    return std::clamp(bfa(x, epsilon), -c1, c1);
}

double linear_sat(double x, double k, double c1) {
    return std::clamp(-k * x, -c1, c1);
}

double evaluate(const ControllerSpec& spec, double x) {
    return std::visit(overloaded{
                          [x](const BfaController& c) { return bfa(x, c.epsilon); },
                          [x](const BfsatController& c) { return bfsat(x, c.epsilon, c.c1); },
                          [x](const LinearSatController& c) { return linear_sat(x, c.k, c.c1); },
                      },
                      spec);
}

std::optional<double> barrier_epsilon(const ControllerSpec& spec) {
    return std::visit(overloaded{
                          [](const BfaController& c) -> std::optional<double> { return c.epsilon; },
                          [](const BfsatController& c) -> std::optional<double> { return c.epsilon; },
                          [](const LinearSatController&) -> std::optional<double> { return std::nullopt; },
                      },
                      spec);
}

std::optional<double> actuator_bound(const ControllerSpec& spec) {
    return std::visit(overloaded{
                          [](const BfaController&) -> std::optional<double> { return std::nullopt; },
                          [](const BfsatController& c) -> std::optional<double> { return c.c1; },
                          [](const LinearSatController& c) -> std::optional<double> { return c.c1; },
                      },
                      spec);
}

}  // namespace bfsmc
