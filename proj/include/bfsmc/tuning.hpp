#pragma once

#include <string_view>

namespace bfsmc {

/// Two algebraic forms of the admissible-sampling relation:
///   Statement:  tau < eps / (g2 c1 + 1)^2
///   Proof:      tau < eps / (g2 (c1 + 1)^2)
enum class FormulaVariant { Statement, Proof };

std::string_view to_string(FormulaVariant v);
/// Accepts "statement" or "proof"; throws DomainError otherwise.
FormulaVariant parse_variant(std::string_view s);

/// Largest admissible sampling period for a given barrier width and actuator.
double tau_max(double epsilon, double c1, double g2, FormulaVariant v = FormulaVariant::Statement);

/// Smallest barrier width admissible for a given sampling period and actuator.
double epsilon_min(double tau, double c1, double g2, FormulaVariant v = FormulaVariant::Statement);

/// Open interval (delta_bar, upper) of actuator capacities. Empty when upper <= delta_bar.
struct C1Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool feasible() const noexcept { return upper > lower; }
    bool contains(double c1) const noexcept { return c1 > lower && c1 < upper; }
};

C1Interval c1_range(double epsilon, double tau, double g2, double delta_bar,
                    FormulaVariant v = FormulaVariant::Statement);

/// Answers to the three tuning tasks for one parameter set.
struct TuningResult {
    double tau_max = 0.0;      ///< discretization: given (eps, c1)
    double epsilon_min = 0.0;  ///< design: given (tau, c1)
    C1Interval c1_interval;    ///< feasibility: given (eps, tau)
    FormulaVariant formula_variant = FormulaVariant::Statement;
};

TuningResult solve_tuning(double epsilon, double tau, double c1, double g2, double delta_bar,
                          FormulaVariant v = FormulaVariant::Statement);

}  // namespace bfsmc
