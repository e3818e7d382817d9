#include "bfsmc/tuning.hpp"

#include <cmath>
#include <string>

#include "bfsmc/errors.hpp"

namespace bfsmc {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw DomainError(std::string("tuning: ") + what + " must be positive");
}

/// tau = epsilon * scale; the actuator/gain factor of each formula variant.
double sampling_scale(double c1, double g2, FormulaVariant v) {
    if (v == FormulaVariant::Statement) {
        const double a = g2 * c1 + 1.0;
        return 1.0 / (a * a);
    }
    const double a = c1 + 1.0;
    return 1.0 / (g2 * a * a);
}

}  // namespace

std::string_view to_string(FormulaVariant v) {
    return v == FormulaVariant::Statement ? "statement" : "proof";
}

FormulaVariant parse_variant(std::string_view s) {
    if (s == "statement") return FormulaVariant::Statement;
    if (s == "proof") return FormulaVariant::Proof;
    throw DomainError("unknown formula variant '" + std::string(s) + "' (expected statement|proof)");
}

double tau_max(double epsilon, double c1, double g2, FormulaVariant v) {
    require_positive(epsilon, "epsilon");
    require_positive(c1, "c1");
    require_positive(g2, "g2");
    return epsilon * sampling_scale(c1, g2, v);
}

double epsilon_min(double tau, double c1, double g2, FormulaVariant v) {
    require_positive(tau, "tau");
    require_positive(c1, "c1");
    require_positive(g2, "g2");
    return tau / sampling_scale(c1, g2, v);
}

C1Interval c1_range(double epsilon, double tau, double g2, double delta_bar, FormulaVariant v) {
    require_positive(epsilon, "epsilon");
    require_positive(tau, "tau");
    require_positive(g2, "g2");
    if (delta_bar < 0.0) throw DomainError("tuning: delta_bar must be non-negative");
    const double upper = v == FormulaVariant::Statement ? (std::sqrt(epsilon / tau) - 1.0) / g2
                                                        : std::sqrt(epsilon / (g2 * tau)) - 1.0;
    return C1Interval{delta_bar, upper};
}

TuningResult solve_tuning(double epsilon, double tau, double c1, double g2, double delta_bar,
                          FormulaVariant v) {
    return TuningResult{
        .tau_max = tau_max(epsilon, c1, g2, v),
        .epsilon_min = epsilon_min(tau, c1, g2, v),
        .c1_interval = c1_range(epsilon, tau, g2, delta_bar, v),
        .formula_variant = v,
    };
}

}  // namespace bfsmc
