#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bfsmc {

/// Raised when an operation is evaluated outside its mathematical domain
/// (non-positive parameters, barrier law at or beyond its pole).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameter combinations that violate a feasibility condition,
/// e.g. a disturbance bound that the actuator cannot dominate.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration problems. Carries every violation found, not only the first.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out;
        for (const auto& s : issues) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

}  // namespace bfsmc
