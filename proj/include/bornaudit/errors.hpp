#pragma once

#include <stdexcept>
#include <string>

namespace bornaudit {

// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitNumericalBlowup = 3,
    kExitAuditInvalid = 4,
};

/// Malformed or invalid run configuration / rejected input.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A probability rule whose output distribution has no support left.
class DegenerateRuleError : public ConfigError {
  public:
    explicit DegenerateRuleError(const std::string& msg) : ConfigError(msg) {}
};

/// NaN/Inf appeared during time stepping.
class NumericalBlowup : public std::runtime_error {
  public:
    NumericalBlowup(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step_(step) {}
    std::size_t step() const { return step_; }

  private:
    std::size_t step_;
};

/// Baseline classical run too poorly resolved for the audit to mean anything.
class AuditInvalid : public std::runtime_error {
  public:
    explicit AuditInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bornaudit
