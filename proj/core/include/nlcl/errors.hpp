#pragma once

#include <stdexcept>
#include <string>

namespace nlcl {

/** Adaptive quadrature failed to reach the requested tolerance. */
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

/** A precondition of an operation was violated by the caller. */
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/** Malformed or semantically invalid configuration input. */
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    int line_number;
};

/** NaN/Inf detected during time stepping. */
class BlowUpError : public std::runtime_error {
  public:
    BlowUpError(int step_, int cell_)
        : std::runtime_error("numerical blow-up at step " + std::to_string(step_) +
                             ", cell " + std::to_string(cell_)),
          step(step_), cell(cell_) {}
    int step;
    int cell;
};

/** CFL bound exceeded while cfl mode is enforce. */
class CflError : public std::runtime_error {
  public:
    explicit CflError(double lambda_bound)
        : std::runtime_error("CFL condition violated: lambda * B = " +
                             std::to_string(lambda_bound) + " > 1"),
          lambda_times_bound(lambda_bound) {}
    double lambda_times_bound;
};

} // namespace nlcl
