#ifndef RDM_COMMON_HPP
#define RDM_COMMON_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdm {

inline constexpr double euler_mascheroni = 0.5772156649015328606;

inline constexpr const char* version_string = "0.1.0";

// Error taxonomy. ConfigError maps to CLI exit code 1, the solver-side
// failures below map to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A function or density was evaluated where it is not defined / not finite.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative scheme failed to converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A series (Neumann, perturbation) shows non-decaying terms.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Global worker count for parallel maps. 0 means hardware concurrency.
void set_num_threads(int n);
int num_threads();

// Evaluates fn(i) for i in [0, n). fn must write to disjoint state per i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

inline double log_sum_exp(const double* vals, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (vals[i] > m) m = vals[i];
  if (!std::isfinite(m)) return m;  // all -inf, or a NaN/inf slipped in
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::exp(vals[i] - m);
  return m + std::log(s);
}

inline double log_sum_exp(const std::vector<double>& vals) {
  return log_sum_exp(vals.data(), vals.size());
}

std::string format_double(double x);  // shortest round-trip decimal

}  // namespace rdm

#endif  // RDM_COMMON_HPP
