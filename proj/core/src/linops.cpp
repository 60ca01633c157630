#include "rdm/linops.hpp"

#include <cmath>
#include <random>

namespace rdm {

GridFn neumann_solve(const GridOp& apply_K, const GridFn& rhs,
                     const NeumannOptions& opts) {
  GridFn term = rhs;
  Vec acc = rhs.values();
  double prev_norm = term.sup_norm();
  int flat = 0;
  for (int n = 1; n <= opts.max_terms; ++n) {
    term = apply_K(term);
    acc += term.values();
    double norm = term.sup_norm();
    if (norm < opts.tol) return rhs.with_values(std::move(acc));
    flat = norm >= prev_norm ? flat + 1 : 0;
    if (flat >= opts.divergence_window)
      throw DivergenceError(
          "neumann_solve: term norms stopped decreasing after " +
          std::to_string(n) + " terms (spectral radius >= 1?)");
    prev_norm = norm;
  }
  throw ConvergenceError("neumann_solve: exceeded max_terms with last term " +
                         format_double(prev_norm));
}

Mat operator_matrix(const GridOp& apply_K, const GridFn& prototype) {
  const std::size_t n = prototype.grid()->size();
  if (n > 20000)
    throw ConfigError("operator_matrix: grid too large to densify (> 20000)");
  Mat K(n, n);
  Vec basis = Vec::Zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    basis[j] = 1.0;
    K.col(j) = apply_K(prototype.with_values(basis)).values();
    basis[j] = 0.0;
  }
  return K;
}

GridFn dense_solve(const GridOp& apply_K, const GridFn& rhs) {
  Mat K = operator_matrix(apply_K, rhs);
  Mat A = Mat::Identity(K.rows(), K.cols()) - K;
  Vec f = A.partialPivLu().solve(rhs.values());
  return rhs.with_values(std::move(f));
}

double power_radius(const GridOp& apply_K, const GridFn& prototype,
                    int iters, std::uint64_t seed) {
  const std::size_t n = prototype.grid()->size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = unif(rng);
  x /= x.norm();
  double radius = 0.0;
  for (int it = 0; it < iters; ++it) {
    Vec y = apply_K(prototype.with_values(x)).values();
    double norm = y.norm();
    if (norm == 0.0) return 0.0;
    radius = norm;
    x = y / norm;
  }
  return radius;
}

}  // namespace rdm
