#ifndef RDM_QUADRATURE_HPP
#define RDM_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "rdm/grid.hpp"

namespace rdm {

// Gauss-Hermite rule for the weight e^{-z^2} on the real line.
// Nodes/weights from the Golub-Welsch eigendecomposition of the Jacobi
// matrix; weights sum to sqrt(pi), nodes are symmetric about zero.
class GaussHermiteRule {
 public:
  explicit GaussHermiteRule(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& log_weights() const { return log_weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
};

// Visits every tensor-product node of a d-dimensional rule:
//   visit(z, logw)  with logw = sum_k log w_{i_k} - (d/2) log(pi),
// so that E[g(Z)] over Z ~ N(0, I/2-scaled GH convention) becomes
// sum exp(logw) g(mean + sqrt(2) L z) for N(mean, L L').
void gh_tensor_visit(const GaussHermiteRule& rule, int dim,
                     const std::function<void(const Vec&, double)>& visit);

// E[g(X)] for X ~ N(mean, chol_cov chol_cov') by tensor Gauss-Hermite.
// Exact for polynomial integrands of per-dimension degree <= 2n-1.
double gh_expectation(const GaussHermiteRule& rule, const Vec& mean,
                      const Mat& chol_cov,
                      const std::function<double(const Vec&)>& integrand);

}  // namespace rdm

#endif  // RDM_QUADRATURE_HPP
