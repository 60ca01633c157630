#include "rdm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace rdm {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

GaussHermiteRule::GaussHermiteRule(int order) {
  if (order < 1) throw ConfigError("GaussHermiteRule: order must be >= 1");
  if (order == 1) {
    nodes_ = {0.0};
    weights_ = {kSqrtPi};
  } else {
    Mat J = Mat::Zero(order, order);
    for (int i = 1; i < order; ++i) {
      double b = std::sqrt(i / 2.0);
      J(i, i - 1) = b;
      J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    nodes_.resize(order);
    weights_.resize(order);
    for (int i = 0; i < order; ++i) {
      nodes_[i] = es.eigenvalues()[i];
      double v0 = es.eigenvectors()(0, i);
      weights_[i] = kSqrtPi * v0 * v0;
    }
    // enforce exact symmetry of the rule about zero
    for (int i = 0; i < order / 2; ++i) {
      int j = order - 1 - i;
      double nd = 0.5 * (nodes_[j] - nodes_[i]);
      nodes_[i] = -nd;
      nodes_[j] = nd;
      double w = 0.5 * (weights_[i] + weights_[j]);
      weights_[i] = weights_[j] = w;
    }
    if (order % 2 == 1) nodes_[order / 2] = 0.0;
  }
  log_weights_.resize(order);
  for (int i = 0; i < order; ++i) log_weights_[i] = std::log(weights_[i]);
}

void gh_tensor_visit(const GaussHermiteRule& rule, int dim,
                     const std::function<void(const Vec&, double)>& visit) {
  const int n = rule.order();
  const auto& nd = rule.nodes();
  const auto& lw = rule.log_weights();
  Vec z(dim);
  std::vector<int> cursor(dim, 0);
  for (;;) {
    double logw = -0.5 * dim * kLogPi;
    for (int k = 0; k < dim; ++k) {
      z[k] = nd[cursor[k]];
      logw += lw[cursor[k]];
    }
    visit(z, logw);
    int k = dim - 1;
    while (k >= 0 && ++cursor[k] == n) cursor[k--] = 0;
    if (k < 0) break;
  }
}

double gh_expectation(const GaussHermiteRule& rule, const Vec& mean,
                      const Mat& chol_cov,
                      const std::function<double(const Vec&)>& integrand) {
  const int d = static_cast<int>(mean.size());
  if (chol_cov.rows() != d || chol_cov.cols() != d)
    throw ConfigError("gh_expectation: chol_cov shape mismatch");
  for (int i = 0; i < d; ++i)
    if (!(chol_cov(i, i) > 0.0))
      throw DomainError("gh_expectation: chol_cov diagonal must be positive");

  double acc = 0.0;
  gh_tensor_visit(rule, d, [&](const Vec& z, double logw) {
    Vec x = mean + std::sqrt(2.0) * (chol_cov * z);
    double g = integrand(x);
    if (!std::isfinite(g)) {
      std::string msg = "gh_expectation: non-finite integrand at node (";
      for (int k = 0; k < d; ++k)
        msg += (k ? "," : "") + format_double(x[k]);
      throw DomainError(msg + ")");
    }
    acc += std::exp(logw) * g;
  });
  return acc;
}

}  // namespace rdm
