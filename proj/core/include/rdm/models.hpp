#ifndef RDM_MODELS_HPP
#define RDM_MODELS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>

#include "rdm/grid.hpp"
#include "rdm/quadrature.hpp"

namespace rdm {

using Rng = std::mt19937_64;

// Utility growth u(x_t, x_{t+1}); affine in the states unless a callback
// overrides the evaluation.
struct UtilityGrowth {
  double a0 = 0.0;
  Vec lambda0;
  Vec lambda1;
  std::function<double(const Vec&, const Vec&)> callback;

  UtilityGrowth() = default;
  UtilityGrowth(double a0_, Vec l0, Vec l1)
      : a0(a0_), lambda0(std::move(l0)), lambda1(std::move(l1)) {}

  bool is_affine() const { return !callback; }

  double operator()(const Vec& x, const Vec& x_next) const {
    if (callback) return callback(x, x_next);
    return a0 + lambda0.dot(x) + lambda1.dot(x_next);
  }
};

// Markov transition law on R^d: conditional density, stationary law,
// simulation, and (where available) a Gauss-Hermite atom representation of
// the one-step conditional expectation.
class MarkovModel {
 public:
  virtual ~MarkovModel() = default;

  virtual int dim() const = 0;

  virtual double log_cond_density(const Vec& x_next, const Vec& x) const = 0;
  double cond_density(const Vec& x_next, const Vec& x) const {
    return std::exp(log_cond_density(x_next, x));
  }

  virtual double log_stationary_density(const Vec& x) const = 0;
  double stationary_density(const Vec& x) const {
    return std::exp(log_stationary_density(x));
  }
  virtual Vec stationary_mean() const = 0;
  virtual Mat stationary_cov() const = 0;

  virtual Vec step(const Vec& x, Rng& rng) const = 0;
  virtual Vec stationary_draw(Rng& rng) const = 0;

  // Conditional-expectation atoms: E[g(X')|X=x] ~= sum exp(logw) g(x').
  virtual bool has_quadrature() const { return false; }
  virtual void visit_atoms(
      const Vec& x, const GaussHermiteRule& rule,
      const std::function<void(double logw, const Vec& x_next)>& visit) const;
};

class LGModel : public MarkovModel {
 public:
  LGModel(Vec mu, Mat A, Mat sigma);

  int dim() const override { return static_cast<int>(mu_.size()); }
  double log_cond_density(const Vec& x_next, const Vec& x) const override;
  double log_stationary_density(const Vec& x) const override;
  Vec stationary_mean() const override { return stat_mean_; }
  Mat stationary_cov() const override { return stat_cov_; }
  Vec step(const Vec& x, Rng& rng) const override;
  Vec stationary_draw(Rng& rng) const override;
  bool has_quadrature() const override { return true; }
  void visit_atoms(const Vec& x, const GaussHermiteRule& rule,
                   const std::function<void(double, const Vec&)>& visit)
      const override;

  const Vec& mu() const { return mu_; }
  const Mat& A() const { return A_; }
  const Mat& sigma() const { return sigma_; }
  Mat shock_cov() const { return sigma_ * sigma_.transpose(); }

 private:
  Vec mu_;
  Mat A_, sigma_;
  Mat chol_;           // chol of sigma sigma'
  double logdet_cond_; // log det of sigma sigma'
  Vec stat_mean_;
  Mat stat_cov_, stat_chol_;
  double logdet_stat_;
};

class MoEModel : public MarkovModel {
 public:
  struct Component {
    double weight;
    Vec mean;   // mu_k
    Mat A;      // autoregression
    Mat Omega;  // unconditional covariance
  };

  explicit MoEModel(std::vector<Component> comps);

  int K() const { return static_cast<int>(comps_.size()); }
  const Component& component(int k) const { return comps_[k]; }
  const Mat& cond_cov(int k) const { return Sigma_[k]; }

  // Mixture weights w_k(x), computed in log space with max subtraction.
  Vec mixture_log_weights(const Vec& x) const;
  Vec mixture_weights(const Vec& x) const;
  double weight_entropy(const Vec& x) const;

  int dim() const override { return static_cast<int>(comps_[0].mean.size()); }
  double log_cond_density(const Vec& x_next, const Vec& x) const override;
  double log_stationary_density(const Vec& x) const override;
  Vec stationary_mean() const override;
  Mat stationary_cov() const override;
  Vec step(const Vec& x, Rng& rng) const override;
  Vec stationary_draw(Rng& rng) const override;
  bool has_quadrature() const override { return true; }
  void visit_atoms(const Vec& x, const GaussHermiteRule& rule,
                   const std::function<void(double, const Vec&)>& visit)
      const override;

 private:
  std::vector<Component> comps_;
  std::vector<Mat> Sigma_;        // Omega_k - A_k Omega_k A_k'
  std::vector<Mat> cond_chol_;    // chol(Sigma_k)
  std::vector<double> cond_logdet_;
  std::vector<Mat> stat_chol_;    // chol(Omega_k)
  std::vector<double> stat_logdet_;
};

// Autoregressive gamma process on R_+ with parameters c1, c2, c3 > 0 and
// c1*c2 < 1. Conditional law: Z ~ Poisson(c2 x), X' ~ Gamma(c3 + Z, scale c1).
class ARGModel : public MarkovModel {
 public:
  ARGModel(double c1, double c2, double c3);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c3() const { return c3_; }

  // log E[e^{s X'} | X = x] = c1 c2 s x / (1 - s c1) - c3 log(1 - s c1),
  // defined for s < 1/c1.
  double log_mgf(double s, double x) const;

  int dim() const override { return 1; }
  double log_cond_density(const Vec& x_next, const Vec& x) const override;
  double log_stationary_density(const Vec& x) const override;
  Vec stationary_mean() const override;
  Mat stationary_cov() const override;
  Vec step(const Vec& x, Rng& rng) const override;
  Vec stationary_draw(Rng& rng) const override;

 private:
  double c1_, c2_, c3_;
  double stat_scale_;  // c1 / (1 - c1 c2); stationary law Gamma(c3, scale)
};

// Hidden-regime model: Markov chain on {1..N} with column-stochastic
// transition matrix (Lambda(i,j) = P(next = i | current = j)) and Gaussian
// emission densities for the observable.
class RegimeModel {
 public:
  struct Emission {
    Vec mean;
    Mat cov;
  };

  RegimeModel(Mat lambda, std::vector<Emission> emissions);

  int regimes() const { return static_cast<int>(Lambda_.rows()); }
  int obs_dim() const { return static_cast<int>(emissions_[0].mean.size()); }
  const Mat& Lambda() const { return Lambda_; }
  const Emission& emission(int k) const { return emissions_[k]; }
  const Mat& emission_chol(int k) const { return chol_[k]; }

  double log_emission_density(const Vec& phi, int regime) const;
  // q vector [q(phi|1), ..., q(phi|N)].
  Vec emission_densities(const Vec& phi) const;

 private:
  Mat Lambda_;
  std::vector<Emission> emissions_;
  std::vector<Mat> chol_;
  std::vector<double> logdet_;
};

// Gaussian state-space model: phi' = A xi + u, xi' = B xi + w.
struct StateSpaceModel {
  Mat A;        // observation loading (m x k)
  Mat B;        // latent autoregression (k x k)
  Mat Sigma_u;  // observation noise covariance (m x m)
  Mat Sigma_w;  // latent noise covariance (k x k)

  StateSpaceModel(Mat A_, Mat B_, Mat Su, Mat Sw);
};

// --- operations -----------------------------------------------------------

// E[g(X')|X=x] by per-component Gauss-Hermite; requires model.has_quadrature.
double cond_expectation(const MarkovModel& model, const Vec& x,
                        const std::function<double(const Vec&)>& g,
                        const GaussHermiteRule& rule);

// Monte Carlo fallback for models without a quadrature representation.
double cond_expectation_mc(const MarkovModel& model, const Vec& x,
                           const std::function<double(const Vec&)>& g,
                           int samples, std::uint64_t seed);

// Simulates T transitions from x0. Row t holds x_{t+1}; deterministic in seed.
Mat simulate(const MarkovModel& model, const Vec& x0, int T,
             std::uint64_t seed);

struct MoEFitOptions {
  int max_iters = 500;
  double tol = 1e-8;        // relative log-likelihood improvement
  int restarts = 5;
  std::uint64_t seed = 0;
  double eig_floor_scale = 1e-6;  // floor = scale * data variance
  double max_spectral_radius = 0.995;
};

struct MoEFitReport {
  double log_likelihood = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  std::vector<double> ll_path;  // per accepted iteration, non-decreasing
};

// EM on consecutive pairs (x_t, x_{t+1}) under the stationarity-constrained
// mixture parameterization. Throws DomainError on degenerate data.
MoEModel fit_moe_em(const Mat& data, int K, const MoEFitOptions& opts = {},
                    MoEFitReport* report = nullptr);

struct TailReport {
  bool pass = false;
  bool stable = false;
  double c_lo = 0.0, c_hi = 0.0;  // envelope constants
  double s_lo = 0.0, s_hi = 0.0;  // envelope scales
};

// Monte Carlo check that the stationary log-density sits between two
// Gaussian envelopes c_lo exp(-|x|^2/(2 s_lo^2)) and c_hi exp(-|x|^2/(2 s_hi^2)).
TailReport tail_regularity_check(const MoEModel& model, int samples,
                                 std::uint64_t seed);

// Grid spanning mean +/- span stddevs of the stationary law.
std::shared_ptr<const Grid> default_grid(const MarkovModel& model,
                                         int nodes_per_dim = 61,
                                         double span = 5.0);

double log_normal_density(const Vec& x, const Vec& mean, const Mat& chol,
                          double logdet);

Mat cholesky_psd(const Mat& S, const char* what);

}  // namespace rdm

#endif  // RDM_MODELS_HPP
