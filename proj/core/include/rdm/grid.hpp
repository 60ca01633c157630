#ifndef RDM_GRID_HPP
#define RDM_GRID_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "rdm/common.hpp"

namespace rdm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class Interp { Multilinear, Cubic };
enum class Extrap { Clamp, LinearExtend };

// Tensor-product rectangular grid. Nodes are strictly increasing per
// dimension, at least two per dimension; bounds are the node extremes.
class Grid {
 public:
  explicit Grid(std::vector<std::vector<double>> nodes_per_dim);

  static Grid uniform(const Vec& lo, const Vec& hi, const std::vector<int>& n);

  int dim() const { return static_cast<int>(nodes_.size()); }
  std::size_t size() const { return size_; }
  const std::vector<double>& nodes(int d) const { return nodes_[d]; }
  double lo(int d) const { return nodes_[d].front(); }
  double hi(int d) const { return nodes_[d].back(); }

  // Row-major flat ordering: the last dimension varies fastest.
  std::size_t flat_index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(std::size_t flat) const;
  Vec point(std::size_t flat) const;

 private:
  std::vector<std::vector<double>> nodes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

// Real-valued function on a Grid with an interpolation rule.
class GridFn {
 public:
  GridFn() = default;
  GridFn(std::shared_ptr<const Grid> grid, Vec values,
         Interp interp = Interp::Multilinear, Extrap extrap = Extrap::Clamp);

  static GridFn constant(std::shared_ptr<const Grid> grid, double c,
                         Interp interp = Interp::Multilinear,
                         Extrap extrap = Extrap::Clamp);
  static GridFn from_fn(std::shared_ptr<const Grid> grid,
                        const std::function<double(const Vec&)>& f,
                        Interp interp = Interp::Multilinear,
                        Extrap extrap = Extrap::Clamp);

  double operator()(const Vec& x) const { return eval(x); }
  double eval(const Vec& x) const;

  const Vec& values() const { return values_; }
  Vec& values() { return values_; }
  const std::shared_ptr<const Grid>& grid() const { return grid_; }
  Interp interp() const { return interp_; }
  Extrap extrap() const { return extrap_; }

  GridFn with_values(Vec v) const { return GridFn(grid_, std::move(v), interp_, extrap_); }

  double sup_norm() const { return values_.cwiseAbs().maxCoeff(); }

  // Interpolation stencil of x: flat node indices and weights summing to 1.
  void stencil(const Vec& x, std::vector<std::size_t>& idx,
               std::vector<double>& w) const;

 private:
  std::shared_ptr<const Grid> grid_;
  Vec values_;
  Interp interp_ = Interp::Multilinear;
  Extrap extrap_ = Extrap::Clamp;
};

}  // namespace rdm

#endif  // RDM_GRID_HPP
