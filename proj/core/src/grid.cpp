#include "rdm/grid.hpp"

#include <algorithm>
#include <cmath>

namespace rdm {

Grid::Grid(std::vector<std::vector<double>> nodes_per_dim)
    : nodes_(std::move(nodes_per_dim)) {
  if (nodes_.empty()) throw ConfigError("Grid: needs at least one dimension");
  size_ = 1;
  for (const auto& nd : nodes_) {
    if (nd.size() < 2)
      throw ConfigError("Grid: each dimension needs >= 2 nodes");
    for (std::size_t i = 0; i + 1 < nd.size(); ++i)
      if (!(nd[i] < nd[i + 1]))
        throw ConfigError("Grid: nodes must be strictly increasing");
    size_ *= nd.size();
  }
  strides_.assign(nodes_.size(), 1);
  for (int d = dim() - 2; d >= 0; --d)
    strides_[d] = strides_[d + 1] * nodes_[d + 1].size();
}

Grid Grid::uniform(const Vec& lo, const Vec& hi, const std::vector<int>& n) {
  if (lo.size() != hi.size() || static_cast<std::size_t>(lo.size()) != n.size())
    throw ConfigError("Grid::uniform: dimension mismatch");
  std::vector<std::vector<double>> nodes(n.size());
  for (std::size_t d = 0; d < n.size(); ++d) {
    if (n[d] < 2) throw ConfigError("Grid::uniform: need >= 2 nodes per dim");
    nodes[d].resize(n[d]);
    for (int i = 0; i < n[d]; ++i)
      nodes[d][i] = lo[d] + (hi[d] - lo[d]) * i / (n[d] - 1);
    nodes[d].back() = hi[d];
  }
  return Grid(std::move(nodes));
}

std::size_t Grid::flat_index(const std::vector<int>& multi) const {
  std::size_t idx = 0;
  for (int d = 0; d < dim(); ++d) idx += strides_[d] * multi[d];
  return idx;
}

std::vector<int> Grid::multi_index(std::size_t flat) const {
  std::vector<int> m(dim());
  for (int d = 0; d < dim(); ++d) {
    m[d] = static_cast<int>(flat / strides_[d]);
    flat %= strides_[d];
  }
  return m;
}

Vec Grid::point(std::size_t flat) const {
  Vec x(dim());
  for (int d = 0; d < dim(); ++d) {
    std::size_t i = flat / strides_[d];
    flat %= strides_[d];
    x[d] = nodes_[d][i];
  }
  return x;
}

GridFn::GridFn(std::shared_ptr<const Grid> grid, Vec values, Interp interp,
               Extrap extrap)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      interp_(interp),
      extrap_(extrap) {
  if (!grid_) throw ConfigError("GridFn: null grid");
  if (static_cast<std::size_t>(values_.size()) != grid_->size())
    throw ConfigError("GridFn: value count does not match grid size");
  if (!values_.allFinite())
    throw DomainError("GridFn: non-finite value at a grid node");
}

GridFn GridFn::constant(std::shared_ptr<const Grid> grid, double c,
                        Interp interp, Extrap extrap) {
  Vec v = Vec::Constant(grid->size(), c);
  return GridFn(std::move(grid), std::move(v), interp, extrap);
}

GridFn GridFn::from_fn(std::shared_ptr<const Grid> grid,
                       const std::function<double(const Vec&)>& f,
                       Interp interp, Extrap extrap) {
  Vec v(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) v[i] = f(grid->point(i));
  return GridFn(std::move(grid), std::move(v), interp, extrap);
}

namespace {

// Per-dimension interpolation stencil: node indices and barycentric-style
// weights. Multilinear uses the bracketing pair; cubic uses a 4-point
// Lagrange window shifted inward at the edges. Outside the bounds, Clamp
// pins x to the boundary and LinearExtend continues the boundary secant.
struct DimStencil {
  int idx[4];
  double w[4];
  int count;
};

void dim_stencil(const std::vector<double>& nodes, double x, Interp interp,
                 Extrap extrap, DimStencil& out) {
  const int n = static_cast<int>(nodes.size());
  const double lo = nodes.front(), hi = nodes.back();
  bool outside = x < lo || x > hi;
  if (outside && extrap == Extrap::Clamp) {
    x = std::min(std::max(x, lo), hi);
    outside = false;
  }
  if (outside) {  // linear extension on the boundary secant
    int j = x < lo ? 0 : n - 2;
    double t = (x - nodes[j]) / (nodes[j + 1] - nodes[j]);
    out.count = 2;
    out.idx[0] = j;
    out.idx[1] = j + 1;
    out.w[0] = 1.0 - t;
    out.w[1] = t;
    return;
  }
  // bracketing cell j with x in [nodes[j], nodes[j+1]]
  int j = static_cast<int>(std::upper_bound(nodes.begin(), nodes.end(), x) -
                           nodes.begin()) -
          1;
  j = std::min(std::max(j, 0), n - 2);

  if (interp == Interp::Multilinear || n < 4) {
    double t = (x - nodes[j]) / (nodes[j + 1] - nodes[j]);
    out.count = 2;
    out.idx[0] = j;
    out.idx[1] = j + 1;
    out.w[0] = 1.0 - t;
    out.w[1] = t;
    return;
  }
  int s = std::min(std::max(j - 1, 0), n - 4);
  out.count = 4;
  for (int i = 0; i < 4; ++i) {
    out.idx[i] = s + i;
    double wi = 1.0;
    for (int k = 0; k < 4; ++k) {
      if (k == i) continue;
      wi *= (x - nodes[s + k]) / (nodes[s + i] - nodes[s + k]);
    }
    out.w[i] = wi;
  }
}

}  // namespace

void GridFn::stencil(const Vec& x, std::vector<std::size_t>& idx,
                     std::vector<double>& w) const {
  const Grid& g = *grid_;
  const int d = g.dim();
  if (x.size() != d) throw DomainError("GridFn: point dimension mismatch");
  if (!x.allFinite()) throw DomainError("GridFn: non-finite evaluation point");

  DimStencil st[8];
  if (d > 8) throw ConfigError("GridFn: dimensions > 8 unsupported");
  for (int k = 0; k < d; ++k)
    dim_stencil(g.nodes(k), x[k], interp_, extrap_, st[k]);

  idx.clear();
  w.clear();
  std::vector<int> cursor(d, 0);
  std::vector<int> multi(d);
  for (;;) {
    double weight = 1.0;
    for (int k = 0; k < d; ++k) {
      weight *= st[k].w[cursor[k]];
      multi[k] = st[k].idx[cursor[k]];
    }
    idx.push_back(g.flat_index(multi));
    w.push_back(weight);
    int k = d - 1;
    while (k >= 0 && ++cursor[k] == st[k].count) cursor[k--] = 0;
    if (k < 0) break;
  }
}

double GridFn::eval(const Vec& x) const {
  const Grid& g = *grid_;
  const int d = g.dim();
  if (x.size() != d) throw DomainError("GridFn: point dimension mismatch");
  if (!x.allFinite()) throw DomainError("GridFn: non-finite evaluation point");

  DimStencil st[8];
  if (d > 8) throw ConfigError("GridFn: dimensions > 8 unsupported");
  for (int k = 0; k < d; ++k)
    dim_stencil(g.nodes(k), x[k], interp_, extrap_, st[k]);

  double acc = 0.0;
  int cursor[8] = {0};
  std::vector<int> multi(d);
  for (;;) {
    double weight = 1.0;
    for (int k = 0; k < d; ++k) {
      weight *= st[k].w[cursor[k]];
      multi[k] = st[k].idx[cursor[k]];
    }
    acc += weight * values_[g.flat_index(multi)];
    int k = d - 1;
    while (k >= 0 && ++cursor[k] == st[k].count) cursor[k--] = 0;
    if (k < 0) break;
  }
  return acc;
}

}  // namespace rdm
