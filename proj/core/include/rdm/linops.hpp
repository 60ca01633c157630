#ifndef RDM_LINOPS_HPP
#define RDM_LINOPS_HPP

#include <cstdint>
#include <functional>

#include "rdm/grid.hpp"

namespace rdm {

using GridOp = std::function<GridFn(const GridFn&)>;

struct NeumannOptions {
  double tol = 1e-10;
  int max_terms = 10000;
  int divergence_window = 8;  // consecutive non-decreasing terms => error
};

// Solves (I - K) f = rhs by the partial sum sum_n K^n rhs, stopping when the
// last term's sup norm drops below tol. Term norms that fail to decrease over
// a whole window signal spectral radius >= 1 and raise DivergenceError.
GridFn neumann_solve(const GridOp& apply_K, const GridFn& rhs,
                     const NeumannOptions& opts = {});

// Materializes the matrix of a linear grid operator by applying it to the
// canonical basis. Intended for cross-checks and small grids (<= 20000).
Mat operator_matrix(const GridOp& apply_K, const GridFn& prototype);

// Direct dense solve of (I - K) f = rhs; cross-check for neumann_solve.
GridFn dense_solve(const GridOp& apply_K, const GridFn& rhs);

// Dominant-eigenvalue magnitude of a linear grid operator by power
// iteration with a seeded start vector.
double power_radius(const GridOp& apply_K, const GridFn& prototype,
                    int iters = 200, std::uint64_t seed = 7);

}  // namespace rdm

#endif  // RDM_LINOPS_HPP
