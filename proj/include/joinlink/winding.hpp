#pragma once

#include "joinlink/mixed_poly.hpp"

namespace jl {

struct DegreeResult {
  long degree = 0;
  double radius_used = 0;
  long samples = 0;     // evaluations consumed at radius_used
  bool stable = false;  // same integer degree at radius_used / 2
};

// Mapping degree of f/|f| on the circle |z| = eps for a 1-variable mixed
// polynomial: total argument increment / 2 pi, sampled adaptively until every
// adjacent argument jump is below pi/2 (cap 2^20 evaluations, else
// AdaptivityExceeded).  A sample with |f| below 1e-12 times the attainable
// magnitude scale sum_k |c_k| eps^deg_k raises NearZeroOnCircle.
DegreeResult mapping_degree(const MixedPolynomial& f, double eps,
                            int samples = 64);

// mapping_degree with automatic radius halving (at most max_halvings times)
// when a near-zero sample is hit.
DegreeResult mapping_degree_auto(const MixedPolynomial& f, double eps = 1e-2,
                                 int samples = 64, int max_halvings = 6);

}  // namespace jl
