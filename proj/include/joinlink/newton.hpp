#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "joinlink/mixed_poly.hpp"

namespace jl {

// Unbounded polytope conv(generators) + R^n_{>=0}.  Generators are the
// distinct radial exponent vectors nu + mu of the terms; vertices are the
// extreme points, kept in lexicographic order.
struct NewtonPolytope {
  int n = 0;
  std::vector<std::vector<long>> generators;
  std::vector<std::vector<long>> vertices;
};

// Compact face: the generators minimizing <normal, .> for some strictly
// positive normal.  The recorded normal is one primitive integer witness from
// the relative interior of the face's normal cone.
struct Face {
  std::vector<long> normal;
  std::vector<std::vector<long>> points;
  int dim = 0;
};

NewtonPolytope newton_polytope(const MixedPolynomial& p);

// All faces supported by strictly positive normals, sorted by (dim, points).
// Every vertex appears as a 0-face.  Exact enumeration is limited to 12
// vertices; larger inputs raise Domain.
std::vector<Face> compact_faces(const NewtonPolytope& np);

MixedPolynomial face_function(const MixedPolynomial& p, const Face& f);

// True when every coordinate axis carries a term involving only that
// variable and its conjugate (the axis restrictions are all nonzero).
bool is_convenient(const MixedPolynomial& p);

enum class Verdict { ExactlyNondegenerate, NoWitnessFound, DegenerateWitness };

struct SearchBudget {
  int samples = 256;        // random starts per face
  int iters = 50;           // descent iterations per start
  double radius_min = 1e-2; // starting radii are log-uniform in [min, max]
  double radius_max = 1e1;
  double tolerance = 1e-8;  // residual below this certifies a witness
};

struct NondegeneracyReport {
  Face face;
  Verdict verdict = Verdict::NoWitnessFound;
  std::optional<ComplexPoint> witness;
  double witness_residual = 0.0;
  long samples_used = 0;
  long descent_iters_used = 0;
  // Advisory surjectivity probe for faces of dim >= 1: how many of the probed
  // target values were reached.  Never changes the verdict.
  int surjectivity_targets = 0;
  int surjectivity_hits = 0;
};

// Smallest singular value of the 2 x 2n real Jacobian of (Re p, Im p) at w,
// assembled from the Wirtinger derivatives.  Zero exactly at critical points.
double criticality_residual(const MixedPolynomial& p, const ComplexPoint& w);

// One report per compact face, in compact_faces order.  Single-term face
// functions are decided exactly: c z^nu zbar^mu is critical somewhere on the
// torus (C*)^n iff nu == mu, in which case every torus point is critical.
// Multi-term faces run a seeded randomized search; NoWitnessFound is not a
// proof of non-degeneracy.
std::vector<NondegeneracyReport> check_strong_nondegeneracy(
    const MixedPolynomial& p, const SearchBudget& budget = {},
    std::uint64_t seed = 0);

}  // namespace jl
