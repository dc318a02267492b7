#pragma once

// Divisor polytopes P(D) = {m : <m, u_rho> >= -a_rho}: vertices, lattice
// points, faces, volumes, the integer decomposition property and triple
// intersection numbers.

#include "torhyp/divisor.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace torhyp {

struct HPolytope {
  std::vector<IntVec> normals;
  IntVec offsets;  ///< P = {m : <m, normals[i]> >= offsets[i]}

  [[nodiscard]] bool contains(const IntVec& m) const;
  [[nodiscard]] bool contains(const RatVec& m) const;
};

HPolytope polytope_of(const TDivisor& d);

/// Exact vertices, sorted. Empty for an empty polytope. EnumerationError if
/// the polytope is unbounded.
std::vector<RatVec> vertices(const HPolytope& p);
/// Dimension of the affine hull of a point set (-1 when empty).
int affine_dimension(const std::vector<RatVec>& points);
int dimension(const HPolytope& p);
bool is_bounded(const HPolytope& p);

/// Lattice points in lexicographic order. EnumerationError beyond the guard.
std::vector<IntVec> lattice_points(const HPolytope& p);
std::vector<IntVec> lattice_points(const HPolytope& p, const std::vector<RatVec>& verts);
std::size_t count_lattice_points(const HPolytope& p);

/// Maximum number of bounding-box candidates scanned by lattice enumeration.
inline constexpr double kLatticeGuard = 1e6;

/// The face of P on which the ray's functional attains its minimum -a_rho.
struct Face2 {
  std::size_t ray = 0;
  int dimension = -1;
  /// Vertices in cyclic order (for 2-dimensional faces).
  std::vector<RatVec> vertices;
  /// (s, t) coordinates of the vertices in the plane lattice.
  std::vector<RatVec> plane_coords;
  /// Plane lattice {origin + s w1 + t w2}.
  IntVec origin;
  IntVec w1;
  IntVec w2;
  HPolytope polytope;
};

Face2 min_face(const HPolytope& p, const std::vector<RatVec>& verts, std::size_t ray);
Face2 min_face(const TDivisor& d, std::size_t ray);
/// Lattice points in the relative interior of a 2-dimensional face; 0 for
/// faces of dimension at most 1.
Int interior_lattice_count(const Face2& face);

/// Euclidean volume of a bounded polytope (0 unless full-dimensional).
Rational volume(const HPolytope& p);
Rational volume_of_vertices(const std::vector<RatVec>& verts, const HPolytope& p);
/// Volume of the convex hull of a point set (independent of any H-description).
Rational hull_volume(const std::vector<RatVec>& points);
/// Vertex-wise Minkowski sum (all pairwise sums, deduplicated).
std::vector<RatVec> minkowski_sum(const std::vector<RatVec>& a, const std::vector<RatVec>& b);

struct IdpResult {
  bool holds = true;
  std::optional<IntVec> uncovered;  ///< a point of P(E+E') not split as a sum
  std::size_t points_checked = 0;
};
/// (P(E) cap Z^3) + (P(E') cap Z^3) == P(E+E') cap Z^3. ParameterError unless both nef.
IdpResult idp_check(const TDivisor& e, const TDivisor& eprime);

/// D1.D2.D3 by volume polarization; all three divisors must be nef.
Rational triple_by_polarization(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3);

/// Trilinear intersection form on Pic, built from the nef generators.
class IntersectionForm {
 public:
  explicit IntersectionForm(std::shared_ptr<const Fan> fan);

  [[nodiscard]] const Fan& fan() const { return *fan_; }
  [[nodiscard]] std::size_t rank() const { return gens_.size(); }
  /// N_i.N_j.N_k for nef generators.
  [[nodiscard]] const Int& generator_triple(std::size_t i, std::size_t j, std::size_t k) const;
  /// Product of three classes given in nef coordinates (rational).
  [[nodiscard]] Rational triple_nef(const RatVec& x, const RatVec& y, const RatVec& z) const;
  /// Product of three divisors; InconsistencyError if not an integer.
  [[nodiscard]] Int triple(const TDivisor& a, const TDivisor& b, const TDivisor& c) const;
  /// Nef-generator coordinates of a divisor class.
  [[nodiscard]] RatVec coords(const TDivisor& d) const;

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<TDivisor> gens_;
  IntMat to_coords_num_;  // nef coords = to_coords_num_ * pic coords / to_coords_den_
  Int to_coords_den_;
  IntMat reduction_;
  std::vector<Int> table_;
};

/// Convenience wrapper building an IntersectionForm for the divisors' fan.
Int triple_intersection(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3);

}  // namespace torhyp
