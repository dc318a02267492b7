#pragma once

// The Gale matrix B of 0 -> Z^3 -> Z^r -> Pic -> 0, fiber graphs of the toric
// ideal I_B, bounded Markov-basis verification and the connected-sections
// criterion.

#include "torhyp/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torhyp {

struct GaleMatrix {
  IntMat B;
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;
};

GaleMatrix gale_matrix(const Fan& fan, const PicBasis& basis);

/// All v >= 0 with B v = image, as points; EnumerationError if infinite.
std::vector<IntVec> fiber(const IntMat& b, const IntVec& image);

/// Connectivity of the fiber of `image` under v <-> v +- move.
/// ParameterError if a move is not in ker(B).
bool fiber_graph_connected(const IntMat& b, const std::vector<IntVec>& moves, const IntVec& image);

struct FiberCertificate {
  long bound = 0;
  std::size_t fibers_checked = 0;
  bool connected = true;
  std::optional<IntVec> failing_fiber;    ///< the B-image of a disconnected fiber
  std::optional<IntVec> failing_element;  ///< an element of that fiber
};

/// Checks every fiber containing some v >= 0 with coordinate sum <= bound.
FiberCertificate markov_verify(const IntMat& b, const std::vector<IntVec>& moves, long bound);

/// Fiber bound from TORHYP_MARKOV_BOUND, default 6.
long default_markov_bound();

/// i(m)_rho = <m, u_rho>.
IntVec embed(const Fan& fan, const IntVec& m);

/// Nonzero elements of G = i(P(E')) - i(P(E')), sorted.
std::vector<IntVec> section_moves(const TDivisor& eprime);

struct ConnectedSectionsReport {
  /// Nonzero elements of G = i(P(E')) - i(P(E')), sorted.
  std::vector<IntVec> moves;
  std::optional<IdpResult> idp;  ///< set when the IDP was verified directly
  FiberCertificate certificate;
  bool passes = false;
};

/// Prop. "(E, E') IDP and G Markov => (E+E', E) has connected sections",
/// checked at the given fiber bound. With verify_idp = false the IDP of the
/// nef pair is taken from the rank <= 3 theorem instead of enumeration.
ConnectedSectionsReport connected_sections_check(const TDivisor& e, const TDivisor& eprime, long bound,
                                                 bool verify_idp = true);

}  // namespace torhyp
