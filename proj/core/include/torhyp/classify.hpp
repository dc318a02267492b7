#pragma once

// Hyperbolicity verdicts: boundary genus profiles, the genus bound class E+K,
// the Noether-Lefschetz hypothesis, positivity certificates with epsilon, and
// comparison against the printed tables.

#include "torhyp/tables.hpp"
#include "torhyp/toric_ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace torhyp {

/// A catalog variety with the data every verdict needs, built once.
class Variety {
 public:
  explicit Variety(FamilySpec spec, long markov_bound = default_markov_bound());

  [[nodiscard]] const FamilySpec& spec() const { return spec_; }
  [[nodiscard]] const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  [[nodiscard]] const Fan& fan() const { return *fan_; }
  [[nodiscard]] const PicBasis& basis() const { return basis_; }
  [[nodiscard]] const std::vector<NamedClass>& nef_generators() const { return nef_; }
  [[nodiscard]] const std::vector<NamedClass>& eff_generators() const { return eff_; }
  [[nodiscard]] const TDivisor& canonical() const { return canonical_; }
  [[nodiscard]] const TDivisor& ample() const { return ample_; }
  [[nodiscard]] const IntersectionForm& form() const { return form_; }
  [[nodiscard]] long markov_bound() const { return markov_bound_; }

  /// Replaces the ample class used for degrees; ParameterError unless ample.
  void set_ample(const TDivisor& h);
  /// The divisor with the given table (nef-generator) coordinates.
  [[nodiscard]] TDivisor divisor(const IntVec& nef_coords) const;

  /// Markov certificate for the moves of P(E'), cached per E'.
  const FiberCertificate& section_certificate(const IntVec& eprime_nef) const;

 private:
  FamilySpec spec_;
  std::shared_ptr<const Fan> fan_;
  PicBasis basis_;
  std::vector<NamedClass> nef_;
  std::vector<NamedClass> eff_;
  TDivisor canonical_;
  TDivisor ample_;
  IntersectionForm form_;
  long markov_bound_;
  mutable std::mutex mutex_;
  mutable std::map<IntVec, FiberCertificate> certificates_;
};

/// The ample class used for epsilon in the case proofs (all nef coordinates 1).
TDivisor default_ample(const std::shared_ptr<const Fan>& fan);

struct BoundaryEntry {
  std::size_t ray = 0;
  std::string label;
  int face_dimension = -1;
  Int interior_count;  ///< genus of the boundary curve S cap D_rho when the face is 2-dimensional
  std::optional<Int> degree;  ///< H.D.D_rho
};

struct BoundaryProfile {
  bool trivial = false;
  bool big = false;
  std::vector<BoundaryEntry> entries;
  /// A ray whose boundary curve has genus at most 1 (edge face or count <= 1).
  std::optional<std::size_t> low_genus_ray;

  /// Not big, or some boundary curve of genus <= 1.
  [[nodiscard]] bool forces_low_genus() const { return trivial || !big || low_genus_ray.has_value(); }
};

/// Per-ray min-face interior counts. ParameterError if D is zero or not nef.
BoundaryProfile boundary_genus_profile(const TDivisor& d);
/// As above, with boundary-curve degrees against the variety's ample class.
BoundaryProfile boundary_genus_profile(const Variety& v, const TDivisor& d);

/// E + K_X in Picard basis coordinates.
IntVec genus_bound_class(const Variety& v, const TDivisor& e);

/// D + K_X nef (= basepoint free on a toric variety).
bool noether_lefschetz_applicable(const TDivisor& d);

struct PositivityCertificate {
  std::vector<std::string> generators;  ///< effective-cone generators F_i
  std::vector<Int> pairings;            ///< (E+K).D.F_i
  std::vector<Int> degrees;             ///< H.D.F_i
  /// min(1, min_i pairings_i / degrees_i) when every pairing is >= 1.
  std::optional<Rational> epsilon;
};

PositivityCertificate positivity_certificate(const Variety& v, const TDivisor& d, const TDivisor& e,
                                             const TDivisor& h);

struct ConfigAttempt {
  ConfigEntry entry;
  std::optional<IntVec> e_nef;  ///< nef coordinates of E = D - E' when E is nef
  std::optional<FiberCertificate> certificate;
  std::optional<IntVec> bound_class;
  std::optional<PositivityCertificate> positivity;
  bool succeeded = false;
  std::string failure;
};

struct Verdict {
  FamilySpec spec;
  IntVec coeffs;
  Outcome outcome = Outcome::Open;
  std::string reason;
  BoundaryProfile profile;
  bool noether_lefschetz = false;
  std::vector<ConfigAttempt> attempts;
  std::optional<Rational> epsilon;  ///< overall epsilon including boundary curves
  TableLookup table;

  [[nodiscard]] bool agree() const { return outcome == table.outcome; }
  /// Hyperbolic against NotHyperbolic in either direction.
  [[nodiscard]] bool contradiction() const;
};

/// Verdict for the divisor with table coordinates `coeffs`.
Verdict derive_verdict(const Variety& v, const IntVec& coeffs);
Verdict derive_verdict(const FamilySpec& spec, const IntVec& coeffs);

/// Table lookup with arbitrary-precision coordinates (Unlisted when they do not fit).
TableLookup table_lookup(const FamilySpec& spec, const IntVec& coeffs);

/// Recomputed B against the printed Table 1 matrix and Markov candidate.
struct Table1Check {
  GaleMatrix computed;
  PrintedMatrix printed;
  bool annihilates = false;  ///< B * A == 0
  bool matches = false;      ///< computed B equals the printed matrix (as read)
  std::vector<IntVec> candidate;
  FiberCertificate certificate;

  [[nodiscard]] bool passed() const { return annihilates && matches && certificate.connected; }
};
Table1Check table1_check(const FamilySpec& spec, long bound);

/// Table 2 data recomputed from the fan.
struct Table2Check {
  std::size_t pic_rank = 0;
  bool rank_matches = false;
  std::vector<std::string> non_nef_generators;
  /// Every extreme ray of the computed nef cone lies in the span of the printed generators.
  bool nef_cone_matches = false;
  /// Every D_rho class lies in the cone of the printed effective generators.
  bool eff_cone_matches = false;
  PrintedCanonical canonical_printed;
  IntVec canonical_computed;
  bool canonical_matches = false;

  [[nodiscard]] bool passed() const {
    return rank_matches && non_nef_generators.empty() && nef_cone_matches && eff_cone_matches && canonical_matches;
  }
};
Table2Check table2_check(const FamilySpec& spec);

}  // namespace torhyp
