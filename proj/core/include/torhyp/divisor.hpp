#pragma once

// Torus-invariant divisors: support functions, nef/ample tests, Picard group
// bases, canonical class and the nef/effective cone data of each family.

#include "torhyp/fan.hpp"

#include <memory>
#include <string>
#include <vector>

namespace torhyp {

/// D = sum a_rho D_rho on a fixed fan.
class TDivisor {
 public:
  TDivisor(std::shared_ptr<const Fan> fan, IntVec coeffs);

  static TDivisor zero(std::shared_ptr<const Fan> fan);
  static TDivisor ray(std::shared_ptr<const Fan> fan, std::size_t index);

  [[nodiscard]] const Fan& fan() const { return *fan_; }
  [[nodiscard]] const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  [[nodiscard]] const IntVec& coeffs() const { return coeffs_; }
  [[nodiscard]] const Int& coeff(std::size_t i) const { return coeffs_.at(i); }
  [[nodiscard]] bool is_zero() const { return torhyp::is_zero(coeffs_); }
  /// "2D_2+3D_3"
  [[nodiscard]] std::string to_string() const;

  friend TDivisor operator+(const TDivisor& a, const TDivisor& b);
  friend TDivisor operator-(const TDivisor& a, const TDivisor& b);
  friend TDivisor operator*(const Int& k, const TDivisor& d);
  friend bool operator==(const TDivisor& a, const TDivisor& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::shared_ptr<const Fan> fan_;
  IntVec coeffs_;
};

/// Parses "2D_2+3D_3", "D_{u_1}-D_{z_1}", "-D_1" against the fan's labels.
TDivisor parse_divisor(const std::shared_ptr<const Fan>& fan, const std::string& text);

/// phi_D(u), the piecewise-linear function with phi_D(u_rho) = -a_rho.
Rational support_function(const TDivisor& d, const IntVec& u);

/// Coefficient vector l with l . a = sum_{rho in P} a_rho - sum c_rho a_rho.
IntVec collection_functional(const Fan& fan, const PrimitiveCollection& pc);
bool is_nef(const TDivisor& d);
bool is_ample(const TDivisor& d);

struct PicBasis {
  std::vector<std::size_t> basis_rays;
  /// rank x num_rays matrix sending divisor coefficients to basis coordinates.
  IntMat reduction;

  [[nodiscard]] std::size_t rank() const { return basis_rays.size(); }
  [[nodiscard]] IntVec coords(const IntVec& divisor_coeffs) const { return reduction * divisor_coeffs; }
  /// Divisor supported on the basis rays with the given coordinates.
  [[nodiscard]] IntVec lift(const IntVec& coords) const;
};

/// Basis from the given rays; the complementary rays must span a smooth cone.
PicBasis picard_basis_from(const Fan& fan, const std::vector<std::size_t>& basis_rays);
/// The printed basis for catalog fans, otherwise the complement of the first
/// maximal cone.
PicBasis picard_basis(const Fan& fan);
/// Basis labels of a catalog case, in coordinate order.
std::vector<std::string> picard_basis_labels(CaseId id);

IntVec class_of(const PicBasis& basis, const TDivisor& d);
TDivisor canonical_divisor(const std::shared_ptr<const Fan>& fan);

/// A divisor (class) as printed in a table, with its concrete coefficients.
struct NamedClass {
  std::string name;
  IntVec coeffs;  ///< torus-invariant representative, one entry per ray
};

std::vector<NamedClass> nef_cone_generators(const Fan& fan);
std::vector<NamedClass> eff_cone_generators(const Fan& fan);

/// Printed canonical representative in basis coordinates, with typo notes.
struct PrintedCanonical {
  std::string printed;
  IntVec coords;
  std::string typo_note;  ///< empty when the printed cell is used verbatim
};
PrintedCanonical printed_canonical(const FamilySpec& spec);

/// Divisor sum_i c_i N_i over the nef generators N_i (the table convention).
TDivisor divisor_from_nef_coords(const std::shared_ptr<const Fan>& fan, const IntVec& coords);
/// Coordinates of a class in the nef generators; exact rational.
RatVec nef_coordinates(const Fan& fan, const TDivisor& d);

/// Nef test evaluated on basis coordinates.
bool is_nef_class(const Fan& fan, const PicBasis& basis, const IntVec& coords);

/// Is v a nonnegative rational combination of gens? (vectors of equal length)
bool in_cone(const IntVec& v, const std::vector<IntVec>& gens);

/// Extreme rays (primitive) of {c : l(c) >= 0 for every collection functional}.
std::vector<IntVec> nef_cone_extreme_rays(const Fan& fan, const PicBasis& basis);

/// Bigness of a nef divisor via dim P(D) = 3. ParameterError if D is not nef.
bool is_big(const TDivisor& d);

}  // namespace torhyp
