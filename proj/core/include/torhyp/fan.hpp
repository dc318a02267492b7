#pragma once

// Complete smooth fans in R^3: the nine classified families, primitive
// collections and relations, and validation.

#include "torhyp/lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torhyp {

enum class CaseId { C201, C202, C301, C302, C311, C312, C313, C314, C315 };

/// "2.0.1", "3.1.4", ...
std::string to_string(CaseId id);
/// Accepts "2.0.1" and "201"; throws ParameterError otherwise.
CaseId parse_case_id(std::string_view text);
const std::vector<CaseId>& all_cases();
/// Picard rank of the family (2 or 3).
int picard_rank(CaseId id);
/// Parameter names in canonical order, e.g. {"r","a","b"}.
const std::vector<std::string>& parameter_names(CaseId id);

struct FamilySpec {
  CaseId id = CaseId::C201;
  std::map<std::string, Int> params;

  FamilySpec() = default;
  FamilySpec(CaseId case_id, std::map<std::string, Int> values);

  /// Value of a named parameter; ParameterError if missing.
  [[nodiscard]] const Int& param(const std::string& name) const;
  /// Same, as a machine integer (parameters are small in every use).
  [[nodiscard]] long p(const std::string& name) const;
  /// Throws ParameterError naming the violated constraint.
  void validate() const;
  /// "2.0.1 l=2"
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend bool operator<(const FamilySpec& a, const FamilySpec& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params < b.params;
  }
};

using Cone = std::array<std::size_t, 3>;

struct PrimitiveCollection {
  std::vector<std::size_t> rays;
  /// Rays of the smallest cone containing the ray sum (empty if the sum is 0).
  std::vector<std::size_t> relation_cone;
  /// Positive coefficients c_rho matching relation_cone.
  IntVec relation_coeffs;
};

class Fan {
 public:
  Fan() = default;
  Fan(std::vector<IntVec> rays, std::vector<Cone> max_cones, std::vector<std::string> labels);

  [[nodiscard]] const std::vector<IntVec>& rays() const { return rays_; }
  [[nodiscard]] const IntVec& ray(std::size_t i) const { return rays_.at(i); }
  [[nodiscard]] std::size_t num_rays() const { return rays_.size(); }
  [[nodiscard]] const std::vector<Cone>& max_cones() const { return max_cones_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<PrimitiveCollection>& collections() const { return collections_; }
  [[nodiscard]] const std::optional<FamilySpec>& spec() const { return spec_; }

  /// Ray index for a label. Accepts "D_{v_1}", "D_v1", "v_1", "v1", "D_3", "3"
  /// (1-based numeric aliases work for every fan).
  [[nodiscard]] std::size_t ray_index(std::string_view label) const;
  /// Matrix with the rays as rows (the matrix A).
  [[nodiscard]] IntMat ray_matrix() const;
  /// Index of a maximal cone containing u, or nullopt.
  [[nodiscard]] std::optional<std::size_t> containing_cone(const IntVec& u) const;
  /// Coordinates of u in the generators of max cone c (integral for smooth cones).
  [[nodiscard]] RatVec cone_coordinates(std::size_t c, const IntVec& u) const;
  /// True if the rays in `subset` lie in a common maximal cone.
  [[nodiscard]] bool is_face(const std::vector<std::size_t>& subset) const;

  void set_collections(std::vector<PrimitiveCollection> collections) { collections_ = std::move(collections); }
  void set_spec(FamilySpec spec) { spec_ = std::move(spec); }

 private:
  std::vector<IntVec> rays_;
  std::vector<Cone> max_cones_;
  std::vector<std::string> labels_;
  std::vector<PrimitiveCollection> collections_;
  std::optional<FamilySpec> spec_;
};

/// Rays and stored primitive collections of a family, in printed order.
struct FamilyData {
  std::vector<IntVec> rays;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> collections;
};
FamilyData family_data(const FamilySpec& spec);

/// Builds, validates and fills the primitive relations of a family fan.
Fan build_family_fan(const FamilySpec& spec);

/// Maximal cones = 3-subsets of rays containing no collection. Throws
/// InconsistencyError if the result is not smooth and complete.
std::vector<Cone> cones_from_collections(const std::vector<IntVec>& rays,
                                         const std::vector<std::vector<std::size_t>>& collections);

struct ValidationReport {
  struct ConeDet {
    Cone cone;
    Int abs_det;
  };
  struct FaceCount {
    std::array<std::size_t, 2> face;
    int count = 0;
  };
  std::vector<std::size_t> non_primitive_rays;
  std::vector<ConeDet> cone_dets;
  std::vector<FaceCount> face_counts;
  /// Number of maximal cones containing a generic test point (1 if complete).
  int generic_cover = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

ValidationReport verify_smooth_complete(const Fan& fan);

/// Fills relation_cone/relation_coeffs for a primitive collection.
PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<std::size_t>& collection);

/// Minimal subsets of rays not contained in any maximal cone, sorted.
std::vector<std::vector<std::size_t>> minimal_non_faces(const Fan& fan);

/// No two primitive collections intersect.
bool is_splitting(const Fan& fan);

/// Fan built from explicit rays and cones (hand-written input). Primitive
/// collections are recomputed as minimal non-faces.
Fan make_generic_fan(std::vector<IntVec> rays, std::vector<Cone> max_cones,
                     std::vector<std::string> labels = {});

}  // namespace torhyp
