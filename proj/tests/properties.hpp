#pragma once

// Randomized invariants shared by the property tests and the acceptance run.
// Each check returns an empty string on success, otherwise the first failure.

#include "support.hpp"

#include <sstream>
#include <string>

namespace torhyp::testing {

inline constexpr int kPropertyInstances = 1000;

inline IntMat random_matrix(std::size_t r, std::size_t c, long lo, long hi) {
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline TDivisor random_nef(const std::shared_ptr<const Fan>& fan, long hi) {
  IntVec c(nef_cone_generators(*fan).size());
  for (auto& x : c) x = uniform(0, hi);
  return divisor_from_nef_coords(fan, c);
}

inline TDivisor random_divisor(const std::shared_ptr<const Fan>& fan, long lo, long hi) {
  IntVec c(fan->num_rays());
  for (auto& x : c) x = uniform(lo, hi);
  return TDivisor(fan, c);
}

inline std::shared_ptr<const Fan> shared_fan(const FamilySpec& s) {
  return std::make_shared<const Fan>(build_family_fan(s));
}

inline std::string snf_remultiplies(int n = kPropertyInstances) {
  for (int t = 0; t < n; ++t) {
    const IntMat m = random_matrix(uniform(1, 4), uniform(1, 6), -9, 9);
    const auto d = smith_normal_form(m);
    if (d.U * m * d.V != d.S) return "U*M*V != S for " + m.to_string();
    if (abs(determinant(d.U)) != 1 || abs(determinant(d.V)) != 1) return "non-unimodular transform for " + m.to_string();
    if (d.rank != rank(m)) return "rank mismatch for " + m.to_string();
    const IntVec f = d.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i + 1] % f[i] != 0) return "divisibility fails for " + m.to_string();
  }
  return {};
}

inline std::string kernel_membership(int n = kPropertyInstances) {
  for (int t = 0; t < n; ++t) {
    const std::size_t cols = uniform(2, 6);
    const IntMat m = random_matrix(uniform(1, 3), cols, -6, 6);
    const auto ker = integer_kernel(m);
    if (ker.size() + rank(m) != cols) return "kernel rank mismatch for " + m.to_string();
    for (const auto& v : ker)
      if (!is_zero(m * v)) return "kernel vector not annihilated for " + m.to_string();
  }
  return {};
}

inline std::string volume_minkowski(int n = kPropertyInstances) {
  for (int t = 0; t < n; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = shared_fan(s);
    const TDivisor d = random_nef(fan, 3);
    const TDivisor e = random_nef(fan, 3);
    const TDivisor de(fan, add(d.coeffs(), e.coeffs()));
    const auto sum = minkowski_sum(vertices(polytope_of(d)), vertices(polytope_of(e)));
    if (volume(polytope_of(de)) != hull_volume(sum))
      return s.describe() + ": vol P(" + de.to_string() + ") != vol(P(D) + P(E))";
  }
  return {};
}

inline std::string triple_symmetric_multilinear(int n = kPropertyInstances) {
  for (int t = 0; t < n; ++t) {
    const FamilySpec s = random_spec(3);
    const auto fan = shared_fan(s);
    const IntersectionForm form(fan);
    const TDivisor a = random_divisor(fan, -3, 3), b = random_divisor(fan, -3, 3), c = random_divisor(fan, -3, 3);
    const TDivisor a2 = random_divisor(fan, -3, 3);
    const Int abc = form.triple(a, b, c);
    if (abc != form.triple(b, c, a) || abc != form.triple(c, a, b) || abc != form.triple(b, a, c))
      return s.describe() + ": triple not symmetric";
    const TDivisor sum(fan, add(a.coeffs(), a2.coeffs()));
    if (form.triple(sum, b, c) != abc + form.triple(a2, b, c)) return s.describe() + ": triple not additive";
    const IntVec m{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
    if (form.triple(a, b, TDivisor(fan, embed(*fan, m))) != 0) return s.describe() + ": principal divisor pairs nonzero";
  }
  return {};
}

inline std::string lattice_translation(int n = kPropertyInstances) {
  for (int t = 0; t < n; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = shared_fan(s);
    const TDivisor d = random_nef(fan, 3);
    const IntVec m{uniform(-4, 4), uniform(-4, 4), uniform(-4, 4)};
    const TDivisor shifted(fan, add(d.coeffs(), embed(*fan, m)));
    const auto p = lattice_points(polytope_of(d));
    const auto q = lattice_points(polytope_of(shifted));
    if (p.size() != q.size()) return s.describe() + ": lattice count changed under translation";
    // P(D + div(chi^m)) = P(D) - m
    for (std::size_t i = 0; i < p.size(); ++i)
      if (q[i] != sub(p[i], m)) return s.describe() + ": translated point set differs";
  }
  return {};
}

}  // namespace torhyp::testing
