#pragma once

// Shared grids and independent oracles for the test binaries.

#include "torhyp/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace torhyp::testing {

inline FamilySpec make_spec(CaseId id, std::vector<long> values) {
  FamilySpec s;
  s.id = id;
  const auto& names = parameter_names(id);
  for (std::size_t i = 0; i < names.size(); ++i) s.params[names[i]] = values.at(i);
  return s;
}

/// Parameter grid: every name over `values` (3.0.2's b over `negative`), invalid specs skipped.
inline std::vector<FamilySpec> parameter_grid(CaseId id, const std::vector<long>& values,
                                              const std::vector<long>& negative = {-1, -2, -3, -4}) {
  const auto& names = parameter_names(id);
  std::vector<FamilySpec> out;
  std::vector<std::size_t> idx(names.size(), 0);
  auto domain = [&](std::size_t i) -> const std::vector<long>& {
    return (id == CaseId::C302 && names[i] == "b") ? negative : values;
  };
  while (true) {
    FamilySpec s;
    s.id = id;
    for (std::size_t i = 0; i < names.size(); ++i) s.params[names[i]] = domain(i)[idx[i]];
    try {
      s.validate();
      out.push_back(s);
    } catch (const ParameterError&) {
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == domain(k).size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

inline std::vector<FamilySpec> all_grid_specs(const std::vector<long>& values = {0, 1, 2, 3}) {
  std::vector<FamilySpec> out;
  for (auto id : all_cases()) {
    auto g = parameter_grid(id, values);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

/// Calls fn on every vector in [lo, hi]^n.
inline void for_each_box(std::size_t n, long lo, long hi, const std::function<void(const IntVec&)>& fn) {
  IntVec v(n, Int(lo));
  while (true) {
    fn(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == hi) v[--i] = lo;
    if (i == 0) return;
    ++v[i - 1];
  }
}

/// Lattice points of P(D) by scanning a bounding box.
inline std::vector<IntVec> brute_force_points(const TDivisor& d, long box) {
  std::vector<IntVec> out;
  for_each_box(3, -box, box, [&](const IntVec& m) {
    for (std::size_t r = 0; r < d.fan().num_rays(); ++r)
      if (dot(m, d.fan().ray(r)) < -d.coeff(r)) return;
    out.push_back(m);
  });
  return out;
}

/// Lattice points in the relative interior of the ray's face of P(D). An
/// inequality tight on every lattice point of the face is tight on the face
/// (vertices are lattice points for nef D on a smooth fan).
inline long brute_force_face_interior(const TDivisor& d, std::size_t ray, long box) {
  const Fan& fan = d.fan();
  std::vector<IntVec> face;
  for_each_box(3, -box, box, [&](const IntVec& m) {
    if (dot(m, fan.ray(ray)) != -d.coeff(ray)) return;
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
      if (dot(m, fan.ray(r)) < -d.coeff(r)) return;
    face.push_back(m);
  });
  std::vector<bool> implicit(fan.num_rays(), true);
  for (const auto& m : face)
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
      if (dot(m, fan.ray(r)) != -d.coeff(r)) implicit[r] = false;
  long n = 0;
  for (const auto& m : face) {
    bool interior = true;
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
      if (!implicit[r] && dot(m, fan.ray(r)) == -d.coeff(r)) interior = false;
    if (interior) ++n;
  }
  return n;
}

/// D_i.D_j.D_k on a smooth complete fan from the cone rule and linear
/// equivalence, independent of polytope volumes.
inline Int oracle_ray_triple(const Fan& fan, std::size_t i, std::size_t j, std::size_t k) {
  std::array<std::size_t, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] != t[1] && t[1] != t[2]) return fan.is_face({t[0], t[1], t[2]}) ? Int(1) : Int(0);
  // Put the repeated index in t[2] and the other one in t[0].
  const std::size_t rep = t[1];
  const std::size_t other = (t[0] == rep) ? t[2] : t[0];
  if (other != rep && !fan.is_face({other, rep})) return 0;
  // m with <m, u_rep> = -1 and <m, u_other> = 0 (u_rep, u_other extend to a basis).
  std::optional<std::size_t> cone;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const auto& mc = fan.max_cones()[c];
    const bool has_rep = std::find(mc.begin(), mc.end(), rep) != mc.end();
    const bool has_other = std::find(mc.begin(), mc.end(), other) != mc.end();
    if (has_rep && has_other) {
      cone = c;
      break;
    }
  }
  const auto& mc = fan.max_cones()[*cone];
  IntMat a(3, 3);
  IntVec rhs(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = fan.ray(mc[r])[c];
    rhs[r] = (mc[r] == rep) ? -1 : 0;
  }
  const auto m = solve_integer(a, rhs);
  // D_rep ~ sum_{rho != rep} <m, u_rho> D_rho
  Int total = 0;
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    if (r == rep) continue;
    const Int c = dot(*m, fan.ray(r));
    if (c == 0) continue;
    if (other == rep) total += c * oracle_ray_triple(fan, rep, rep, r);
    else total += c * oracle_ray_triple(fan, other, rep, r);
  }
  return total;
}

inline Int oracle_triple(const TDivisor& a, const TDivisor& b, const TDivisor& c) {
  Int total = 0;
  const Fan& fan = a.fan();
  const std::size_t n = fan.num_rays();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeff(j) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (c.coeff(k) == 0) continue;
        total += a.coeff(i) * b.coeff(j) * c.coeff(k) * oracle_ray_triple(fan, i, j, k);
      }
    }
  }
  return total;
}

/// Nef test via local linear functions on maximal cones (independent of primitive collections).
inline bool oracle_nef(const TDivisor& d, bool strict = false) {
  const Fan& fan = d.fan();
  for (const auto& mc : fan.max_cones()) {
    IntMat a(3, 3);
    IntVec rhs(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = fan.ray(mc[r])[c];
      rhs[r] = -d.coeff(mc[r]);
    }
    const auto m = solve_integer(a, rhs);
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      if (std::find(mc.begin(), mc.end(), r) != mc.end()) continue;
      const Int v = dot(*m, fan.ray(r)) + d.coeff(r);
      if (v < 0 || (strict && v == 0)) return false;
    }
  }
  return true;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline FamilySpec random_spec(long max_param = 3) {
  const auto& cases = all_cases();
  while (true) {
    const CaseId id = cases[uniform(0, static_cast<long>(cases.size()) - 1)];
    std::vector<long> vals;
    for (const auto& n : parameter_names(id)) {
      if (id == CaseId::C302 && n == "b") vals.push_back(uniform(-max_param, -1));
      else vals.push_back(uniform(0, max_param));
    }
    FamilySpec s = make_spec(id, vals);
    try {
      s.validate();
      return s;
    } catch (const ParameterError&) {
    }
  }
}

}  // namespace torhyp::testing
