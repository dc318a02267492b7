#include "torhyp/divisor.hpp"

#include "torhyp/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace torhyp {

TDivisor::TDivisor(std::shared_ptr<const Fan> fan, IntVec coeffs) : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  if (!fan_) throw ParameterError("divisor without a fan");
  if (coeffs_.size() != fan_->num_rays())
    throw ParameterError("divisor has " + std::to_string(coeffs_.size()) + " coefficients, fan has " +
                         std::to_string(fan_->num_rays()) + " rays");
}

TDivisor TDivisor::zero(std::shared_ptr<const Fan> fan) {
  const std::size_t n = fan->num_rays();
  return TDivisor(std::move(fan), IntVec(n));
}

TDivisor TDivisor::ray(std::shared_ptr<const Fan> fan, std::size_t index) {
  IntVec c(fan->num_rays());
  c.at(index) = 1;
  return TDivisor(std::move(fan), std::move(c));
}

std::string TDivisor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (abs(c) != 1) out += Int(abs(c)).get_str();
    out += fan_->label(i);
  }
  return out.empty() ? "0" : out;
}

TDivisor operator+(const TDivisor& a, const TDivisor& b) { return TDivisor(a.fan_, add(a.coeffs_, b.coeffs_)); }
TDivisor operator-(const TDivisor& a, const TDivisor& b) { return TDivisor(a.fan_, sub(a.coeffs_, b.coeffs_)); }
TDivisor operator*(const Int& k, const TDivisor& d) { return TDivisor(d.fan_, scale(k, d.coeffs_)); }

TDivisor parse_divisor(const std::shared_ptr<const Fan>& fan, const std::string& text) {
  IntVec coeffs(fan->num_rays());
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "0") return TDivisor(fan, coeffs);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Int k = start == pos ? Int(1) : Int(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') ++pos;
    std::size_t lab = pos;
    int depth = 0;
    while (pos < s.size()) {
      if (s[pos] == '{') ++depth;
      if (s[pos] == '}') --depth;
      if (depth == 0 && (s[pos] == '+' || s[pos] == '-')) break;
      ++pos;
    }
    if (lab == pos) throw ParameterError("malformed divisor '" + text + "'");
    coeffs[fan->ray_index(s.substr(lab, pos - lab))] += sign * k;
  }
  return TDivisor(fan, coeffs);
}

Rational support_function(const TDivisor& d, const IntVec& u) {
  if (u.size() != 3) throw ParameterError("support_function: u must be a 3-vector");
  if (is_zero(u)) return Rational(0);
  const Fan& fan = d.fan();
  const auto c = fan.containing_cone(u);
  if (!c) throw InconsistencyError("support_function: no cone contains the vector (fan not complete)");
  const RatVec x = fan.cone_coordinates(*c, u);
  Rational v = 0;
  for (std::size_t k = 0; k < 3; ++k) v -= x[k] * d.coeff(fan.max_cones()[*c][k]);
  return v;
}

IntVec collection_functional(const Fan& fan, const PrimitiveCollection& pc) {
  IntVec l(fan.num_rays());
  for (std::size_t i : pc.rays) l[i] += 1;
  for (std::size_t k = 0; k < pc.relation_cone.size(); ++k) l[pc.relation_cone[k]] -= pc.relation_coeffs[k];
  return l;
}

bool is_nef(const TDivisor& d) {
  for (const auto& pc : d.fan().collections())
    if (dot(collection_functional(d.fan(), pc), d.coeffs()) < 0) return false;
  return true;
}

bool is_ample(const TDivisor& d) {
  for (const auto& pc : d.fan().collections())
    if (dot(collection_functional(d.fan(), pc), d.coeffs()) <= 0) return false;
  return true;
}

IntVec PicBasis::lift(const IntVec& coords) const {
  if (coords.size() != basis_rays.size()) throw ParameterError("class has wrong Picard rank");
  IntVec d(reduction.cols());
  for (std::size_t i = 0; i < coords.size(); ++i) d[basis_rays[i]] = coords[i];
  return d;
}

PicBasis picard_basis_from(const Fan& fan, const std::vector<std::size_t>& basis_rays) {
  const std::size_t n = fan.num_rays();
  if (basis_rays.size() + 3 != n) throw ParameterError("Picard basis must omit exactly three rays");
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(basis_rays.begin(), basis_rays.end(), i) == basis_rays.end()) comp.push_back(i);
  IntMat an(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) an(r, c) = fan.ray(comp[r])[c];
  const Int det = determinant(an);
  if (abs(det) != 1) throw ParameterError("complement of the Picard basis is not unimodular");
  // a -> a_S - A_S A_N^{-1} a_N, with A_N^{-1} = adj / det.
  IntMat adj(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj(r, c) = (an(r1, c1) * an(r2, c2) - an(r1, c2) * an(r2, c1)) * det;
    }
  PicBasis pb;
  pb.basis_rays = basis_rays;
  pb.reduction = IntMat(basis_rays.size(), n);
  for (std::size_t i = 0; i < basis_rays.size(); ++i) {
    pb.reduction(i, basis_rays[i]) = 1;
    const IntVec& us = fan.ray(basis_rays[i]);
    for (std::size_t k = 0; k < 3; ++k) {
      Int v = 0;
      for (std::size_t j = 0; j < 3; ++j) v += us[j] * adj(j, k);
      pb.reduction(i, comp[k]) -= v;
    }
  }
  // Principal divisors must vanish.
  const IntMat a = fan.ray_matrix();
  if (!(pb.reduction * a).is_zero()) throw InconsistencyError("Picard reduction does not kill principal divisors");
  return pb;
}

std::vector<std::string> picard_basis_labels(CaseId id) {
  switch (id) {
    case CaseId::C201:
      return {"D_2", "D_3"};
    case CaseId::C202:
      return {"D_3", "D_4"};
    case CaseId::C301:
    case CaseId::C302:
      return {"D_1", "D_4", "D_6"};
    default:
      return {"D_{v_1}", "D_{u_1}", "D_{z_1}"};
  }
}

PicBasis picard_basis(const Fan& fan) {
  if (fan.spec()) {
    std::vector<std::size_t> rays;
    for (const auto& l : picard_basis_labels(fan.spec()->id)) rays.push_back(fan.ray_index(l));
    return picard_basis_from(fan, rays);
  }
  if (fan.max_cones().empty()) throw ParameterError("fan has no cones");
  std::vector<std::size_t> rest;
  const Cone& c = fan.max_cones().front();
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    if (std::find(c.begin(), c.end(), i) == c.end()) rest.push_back(i);
  return picard_basis_from(fan, rest);
}

IntVec class_of(const PicBasis& basis, const TDivisor& d) { return basis.coords(d.coeffs()); }

TDivisor canonical_divisor(const std::shared_ptr<const Fan>& fan) {
  return TDivisor(fan, IntVec(fan->num_rays(), Int(-1)));
}

namespace {

NamedClass named(const Fan& fan, const std::string& name, std::initializer_list<std::pair<const char*, Int>> terms) {
  NamedClass nc{name, IntVec(fan.num_rays())};
  for (const auto& [label, k] : terms) nc.coeffs[fan.ray_index(label)] += k;
  return nc;
}

NamedClass single(const Fan& fan, const char* label) { return named(fan, label, {{label, Int(1)}}); }

const FamilySpec& catalog_spec(const Fan& fan) {
  if (!fan.spec()) throw ParameterError("operation needs a catalog fan");
  return *fan.spec();
}

IntVec primitive(IntVec v) {
  const Int g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

std::vector<NamedClass> nef_cone_generators(const Fan& fan) {
  if (!fan.spec()) {
    const PicBasis pb = picard_basis(fan);
    std::vector<NamedClass> out;
    for (const auto& r : nef_cone_extreme_rays(fan, pb))
      out.push_back({"N_" + std::to_string(out.size() + 1), pb.lift(r)});
    return out;
  }
  const FamilySpec& s = *fan.spec();
  switch (s.id) {
    case CaseId::C201:
      return {single(fan, "D_2"), single(fan, "D_3")};
    case CaseId::C202:
      return {single(fan, "D_3"), single(fan, "D_4")};
    case CaseId::C301:
      return {single(fan, "D_1"), single(fan, "D_4"), single(fan, "D_6")};
    case CaseId::C302:
      return {single(fan, "D_1"), single(fan, "D_4"), named(fan, "D_6-bD_4", {{"D_6", Int(1)}, {"D_4", -s.param("b")}})};
    default:
      return {single(fan, "D_{v_1}"), single(fan, "D_{z_1}"),
              named(fan, "D_{u_1}+D_{z_1}", {{"D_{u_1}", Int(1)}, {"D_{z_1}", Int(1)}})};
  }
}

std::vector<NamedClass> eff_cone_generators(const Fan& fan) {
  const FamilySpec& s = catalog_spec(fan);
  switch (s.id) {
    case CaseId::C201:
      return {single(fan, "D_1"), single(fan, "D_3")};
    case CaseId::C202:
      return {single(fan, "D_2"), single(fan, "D_4")};
    case CaseId::C301:
      return {single(fan, "D_1"), single(fan, "D_3"), single(fan, "D_5")};
    case CaseId::C302:
      if (s.param("a") + s.param("b") * s.param("r") <= 0)
        return {single(fan, "D_1"), single(fan, "D_3"), single(fan, "D_6")};
      return {single(fan, "D_1"), single(fan, "D_3"), single(fan, "D_5"), single(fan, "D_6")};
    case CaseId::C313:
      if (s.param("b1") >= s.param("c2"))
        return {single(fan, "D_{u_1}"), single(fan, "D_{y_1}"), single(fan, "D_{t_1}")};
      return {single(fan, "D_{u_1}"), single(fan, "D_{y_1}"), single(fan, "D_{z_2}")};
    case CaseId::C314:
      if (s.param("b1") >= s.param("b2"))
        return {single(fan, "D_{u_1}"), single(fan, "D_{y_1}"), single(fan, "D_{t_1}")};
      return {single(fan, "D_{u_1}"), single(fan, "D_{y_1}"), single(fan, "D_{t_2}")};
    default:
      return {single(fan, "D_{u_1}"), single(fan, "D_{y_1}"), single(fan, "D_{t_1}")};
  }
}

PrintedCanonical printed_canonical(const FamilySpec& s) {
  auto P = [&](const char* n) { return s.param(n); };
  switch (s.id) {
    case CaseId::C201:
      return {"-2D_2+(l-3)D_3", {Int(-2), P("l") - 3}, ""};
    case CaseId::C202:
      return {"-3D_3+(l_1+l_2-2)D_4", {Int(-3), P("l1") + P("l2") - 2}, ""};
    case CaseId::C301:
    case CaseId::C302:
      return {"(-2+a+r)D_1+(-2+b)D_4-2D_6", {P("a") + P("r") - 2, P("b") - 2, Int(-2)}, ""};
    case CaseId::C311:
      return {"(b_1-2)D_{v_1}-D_{u_1}-2D_{z_1}", {P("b1") - 2, Int(-1), Int(-2)}, ""};
    case CaseId::C312:
      return {"(b-2)D_{v_1}-2D_{z_1}", {P("b1") - 2, Int(0), Int(-2)}, "symbol b read as b_1"};
    case CaseId::C313:
      return {"(b_1+c_2-1)D_{v_1}--D_{u_1}-3D_{z_1}", {P("b1") + P("c2") - 1, Int(-1), Int(-3)},
              "doubled minus sign read as a single one"};
    case CaseId::C314:
      return {"(b_1+b_2)D_{v_1}-2D_{u_1}-3D_{z_1}", {P("b1") + P("b2"), Int(-2), Int(-3)}, ""};
    case CaseId::C315:
      return {"(b_1-1)D_{v_1}-2D_{u_1}-2D_{z_1}", {P("b1") - 1, Int(-2), Int(-2)}, ""};
  }
  throw ParameterError("unhandled case");
}

TDivisor divisor_from_nef_coords(const std::shared_ptr<const Fan>& fan, const IntVec& coords) {
  const auto gens = nef_cone_generators(*fan);
  if (coords.size() != gens.size())
    throw ParameterError("expected " + std::to_string(gens.size()) + " coordinates, got " +
                         std::to_string(coords.size()));
  IntVec c(fan->num_rays());
  for (std::size_t i = 0; i < gens.size(); ++i) c = add(c, scale(coords[i], gens[i].coeffs));
  return TDivisor(fan, c);
}

RatVec nef_coordinates(const Fan& fan, const TDivisor& d) {
  const PicBasis pb = picard_basis(fan);
  const auto gens = nef_cone_generators(fan);
  std::vector<IntVec> cols;
  for (const auto& g : gens) cols.push_back(pb.coords(g.coeffs));
  const ExactSolution sol = solve_exact(IntMat::from_columns(cols, pb.rank()), pb.coords(d.coeffs()));
  if (sol.status != ExactSolution::Status::Unique)
    throw InconsistencyError("class is not uniquely expressible in the nef generators");
  return sol.x;
}

bool is_nef_class(const Fan& fan, const PicBasis& basis, const IntVec& coords) {
  const IntVec a = basis.lift(coords);
  for (const auto& pc : fan.collections())
    if (dot(collection_functional(fan, pc), a) < 0) return false;
  return true;
}

bool in_cone(const IntVec& v, const std::vector<IntVec>& gens) {
  if (is_zero(v)) return true;
  const std::size_t dim = v.size();
  const std::size_t n = gens.size();
  // Caratheodory: v lies in the cone over some linearly independent subset.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > dim) continue;
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) cols.push_back(gens[i]);
    const ExactSolution sol = solve_exact(IntMat::from_columns(cols, dim), v);
    if (sol.status != ExactSolution::Status::Unique) continue;
    if (std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& q) { return q >= 0; })) return true;
  }
  return false;
}

std::vector<IntVec> nef_cone_extreme_rays(const Fan& fan, const PicBasis& basis) {
  std::vector<IntVec> ls;
  for (const auto& pc : fan.collections()) {
    const IntVec full = collection_functional(fan, pc);
    IntVec l;
    for (std::size_t i : basis.basis_rays) l.push_back(full[i]);
    // Functionals vanish on principal divisors, so evaluating on lifts is exact.
    if (!is_zero(l)) ls.push_back(l);
  }
  std::vector<IntVec> cands;
  if (basis.rank() == 2) {
    for (const auto& l : ls) cands.push_back({-l[1], l[0]});
  } else if (basis.rank() == 3) {
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) cands.push_back(cross(ls[i], ls[j]));
  } else {
    throw ParameterError("nef cone extreme rays: only Picard rank 2 and 3");
  }
  std::set<IntVec> out;
  for (const auto& c0 : cands) {
    if (is_zero(c0)) continue;
    for (const IntVec& c : {c0, scale(Int(-1), c0)}) {
      if (std::all_of(ls.begin(), ls.end(), [&](const IntVec& l) { return dot(l, c) >= 0; }))
        out.insert(primitive(c));
    }
  }
  return {out.begin(), out.end()};
}

bool is_big(const TDivisor& d) {
  if (!is_nef(d)) throw ParameterError("is_big: divisor " + d.to_string() + " is not nef");
  return dimension(polytope_of(d)) == 3;
}

}  // namespace torhyp
