#include "torhyp/fan.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

namespace torhyp {

namespace {

struct CaseInfo {
  CaseId id;
  const char* name;
  int rank;
  std::vector<std::string> params;
};

const std::vector<CaseInfo>& case_table() {
  static const std::vector<CaseInfo> table = {
      {CaseId::C201, "2.0.1", 2, {"l"}},
      {CaseId::C202, "2.0.2", 2, {"l1", "l2"}},
      {CaseId::C301, "3.0.1", 3, {"r", "a", "b"}},
      {CaseId::C302, "3.0.2", 3, {"r", "a", "b"}},
      {CaseId::C311, "3.1.1", 3, {"b1"}},
      {CaseId::C312, "3.1.2", 3, {"b1"}},
      {CaseId::C313, "3.1.3", 3, {"b1", "c2"}},
      {CaseId::C314, "3.1.4", 3, {"b1", "b2"}},
      {CaseId::C315, "3.1.5", 3, {"b1"}},
  };
  return table;
}

const CaseInfo& info(CaseId id) {
  for (const auto& c : case_table())
    if (c.id == id) return c;
  throw ParameterError("unknown case id");
}

IntVec v3(long x, long y, long z) { return IntVec{Int(x), Int(y), Int(z)}; }
IntVec v3(const Int& x, const Int& y, const Int& z) { return IntVec{x, y, z}; }

Int det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::string normalize_label(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (ch != '{' && ch != '}' && ch != '_' && ch != ' ') out.push_back(static_cast<char>(std::tolower(ch)));
  if (out.size() > 1 && out[0] == 'd') out.erase(0, 1);
  if (out.size() > 3 && out.rfind("rho", 0) == 0) out.erase(0, 3);
  return out;
}

}  // namespace

std::string to_string(CaseId id) { return info(id).name; }

CaseId parse_case_id(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != '.') compact.push_back(ch);
  for (const auto& c : case_table()) {
    std::string name = c.name;
    name.erase(std::remove(name.begin(), name.end(), '.'), name.end());
    if (compact == name) return c.id;
  }
  throw ParameterError("unknown case '" + std::string(text) + "'");
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> ids = [] {
    std::vector<CaseId> out;
    for (const auto& c : case_table()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

int picard_rank(CaseId id) { return info(id).rank; }

const std::vector<std::string>& parameter_names(CaseId id) { return info(id).params; }

FamilySpec::FamilySpec(CaseId case_id, std::map<std::string, Int> values)
    : id(case_id), params(std::move(values)) {}

const Int& FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw ParameterError("case " + to_string(id) + ": missing parameter " + name);
  return it->second;
}

long FamilySpec::p(const std::string& name) const {
  const Int& v = param(name);
  if (!v.fits_slong_p()) throw ParameterError("parameter " + name + " out of range");
  return v.get_si();
}

void FamilySpec::validate() const {
  const auto& names = parameter_names(id);
  for (const auto& n : names) (void)param(n);
  for (const auto& [k, v] : params)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw ParameterError("case " + to_string(id) + ": unexpected parameter " + k);
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw ParameterError("case " + to_string(id) + ": violated " + what);
  };
  switch (id) {
    case CaseId::C201:
      need(param("l") >= 0, "l >= 0");
      break;
    case CaseId::C202:
      need(param("l1") >= 0, "l1 >= 0");
      need(param("l2") >= param("l1"), "l2 >= l1");
      break;
    case CaseId::C301:
      need(param("r") >= 0, "r >= 0");
      need(param("a") >= 0, "a >= 0");
      need(param("b") >= 0, "b >= 0");
      break;
    case CaseId::C302:
      need(param("r") >= 0, "r >= 0");
      need(param("a") >= 0, "a >= 0");
      need(param("b") < 0, "b < 0");
      break;
    default:
      for (const auto& n : names) need(param(n) >= 0, n + " >= 0");
      break;
  }
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << to_string(id);
  for (const auto& n : parameter_names(id)) {
    auto it = params.find(n);
    if (it != params.end()) os << ' ' << n << '=' << it->second.get_str();
  }
  return os.str();
}

Fan::Fan(std::vector<IntVec> rays, std::vector<Cone> max_cones, std::vector<std::string> labels)
    : rays_(std::move(rays)), max_cones_(std::move(max_cones)), labels_(std::move(labels)) {
  for (const auto& r : rays_)
    if (r.size() != 3) throw ParameterError("fan rays must be 3-vectors");
  for (const auto& c : max_cones_)
    for (std::size_t i : c)
      if (i >= rays_.size()) throw ParameterError("cone references unknown ray");
  if (labels_.empty())
    for (std::size_t i = 0; i < rays_.size(); ++i) labels_.push_back("D_" + std::to_string(i + 1));
  if (labels_.size() != rays_.size()) throw ParameterError("label count differs from ray count");
}

std::size_t Fan::ray_index(std::string_view label) const {
  const std::string key = normalize_label(label);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (normalize_label(labels_[i]) == key) return i;
  if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(c) != 0; })) {
    const std::size_t n = std::stoul(key);
    if (n >= 1 && n <= rays_.size()) return n - 1;
  }
  throw ParameterError("unknown ray label '" + std::string(label) + "'");
}

IntMat Fan::ray_matrix() const { return IntMat::from_rows(rays_, 3); }

RatVec Fan::cone_coordinates(std::size_t c, const IntVec& u) const {
  const Cone& cone = max_cones_.at(c);
  const IntVec& a = rays_[cone[0]];
  const IntVec& b = rays_[cone[1]];
  const IntVec& d = rays_[cone[2]];
  const Int det = det3(a, b, d);
  if (det == 0) throw InconsistencyError("degenerate maximal cone");
  // Cramer's rule for x a + y b + z d = u.
  RatVec x{Rational(det3(u, b, d), det), Rational(det3(a, u, d), det), Rational(det3(a, b, u), det)};
  for (auto& q : x) q.canonicalize();
  return x;
}

std::optional<std::size_t> Fan::containing_cone(const IntVec& u) const {
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    const RatVec x = cone_coordinates(c, u);
    if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= 0; })) return c;
  }
  return std::nullopt;
}

bool Fan::is_face(const std::vector<std::size_t>& subset) const {
  for (const auto& c : max_cones_) {
    bool all = true;
    for (std::size_t i : subset)
      if (std::find(c.begin(), c.end(), i) == c.end()) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return subset.empty();
}

FamilyData family_data(const FamilySpec& spec) {
  spec.validate();
  FamilyData d;
  using Names = std::vector<std::string>;
  switch (spec.id) {
    case CaseId::C201: {
      const Int& l = spec.param("l");
      d.rays = {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(l, Int(-1), Int(-1))};
      d.labels = Names{"D_1", "D_2", "D_3", "D_4", "D_5"};
      d.collections = {{0, 1}, {2, 3, 4}};
      return d;
    }
    case CaseId::C202: {
      d.rays = {v3(1, 0, 0), v3(0, 1, 0), v3(-1, -1, 0), v3(0, 0, 1),
                v3(spec.param("l1"), spec.param("l2"), Int(-1))};
      d.labels = Names{"D_1", "D_2", "D_3", "D_4", "D_5"};
      d.collections = {{0, 1, 2}, {3, 4}};
      return d;
    }
    case CaseId::C301:
    case CaseId::C302: {
      const Int& r = spec.param("r");
      const Int& a = spec.param("a");
      const Int& b = spec.param("b");
      d.rays = {v3(1, 0, 0), v3(Int(-1), r, a), v3(0, 1, 0), v3(Int(0), Int(-1), b), v3(0, 0, 1), v3(0, 0, -1)};
      d.labels = Names{"D_1", "D_2", "D_3", "D_4", "D_5", "D_6"};
      d.collections = {{0, 1}, {2, 3}, {4, 5}};
      return d;
    }
    default:
      break;
  }
  // Non-splitting rank 3: rows of the ray matrix with their partition class
  // Y_0 = v, Y_1 = y, Y_2 = z, Y_3 = t, Y_4 = u.
  struct Row {
    std::string name;
    IntVec u;
  };
  std::vector<Row> rows;
  const Int b1 = spec.param("b1");
  switch (spec.id) {
    case CaseId::C311:
      rows = {{"v_1", v3(1, 0, 0)},         {"v_2", v3(0, 1, 0)}, {"u_1", v3(Int(-1), Int(-1), b1)},
              {"y_1", v3(Int(-1), Int(-1), b1 + 1)}, {"t_1", v3(0, 0, 1)}, {"z_1", v3(0, 0, -1)}};
      break;
    case CaseId::C312:
      rows = {{"v_1", v3(1, 0, 0)},  {"u_1", v3(Int(-1), Int(0), b1)}, {"y_1", v3(Int(-1), Int(-1), b1 + 1)},
              {"y_2", v3(0, 1, 0)}, {"t_1", v3(0, 0, 1)},            {"z_1", v3(0, 0, -1)}};
      break;
    case CaseId::C313: {
      const Int& c2 = spec.param("c2");
      rows = {{"v_1", v3(1, 0, 0)},  {"u_1", v3(Int(-1), b1, c2)},   {"y_1", v3(Int(-1), b1 + 1, c2)},
              {"t_1", v3(0, 1, 0)}, {"z_1", v3(0, -1, -1)},          {"z_2", v3(0, 0, 1)}};
      break;
    }
    case CaseId::C314: {
      const Int& b2 = spec.param("b2");
      rows = {{"v_1", v3(1, 0, 0)},  {"u_1", v3(Int(-1), b1, b2)}, {"y_1", v3(Int(-1), b1 + 1, b2 + 1)},
              {"t_1", v3(0, 1, 0)}, {"t_2", v3(0, 0, 1)},         {"z_1", v3(0, -1, -1)}};
      break;
    }
    case CaseId::C315:
      rows = {{"v_1", v3(1, 0, 0)},  {"u_1", v3(Int(-1), Int(-1), b1)}, {"u_2", v3(0, 1, 0)},
              {"y_1", v3(Int(-1), Int(0), b1 + 1)}, {"t_1", v3(0, 0, 1)}, {"z_1", v3(0, 0, -1)}};
      break;
    default:
      throw ParameterError("unhandled case");
  }
  const std::string order = "vyztu";
  std::array<std::vector<std::size_t>, 5> parts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    d.rays.push_back(rows[i].u);
    d.labels.push_back("D_{" + rows[i].name + "}");
    parts[order.find(rows[i].name[0])].push_back(i);
  }
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> c = parts[k];
    c.insert(c.end(), parts[(k + 1) % 5].begin(), parts[(k + 1) % 5].end());
    std::sort(c.begin(), c.end());
    d.collections.push_back(std::move(c));
  }
  return d;
}

std::vector<Cone> cones_from_collections(const std::vector<IntVec>& rays,
                                         const std::vector<std::vector<std::size_t>>& collections) {
  const std::size_t n = rays.size();
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Cone c{i, j, k};
        bool contains = false;
        for (const auto& coll : collections) {
          if (std::all_of(coll.begin(), coll.end(),
                          [&](std::size_t x) { return x == i || x == j || x == k; })) {
            contains = true;
            break;
          }
        }
        if (!contains) cones.push_back(c);
      }
  const ValidationReport report = verify_smooth_complete(Fan(rays, cones, {}));
  if (!report.passed()) {
    std::string msg = "cones from primitive collections do not form a smooth complete fan:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw InconsistencyError(msg);
  }
  return cones;
}

ValidationReport verify_smooth_complete(const Fan& fan) {
  ValidationReport rep;
  const auto& rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (gcd_of(rays[i]) != 1) {
      rep.non_primitive_rays.push_back(i);
      rep.failures.push_back("ray " + fan.label(i) + " is not primitive");
    }
  std::map<std::array<std::size_t, 2>, std::vector<std::size_t>> faces;  // face -> opposite rays
  for (const auto& c : fan.max_cones()) {
    Int d = abs(det3(rays[c[0]], rays[c[1]], rays[c[2]]));
    if (d != 1)
      rep.failures.push_back("cone {" + fan.label(c[0]) + "," + fan.label(c[1]) + "," + fan.label(c[2]) +
                             "} has |det| " + d.get_str());
    rep.cone_dets.push_back({c, d});
    for (int drop = 0; drop < 3; ++drop) {
      std::array<std::size_t, 2> f{};
      std::size_t k = 0;
      for (int t = 0; t < 3; ++t)
        if (t != drop) f[k++] = c[static_cast<std::size_t>(t)];
      std::sort(f.begin(), f.end());
      faces[f].push_back(c[static_cast<std::size_t>(drop)]);
    }
  }
  for (const auto& [f, opp] : faces) {
    rep.face_counts.push_back({f, static_cast<int>(opp.size())});
    const std::string name = "face {" + fan.label(f[0]) + "," + fan.label(f[1]) + "}";
    if (opp.size() != 2) {
      rep.failures.push_back(name + " lies in " + std::to_string(opp.size()) + " maximal cones");
      continue;
    }
    const int s0 = sgn(det3(rays[f[0]], rays[f[1]], rays[opp[0]]));
    const int s1 = sgn(det3(rays[f[0]], rays[f[1]], rays[opp[1]]));
    if (s0 * s1 >= 0) rep.failures.push_back(name + " has both cones on the same side");
  }
  // A point off every plane spanned by two rays must be covered exactly once.
  IntVec p;
  for (long k = 1; k < 1000 && p.empty(); ++k) {
    IntVec cand{Int(7 * k + 1), Int(1009 * k + 3), Int(-(1000003 * k) + 17)};
    bool generic = true;
    for (std::size_t i = 0; i < rays.size() && generic; ++i) {
      if (is_zero(rays[i])) continue;
      for (std::size_t j = i + 1; j < rays.size(); ++j)
        if (!is_zero(cross(rays[i], rays[j])) && det3(rays[i], rays[j], cand) == 0) {
          generic = false;
          break;
        }
    }
    if (generic) p = cand;
  }
  if (p.empty()) {
    rep.failures.push_back("no generic test point found");
    return rep;
  }
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const Cone& cone = fan.max_cones()[c];
    if (det3(rays[cone[0]], rays[cone[1]], rays[cone[2]]) == 0) continue;
    const RatVec x = fan.cone_coordinates(c, p);
    if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q > 0; })) ++rep.generic_cover;
  }
  if (rep.generic_cover != 1)
    rep.failures.push_back("generic point covered by " + std::to_string(rep.generic_cover) + " maximal cones");
  return rep;
}

PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<std::size_t>& collection) {
  PrimitiveCollection pc;
  pc.rays = collection;
  std::sort(pc.rays.begin(), pc.rays.end());
  IntVec s(3);
  for (std::size_t i : pc.rays) s = add(s, fan.ray(i));
  if (is_zero(s)) return pc;
  const auto c = fan.containing_cone(s);
  if (!c) throw InconsistencyError("primitive relation: ray sum lies in no cone");
  const RatVec x = fan.cone_coordinates(*c, s);
  const Cone& cone = fan.max_cones()[*c];
  std::vector<std::pair<std::size_t, Int>> terms;
  for (std::size_t k = 0; k < 3; ++k) {
    if (x[k] < 0) throw InconsistencyError("primitive relation: negative coefficient");
    if (x[k] == 0) continue;
    if (x[k].get_den() != 1) throw InconsistencyError("primitive relation: non-integral coefficient");
    terms.emplace_back(cone[k], x[k].get_num());
  }
  std::sort(terms.begin(), terms.end());
  IntVec check(3);
  for (const auto& [i, coef] : terms) {
    pc.relation_cone.push_back(i);
    pc.relation_coeffs.push_back(coef);
    check = add(check, scale(coef, fan.ray(i)));
  }
  if (check != s) throw InconsistencyError("primitive relation does not re-substitute");
  return pc;
}

std::vector<std::vector<std::size_t>> minimal_non_faces(const Fan& fan) {
  const std::size_t n = fan.num_rays();
  if (n > 20) throw ParameterError("minimal_non_faces: too many rays");
  std::vector<std::uint32_t> cone_masks;
  for (const auto& c : fan.max_cones())
    cone_masks.push_back((1u << c[0]) | (1u << c[1]) | (1u << c[2]));
  auto face = [&](std::uint32_t m) {
    return std::any_of(cone_masks.begin(), cone_masks.end(), [m](std::uint32_t c) { return (m & c) == m; });
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (std::popcount(m) > 4 || face(m)) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!face(m & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_splitting(const Fan& fan) {
  const auto& cs = fan.collections();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      for (std::size_t x : cs[i].rays)
        if (std::find(cs[j].rays.begin(), cs[j].rays.end(), x) != cs[j].rays.end()) return false;
  return true;
}

Fan build_family_fan(const FamilySpec& spec) {
  FamilyData data = family_data(spec);
  std::vector<Cone> cones = cones_from_collections(data.rays, data.collections);
  Fan fan(std::move(data.rays), std::move(cones), std::move(data.labels));
  auto stored = data.collections;
  std::sort(stored.begin(), stored.end());
  if (minimal_non_faces(fan) != stored)
    throw InconsistencyError(spec.describe() + ": minimal non-faces differ from the stored primitive collections");
  std::vector<PrimitiveCollection> pcs;
  for (const auto& c : data.collections) pcs.push_back(primitive_relation(fan, c));
  fan.set_collections(std::move(pcs));
  fan.set_spec(spec);
  return fan;
}

Fan make_generic_fan(std::vector<IntVec> rays, std::vector<Cone> max_cones, std::vector<std::string> labels) {
  Fan fan(std::move(rays), std::move(max_cones), std::move(labels));
  const ValidationReport rep = verify_smooth_complete(fan);
  if (!rep.passed()) throw ParameterError("fan is not smooth and complete: " + rep.failures.front());
  std::vector<PrimitiveCollection> pcs;
  for (const auto& c : minimal_non_faces(fan)) pcs.push_back(primitive_relation(fan, c));
  fan.set_collections(std::move(pcs));
  return fan;
}

}  // namespace torhyp
