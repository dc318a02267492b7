#include "torhyp/io.hpp"

#include <sstream>

namespace torhyp {

Json int_json(const Int& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json int_vec_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

Json rational_json(const Rational& q) { return format(q); }

Json rat_vec_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json int_mat_json(const IntMat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_vec_json(m.row(i)));
  return out;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParameterError("not an integer: " + j.dump());
    return z;
  }
  throw ParameterError("expected an integer, got " + j.dump());
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("expected an integer array, got " + j.dump());
  IntVec out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

Json with_schema(Json j) {
  j["schema"] = kSchema;
  return j;
}

Json to_json(const FamilySpec& spec) {
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = int_json(v);
  return {{"case", to_string(spec.id)}, {"params", params}};
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("case")) throw ParameterError("family spec needs a \"case\" key");
  FamilySpec s;
  s.id = parse_case_id(j.at("case").get<std::string>());
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw ParameterError("\"params\" must be an object");
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = int_from_json(v);
  }
  s.validate();
  return s;
}

Json to_json(const Fan& fan) {
  Json j;
  if (fan.spec()) {
    j = to_json(*fan.spec());
  }
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(int_vec_json(r));
  j["rays"] = rays;
  j["labels"] = fan.labels();
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back({c[0], c[1], c[2]});
  j["max_cones"] = cones;
  Json cols = Json::array();
  for (const auto& pc : fan.collections()) {
    Json relation = Json::object();
    for (std::size_t i = 0; i < pc.relation_cone.size(); ++i)
      relation[fan.label(pc.relation_cone[i])] = int_json(pc.relation_coeffs[i]);
    Json names = Json::array();
    for (auto r : pc.rays) names.push_back(fan.label(r));
    cols.push_back({{"rays", pc.rays}, {"labels", names}, {"relation", relation}});
  }
  j["collections"] = cols;
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw ParameterError("fan JSON must be an object");
  if (j.contains("case")) return build_family_fan(family_spec_from_json(j));
  if (!j.contains("rays") || !j.contains("max_cones")) throw ParameterError("fan JSON needs rays and max_cones");
  std::vector<IntVec> rays;
  for (const auto& r : j.at("rays")) {
    IntVec v = int_vec_from_json(r);
    if (v.size() != 3) throw ParameterError("rays must be 3-vectors");
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : j.at("max_cones")) {
    if (!c.is_array() || c.size() != 3) throw ParameterError("max cones must list three ray indices");
    Cone cone{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto idx = c.at(k).get<long>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size()) throw ParameterError("cone index out of range");
      cone[k] = static_cast<std::size_t>(idx);
    }
    cones.push_back(cone);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return make_generic_fan(std::move(rays), std::move(cones), std::move(labels));
}

Json to_json(const TDivisor& d) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < d.fan().num_rays(); ++i) coeffs[d.fan().label(i)] = int_json(d.coeff(i));
  return {{"coeffs", coeffs}, {"class", int_vec_json(class_of(picard_basis(d.fan()), d))}, {"text", d.to_string()}};
}

TDivisor divisor_from_json(const std::shared_ptr<const Fan>& fan, const Json& j) {
  if (j.is_string()) return parse_divisor(fan, j.get<std::string>());
  if (!j.is_object()) throw ParameterError("divisor JSON must be an object or a string");
  if (j.contains("coeffs")) {
    IntVec c(fan->num_rays());
    for (const auto& [k, v] : j.at("coeffs").items()) c[fan->ray_index(k)] = int_from_json(v);
    return TDivisor(fan, c);
  }
  if (j.contains("class")) {
    const PicBasis pb = picard_basis(*fan);
    const IntVec cls = int_vec_from_json(j.at("class"));
    if (cls.size() != pb.rank()) throw ParameterError("class has the wrong length");
    return TDivisor(fan, pb.lift(cls));
  }
  throw ParameterError("divisor JSON needs \"coeffs\" or \"class\"");
}

Json to_json(const HPolytope& p) {
  Json normals = Json::array();
  for (const auto& n : p.normals) normals.push_back(int_vec_json(n));
  Json verts = Json::array();
  const auto vs = vertices(p);
  for (const auto& v : vs) verts.push_back(rat_vec_json(v));
  Json pts = Json::array();
  for (const auto& m : lattice_points(p, vs)) pts.push_back(int_vec_json(m));
  return {{"normals", normals},
          {"offsets", int_vec_json(p.offsets)},
          {"vertices", verts},
          {"lattice_points", pts},
          {"dimension", affine_dimension(vs)}};
}

Json to_json(const Face2& f) {
  Json verts = Json::array();
  for (const auto& v : f.vertices) verts.push_back(rat_vec_json(v));
  return {{"ray", f.ray},
          {"dimension", f.dimension},
          {"vertices", verts},
          {"interior_count", int_json(interior_lattice_count(f))}};
}

Json to_json(const IdpResult& r) {
  Json j = {{"holds", r.holds}, {"points_checked", r.points_checked}};
  j["uncovered"] = r.uncovered ? int_vec_json(*r.uncovered) : Json();
  return j;
}

Json to_json(const FiberCertificate& c) {
  Json j = {{"bound", c.bound}, {"fibers_checked", c.fibers_checked}, {"connected", c.connected}};
  j["failing_fiber"] = c.failing_fiber ? int_vec_json(*c.failing_fiber) : Json();
  if (c.failing_element) j["failing_element"] = int_vec_json(*c.failing_element);
  return j;
}

Json to_json(const ConnectedSectionsReport& r) {
  Json moves = Json::array();
  for (const auto& m : r.moves) moves.push_back(int_vec_json(m));
  Json j = {{"moves", moves}, {"certificate", to_json(r.certificate)}, {"passes", r.passes}};
  j["idp"] = r.idp ? to_json(*r.idp) : Json();
  return j;
}

Json to_json(const BoundaryProfile& p) {
  Json entries = Json::array();
  for (const auto& e : p.entries) {
    Json x = {{"ray", e.ray},
              {"label", e.label},
              {"face_dimension", e.face_dimension},
              {"interior_count", int_json(e.interior_count)}};
    x["degree"] = e.degree ? int_json(*e.degree) : Json();
    entries.push_back(x);
  }
  Json j = {{"trivial", p.trivial}, {"big", p.big}, {"entries", entries}};
  j["low_genus_ray"] = p.low_genus_ray ? Json(*p.low_genus_ray) : Json();
  return j;
}

Json to_json(const PositivityCertificate& c) {
  Json pairings = Json::array();
  Json degrees = Json::array();
  for (const auto& x : c.pairings) pairings.push_back(int_json(x));
  for (const auto& x : c.degrees) degrees.push_back(int_json(x));
  Json j = {{"generators", c.generators}, {"pairings", pairings}, {"degrees", degrees}};
  j["epsilon"] = c.epsilon ? rational_json(*c.epsilon) : Json();
  return j;
}

Json to_json(const ConfigAttempt& a) {
  Json j = {{"condition", a.entry.condition},
            {"eprime", a.entry.eprime},
            {"eprime_nef", int_vec_json(a.entry.eprime_nef)},
            {"source", a.entry.source},
            {"succeeded", a.succeeded},
            {"failure", a.failure}};
  j["e_nef"] = a.e_nef ? int_vec_json(*a.e_nef) : Json();
  j["certificate"] = a.certificate ? to_json(*a.certificate) : Json();
  j["bound_class"] = a.bound_class ? int_vec_json(*a.bound_class) : Json();
  j["positivity"] = a.positivity ? to_json(*a.positivity) : Json();
  return j;
}

Json to_json(const TableLookup& t) {
  return {{"outcome", to_string(t.outcome)},
          {"ambiguous", t.ambiguous},
          {"open_by_omission", t.open_by_omission},
          {"conflict", t.conflict},
          {"prior_literature", t.prior_literature},
          {"matched", t.matched},
          {"notes", t.notes}};
}

Json to_json(const Verdict& v) {
  Json attempts = Json::array();
  for (const auto& a : v.attempts) attempts.push_back(to_json(a));
  Json evidence = {{"reason", v.reason},
                   {"boundary", to_json(v.profile)},
                   {"noether_lefschetz", v.noether_lefschetz},
                   {"attempts", attempts}};
  evidence["epsilon"] = v.epsilon ? rational_json(*v.epsilon) : Json();
  Json j = to_json(v.spec);
  j["coeffs"] = int_vec_json(v.coeffs);
  j["derived"] = {{"outcome", to_string(v.outcome)}, {"evidence", evidence}};
  j["table"] = to_string(v.table.outcome);
  j["table_detail"] = to_json(v.table);
  j["agree"] = v.agree();
  return j;
}

namespace {

std::vector<std::string> coordinate_names(CaseId id) {
  if (picard_rank(id) == 2) return {"a", "b"};
  return {"d", "e", "f"};
}

}  // namespace

std::string sweep_csv_header(CaseId id) {
  std::ostringstream os;
  os << "case";
  for (const auto& n : parameter_names(id)) os << ',' << n;
  for (const auto& n : coordinate_names(id)) os << ',' << n;
  os << ",derived,table,agree,ambiguous";
  return os.str();
}

std::string sweep_csv_row(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.spec.id);
  for (const auto& n : parameter_names(v.spec.id)) os << ',' << v.spec.param(n).get_str();
  for (const auto& c : v.coeffs) os << ',' << c.get_str();
  os << ',' << to_string(v.outcome) << ',' << to_string(v.table.outcome) << ',' << (v.agree() ? "true" : "false")
     << ',' << (v.table.ambiguous ? "true" : "false");
  return os.str();
}

}  // namespace torhyp
