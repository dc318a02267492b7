#include "cli.hpp"

#include "torhyp/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace torhyp::cli {

namespace {

struct Options {
  std::string case_id;
  std::string fan_file;
  std::map<std::string, long long> params;
  std::string divisor;
  std::string coeffs;
  std::string cls;
  std::string e;
  std::string eprime;
  std::string d1;
  std::string d2;
  std::string d3;
  std::string ample;
  std::string range = "0..8";
  std::string out = "csv";
  long bound = -1;
  bool pretty = false;
  bool skip_idp = false;
};

const std::vector<std::string> kParamFlags = {"l", "l1", "l2", "r", "a", "b", "b1", "b2", "c2"};

void add_family(CLI::App* sub, Options& o, bool allow_fan) {
  sub->add_option("--case", o.case_id, "family label, e.g. 2.0.1");
  for (const auto& p : kParamFlags)
    sub->add_option_function<long long>("--" + p, [&o, p](const long long& v) { o.params[p] = v; }, "parameter " + p);
  if (allow_fan) sub->add_option("--fan", o.fan_file, "hand-written fan JSON file ('-' for stdin)");
}

void add_divisor(CLI::App* sub, Options& o) {
  sub->add_option("--D", o.divisor, "divisor as text, e.g. 2D_2+3D_3, or JSON");
  sub->add_option("--coeffs", o.coeffs, "coordinates on the nef generators, e.g. 3,4");
  sub->add_option("--class", o.cls, "coordinates in the Picard basis, e.g. 2,3");
}

FamilySpec spec_of(const Options& o) {
  if (o.case_id.empty()) throw ParameterError("--case is required");
  FamilySpec s;
  s.id = parse_case_id(o.case_id);
  const auto& names = parameter_names(s.id);
  for (const auto& [k, v] : o.params) {
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw ParameterError("case " + to_string(s.id) + " has no parameter --" + k);
    s.params[k] = Int(std::to_string(v));
  }
  for (const auto& n : names)
    if (!s.params.count(n)) throw ParameterError("case " + to_string(s.id) + " needs --" + n);
  s.validate();
  return s;
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParameterError(std::string("invalid JSON: ") + e.what());
  }
}

std::shared_ptr<const Fan> fan_of(const Options& o) {
  if (!o.fan_file.empty()) {
    if (!o.case_id.empty()) throw ParameterError("give either --case or --fan, not both");
    return std::make_shared<const Fan>(fan_from_json(read_json_file(o.fan_file)));
  }
  return std::make_shared<const Fan>(build_family_fan(spec_of(o)));
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    Int z;
    if (item.empty() || z.set_str(item, 10) != 0) throw ParameterError("not an integer list: " + text);
    out.push_back(z);
  }
  if (out.empty()) throw ParameterError("empty integer list");
  return out;
}

/// Divisor text, JSON, or nef coordinates.
TDivisor divisor_arg(const std::shared_ptr<const Fan>& fan, const std::string& text) {
  if (text.empty()) throw ParameterError("missing divisor");
  if (text.front() == '{') {
    try {
      return divisor_from_json(fan, Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw ParameterError(std::string("invalid divisor JSON: ") + e.what());
    }
  }
  if (text.find('D') != std::string::npos) return parse_divisor(fan, text);
  return divisor_from_nef_coords(fan, parse_int_list(text));
}

TDivisor divisor_of(const std::shared_ptr<const Fan>& fan, const Options& o) {
  const int given = !o.divisor.empty() + !o.coeffs.empty() + !o.cls.empty();
  if (given != 1) throw ParameterError("give exactly one of --D, --coeffs, --class");
  if (!o.divisor.empty()) return divisor_arg(fan, o.divisor);
  if (!o.coeffs.empty()) return divisor_from_nef_coords(fan, parse_int_list(o.coeffs));
  const PicBasis pb = picard_basis(*fan);
  const IntVec c = parse_int_list(o.cls);
  if (c.size() != pb.rank()) throw ParameterError("--class needs " + std::to_string(pb.rank()) + " entries");
  return TDivisor(fan, pb.lift(c));
}

long bound_of(const Options& o) {
  if (o.bound < 0) return default_markov_bound();
  return o.bound;
}

Json named_classes(const std::vector<NamedClass>& gens, const std::shared_ptr<const Fan>& fan, bool with_nef) {
  const PicBasis pb = picard_basis(*fan);
  Json out = Json::array();
  for (const auto& g : gens) {
    Json x = {{"name", g.name}, {"class", int_vec_json(pb.coords(g.coeffs))}};
    if (with_nef) x["nef"] = is_nef(TDivisor(fan, g.coeffs));
    out.push_back(x);
  }
  return out;
}

Json cmd_describe(const std::shared_ptr<const Fan>& fan) {
  Json j = to_json(*fan);
  const ValidationReport rep = verify_smooth_complete(*fan);
  j["validation"] = {{"passed", rep.passed()}, {"failures", rep.failures}, {"generic_cover", rep.generic_cover}};
  j["splitting"] = is_splitting(*fan);
  const PicBasis pb = picard_basis(*fan);
  Json basis = Json::array();
  for (auto r : pb.basis_rays) basis.push_back(fan->label(r));
  const GaleMatrix g = gale_matrix(*fan, pb);
  j["picard"] = {{"rank", pb.rank()}, {"basis", basis}, {"B", int_mat_json(g.B)}};
  j["nef_generators"] = named_classes(nef_cone_generators(*fan), fan, true);
  const TDivisor k = canonical_divisor(fan);
  j["canonical"] = {{"divisor", k.to_string()}, {"class", int_vec_json(class_of(pb, k))}};
  if (fan->spec()) {
    const FamilySpec& s = *fan->spec();
    j["eff_generators"] = named_classes(eff_cone_generators(*fan), fan, false);
    const Table2Check t2 = table2_check(s);
    j["canonical"]["printed"] = t2.canonical_printed.printed;
    j["canonical"]["printed_class"] = int_vec_json(t2.canonical_printed.coords);
    j["canonical"]["typo_note"] = t2.canonical_printed.typo_note;
    j["table2"] = {{"passed", t2.passed()},
                   {"rank_matches", t2.rank_matches},
                   {"non_nef_generators", t2.non_nef_generators},
                   {"nef_cone_matches", t2.nef_cone_matches},
                   {"eff_cone_matches", t2.eff_cone_matches},
                   {"canonical_matches", t2.canonical_matches}};
    j["parametrization"] = table_parametrization(s.id);
    Json configs = Json::array();
    for (const auto& e : config_entries(s))
      configs.push_back({{"condition", e.condition}, {"eprime", e.eprime}, {"source", e.source}});
    j["configurations"] = configs;
  }
  return j;
}

Json cmd_nef(const TDivisor& d) {
  Json j = {{"divisor", to_json(d)}, {"nef", is_nef(d)}, {"ample", is_ample(d)}};
  j["big"] = is_nef(d) ? Json(is_big(d)) : Json();
  j["nef_coordinates"] = rat_vec_json(nef_coordinates(d.fan(), d));
  return j;
}

Json cmd_faces(const TDivisor& d) {
  const BoundaryProfile p = boundary_genus_profile(d);
  Json counts = Json::array();
  for (const auto& e : p.entries) counts.push_back(int_json(e.interior_count));
  return {{"divisor", to_json(d)}, {"boundary", to_json(p)}, {"counts", counts}};
}

Json cmd_markov(const FamilySpec& s, long bound, bool& inconsistent) {
  const Table1Check t = table1_check(s, bound);
  Json moves = Json::array();
  for (const auto& m : t.candidate) moves.push_back(int_vec_json(m));
  inconsistent = !t.annihilates || !t.matches;
  Json j = to_json(s);
  j["B"] = int_mat_json(t.computed.B);
  j["columns"] = t.computed.column_labels;
  j["rows"] = t.computed.row_labels;
  j["printed_B"] = int_mat_json(t.printed.matrix);
  j["typo_note"] = t.printed.typo_note;
  j["annihilates"] = t.annihilates;
  j["matches_printed"] = t.matches;
  j["candidate"] = moves;
  j["certificate"] = to_json(t.certificate);
  j["passed"] = t.passed();
  return j;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw ParameterError("range must look like 0..8");
  try {
    const long lo = std::stol(text.substr(0, pos));
    const long hi = std::stol(text.substr(pos + 2));
    if (lo > hi) throw ParameterError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParameterError("range must look like 0..8");
  }
}

std::string join_ints(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

void pretty_verdict(std::ostream& os, const Verdict& v, const Variety& var) {
  os << v.spec.describe() << "  D = " << var.divisor(v.coeffs).to_string() << "  (" << join_ints(v.coeffs) << ")\n";
  os << "derived: " << to_string(v.outcome) << " - " << v.reason << "\n";
  os << "table:   " << to_string(v.table.outcome) << (v.table.ambiguous ? " (ambiguous)" : "");
  for (const auto& m : v.table.matched) os << "  " << m;
  os << "\n";
  for (const auto& a : v.attempts)
    if (a.succeeded) os << "epsilon_0: " << format(*a.positivity->epsilon) << "\n";
  if (v.epsilon) os << "epsilon: " << format(*v.epsilon) << "\n";
  if (!v.profile.entries.empty()) {
    os << std::left << std::setw(12) << "ray" << std::setw(6) << "dim" << "count\n";
    for (const auto& e : v.profile.entries)
      os << std::setw(12) << e.label << std::setw(6) << e.face_dimension << e.interior_count.get_str() << "\n";
  }
  for (const auto& a : v.attempts)
    os << "E' = " << a.entry.eprime << ": " << (a.succeeded ? "ok" : a.failure) << "\n";
}

void pretty_faces(std::ostream& os, const Json& j) {
  os << std::left << std::setw(12) << "ray" << std::setw(6) << "dim" << "count\n";
  for (const auto& e : j["boundary"]["entries"])
    os << std::setw(12) << e["label"].get<std::string>() << std::setw(6) << e["face_dimension"].get<int>()
       << e["interior_count"].dump() << "\n";
}

Json error_json(const std::string& kind, const std::string& message) {
  return with_schema({{"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric threefold surface hyperbolicity toolkit", "torhyp"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "human-readable output");

  auto* describe = app.add_subcommand("describe", "rays, cones, collections, Picard data and Table 2 checks");
  add_family(describe, o, true);
  auto* nef = app.add_subcommand("nef", "nef / ample / big tests for a divisor");
  add_family(nef, o, true);
  add_divisor(nef, o);
  auto* polytope = app.add_subcommand("polytope", "the polytope P(D)");
  add_family(polytope, o, true);
  add_divisor(polytope, o);
  auto* points = app.add_subcommand("points", "lattice points of P(D)");
  add_family(points, o, true);
  add_divisor(points, o);
  auto* faces = app.add_subcommand("faces", "per-ray min faces and interior counts");
  add_family(faces, o, true);
  add_divisor(faces, o);
  auto* idp = app.add_subcommand("idp", "integer decomposition property of (E, E')");
  add_family(idp, o, true);
  idp->add_option("--E", o.e, "divisor E")->required();
  idp->add_option("--Eprime", o.eprime, "divisor E'")->required();
  auto* markov = app.add_subcommand("markov", "Table 1 verification: B and the printed Markov candidate");
  add_family(markov, o, false);
  markov->add_option("--bound", o.bound, "fiber bound (default 6 or TORHYP_MARKOV_BOUND)");
  auto* conn = app.add_subcommand("connected-sections", "IDP and Markov test for (E+E', E)");
  add_family(conn, o, true);
  conn->add_option("--E", o.e, "divisor E")->required();
  conn->add_option("--Eprime", o.eprime, "divisor E'")->required();
  conn->add_option("--bound", o.bound, "fiber bound");
  conn->add_flag("--skip-idp", o.skip_idp, "take the IDP from the rank <= 3 theorem");
  auto* intersect = app.add_subcommand("intersect", "triple intersection number");
  add_family(intersect, o, true);
  intersect->add_option("--d1", o.d1)->required();
  intersect->add_option("--d2", o.d2)->required();
  intersect->add_option("--d3", o.d3)->required();
  auto* classify = app.add_subcommand("classify", "hyperbolicity verdict with evidence");
  add_family(classify, o, false);
  classify->add_option("--coeffs", o.coeffs, "table coordinates, e.g. 3,4")->required();
  classify->add_option("--bound", o.bound, "fiber bound");
  classify->add_option("--ample", o.ample, "ample class H used for degrees");
  auto* sweep = app.add_subcommand("sweep", "grid comparison against the tables (CSV)");
  add_family(sweep, o, false);
  sweep->add_option("--range", o.range, "coordinate range, e.g. 0..8");
  sweep->add_option("--out", o.out, "output format (csv)");
  sweep->add_option("--bound", o.bound, "fiber bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump() << "\n";
    return 1;
  }

  auto emit = [&](const Json& j) { out << (o.pretty ? j.dump(2) : j.dump()) << "\n"; };

  try {
    if (describe->parsed()) {
      emit(with_schema(cmd_describe(fan_of(o))));
    } else if (nef->parsed()) {
      const auto fan = fan_of(o);
      emit(with_schema(cmd_nef(divisor_of(fan, o))));
    } else if (polytope->parsed()) {
      const auto fan = fan_of(o);
      const TDivisor d = divisor_of(fan, o);
      Json j = to_json(polytope_of(d));
      j["divisor"] = to_json(d);
      emit(with_schema(j));
    } else if (points->parsed()) {
      const auto fan = fan_of(o);
      const TDivisor d = divisor_of(fan, o);
      Json pts = Json::array();
      for (const auto& m : lattice_points(polytope_of(d))) pts.push_back(int_vec_json(m));
      emit(with_schema({{"divisor", to_json(d)}, {"count", pts.size()}, {"lattice_points", pts}}));
    } else if (faces->parsed()) {
      const auto fan = fan_of(o);
      const Json j = with_schema(cmd_faces(divisor_of(fan, o)));
      if (o.pretty) pretty_faces(out, j);
      else emit(j);
    } else if (idp->parsed()) {
      const auto fan = fan_of(o);
      const TDivisor e = divisor_arg(fan, o.e);
      const TDivisor ep = divisor_arg(fan, o.eprime);
      emit(with_schema({{"E", to_json(e)}, {"Eprime", to_json(ep)}, {"idp", to_json(idp_check(e, ep))}}));
    } else if (markov->parsed()) {
      bool inconsistent = false;
      emit(with_schema(cmd_markov(spec_of(o), bound_of(o), inconsistent)));
      if (inconsistent) {
        err << error_json("InconsistencyError", "recomputed B differs from the Table 1 encoding").dump() << "\n";
        return 2;
      }
    } else if (conn->parsed()) {
      const auto fan = fan_of(o);
      const TDivisor e = divisor_arg(fan, o.e);
      const TDivisor ep = divisor_arg(fan, o.eprime);
      const auto rep = connected_sections_check(e, ep, bound_of(o), !o.skip_idp);
      emit(with_schema({{"E", to_json(e)}, {"Eprime", to_json(ep)}, {"report", to_json(rep)}}));
    } else if (intersect->parsed()) {
      const auto fan = fan_of(o);
      const TDivisor a = divisor_arg(fan, o.d1);
      const TDivisor b = divisor_arg(fan, o.d2);
      const TDivisor c = divisor_arg(fan, o.d3);
      const IntersectionForm form(fan);
      emit(with_schema({{"d1", a.to_string()},
                        {"d2", b.to_string()},
                        {"d3", c.to_string()},
                        {"value", int_json(form.triple(a, b, c))}}));
    } else if (classify->parsed()) {
      Variety v(spec_of(o), bound_of(o));
      if (!o.ample.empty()) v.set_ample(divisor_arg(v.fan_ptr(), o.ample));
      const Verdict verdict = derive_verdict(v, parse_int_list(o.coeffs));
      if (o.pretty) pretty_verdict(out, verdict, v);
      else emit(with_schema(to_json(verdict)));
    } else if (sweep->parsed()) {
      if (o.out != "csv") throw ParameterError("sweep only writes csv");
      const Variety v(spec_of(o), bound_of(o));
      const auto [lo, hi] = parse_range(o.range);
      const std::size_t k = v.nef_generators().size();
      out << sweep_csv_header(v.spec().id) << "\n";
      IntVec c(k, Int(lo));
      while (true) {
        out << sweep_csv_row(derive_verdict(v, c)) << "\n";
        std::size_t i = k;
        while (i > 0 && c[i - 1] == hi) c[--i] = lo;
        if (i == 0) break;
        ++c[i - 1];
      }
    }
  } catch (const ParameterError& e) {
    err << error_json("ParameterError", e.what()).dump() << "\n";
    return 1;
  } catch (const EnumerationError& e) {
    err << error_json("EnumerationError", e.what()).dump() << "\n";
    return 1;
  } catch (const InconsistencyError& e) {
    err << error_json("InconsistencyError", e.what()).dump() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << error_json("ParameterError", e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << error_json("InternalError", e.what()).dump() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace torhyp::cli
