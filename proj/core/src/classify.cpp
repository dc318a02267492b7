#include "torhyp/classify.hpp"

#include <algorithm>

namespace torhyp {

namespace {

std::shared_ptr<const Fan> make_fan(const FamilySpec& spec) {
  return std::make_shared<const Fan>(build_family_fan(spec));
}

IntVec ones(std::size_t n) { return IntVec(n, Int(1)); }

}  // namespace

TDivisor default_ample(const std::shared_ptr<const Fan>& fan) {
  TDivisor h = divisor_from_nef_coords(fan, ones(nef_cone_generators(*fan).size()));
  if (!is_ample(h)) throw InconsistencyError("default class " + h.to_string() + " is not ample");
  return h;
}

Variety::Variety(FamilySpec spec, long markov_bound)
    : spec_(std::move(spec)),
      fan_(make_fan(spec_)),
      basis_(picard_basis(*fan_)),
      nef_(nef_cone_generators(*fan_)),
      eff_(eff_cone_generators(*fan_)),
      canonical_(canonical_divisor(fan_)),
      ample_(default_ample(fan_)),
      form_(fan_),
      markov_bound_(markov_bound) {}

void Variety::set_ample(const TDivisor& h) {
  if (&h.fan() != fan_.get()) throw ParameterError("ample class lives on a different fan");
  if (!is_ample(h)) throw ParameterError(h.to_string() + " is not ample");
  ample_ = h;
}

TDivisor Variety::divisor(const IntVec& nef_coords) const { return divisor_from_nef_coords(fan_, nef_coords); }

const FiberCertificate& Variety::section_certificate(const IntVec& eprime_nef) const {
  const std::lock_guard<std::mutex> lock(mutex_);
  auto it = certificates_.find(eprime_nef);
  if (it != certificates_.end()) return it->second;
  const TDivisor ep = divisor(eprime_nef);
  const GaleMatrix g = gale_matrix(*fan_, basis_);
  return certificates_.emplace(eprime_nef, markov_verify(g.B, section_moves(ep), markov_bound_)).first->second;
}

BoundaryProfile boundary_genus_profile(const TDivisor& d) {
  if (!is_nef(d)) throw ParameterError("boundary profile needs a nef divisor, got " + d.to_string());
  const PicBasis pb = picard_basis(d.fan());
  if (is_zero(class_of(pb, d))) throw ParameterError("boundary profile of the trivial class");
  BoundaryProfile prof;
  const HPolytope p = polytope_of(d);
  const auto verts = vertices(p);
  prof.big = affine_dimension(verts) == 3;
  for (std::size_t r = 0; r < d.fan().num_rays(); ++r) {
    const Face2 f = min_face(p, verts, r);
    BoundaryEntry e;
    e.ray = r;
    e.label = d.fan().label(r);
    e.face_dimension = f.dimension;
    e.interior_count = interior_lattice_count(f);
    if (!prof.low_genus_ray && (f.dimension == 1 || (f.dimension == 2 && e.interior_count <= 1)))
      prof.low_genus_ray = r;
    prof.entries.push_back(std::move(e));
  }
  return prof;
}

BoundaryProfile boundary_genus_profile(const Variety& v, const TDivisor& d) {
  BoundaryProfile prof = boundary_genus_profile(d);
  for (auto& e : prof.entries)
    if (e.face_dimension == 2) e.degree = v.form().triple(v.ample(), d, TDivisor::ray(v.fan_ptr(), e.ray));
  return prof;
}

IntVec genus_bound_class(const Variety& v, const TDivisor& e) { return class_of(v.basis(), e + v.canonical()); }

bool noether_lefschetz_applicable(const TDivisor& d) { return is_nef(d + canonical_divisor(d.fan_ptr())); }

PositivityCertificate positivity_certificate(const Variety& v, const TDivisor& d, const TDivisor& e,
                                             const TDivisor& h) {
  PositivityCertificate cert;
  const TDivisor bound = e + v.canonical();
  bool positive = true;
  std::optional<Rational> eps;
  for (const auto& g : v.eff_generators()) {
    const TDivisor f(v.fan_ptr(), g.coeffs);
    const Int alpha = v.form().triple(bound, d, f);
    const Int beta = v.form().triple(h, d, f);
    cert.generators.push_back(g.name);
    cert.pairings.push_back(alpha);
    cert.degrees.push_back(beta);
    if (alpha < 1) positive = false;
    if (beta > 0) {
      Rational q(alpha, beta);
      q.canonicalize();
      if (!eps || q < *eps) eps = q;
    }
  }
  if (positive) cert.epsilon = (!eps || *eps > 1) ? Rational(1) : *eps;
  return cert;
}

bool Verdict::contradiction() const {
  return (outcome == Outcome::Hyperbolic && table.outcome == Outcome::NotHyperbolic) ||
         (outcome == Outcome::NotHyperbolic && table.outcome == Outcome::Hyperbolic);
}

TableLookup table_lookup(const FamilySpec& spec, const IntVec& coeffs) {
  std::vector<long> c;
  for (const auto& x : coeffs) {
    if (!x.fits_slong_p()) return {};
    c.push_back(x.get_si());
  }
  return table_lookup(spec, c);
}

Verdict derive_verdict(const Variety& v, const IntVec& coeffs) {
  Verdict out;
  out.spec = v.spec();
  out.coeffs = coeffs;
  out.table = table_lookup(v.spec(), coeffs);
  const TDivisor d = v.divisor(coeffs);
  if (!is_nef(d)) throw ParameterError("D = " + d.to_string() + " is not nef");
  if (is_zero(class_of(v.basis(), d))) {
    out.profile.trivial = true;
    out.outcome = Outcome::NotHyperbolic;
    out.reason = "D is trivial";
    return out;
  }
  out.profile = boundary_genus_profile(v, d);
  if (!out.profile.big) {
    out.outcome = Outcome::NotHyperbolic;
    out.reason = "D is not big, so the boundary contains a genus 0 curve";
    return out;
  }
  if (out.profile.low_genus_ray) {
    const auto& e = out.profile.entries[*out.profile.low_genus_ray];
    out.outcome = Outcome::NotHyperbolic;
    out.reason = e.face_dimension == 1
                     ? "the face of " + e.label + " is an edge, so S meets " + e.label + " in rational curves"
                     : "the boundary curve on " + e.label + " has genus " + e.interior_count.get_str();
    return out;
  }

  out.noether_lefschetz = noether_lefschetz_applicable(d);
  const auto entries = config_entries(v.spec());
  for (const auto& entry : entries) {
    ConfigAttempt att;
    att.entry = entry;
    IntVec e_nef = sub(coeffs, entry.eprime_nef);
    if (std::any_of(e_nef.begin(), e_nef.end(), [](const Int& x) { return x < 0; })) {
      att.failure = "E = D - E' is not nef";
      out.attempts.push_back(std::move(att));
      continue;
    }
    att.e_nef = e_nef;
    att.certificate = v.section_certificate(entry.eprime_nef);
    const TDivisor e = v.divisor(e_nef);
    att.bound_class = genus_bound_class(v, e);
    if (!att.certificate->connected) {
      att.failure = "moves of P(E') are not a Markov basis at bound " + std::to_string(v.markov_bound());
    } else if (!out.noether_lefschetz) {
      att.failure = "D + K is not nef";
    } else {
      att.positivity = positivity_certificate(v, d, e, v.ample());
      if (!att.positivity->epsilon) {
        att.failure = "some pairing (E+K).D.F is below 1";
      } else {
        att.succeeded = true;
      }
    }
    const bool ok = att.succeeded;
    out.attempts.push_back(std::move(att));
    if (ok) break;
  }

  const ConfigAttempt* win = nullptr;
  for (const auto& a : out.attempts)
    if (a.succeeded) win = &a;
  if (win == nullptr) {
    out.outcome = Outcome::Open;
    if (entries.empty()) {
      out.reason = "no connected-sections configuration is listed for these parameters";
    } else {
      out.reason = "no listed configuration yields a positive genus bound";
    }
    return out;
  }
  Rational eps = *win->positivity->epsilon;
  for (const auto& e : out.profile.entries)
    if (e.degree && *e.degree > 0) {
      Rational q(1, *e.degree);
      q.canonicalize();
      eps = std::min(eps, q);
    }
  out.epsilon = eps;
  out.outcome = Outcome::Hyperbolic;
  out.reason = "connected sections via E' = " + win->entry.eprime + " with positive genus bound";
  return out;
}

Verdict derive_verdict(const FamilySpec& spec, const IntVec& coeffs) {
  const Variety v(spec);
  return derive_verdict(v, coeffs);
}

Table1Check table1_check(const FamilySpec& spec, long bound) {
  const Fan fan = build_family_fan(spec);
  Table1Check out;
  out.computed = gale_matrix(fan, picard_basis(fan));
  out.annihilates = (out.computed.B * fan.ray_matrix()).is_zero();
  out.printed = printed_gale_matrix(spec);
  out.matches = out.printed.matrix == out.computed.B;
  out.candidate = printed_markov_candidate(spec);
  out.certificate = markov_verify(out.computed.B, out.candidate, bound);
  return out;
}

Table2Check table2_check(const FamilySpec& spec) {
  const auto fan = std::make_shared<const Fan>(build_family_fan(spec));
  const PicBasis pb = picard_basis(*fan);
  Table2Check out;
  out.pic_rank = fan->num_rays() - 3;
  out.rank_matches = pb.rank() == static_cast<std::size_t>(picard_rank(spec.id)) &&
                     smith_normal_form(fan->ray_matrix()).cokernel_torsion().empty() &&
                     smith_normal_form(fan->ray_matrix()).cokernel_free_rank() == pb.rank();
  std::vector<IntVec> nef;
  for (const auto& g : nef_cone_generators(*fan)) {
    if (!is_nef(TDivisor(fan, g.coeffs))) out.non_nef_generators.push_back(g.name);
    nef.push_back(pb.coords(g.coeffs));
  }
  out.nef_cone_matches = true;
  for (const auto& ray : nef_cone_extreme_rays(*fan, pb))
    if (!in_cone(ray, nef)) out.nef_cone_matches = false;
  std::vector<IntVec> eff;
  for (const auto& g : eff_cone_generators(*fan)) eff.push_back(pb.coords(g.coeffs));
  out.eff_cone_matches = true;
  for (std::size_t r = 0; r < fan->num_rays(); ++r)
    if (!in_cone(class_of(pb, TDivisor::ray(fan, r)), eff)) out.eff_cone_matches = false;
  out.canonical_printed = printed_canonical(spec);
  out.canonical_computed = class_of(pb, canonical_divisor(fan));
  out.canonical_matches = out.canonical_computed == out.canonical_printed.coords;
  return out;
}

}  // namespace torhyp
