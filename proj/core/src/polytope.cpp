#include "torhyp/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace torhyp {

namespace {

Int det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rational rdet3(const RatVec& a, const RatVec& b, const RatVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RatVec rsub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational rdot(const RatVec& a, const IntVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational rdot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec rcross(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_q(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
Int ceil_q(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

RatVec centroid(const std::vector<RatVec>& pts) {
  RatVec c(pts.front().size());
  for (const auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= static_cast<long>(pts.size());
  return c;
}

std::size_t rational_rank(std::vector<RatVec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Sorts coplanar points cyclically around their centroid; `normal` orients the
// plane (use (0,0,1) with z = 0 for planar input).
void cyclic_sort(std::vector<RatVec>& pts, const RatVec& normal, std::vector<std::size_t>* perm = nullptr) {
  if (pts.size() < 3) return;
  const RatVec g = centroid(pts);
  const RatVec d0 = rsub(pts.front(), g);
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto half = [&](const RatVec& d) {
    const Rational cr = rdot(rcross(d0, d), normal);
    return (cr > 0 || (cr == 0 && rdot(d0, d) > 0)) ? 0 : 1;
  };
  std::vector<RatVec> ds;
  std::vector<int> hs;
  for (const auto& p : pts) {
    ds.push_back(rsub(p, g));
    hs.push_back(half(ds.back()));
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (hs[a] != hs[b]) return hs[a] < hs[b];
    return rdot(rcross(ds[a], ds[b]), normal) > 0;
  });
  std::vector<RatVec> sorted;
  for (std::size_t i : idx) sorted.push_back(pts[i]);
  pts = std::move(sorted);
  if (perm) *perm = idx;
}

}  // namespace

bool HPolytope::contains(const IntVec& m) const {
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (dot(normals[i], m) < offsets[i]) return false;
  return true;
}

bool HPolytope::contains(const RatVec& m) const {
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (rdot(m, normals[i]) < offsets[i]) return false;
  return true;
}

HPolytope polytope_of(const TDivisor& d) {
  HPolytope p;
  p.normals = d.fan().rays();
  for (const auto& a : d.coeffs()) p.offsets.push_back(-a);
  return p;
}

bool is_bounded(const HPolytope& p) {
  const auto& n = p.normals;
  bool full_rank = false;
  for (std::size_t i = 0; i < n.size() && !full_rank; ++i)
    for (std::size_t j = i + 1; j < n.size() && !full_rank; ++j)
      for (std::size_t k = j + 1; k < n.size(); ++k)
        if (det3(n[i], n[j], n[k]) != 0) {
          full_rank = true;
          break;
        }
  if (!full_rank) return false;
  // A nonzero recession direction would include an extreme ray on two facets.
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      const IntVec c{n[i][1] * n[j][2] - n[i][2] * n[j][1], n[i][2] * n[j][0] - n[i][0] * n[j][2],
                     n[i][0] * n[j][1] - n[i][1] * n[j][0]};
      if (is_zero(c)) continue;
      for (int sgn_ = -1; sgn_ <= 1; sgn_ += 2) {
        bool rec = true;
        for (const auto& nk : n)
          if (sgn_ * dot(nk, c) < 0) {
            rec = false;
            break;
          }
        if (rec) return false;
      }
    }
  return true;
}

std::vector<RatVec> vertices(const HPolytope& p) {
  if (!is_bounded(p)) throw EnumerationError("polytope is unbounded");
  const auto& n = p.normals;
  std::set<RatVec> out;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      for (std::size_t k = j + 1; k < n.size(); ++k) {
        const Int d = det3(n[i], n[j], n[k]);
        if (d == 0) continue;
        // Cramer's rule on the rows n_i, n_j, n_k.
        const IntVec b{p.offsets[i], p.offsets[j], p.offsets[k]};
        RatVec m(3);
        for (std::size_t c = 0; c < 3; ++c) {
          IntVec ri = n[i], rj = n[j], rk = n[k];
          ri[c] = b[0];
          rj[c] = b[1];
          rk[c] = b[2];
          m[c] = Rational(det3(ri, rj, rk), d);
          m[c].canonicalize();
        }
        if (p.contains(m)) out.insert(std::move(m));
      }
  return {out.begin(), out.end()};
}

int affine_dimension(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(rsub(points[i], points[0]));
  return static_cast<int>(rational_rank(std::move(diffs)));
}

int dimension(const HPolytope& p) { return affine_dimension(vertices(p)); }

std::vector<IntVec> lattice_points(const HPolytope& p, const std::vector<RatVec>& verts) {
  std::vector<IntVec> out;
  if (verts.empty()) return out;
  IntVec lo(3), hi(3);
  for (std::size_t c = 0; c < 3; ++c) {
    Rational mn = verts[0][c], mx = verts[0][c];
    for (const auto& v : verts) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = ceil_q(mn);
    hi[c] = floor_q(mx);
    if (lo[c] > hi[c]) return out;
  }
  Int box = 1;
  for (std::size_t c = 0; c < 3; ++c) box *= hi[c] - lo[c] + 1;
  if (box > Int(static_cast<long>(kLatticeGuard)))
    throw EnumerationError("lattice enumeration guard exceeded (" + box.get_str() + " candidates)");
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y) {
      Int zlo = lo[2], zhi = hi[2];
      bool empty = false;
      for (std::size_t i = 0; i < p.normals.size() && !empty; ++i) {
        const IntVec& nv = p.normals[i];
        const Int rhs = p.offsets[i] - nv[0] * x - nv[1] * y;
        if (nv[2] > 0) {
          zlo = std::max(zlo, ceil_div(rhs, nv[2]));
        } else if (nv[2] < 0) {
          zhi = std::min(zhi, floor_div(rhs, nv[2]));
        } else if (rhs > 0) {
          empty = true;
        }
      }
      if (empty) continue;
      for (Int z = zlo; z <= zhi; ++z) out.push_back({x, y, z});
    }
  return out;
}

std::vector<IntVec> lattice_points(const HPolytope& p) { return lattice_points(p, vertices(p)); }

std::size_t count_lattice_points(const HPolytope& p) { return lattice_points(p).size(); }

Face2 min_face(const HPolytope& p, const std::vector<RatVec>& verts, std::size_t ray) {
  Face2 f;
  f.ray = ray;
  f.polytope = p;
  const IntVec& n = p.normals.at(ray);
  for (const auto& v : verts)
    if (rdot(v, n) == p.offsets[ray]) f.vertices.push_back(v);
  f.dimension = affine_dimension(f.vertices);
  const IntMat row = IntMat::from_rows({n});
  const auto origin = solve_integer(row, {p.offsets[ray]});
  if (!origin) throw InconsistencyError("face plane has no lattice point (ray not primitive)");
  f.origin = *origin;
  const auto basis = integer_kernel(row);
  if (basis.size() != 2) throw InconsistencyError("face plane lattice is not 2-dimensional");
  f.w1 = basis[0];
  f.w2 = basis[1];
  const IntMat w = IntMat::from_columns({f.w1, f.w2});
  for (const auto& v : f.vertices) {
    // Solve origin + s w1 + t w2 = v exactly.
    const Int den = std::accumulate(v.begin(), v.end(), Int(1),
                                    [](const Int& acc, const Rational& q) { return lcm(acc, q.get_den()); });
    IntVec rhs(3);
    for (std::size_t c = 0; c < 3; ++c) rhs[c] = Rational(v[c] * den).get_num() - f.origin[c] * den;
    const ExactSolution sol = solve_exact(w, rhs);
    if (sol.status != ExactSolution::Status::Unique) throw InconsistencyError("face vertex off its plane");
    f.plane_coords.push_back({sol.x[0] / den, sol.x[1] / den});
  }
  if (f.dimension == 2) {
    std::vector<RatVec> planar;
    for (const auto& st : f.plane_coords) planar.push_back({st[0], st[1], Rational(0)});
    std::vector<std::size_t> perm;
    cyclic_sort(planar, RatVec{Rational(0), Rational(0), Rational(1)}, &perm);
    std::vector<RatVec> vs, pcs;
    for (std::size_t i : perm) {
      vs.push_back(f.vertices[i]);
      pcs.push_back(f.plane_coords[i]);
    }
    f.vertices = std::move(vs);
    f.plane_coords = std::move(pcs);
  }
  return f;
}

Face2 min_face(const TDivisor& d, std::size_t ray) {
  const HPolytope p = polytope_of(d);
  return min_face(p, vertices(p), ray);
}

Int interior_lattice_count(const Face2& f) {
  if (f.dimension < 2) return Int(0);
  struct Lin {
    Int alpha, beta, gamma, offset;
  };
  std::vector<Lin> lins;
  for (std::size_t i = 0; i < f.polytope.normals.size(); ++i) {
    const IntVec& u = f.polytope.normals[i];
    Lin l{dot(f.origin, u), dot(f.w1, u), dot(f.w2, u), f.polytope.offsets[i]};
    if (l.beta == 0 && l.gamma == 0) continue;  // constant on the face plane
    lins.push_back(std::move(l));
  }
  Rational smin = f.plane_coords[0][0], smax = smin;
  for (const auto& st : f.plane_coords) {
    smin = std::min(smin, st[0]);
    smax = std::max(smax, st[0]);
  }
  Int count = 0;
  for (Int s = ceil_q(smin); s <= floor_q(smax); ++s) {
    std::optional<Int> tlo, thi;
    bool empty = false;
    for (const auto& l : lins) {
      // Strict: alpha + s beta + t gamma > offset.
      const Int rhs = l.offset - l.alpha - s * l.beta;
      if (l.gamma > 0) {
        Int v = floor_div(rhs, l.gamma) + 1;
        if (!tlo || v > *tlo) tlo = v;
      } else if (l.gamma < 0) {
        Int v = ceil_div(rhs, l.gamma) - 1;
        if (!thi || v < *thi) thi = v;
      } else if (rhs >= 0) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    if (!tlo || !thi) throw InconsistencyError("face is unbounded in its plane");
    if (*thi >= *tlo) count += *thi - *tlo + 1;
  }
  return count;
}

Rational volume_of_vertices(const std::vector<RatVec>& verts, const HPolytope& p) {
  if (affine_dimension(verts) < 3) return Rational(0);
  const RatVec c = centroid(verts);
  Rational vol = 0;
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    std::vector<RatVec> face;
    for (const auto& v : verts)
      if (rdot(v, p.normals[i]) == p.offsets[i]) face.push_back(v);
    if (affine_dimension(face) < 2) continue;
    cyclic_sort(face, to_rat(p.normals[i]));
    for (std::size_t k = 1; k + 1 < face.size(); ++k)
      vol += abs(rdet3(rsub(face[0], c), rsub(face[k], c), rsub(face[k + 1], c)));
  }
  return vol / 6;
}

Rational volume(const HPolytope& p) { return volume_of_vertices(vertices(p), p); }

Rational hull_volume(const std::vector<RatVec>& points) {
  if (points.size() < 4) return Rational(0);
  Int den = 1;
  for (const auto& p : points)
    for (const auto& x : p) den = lcm(den, x.get_den());
  std::set<IntVec> uniq;
  for (const auto& p : points) {
    IntVec v(3);
    for (std::size_t c = 0; c < 3; ++c) v[c] = Rational(p[c] * den).get_num();
    uniq.insert(std::move(v));
  }
  const std::vector<IntVec> pts(uniq.begin(), uniq.end());
  auto orient = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return det3(sub(pts[b], pts[a]), sub(pts[c], pts[a]), sub(pts[d], pts[a]));
  };
  // Initial tetrahedron.
  const std::size_t n = pts.size();
  std::size_t i1 = n, i2 = n, i3 = n;
  for (std::size_t i = 1; i < n && i1 == n; ++i)
    if (pts[i] != pts[0]) i1 = i;
  if (i1 == n) return Rational(0);
  for (std::size_t i = 1; i < n && i2 == n; ++i) {
    const IntVec a = sub(pts[i1], pts[0]), b = sub(pts[i], pts[0]);
    const IntVec cr{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    if (!is_zero(cr)) i2 = i;
  }
  if (i2 == n) return Rational(0);
  for (std::size_t i = 1; i < n && i3 == n; ++i)
    if (orient(0, i1, i2, i) != 0) i3 = i;
  if (i3 == n) return Rational(0);
  using Tri = std::array<std::size_t, 3>;
  std::vector<Tri> faces;
  const std::array<std::size_t, 4> tet{0, i1, i2, i3};
  for (int skip = 0; skip < 4; ++skip) {
    Tri t{};
    std::size_t k = 0;
    for (int q = 0; q < 4; ++q)
      if (q != skip) t[k++] = tet[static_cast<std::size_t>(q)];
    if (orient(t[0], t[1], t[2], tet[static_cast<std::size_t>(skip)]) > 0) std::swap(t[1], t[2]);
    faces.push_back(t);
  }
  for (std::size_t p = 1; p < n; ++p) {
    if (p == i1 || p == i2 || p == i3) continue;
    std::vector<Tri> keep;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& t : faces) {
      if (orient(t[0], t[1], t[2], p) > 0) {
        edges.insert({t[0], t[1]});
        edges.insert({t[1], t[2]});
        edges.insert({t[2], t[0]});
      } else {
        keep.push_back(t);
      }
    }
    if (edges.empty()) continue;
    for (const auto& [a, b] : edges)
      if (!edges.count({b, a})) keep.push_back({a, b, p});
    faces = std::move(keep);
  }
  // Reference point: 4 * centroid of the initial tetrahedron.
  IntVec ref(3);
  for (std::size_t q : tet) ref = add(ref, pts[q]);
  Int six_vol_64 = 0;
  for (const auto& t : faces) {
    const IntVec a = sub(scale(Int(4), pts[t[0]]), ref);
    const IntVec b = sub(scale(Int(4), pts[t[1]]), ref);
    const IntVec c = sub(scale(Int(4), pts[t[2]]), ref);
    six_vol_64 += abs(det3(a, b, c));
  }
  Rational vol(six_vol_64, Int(6 * 64) * den * den * den);
  vol.canonicalize();
  return vol;
}

std::vector<RatVec> minkowski_sum(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  std::set<RatVec> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      RatVec s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(std::move(s));
    }
  return {out.begin(), out.end()};
}

namespace {

// Packs small integer points into one 64-bit key.
struct PackedPoints {
  static constexpr long kOff = 1L << 20;
  std::unordered_set<long long> keys;
  bool ok = true;

  static std::optional<long long> key(const IntVec& p) {
    long long k = 0;
    for (const auto& x : p) {
      if (!x.fits_slong_p()) return std::nullopt;
      const long v = x.get_si() + kOff;
      if (v < 0 || v >= 2 * kOff) return std::nullopt;
      k = (k << 21) | v;
    }
    return k;
  }
};

}  // namespace

IdpResult idp_check(const TDivisor& e, const TDivisor& eprime) {
  if (!is_nef(e) || !is_nef(eprime)) throw ParameterError("idp_check needs nef divisors");
  const auto pe = lattice_points(polytope_of(e));
  const auto pe2 = lattice_points(polytope_of(eprime));
  const auto psum = lattice_points(polytope_of(e + eprime));
  std::unordered_set<long long> second;
  std::set<IntVec> second_slow;
  bool packed = true;
  for (const auto& q : pe2) {
    const auto k = PackedPoints::key(q);
    if (!k) packed = false;
    if (packed) second.insert(*k);
  }
  if (!packed) second_slow.insert(pe2.begin(), pe2.end());
  IdpResult res;
  for (const auto& p : psum) {
    ++res.points_checked;
    bool found = false;
    for (const auto& q : pe) {
      const IntVec d = sub(p, q);
      if (packed) {
        const auto k = PackedPoints::key(d);
        found = k && second.count(*k) > 0;
      } else {
        found = second_slow.count(d) > 0;
      }
      if (found) break;
    }
    if (!found) {
      res.holds = false;
      res.uncovered = p;
      return res;
    }
  }
  return res;
}

Rational triple_by_polarization(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3) {
  const std::array<const TDivisor*, 3> ds{&d1, &d2, &d3};
  for (const auto* d : ds)
    if (!is_nef(*d)) throw ParameterError("triple_by_polarization needs nef divisors");
  Rational total = 0;
  for (int mask = 1; mask < 8; ++mask) {
    TDivisor s = TDivisor::zero(d1.fan_ptr());
    int bits = 0;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) {
        s = s + *ds[static_cast<std::size_t>(i)];
        ++bits;
      }
    const Rational v = volume(polytope_of(s));
    total += ((3 - bits) % 2 == 0) ? v : Rational(-v);
  }
  return total;
}

IntersectionForm::IntersectionForm(std::shared_ptr<const Fan> fan) : fan_(std::move(fan)) {
  const PicBasis pb = picard_basis(*fan_);
  reduction_ = pb.reduction;
  const std::size_t k = pb.rank();
  // Pick k linearly independent nef generators.
  std::vector<IntVec> cands;
  for (const auto& g : nef_cone_generators(*fan_)) cands.push_back(g.coeffs);
  if (!std::all_of(cands.begin(), cands.end(), [&](const IntVec& c) { return is_nef(TDivisor(fan_, c)); })) {
    // Printed generators outside their parameter range: use the computed cone.
    cands.clear();
    for (const auto& r : nef_cone_extreme_rays(*fan_, pb)) cands.push_back(pb.lift(r));
  }
  std::vector<IntVec> cols;
  for (const auto& c : cands) {
    if (gens_.size() == k) break;
    auto trial = cols;
    trial.push_back(pb.coords(c));
    if (torhyp::rank(IntMat::from_columns(trial, k)) == trial.size()) {
      cols = std::move(trial);
      gens_.emplace_back(fan_, c);
    }
  }
  if (gens_.size() != k) throw InconsistencyError("nef generators do not span the Picard group");
  const IntMat g = IntMat::from_columns(cols, k);
  // Inverse with a common denominator.
  std::vector<RatVec> inv_cols;
  to_coords_den_ = 1;
  for (std::size_t j = 0; j < k; ++j) {
    IntVec e(k);
    e[j] = 1;
    inv_cols.push_back(solve_exact(g, e).x);
    for (const auto& q : inv_cols.back()) to_coords_den_ = lcm(to_coords_den_, q.get_den());
  }
  to_coords_num_ = IntMat(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) to_coords_num_(i, j) = Rational(inv_cols[j][i] * to_coords_den_).get_num();

  std::map<std::vector<int>, Rational> vol_cache;
  auto vol_of = [&](std::vector<int> mult) {
    auto it = vol_cache.find(mult);
    if (it != vol_cache.end()) return it->second;
    TDivisor s = TDivisor::zero(fan_);
    for (std::size_t i = 0; i < k; ++i) s = s + Int(mult[i]) * gens_[i];
    const Rational v = volume(polytope_of(s));
    vol_cache.emplace(mult, v);
    return v;
  };
  table_.assign(k * k * k, Int(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      for (std::size_t c = b; c < k; ++c) {
        Rational total = 0;
        const std::array<std::size_t, 3> idx{a, b, c};
        for (int mask = 1; mask < 8; ++mask) {
          std::vector<int> mult(k, 0);
          int bits = 0;
          for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) {
              ++mult[idx[static_cast<std::size_t>(i)]];
              ++bits;
            }
          const Rational v = vol_of(mult);
          total += ((3 - bits) % 2 == 0) ? v : Rational(-v);
        }
        if (total.get_den() != 1) throw InconsistencyError("non-integral intersection number");
        for (const auto& [x, y, z] : {std::array{a, b, c}, std::array{a, c, b}, std::array{b, a, c},
                                      std::array{b, c, a}, std::array{c, a, b}, std::array{c, b, a}})
          table_[(x * k + y) * k + z] = total.get_num();
      }
}

const Int& IntersectionForm::generator_triple(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = gens_.size();
  return table_.at((i * n + j) * n + k);
}

RatVec IntersectionForm::coords(const TDivisor& d) const {
  const IntVec pic = reduction_ * d.coeffs();
  const IntVec num = to_coords_num_ * pic;
  RatVec out;
  for (const auto& x : num) {
    Rational q(x, to_coords_den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Rational IntersectionForm::triple_nef(const RatVec& x, const RatVec& y, const RatVec& z) const {
  const std::size_t n = gens_.size();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k] == 0) continue;
        total += x[i] * y[j] * z[k] * table_[(i * n + j) * n + k];
      }
    }
  }
  return total;
}

Int IntersectionForm::triple(const TDivisor& a, const TDivisor& b, const TDivisor& c) const {
  const Rational v = triple_nef(coords(a), coords(b), coords(c));
  if (v.get_den() != 1) throw InconsistencyError("non-integral intersection number " + format(v));
  return v.get_num();
}

Int triple_intersection(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3) {
  return IntersectionForm(d1.fan_ptr()).triple(d1, d2, d3);
}

}  // namespace torhyp
