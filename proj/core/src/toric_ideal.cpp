#include "torhyp/toric_ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace torhyp {

GaleMatrix gale_matrix(const Fan& fan, const PicBasis& basis) {
  GaleMatrix g;
  g.B = basis.reduction;
  g.column_labels = fan.labels();
  for (std::size_t i : basis.basis_rays) g.row_labels.push_back("[" + fan.label(i) + "]");
  const IntMat a = fan.ray_matrix();
  if (!(g.B * a).is_zero()) throw InconsistencyError("B does not annihilate the image of i");
  if (rank(g.B) != g.B.rows()) throw InconsistencyError("B does not have full row rank");
  return g;
}

namespace {

class FiberEnumerator {
 public:
  explicit FiberEnumerator(const IntMat& b) : b_(b) {
    if (b.rows() == 0) throw EnumerationError("fibers of a map to Z^0 are infinite");
    kernel_ = integer_kernel(b);
    if (kernel_.size() > 3) throw ParameterError("fiber enumeration supports kernels of rank at most 3");
    kmat_ = IntMat::from_columns(kernel_, b.cols());
  }

  [[nodiscard]] std::size_t kernel_rank() const { return kernel_.size(); }

  /// Fiber elements as kernel coordinates m (padded to length 3) plus the base point.
  struct Fiber {
    IntVec base;
    std::vector<IntVec> coords;
  };

  [[nodiscard]] Fiber enumerate(const IntVec& image) const {
    Fiber f;
    const auto v0 = solve_integer(b_, image);
    if (!v0) return f;
    f.base = *v0;
    const std::size_t d = kernel_.size();
    HPolytope p;
    for (std::size_t i = 0; i < b_.cols(); ++i) {
      IntVec n(3);
      for (std::size_t j = 0; j < d; ++j) n[j] = kmat_(i, j);
      p.normals.push_back(n);
      p.offsets.push_back(-(*v0)[i]);
    }
    for (std::size_t j = d; j < 3; ++j) {
      IntVec n(3);
      n[j] = 1;
      p.normals.push_back(n);
      p.offsets.push_back(0);
      n[j] = -1;
      p.normals.push_back(n);
      p.offsets.push_back(0);
    }
    if (!is_bounded(p)) throw EnumerationError("fiber is infinite (B has no positive grading)");
    f.coords = lattice_points(p);
    return f;
  }

  /// Kernel coordinates of a move; ParameterError if it is not in ker(B).
  [[nodiscard]] IntVec coords_of_move(const IntVec& g) const {
    if (g.size() != b_.cols()) throw ParameterError("move has wrong length");
    if (!is_zero(b_ * g)) throw ParameterError("move is not in ker(B)");
    const auto mu = solve_integer(kmat_, g);
    if (!mu) throw InconsistencyError("kernel basis does not span the move");
    IntVec out(3);
    for (std::size_t j = 0; j < mu->size(); ++j) out[j] = (*mu)[j];
    return out;
  }

  [[nodiscard]] IntVec element(const Fiber& f, const IntVec& m) const {
    IntVec v = f.base;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < kernel_.size(); ++j) v[i] += kmat_(i, j) * m[j];
    return v;
  }

 private:
  IntMat b_;
  std::vector<IntVec> kernel_;
  IntMat kmat_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::optional<long long> pack(const IntVec& m) {
  constexpr long kOff = 1L << 20;
  long long k = 0;
  for (const auto& x : m) {
    if (!x.fits_slong_p()) return std::nullopt;
    const long v = x.get_si() + kOff;
    if (v < 0 || v >= 2 * kOff) return std::nullopt;
    k = (k << 21) | v;
  }
  return k;
}

bool connected(const std::vector<IntVec>& pts, const std::vector<IntVec>& moves) {
  if (pts.size() <= 1) return true;
  std::unordered_map<long long, std::size_t> index;
  std::map<IntVec, std::size_t> slow;
  bool packed = true;
  for (std::size_t i = 0; i < pts.size() && packed; ++i) {
    const auto k = pack(pts[i]);
    if (!k) packed = false;
    else index.emplace(*k, i);
  }
  if (!packed)
    for (std::size_t i = 0; i < pts.size(); ++i) slow.emplace(pts[i], i);
  UnionFind uf(pts.size());
  std::size_t components = pts.size();
  for (std::size_t i = 0; i < pts.size() && components > 1; ++i)
    for (const auto& mu : moves) {
      const IntVec q = add(pts[i], mu);
      std::optional<std::size_t> j;
      if (packed) {
        if (const auto k = pack(q)) {
          auto it = index.find(*k);
          if (it != index.end()) j = it->second;
        }
      } else {
        auto it = slow.find(q);
        if (it != slow.end()) j = it->second;
      }
      if (j && uf.unite(i, *j)) --components;
    }
  return components == 1;
}

std::vector<IntVec> normalized_moves(const FiberEnumerator& en, const std::vector<IntVec>& moves) {
  std::set<IntVec> out;
  for (const auto& g : moves) {
    IntVec mu = en.coords_of_move(g);
    if (is_zero(mu)) continue;
    // Keep one representative of +-mu.
    const auto first = std::find_if(mu.begin(), mu.end(), [](const Int& x) { return x != 0; });
    if (*first < 0) mu = scale(Int(-1), mu);
    out.insert(std::move(mu));
  }
  return {out.begin(), out.end()};
}

void for_each_bounded_vector(std::size_t n, long bound, const std::function<void(const IntVec&)>& fn) {
  IntVec v(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      fn(v);
      return;
    }
    for (long x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(0, bound);
}

}  // namespace

std::vector<IntVec> fiber(const IntMat& b, const IntVec& image) {
  const FiberEnumerator en(b);
  const auto f = en.enumerate(image);
  std::vector<IntVec> out;
  for (const auto& m : f.coords) out.push_back(en.element(f, m));
  std::sort(out.begin(), out.end());
  return out;
}

bool fiber_graph_connected(const IntMat& b, const std::vector<IntVec>& moves, const IntVec& image) {
  const FiberEnumerator en(b);
  const auto mus = normalized_moves(en, moves);
  return connected(en.enumerate(image).coords, mus);
}

FiberCertificate markov_verify(const IntMat& b, const std::vector<IntVec>& moves, long bound) {
  FiberCertificate cert;
  cert.bound = bound;
  if (b.rows() == 0) {
    for (const auto& g : moves)
      if (g.size() != b.cols()) throw ParameterError("move has wrong length");
    return cert;
  }
  const FiberEnumerator en(b);
  const auto mus = normalized_moves(en, moves);
  std::set<IntVec> images;
  for_each_bounded_vector(b.cols(), bound, [&](const IntVec& v) { images.insert(b * v); });
  for (const auto& img : images) {
    ++cert.fibers_checked;
    const auto f = en.enumerate(img);
    if (!connected(f.coords, mus)) {
      cert.connected = false;
      cert.failing_fiber = img;
      cert.failing_element = en.element(f, f.coords.front());
      return cert;
    }
  }
  return cert;
}

long default_markov_bound() {
  if (const char* env = std::getenv("TORHYP_MARKOV_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
    throw ParameterError("TORHYP_MARKOV_BOUND must be a nonnegative integer");
  }
  return 6;
}

IntVec embed(const Fan& fan, const IntVec& m) {
  IntVec out;
  for (const auto& u : fan.rays()) out.push_back(dot(m, u));
  return out;
}

std::vector<IntVec> section_moves(const TDivisor& eprime) {
  const auto pts = lattice_points(polytope_of(eprime));
  std::set<IntVec> moves;
  for (const auto& p : pts)
    for (const auto& q : pts)
      if (p != q) moves.insert(embed(eprime.fan(), sub(p, q)));
  return {moves.begin(), moves.end()};
}

ConnectedSectionsReport connected_sections_check(const TDivisor& e, const TDivisor& eprime, long bound,
                                                 bool verify_idp) {
  if (!is_nef(e) || !is_nef(eprime)) throw ParameterError("connected_sections_check needs nef divisors");
  ConnectedSectionsReport rep;
  if (verify_idp) {
    rep.idp = idp_check(e, eprime);
    if (!rep.idp->holds) return rep;
  }
  const Fan& fan = e.fan();
  rep.moves = section_moves(eprime);
  const GaleMatrix g = gale_matrix(fan, picard_basis(fan));
  rep.certificate = markov_verify(g.B, rep.moves, bound);
  rep.passes = rep.certificate.connected;
  return rep;
}

}  // namespace torhyp
