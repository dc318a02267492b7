#include "torhyp/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace torhyp {

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ParameterError("IntMat: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParameterError("IntMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ParameterError("IntMat::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMat& a, const IntMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw ParameterError("IntMat product: dimension mismatch");
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMat& a, const IntVec& v) {
  if (a.cols_ != v.size()) throw ParameterError("IntMat * vector: dimension mismatch");
  IntVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']';
}

IntVec SnfDecomposition::invariant_factors() const {
  IntVec out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

IntVec SnfDecomposition::cokernel_torsion() const {
  IntVec out;
  for (std::size_t i = 0; i < rank; ++i)
    if (S(i, i) > 1) out.push_back(S(i, i));
  return out;
}

namespace {

// Moves the smallest nonzero entry of the trailing block to (t, t).
bool bring_min_pivot(IntMat& s, IntMat& u, IntMat& v, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (!best || abs(s(i, j)) < abs(s(best->first, best->second))) best = {i, j};
    }
  if (!best) return false;
  s.swap_rows(t, best->first);
  u.swap_rows(t, best->first);
  s.swap_cols(t, best->second);
  v.swap_cols(t, best->second);
  return true;
}

// x a + y b = g with the unimodular pair (x y; -b/g a/g).
struct Bezout {
  Int x, y, a_g, b_g;
};

Bezout bezout(const Int& a, const Int& b) {
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Bezout{x, y, a / g, b / g};
}

// Rows (r, k) <- (x r + y k, -b/g r + a/g k).
void combine_rows(IntMat& m, std::size_t r, std::size_t k, const Bezout& e) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Int p = m(r, j), q = m(k, j);
    m(r, j) = e.x * p + e.y * q;
    m(k, j) = e.a_g * q - e.b_g * p;
  }
}

void combine_cols(IntMat& m, std::size_t c, std::size_t k, const Bezout& e) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int p = m(i, c), q = m(i, k);
    m(i, c) = e.x * p + e.y * q;
    m(i, k) = e.a_g * q - e.b_g * p;
  }
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMat& m) {
  IntMat s = m;
  IntMat u = IntMat::identity(m.rows());
  IntMat v = IntMat::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!bring_min_pivot(s, u, v, t)) break;
    for (;;) {
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        if (s(i, t) % s(t, t) == 0) {
          const Int q = s(i, t) / s(t, t);
          s.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
          continue;
        }
        const Bezout e = bezout(s(t, t), s(i, t));
        combine_rows(s, t, i, e);
        combine_rows(u, t, i, e);
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        if (s(t, j) % s(t, t) == 0) {
          const Int q = s(t, j) / s(t, t);
          s.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
          continue;
        }
        const Bezout e = bezout(s(t, t), s(t, j));
        combine_cols(s, t, j, e);
        combine_cols(v, t, j, e);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (s(i, t) != 0) clean = false;
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfDecomposition{std::move(u), std::move(s), std::move(v), t};
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  std::vector<IntVec> basis;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) basis.push_back(snf.V.col(j));
  return basis;
}

namespace {

struct Echelon {
  std::vector<RatVec> rows;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form over Q of the augmented matrix [m | b].
Echelon rref(const IntMat& m, const IntVec* b) {
  const std::size_t extra = b ? 1 : 0;
  std::vector<RatVec> a(m.rows(), RatVec(m.cols() + extra));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    if (b) a[i][m.cols()] = (*b)[i];
  }
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

}  // namespace

ExactSolution solve_exact(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows()) throw ParameterError("solve_exact: right-hand side has wrong length");
  const Echelon e = rref(m, &b);
  ExactSolution sol;
  const std::size_t r = e.pivots.size();
  for (std::size_t i = r; i < e.rows.size(); ++i)
    if (e.rows[i][m.cols()] != 0) {
      sol.status = ExactSolution::Status::Inconsistent;
      return sol;
    }
  sol.x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r; ++i) sol.x[e.pivots[i]] = e.rows[i][m.cols()];
  sol.status = r == m.cols() ? ExactSolution::Status::Unique : ExactSolution::Status::Underdetermined;
  return sol;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows()) throw ParameterError("solve_integer: right-hand side has wrong length");
  const SnfDecomposition snf = smith_normal_form(m);
  const IntVec ub = snf.U * b;
  IntVec y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.S(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.S(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

std::size_t rank(const IntMat& m) { return rref(m, nullptr).pivots.size(); }

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw ParameterError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  // Bareiss fraction-free elimination.
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ParameterError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ParameterError("add: length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ParameterError("sub: length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec cross(const IntVec& a, const IntVec& b) {
  if (a.size() != 3 || b.size() != 3) throw ParameterError("cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

IntVec scale(const Int& k, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

std::optional<IntVec> to_integers(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    out[i] = v[i].get_num();
  }
  return out;
}

std::string format(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format(const Int& z) { return z.get_str(); }

}  // namespace torhyp
