#include "toric/linalg.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <utility>

namespace toric {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::span<const LatticeVector> rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const LatticeVector> cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

LatticeVector IntMatrix::column(std::size_t j) const {
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  LatticeVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Primitive primitivize(const LatticeVector& v) {
  Int g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "cannot primitivize the zero vector");
  Primitive out{LatticeVector(v.size()), g};
  for (std::size_t i = 0; i < v.size(); ++i) out.primitive[i] = v[i] / g;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = s.D;
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    s.U.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    s.V.add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s;
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_op(i, t, -q);
        dirty = dirty || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_op(j, t, -q);
        dirty = dirty || d(t, j) != 0;
      }
      if (dirty) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m)};
  IntMatrix& H = h.H;
  IntMatrix& U = h.U;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t first = m;
    for (std::size_t i = r; i < m; ++i)
      if (H(i, c) != 0) {
        first = i;
        break;
      }
    if (first == m) continue;
    H.swap_rows(r, first);
    U.swap_rows(r, first);

    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      Int a0 = H(r, c), b0 = H(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a0.get_mpz_t(), b0.get_mpz_t());
      Int ag = a0 / g, bg = b0 / g;
      // [[s, t], [-b/g, a/g]] has determinant 1.
      for (IntMatrix* M : {&H, &U}) {
        for (std::size_t j = 0; j < M->cols(); ++j) {
          Int x = (*M)(r, j), y = (*M)(i, j);
          (*M)(r, j) = s * x + t * y;
          (*M)(i, j) = ag * y - bg * x;
        }
      }
    }
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      H.add_row_multiple(i, r, -q);
      U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return h;
}

namespace {

std::vector<LatticeVector> nonzero_hnf_rows(std::size_t cols, std::span<const LatticeVector> rows) {
  std::vector<LatticeVector> out;
  if (rows.empty()) return out;
  const auto h = hermite_normal_form(IntMatrix::from_rows(cols, rows));
  for (std::size_t i = 0; i < h.H.rows(); ++i) {
    auto row = h.H.row(i);
    if (!is_zero(row)) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<LatticeVector> kernel_lattice(const IntMatrix& a) {
  const auto h = hermite_normal_form(a.transpose());
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < h.H.rows(); ++i)
    if (is_zero(h.H.row(i))) basis.push_back(h.U.row(i));
  return nonzero_hnf_rows(a.cols(), basis);
}

namespace {

struct Echelon {
  std::vector<std::vector<Rat>> rows;  // reduced row echelon form, augmented
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form of [A | b] (b may be empty).
Echelon rref(const IntMatrix& a, const RationalVector* b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + (b ? 1 : 0);
  Echelon e;
  e.rows.assign(m, std::vector<Rat>(width));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = a(i, j);
    if (b) e.rows[i][n] = (*b)[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (e.rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p == m) continue;
    std::swap(e.rows[r], e.rows[p]);
    const Rat inv = 1 / e.rows[r][c];
    for (auto& x : e.rows[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || e.rows[i][c] == 0) continue;
      const Rat f = e.rows[i][c];
      for (std::size_t j = c; j < width; ++j) e.rows[i][j] -= f * e.rows[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const auto e = rref(a, &b);
  const std::size_t n = a.cols();
  for (std::size_t i = e.pivots.size(); i < a.rows(); ++i)
    if (e.rows[i][n] != 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rows[k][n];
  return x;
}

std::size_t matrix_rank(const IntMatrix& a) { return rref(a, nullptr).pivots.size(); }

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const Int det = determinant(a);
  if (det != 1 && det != -1) throw Error(ErrorKind::Internal, "matrix is not unimodular");
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    auto x = solve_rational(a, e);
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1) throw Error(ErrorKind::Internal, "inverse of unimodular matrix is not integral");
      inv(i, j) = (*x)[i].get_num();
    }
  }
  return inv;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different lengths");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const LatticeVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different lengths");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

LatticeVector negated(const LatticeVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

LatticeVector scaled(const LatticeVector& v, const Int& c) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

LatticeVector primitive_direction(const RationalVector& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  if (is_zero(out)) return out;
  return primitivize(out).primitive;
}

Int inf_norm(const LatticeVector& v) {
  Int m = 0;
  for (const auto& x : v) m = std::max(m, Int(abs(x)));
  return m;
}

std::vector<LatticeVector> orthogonal_lattice(std::size_t rank, std::span<const LatticeVector> gens) {
  return kernel_lattice(IntMatrix::from_rows(rank, gens));
}

std::vector<LatticeVector> saturated_basis(std::size_t rank, std::span<const LatticeVector> gens) {
  const auto perp = orthogonal_lattice(rank, gens);
  return orthogonal_lattice(rank, perp);
}

LatticeVector project_away(const LatticeVector& v, std::span<const LatticeVector> basis) {
  if (basis.empty()) return is_zero(v) ? v : primitivize(v).primitive;
  const std::size_t k = basis.size();
  IntMatrix gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto c = solve_rational(gram, rhs);
  if (!c) throw Error(ErrorKind::Internal, "projection system is inconsistent");
  RationalVector out = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*c)[i] * basis[i][j];
  return primitive_direction(out);
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace toric
