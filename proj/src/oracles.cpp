#include "toric/oracles.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace toric::oracle {

namespace {

// Calls f on every integer vector of length n with entries in [-bound, bound].
template <class F>
void for_each_box_point(std::size_t n, long bound, F&& f) {
  std::vector<long> x(n, -bound);
  LatticeVector v(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
    f(v);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) return;
    ++x[i];
  }
}

bool in_dual(const Cone& sigma, const LatticeVector& m) {
  for (const auto& r : sigma.rays())
    if (dot(m, r) < 0) return false;
  for (const auto& l : sigma.lineality())
    if (dot(m, l) != 0) return false;
  return true;
}

// Laplace expansion; only used on tiny matrices.
Int minor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const Int term = m[0][j] * minor_det(sub);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Exact segment / cone test on small integers.
using i128 = __int128;

struct SmallHRep {
  std::vector<std::vector<long long>> ineqs, eqs;
};

long long to_ll(const Int& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::Internal, "oracle coordinates too large");
  return x.get_si();
}

SmallHRep small(const HRep& h) {
  SmallHRep s;
  for (const auto& n : h.inequalities) {
    std::vector<long long> v;
    for (const auto& x : n) v.push_back(to_ll(x));
    s.ineqs.push_back(std::move(v));
  }
  for (const auto& n : h.equations) {
    std::vector<long long> v;
    for (const auto& x : n) v.push_back(to_ll(x));
    s.eqs.push_back(std::move(v));
  }
  return s;
}

i128 sdot(const std::vector<long long>& a, const std::vector<long long>& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += i128(a[i]) * b[i];
  return s;
}

bool point_in(const SmallHRep& h, const std::vector<long long>& x) {
  for (const auto& e : h.eqs)
    if (sdot(e, x) != 0) return false;
  for (const auto& n : h.ineqs)
    if (sdot(n, x) < 0) return false;
  return true;
}

// Whether a + t (b - a), t in [0, 1], meets the cone. Each constraint is
// alpha + t beta (>= or ==) 0; the feasible t-set is an interval kept as
// fractions lo = lo_n / lo_d, hi = hi_n / hi_d with positive denominators.
bool segment_meets(const SmallHRep& h, const std::vector<long long>& a, const std::vector<long long>& b) {
  i128 lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 1;
  auto raise_lo = [&](i128 n, i128 d) {
    if (n * lo_d > lo_n * d) lo_n = n, lo_d = d;
  };
  auto lower_hi = [&](i128 n, i128 d) {
    if (n * hi_d < hi_n * d) hi_n = n, hi_d = d;
  };
  auto constrain = [&](const std::vector<long long>& c, bool equality) {
    const i128 alpha = sdot(c, a);
    const i128 beta = sdot(c, b) - alpha;
    if (beta == 0) return equality ? alpha == 0 : alpha >= 0;
    // root t0 = -alpha / beta
    i128 n = -alpha, d = beta;
    if (d < 0) n = -n, d = -d;
    if (equality) {
      raise_lo(n, d);
      lower_hi(n, d);
    } else if (beta > 0) {
      raise_lo(n, d);
    } else {
      lower_hi(n, d);
    }
    return true;
  };
  for (const auto& e : h.eqs)
    if (!constrain(e, true)) return false;
  for (const auto& n : h.ineqs)
    if (!constrain(n, false)) return false;
  return lo_n * hi_d <= hi_n * lo_d;
}

std::size_t sample_components(const std::vector<SmallHRep>& cones, std::size_t rank, std::size_t count,
                              std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  constexpr double kScale = 1e6;

  std::vector<std::vector<long long>> pts;
  std::vector<std::vector<double>> unit;
  while (pts.size() < count) {
    std::vector<double> g(rank);
    double norm = 0;
    for (auto& x : g) {
      x = normal(gen);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;
    std::vector<long long> p(rank);
    std::vector<double> u(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      p[i] = std::llround(g[i] / norm * kScale);
      u[i] = g[i] / norm;
    }
    if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; })) continue;
    const bool covered = std::any_of(cones.begin(), cones.end(), [&](const SmallHRep& h) { return point_in(h, p); });
    pts.push_back(std::move(p));
    unit.push_back(std::move(u));
    if (covered) pts.back().clear();  // keep the stream aligned; drop later
  }

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!pts[i].empty()) idx.push_back(i);
  std::vector<std::size_t> parent(idx.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto connect = [&](std::size_t i, std::size_t j) {
    const auto& a = pts[idx[i]];
    const auto& b = pts[idx[j]];
    for (const auto& h : cones)
      if (segment_meets(h, a, b)) return;
    parent[find(i)] = find(j);
  };

  if (rank == 2) {
    // Neighbours around the circle.
    std::vector<std::size_t> order(idx.size());
    std::iota(order.begin(), order.end(), 0);
    auto angle = [&](std::size_t i) { return std::atan2(unit[idx[i]][1], unit[idx[i]][0]); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) connect(order[k], order[k + 1]);
    if (order.size() > 2) connect(order.back(), order.front());
  } else {
    const double threshold = 3.0 * std::sqrt(4.0 * std::numbers::pi / static_cast<double>(count));
    const double min_cos = std::cos(threshold);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        double c = 0;
        for (std::size_t k = 0; k < rank; ++k) c += unit[idx[i]][k] * unit[idx[j]][k];
        if (c >= min_cos && find(i) != find(j)) connect(i, j);
      }
  }
  std::size_t clusters = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++clusters;
  return clusters;
}

}  // namespace

std::set<LatticeVector> dual_lattice_oracle(const Cone& sigma, unsigned bound) {
  std::set<LatticeVector> out;
  for_each_box_point(sigma.rank(), bound, [&](const LatticeVector& m) {
    if (in_dual(sigma, m)) out.insert(m);
  });
  return out;
}

std::set<LatticeVector> hilbert_bruteforce(const Cone& sigma, unsigned bound) {
  const std::size_t p = sigma.rank();
  const auto points = dual_lattice_oracle(sigma, bound);
  auto is_unit = [&](const LatticeVector& m) { return in_dual(sigma, negated(m)); };

  std::vector<LatticeVector> units, nonunits;
  for (const auto& m : points) {
    if (is_zero(m)) continue;
    (is_unit(m) ? units : nonunits).push_back(m);
  }

  // Unit lattice in Hermite form.
  std::vector<LatticeVector> unit_basis;
  if (!units.empty()) {
    const auto h = hermite_normal_form(IntMatrix::from_rows(p, units)).H;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (!is_zero(h.row(i))) unit_basis.push_back(h.row(i));
  }
  auto reduce = [&](LatticeVector x) {
    for (const auto& u : unit_basis) {
      std::size_t c = 0;
      while (u[c] == 0) ++c;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), x[c].get_mpz_t(), u[c].get_mpz_t());
      x = sub(x, scaled(u, q));
    }
    return x;
  };

  std::set<LatticeVector> out;
  for (const auto& u : unit_basis) {
    out.insert(u);
    out.insert(negated(u));
  }
  // x is reducible when x = y + z with y, z non-units of the semigroup.
  for (const auto& x : nonunits) {
    const bool reducible = std::any_of(nonunits.begin(), nonunits.end(), [&](const LatticeVector& y) {
      const auto z = sub(x, y);
      return !is_zero(z) && in_dual(sigma, z) && !is_unit(z);
    });
    if (!reducible) out.insert(reduce(x));
  }
  return out;
}

HRep facets_bruteforce(std::size_t rank, const std::vector<LatticeVector>& gens) {
  HRep h;
  std::vector<LatticeVector> nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(g);
  h.equations = kernel_lattice(IntMatrix::from_rows(rank, nonzero));
  const std::size_t d = matrix_rank(IntMatrix::from_rows(rank, nonzero));
  if (d == 0) return h;

  std::set<LatticeVector> seen;
  for (const auto& subset : combinations(nonzero.size(), d - 1)) {
    std::vector<LatticeVector> rows;
    for (auto i : subset) rows.push_back(nonzero[i]);
    if (matrix_rank(IntMatrix::from_rows(rank, rows)) != d - 1) continue;
    // Functionals vanishing on the subset; any one that is not a span
    // equation cuts a hyperplane of the span through the subset.
    for (const auto& n : kernel_lattice(IntMatrix::from_rows(rank, rows))) {
      bool pos = false, neg = false;
      for (const auto& g : nonzero) {
        const Int v = dot(n, g);
        pos = pos || v > 0;
        neg = neg || v < 0;
      }
      if (!pos && !neg) continue;  // a span equation
      if (pos && neg) break;       // hyperplane crosses the cone
      const auto oriented = primitivize(neg ? negated(n) : n).primitive;
      // Normalize modulo the span equations so equal facets compare equal.
      std::vector<Int> key;
      for (const auto& g : nonzero) key.push_back(dot(oriented, g));
      const auto k = primitivize(key).primitive;
      if (seen.insert(k).second) h.inequalities.push_back(oriented);
      break;
    }
  }
  return h;
}

SamplingResult component_sampling_oracle(const Fan& fan, const OracleConfig& cfg) {
  if (fan.rank() != 2 && fan.rank() != 3) throw Error(ErrorKind::RankTooSmall, "sampling oracle supports ranks 2 and 3");
  std::vector<SmallHRep> cones;
  for (const auto& c : fan.max_cones()) cones.push_back(small(facets_bruteforce(fan.rank(), c.rays())));
  const auto n1 = sample_components(cones, fan.rank(), cfg.sample_count, cfg.seed);
  const auto n2 = sample_components(cones, fan.rank(), 2 * cfg.sample_count, cfg.seed + 1);
  return {n1, n1 == n2};
}

std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    for (const auto& rs : combinations(a.rows(), k))
      for (const auto& cs : combinations(a.cols(), k)) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rs[i], cs[j]);
        const Int det = minor_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::vector<LatticeVector> kernel_bruteforce(const IntMatrix& a, unsigned bound) {
  std::vector<LatticeVector> out;
  for_each_box_point(a.cols(), bound, [&](const LatticeVector& x) {
    if (is_zero(a * x)) out.push_back(x);
  });
  return out;
}

}  // namespace toric::oracle
