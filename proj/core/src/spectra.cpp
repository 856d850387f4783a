// Copyright 2026 The cyclomat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclomat/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclomat/symmetrize.hpp"

namespace cyclomat {

IntPolynomial char_poly(const Digraph& g) {
  const std::size_t n = g.order();
  auto a = [&](std::size_t i, std::size_t j) {
    return mpz_class(static_cast<long>(g(i, j)));
  };
  // Coefficients in descending order while the recurrence runs. Start from
  // the trailing 1x1 block and border it one row/column at a time.
  std::vector<mpz_class> c{1, -a(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t m = n - 1 - k;  // size of the trailing block M
    // col = (1, -a_kk, -R S, -R M S, ..., -R M^(m-1) S)
    std::vector<mpz_class> col(m + 2);
    col[0] = 1;
    col[1] = -a(k, k);
    std::vector<mpz_class> v(m), w(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    for (std::size_t p = 0; p < m; ++p) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot += a(k, k + 1 + i) * v[i];
      col[p + 2] = -dot;
      if (p + 1 == m) break;
      for (std::size_t i = 0; i < m; ++i) {
        w[i] = 0;
        for (std::size_t j = 0; j < m; ++j) w[i] += a(k + 1 + i, k + 1 + j) * v[j];
      }
      std::swap(v, w);
    }
    // Lower-triangular Toeplitz (m+2) x (m+1) matrix times c.
    std::vector<mpz_class> next(m + 2);
    for (std::size_t i = 0; i < m + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, m); ++j) next[i] += col[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Sturm machinery for every square-free factor of one polynomial.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& p) {
    const auto factors = square_free_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      parts_.push_back({sturm_chain(factors[i]), i + 1});
    }
  }

  // Roots in (lo, hi] counted with multiplicity; nullopt is infinite.
  std::size_t half_open(const std::optional<mpq_class>& lo,
                        const std::optional<mpq_class>& hi) const {
    std::size_t total = 0;
    for (const auto& part : parts_) {
      const std::size_t vlo = variations(part.chain, lo, false);
      const std::size_t vhi = variations(part.chain, hi, true);
      total += (vlo - vhi) * part.multiplicity;
    }
    return total;
  }

  // Multiplicity of x as a root.
  std::size_t at(const mpq_class& x) const {
    std::size_t total = 0;
    for (const auto& part : parts_)
      if (part.chain.front().sign_at(x) == 0) total += part.multiplicity;
    return total;
  }

 private:
  struct Part {
    std::vector<IntPolynomial> chain;
    std::size_t multiplicity;
  };

  static std::size_t variations(const std::vector<IntPolynomial>& chain,
                                const std::optional<mpq_class>& x,
                                bool infinity_is_positive) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain)
      s.push_back(x ? q.sign_at(*x) : q.sign_at_infinity(infinity_is_positive));
    return sign_changes(s);
  }

  std::vector<Part> parts_;
};

RootCount count_with(const RootCounter& rc, std::optional<mpq_class> lo,
                     std::optional<mpq_class> hi, bool open_lo, bool open_hi) {
  RootCount out{lo, hi, open_lo, open_hi, 0};
  if (lo && hi && *lo > *hi)
    throw std::invalid_argument("count_roots: lower endpoint exceeds upper");
  if (lo && hi && *lo == *hi) {
    out.count = (open_lo || open_hi) ? 0 : rc.at(*lo);
    return out;
  }
  std::size_t c = rc.half_open(lo, hi);
  if (lo && !open_lo) c += rc.at(*lo);
  if (hi && open_hi) c -= rc.at(*hi);
  out.count = c;
  return out;
}

mpz_class cauchy_bound(const IntPolynomial& p) {
  mpz_class m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpz_class(abs(p.coeff(k))));
  mpz_class lead = abs(p.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

// Intervals (lo, hi] each holding exactly one distinct root of square-free q.
std::vector<std::pair<mpq_class, mpq_class>> isolate(const IntPolynomial& q) {
  std::vector<std::pair<mpq_class, mpq_class>> out;
  if (q.degree() < 1) return out;
  const RootCounter rc(q);
  const mpq_class b(cauchy_bound(q));
  std::vector<std::pair<mpq_class, mpq_class>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const std::size_t c = rc.half_open(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    mpq_class mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace

RootCount count_roots(const IntPolynomial& p, std::optional<mpq_class> lo,
                      std::optional<mpq_class> hi, bool open_lo, bool open_hi) {
  if (p.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
  return count_with(RootCounter(p), std::move(lo), std::move(hi), open_lo, open_hi);
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  const RootCounter rc(p);
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  for (auto& [lo, hi] : isolate(square_free_part(p)))
    out.push_back({lo, hi, rc.half_open(lo, hi)});
  return out;
}

bool is_cyclotomic(const Digraph& g) {
  if (!is_symmetrizable(g)) return false;
  return count_roots(char_poly(g), mpq_class(-2), mpq_class(2), false, false).count ==
         g.order();
}

bool all_eigs_in_open(const Digraph& g) {
  if (!is_symmetrizable(g)) return false;
  return count_roots(char_poly(g), mpq_class(-2), mpq_class(2), true, true).count ==
         g.order();
}

bool is_plus_minus_two_only(const Digraph& g) {
  const Digraph sq = multiply(g, g);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (sq(i, j) != (i == j ? 4 : 0)) return false;
  return true;
}

bool interlaces(const IntPolynomial& parent, const IntPolynomial& child) {
  if (parent.is_zero() || child.is_zero() || child.degree() != parent.degree() - 1)
    throw std::invalid_argument("interlaces: child degree must be parent degree - 1");
  const std::size_t n = static_cast<std::size_t>(parent.degree());
  const RootCounter rp(parent);
  const RootCounter rc(child);
  // Walk the distinct roots of both polynomials in increasing order and spell
  // out each spectrum as a sorted list of root indices.
  std::vector<std::size_t> lambda, mu;
  std::size_t index = 0;
  for (const auto& [lo, hi] : isolate(square_free_part(parent * child))) {
    lambda.insert(lambda.end(), rp.half_open(lo, hi), index);
    mu.insert(mu.end(), rc.half_open(lo, hi), index);
    ++index;
  }
  if (lambda.size() != n || mu.size() != n - 1) return false;
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (lambda[k] > mu[k] || mu[k] > lambda[k + 1]) return false;
  return true;
}

std::vector<double> eigenvalues_float(const Digraph& g) {
  const SurdMatrix s = symmetrization(g);
  const std::size_t n = g.order();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          i == j ? static_cast<double>(g(i, i)) : s.value(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

struct Wide {
  using T = __int128;
  static bool mul(T a, T b, T* out) { return !__builtin_mul_overflow(a, b, out); }
  static bool sub(T a, T b, T* out) { return !__builtin_sub_overflow(a, b, out); }
  static int sgn(T a) { return (a > 0) - (a < 0); }
};

struct Big {
  using T = mpz_class;
  static bool mul(const T& a, const T& b, T* out) {
    *out = a * b;
    return true;
  }
  static bool sub(const T& a, const T& b, T* out) {
    *out = a - b;
    return true;
  }
  static int sgn(const T& a) { return ::sgn(a); }
};

// Fraction-free symmetric elimination deciding whether M (similar to a
// symmetric matrix by a positive diagonal) is positive semidefinite, or
// positive definite when `strict`. nullopt signals arithmetic overflow.
template <typename Ops>
std::optional<bool> semidefinite(std::vector<typename Ops::T> m, std::size_t n,
                                 bool strict) {
  using T = typename Ops::T;
  std::vector<char> alive(n, 1);
  T prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const T pivot = m[k * n + k];
    const int s = Ops::sgn(pivot);
    if (s < 0) return false;
    if (s == 0) {
      if (strict) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (alive[j] && (Ops::sgn(m[k * n + j]) != 0 || Ops::sgn(m[j * n + k]) != 0))
          return false;
      alive[k] = 0;
      continue;
    }
    alive[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive[j]) continue;
        T x, y, z;
        if (!Ops::mul(pivot, m[i * n + j], &x) ||
            !Ops::mul(m[i * n + k], m[k * n + j], &y) || !Ops::sub(x, y, &z))
          return std::nullopt;
        m[i * n + j] = z / prev;
      }
    }
    prev = pivot;
  }
  return true;
}

bool shifted_semidefinite(const Digraph& g, int shift_sign, bool strict) {
  const std::size_t n = g.order();
  std::vector<__int128> wide(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      wide[i * n + j] = (i == j ? 2 : 0) + static_cast<__int128>(shift_sign) * g(i, j);
  if (auto r = semidefinite<Wide>(wide, n, strict)) return *r;
  std::vector<mpz_class> big(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      big[i * n + j] = mpz_class(i == j ? 2 : 0) +
                       mpz_class(shift_sign) * mpz_class(static_cast<long>(g(i, j)));
  return *semidefinite<Big>(big, n, strict);
}

}  // namespace

bool spectrum_within_two(const Digraph& g, bool open) {
  return shifted_semidefinite(g, -1, open) && shifted_semidefinite(g, +1, open);
}

}  // namespace cyclomat
