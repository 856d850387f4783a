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

#include "cyclomat/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclomat {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending)
    : c_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::FromInts(std::initializer_list<long> ascending) {
  std::vector<mpz_class> c;
  c.reserve(ascending.size());
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  // Horner on numerator and denominator separately keeps everything in Z:
  // sum c_k p^k q^(d-k).
  if (c_.empty()) return 0;
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = c_.back();
  mpz_class qpow = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[k] * qpow;
  }
  mpq_class out(acc, qpow);
  out.canonicalize();
  return out;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  return sgn(evaluate(x));
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(d));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& a = c_[k];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& a : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> c = p.coeffs();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

namespace {

// Dense polynomial over Q, ascending, trimmed. Degrees here are tiny, so
// the simplicity of field arithmetic wins over pseudo-division tricks.
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& a : p.coeffs()) r.emplace_back(a);
  return r;
}

IntPolynomial to_int(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& a : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& a : p) {
    mpq_class s = a * l;
    c.push_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

// a = q*b + r. b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  const std::size_t db = b.size() - 1;
  if (a.size() >= b.size()) q.assign(a.size() - db, mpq_class(0));
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

RatPoly monic(RatPoly p) {
  if (p.empty()) return p;
  mpq_class l = p.back();
  for (auto& a : p) a /= l;
  return p;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly c(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
  trim(c);
  return c;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return to_int(rat_gcd(to_rat(a), to_rat(b)));
}

std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("square_free_decomposition: zero polynomial");
  std::vector<IntPolynomial> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q.
  const RatPoly f = to_rat(p);
  const RatPoly fp = derivative(f);
  const RatPoly a0 = rat_gcd(f, fp);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(fp, a0).first;
  RatPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    RatPoly a = rat_gcd(b, d);
    out.push_back(to_int(a));
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
  const RatPoly f = to_rat(p);
  return to_int(divmod(f, rat_gcd(f, derivative(f))).first);
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<IntPolynomial> chain{square_free};
  RatPoly prev = to_rat(square_free);
  RatPoly cur = derivative(prev);
  while (!cur.empty()) {
    chain.push_back(to_int(cur));
    // to_int may flip sign through primitive_part; keep the true sign.
    if (sgn(cur.back()) < 0) chain.back() = IntPolynomial() - chain.back();
    RatPoly r = divmod(prev, cur).second;
    for (auto& a : r) a = -a;
    prev = std::move(cur);
    cur = std::move(r);
  }
  return chain;
}

}  // namespace cyclomat
