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

#ifndef CYCLOMAT_POLYNOMIAL_HPP_
#define CYCLOMAT_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace cyclomat {

// Polynomial with arbitrary-precision integer coefficients, lowest degree
// first. The zero polynomial has no coefficients and degree -1; otherwise
// the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  static IntPolynomial FromInts(std::initializer_list<long> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : mpz_class(0);
  }

  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  // Sign of p(x) as x -> +inf (positive) or -inf.
  int sign_at_infinity(bool positive) const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  // e.g. "x^3 - 4*x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPolynomial& p);
// p / content, with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// Square-free decomposition: p = c * prod_i factors[i]^(i+1), every factor
// primitive and square free, pairwise coprime. Factors may be constant 1.
std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p);
// The product of the distinct irreducible factors of p, primitive.
IntPolynomial square_free_part(const IntPolynomial& p);
// Sturm chain p, p', -rem(...) ... scaled by positive constants.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& square_free);

}  // namespace cyclomat

#endif  // CYCLOMAT_POLYNOMIAL_HPP_
