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

// Exact spectral tests. Everything that decides membership of eigenvalues in
// [-2,2] works on the integer characteristic polynomial; floating point only
// appears in eigenvalues_float, which exists for cross-checking.

#ifndef CYCLOMAT_SPECTRA_HPP_
#define CYCLOMAT_SPECTRA_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cyclomat/digraph.hpp"
#include "cyclomat/polynomial.hpp"

namespace cyclomat {

// det(xI - A), computed with the division-free Berkowitz recurrence.
IntPolynomial char_poly(const Digraph& g);

// An endpoint of nullopt means -inf (lo) or +inf (hi); its flag is ignored.
struct RootCount {
  std::optional<mpq_class> lo;
  std::optional<mpq_class> hi;
  bool open_lo = false;
  bool open_hi = false;
  std::size_t count = 0;
};

// Real roots of p in the interval, with multiplicity. Throws
// std::invalid_argument for the zero polynomial or lo > hi.
RootCount count_roots(const IntPolynomial& p, std::optional<mpq_class> lo,
                      std::optional<mpq_class> hi, bool open_lo, bool open_hi);

// Distinct real roots in increasing order, each inside (lo, hi] and alone
// there, with its multiplicity in p.
struct IsolatedRoot {
  mpq_class lo;
  mpq_class hi;
  std::size_t multiplicity = 0;
};
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p);

bool is_cyclotomic(const Digraph& g);
bool all_eigs_in_open(const Digraph& g);
bool is_plus_minus_two_only(const Digraph& g);

// lambda_1 <= mu_1 <= lambda_2 <= ... <= mu_{n-1} <= lambda_n, decided
// exactly. False when either polynomial has non-real roots. Throws
// std::invalid_argument unless deg(child) == deg(parent) - 1.
bool interlaces(const IntPolynomial& parent, const IntPolynomial& child);

// Ascending eigenvalues of the symmetrization. Throws NotSymmetrizableError.
std::vector<double> eigenvalues_float(const Digraph& g);

// Fast exact filter for symmetrizable g: true iff every eigenvalue lies in
// [-2,2] (or (-2,2) when `open`). Runs fraction-free symmetric elimination
// on 2I - A and 2I + A instead of building the characteristic polynomial;
// D^-1 A D has the same principal minors as A, so definiteness of the
// symmetrization can be read off A directly. The result is unspecified for
// matrices that are not symmetrizable.
bool spectrum_within_two(const Digraph& g, bool open);

}  // namespace cyclomat

#endif  // CYCLOMAT_SPECTRA_HPP_
