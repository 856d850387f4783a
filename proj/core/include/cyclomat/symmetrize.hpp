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

// Symmetrizability. A matrix B is symmetrizable when D^-1 B D is symmetric
// for a positive diagonal D; equivalently the balancing condition
//
//     b_ij * d_j^2 == b_ji * d_i^2   for all i, j
//
// holds for positive d_i^2. For integer matrices the d_i^2 can be taken to
// be integers. The decision procedure labels each component breadth first
// with exact rational d_i^2 and reports the first inconsistent cycle.

#ifndef CYCLOMAT_SYMMETRIZE_HPP_
#define CYCLOMAT_SYMMETRIZE_HPP_

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclomat/digraph.hpp"

namespace cyclomat {

// Per-vertex d_i^2. Every entry is >= 1 and the gcd over each connected
// component is 1.
struct Symmetrizer {
  std::vector<mpz_class> dsq;
};

// A directed cycle i_1 -> ... -> i_t -> i_1 whose forward arc product differs
// from the product of the reversed arcs.
struct CycleViolation {
  std::vector<std::size_t> cycle;
  mpz_class forward_product;
  mpz_class backward_product;
};

// Raised when a symmetrizable input is required but not given. Carries the
// cycle certificate when the failure is a cycle-condition failure; an empty
// `violation` means the input was not sign symmetric.
class NotSymmetrizableError : public std::domain_error {
 public:
  NotSymmetrizableError(const std::string& what,
                        std::optional<CycleViolation> violation)
      : std::domain_error(what), violation_(std::move(violation)) {}
  const std::optional<CycleViolation>& violation() const { return violation_; }

 private:
  std::optional<CycleViolation> violation_;
};

// nullopt when every cycle balances. Throws std::invalid_argument when `g`
// is not sign symmetric.
std::optional<CycleViolation> check_cycle_condition(const Digraph& g);

bool is_symmetrizable(const Digraph& g);

// Throws NotSymmetrizableError.
Symmetrizer compute_symmetrizer(const Digraph& g);

// t_ij = sgn(a_ij) * a_ij * a_ji off the diagonal, t_ii = sgn(a_ii) * a_ii^2.
// Throws NotSymmetrizableError.
SurdMatrix symmetrization(const Digraph& g);

// Throws std::invalid_argument on a length mismatch.
bool balancing_holds(const Digraph& g, const Symmetrizer& d);

}  // namespace cyclomat

#endif  // CYCLOMAT_SYMMETRIZE_HPP_
