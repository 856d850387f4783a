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

// Generators for the named digraphs. An arc pair written (x, y) on the edge
// i - j means a(i,j) = x and a(j,i) = y. Vertex orders, 0-indexed:
//
//   A_n, B_n, C_n, F4, G2, J_n, M_n, P_n+   the path, left to right
//   A~n                                     the (n+1)-cycle
//   D_n      leaves 0, 1 on vertex 2, then the path 2 .. n-1
//   D~n      leaves 0, 1 on 2, path 2 .. n-2, leaves n-1, n on n-2
//   E6..E~8  the horizontal chain left to right, then the branch outwards
//   I_n      path 0 .. n-3 (charge +1 at 0), leaves n-2, n-1 on n-3
//   B~n      chain 0 .. n-2 with (2,1) on its last edge, leaves n-1, n on 0
//   C~n      path with (1,2) first and (2,1) last; C~n' has (1,2) at both ends
//   F~4      path of five with (1,2) on the middle-right edge 2 - 3
//   G~2      path of three with (1,3) on edge 1 - 2
//   O4', O4pm, O4''   top row left to right, then bottom row
//   S8-      the four (2,1) edges of the cube left to right, lower end first
//   L_n, L_n', L_n+   top row T_1..T_r, bottom row B_1..B_r, left end, right end
//
// Ladder graphs: between consecutive rungs T_k - T_k+1 and T_k - B_k+1 are
// +1, B_k - B_k+1 and B_k - T_k+1 are -1. The surd graphs use the
// same orders as their integer counterparts.

#ifndef CYCLOMAT_FAMILIES_HPP_
#define CYCLOMAT_FAMILIES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclomat/digraph.hpp"

namespace cyclomat {

enum class Family {
  A, Atilde, D, Dtilde, E6, E7, E8, E6tilde, E7tilde, E8tilde,
  A1tilde, A1tilde_prime, O4prime, S8minus, L, Lprime, Lplus, A2pm, O4pm,
  Btilde, Ctilde, Ctilde_prime, F4tilde, G2tilde,
  B, C, F4, G2, I, J, M, Pplus, O4doubleprime, B2pm,
  A2G_pm, O4G_prime, O4G_pm, S8G_minus, LG, LGplus,
};

// `n` is the subscript: the order for plain families, one less than the
// order for tilded ones. Fixed-size families carry their own subscript.
struct FamilyId {
  Family family = Family::A;
  std::size_t n = 0;
  bool transposed = false;

  // n == 0 selects the built-in subscript of a fixed-size family.
  static FamilyId Of(Family f, std::size_t n = 0, bool transposed = false);
  bool operator==(const FamilyId&) const = default;
};

// All families in declaration order, and the spec-style identifier of each
// (e.g. "Ctilde_prime").
const std::vector<Family>& all_families();
std::string_view identifier(Family f);

bool is_surd_family(Family f);
bool is_valid(const FamilyId& id);
std::size_t order(const FamilyId& id);

// Throws std::invalid_argument when !is_valid(id) or id is a surd family.
Digraph generate(const FamilyId& id);
// Throws std::invalid_argument unless id is a valid family.
SurdMatrix generate_surd(const FamilyId& id);

// Every valid non-instance of order <= max_n, adding the transpose
// of families that are not equivalent to their transposes (C_n covers B_n).
std::vector<std::pair<FamilyId, Digraph>> catalog(std::size_t max_n);

// Short display name such as "C~4'", "L5+", "O4''", "A2pm" or "B3^T".
std::string display_name(const FamilyId& id);
// Accepts display names and identifiers, case-insensitively. For an
// identifier of a parametric family `n` must be given; a display name
// carries its own subscript. Throws std::invalid_argument.
FamilyId parse_family(std::string_view text, std::optional<std::size_t> n = std::nullopt);

}  // namespace cyclomat

#endif  // CYCLOMAT_FAMILIES_HPP_
