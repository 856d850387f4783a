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

// Exhaustive search for connected symmetrizable integer matrices with all
// eigenvalues in [-2,2] (or (-2,2)), grown one vertex at a time. Every
// admissible matrix of order k+1 has an admissible connected induced
// subgraph of order k (delete a non-cut vertex; eigenvalues interlace), so
// growing representatives level by level and deduplicating by canonical
// key reaches every equivalence class.
//
// Entry bounds come from the spectrum alone: diag(S^2) <= 4 for the
// symmetrization S, i.e. a_ii^2 + sum_j a_ij*a_ji <= 4 on every row (<= 3
// for the open interval). This forces |charge| <= 1 next to any edge and
// pairs with a_ij*a_ji <= 4.

#ifndef CYCLOMAT_CLASSIFY_HPP_
#define CYCLOMAT_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclomat/digraph.hpp"
#include "cyclomat/equivalence.hpp"
#include "cyclomat/families.hpp"

namespace cyclomat {

struct SearchConstraints {
  std::size_t max_order = 1;
  // Report only nonsymmetric representatives. The search itself still grows
  // through symmetric matrices.
  bool require_nonsymmetric = false;
  bool require_nonnegative = false;
  bool allow_charges = true;
  bool open_interval = false;
};

struct EnumerateOptions {
  std::size_t cap = 10;
  // 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 1;
};

class SearchCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Representative {
  Digraph matrix = Digraph(1);  // admissible under the constraints (nonnegative if asked)
  CanonicalKey key;
  bool maximal = false;
  std::optional<FamilyId> family;  // nullopt: not a listed family
  std::string label;               // family display name, or a special name
};

struct ClassificationReport {
  std::string title;
  SearchConstraints constraints;
  std::vector<Representative> representatives;  // by order, then key
  std::vector<std::size_t> counts;               // counts[k]: reps of order k
  // Filled in by the verify_* functions.
  bool passed = true;
  std::vector<std::string> missing;
  std::vector<std::string> unlisted;
  std::vector<std::string> notes;
};

// A charge of +-1 somewhere on the diagonal.
bool is_charged(const Digraph& g);

// Admissible one-vertex extensions of g (new vertex last), not deduplicated.
// g must itself be admissible and connected.
std::vector<Digraph> extensions(const Digraph& g, const SearchConstraints& c);
bool is_maximal(const Digraph& g, const SearchConstraints& c);

// Throws SearchCapError when c.max_order exceeds options.cap.
ClassificationReport enumerate(const SearchConstraints& c, const EnumerateOptions& options = {});

ClassificationReport verify_theorem_1(std::size_t max_order, const EnumerateOptions& options = {});
ClassificationReport verify_theorem_2(std::size_t max_order, const EnumerateOptions& options = {});
ClassificationReport verify_corollary_1(std::size_t max_order, const EnumerateOptions& options = {});
ClassificationReport verify_corollary_3(std::size_t max_order, const EnumerateOptions& options = {});
ClassificationReport verify_corollary_5(std::size_t max_order, const EnumerateOptions& options = {});

std::string to_text(const ClassificationReport& r);
// Keys sorted; orders map to lists of {matrix, family, maximal}.
std::string to_json(const ClassificationReport& r);

}  // namespace cyclomat

#endif  // CYCLOMAT_CLASSIFY_HPP_
