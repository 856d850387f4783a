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

// Core digraph model. A Digraph is a square integer matrix read as a
// weighted directed graph: a(i,i) is the charge of vertex i and a(i,j) the
// weight of the arc i -> j. Nothing here assumes symmetry; symmetry and sign
// symmetry are predicates.

#ifndef CYCLOMAT_DIGRAPH_HPP_
#define CYCLOMAT_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclomat {

using Entry = std::int64_t;

class Digraph {
 public:
  // The n x n zero matrix. n must be at least 1.
  explicit Digraph(std::size_t n);
  Digraph(std::initializer_list<std::initializer_list<Entry>> rows);
  static Digraph FromRows(const std::vector<std::vector<Entry>>& rows);
  // Row-major entries; entries.size() must equal n * n.
  static Digraph FromRowMajor(std::size_t n, std::vector<Entry> entries);

  std::size_t order() const { return n_; }
  Entry operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  Entry charge(std::size_t i) const { return entries_[i * n_ + i]; }
  void set(std::size_t i, std::size_t j, Entry value) {
    entries_[i * n_ + j] = value;
  }
  // Sets a(i,j) and a(j,i) in one call.
  void set_pair(std::size_t i, std::size_t j, Entry ij, Entry ji) {
    set(i, j, ij);
    set(j, i, ji);
  }

  std::span<const Entry> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const Digraph& other) const = default;

 private:
  Digraph(std::size_t n, std::vector<Entry> entries);

  std::size_t n_;
  std::vector<Entry> entries_;
};

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  // `sorted` must be strictly increasing.
  explicit VertexSet(std::vector<std::size_t> sorted);
  static VertexSet FromUnsorted(std::vector<std::size_t> indices);
  static VertexSet All(std::size_t n);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  std::size_t operator[](std::size_t k) const { return v_[k]; }
  bool contains(std::size_t v) const;
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<std::size_t>& indices() const { return v_; }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<std::size_t> v_;
};

// Symmetric matrix with entries sgn(t)*sqrt(|t|), stored through t.
class SurdMatrix {
 public:
  explicit SurdMatrix(std::size_t n);
  // Throws std::invalid_argument unless the t-matrix is symmetric.
  static SurdMatrix FromSquares(const Digraph& t);

  std::size_t order() const { return t_.order(); }
  // t(i,j) = sgn(s_ij) * s_ij^2.
  Entry t(std::size_t i, std::size_t j) const { return t_(i, j); }
  void set(std::size_t i, std::size_t j, Entry t_value);
  double value(std::size_t i, std::size_t j) const;
  // The integer t-matrix. Signed permutations act on it exactly as on the
  // represented surd matrix, which lets equivalence tooling work on it.
  const Digraph& squares() const { return t_; }

  bool operator==(const SurdMatrix&) const = default;

 private:
  explicit SurdMatrix(Digraph t) : t_(std::move(t)) {}
  Digraph t_;
};

int sign(Entry x);

bool is_sign_symmetric(const Digraph& g);
bool is_symmetric(const Digraph& g);
bool has_nonnegative_entries(const Digraph& g);
bool has_charge(const Digraph& g);
Digraph transpose(const Digraph& g);
Digraph negated(const Digraph& g);
// Exact A*B. Throws std::overflow_error if an entry leaves int64.
Digraph multiply(const Digraph& a, const Digraph& b);
// Principal submatrix on `keep`, in the order of `keep`.
// Throws std::invalid_argument for an empty set or an out-of-range index.
Digraph induced_subgraph(const Digraph& g, const VertexSet& keep);
// Principal submatrix in an arbitrary vertex order (no sorting).
Digraph induced_subgraph(const Digraph& g, std::span<const std::size_t> order);

// Strong connectivity following arcs with a(v_i, v_{i+1}) != 0.
bool is_connected(const Digraph& g);
// Strongly connected components, each sorted, listed by smallest vertex.
std::vector<VertexSet> connected_components(const Digraph& g);
// Components of the matrix with every asymmetric pair a_ij != a_ji zeroed.
std::vector<VertexSet> symmetric_components(const Digraph& g);

std::string to_string(const Digraph& g);

}  // namespace cyclomat

#endif  // CYCLOMAT_DIGRAPH_HPP_
