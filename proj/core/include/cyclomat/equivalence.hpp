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

// Equivalence under signed permutations and global negation: A ~ B when
// P^T A P = +-B for a signed permutation matrix P. Transposition is not part
// of the group; equivalent_to_transpose asks that question separately.

#ifndef CYCLOMAT_EQUIVALENCE_HPP_
#define CYCLOMAT_EQUIVALENCE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cyclomat/digraph.hpp"

namespace cyclomat {

// Vertex i of the source lands on perm[i] with sign signs[i]; negate is the
// global +-1. apply() computes b[perm[i]][perm[j]] = negate*s_i*s_j*a[i][j].
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  int negate = 1;

  static SignedPermutation Identity(std::size_t n);
  std::size_t size() const { return perm.size(); }
  // perm is a bijection, signs are +-1, negate is +-1.
  bool valid() const;
  bool operator==(const SignedPermutation&) const = default;
};

// Throws std::invalid_argument on a size mismatch or an invalid p.
Digraph apply(const Digraph& g, const SignedPermutation& p);
// Throws std::invalid_argument on a length mismatch or a non-unit sign.
Digraph sign_switch(const Digraph& g, const std::vector<int>& signs);
// apply(g, compose(p, q)) == apply(apply(g, q), p).
SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
SignedPermutation inverse(const SignedPermutation& p);

// Complete invariant: two digraphs share a key iff they are equivalent.
struct CanonicalKey {
  std::size_t n = 0;
  std::vector<Entry> code;
  bool operator==(const CanonicalKey&) const = default;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  Digraph matrix;                 // apply(g, witness)
  SignedPermutation witness;
};

CanonicalForm canonicalize(const Digraph& g);
CanonicalKey canonical_form(const Digraph& g);
// The t-matrix carries the signs of the surd entries, so canonicalising it
// decides equivalence of the represented surd matrices.
CanonicalKey canonical_form(const SurdMatrix& s);

// A p with apply(a, p) == b, if one exists.
std::optional<SignedPermutation> find_equivalence(const Digraph& a, const Digraph& b);
bool are_equivalent(const Digraph& a, const Digraph& b);
bool are_equivalent(const SurdMatrix& a, const SurdMatrix& b);
bool equivalent_to_transpose(const Digraph& g);

// Moduli of arc weights read along every induced path with between 2 and
// max_len vertices, in both directions. With `with_charges` the moduli of
// the charges are interleaved (|c_1|, |a_12|, |c_2|, ...) and single
// vertices contribute (|c|). Throws std::invalid_argument if max_len < 1.
std::set<std::vector<Entry>> weight_modulus_sequences(const Digraph& g,
                                                      std::size_t max_len,
                                                      bool with_charges = false);

// Embedding of `small` as an induced subgraph of `big` up to equivalence:
// small[i][j] == negate * signs[i] * signs[j] * big[image[i]][image[j]].
struct Embedding {
  std::vector<std::size_t> image;
  std::vector<int> signs;
  int negate = 1;
};
std::optional<Embedding> find_embedding(const Digraph& small, const Digraph& big);

}  // namespace cyclomat

#endif  // CYCLOMAT_EQUIVALENCE_HPP_
