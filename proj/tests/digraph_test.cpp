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

#include "cyclomat/digraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cyclomat/families.hpp"
#include "oracles.hpp"

namespace cyclomat {
namespace {

const Digraph kB2{{0, 1}, {2, 0}};
const Digraph kG2{{0, 1}, {3, 0}};
// Rows as printed for the 4-vertex ladder end piece.
const Digraph kO4{{0, -1, 1, 0}, {-1, 0, 0, 1}, {3, 0, 0, 1}, {0, 3, 1, 0}};

Digraph block_sum(const Digraph& a, const Digraph& b) {
  Digraph g(a.order() + b.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) g.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j) g.set(a.order() + i, a.order() + j, b(i, j));
  return g;
}

TEST(Digraph, ConstructionAndAccess) {
  EXPECT_THROW(Digraph(0), std::invalid_argument);
  EXPECT_THROW(Digraph::FromRows({{1, 2}, {3}}), std::invalid_argument);
  EXPECT_THROW(Digraph::FromRowMajor(2, {1, 2, 3}), std::invalid_argument);
  const Digraph g = Digraph::FromRowMajor(2, {1, 2, 3, 4});
  EXPECT_EQ(g(0, 1), 2);
  EXPECT_EQ(g(1, 0), 3);
  EXPECT_EQ(g.charge(1), 4);
  EXPECT_EQ(g, Digraph({{1, 2}, {3, 4}}));
}

TEST(Digraph, SignSymmetry) {
  EXPECT_TRUE(is_sign_symmetric(kB2));
  EXPECT_FALSE(is_sign_symmetric(Digraph{{0, 1}, {-1, 0}}));
  EXPECT_FALSE(is_sign_symmetric(Digraph{{0, 0}, {5, 0}}));
}

TEST(Digraph, Symmetry) {
  EXPECT_TRUE(is_symmetric(Digraph{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_symmetric(kB2));
  EXPECT_TRUE(is_symmetric(Digraph{{7}}));
}

TEST(Digraph, TransposeAndNegation) {
  EXPECT_EQ(transpose(kB2), Digraph({{0, 2}, {1, 0}}));
  EXPECT_EQ(transpose(Digraph{{1, 1}, {2, -1}}), Digraph({{1, 2}, {1, -1}}));
  const Digraph s{{0, 1}, {1, 0}};
  EXPECT_EQ(transpose(s), s);
  EXPECT_EQ(negated(kB2), Digraph({{0, -1}, {-2, 0}}));
}

TEST(Digraph, Multiply) {
  EXPECT_EQ(multiply(kB2, kB2), Digraph({{2, 0}, {0, 2}}));
  EXPECT_THROW(multiply(kB2, Digraph(3)), std::invalid_argument);
}

TEST(Digraph, InducedSubgraph) {
  EXPECT_EQ(induced_subgraph(kO4, VertexSet::All(4)), kO4);
  EXPECT_EQ(induced_subgraph(kO4, VertexSet({0, 2})), Digraph({{0, 1}, {3, 0}}));
  EXPECT_EQ(induced_subgraph(kB2, VertexSet({1})), Digraph({{0}}));
  const std::vector<std::size_t> order{2, 0};
  EXPECT_EQ(induced_subgraph(kO4, order), Digraph({{0, 3}, {1, 0}}));
  EXPECT_THROW(induced_subgraph(kB2, VertexSet({5})), std::invalid_argument);
}

TEST(Digraph, VertexSet) {
  EXPECT_THROW(VertexSet({2, 1}), std::invalid_argument);
  const VertexSet s = VertexSet::FromUnsorted({3, 1, 3});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(Digraph, Connectivity) {
  EXPECT_TRUE(is_connected(Digraph{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_connected(Digraph(2)));
  EXPECT_FALSE(is_connected(block_sum(kB2, kB2)));
  EXPECT_TRUE(is_connected(Digraph{{5}}));
}

TEST(Digraph, ConnectedComponents) {
  EXPECT_EQ(connected_components(kO4).size(), 1u);
  EXPECT_EQ(connected_components(Digraph(3)).size(), 3u);
  const auto parts = connected_components(block_sum(kB2, kG2));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].indices(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(parts[1].indices(), (std::vector<std::size_t>{2, 3}));
}

TEST(Digraph, SymmetricComponents) {
  const Digraph path{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(symmetric_components(path).size(), 1u);
  EXPECT_EQ(symmetric_components(kB2).size(), 2u);
  // Asymmetric pairs at both ends of a five-vertex chain.
  const Digraph chain = generate(FamilyId::Of(Family::Ctilde_prime, 4));
  const auto parts = symmetric_components(chain);
  ASSERT_EQ(parts.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const VertexSet& p : parts) sizes.push_back(p.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3}));
}

TEST(Digraph, RandomConnectivityAgreesWithOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 7;
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng) == 0) g.set_pair(i, j, 1, 2);
    EXPECT_EQ(is_connected(g), oracle::connected(g));
    std::size_t total = 0;
    for (const VertexSet& c : connected_components(g)) total += c.size();
    EXPECT_EQ(total, n);
  }
}

TEST(Digraph, ToString) {
  EXPECT_FALSE(to_string(kB2).empty());
}

}  // namespace
}  // namespace cyclomat
