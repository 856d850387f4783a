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

#include "cyclomat/symmetrize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "cyclomat/families.hpp"
#include "oracles.hpp"

namespace cyclomat {
namespace {

std::vector<mpz_class> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(CycleCondition, TreesAlwaysBalance) {
  EXPECT_FALSE(check_cycle_condition(generate(FamilyId::Of(Family::B, 3))));
  EXPECT_FALSE(check_cycle_condition(generate(FamilyId::Of(Family::Btilde, 5))));
}

TEST(CycleCondition, FourCycleWithSurdEdges) {
  const Digraph o4{{0, -1, 1, 0}, {-1, 0, 0, 1}, {3, 0, 0, 1}, {0, 3, 1, 0}};
  EXPECT_FALSE(check_cycle_condition(o4));
}

TEST(CycleCondition, ReportsUnbalancedTriangle) {
  Digraph t(3);
  t.set_pair(0, 1, 1, 1);
  t.set_pair(1, 2, 1, 1);
  t.set_pair(2, 0, 1, 2);
  const auto v = check_cycle_condition(t);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->cycle.size(), 3u);
  EXPECT_NE(v->forward_product, v->backward_product);
  // The certificate is a real cycle whose products are as reported.
  mpz_class fwd = 1, bwd = 1;
  for (std::size_t k = 0; k < v->cycle.size(); ++k) {
    const std::size_t a = v->cycle[k], b = v->cycle[(k + 1) % v->cycle.size()];
    fwd *= static_cast<long>(t(a, b));
    bwd *= static_cast<long>(t(b, a));
  }
  EXPECT_EQ(fwd, v->forward_product);
  EXPECT_EQ(bwd, v->backward_product);
}

TEST(CycleCondition, RejectsSignAsymmetric) {
  EXPECT_THROW(check_cycle_condition(Digraph{{0, 1}, {-1, 0}}), std::invalid_argument);
}

TEST(Symmetrizable, Examples) {
  EXPECT_TRUE(is_symmetrizable(Digraph{{0, 1}, {4, 0}}));
  EXPECT_FALSE(is_symmetrizable(Digraph{{0, 1}, {-1, 0}}));
  EXPECT_TRUE(is_symmetrizable(Digraph{{0, 1, -2}, {1, 3, 5}, {-2, 5, 0}}));
}

TEST(Symmetrizer, MinimalIntegers) {
  EXPECT_EQ(compute_symmetrizer(Digraph{{0, 1}, {2, 0}}).dsq, Z({1, 2}));
  EXPECT_EQ(compute_symmetrizer(Digraph{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}).dsq, Z({1, 1, 1}));
  EXPECT_EQ(compute_symmetrizer(Digraph{{0, 1, 0}, {1, 0, 1}, {0, 3, 0}}).dsq, Z({1, 1, 3}));
  EXPECT_THROW(compute_symmetrizer(Digraph{{0, 1}, {-1, 0}}), NotSymmetrizableError);
}

TEST(Symmetrizer, CarriesCycleCertificate) {
  Digraph t(3);
  t.set_pair(0, 1, 1, 1);
  t.set_pair(1, 2, 1, 1);
  t.set_pair(2, 0, 1, 2);
  try {
    compute_symmetrizer(t);
    FAIL() << "expected NotSymmetrizableError";
  } catch (const NotSymmetrizableError& e) {
    EXPECT_TRUE(e.violation());
  }
}

TEST(Symmetrization, Examples) {
  EXPECT_EQ(symmetrization(Digraph{{0, 1}, {2, 0}}).squares(), Digraph({{0, 2}, {2, 0}}));
  const Digraph s{{1, -2}, {-2, 0}};
  EXPECT_EQ(symmetrization(s).squares(), Digraph({{1, -4}, {-4, 0}}));
  EXPECT_THROW(symmetrization(Digraph{{0, 1}, {-1, 0}}), NotSymmetrizableError);
}

TEST(Balancing, Examples) {
  const Digraph b2{{0, 1}, {2, 0}};
  EXPECT_TRUE(balancing_holds(b2, Symmetrizer{Z({1, 2})}));
  EXPECT_FALSE(balancing_holds(b2, Symmetrizer{Z({1, 1})}));
  EXPECT_TRUE(balancing_holds(Digraph{{0, 3}, {3, 0}}, Symmetrizer{Z({1, 1})}));
  EXPECT_THROW(balancing_holds(b2, Symmetrizer{Z({1})}), std::invalid_argument);
}

// Random matrices built from a known balancing; the computed symmetrizer
// must balance, be minimal per component, and agree with the brute force
// cycle check.
TEST(Symmetrizer, RandomPropertiesAgainstOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Digraph g = oracle::random_symmetrizable(rng, n, 4);
    ASSERT_TRUE(oracle::cycle_condition_holds(g));
    ASSERT_TRUE(is_symmetrizable(g));
    const Symmetrizer d = compute_symmetrizer(g);
    EXPECT_TRUE(balancing_holds(g, d));
    for (const VertexSet& comp : connected_components(g)) {
      mpz_class gc = 0;
      for (std::size_t v : comp) {
        EXPECT_GE(d.dsq[v], 1);
        mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), d.dsq[v].get_mpz_t());
      }
      EXPECT_EQ(gc, 1);
    }
    const Digraph t = symmetrization(g).squares();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Entry p = i == j ? g(i, i) * g(i, i) : g(i, j) * g(j, i);
        EXPECT_EQ(t(i, j) < 0 ? -t(i, j) : t(i, j), p);
        EXPECT_EQ(sign(t(i, j)), sign(g(i, j)));
      }
  }
}

TEST(Symmetrizable, RandomPerturbationsAgainstOracle) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int a = pick(rng);
        const int m = std::max(1, std::abs(pick(rng)));
        g.set_pair(i, j, a, a == 0 ? 0 : (a > 0 ? m : -m));
      }
    ASSERT_TRUE(is_sign_symmetric(g));
    EXPECT_EQ(is_symmetrizable(g), oracle::cycle_condition_holds(g)) << to_string(g);
  }
}

}  // namespace
}  // namespace cyclomat
