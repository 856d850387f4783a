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

#include "cyclomat/classify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cyclomat/spectra.hpp"
#include "cyclomat/symmetrize.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace cyclomat {
namespace {

using F = Family;

SearchConstraints closed(std::size_t k) {
  SearchConstraints c;
  c.max_order = k;
  return c;
}

std::set<CanonicalKey> keys_of(const std::vector<Digraph>& gs) {
  std::set<CanonicalKey> out;
  for (const Digraph& g : gs) out.insert(canonical_form(g));
  return out;
}

std::set<CanonicalKey> family_keys(std::initializer_list<FamilyId> ids) {
  std::set<CanonicalKey> out;
  for (const FamilyId& id : ids) out.insert(canonical_form(generate(id)));
  return out;
}

std::set<CanonicalKey> maximal_keys(const ClassificationReport& r, std::size_t order) {
  std::set<CanonicalKey> out;
  for (const Representative& p : r.representatives)
    if (p.maximal && p.matrix.order() == order) out.insert(p.key);
  return out;
}

FamilyId T(F f, std::size_t n = 0) { return FamilyId::Of(f, n, true); }
FamilyId N(F f, std::size_t n = 0) { return FamilyId::Of(f, n); }

TEST(Extensions, BoundOnPairProducts) {
  const auto ext = extensions(Digraph{{0}}, closed(2));
  const auto keys = keys_of(ext);
  EXPECT_TRUE(keys.count(canonical_form(Digraph{{0, 1}, {4, 0}})));
  EXPECT_FALSE(keys.count(canonical_form(Digraph{{0, 1}, {5, 0}})));
  for (const Digraph& h : ext) {
    EXPECT_EQ(h(0, 0), 0);
    EXPECT_TRUE(is_cyclotomic(h));
    EXPECT_TRUE(is_connected(h));
    if (h(0, 1) * h(1, 0) == 4) EXPECT_EQ(h(1, 1), 0);
  }
}

TEST(Extensions, MaximalExamples) {
  EXPECT_TRUE(extensions(generate(N(F::A1tilde_prime)), closed(3)).empty());
  EXPECT_TRUE(is_maximal(generate(N(F::S8minus)), closed(9)));
  SearchConstraints nonneg = closed(5);
  nonneg.require_nonnegative = true;
  EXPECT_TRUE(is_maximal(generate(N(F::Btilde, 3)), nonneg));
  const auto b2 = extensions(generate(N(F::B, 2)), closed(3));
  ASSERT_FALSE(b2.empty());
  EXPECT_FALSE(is_maximal(generate(N(F::B, 2)), closed(3)));
  for (const Digraph& h : b2) EXPECT_TRUE(is_cyclotomic(h));
}

TEST(Extensions, NewPairsAreSignSymmetricAndBalanced) {
  const Digraph g = generate(N(F::C, 4));
  for (const Digraph& h : extensions(g, closed(5))) {
    EXPECT_TRUE(is_sign_symmetric(h));
    EXPECT_TRUE(is_symmetrizable(h));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h(i, j), g(i, j));
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate(closed(11)), SearchCapError);
  EXPECT_NO_THROW(enumerate(closed(2), EnumerateOptions{2, 1}));
  EXPECT_THROW(enumerate(closed(3), EnumerateOptions{2, 1}), SearchCapError);
  EXPECT_THROW(enumerate(closed(0)), std::invalid_argument);
}

// Complete against exhaustive search over a wider entry box than the one
// the search uses.
TEST(Enumerate, MatchesBruteForceUpToOrderThree) {
  for (bool open : {false, true})
    for (bool nonneg : {false, true}) {
      SearchConstraints c = closed(3);
      c.open_interval = open;
      c.require_nonnegative = nonneg;
      const ClassificationReport r = enumerate(c);
      std::set<CanonicalKey> found;
      for (const Representative& p : r.representatives) found.insert(p.key);
      oracle::BruteForce b;
      b.open = open;
      b.nonnegative = nonneg;
      const auto expected = oracle::brute_force_classes(b);
      EXPECT_EQ(found, expected) << "open=" << open << " nonneg=" << nonneg;
    }
}

TEST(Enumerate, SoundAndPairwiseInequivalent) {
  for (bool open : {false, true}) {
    SearchConstraints c = closed(6);
    c.open_interval = open;
    const ClassificationReport r = enumerate(c);
    std::set<CanonicalKey> seen;
    for (const Representative& p : r.representatives) {
      EXPECT_TRUE(seen.insert(p.key).second);
      EXPECT_EQ(canonical_form(p.matrix), p.key);
      EXPECT_TRUE(is_symmetrizable(p.matrix));
      EXPECT_TRUE(is_connected(p.matrix));
      EXPECT_TRUE(open ? all_eigs_in_open(p.matrix) : is_cyclotomic(p.matrix));
      EXPECT_EQ(p.maximal, extensions(p.matrix, c).empty());
    }
    std::size_t total = 0;
    for (std::size_t k : r.counts) total += k;
    EXPECT_EQ(total, r.representatives.size());
  }
}

TEST(Enumerate, NonnegativeRepresentativesAreNonnegative) {
  SearchConstraints c = closed(6);
  c.require_nonnegative = true;
  for (const Representative& p : enumerate(c).representatives)
    EXPECT_TRUE(has_nonnegative_entries(p.matrix)) << to_string(p.matrix);
}

TEST(Enumerate, UnchargedOption) {
  SearchConstraints c = closed(5);
  c.allow_charges = false;
  for (const Representative& p : enumerate(c).representatives) EXPECT_FALSE(has_charge(p.matrix));
}

// Every class of order k has a connected admissible induced subgraph of
// order k - 1 among the reported classes.
TEST(Enumerate, EveryClassShrinksToAClass) {
  const SearchConstraints c = closed(6);
  const ClassificationReport r = enumerate(c);
  std::set<CanonicalKey> keys;
  for (const Representative& p : r.representatives) keys.insert(p.key);
  for (const Representative& p : r.representatives) {
    const std::size_t n = p.matrix.order();
    if (n == 1) continue;
    bool found = false;
    for (std::size_t v = 0; v < n && !found; ++v) {
      std::vector<std::size_t> keep;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v) keep.push_back(u);
      const Digraph h = induced_subgraph(p.matrix, VertexSet(keep));
      found = is_connected(h) && keys.count(canonical_form(h));
    }
    EXPECT_TRUE(found) << to_string(p.matrix);
  }
}

// An uncharged unit 4-cycle has characteristic polynomial x^4 - 4x^2 when
// the number of negative edges is even and (x^2 - 2)^2 when it is odd;
// checked on every induced one in every class.
TEST(Enumerate, UnitQuadrilaterals) {
  const ClassificationReport r = enumerate(closed(7));
  std::size_t checked = 0;
  for (const Representative& p : r.representatives) {
    const Digraph& g = p.matrix;
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            const Digraph q = induced_subgraph(g, VertexSet({a, b, c, d}));
            std::size_t edges = 0, negative = 0;
            bool degree_two = true, unit = true;
            for (std::size_t i = 0; i < 4; ++i) {
              unit = unit && q(i, i) == 0;
              std::size_t deg = 0;
              for (std::size_t j = 0; j < 4; ++j)
                if (i != j && q(i, j) != 0) ++deg;
              degree_two = degree_two && deg == 2;
              for (std::size_t j = i + 1; j < 4; ++j)
                if (q(i, j) != 0) {
                  unit = unit && q(i, j) * q(j, i) == 1;
                  ++edges;
                  negative += q(i, j) < 0;
                }
            }
            if (!degree_two || !unit || edges != 4) continue;
            const IntPolynomial want = negative % 2 ? IntPolynomial::FromInts({4, 0, -4, 0, 1})
                                                    : IntPolynomial::FromInts({0, 0, -4, 0, 1});
            EXPECT_EQ(char_poly(q), want) << to_string(q);
            ++checked;
          }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  SearchConstraints c = closed(6);
  c.require_nonnegative = true;
  const std::string one = to_json(enumerate(c, EnumerateOptions{10, 1}));
  const std::string four = to_json(enumerate(c, EnumerateOptions{10, 4}));
  EXPECT_EQ(one, four);
  const SearchConstraints d = closed(5);
  EXPECT_EQ(to_text(enumerate(d, EnumerateOptions{10, 1})),
            to_text(enumerate(d, EnumerateOptions{10, 3})));
}

TEST(Enumerate, OrderTwoNonsymmetricMaximal) {
  SearchConstraints c = closed(2);
  c.require_nonsymmetric = true;
  EXPECT_EQ(maximal_keys(enumerate(c), 2), family_keys({N(F::A1tilde_prime), N(F::A2pm)}));
  c.open_interval = true;
  EXPECT_EQ(maximal_keys(enumerate(c), 2), family_keys({N(F::G2), N(F::B2pm)}));
}

TEST(Enumerate, OrderFourNonsymmetricMaximal) {
  SearchConstraints c = closed(4);
  c.require_nonsymmetric = true;
  EXPECT_EQ(maximal_keys(enumerate(c), 4),
            family_keys({N(F::O4prime), N(F::L, 4), N(F::Lprime, 4), N(F::O4pm)}));
}

TEST(Verify, SmallOrdersPass) {
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_TRUE(verify_theorem_1(k).passed) << k;
    EXPECT_TRUE(verify_theorem_2(k).passed) << k;
    EXPECT_TRUE(verify_corollary_1(k).passed) << k;
    EXPECT_TRUE(verify_corollary_3(k).passed) << k;
    EXPECT_TRUE(verify_corollary_5(k).passed) << k;
  }
}

TEST(Verify, ClosedNonsymmetricOrderFour) {
  const ClassificationReport r = verify_theorem_1(4);
  std::set<CanonicalKey> max;
  for (const Representative& p : r.representatives)
    if (p.maximal) max.insert(p.key);
  EXPECT_EQ(max, family_keys({N(F::A1tilde_prime), N(F::A2pm), N(F::Lplus, 3), T(F::Lplus, 3),
                              N(F::O4prime), N(F::L, 4), N(F::Lprime, 4), N(F::O4pm)}));
}

TEST(Verify, NonnegativeClosedSmallOrders) {
  const ClassificationReport r = verify_corollary_1(3);
  EXPECT_EQ(maximal_keys(r, 2), family_keys({N(F::A1tilde), N(F::A1tilde_prime), N(F::M, 2),
                                             T(F::M, 2), N(F::J, 2)}));
  const auto three = maximal_keys(r, 3);
  for (const FamilyId& id : {N(F::Atilde, 2), N(F::Ctilde, 2), T(F::Ctilde, 2), N(F::G2tilde),
                             T(F::G2tilde), N(F::I, 3), N(F::J, 3), N(F::M, 3), T(F::M, 3)})
    EXPECT_TRUE(three.count(canonical_form(generate(id)))) << display_name(id);
}

TEST(Verify, SwitchableSubgraphsOfLadders) {
  const ClassificationReport r = verify_corollary_3(8);
  EXPECT_TRUE(r.passed);
  const auto note = [&](const std::string& prefix) {
    for (const std::string& n : r.notes)
      if (n.rfind(prefix, 0) == 0) return n;
    return std::string();
  };
  EXPECT_EQ(note("from O4':"), "from O4': G~2, G~2^T");
  const std::string s8 = note("from S8-:");
  for (const char* name : {"F~4", "F~4^T", "C~4", "C~4^T", "B~3", "B~3^T"})
    EXPECT_NE(s8.find(name), std::string::npos) << name;
  EXPECT_NE(note("from L8:").find("C~4^T"), std::string::npos);
}

TEST(Verify, NonnegativeOpenOrderFour) {
  const ClassificationReport r = verify_corollary_5(4);
  EXPECT_TRUE(r.passed);
  SearchConstraints c;
  c.max_order = 4;
  c.open_interval = true;
  c.require_nonnegative = true;
  const ClassificationReport e = enumerate(c);
  std::set<CanonicalKey> nonsym_max;
  for (const Representative& p : e.representatives) {
    EXPECT_FALSE(!is_symmetric(p.matrix) && is_charged(p.matrix));
    if (p.maximal && !is_symmetric(p.matrix) && p.matrix.order() == 4) nonsym_max.insert(p.key);
  }
  EXPECT_EQ(nonsym_max, family_keys({N(F::F4)}));
}

TEST(Report, SerializesBothWays) {
  const ClassificationReport r = verify_theorem_2(3);
  const std::string text = to_text(r);
  EXPECT_NE(text.find("result PASS"), std::string::npos);
  const auto doc = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["counts"]["2"], r.counts[2]);
  std::size_t listed = 0;
  for (const auto& [order, reps] : doc["orders"].items()) listed += reps.size();
  EXPECT_EQ(listed, r.representatives.size());
}

}  // namespace
}  // namespace cyclomat
