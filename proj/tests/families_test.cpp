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

#include "cyclomat/families.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cyclomat/equivalence.hpp"
#include "cyclomat/spectra.hpp"
#include "cyclomat/symmetrize.hpp"
#include "oracles.hpp"

namespace cyclomat {
namespace {

using F = Family;

bool in(F f, std::initializer_list<F> list) {
  return std::find(list.begin(), list.end(), f) != list.end();
}

constexpr std::initializer_list<F> kSquareFour = {F::A1tilde_prime, F::O4prime, F::S8minus, F::L,
                                                  F::Lprime,        F::Lplus,   F::A2pm,    F::O4pm};
constexpr std::initializer_list<F> kAffine = {
    F::Atilde,  F::Dtilde,       F::E6tilde, F::E7tilde, F::E8tilde, F::A1tilde,
    F::A1tilde_prime, F::Btilde, F::Ctilde,  F::Ctilde_prime, F::F4tilde, F::G2tilde};
constexpr std::initializer_list<F> kFinite = {F::A, F::D, F::E6, F::E7, F::E8,
                                              F::B, F::C, F::F4, F::G2};

TEST(Families, FixedExamples) {
  EXPECT_TRUE(are_equivalent(generate(FamilyId::Of(F::A1tilde_prime)), Digraph{{0, 1}, {4, 0}}));
  EXPECT_TRUE(are_equivalent(generate(FamilyId::Of(F::B2pm)), Digraph{{1, 1}, {2, -1}}));
  const Digraph o4{{0, -1, 1, 0}, {-1, 0, 0, 1}, {3, 0, 0, 1}, {0, 3, 1, 0}};
  EXPECT_TRUE(are_equivalent(generate(FamilyId::Of(F::O4prime)), o4));
}

TEST(Families, Validity) {
  EXPECT_FALSE(is_valid(FamilyId::Of(F::L, 5)));
  EXPECT_FALSE(is_valid(FamilyId::Of(F::Lplus, 4)));
  EXPECT_FALSE(is_valid(FamilyId::Of(F::Btilde, 2)));
  EXPECT_FALSE(is_valid(FamilyId::Of(F::B, 1)));
  EXPECT_TRUE(is_valid(FamilyId::Of(F::B, 2)));
  EXPECT_THROW(generate(FamilyId::Of(F::L, 5)), std::invalid_argument);
  EXPECT_THROW(generate(FamilyId::Of(F::LG, 4)), std::invalid_argument);
  EXPECT_THROW(generate_surd(FamilyId::Of(F::L, 4)), std::invalid_argument);
}

TEST(Families, SubscriptConvention) {
  EXPECT_EQ(order(FamilyId::Of(F::Btilde, 3)), 4u);
  EXPECT_EQ(order(FamilyId::Of(F::E8tilde)), 9u);
  EXPECT_EQ(order(FamilyId::Of(F::B, 3)), 3u);
  for (const auto& [id, g] : catalog(12)) EXPECT_EQ(g.order(), order(id)) << display_name(id);
}

TEST(Catalog, SmallOrders) {
  EXPECT_TRUE(catalog(0).empty());
  std::set<std::string> names;
  for (const auto& [id, g] : catalog(2)) names.insert(display_name(id));
  for (const char* want : {"A~1", "A~1'", "A2pm", "B2", "B2pm", "G2", "M2", "M2^T", "J2", "P2+"})
    EXPECT_TRUE(names.count(want)) << want;
}

TEST(Catalog, EveryMemberIsConnectedCyclotomic) {
  for (const auto& [id, g] : catalog(12)) {
    EXPECT_TRUE(is_symmetrizable(g)) << display_name(id);
    EXPECT_TRUE(is_connected(g)) << display_name(id);
    EXPECT_TRUE(is_cyclotomic(g)) << display_name(id);
  }
}

TEST(Catalog, SquareIsFourIForMaximalFamilies) {
  for (const auto& [id, g] : catalog(12))
    if (in(id.family, kSquareFour)) EXPECT_TRUE(is_plus_minus_two_only(g)) << display_name(id);
}

TEST(Catalog, AffineTouchTwoFiniteStayInside) {
  for (const auto& [id, g] : catalog(12)) {
    if (in(id.family, kAffine)) {
      EXPECT_FALSE(all_eigs_in_open(g)) << display_name(id);
    } else if (in(id.family, kFinite)) {
      EXPECT_TRUE(all_eigs_in_open(g)) << display_name(id);
    }
  }
}

TEST(Catalog, TransposesAreTransposes) {
  for (const auto& [id, g] : catalog(10)) {
    if (!id.transposed) continue;
    FamilyId plain = id;
    plain.transposed = false;
    EXPECT_EQ(g, transpose(generate(plain))) << display_name(id);
    EXPECT_FALSE(are_equivalent(g, generate(plain))) << display_name(id);
  }
}

// Surd generators against the symmetrizations of the integer generators, with
// S^2 = 4I decided exactly in the surd representation.
TEST(Surd, MatchesSymmetrizations) {
  const std::pair<F, F> fixed[] = {{F::A2pm, F::A2G_pm},
                                   {F::O4prime, F::O4G_prime},
                                   {F::O4pm, F::O4G_pm},
                                   {F::S8minus, F::S8G_minus}};
  for (const auto& [integer, surd] : fixed) {
    const SurdMatrix s = generate_surd(FamilyId::Of(surd));
    EXPECT_TRUE(are_equivalent(symmetrization(generate(FamilyId::Of(integer))), s));
    EXPECT_TRUE(oracle::surd_square_is_4I(s.squares()));
  }
  for (std::size_t n = 4; n <= 12; n += 2) {
    const SurdMatrix s = generate_surd(FamilyId::Of(F::LG, n));
    EXPECT_TRUE(oracle::surd_square_is_4I(s.squares())) << n;
    EXPECT_TRUE(are_equivalent(symmetrization(generate(FamilyId::Of(F::L, n))), s)) << n;
    EXPECT_TRUE(are_equivalent(symmetrization(generate(FamilyId::Of(F::Lprime, n))), s)) << n;
  }
  for (std::size_t n = 3; n <= 11; n += 2) {
    const SurdMatrix s = generate_surd(FamilyId::Of(F::LGplus, n));
    EXPECT_TRUE(oracle::surd_square_is_4I(s.squares())) << n;
    EXPECT_TRUE(are_equivalent(symmetrization(generate(FamilyId::Of(F::Lplus, n))), s)) << n;
  }
}

TEST(Surd, EntriesAndSquare) {
  const SurdMatrix a = generate_surd(FamilyId::Of(F::A2G_pm));
  EXPECT_TRUE(are_equivalent(a, SurdMatrix::FromSquares(Digraph{{1, 3}, {3, -1}})));
  const SurdMatrix o = generate_surd(FamilyId::Of(F::O4G_prime));
  std::size_t three = 0, minus_one = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      three += o.t(i, j) == 3;
      minus_one += o.t(i, j) == -1;
    }
  EXPECT_EQ(three, 4u);      // two sqrt(3) edges
  EXPECT_EQ(minus_one, 2u);  // one negative unit edge
}

TEST(Names, RoundTrip) {
  for (const auto& [id, g] : catalog(10)) {
    FamilyId back = parse_family(display_name(id));
    EXPECT_EQ(back, id) << display_name(id);
  }
  EXPECT_EQ(parse_family("Ctilde_prime", 4), FamilyId::Of(F::Ctilde_prime, 4));
  EXPECT_EQ(parse_family("o4''"), FamilyId::Of(F::O4doubleprime));
  EXPECT_THROW(parse_family("L", std::nullopt), std::invalid_argument);
  EXPECT_THROW(parse_family("nonsense"), std::invalid_argument);
  for (F f : all_families()) EXPECT_FALSE(identifier(f).empty());
}

}  // namespace
}  // namespace cyclomat
