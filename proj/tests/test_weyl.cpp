// Copyright 2026 The nonstab Authors
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

#include <gtest/gtest.h>

#include <random>

#include "nonstab/weyl.hpp"
#include "oracles.hpp"

using namespace nonstab;
using weyl::ErrorGroup;
using weyl::WeylElement;

namespace {

WeylElement random_element(const ErrorGroup& group, std::mt19937_64& rng) {
  const auto q = group.alphabet().size();
  weyl::Word a(group.length()), b(group.length());
  for (auto& v : a) v = static_cast<std::uint32_t>(rng() % q);
  for (auto& v : b) v = static_cast<std::uint32_t>(rng() % q);
  return group.make(static_cast<std::int64_t>(rng() % group.phase_denominator()), a, b);
}

std::vector<std::vector<weyl::Complex>> to_rows(const weyl::DenseMatrix& m) {
  std::vector<std::vector<weyl::Complex>> out(m.dim, std::vector<weyl::Complex>(m.dim));
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) out[i][j] = m(i, j);
  return out;
}

oracles::Monomial monomial(std::uint32_t q, const WeylElement& g) { return {q, g.phase, g.a, g.b}; }

}  // namespace

TEST(AlphabetGroup, PrimeFieldTables) {
  auto a = weyl::AlphabetGroup::prime_field(5);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(a.exponent(), 5u);
  EXPECT_EQ(a.phase_denominator(), 10u);
  EXPECT_EQ(a.add(3, 4), 2u);
  EXPECT_EQ(a.negate(2), 3u);
  // <3, 4> = w_5^12 = w_10^24
  EXPECT_EQ(a.pairing(3, 4), 24u % 10u);
}

TEST(AlphabetGroup, MixedOrdersAnnihilatedByExponent) {
  weyl::AlphabetGroup a({2, 3});
  EXPECT_EQ(a.size(), 6u);
  EXPECT_EQ(a.exponent(), 6u);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    std::uint32_t acc = 0;
    for (std::uint32_t k = 0; k < a.exponent(); ++k) acc = a.add(acc, x);
    EXPECT_EQ(acc, 0u);
    EXPECT_EQ(a.letter(a.components(x)), x);
  }
}

TEST(ErrorGroup, DenseMatrixMatchesDefinition) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    ErrorGroup group(weyl::AlphabetGroup::prime_field(q), 2);
    for (int trial = 0; trial < 20; ++trial) {
      auto g = random_element(group, rng);
      EXPECT_LT(oracles::max_difference(to_rows(group.dense_matrix(g)), oracles::dense(monomial(q, g))), 1e-12);
    }
  }
}

TEST(ErrorGroup, ComposeIsMatrixProduct) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u}) {
    ErrorGroup group(weyl::AlphabetGroup::prime_field(q), 3);
    for (int trial = 0; trial < 20; ++trial) {
      auto g = random_element(group, rng), h = random_element(group, rng);
      auto product = oracles::multiply(oracles::dense(monomial(q, g)), oracles::dense(monomial(q, h)));
      EXPECT_LT(oracles::max_difference(product, oracles::dense(monomial(q, group.compose(g, h)))), 1e-12);
    }
  }
}

TEST(ErrorGroup, InverseAndIdentity) {
  std::mt19937_64 rng(9);
  ErrorGroup group(weyl::AlphabetGroup::prime_field(3), 4);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_element(group, rng);
    EXPECT_EQ(group.compose(g, group.inverse(g)), group.identity());
    EXPECT_EQ(group.compose(group.inverse(g), g), group.identity());
    EXPECT_EQ(group.compose(g, group.identity()), g);
  }
}

TEST(ErrorGroup, GammaIsGroupCommutator) {
  std::mt19937_64 rng(13);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    ErrorGroup group(weyl::AlphabetGroup::prime_field(q), 3);
    for (int trial = 0; trial < 40; ++trial) {
      auto g = random_element(group, rng), h = random_element(group, rng);
      EXPECT_EQ(static_cast<std::int64_t>(group.gamma(g, h)),
                oracles::commutator(monomial(q, g), monomial(q, h)));
      auto c = group.compose(group.compose(g, h), group.compose(group.inverse(g), group.inverse(h)));
      EXPECT_EQ(c, group.scalar(group.gamma(g, h)));
    }
  }
}

TEST(ErrorGroup, TracesVanishOffScalars) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(3), 2);
  std::size_t nonscalar = 0;
  group.for_each_bounded(2, [&](const WeylElement& g) {
    EXPECT_LT(std::abs(group.dense_matrix(g).trace()), 1e-9);
    ++nonscalar;
    return true;
  });
  EXPECT_EQ(nonscalar, 80u);
  EXPECT_NEAR(group.dense_matrix(group.scalar(1)).trace().real(), 9 * std::cos(2 * std::numbers::pi / 6), 1e-12);
}

TEST(ErrorGroup, DistinctElementsAreTraceOrthogonal) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(2), 2);
  auto all = group.enumerate_bounded(2);
  all.insert(all.begin(), group.identity());
  ASSERT_EQ(all.size(), 16u);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto t = (group.dense_matrix(all[i]).adjoint() * group.dense_matrix(all[j])).trace();
      EXPECT_NEAR(std::abs(t), i == j ? 4.0 : 0.0, 1e-12);
    }
}

TEST(ErrorGroup, WeightCountsNontrivialPositions) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(2), 4);
  EXPECT_EQ(group.weight(group.make(0, {1, 0, 0, 1}, {0, 0, 1, 1})), 3u);
  EXPECT_EQ(group.weight(group.scalar(3)), 0u);
}

TEST(ErrorGroup, BoundedEnumerationCounts) {
  EXPECT_EQ(ErrorGroup(weyl::AlphabetGroup::prime_field(2), 5).enumerate_bounded(1).size(), 15u);
  EXPECT_EQ(ErrorGroup(weyl::AlphabetGroup::prime_field(2), 15).enumerate_bounded(2).size(), 990u);
  EXPECT_EQ(ErrorGroup(weyl::AlphabetGroup::prime_field(3), 5).enumerate_bounded(1).size(), 40u);
}

TEST(ErrorGroup, BoundedEnumerationIsWeightOrderedAndDistinct) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(3), 4);
  auto all = group.enumerate_bounded(2);
  std::set<std::pair<weyl::Word, weyl::Word>> seen;
  std::size_t last = 0;
  for (const auto& g : all) {
    auto w = group.weight(g);
    EXPECT_GE(w, last);
    last = w;
    EXPECT_TRUE(seen.insert({g.a, g.b}).second);
  }
  EXPECT_EQ(all.size(), 4u * 8 + 6u * 64);
}

TEST(ErrorGroup, EnumerationCapEnforced) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(2), 40);
  EXPECT_THROW(group.enumerate_bounded(5, 1000), CapExceeded);
}

TEST(ErrorGroup, MalformedElementsRejected) {
  ErrorGroup group(weyl::AlphabetGroup::prime_field(3), 2);
  EXPECT_THROW(group.make(0, {0, 3}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(group.make(0, {0}, {0, 0}), std::invalid_argument);
}
