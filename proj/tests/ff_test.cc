// Copyright 2026 The fqcount Authors
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

#include "fqcount/ff.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fqcount/errors.h"

namespace fqcount::ff {
namespace {

using Mod = std::vector<std::uint32_t>;

TEST(FieldTest, CanonicalModuli) {
  EXPECT_EQ(Field(3, 2).modulus(), (Mod{1, 0, 1}));
  EXPECT_EQ(Field(2, 2).modulus(), (Mod{1, 1, 1}));
  EXPECT_EQ(Field(2, 3).modulus(), (Mod{1, 0, 1, 1}));
  EXPECT_EQ(Field(5, 2).modulus(), (Mod{1, 1, 1}));
  EXPECT_EQ(Field(7, 1).modulus(), (Mod{0, 1}));
}

TEST(FieldTest, ModulusIsSmallestIrreducible) {
  for (auto [p, e] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {3u, 2u}}) {
    const Field f(p, e);
    ASSERT_TRUE(is_irreducible(f.modulus(), p));
    // Every monic polynomial below the modulus, compared from c_0 up, is
    // reducible.
    std::uint64_t total = 1;
    for (unsigned i = 0; i < e; ++i) total *= p;
    std::uint64_t rank = 0, place = total;
    for (unsigned i = 0; i < e; ++i) {
      place /= p;
      rank += f.modulus()[i] * place;
    }
    for (std::uint64_t r = 0; r < rank; ++r) {
      Mod poly(e + 1, 0);
      poly[e] = 1;
      std::uint64_t rest = r, pl = total;
      for (unsigned i = 0; i < e; ++i) {
        pl /= p;
        poly[i] = static_cast<std::uint32_t>(rest / pl);
        rest %= pl;
      }
      EXPECT_FALSE(is_irreducible(poly, p)) << "p=" << p << " e=" << e << " rank " << r;
    }
  }
}

TEST(FieldTest, Irreducibility) {
  EXPECT_TRUE(is_irreducible(Mod{1, 0, 1}, 3));
  EXPECT_FALSE(is_irreducible(Mod{1, 0, 1}, 5));
  EXPECT_FALSE(is_irreducible(Mod{1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible(Mod{1, 1, 0, 0, 1}, 2));
  EXPECT_FALSE(is_irreducible(Mod{1, 0, 0, 0, 1}, 2));
}

TEST(FieldTest, Primality) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1'000'003));
  EXPECT_FALSE(is_prime(1'000'001));
}

TEST(FieldTest, Preconditions) {
  EXPECT_THROW(Field(4, 1), PreconditionError);
  EXPECT_THROW(Field(3, 0), PreconditionError);
  EXPECT_THROW(Field(2, 21), PreconditionError);
  EXPECT_NO_THROW(Field(2, 20));
  EXPECT_THROW(Field(3, 3, 26), PreconditionError);
  const Field f(3, 1);
  EXPECT_THROW(f.inv(f.zero()), PreconditionError);
  EXPECT_THROW(f.element(3), PreconditionError);
}

TEST(FieldTest, IndexDigitsAreCoefficients) {
  const Field f(3, 2);
  EXPECT_EQ(f.coeffs(Element{5}), (Mod{2, 1}));
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    EXPECT_EQ(f.from_coeffs(f.coeffs(Element{i})), Element{i});
  }
  EXPECT_EQ(f.from_int(-1), f.neg(f.one()));
  EXPECT_EQ(f.from_int(7), f.one());
  // x * x = -1 in F_3[x]/(x^2 + 1).
  EXPECT_EQ(f.mul(Element{3}, Element{3}), f.from_int(-1));
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const Field f(GetParam().first, GetParam().second);
  const std::uint32_t q = f.q();
  std::set<std::uint32_t> orders;
  for (std::uint32_t a = 0; a < q; ++a) {
    const Element x{a};
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    EXPECT_EQ(f.pow(x, q), x);
    if (a != 0) {
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      std::uint32_t ord = 1;
      for (Element y = x; y != f.one(); y = f.mul(y, x)) ++ord;
      orders.insert(ord);
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const Element y{b};
      EXPECT_EQ(f.add(x, y), f.add(y, x));
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      for (std::uint32_t c = 0; c < q; c += 1 + q / 7) {
        const Element z{c};
        EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        EXPECT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
      }
    }
  }
  EXPECT_EQ(*orders.rbegin(), q - 1);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u},
                                           std::pair{2u, 2u}, std::pair{5u, 1u},
                                           std::pair{7u, 1u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{2u, 4u},
                                           std::pair{5u, 2u}, std::pair{3u, 3u}));

TEST(FieldTest, LargeFieldSampled) {
  const Field f(2, 20);
  for (std::uint32_t a = 1; a < f.q(); a += 9973) {
    const Element x{a};
    EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.pow(x, f.q() - 1), f.one());
    EXPECT_EQ(f.add(x, x), f.zero());
  }
}

TEST(QuadraticCharacter, CountsAndMultiplicativity) {
  for (auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {7u, 1u}, {5u, 2u}, {3u, 3u}}) {
    const Field f(p, e);
    EXPECT_EQ(f.quadratic_character(f.zero()), 0);
    int squares = 0;
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      squares += f.quadratic_character(Element{a}) == 1;
      for (std::uint32_t b = 1; b < f.q(); ++b) {
        EXPECT_EQ(f.quadratic_character(f.mul(Element{a}, Element{b})),
                  f.quadratic_character(Element{a}) * f.quadratic_character(Element{b}));
      }
    }
    EXPECT_EQ(squares, static_cast<int>((f.q() - 1) / 2));
    EXPECT_EQ(f.quadratic_character(f.from_int(-1)), ((f.q() - 1) / 2) % 2 == 0 ? 1 : -1);
  }
}

TEST(QuadraticCharacter, RestrictionToPrimeField) {
  EXPECT_TRUE(Field(3, 2).char_restriction_trivial());
  EXPECT_TRUE(Field(5, 2).char_restriction_trivial());
  EXPECT_TRUE(Field(3, 4).char_restriction_trivial());
  EXPECT_FALSE(Field(3, 1).char_restriction_trivial());
  EXPECT_FALSE(Field(3, 3).char_restriction_trivial());
  EXPECT_FALSE(Field(7, 1).char_restriction_trivial());
}

TEST(FieldTest, SqrtOrder) {
  EXPECT_EQ(Field(3, 2).sqrt_order(), 3u);
  EXPECT_EQ(Field(5, 2).sqrt_order(), 5u);
  EXPECT_EQ(Field(3, 4).sqrt_order(), 9u);
  EXPECT_FALSE(Field(3, 3).sqrt_order().has_value());
}

TEST(FieldTest, EqualityIsByParameters) {
  EXPECT_EQ(Field(3, 2), make_field(3, 2));
  EXPECT_FALSE(Field(3, 2) == Field(3, 1));
}

}  // namespace
}  // namespace fqcount::ff
