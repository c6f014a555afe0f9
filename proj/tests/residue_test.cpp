#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lipschitz/lipschitz.hpp"
#include "random_quaternions.hpp"

namespace {

using namespace lipschitz;
using lipschitz::testing::kPropertyCases;
using lipschitz::testing::QuaternionSource;

const Modulus& mod3() {
  static const Modulus m(Quaternion{1, 1, 1, 0});
  return m;
}
const Modulus& mod7() {
  static const Modulus m(Quaternion{2, 1, 1, 1});
  return m;
}
const Modulus& mod13() {
  static const Modulus m(Quaternion{1, 2, 2, 2});
  return m;
}

Residue alpha() { return mod7().reduce({1, -1, -1, -1}); }
Residue beta() { return mod13().reduce({2}); }

// Exhaustive four-square search over signed components, independent of the
// library's lexicographic nonnegative scan.
std::set<Quaternion> all_of_norm(std::int64_t p) {
  std::set<Quaternion> out;
  const std::int64_t b = 6;
  for (std::int64_t a0 = -b; a0 <= b; ++a0)
    for (std::int64_t a1 = -b; a1 <= b; ++a1)
      for (std::int64_t a2 = -b; a2 <= b; ++a2)
        for (std::int64_t a3 = -b; a3 <= b; ++a3)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p) out.insert(Quaternion{a0, a1, a2, a3});
  return out;
}

TEST(Modulus, AcceptsQuaternionPrimes) {
  EXPECT_EQ(make_modulus({2, 1, 1, 1}).p(), 7);
  EXPECT_EQ(make_modulus({1, 2, 2, 2}).p(), 13);
  EXPECT_EQ(make_modulus({1, 1, 1, 0}).p(), 3);
  const Modulus m = make_modulus({1, 2, 2, 2});
  EXPECT_EQ(mul(m.pi(), m.conj_pi()), Quaternion{13});
}

TEST(Modulus, RejectsNonPrimeNorms) {
  EXPECT_THROW(make_modulus({1, 1}), ModulusError);
  EXPECT_THROW(make_modulus({}), ModulusError);
  EXPECT_THROW(make_modulus({3}), ModulusError);  // norm 9
  EXPECT_THROW(make_modulus({1}), ModulusError);
}

TEST(FindPrimeOver, ReturnsFirstLexicographicSolution) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const Quaternion q = find_prime_over(p);
    const auto all = all_of_norm(p);
    ASSERT_TRUE(all.count(q)) << p;
    const auto smallest = std::find_if(all.begin(), all.end(), [](const Quaternion& c) {
      return c.a0 >= 0 && c.a1 >= 0 && c.a2 >= 0 && c.a3 >= 0;
    });
    EXPECT_EQ(q, *smallest) << p;
  }
  EXPECT_EQ(find_prime_over(7), (Quaternion{1, 1, 1, 2}));
  EXPECT_EQ(find_prime_over(3), (Quaternion{0, 1, 1, 1}));
  EXPECT_THROW(find_prime_over(2), ModulusError);
  EXPECT_THROW(find_prime_over(15), ModulusError);
}

TEST(Congruence, WorkedCases) {
  EXPECT_TRUE(congruent({6, 0, 0, -2}, {1, 1, 1, -1}, mod7()));
  EXPECT_EQ(mul({1, -1, -1, -1}, mod7().pi()), (Quaternion{5, -1, -1, -1}));
  EXPECT_TRUE(congruent({3, 1, 4, 1}, {3, 1, 4, 1}, mod13()));
  EXPECT_FALSE(congruent({1}, {2}, mod13()));
}

TEST(CanonicalReduce, WorkedCases) {
  EXPECT_TRUE(mod7().reduce({}).is_zero());
  EXPECT_EQ(mod7().reduce({6, 0, 0, -2}), mod7().reduce({1, 1, 1, -1}));
  EXPECT_EQ(mod7().reduce(mod7().pi()), mod7().zero());
}

TEST(CanonicalReduce, IdempotentAndClassConstant) {
  QuaternionSource src(0x201);
  for (const Modulus* m : {&mod3(), &mod7(), &mod13()}) {
    for (int n = 0; n < kPropertyCases; ++n) {
      const Quaternion q = src.next();
      const Quaternion b = src.next();
      const Residue x = m->reduce(q);
      ASSERT_EQ(m->reduce(x.rep()).rep(), x.rep()) << q;
      ASSERT_EQ(m->reduce(add(q, mul(b, m->pi()))), x) << q << " + (" << b << ")pi";
    }
  }
}

TEST(CanonicalReduce, AgreesWithCongruence) {
  QuaternionSource src(0x202, 20);
  for (const Modulus* m : {&mod7(), &mod13()}) {
    int congruent_pairs = 0;
    for (int n = 0; n < kPropertyCases; ++n) {
      const Quaternion q1 = src.next();
      // Half the pairs are built congruent on purpose.
      const Quaternion q2 = n % 2 ? add(q1, mul(src.next(), m->pi())) : src.next();
      const bool same = congruent(q1, q2, *m);
      congruent_pairs += same;
      ASSERT_EQ(same, m->reduce(q1) == m->reduce(q2)) << q1 << " vs " << q2;
    }
    EXPECT_GE(congruent_pairs, kPropertyCases / 2);
  }
}

TEST(EnumerateResidues, CountsAreNormSquared) {
  EXPECT_EQ(enumerate_residues(mod3()).size(), 9u);
  EXPECT_EQ(enumerate_residues(mod7()).size(), 49u);
  EXPECT_EQ(enumerate_residues(mod13()).size(), 169u);
}

TEST(EnumerateResidues, NormThreeClassesAreZeroAndUnits) {
  std::vector<Residue> expected{mod3().zero()};
  for (const auto& u : units()) expected.push_back(mod3().reduce(u));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(enumerate_residues(mod3()), expected);
}

TEST(EnumerateResidues, UnitsAreDistinctClasses) {
  for (const Modulus* m : {&mod3(), &mod7(), &mod13()}) {
    std::set<Quaternion> reps;
    for (const auto& u : units()) reps.insert(m->reduce(u).rep());
    EXPECT_EQ(reps.size(), 8u) << m->p();
  }
}

TEST(ResidueRing, TableProducts) {
  EXPECT_EQ(mul(alpha(), pow(alpha(), 2)), mod7().reduce({-1}));
  EXPECT_EQ(mul(alpha(), mod7().one()), alpha());
  EXPECT_EQ(mul(pow(beta(), 4), pow(beta(), 3)), mod13().reduce({-2}));
  EXPECT_EQ(pow(alpha(), 6), mod7().one());
  EXPECT_EQ(pow(beta(), 12), mod13().one());
  EXPECT_EQ(pow(alpha(), 0), mod7().one());
}

TEST(ResidueRing, ModulusMismatchIsRejected) {
  EXPECT_THROW(add(alpha(), beta()), std::invalid_argument);
  EXPECT_THROW(mul(alpha(), beta()), std::invalid_argument);
}

TEST(ResidueRing, Orders) {
  EXPECT_EQ(order(alpha()), 6u);
  EXPECT_EQ(order(beta()), 12u);
  EXPECT_EQ(order(mod13().one()), 1u);
  EXPECT_THROW(order(mod13().zero()), std::invalid_argument);
}

TEST(ResidueRing, Inverses) {
  EXPECT_EQ(inverse(alpha()), pow(alpha(), 5));
  EXPECT_EQ(inverse(mod7().one()), mod7().one());
  EXPECT_EQ(inverse(pow(beta(), 7)), pow(beta(), 5));
  EXPECT_THROW(inverse(mod7().zero()), std::invalid_argument);
  // 1+j has no two-sided inverse modulo 1+2i+2j+2k.
  EXPECT_FALSE(inverse(mod13().reduce({1, 0, 1, 0})).has_value());
}

TEST(ResidueRing, LeftAssociates) {
  const Residue s = mod7().reduce({1, 1, 1, -1});
  const auto assoc = left_associates(s);
  EXPECT_NE(std::find(assoc.begin(), assoc.end(), alpha()), assoc.end());
  EXPECT_TRUE(are_left_associates(alpha(), s));
  EXPECT_EQ(mul(Quaternion::i(), alpha()), s);
  EXPECT_EQ(left_associates(mod7().zero()), std::vector<Residue>{mod7().zero()});
  EXPECT_EQ(left_associates(mod7().one()).size(), 8u);
}

TEST(ResidueRing, PowerTablesVerbatim) {
  const std::vector<std::string> table1{"1", "1-i-j-k", "-i-j-k", "-1", "-1+i+j+k", "i+j+k", "1", "1-i-j-k"};
  for (std::size_t s = 0; s < table1.size(); ++s) EXPECT_EQ(format_residue(pow(alpha(), s)), table1[s]) << s;
  const std::vector<std::string> table2{"1",  "2",        "-2+i+j+k", "1-i-j-k", "3",        "i+j+k",
                                        "-1", "-2",       "2-i-j-k",  "-1+i+j+k", "-3",      "-i-j-k",
                                        "1",  "2",        "-2+i+j+k", "1-i-j-k"};
  for (std::size_t s = 0; s < table2.size(); ++s) EXPECT_EQ(format_residue(pow(beta(), s)), table2[s]) << s;
}

TEST(ResidueProperties, LeftDistributive) {
  const auto rs = enumerate_residues(mod13());
  for (std::size_t a = 0; a < rs.size(); a += 2)
    for (std::size_t b = 0; b < rs.size(); b += 3)
      for (std::size_t c = 0; c < rs.size(); c += 5)
        ASSERT_EQ(mul(rs[a], add(rs[b], rs[c])), add(mul(rs[a], rs[b]), mul(rs[a], rs[c])));
}

TEST(ResidueProperties, PowersOfGeneratorsCompose) {
  for (std::uint64_t a = 0; a < 24; ++a) {
    for (std::uint64_t b = 0; b < 24; ++b) {
      ASSERT_EQ(mul(pow(beta(), a), pow(beta(), b)), pow(beta(), a + b)) << a << "," << b;
      ASSERT_EQ(mul(pow(alpha(), a), pow(alpha(), b)), pow(alpha(), a + b)) << a << "," << b;
    }
  }
}

TEST(ResidueProperties, AssociativeWhenRightFactorIsRational) {
  for (const Modulus* m : {&mod7(), &mod13()}) {
    const auto rs = enumerate_residues(*m);
    for (const auto& z : rs) {
      if (!z.rep().is_real()) continue;
      for (std::size_t a = 0; a < rs.size(); a += 3)
        for (std::size_t b = 0; b < rs.size(); b += 2)
          ASSERT_EQ(mul(mul(rs[a], rs[b]), z), mul(rs[a], mul(rs[b], z)));
    }
  }
}

// The classes form a quotient by a left ideal, so products of canonical
// representatives are not associative in general.
TEST(ResidueProperties, ProductIsNotAssociativeInGeneral) {
  const auto rs = enumerate_residues(mod7());
  bool found = false;
  for (std::size_t a = 0; a < rs.size() && !found; ++a)
    for (std::size_t b = 0; b < rs.size() && !found; ++b)
      for (std::size_t c = 0; c < rs.size() && !found; ++c)
        found = !(mul(mul(rs[a], rs[b]), rs[c]) == mul(rs[a], mul(rs[b], rs[c])));
  EXPECT_TRUE(found);
}

TEST(Words, ReduceAndAdd) {
  const std::vector<Quaternion> qs{{6, 0, 0, -2}, {0, 1}};
  const Word w = reduce_word(qs, mod7());
  EXPECT_EQ(w[0], mod7().reduce({1, 1, 1, -1}));
  EXPECT_EQ(add(w, zero_word(mod7(), 2)), w);
  EXPECT_EQ(sub(w, w), zero_word(mod7(), 2));
  EXPECT_THROW(add(w, zero_word(mod7(), 3)), std::invalid_argument);
}

}  // namespace
