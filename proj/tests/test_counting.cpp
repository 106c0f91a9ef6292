#include "pisys/catalog.hpp"
#include "pisys/counting.hpp"
#include "pisys/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace pisys;
using oracle::vec;

namespace {

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::Internal;
}

Gcm named(const std::string& s) { return named_diagram(s); }

std::map<std::string, int> certificate_types(const MultReport& r) {
  std::map<std::string, int> m;
  for (const auto& c : r.certificate) ++m[c.type];
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// finite_mult

TEST(FiniteMult, A1InAn) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(finite_mult(named("A1"), named("A" + std::to_string(n))), 1u) << n;
}

TEST(FiniteMult, SmallExamples) {
  EXPECT_EQ(finite_mult(named("A2"), named("A2")), 1u);
  EXPECT_EQ(finite_mult(named("A1"), named("D4")), 1u);
  EXPECT_EQ(finite_mult(named("A1"), named("E8")), 1u);
}

TEST(FiniteMult, ZeroWhenRankTooLarge) {
  EXPECT_EQ(finite_mult(named("A3"), named("A2")), 0u);
  EXPECT_EQ(finite_mult(named("D5"), named("A4")), 0u);
  EXPECT_EQ(finite_mult_bruteforce(named("A3"), named("A2")), 0u);
}

TEST(FiniteMult, NotFiniteIsRejected) {
  EXPECT_EQ(error_of([] { finite_mult(named("A1~"), named("A3")); }), Errc::WrongClass);
  EXPECT_EQ(error_of([] { finite_mult(named("A1"), named("A2~")); }), Errc::WrongClass);
}

TEST(FiniteMult, LiveMatchesBruteForce) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"A1", "A3"}, {"A2", "A3"}, {"A2", "A4"}, {"A3", "A4"}, {"A2", "D4"}, {"A3", "D4"}, {"D4", "D4"},
      {"A3", "D5"}, {"A4", "D5"}, {"D4", "D5"}, {"A2", "A5"}, {"A3", "A5"}, {"A3", "A3"}, {"A2", "D5"},
  };
  for (const auto& [k, z] : pairs)
    EXPECT_EQ(finite_mult_live(named(k), named(z)), finite_mult_bruteforce(named(k), named(z))) << k << " in " << z;
}

TEST(FiniteMult, A3InD4HasThreeClasses) {
  // the three A3 subsystems of D4 are permuted by triality, not by W(D4)
  EXPECT_EQ(finite_mult_bruteforce(named("A3"), named("D4")), 3u);
  EXPECT_EQ(finite_mult_live(named("A3"), named("D4")), 3u);
}

TEST(FiniteMult, A5InE6AndE7) {
  EXPECT_EQ(finite_mult_live(named("A5"), named("E6")), 1u);
  EXPECT_EQ(finite_mult_live(named("A5"), named("E7")), 2u);
  EXPECT_EQ(finite_mult_live(named("A7"), named("E7")), 1u);
}

TEST(FiniteMult, D8InE8) { EXPECT_EQ(finite_mult_live(named("D8"), named("E8")), 1u); }

TEST(FiniteMult, BudgetIsEnforced) {
  Options o;
  o.node_budget = 3;
  EXPECT_EQ(error_of([&] { finite_mult_live(named("D4"), named("E6"), o); }), Errc::BudgetExceeded);
}

// ---------------------------------------------------------------------------
// table

TEST(FiniteMultTable, ParseAndRoundTrip) {
  auto t = FiniteMultTable::parse(R"({"k":"D8","z":"E8","value":1,"oracle":"pisys-finite-oracle/1"}

{"k":"A5","z":"E7","value":2})");
  ASSERT_EQ(t.entries().size(), 2u);
  EXPECT_EQ(t.lookup("A5", "E7"), 2u);
  EXPECT_FALSE(t.lookup("A5", "E8").has_value());
  auto again = FiniteMultTable::parse(t.to_jsonl());
  EXPECT_EQ(again.to_jsonl(), t.to_jsonl());
}

TEST(FiniteMultTable, MalformedLine) {
  EXPECT_EQ(error_of([] { FiniteMultTable::parse("{\"k\":\"A1\"}"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { FiniteMultTable::parse("not json"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { FiniteMultTable::load("/nonexistent/table.jsonl"); }), Errc::ParseError);
}

TEST(FiniteMultTable, DuplicateEntryWithOtherValue) {
  FiniteMultTable t;
  t.add({"A2", "A3", 1, ""});
  t.add({"A2", "A3", 1, ""});
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(error_of([&] { t.add({"A2", "A3", 4, ""}); }), Errc::TableConflict);
}

TEST(FiniteMultTable, LiveValueWinsAndConflictAborts) {
  FiniteMultTable t;
  t.add({"A2", "A3", 7, ""});
  Options o;
  o.table = &t;
  EXPECT_EQ(error_of([&] { finite_mult(named("A2"), named("A3"), o); }), Errc::TableConflict);
  t = FiniteMultTable();
  t.add({"A2", "A3", 1, ""});
  EXPECT_EQ(finite_mult(named("A2"), named("A3"), o), 1u);
}

TEST(FiniteMultTable, ServesRanksAboveTheLiveCap) {
  FiniteMultTable t;
  t.add({"A2", "A4", 1, std::string(kOracleVersion)});
  Options o;
  o.table = &t;
  o.finite_live_cap = 3;
  EXPECT_EQ(finite_mult(named("A2"), named("A4"), o), 1u);
  EXPECT_EQ(error_of([&] { finite_mult(named("A3"), named("A4"), o); }), Errc::RankCapExceeded);
  EXPECT_EQ(finite_mult(named("A5"), named("A4"), o), 0u);
}

// ---------------------------------------------------------------------------
// mult

TEST(MultA1pp, KnownValues) {
  EXPECT_EQ(mult_a1pp(named("E10")).value, 2u);
  EXPECT_EQ(mult_a1pp(named("E11")).value, 2u);
  EXPECT_EQ(mult_a1pp(named("A8++")).value, 6u);
  EXPECT_EQ(mult_a1pp(named("D9++")).value, 6u);
}

TEST(MultA1pp, LargerOverextensions) {
  EXPECT_EQ(mult_a1pp(named("A9++")).value, 10u);
  EXPECT_EQ(mult_a1pp(named("A10++")).value, 10u);
  EXPECT_EQ(mult_a1pp(named("D10++")).value, 4u);
  EXPECT_EQ(mult_a1pp(named("D11++")).value, 4u);
}

TEST(MultA1pp, CertificateTypes) {
  auto r = mult_a1pp(named("A8++"));
  EXPECT_EQ(certificate_types(r), (std::map<std::string, int>{{"A8++", 1}, {"E7++", 2}}));
  auto e11 = mult_a1pp(named("E11"));
  ASSERT_EQ(e11.certificate.size(), 1u);
  EXPECT_EQ(e11.certificate[0].type, "E8++");
  EXPECT_EQ(e11.certificate[0].finite_type, "E8");
}

TEST(MultA1pp, HyperbolicExtAndFig2) {
  for (const auto& e : hyperbolic_sl_catalog()) {
    auto r = mult_a1pp(e.gcm);
    EXPECT_EQ(*r.value, e.is_ext ? 2u : 0u) << e.name;
  }
}

TEST(MultA1pp, NotSimplyLaced) {
  EXPECT_EQ(error_of([] { mult_a1pp(named("B3~")); }), Errc::NotSimplyLaced);
}

TEST(MultExt, A1ppAgreesWithA1ppCount) {
  for (const char* x : {"E10", "A8++", "D9++", "A3++", "hyp:fig2:5"}) {
    auto a = mult_a1pp(named(x));
    auto b = mult_ext(named("A1++"), named(x));
    EXPECT_EQ(a.value, b.value) << x;
    for (const auto& c : b.certificate) EXPECT_EQ(c.finite_mult, 1u);
  }
}

TEST(MultExt, SelfMultiplicity) {
  EXPECT_EQ(mult_ext(named("A2++"), named("A2++")).value, 2 * finite_mult_bruteforce(named("A2"), named("A2")));
  EXPECT_EQ(mult_ext(named("D4++"), named("D4++")).value, 2 * finite_mult_bruteforce(named("D4"), named("D4")));
}

TEST(MultExt, D8ppInE10) {
  auto r = mult_ext(named("D8++"), named("E10"));
  EXPECT_EQ(r.value, 2 * finite_mult_live(named("D8"), named("E8")));
  EXPECT_EQ(r.value, 2u);
}

TEST(MultExt, ValueIsTwiceCertificateSum) {
  for (const char* x : {"A8++", "D10++", "E11", "A4++"}) {
    auto r = mult_ext(named("A2++"), named(x));
    std::uint64_t sum = 0;
    for (const auto& c : r.certificate) sum += c.finite_mult;
    EXPECT_EQ(*r.value, 2 * sum) << x;
  }
}

TEST(MultExt, ZeroWhenNoSubdiagramAdmitsK) {
  EXPECT_EQ(mult_ext(named("E8++"), named("A4++")).value, 0u);
  EXPECT_EQ(mult_ext(named("A1++"), named("hyp:fig2:1")).value, 0u);
}

TEST(MultExt, Errors) {
  EXPECT_EQ(error_of([] { mult_ext(named("A3~"), named("E10")); }), Errc::NotExtType);
  EXPECT_EQ(error_of([] { mult_ext(named("A1++"), named("C3~")); }), Errc::NotSimplyLaced);
}

TEST(Mult, DispatchesOnType) {
  EXPECT_EQ(mult(named("A1++"), named("E10"), 4).method, "a1pp");
  EXPECT_EQ(mult(named("A2++"), named("E10"), 4).method, "ext");
  auto f = mult(named("A2"), named("A4"), 4);
  EXPECT_EQ(f.method, "finite");
  EXPECT_EQ(f.value, 1u);
  EXPECT_EQ(error_of([] { mult(named("hyp:fig2:1"), named("E10"), 4); }), Errc::NotExtType);
}

TEST(Mult, AffineKIsInfinite) {
  auto r = mult(named("A1~"), named("A1++"), 4);
  EXPECT_TRUE(r.infinite());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->linearly_independent());
  ASSERT_EQ(r.family_k.size(), 4u);
  std::set<Int> distinct(r.family_k.begin(), r.family_k.end());
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Mult, AffineKWithoutWitness) {
  EXPECT_EQ(error_of([] { mult(named("A1~"), named("A3"), 3); }), Errc::Undetermined);
}

// ---------------------------------------------------------------------------
// enumerate_pi_systems

TEST(Enumerate, SingleRootsOfA2) {
  auto x = make_root_system(named("A2"));
  EXPECT_EQ(enumerate_pi_systems(x, named("A1"), 2).size(), 6u);
}

TEST(Enumerate, A2InA2) {
  // simple systems of A2 as sets: |W| = 6
  auto x = make_root_system(named("A2"));
  auto all = enumerate_pi_systems(x, named("A2"), 2);
  EXPECT_EQ(all.size(), 6u);
  for (const auto& s : all) EXPECT_TRUE(diagram_isomorphic(s.type_matrix(), named("A2")));
}

TEST(Enumerate, ContainsCanonicalPairInA1pp) {
  auto x = make_root_system(named("A1++"));
  auto all = enumerate_pi_systems(x, named("A1++"), 3);
  auto pi = canonical_pi(x, {0, 1, 2});
  std::set<std::vector<Coeffs>> sets;
  for (const auto& s : all) {
    EXPECT_EQ(s.type_matrix(), named("A1++"));
    sets.insert(s.sorted_coeffs());
  }
  EXPECT_TRUE(sets.count(pi.sorted_coeffs()));
  EXPECT_TRUE(sets.count(pi.negated().sorted_coeffs()));
}

TEST(Enumerate, Fig2HasNoA1ppSystems) {
  for (int k : {1, 2, 3, 4}) {
    auto x = make_root_system(named("hyp:fig2:" + std::to_string(k)));
    EXPECT_TRUE(enumerate_pi_systems(x, named("A1++"), 4).empty()) << k;
  }
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  auto x = make_root_system(named("A2++"));
  Options one, many;
  many.threads = 4;
  auto a = enumerate_pi_systems(x, named("A1++"), 5, one);
  auto b = enumerate_pi_systems(x, named("A1++"), 5, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].coeffs(), b[i].coeffs());
}

TEST(Enumerate, MatchesBruteForceOverPairs) {
  // every pair of real roots of height <= 3 forming a type A1xA1 system
  auto x = make_root_system(named("A1~"));
  Gcm a1a1 = validate_gcm({{2, 0}, {0, 2}});
  std::vector<Coeffs> pool;
  for (const auto& r : x->enumerate_real_roots(3)) {
    pool.push_back(r.coeffs);
    pool.push_back(negated(r.coeffs));
  }
  std::set<std::vector<Coeffs>> expect;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a == b || x->is_root(sub(a, b))) continue;
      if (x->pairing(a, b) != 0 || x->pairing(b, a) != 0) continue;
      std::vector<Coeffs> s{a, b};
      std::sort(s.begin(), s.end());
      expect.insert(s);
    }
  std::set<std::vector<Coeffs>> got;
  for (const auto& s : enumerate_pi_systems(x, a1a1, 3)) got.insert(s.sorted_coeffs());
  EXPECT_EQ(got, expect);
}

TEST(Enumerate, BudgetIsEnforced) {
  Options o;
  o.node_budget = 10;
  auto x = make_root_system(named("A2++"));
  EXPECT_EQ(error_of([&] { enumerate_pi_systems(x, named("A1++"), 6, o); }), Errc::BudgetExceeded);
}

// ---------------------------------------------------------------------------
// canonicalize

TEST(Canonicalize, CanonicalPiOfE10) {
  auto x = make_root_system(named("E10"));
  VertexSet all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto pi = canonical_pi(x, all);
  auto c = canonicalize(pi);
  EXPECT_EQ(c.cls.sign, Sign::Positive);
  EXPECT_EQ(c.cls.ext_subdiagram, all);
  EXPECT_EQ(c.representative.sorted_coeffs(), pi.sorted_coeffs());
}

TEST(Canonicalize, NegationFlipsSignOnly) {
  auto x = make_root_system(named("E10"));
  auto pi = canonical_pi(x, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto a = canonicalize(pi);
  auto b = canonicalize(pi.negated());
  EXPECT_EQ(b.cls.sign, Sign::Negative);
  EXPECT_EQ(a.cls.ext_subdiagram, b.cls.ext_subdiagram);
  EXPECT_EQ(a.cls.finite_rep, b.cls.finite_rep);
}

TEST(Canonicalize, WordCarriesInputToRepresentative) {
  std::mt19937 rng(11);
  auto x = make_root_system(named("A3++"));
  auto pi = canonical_pi(x, {0, 1, 2, 3, 4});
  for (int t = 0; t < 20; ++t) {
    auto moved = pi.transformed(gen::random_word(rng, x->rank(), 12));
    auto c = canonicalize(moved);
    PiSystem image = moved.transformed(c.word);
    if (c.cls.sign == Sign::Negative) image = image.negated();
    EXPECT_EQ(image.sorted_coeffs(), c.representative.sorted_coeffs());
  }
}

TEST(Canonicalize, InvariantUnderRandomWords) {
  std::mt19937 rng(5);
  for (const char* name : {"E10", "A4++", "D5++"}) {
    auto x = make_root_system(named(name));
    VertexSet all(static_cast<std::size_t>(x->rank()));
    std::iota(all.begin(), all.end(), 0);
    auto pi = canonical_pi(x, all);
    auto base = canonicalize(pi).cls;
    auto neg = canonicalize(pi.negated()).cls;
    for (int t = 0; t < 50; ++t) {
      auto w = gen::random_word(rng, x->rank(), 10);
      EXPECT_EQ(canonicalize(pi.transformed(w)).cls, base) << name;
      EXPECT_EQ(canonicalize(pi.negated().transformed(w)).cls, neg) << name;
    }
  }
}

TEST(Canonicalize, GeneralSystemsInvariantUnderRandomWords) {
  // type A2++ inside E10: Sigma = two simple roots of E8 forming A2
  std::mt19937 rng(21);
  auto x = make_root_system(named("E10"));
  VertexSet all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto d = ext_decompose(x->cartan());
  ASSERT_TRUE(d);
  std::vector<Coeffs> sigma;
  for (int i : d->finite_part)
    for (int j : d->finite_part)
      if (i < j && x->cartan()(i, j) == -1 && sigma.empty()) sigma = {x->simple_root(i), x->simple_root(j)};
  auto pi = canonical_pi_general(x, all, sigma);
  EXPECT_TRUE(diagram_isomorphic(pi.type_matrix(), named("A2++")));
  auto base = canonicalize(pi).cls;
  for (int t = 0; t < 50; ++t) EXPECT_EQ(canonicalize(pi.transformed(gen::random_word(rng, 10, 10))).cls, base);
}

TEST(Canonicalize, Rejects) {
  auto x = make_root_system(named("A2"));
  auto s = check_pi_system(x, {vec({1, 0})});
  EXPECT_EQ(error_of([&] { canonicalize(s); }), Errc::NotExtType);
  auto b = make_root_system(named("B3~"));
  auto t = check_pi_system(b, {vec({1, 0, 0, 0})});
  EXPECT_EQ(error_of([&] { canonicalize(t); }), Errc::NotSimplyLaced);
}

TEST(CrossCheck, A1ppInA1pp) {
  auto x = make_root_system(named("A1++"));
  auto cc = cross_check_mult(named("A1++"), x, 5);
  EXPECT_EQ(cc.expected, 2u);
  EXPECT_GT(cc.enumerated, 2u);
  EXPECT_TRUE(cc.agrees());
}

TEST(CrossCheck, RankFourExt) {
  auto x = make_root_system(named("A2++"));
  auto cc = cross_check_mult(named("A1++"), x, 6);
  EXPECT_EQ(cc.expected, 2u);
  EXPECT_TRUE(cc.agrees()) << cc.classes;
}

TEST(CrossCheck, A2ppInA2pp) {
  auto x = make_root_system(named("A2++"));
  auto cc = cross_check_mult(named("A2++"), x, 4);
  EXPECT_EQ(cc.expected, 2u);
  EXPECT_TRUE(cc.agrees()) << cc.classes;
}
