#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "parkhanoi/bijection.hpp"

namespace {

using namespace parkhanoi;

PreferenceVector pv(std::vector<int> v) { return PreferenceVector(std::move(v)); }
HanoiState st(std::vector<int> v) { return HanoiState(std::move(v)); }

TEST(ThToPf, Examples) {
  EXPECT_EQ(th_to_pf(st({2, 2, 1, 0})), pv({2, 2, 1}));
  EXPECT_EQ(th_to_pf(st({1, 2, 1, 0})), pv({1, 3, 1}));
  EXPECT_EQ(th_to_pf(st({1, 1, 0})), pv({1, 1}));
  EXPECT_EQ(displacement(pv({2, 2, 1})), 1);
  EXPECT_EQ(displacement(pv({1, 3, 1})), 1);
}

TEST(ThToPf, RejectsNonIdealWithCondition) {
  try {
    th_to_pf(st({0, 0, 0, 0}));
    FAIL() << "expected domain_error";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.condition(), 1);
  }
  try {
    th_to_pf(st({1, 1, 2, 3}));
    FAIL() << "expected domain_error";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.condition(), 0);
  }
}

TEST(PfToTh, Examples) {
  EXPECT_EQ(pf_to_th(pv({2, 2, 1})), st({2, 2, 1, 0}));
  EXPECT_EQ(pf_to_th(pv({1, 3, 1})), st({1, 2, 1, 0}));
  EXPECT_EQ(pf_to_th(pv({1, 1})), st({1, 1, 0}));
  try {
    pf_to_th(pv({1, 2, 1}));
    FAIL() << "expected domain_error";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.condition(), 2);
  }
  EXPECT_THROW(pf_to_th(pv({1})), domain_error);
}

TEST(Record, CarriesSharedJ) {
  const BijectionRecord r = make_record(st({1, 2, 1, 0}));
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.doubled_value, 1);
  EXPECT_EQ(r.pf, pv({1, 3, 1}));
  EXPECT_TRUE(is_displacement_one_characterized(r.pf));
}

TEST(Bijection, RoundTripsAndJPreservation) {
  for (int n = 2; n <= 7; ++n) {
    for (const HanoiState& x : enumerate_ideal_states(n)) {
      const PreferenceVector a = th_to_pf(x);
      ASSERT_EQ(pf_to_th(a), x);
      ASSERT_EQ(check_displacement_one(a).witness.repeated,
                check_ideal_state(x).witness.doubled_peg);
    }
    for (const PreferenceVector& a : pf_displacement_one_constructive(n)) {
      ASSERT_EQ(th_to_pf(pf_to_th(a)), a);
    }
  }
}

// The image of the ideal states is exactly the set of parking functions
// with displacement one, found here by parking every vector in [n]^n.
TEST(Bijection, ImageEqualsSimulatedSet) {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<int>> simulated;
    for (const auto& prefs : oracle::all_words(n, 1, n)) {
      if (oracle::displacement(prefs) == 1) simulated.insert(prefs);
    }
    std::set<std::vector<int>> image;
    for (const HanoiState& x : enumerate_ideal_states(n)) {
      const auto a = th_to_pf(x);
      image.emplace(a.values().begin(), a.values().end());
    }
    EXPECT_EQ(image, simulated) << "n=" << n;
    EXPECT_EQ(image.size(), oracle::lah(n, 2));
  }
}

TEST(VerifyBijection, SmallCases) {
  const auto three = verify_bijection(3);
  EXPECT_EQ(three.ideal_count, 6u);
  EXPECT_EQ(three.pf1_count, 6u);
  EXPECT_TRUE(three.all());

  const auto two = verify_bijection(2);
  EXPECT_EQ(two.ideal_count, 1u);
  EXPECT_EQ(two.pf1_count, 1u);
  EXPECT_TRUE(two.all());

  const auto one = verify_bijection(1);
  EXPECT_EQ(one.ideal_count, 0u);
  EXPECT_EQ(one.pf1_count, 0u);
  EXPECT_TRUE(one.all());

  EXPECT_THROW(verify_bijection(0), validation_error);
}

TEST(VerifyBijection, PastBudgetUsesStructuralSet) {
  Budget b;
  b.max_n = 5;
  const auto r = verify_bijection(6, b);
  EXPECT_FALSE(r.pf1_exhaustive);
  EXPECT_TRUE(r.all());
  EXPECT_EQ(r.pf1_count, 1800u);
}

// Random ideal states of larger games still round-trip.
TEST(Bijection, RandomLargeIdealStates) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 9 + static_cast<int>(rng() % 12);
    std::vector<int> interior;
    for (int p = 1; p <= n - 1; ++p) interior.push_back(p);
    std::uniform_int_distribution<int> pick(0, n - 2);
    interior.push_back(interior[static_cast<std::size_t>(pick(rng))]);
    std::shuffle(interior.begin(), interior.end(), rng);
    interior.push_back(0);
    const HanoiState x(interior);
    ASSERT_TRUE(is_ideal_state(x));
    const PreferenceVector a = th_to_pf(x);
    ASSERT_EQ(displacement(a), 1);
    ASSERT_EQ(pf_to_th(a), x);
  }
}

}  // namespace
