#include <doctest.h>

#include <cmath>
#include <random>

#include "bbs/crystal.hpp"
#include "bbs/error.hpp"
#include "bbs/theta.hpp"
#include "bbs/verify.hpp"
#include "oracle.hpp"

using bbs::HalfInt;
using bbs::HalfIntVector;
using bbs::IntMatrix;
using bbs::IntVector;

namespace {

IntMatrix one_by_one(std::int64_t v) {
  IntMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

HalfIntVector doubled(IntVector v) { return HalfIntVector{std::move(v)}; }

// random A from a distinct-part content with g <= 3 and L <= 20
bbs::BetheMatrix random_matrix(std::mt19937_64& rng) {
  while (true) {
    const auto len = static_cast<std::int64_t>(2 + rng() % 19);
    const auto contents = bbs::distinct_part_contents(len);
    const auto& mu = contents[rng() % contents.size()];
    if (!mu.empty() && mu.size() <= 3) return bbs::build_A(mu, len);
  }
}

}  // namespace

TEST_CASE("period matrix") {
  const auto m = bbs::build_A({1, 2, 3}, 14);
  CHECK(m.vacancies == IntVector{8, 4, 2});
  CHECK(m.a(0, 0) == 10);
  CHECK(m.a(0, 1) == 2);
  CHECK(m.a(0, 2) == 2);
  CHECK(m.a(1, 1) == 8);
  CHECK(m.a(1, 2) == 4);
  CHECK(m.a(2, 2) == 8);
  CHECK(m.a(2, 1) == 4);
  CHECK(bbs::determinant(m.a) == 448);
  const auto f = bbs::build_A({2, 6}, 170);
  CHECK(f.a(0, 0) == 166);
  CHECK(f.a(0, 1) == 4);
  CHECK(f.a(1, 1) == 166);
  CHECK(bbs::build_A({1}, 4).a(0, 0) == 4);
  CHECK(bbs::build_A({}, 4).genus() == 0);

  CHECK_THROWS_AS(bbs::build_A({1, 1}, 10), bbs::Error);
  CHECK_THROWS_AS(bbs::build_A({3}, 5), bbs::Error);
  CHECK_THROWS_AS(bbs::build_A({2, 1}, 10), bbs::Error);
}

TEST_CASE("period matrix identities for every small content") {
  for (std::int64_t len = 1; len <= 14; ++len) {
    for (const auto& mu : bbs::distinct_part_contents(len)) {
      const auto m = bbs::build_A(mu, len);
      const auto h1 = bbs::h_vector(mu, 1);
      const auto ah1 = m.a * h1;
      for (std::size_t i = 0; i < mu.size(); ++i) CHECK(ah1[i] == len);
      std::int64_t product = mu.empty() ? 1 : len;
      for (std::size_t i = 0; i + 1 < mu.size(); ++i) product *= m.vacancies[i];
      CHECK(bbs::determinant(m.a) == product);
      for (auto minor : bbs::leading_minors(m.a)) CHECK(minor > 0);
    }
  }
}

TEST_CASE("h vectors") {
  CHECK(bbs::h_vector({1, 2, 3}, 1) == IntVector{1, 1, 1});
  CHECK(bbs::h_vector({1, 2, 3}, 2) == IntVector{1, 2, 2});
  CHECK(bbs::h_vector({1, 2, 3}, bbs::kInfinity) == IntVector{1, 2, 3});
  CHECK(bbs::h_vector({1, 2, 3}, 7) == IntVector{1, 2, 3});
}

TEST_CASE("ultradiscrete theta examples") {
  CHECK(bbs::ud_theta(one_by_one(4), doubled({0})) == HalfInt{0});
  CHECK(bbs::ud_theta(one_by_one(4), HalfIntVector::from_integers({3})) == HalfInt::from_integer(1));
  const auto t7 = bbs::ud_theta_minimize(one_by_one(4), HalfIntVector::from_integers({7}));
  CHECK(t7.value == HalfInt::from_integer(6));
  CHECK(t7.argmin == IntVector{-2});
  CHECK(bbs::ud_theta(IntMatrix(0, 0), doubled({})) == HalfInt{0});
  // z = 1/2: minimum of 2n^2 + n/2 is 0, at n = 0
  CHECK(bbs::ud_theta(one_by_one(4), doubled({1})) == HalfInt{0});
  const auto m = bbs::build_A({1, 2, 3}, 14);
  CHECK(bbs::ud_theta(m, doubled({0, 0, 0})) == HalfInt{0});
}

TEST_CASE("ultradiscrete theta agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = random_matrix(rng);
    std::uniform_int_distribution<std::int64_t> d(-80, 80);
    IntVector z2(m.genus());
    for (auto& v : z2) v = d(rng);
    const auto got = bbs::ud_theta_minimize(m.a, doubled(z2));
    const auto want = bbs::oracle::brute_force_theta_doubled(m.a, z2);
    CHECK(got.value.doubled == want);
    CHECK(-bbs::oracle::doubled_q(m.a, z2, got.argmin) == want);
  }
}

TEST_CASE("brute force over [-8,8]^g when that box is large enough") {
  // here |A^{-1} z|_inf < 5 for |z|_inf <= 40, and the integer minimizer sits
  // within 2 of the continuous one, so the box holds it
  const auto m = bbs::build_A({1, 2, 3}, 20);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> d(-80, 80);
  for (int trial = 0; trial < 300; ++trial) {
    IntVector z2(3);
    for (auto& v : z2) v = d(rng);
    const auto want = -bbs::oracle::box_min_doubled_q(m.a, z2, IntVector(3, 0), 8);
    CHECK(bbs::ud_theta(m, doubled(z2)).doubled == want);
  }
}

TEST_CASE("quasi-periodicity and evenness") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = random_matrix(rng);
    const std::size_t g = m.genus();
    std::uniform_int_distribution<std::int64_t> zd(-60, 60), cd(-3, 3);
    IntVector z2(g), c(g);
    for (auto& v : z2) v = zd(rng);
    for (auto& v : c) v = cd(rng);
    const IntVector v = m.a * c;  // v in A Z^g, and A^{-1} v = c
    IntVector shifted(g);
    for (std::size_t i = 0; i < g; ++i) shifted[i] = z2[i] + 2 * v[i];
    // doubled: 2 c^T (z + v/2) = c^T z2 + c^T v
    std::int64_t rhs = 0;
    for (std::size_t i = 0; i < g; ++i) rhs += c[i] * z2[i] + c[i] * v[i];
    const auto t0 = bbs::ud_theta(m.a, doubled(z2));
    CHECK(bbs::ud_theta(m.a, doubled(shifted)).doubled - t0.doubled == rhs);
    IntVector neg(g);
    for (std::size_t i = 0; i < g; ++i) neg[i] = -z2[i];
    CHECK(bbs::ud_theta(m.a, doubled(neg)) == t0);
  }
}

TEST_CASE("c_L is the quadratic form being minimized") {
  const auto m = bbs::build_A({1, 2, 3}, 14);
  const IntVector angle{0, 4, 1};
  CHECK(bbs::quadratic_form_cL(m, angle, 3, 0, {0, 0, 0}) == HalfInt{0});
  for (std::int64_t k = 0; k <= 14; ++k) {
    for (int r : {0, 1}) {
      const auto z = bbs::theta_argument(m, angle, k, r);
      for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b)
          for (std::int64_t c = -2; c <= 2; ++c) {
            const IntVector n{a, b, c};
            CHECK(bbs::quadratic_form_cL(m, angle, k, r, n).doubled ==
                  bbs::oracle::doubled_q(m.a, z.doubled, n));
          }
    }
  }
  // 2 e_1 picks up exactly L' - L from the L-dependent term
  const auto m16 = bbs::build_A({1, 2, 3}, 16);
  const IntVector n{2, 0, 0};
  CHECK(bbs::quadratic_form_cL(m16, angle, 3, 1, n).doubled - bbs::quadratic_form_cL(m, angle, 3, 1, n).doubled ==
        2 * 2);
  // 0/1 vectors do not see L at all
  const IntVector e{1, 0, 1};
  CHECK(bbs::quadratic_form_cL(m16, angle, 3, 1, e) == bbs::quadratic_form_cL(m, angle, 3, 1, e));
}

TEST_CASE("degeneration to the 0/1 minimization for large L") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t small_len = 2 + static_cast<std::int64_t>(rng() % 10);
    const auto rc = bbs::random_rigged_configuration(rng, small_len);
    bool distinct = true;
    for (std::size_t i = 1; i < rc.parts.size(); ++i) distinct = distinct && rc.parts[i] != rc.parts[i - 1];
    if (!distinct || rc.parts.empty()) continue;
    const std::int64_t k = static_cast<std::int64_t>(rng() % 10) - 5;
    const int r = static_cast<int>(rng() % 2);
    std::int64_t total = 0, jmax = 0;
    for (auto p : rc.parts) total += p;
    for (auto j : rc.riggings) jmax = std::max(jmax, std::abs(j));
    const std::int64_t len = 4 * total + 2 * jmax + 2 * std::abs(k) + small_len;
    const auto m = bbs::build_A(rc.parts, len);
    const auto z = bbs::theta_argument(m, rc.riggings, k, r);
    const auto best = bbs::ud_theta_minimize(m.a, z);
    // -min over {0,1}^g of c(m), evaluated directly without the matrix
    const std::size_t g = rc.parts.size();
    std::int64_t min01 = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
      std::int64_t c = 0;
      for (std::size_t i = 0; i < g; ++i) {
        if (!(mask >> i & 1)) continue;
        c += rc.riggings[i] + r * rc.parts[i] - k;
        for (std::size_t j = 0; j < g; ++j)
          if (mask >> j & 1) c += std::min(rc.parts[i], rc.parts[j]);
      }
      min01 = std::min(min01, c);
    }
    for (auto x : best.argmin) CHECK((x == 0 || x == 1));
    CHECK(best.value.doubled == -2 * min01);
  }
}

TEST_CASE("soft theta") {
  double direct = 0.0;
  for (int n = -40; n <= 40; ++n) direct += std::exp(-2.0 * n * n);
  CHECK(bbs::riemann_theta_soft(one_by_one(4), {0.0}, 1.0, 6) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(direct == doctest::Approx(1.27134).epsilon(1e-5));

  try {
    bbs::riemann_theta_soft(one_by_one(4), {0.0}, 100.0, 1);
    FAIL("expected RadiusTooSmall");
  } catch (const bbs::Error& e) {
    CHECK(e.code() == bbs::ErrorCode::RadiusTooSmall);
  }

  // eps log theta tends to the ultradiscrete value
  const auto m = bbs::build_A({1, 2, 3}, 14);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  for (int trial = 0; trial < 50; ++trial) {
    IntVector z2(3);
    for (auto& v : z2) v = d(rng);
    const auto zs = doubled(z2).values();
    const double ud = bbs::ud_theta(m, doubled(z2)).value();
    const double eps = 0.02;
    const double soft = eps * bbs::log_riemann_theta_soft(m.a, zs, eps);
    CHECK(soft >= ud - 1e-9);
    CHECK(soft <= ud + eps * std::log(8.0) + 1e-9);
    CHECK(bbs::riemann_theta_soft(m.a, zs, 1.0) > 0.0);
  }
}
