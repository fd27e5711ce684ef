// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "unihash/sizing.hpp"

using namespace unihash;

TEST_CASE("Stinson bound") {
  CHECK(stinson_min_bits(1, 1) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
  CHECK(stinson_min_bits_exact(1, 1) == doctest::Approx(1.584962500721156).epsilon(1e-15));
  CHECK(std::fabs(stinson_min_bits_exact(64, 32) - stinson_min_bits_approx(64, 32)) <= std::ldexp(1.0, -63));
  CHECK(stinson_min_bits_exact(64, 32) == doctest::Approx(96.0 - std::ldexp(1.0, -32) / std::log(2.0)).epsilon(1e-15));
  for (std::uint64_t M : {10ULL, 100ULL, 500ULL}) {
    for (std::uint64_t z : {1ULL, 2ULL, 8ULL, 32ULL}) {
      CHECK(std::fabs(stinson_min_bits_exact(M, z) - stinson_min_bits_approx(M, z)) < std::ldexp(1.0, 1 - static_cast<int>(M)));
    }
  }
  const double big = stinson_min_bits(1000000, 32);
  CHECK(big < 1000000.0 + 32);
  CHECK(big > 1000000.0 + 31.9);
  CHECK(stinson_min_bits(1000, 32) == stinson_min_bits_exact(1000, 32));
}

TEST_CASE("family bits") {
  CHECK(family_bits(32, 32, 32) == 126);
  CHECK(family_bits(0, 7, 32) == 38);
  CHECK(family_bits(32768, 33, 32) == 63616);
  CHECK(static_cast<double>(family_bits(32768, 33, 32)) / stinson_min_bits(32768, 32) ==
        doctest::Approx(1.94).epsilon(0.005));
  for (std::uint64_t M = 1; M < 200; M += 7) {
    for (std::uint64_t L = 1; L < 70; L += 3) {
      for (std::uint64_t z : {1ULL, 16ULL, 32ULL}) {
        CHECK(static_cast<double>(family_bits(M, L, z)) >= stinson_min_bits(M, z));
      }
    }
  }
}

TEST_CASE("random-bit optimum agrees with an integer scan") {
  CHECK(optimal_L_randbits(32768, 32) == doctest::Approx(std::sqrt(31.0 * 16384)).epsilon(1e-12));
  CHECK(optimal_L_randbits(2, 2) == doctest::Approx(1.0));
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t M = 64 + rng() % 100000;
    const std::uint64_t z = 2 + rng() % 63;
    double best = 1e300;
    std::uint64_t arg = 0;
    for (std::uint64_t L = 1; L <= 4096; ++L) {
      const double bound = static_cast<double>(z + L - 1) * (static_cast<double>(M) / L + 2);
      if (bound < best) best = bound, arg = L;
    }
    CHECK(std::fabs(static_cast<double>(arg) - std::round(optimal_L_randbits(M, z))) <= 1.0);
  }
}

TEST_CASE("cost optimum agrees with an integer scan") {
  CHECK(optimal_L_cost(32, 1.5) == doctest::Approx(62.0));
  CHECK(optimal_L_cost(2, 2.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(optimal_L_cost(32, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_L_cost(32, 0.5), std::invalid_argument);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> alpha_dist(1.2, 3.0);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t z = 2 + rng() % 63;
    const double alpha = alpha_dist(rng);
    double best = 1e300;
    std::uint64_t arg = 0;
    for (std::uint64_t L = 1; L <= 4096; ++L) {
      const double c = cost_per_bit(z, alpha, L);
      if (c < best) best = c, arg = L;
    }
    CHECK(std::fabs(static_cast<double>(arg) - std::round(optimal_L_cost(z, alpha))) <= 1.0);
  }
}

TEST_CASE("cost curve") {
  CHECK(cost_per_bit(32, 1.5, 1) == doctest::Approx(std::pow(32.0, 1.5)));
  CHECK(cost_per_bit(32, 1.5, 1) == doctest::Approx(181.0).epsilon(0.001));
  std::vector<std::uint64_t> Ls(200);
  for (std::uint64_t i = 0; i < Ls.size(); ++i) Ls[i] = i + 1;
  const auto rows = cost_curve(32, 1.5, Ls);
  REQUIRE(rows.size() == 200);
  auto min_it = std::min_element(rows.begin(), rows.end(),
                                 [](const CostRow& a, const CostRow& b) { return a.cost_per_bit < b.cost_per_bit; });
  CHECK(min_it->char_bits == 62);
  for (auto it = min_it + 1; it != rows.end(); ++it) CHECK(it->cost_per_bit > (it - 1)->cost_per_bit);
}

TEST_CASE("constrained Stinson ratio") {
  const std::vector<std::uint64_t> Ms{1000, 100000, 1000000};
  const StinsonCurve c = stinson_ratio_curve(Ms, 32, std::vector<std::uint64_t>{8, 16, 32, 64});
  REQUIRE(c.rows.size() == 3);
  CHECK(c.notes.size() == 2);
  for (const auto& r : c.rows) CHECK(r.best_L == 33);
  CHECK(c.rows.back().ratio == doctest::Approx(64.0 / 33).epsilon(0.01));

  const StinsonCurve wide = stinson_ratio_curve(Ms, 32, std::vector<std::uint64_t>{8, 16, 32, 64, 128});
  CHECK(wide.rows.back().best_L == 97);
  CHECK(wide.rows.back().ratio == doctest::Approx(128.0 / 97).epsilon(0.01));

  CHECK_THROWS_AS(stinson_ratio_curve(Ms, 32, std::vector<std::uint64_t>{8, 16}), std::invalid_argument);
}

TEST_CASE("unconstrained Stinson ratio") {
  const std::vector<std::uint64_t> Ms{1000000};
  const StinsonCurve c = stinson_ratio_curve(Ms, 32, std::nullopt);
  REQUIRE(c.rows.size() == 1);
  CHECK(c.rows[0].ratio < 1.05);
  CHECK(c.rows[0].ratio >= 1.0);
  const auto near = static_cast<std::uint64_t>(std::llround(optimal_L_randbits(1000000, 32)));
  CHECK(c.rows[0].family_bits <= family_bits(1000000, near, 32));
  for (std::uint64_t L = 1; L <= 20000; ++L) CHECK(c.rows[0].family_bits <= family_bits(1000000, L, 32));
}

TEST_CASE("CSV output is deterministic") {
  const std::vector<std::uint64_t> Ms{64, 1000};
  auto render = [&] {
    std::ostringstream out;
    write_stinson_csv(out, stinson_ratio_curve(Ms, 32, std::vector<std::uint64_t>{64}));
    return out.str();
  };
  CHECK(render() == render());
  CHECK(render() == "M,best_L,family_bits,stinson_bits,ratio\n64,33,192,96,2\n1000,33,2048,1032,1.9845\n");
  std::ostringstream cost;
  const std::vector<std::uint64_t> Ls{1, 62};
  write_cost_csv(cost, cost_curve(32, 1.5, Ls));
  CHECK(cost.str() == "L,cost_per_bit\n1,181.019\n62,14.4655\n");
}
