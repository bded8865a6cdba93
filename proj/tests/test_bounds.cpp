#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modq/bounds.hpp"
#include "modq/json_io.hpp"

using namespace modq;

namespace {

Real abs_diff(const Real& a, const Real& b) { return abs(a - b); }

}  // namespace

TEST_CASE("prime power detection") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64})
    CHECK(is_prime_power(q));
  for (std::int64_t q : {1, 6, 10, 12, 15, 24, 36, 100}) CHECK_FALSE(is_prime_power(q));
}

TEST_CASE("rho for q=2 is exactly one half") {
  // The q=2 equation reduces to 2 rho^2 - 3 rho + 1 = 0 with interior root 1/2.
  Real rho = solve_rho(2, Real("1e-40"));
  CHECK(abs_diff(rho, Real(1) / 2) < Real("1e-40"));
}

TEST_CASE("rho for q=7 and residuals across the prime-power range") {
  Real rho7 = solve_rho(7, Real("1e-30"));
  CHECK(abs_diff(rho7, Real("0.7680")) < Real("0.0005"));
  for (std::int64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    Real rho = solve_rho(q, Real("1e-12"));
    CAPTURE(q);
    CHECK(abs(rho_residual(q, rho)) < Real("1e-12"));
    // Appendix chain: 1/(1-rho) > (q-1)/3, equivalently rho > 1 - 3/(q-1).
    CHECK(rho > 0);
    CHECK(rho < 1);
    CHECK(Real(1) / (1 - rho) > Real(q - 1) / 3);
    if (q > 4) CHECK(rho > 1 - Real(3) / (q - 1));
  }
}

TEST_CASE("gamma_2 matches the closed form") {
  // With rho = 1/2: gamma_2 = ln(3/4) - ln(1/2) - (1/3) ln(1/2)
  //                        = ln(3/2) + (1/3) ln 2.
  Real expected = log(Real(3) / 2) + log(Real(2)) / 3;
  CHECK(abs_diff(gamma_q(2, true), expected) < Real("1e-12"));
  CHECK(abs_diff(gamma_q(2, true), Real("0.6365142")) < Real("1e-7"));
}

TEST_CASE("paper anchors for q=7") {
  Real g7 = gamma_q(7, true);
  CHECK(abs_diff(g7, Real("1.8175")) < Real("0.0005"));
  Real nu7 = log(Real(7)) / g7;
  CHECK(abs_diff(nu7, Real("1.07065")) < Real("5e-5"));
  CHECK(abs_diff(omega_lower_bound(7, true, 1), Real("2.1413")) < Real("1e-4"));
  CHECK(abs_diff(alpha_upper_bound(7, true), Real("0.86800")) < Real("5e-5"));
}

TEST_CASE("general-q profile uses the pinned kappa") {
  CHECK(abs_diff(kappa(), Real("0.02831")) == 0);
  CHECK(abs_diff(gamma_q(6, false), Real("1.78331")) < Real("5e-5"));
  // ln q cancels: omega bound is 2 / (1 - kappa/q).
  CHECK(abs_diff(omega_lower_bound(6, false, 1), 2 / (1 - kappa() / 6)) < Real("1e-30"));
  CHECK(abs_diff(omega_lower_bound(6, false, 1), Real("2.00948")) < Real("5e-5"));
}

TEST_CASE("closed-form anchors for q=2") {
  CHECK(abs_diff(omega_lower_bound(2, true, 1), Real("2.17796")) < Real("5e-5"));
  CHECK(abs_diff(alpha_upper_bound(2, true), Real("0.83664")) < Real("5e-5"));
}

TEST_CASE("profile invariants for every prime power up to 64") {
  for (std::int64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    BoundProfile p = bound_profile(q);
    CAPTURE(q);
    CHECK(p.prime_power);
    CHECK(p.gamma < log(Real(q)));  // e^gamma < q
    CHECK(p.c < Real(q));
    CHECK(p.omega_lb_eps1 > 2);
    CHECK(p.omega_lb_eps1 < 3);
    CHECK(p.alpha_ub > 0);
    CHECK(p.alpha_ub < 1);
    CHECK(log(Real(q)) / p.gamma > 1);
  }
}

TEST_CASE("schonhage bound formula") {
  CHECK(abs_diff(schonhage_bound(1, 2, 1, 7), log(Real(7)) / log(Real(2))) < Real("1e-40"));
  CHECK(abs_diff(schonhage_bound(1, 2, 1, 7), Real("2.8074")) < Real("5e-5"));
  CHECK(schonhage_bound(5, 3, 1, 5) == 0);  // f = g: ceil(1) = 1
  CHECK(abs_diff(schonhage_bound(3, 4, 1, 100), log(Real(34)) / log(Real(4))) < Real("1e-40"));
  CHECK(abs_diff(schonhage_bound(3, 4, 1, 100), Real("2.5437")) < Real("5e-5"));
  CHECK_THROWS_AS(schonhage_bound(3, 4, 1, 2), InvalidArgumentError);
  CHECK_THROWS_AS(schonhage_bound(1, 1, 1, 2), InvalidArgumentError);
}

TEST_CASE("schonhage bound monotonicity on random triples") {
  std::mt19937_64 rng(424242);
  for (int rep = 0; rep < 1000; ++rep) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 9);
    BigInt f = 1 + static_cast<std::int64_t>(rng() % 50);
    BigInt g = f + static_cast<std::int64_t>(rng() % 1000);
    Real base = schonhage_bound(f, n, 1, g);
    CHECK(schonhage_bound(f + 1, n, 1, g + 1 >= f + 1 ? g + 1 : f + 1) <=
          schonhage_bound(f, n, 1, g + 1 >= f + 1 ? g + 1 : f + 1));
    CHECK(schonhage_bound(f, n, 1, g + 7) >= base);
  }
}

TEST_CASE("curve rows are monotone across prime powers") {
  std::vector<Real> eps{Real(1)};
  auto rows = curve(2, 64, CurveMode::PrimePowerOnly, eps);
  REQUIRE(rows.size() >= 20);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CAPTURE(rows[i].q);
    CHECK(rows[i].omega_lb[0] < rows[i - 1].omega_lb[0]);
    CHECK(rows[i].alpha_ub > rows[i - 1].alpha_ub);
    CHECK(rows[i].omega_lb[0] > 2);
    CHECK(rows[i].omega_lb[0] < 3);
  }
  // gamma_q / ln q climbs toward 1 along powers of two.
  Real prev = -1;
  for (std::int64_t q : {2, 4, 8, 16, 32, 64}) {
    Real ratio = gamma_q(q, true) / log(Real(q));
    CHECK(ratio > prev);
    CHECK(ratio < 1);
    prev = ratio;
  }
}

TEST_CASE("curve csv format") {
  std::vector<Real> eps{Real(1), Real("0.5")};
  auto rows = curve(2, 8, CurveMode::PrimePowerOnly, eps);
  std::string csv = curve_csv(rows, eps);
  CHECK(csv.rfind("q,prime_power,rho,gamma,omega_lb_eps1,omega_lb_eps0.5,alpha_ub\n", 0) == 0);
  // One line per prime power in 2..8 plus the header.
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 7);

  auto general = curve(2, 8, CurveMode::General, eps);
  CHECK(general.size() == 7);  // every q, prime power or not
}

TEST_CASE("pipeline flags G=1 as out of range") {
  PipelineInput in;
  in.p = 2;
  in.N = 1;
  in.F = 1;
  in.G = 1;
  PipelineReport r = theorem_pipeline(in);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.consistent);
}

TEST_CASE("pipeline arithmetic at p=2, N=2, F=1, G=2") {
  PipelineInput in;
  in.p = 2;
  in.N = 2;
  in.F = 1;
  in.G = 2;
  PipelineReport r = theorem_pipeline(in);
  CHECK(r.applicable);
  CHECK(abs_diff(r.omega_prime, Real(2)) < Real("1e-30"));
  // slack(2) = ln 4 / (2 ln 2) = 1: the small-N correction dominates.
  CHECK(abs_diff(r.slack, Real(1)) < Real("1e-30"));
  CHECK(r.consistent);  // 2 >= 2.17796 - 1
}

TEST_CASE("pipeline rejects an impossible asymptotic claim") {
  PipelineInput in;
  in.p = 7;
  in.claimed_omega = Real("2.10");
  PipelineReport r = theorem_pipeline(in);
  CHECK(r.slack == 0);
  CHECK_FALSE(r.consistent);  // 2.10 < 2.1413

  in.claimed_omega = Real("2.20");
  CHECK(theorem_pipeline(in).consistent);
}

TEST_CASE("pipeline chain: T_8 zeroes onto <2,2,2> and the full proof chain runs") {
  // Interval construction: X = {i+2j}, Y = {4k-2j}, Z = {-i-4k} realize
  // <2,2,2> inside T_8 by zeroing.
  Tensor t8 = structural_tensor(8);
  KillSets kills;
  for (int v : {4, 5, 6, 7}) kills.x.insert(Label(std::to_string(v)));
  for (int v : {1, 3, 5, 7}) kills.y.insert(Label(std::to_string(v)));
  for (int v : {1, 2, 5, 6}) kills.z.insert(Label(std::to_string(v)));
  Tensor zeroed = zero_out(t8, kills);
  REQUIRE(zeroed.size() == 8);

  PipelineInput in;
  in.p = 8;
  in.N = 1;
  in.F = 1;
  in.G = 2;
  in.eps = 1;
  in.kills = kills;
  in.seed = 5;
  in.M_override = 13;
  PipelineReport r = theorem_pipeline(in);
  CHECK(r.applicable);
  CHECK(r.consistent);  // omega' = 3 >= bound
  REQUIRE(r.chain.has_value());
  CHECK(r.chain->copies == 1);
  CHECK(r.chain->g == 2);
  CHECK(r.chain->m == 2);
  CHECK(r.chain->inner_power == 4);
  CHECK(r.chain->sumfree_size == r.chain->independent_triples);
  CHECK(r.chain->bound_ok);
}

TEST_CASE("pipeline chain rejects a zeroing that is not a matmul sum") {
  PipelineInput in;
  in.p = 2;
  in.N = 1;
  in.F = 1;
  in.G = 2;
  in.kills = KillSets{};  // all of T_2 survives; not a matmul tensor
  CHECK_THROWS_AS(theorem_pipeline(in), InvalidArgumentError);
}

TEST_CASE("precision is configurable") {
  set_precision_digits(80);
  Real expected = log(Real(3) / 2) + log(Real(2)) / 3;
  CHECK(abs_diff(gamma_q(2, true), expected) < Real("1e-12"));
  set_precision_digits(50);
}
