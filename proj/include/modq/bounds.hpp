#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modq/scalar.hpp"
#include "modq/tensor.hpp"

namespace modq {

/// Arbitrary-precision real used for every bound computation.
using Real = boost::multiprecision::mpfr_float;

/// Working precision in significant decimal digits (default 50).
void set_precision_digits(unsigned digits);
unsigned precision_digits();

bool is_prime_power(std::int64_t q);

/// Pinned constant from the non-prime-power sum-free bound.
Real kappa();

/// Root in (0,1) of rho + rho^2 + ... + rho^{q-1} = (q-1)/3 (1 + 2 rho^q),
/// by bisection to |residual| < tol.
Real solve_rho(std::int64_t q, const Real& tol);

/// Residual of the defining equation at the given point.
Real rho_residual(std::int64_t q, const Real& rho);

/// gamma_q = ln(1-rho^q) - ln(1-rho) - (q-1)/3 ln(rho) for prime powers,
/// (1 - kappa/q) ln(q) otherwise.
Real gamma_q(std::int64_t q, bool prime_power);

/// (1+eps) ln(q) / gamma_q: the floor on omega'_eps achievable from T_q.
Real omega_lower_bound(std::int64_t q, bool prime_power, const Real& eps);

/// 2 gamma_q / ln(q) - 1: the ceiling on alpha achievable from T_q.
Real alpha_upper_bound(std::int64_t q, bool prime_power);

/// log_n(ceil(g/f)); the ceiling is computed in exact integer arithmetic.
Real schonhage_bound(const BigInt& f, std::int64_t n, const Real& eps, const BigInt& g);

struct BoundProfile {
  std::int64_t q = 0;
  bool prime_power = false;
  std::optional<Real> rho;  // only for prime powers
  Real gamma;
  Real c;  // e^gamma
  Real omega_lb_eps1;
  Real alpha_ub;
  Real omega_lb(const Real& eps) const;
};

/// force_general computes the kappa-based profile even for prime powers.
BoundProfile bound_profile(std::int64_t q, bool force_general = false);

struct CurveRow {
  std::int64_t q = 0;
  bool prime_power = false;
  std::optional<Real> rho;
  Real gamma;
  std::vector<Real> omega_lb;  // one per requested eps
  Real alpha_ub;
};

enum class CurveMode { PrimePowerOnly, General };

std::vector<CurveRow> curve(std::int64_t q_min, std::int64_t q_max, CurveMode mode,
                            const std::vector<Real>& eps_list);

/// CSV with header q,prime_power,rho,gamma,omega_lb_eps...,alpha_ub at
/// 12 significant digits.
std::string curve_csv(const std::vector<CurveRow>& rows, const std::vector<Real>& eps_list);

/// Desk-scale realization of the main-theorem proof chain.
struct PipelineChain {
  std::int64_t copies = 0;  // F recognized in the zeroed power
  int g = 0, m = 0;         // recognized copy shape <g, m, g>
  int inner_power = 0;      // power used for the independent-triple phase
  std::size_t independent_triples = 0;
  std::size_t sumfree_size = 0;
  std::string sumfree_cap;  // c_p^(N * inner_power), printed
  bool bound_ok = false;
};

struct PipelineReport {
  std::int64_t p = 0;
  Real eps;
  int N = 0;
  bool applicable = true;  // false when G < 2 (log base out of range)
  Real omega_prime;        // computed log_G ceil(p^N / F), or the claimed value
  Real bound;              // (1+eps) ln(p) / gamma_p
  Real slack;              // ln(N^2) / (N ln G); 0 in asymptotic mode
  bool consistent = false;
  std::optional<PipelineChain> chain;
};

struct PipelineInput {
  std::int64_t p = 2;
  Real eps = 1;
  int N = 1;
  BigInt F = 1;
  BigInt G = 1;
  std::optional<Real> claimed_omega;  // asymptotic mode: compare a claim, slack 0
  std::optional<KillSets> kills;      // run the full proof chain
  std::uint64_t seed = 1;
  std::optional<std::int64_t> M_override;
  std::uint64_t term_cap = kDefaultTensorTermCap;
};

PipelineReport theorem_pipeline(const PipelineInput& in);

}  // namespace modq
