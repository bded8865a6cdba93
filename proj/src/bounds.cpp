#include "modq/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "modq/catalog.hpp"
#include "modq/construct.hpp"

namespace modq {

namespace {

unsigned g_digits = 0;

void ensure_precision() {
  if (g_digits == 0) {
    g_digits = 50;
    Real::default_precision(g_digits);
  }
}

}  // namespace

void set_precision_digits(unsigned digits) {
  if (digits < 15) throw InvalidArgumentError("precision below 15 digits is not supported");
  g_digits = digits;
  Real::default_precision(digits);
}

unsigned precision_digits() {
  ensure_precision();
  return g_digits;
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  while (q % p == 0) q /= p;
  return q == 1;
}

Real kappa() {
  ensure_precision();
  // The paper's closed form for kappa does not reproduce this value in any
  // standard log base; the printed numeric constant is authoritative.
  return Real("0.02831");
}

Real rho_residual(std::int64_t q, const Real& rho) {
  ensure_precision();
  Real lhs = 0;
  for (std::int64_t j = q - 1; j >= 1; --j) lhs = (lhs + 1) * rho;
  Real rhs = Real(q - 1) / 3 * (1 + 2 * pow(rho, static_cast<unsigned>(q)));
  return lhs - rhs;
}

Real solve_rho(std::int64_t q, const Real& tol) {
  ensure_precision();
  if (q < 2) throw InvalidArgumentError("solve_rho requires q >= 2");
  if (tol <= 0) throw InvalidArgumentError("tolerance must be positive");
  // The defining function is negative near 0 and positive just below 1
  // (rho = 1 is always a root; the interior root is the one wanted).
  Real lo = Real(1) / pow(Real(10), static_cast<unsigned>(g_digits));
  Real hi = 1 - Real(1) / pow(Real(10), g_digits / 2);
  Real flo = rho_residual(q, lo);
  Real fhi = rho_residual(q, hi);
  if (!(flo < 0) || !(fhi > 0))
    throw Error("solve_rho found no sign change bracket for q=" + std::to_string(q));
  Real width_target = Real(1) / pow(Real(10), static_cast<unsigned>(g_digits) - 5);
  Real mid = (lo + hi) / 2;
  for (int iter = 0; iter < 20 * static_cast<int>(g_digits); ++iter) {
    mid = (lo + hi) / 2;
    Real fm = rho_residual(q, mid);
    if (fm < 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < width_target) break;
  }
  mid = (lo + hi) / 2;
  if (abs(rho_residual(q, mid)) >= tol)
    throw Error("solve_rho did not reach the requested tolerance for q=" + std::to_string(q));
  return mid;
}

Real gamma_q(std::int64_t q, bool prime_power) {
  ensure_precision();
  if (q < 2) throw InvalidArgumentError("gamma_q requires q >= 2");
  if (prime_power) {
    Real tol = Real(1) / pow(Real(10), static_cast<unsigned>(g_digits) - 10);
    Real rho = solve_rho(q, tol);
    return log(1 - pow(rho, static_cast<unsigned>(q))) - log(1 - rho) -
           Real(q - 1) / 3 * log(rho);
  }
  return (1 - kappa() / q) * log(Real(q));
}

Real omega_lower_bound(std::int64_t q, bool prime_power, const Real& eps) {
  ensure_precision();
  if (!(eps > 0) || eps > 1) throw InvalidArgumentError("eps must lie in (0,1]");
  return (1 + eps) * log(Real(q)) / gamma_q(q, prime_power);
}

Real alpha_upper_bound(std::int64_t q, bool prime_power) {
  ensure_precision();
  return 2 * gamma_q(q, prime_power) / log(Real(q)) - 1;
}

Real schonhage_bound(const BigInt& f, std::int64_t n, const Real& eps, const BigInt& g) {
  ensure_precision();
  if (f < 1 || g < f) throw InvalidArgumentError("schonhage_bound requires g >= f >= 1");
  if (n < 2) throw InvalidArgumentError("schonhage_bound requires n >= 2");
  if (!(eps > 0) || eps > 1) throw InvalidArgumentError("eps must lie in (0,1]");
  BigInt ceiling = (g + f - 1) / f;
  return log(Real(ceiling.str())) / log(Real(n));
}

Real BoundProfile::omega_lb(const Real& eps) const {
  if (!(eps > 0) || eps > 1) throw InvalidArgumentError("eps must lie in (0,1]");
  return (1 + eps) * log(Real(q)) / gamma;
}

BoundProfile bound_profile(std::int64_t q, bool force_general) {
  ensure_precision();
  BoundProfile p;
  p.q = q;
  p.prime_power = is_prime_power(q) && !force_general;
  if (p.prime_power) {
    Real tol = Real(1) / pow(Real(10), static_cast<unsigned>(g_digits) - 10);
    p.rho = solve_rho(q, tol);
    p.gamma = log(1 - pow(*p.rho, static_cast<unsigned>(q))) - log(1 - *p.rho) -
              Real(q - 1) / 3 * log(*p.rho);
  } else {
    p.gamma = gamma_q(q, false);
  }
  p.c = exp(p.gamma);
  p.omega_lb_eps1 = 2 * log(Real(q)) / p.gamma;
  p.alpha_ub = 2 * p.gamma / log(Real(q)) - 1;
  return p;
}

std::vector<CurveRow> curve(std::int64_t q_min, std::int64_t q_max, CurveMode mode,
                            const std::vector<Real>& eps_list) {
  ensure_precision();
  if (q_min < 2 || q_min > q_max) throw InvalidArgumentError("curve requires 2 <= q_min <= q_max");
  if (eps_list.empty()) throw InvalidArgumentError("curve requires at least one eps");
  std::vector<CurveRow> rows;
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    bool pp = is_prime_power(q);
    if (mode == CurveMode::PrimePowerOnly && !pp) continue;
    BoundProfile p = bound_profile(q, mode == CurveMode::General);
    CurveRow row;
    row.q = q;
    row.prime_power = pp;
    row.rho = p.rho;
    row.gamma = p.gamma;
    row.alpha_ub = p.alpha_ub;
    for (const Real& eps : eps_list) row.omega_lb.push_back(p.omega_lb(eps));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fixed_digits(const Real& v, unsigned digits = 12) { return v.str(digits); }

}  // namespace

std::string curve_csv(const std::vector<CurveRow>& rows, const std::vector<Real>& eps_list) {
  std::ostringstream out;
  out << "q,prime_power,rho,gamma";
  for (const Real& eps : eps_list) out << ",omega_lb_eps" << eps.str(4);
  out << ",alpha_ub\n";
  for (const CurveRow& row : rows) {
    out << row.q << "," << (row.prime_power ? 1 : 0) << ",";
    if (row.rho) out << fixed_digits(*row.rho);
    out << "," << fixed_digits(row.gamma);
    for (const Real& w : row.omega_lb) out << "," << fixed_digits(w);
    out << "," << fixed_digits(row.alpha_ub) << "\n";
  }
  return out.str();
}

namespace {

// Smallest n with g^2 | n and g*m | n.
int lemma_power(int g, int m) {
  auto gcd = [](long long a, long long b) {
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  long long a = static_cast<long long>(g) * g;
  long long b = static_cast<long long>(g) * m;
  return static_cast<int>(a / gcd(a, b) * b);
}

PipelineChain run_chain(const PipelineInput& in, const BigInt& F_int, int G) {
  // Recognize the claimed zeroing T_p^N -> F (+) <G, G^eps, G>.
  Tensor power = tensor_power(structural_tensor(static_cast<int>(in.p)), in.N, in.term_cap);
  Tensor zeroed = zero_out(power, *in.kills);
  std::optional<MatmulRecognition> rec = recognize_matmul_copies(zeroed);
  if (!rec)
    throw InvalidArgumentError(
        "structural check failed: the zeroing is not a disjoint sum of matmul tensors");
  if (BigInt(rec->copies.size()) != F_int || rec->n != G || rec->p != G)
    throw InvalidArgumentError(
        "structural check failed: recognized " + std::to_string(rec->copies.size()) +
        " copies of <" + std::to_string(rec->n) + "," + std::to_string(rec->m) + "," +
        std::to_string(rec->p) + ">, claimed F=" + F_int.str() + ", G=" + std::to_string(G));
  Real claimed_m = pow(Real(G), in.eps);
  if (abs(claimed_m - rec->m) > Real("1e-9"))
    throw InvalidArgumentError("structural check failed: recognized middle dimension " +
                               std::to_string(rec->m) + " does not equal G^eps");

  PipelineChain chain;
  chain.copies = static_cast<std::int64_t>(rec->copies.size());
  chain.g = G;
  chain.m = rec->m;
  chain.inner_power = lemma_power(G, rec->m);

  // Independent triples inside one copy power, then mapped into every block
  // of (F (+) <G,m,G>)^(x)n'. Distinct blocks use disjoint variables, so the
  // union stays independent.
  ConstructionReport inner =
      build_independent(G, rec->m, chain.inner_power, in.seed, in.M_override);
  std::size_t blocks = 1;
  for (int i = 0; i < chain.inner_power; ++i) {
    blocks *= rec->copies.size();
    if (blocks > 4096) throw SizeCapError("pipeline chain: too many copy blocks at desk scale");
  }

  TripleSet mapped;
  mapped.role = TripleRole::Independent;
  std::vector<std::size_t> word(static_cast<std::size_t>(chain.inner_power), 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const TermKey& t : inner.result.triples) {
      Label lx, ly, lz;
      for (int alpha = 0; alpha < chain.inner_power; ++alpha) {
        const MatmulCopy& copy = rec->copies[word[static_cast<std::size_t>(alpha)]];
        auto coord = [&](const Label& lab) {
          const std::string& part = lab.parts[static_cast<std::size_t>(alpha)];
          auto dot = part.find('.');
          return std::pair<int, int>(std::stoi(part.substr(0, dot)),
                                     std::stoi(part.substr(dot + 1)));
        };
        auto [xi, xj] = coord(t[0]);
        auto [yj, yk] = coord(t[1]);
        auto [zk, zi] = coord(t[2]);
        lx = lx.concat(copy.x_of[static_cast<std::size_t>(xi)][static_cast<std::size_t>(xj)]);
        ly = ly.concat(copy.y_of[static_cast<std::size_t>(yj)][static_cast<std::size_t>(yk)]);
        lz = lz.concat(copy.z_of[static_cast<std::size_t>(zk)][static_cast<std::size_t>(zi)]);
      }
      mapped.triples.push_back({lx, ly, lz});
    }
    // next block word
    for (int alpha = chain.inner_power - 1; alpha >= 0; --alpha) {
      std::size_t& w = word[static_cast<std::size_t>(alpha)];
      if (++w < rec->copies.size()) break;
      w = 0;
    }
  }

  chain.independent_triples = mapped.triples.size();
  SumFreeSet s = sumfree_from_triples(static_cast<int>(in.p), in.N * chain.inner_power, mapped);
  chain.sumfree_size = s.triples.size();
  Real cap = exp(Real(in.N * chain.inner_power) * gamma_q(in.p, is_prime_power(in.p)));
  chain.sumfree_cap = cap.str(12);
  chain.bound_ok = Real(static_cast<double>(chain.sumfree_size)) <= cap;
  return chain;
}

}  // namespace

PipelineReport theorem_pipeline(const PipelineInput& in) {
  ensure_precision();
  if (in.p < 2) throw InvalidArgumentError("pipeline requires p >= 2");
  if (!(in.eps > 0) || in.eps > 1) throw InvalidArgumentError("eps must lie in (0,1]");
  if (in.N < 1) throw InvalidArgumentError("pipeline requires N >= 1");
  if (in.F < 1 || in.G < 1) throw InvalidArgumentError("pipeline requires F, G >= 1");

  PipelineReport report;
  report.p = in.p;
  report.eps = in.eps;
  report.N = in.N;
  report.bound = omega_lower_bound(in.p, is_prime_power(in.p), in.eps);

  if (in.claimed_omega) {
    // Asymptotic mode: compare a claimed exponent with zero slack.
    report.applicable = true;
    report.omega_prime = *in.claimed_omega;
    report.slack = 0;
    report.consistent = report.omega_prime >= report.bound;
    return report;
  }

  if (in.G < 2) {
    report.applicable = false;
    report.omega_prime = 0;
    report.slack = 0;
    report.consistent = false;
    return report;
  }

  int G = static_cast<int>(in.G);
  BigInt pN = 1;
  for (int i = 0; i < in.N; ++i) pN *= in.p;
  BigInt ceiling = (pN + in.F - 1) / in.F;
  report.omega_prime = log(Real(ceiling.str())) / log(Real(G));
  report.slack = log(Real(in.N) * in.N) / (Real(in.N) * log(Real(G)));
  report.consistent = report.omega_prime >= report.bound - report.slack;

  if (in.kills) report.chain = run_chain(in, in.F, G);
  return report;
}

}  // namespace modq
