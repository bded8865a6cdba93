#include "modq/construct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "modq/bounds.hpp"
#include "modq/catalog.hpp"

namespace modq {

namespace {

bool forms_progression(long a, long b, long c, long M) {
  // a + b = 2c (mod M) with not all equal; M odd makes a = b force c = a.
  return (a + b) % M == (2 * c) % M && !(a == b && b == c);
}

bool extends_progression_free(const std::vector<long>& H, long e, long M) {
  for (long a : H) {
    for (long b : H) {
      if (forms_progression(a, b, e, M)) return true;   // e as midpoint target
      if (forms_progression(a, e, b, M)) return true;   // e as an endpoint
    }
    if (forms_progression(e, e, a, M)) return true;
  }
  return false;
}

struct SalemSpencerSearch {
  long M;
  std::vector<long> chosen, best;

  // Ascending include-first search; the first maximum found is the
  // lexicographically smallest one.
  void run(long next) {
    if (chosen.size() + static_cast<std::size_t>(M - next) <= best.size()) return;
    if (next == M) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (!extends_progression_free(chosen, next, M)) {
      chosen.push_back(next);
      run(next + 1);
      chosen.pop_back();
    }
    run(next + 1);
  }
};

}  // namespace

std::vector<long> salem_spencer(long M, SalemSpencerMode mode, long bruteforce_cap) {
  if (M < 3 || M % 2 == 0 || !is_prime(M))
    throw NotPrimeError("salem_spencer requires an odd prime modulus, got " + std::to_string(M));
  if (mode == SalemSpencerMode::BruteForce) {
    if (M > bruteforce_cap)
      throw SizeCapError("brute-force Salem-Spencer search capped at M <= " +
                         std::to_string(bruteforce_cap));
    SalemSpencerSearch search{M, {}, {}};
    search.run(0);
    return search.best;
  }
  std::vector<long> H;
  for (long e = 0; e < M; ++e)
    if (!extends_progression_free(H, e, M)) H.push_back(e);
  return H;
}

namespace {

using Seq = std::vector<int>;  // one index sequence, entries in [0, base)

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / ((n/parts)!)^parts : sequences over `parts` symbols, perfectly balanced.
BigInt balanced_count(int n, int parts) {
  BigInt denom = 1;
  BigInt part_fact = factorial(n / parts);
  for (int i = 0; i < parts; ++i) denom *= part_fact;
  return factorial(n) / denom;
}

bool pair_balanced(const Seq& u, const Seq& v, int ubase, int vbase, int target) {
  std::vector<int> counts(static_cast<std::size_t>(ubase) * vbase, 0);
  for (std::size_t t = 0; t < u.size(); ++t) {
    int& c = counts[static_cast<std::size_t>(u[t]) * vbase + v[t]];
    if (++c > target) return false;
  }
  return true;  // all counts <= target and they sum to n = target * ubase * vbase
}

// All perfectly balanced pairs of sequences (u, v) over [ubase] x [vbase],
// in lexicographic order of the joint code sequence.
std::vector<std::pair<Seq, Seq>> balanced_pairs(int n, int ubase, int vbase) {
  int parts = ubase * vbase;
  int target = n / parts;
  std::vector<int> codes;
  codes.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < parts; ++c)
    for (int r = 0; r < target; ++r) codes.push_back(c);
  std::vector<std::pair<Seq, Seq>> out;
  do {
    Seq u(codes.size()), v(codes.size());
    for (std::size_t t = 0; t < codes.size(); ++t) {
      u[t] = codes[t] / vbase;
      v[t] = codes[t] % vbase;
    }
    out.emplace_back(std::move(u), std::move(v));
  } while (std::next_permutation(codes.begin(), codes.end()));
  return out;
}

Label pair_label(const Seq& u, const Seq& v) {
  std::vector<std::string> parts;
  parts.reserve(u.size());
  for (std::size_t t = 0; t < u.size(); ++t)
    parts.push_back(std::to_string(u[t]) + "." + std::to_string(v[t]));
  return Label(std::move(parts));
}

// Odometer over [base]^n in lexicographic order.
bool next_seq(Seq& s, int base) {
  for (int t = static_cast<int>(s.size()) - 1; t >= 0; --t) {
    if (++s[static_cast<std::size_t>(t)] < base) return true;
    s[static_cast<std::size_t>(t)] = 0;
  }
  return false;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

long smallest_odd_prime_at_least(long v) {
  long c = std::max<long>(3, v);
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

std::size_t pairs_within(const std::map<Label, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [_, c] : counts) total += c * (c - 1) / 2;
  return total;
}

}  // namespace

ConstructionReport build_independent(int q, int m, int n, std::uint64_t seed,
                                     std::optional<long> M_override) {
  if (q < 2) throw InvalidArgumentError("build_independent requires q >= 2");
  if (m < 1 || m > q) throw InvalidArgumentError("build_independent requires 1 <= m <= q");
  if (n < 1) throw InvalidArgumentError("build_independent requires n >= 1");
  if (n % (q * q) != 0)
    throw InvalidArgumentError("exact ik balance requires q^2 | n");
  if (n % (q * m) != 0)
    throw InvalidArgumentError("exact ij balance requires q*m | n");
  double log_vars = n * std::log2(static_cast<double>(q) * q);
  if (log_vars > 24) throw SizeCapError("variable space exceeds the desk-scale cap");

  ConstructionReport report;
  report.balance.q = q;
  report.balance.m = m;
  report.balance.n = n;
  report.balance.balanced_ik = balanced_count(n, q * q);
  report.balance.balanced_ij = balanced_count(n, q * m);

  // Phase one: keep exactly the balanced variables on each axis.
  auto xs = balanced_pairs(n, q, m);  // (i, j)
  auto ys = balanced_pairs(n, m, q);  // (j, k)
  auto zs = balanced_pairs(n, q, q);  // (k, i)

  std::set<Label> alive_x, alive_y, alive_z;
  for (const auto& [i, j] : xs) alive_x.insert(pair_label(i, j));
  for (const auto& [j, k] : ys) alive_y.insert(pair_label(j, k));
  for (const auto& [k, i] : zs) alive_z.insert(pair_label(k, i));

  {
    // Phase-one kills: every unbalanced variable, axis by axis.
    Seq u(static_cast<std::size_t>(n), 0), v(static_cast<std::size_t>(n), 0);
    auto sweep = [&](int ubase, int vbase, const std::set<Label>& alive, std::set<Label>& kills) {
      Seq joint(static_cast<std::size_t>(n), 0);
      do {
        for (std::size_t t = 0; t < joint.size(); ++t) {
          u[t] = joint[t] / vbase;
          v[t] = joint[t] % vbase;
        }
        Label l = pair_label(u, v);
        if (!alive.count(l)) kills.insert(l);
      } while (next_seq(joint, ubase * vbase));
    };
    sweep(q, m, alive_x, report.kills.x);
    sweep(m, q, alive_y, report.kills.y);
    sweep(q, q, alive_z, report.kills.z);
  }

  // Enumerate the surviving terms: balanced (i,j) times compatible k.
  struct Term {
    Label x, y, z;
    long hx = 0, hy = 0, hz = 0;
  };
  std::vector<Term> phase1;
  int ik_target = n / (q * q);
  int jk_target = n / (q * m);
  BigInt k_per_ij = -1;
  for (const auto& [i, j] : xs) {
    BigInt count_here = 0;
    Seq k(static_cast<std::size_t>(n), 0);
    do {
      if (!pair_balanced(i, k, q, q, ik_target)) continue;
      if (!pair_balanced(j, k, m, q, jk_target)) continue;
      Seq ki_k = k, ki_i = i;
      phase1.push_back({pair_label(i, j), pair_label(j, k), pair_label(k, i)});
      count_here += 1;
    } while (next_seq(k, q));
    if (k_per_ij < 0)
      k_per_ij = count_here;
    else if (k_per_ij != count_here)
      throw Error("K_1 is not constant across balanced (i,j) pairs");
  }
  report.balance.k_per_ij = k_per_ij < 0 ? BigInt(0) : k_per_ij;
  report.phase1_survivors = phase1.size();

  {
    // K_eps: compatible j count for one balanced (i,k); constant by symmetry.
    const auto& [k0, i0] = zs.front();
    BigInt count = 0;
    Seq j(static_cast<std::size_t>(n), 0);
    do {
      if (pair_balanced(i0, j, q, m, jk_target) && pair_balanced(j, k0, m, q, jk_target))
        count += 1;
    } while (next_seq(j, m));
    report.balance.j_per_ik = count;
  }
  if (report.balance.balanced_ik * report.balance.j_per_ik !=
      report.balance.balanced_ij * report.balance.k_per_ij)
    throw Error("phase-one census identity L_2 K_eps = L_{1+eps} K_1 failed");

  // Phase two: Salem-Spencer hashing. M defaults to the smallest odd prime
  // >= 12 K_1; the paper's window is [12 K_1, 24 K_1].
  long M;
  if (M_override) {
    M = *M_override;
    if (M < 3 || M % 2 == 0 || !is_prime(M))
      throw NotPrimeError("M override must be an odd prime");
  } else {
    if (report.balance.k_per_ij > 1000000)
      throw SizeCapError("default modulus would be huge; pass an explicit M");
    M = smallest_odd_prime_at_least(12 * static_cast<long>(report.balance.k_per_ij));
  }
  report.hash.M = M;
  report.hash.seed = seed;
  std::mt19937_64 rng(seed);
  report.hash.w.resize(static_cast<std::size_t>(n) + 1);
  for (long& w : report.hash.w) w = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(M)));

  report.progression_free =
      salem_spencer(M, M <= 31 ? SalemSpencerMode::BruteForce : SalemSpencerMode::Greedy);
  std::vector<char> in_H(static_cast<std::size_t>(M), 0);
  for (long h : report.progression_free) in_H[static_cast<std::size_t>(h)] = 1;

  const std::vector<long>& w = report.hash.w;
  auto hash_pair = [&](const Label& l, long scale, long offset) {
    // scale * sum_alpha w_alpha (u_alpha - v_alpha) + offset, mod M
    long long acc = offset;
    for (std::size_t t = 0; t < l.parts.size(); ++t) {
      const std::string& part = l.parts[t];
      auto dot = part.find('.');
      long u = std::stol(part.substr(0, dot));
      long v = std::stol(part.substr(dot + 1));
      acc += scale * w[t + 1] % M * ((u - v) % M) % M;
      acc %= M;
    }
    return static_cast<long>(((acc % M) + M) % M);
  };

  std::set<Label> dead_x2, dead_y2, dead_z2;
  std::map<Label, long> hx_of, hy_of, hz_of;
  for (const Label& l : alive_x) {
    long h = hash_pair(l, 2, 0);
    hx_of[l] = h;
    if (!in_H[static_cast<std::size_t>(h)]) {
      dead_x2.insert(l);
      report.kills.x.insert(l);
    }
  }
  for (const Label& l : alive_y) {
    long h = hash_pair(l, 2, 2 * w[0] % M);
    hy_of[l] = h;
    if (!in_H[static_cast<std::size_t>(h)]) {
      dead_y2.insert(l);
      report.kills.y.insert(l);
    }
  }
  for (const Label& l : alive_z) {
    // h_Z uses (i - k) while the variable is written (k, i): flip the sign.
    long h = hash_pair(l, -1, w[0]);
    hz_of[l] = h;
    if (!in_H[static_cast<std::size_t>(h)]) {
      dead_z2.insert(l);
      report.kills.z.insert(l);
    }
  }

  std::vector<Term> phase2;
  for (Term& t : phase1) {
    t.hx = hx_of.at(t.x);
    t.hy = hy_of.at(t.y);
    t.hz = hz_of.at(t.z);
    if ((t.hx + t.hy) % M != 2 * t.hz % M)
      throw Error("hash identity h_X + h_Y = 2 h_Z failed");
    if (dead_x2.count(t.x) || dead_y2.count(t.y) || dead_z2.count(t.z)) continue;
    if (t.hx != t.hy || t.hy != t.hz)
      throw Error("surviving term with unequal hashes despite the progression-free filter");
    phase2.push_back(t);
  }
  report.phase2_survivors = phase2.size();

  // Collision statistics per hash value.
  for (long h : report.progression_free) {
    CollisionStat stat;
    stat.h = h;
    std::map<Label, std::size_t> by_x, by_y, by_z;
    for (const Term& t : phase2) {
      if (t.hx != h) continue;
      ++stat.terms;
      ++by_x[t.x];
      ++by_y[t.y];
      ++by_z[t.z];
    }
    stat.x_pairs = pairs_within(by_x);
    stat.y_pairs = pairs_within(by_y);
    stat.z_pairs = pairs_within(by_z);
    report.collisions.push_back(stat);
  }

  // Phase three: kill every variable still appearing in two or more terms.
  std::map<Label, std::size_t> occ_x, occ_y, occ_z;
  for (const Term& t : phase2) {
    ++occ_x[t.x];
    ++occ_y[t.y];
    ++occ_z[t.z];
  }
  for (const auto& [l, c] : occ_x)
    if (c >= 2) report.kills.x.insert(l);
  for (const auto& [l, c] : occ_y)
    if (c >= 2) report.kills.y.insert(l);
  for (const auto& [l, c] : occ_z)
    if (c >= 2) report.kills.z.insert(l);

  report.result.role = TripleRole::Independent;
  for (const Term& t : phase2)
    if (occ_x[t.x] == 1 && occ_y[t.y] == 1 && occ_z[t.z] == 1)
      report.result.triples.push_back({t.x, t.y, t.z});
  report.phase3_triples = report.result.triples.size();
  if (!independent_triples(report.result.triples))
    throw Error("phase three left a dependent triple set");
  return report;
}

bool check_sumfree(const SumFreeSet& s) {
  if (s.q < 2 || s.n < 1) throw InvalidArgumentError("sum-free set over an empty group");
  for (const auto& t : s.triples)
    for (const auto& vec : t) {
      if (static_cast<int>(vec.size()) != s.n)
        throw InvalidArgumentError("group element of the wrong dimension");
      for (int coord : vec)
        if (coord < 0 || coord >= s.q) throw InvalidArgumentError("group element out of range");
    }
  auto sums_to_zero = [&](const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& c) {
    for (int t = 0; t < s.n; ++t)
      if ((a[static_cast<std::size_t>(t)] + b[static_cast<std::size_t>(t)] +
           c[static_cast<std::size_t>(t)]) %
              s.q !=
          0)
        return false;
    return true;
  };
  std::size_t d = s.triples.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        bool zero = sums_to_zero(s.triples[i][0], s.triples[j][1], s.triples[k][2]);
        bool diagonal = (i == j && j == k);
        if (zero != diagonal) return false;
      }
  return true;
}

namespace {

std::vector<int> label_to_vector(const Label& l, int q) {
  std::vector<int> out;
  out.reserve(l.parts.size());
  for (const std::string& part : l.parts) {
    int v = std::stoi(part);
    if (v < 0 || v >= q) throw InvalidArgumentError("label coordinate out of Z_q range");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SumFreeSet sumfree_from_triples(int p, int N, const TripleSet& triples) {
  if (!independent_triples(triples.triples))
    throw NotIndependentError("sum-free extraction requires independent triples");
  SumFreeSet s;
  s.q = p;
  s.n = N;
  for (const TermKey& t : triples.triples) {
    std::array<std::vector<int>, 3> abc{label_to_vector(t[0], p), label_to_vector(t[1], p),
                                        label_to_vector(t[2], p)};
    for (auto& vec : abc)
      if (static_cast<int>(vec.size()) != N)
        throw InvalidArgumentError("triple coordinates do not match the power N");
    for (int c = 0; c < N; ++c)
      if ((abc[0][static_cast<std::size_t>(c)] + abc[1][static_cast<std::size_t>(c)] +
           abc[2][static_cast<std::size_t>(c)]) %
              p !=
          0)
        throw Error("survivor triple is not a term of T_p^N (coordinates do not sum to zero)");
    s.triples.push_back(std::move(abc));
  }
  if (!check_sumfree(s))
    throw Error(
        "independent zeroing produced a set that is not tri-colored sum-free; "
        "this would falsify the underlying theorem");
  Real cap = exp(Real(N) * gamma_q(p, is_prime_power(p)));
  if (Real(static_cast<double>(s.triples.size())) > cap)
    throw Error("sum-free set of size " + std::to_string(s.triples.size()) +
                " exceeds the capacity bound c_p^N = " + cap.str(12) +
                "; this would falsify the underlying theorem");
  return s;
}

SumFreeSet extract_sumfree(int p, int N, const KillSets& kills, std::uint64_t term_cap) {
  if (p < 2 || N < 1) throw InvalidArgumentError("extract_sumfree requires p >= 2 and N >= 1");
  Tensor power = tensor_power(structural_tensor(p), N, term_cap);
  Tensor zeroed = zero_out(power, kills);
  if (!independent_support(zeroed))
    throw NotIndependentError("the supplied zeroing of T_p^N is not independent");
  TripleSet triples = zeroed.support();
  triples.role = TripleRole::Independent;
  return sumfree_from_triples(p, N, triples);
}

KillSets greedy_independent_zeroing(const Tensor& t) {
  KillSets kills;
  for (;;) {
    Tensor z = zero_out(t, kills);
    std::map<Label, std::size_t> occ_x, occ_y, occ_z;
    for (const auto& [key, _] : z.terms()) {
      ++occ_x[key[0]];
      ++occ_y[key[1]];
      ++occ_z[key[2]];
    }
    // Kill the most-shared variable; prefer x over y over z, then label order.
    std::size_t best = 1;
    int best_axis = -1;
    Label best_label;
    auto consider = [&](const std::map<Label, std::size_t>& occ, int axis) {
      for (const auto& [l, c] : occ)
        if (c > best) {
          best = c;
          best_axis = axis;
          best_label = l;
        }
    };
    consider(occ_x, 0);
    consider(occ_y, 1);
    consider(occ_z, 2);
    if (best_axis < 0) return kills;
    if (best_axis == 0) kills.x.insert(best_label);
    if (best_axis == 1) kills.y.insert(best_label);
    if (best_axis == 2) kills.z.insert(best_label);
  }
}

namespace {

using NeighborMap = std::map<Label, std::set<Label>>;

// Group labels by identical neighborhoods; classes ordered by smallest member.
std::map<Label, int> classes_by_neighborhood(const NeighborMap& nbr, int& count) {
  std::map<std::set<Label>, std::vector<Label>> groups;
  for (const auto& [l, ns] : nbr) groups[ns].push_back(l);
  std::vector<std::pair<Label, const std::vector<Label>*>> ordered;
  for (const auto& [_, members] : groups)
    ordered.emplace_back(*std::min_element(members.begin(), members.end()), &members);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<Label, int> out;
  int idx = 0;
  for (const auto& [_, members] : ordered) {
    for (const Label& l : *members) out[l] = idx;
    ++idx;
  }
  count = idx;
  return out;
}

}  // namespace

std::optional<MatmulRecognition> recognize_matmul_copies(const Tensor& t) {
  if (t.size() == 0) return std::nullopt;
  Scalar unit = Scalar::one(t.ring());
  for (const auto& [_, c] : t.terms())
    if (!(c == unit)) return std::nullopt;

  // Connected components of the support under shared variables.
  std::vector<TermKey> terms = t.support().triples;
  std::map<Label, std::vector<std::size_t>> by_x, by_y, by_z;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    by_x[terms[i][0]].push_back(i);
    by_y[terms[i][1]].push_back(i);
    by_z[terms[i][2]].push_back(i);
  }
  std::vector<int> component(terms.size(), -1);
  int components = 0;
  for (std::size_t start = 0; start < terms.size(); ++start) {
    if (component[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    component[start] = components;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto* bucket :
           {&by_x[terms[cur][0]], &by_y[terms[cur][1]], &by_z[terms[cur][2]]}) {
        for (std::size_t other : *bucket)
          if (component[other] < 0) {
            component[other] = components;
            stack.push_back(other);
          }
      }
    }
    ++components;
  }

  MatmulRecognition rec;
  for (int comp = 0; comp < components; ++comp) {
    NeighborMap nxy, nyz, nzx, nxz, nyx, nzy;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (component[i] != comp) continue;
      members.push_back(i);
      const TermKey& k = terms[i];
      nxy[k[0]].insert(k[1]);
      nxz[k[0]].insert(k[2]);
      nyx[k[1]].insert(k[0]);
      nyz[k[1]].insert(k[2]);
      nzx[k[2]].insert(k[0]);
      nzy[k[2]].insert(k[1]);
    }
    int m_count = 0, p_count = 0, n_count = 0;
    std::map<Label, int> j_of_x = classes_by_neighborhood(nxy, m_count);
    std::map<Label, int> k_of_y = classes_by_neighborhood(nyz, p_count);
    std::map<Label, int> i_of_z = classes_by_neighborhood(nzx, n_count);

    // Propagate coordinates through co-occurrence and check consistency.
    std::map<Label, int> i_of_x, j_of_y, k_of_z;
    for (std::size_t i : members) {
      const TermKey& k = terms[i];
      auto assign = [](std::map<Label, int>& m, const Label& l, int v) {
        auto [it, inserted] = m.emplace(l, v);
        return inserted || it->second == v;
      };
      if (!assign(i_of_x, k[0], i_of_z.at(k[2]))) return std::nullopt;
      if (!assign(j_of_y, k[1], j_of_x.at(k[0]))) return std::nullopt;
      if (!assign(k_of_z, k[2], k_of_y.at(k[1]))) return std::nullopt;
    }

    if (nxy.size() != static_cast<std::size_t>(n_count) * m_count) return std::nullopt;
    if (nyx.size() != static_cast<std::size_t>(m_count) * p_count) return std::nullopt;
    if (nzx.size() != static_cast<std::size_t>(p_count) * n_count) return std::nullopt;
    if (members.size() != static_cast<std::size_t>(n_count) * m_count * p_count)
      return std::nullopt;

    MatmulCopy copy;
    copy.x_of.assign(static_cast<std::size_t>(n_count), std::vector<Label>(m_count));
    copy.y_of.assign(static_cast<std::size_t>(m_count), std::vector<Label>(p_count));
    copy.z_of.assign(static_cast<std::size_t>(p_count), std::vector<Label>(n_count));
    std::set<std::array<int, 2>> seen_x, seen_y, seen_z;
    for (const auto& [l, j] : j_of_x) {
      int i = i_of_x.at(l);
      if (!seen_x.insert({i, j}).second) return std::nullopt;
      copy.x_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l;
    }
    for (const auto& [l, kk] : k_of_y) {
      int j = j_of_y.at(l);
      if (!seen_y.insert({j, kk}).second) return std::nullopt;
      copy.y_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)] = l;
    }
    for (const auto& [l, i] : i_of_z) {
      int kk = k_of_z.at(l);
      if (!seen_z.insert({kk, i}).second) return std::nullopt;
      copy.z_of[static_cast<std::size_t>(kk)][static_cast<std::size_t>(i)] = l;
    }
    // Every (i,j,k) combination must appear exactly once.
    std::set<std::array<int, 3>> seen_terms;
    for (std::size_t i : members) {
      const TermKey& k = terms[i];
      if (!seen_terms.insert({i_of_x.at(k[0]), j_of_x.at(k[0]), k_of_y.at(k[1])}).second)
        return std::nullopt;
    }

    if (rec.copies.empty()) {
      rec.n = n_count;
      rec.m = m_count;
      rec.p = p_count;
    } else if (rec.n != n_count || rec.m != m_count || rec.p != p_count) {
      return std::nullopt;
    }
    rec.copies.push_back(std::move(copy));
  }
  return rec;
}

}  // namespace modq
