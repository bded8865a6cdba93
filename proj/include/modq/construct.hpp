#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "modq/tensor.hpp"

namespace modq {

enum class SalemSpencerMode { BruteForce, Greedy };

/// Subset of [0,M) with no nontrivial three-term arithmetic progression mod M.
/// BruteForce returns the maximum such set (lexicographically smallest on
/// ties); Greedy returns a maximal set by ascending scan.
std::vector<long> salem_spencer(long M, SalemSpencerMode mode, long bruteforce_cap = 31);

struct BalanceProfile {
  int q = 0, m = 0, n = 0;  // m = q^eps, kept as an integer throughout
  BigInt balanced_ik;       // L_2:      balanced (i,k) pairs
  BigInt balanced_ij;       // L_{1+e}:  balanced (i,j) pairs
  BigInt k_per_ij;          // K_1:      compatible k for a balanced (i,j)
  BigInt j_per_ik;          // K_e:      compatible j for a balanced (i,k)
};

struct HashScheme {
  long M = 0;
  std::vector<long> w;  // w_0..w_n
  std::uint64_t seed = 0;
};

struct CollisionStat {
  long h = 0;
  std::size_t terms = 0;    // |S_h|
  std::size_t x_pairs = 0;  // |P_h|
  std::size_t y_pairs = 0;  // |Q_h|
  std::size_t z_pairs = 0;  // |R_h|
};

struct ConstructionReport {
  BalanceProfile balance;
  HashScheme hash;
  std::vector<long> progression_free;  // the Salem-Spencer set H
  std::size_t phase1_survivors = 0;
  std::size_t phase2_survivors = 0;
  std::size_t phase3_triples = 0;
  std::vector<CollisionStat> collisions;
  KillSets kills;    // merged over the three phases
  TripleSet result;  // independent triples in <q,m,q>^(x)n
};

/// Three-phase zeroing of <q,m,q>^(x)n into independent triples:
/// balance filtering, Salem-Spencer hashing, then killing every variable
/// that still appears in two or more terms.
/// Requires q^2 | n and q*m | n. Deterministic given (inputs, seed).
ConstructionReport build_independent(int q, int m, int n, std::uint64_t seed,
                                     std::optional<long> M_override = {});

struct SumFreeSet {
  int q = 0, n = 0;
  std::vector<std::array<std::vector<int>, 3>> triples;  // (a,b,c) in (Z_q^n)^3
};

/// a_i + b_j + c_k = 0 iff i = j = k; exhaustive with early exit.
bool check_sumfree(const SumFreeSet& s);

/// Read the tri-colored sum-free set off an independent zeroing of T_p^(x)N.
/// Asserts the sum-free property and the capacity bound |S| <= c_p^N; a
/// violation of either would falsify the underlying theorem and throws.
SumFreeSet extract_sumfree(int p, int N, const KillSets& kills,
                           std::uint64_t term_cap = kDefaultTensorTermCap);

/// Same extraction for an already-computed independent survivor set.
SumFreeSet sumfree_from_triples(int p, int N, const TripleSet& triples);

/// Deterministic fallback that produces an independent zeroing of any tensor:
/// repeatedly kill the variable occurring in the most surviving terms
/// (lexicographically first among ties) until the survivors are independent.
KillSets greedy_independent_zeroing(const Tensor& t);

/// Coordinates of one recognized matrix-multiplication block.
struct MatmulCopy {
  std::vector<std::vector<Label>> x_of;  // [i][j]
  std::vector<std::vector<Label>> y_of;  // [j][k]
  std::vector<std::vector<Label>> z_of;  // [k][i]
};

struct MatmulRecognition {
  int n = 0, m = 0, p = 0;  // every copy is isomorphic to <n,m,p>
  std::vector<MatmulCopy> copies;
};

/// Decide whether the tensor is a disjoint sum of matrix multiplication
/// tensors (all coefficients 1) and recover explicit coordinates.
std::optional<MatmulRecognition> recognize_matmul_copies(const Tensor& t);

}  // namespace modq
