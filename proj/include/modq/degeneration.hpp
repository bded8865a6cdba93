#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modq/rank_expression.hpp"
#include "modq/tensor.hpp"

namespace modq {

/// Integer weight witness that small is a monomial degeneration of big:
/// a+b+c >= 0 on every term of big, with equality exactly on small's terms.
struct MonomialDegeneration {
  Tensor big;
  Tensor small;
  std::map<Label, int> a, b, c;
};

struct DegenerationViolation {
  enum class Kind {
    SmallTermMissing,      // term of small absent from big
    CoefficientMismatch,   // term of small with a different coefficient in big
    NegativeSum,           // term of big with a+b+c < 0
    ZeroSumOutsideSmall,   // a+b+c = 0 on a big term that small lacks
    PositiveSumInSmall,    // a+b+c > 0 on a term small claims
  };
  Kind kind;
  TermKey term;
  long long weight_sum = 0;
};

struct DegenerationReport {
  bool valid = false;
  std::vector<DegenerationViolation> violations;
};

/// Check both conditions of the degeneration definition on every term of big.
/// Throws UnknownLabelError when the weight maps do not cover the variable sets.
DegenerationReport verify_degeneration(const MonomialDegeneration& d);

/// Degeneration of big1 x big2 into small1 x small2 with added weights.
MonomialDegeneration product_degeneration(const MonomialDegeneration& d1,
                                          const MonomialDegeneration& d2);

/// n-th power with additively extended weights; verifies by construction.
MonomialDegeneration power_degeneration(const MonomialDegeneration& d, int n,
                                        std::uint64_t term_cap = kDefaultTensorTermCap);

/// Layer decomposition of a power degeneration: counts of surviving
/// independent triples per weight layer (p,q,r), and the realized window.
struct LayerReport {
  std::map<std::array<long long, 3>, std::size_t> layers;
  std::array<long long, 3> best{0, 0, 0};
  std::size_t best_count = 0;
  // Realized weight ranges [min,max] per axis, scaled by n.
  std::array<std::array<long long, 2>, 3> window{};
  std::size_t zero_sum_layers = 0;  // |{(p,q,r) in window : p+q+r=0}|
};

struct TransferResult {
  KillSets big_kills;
  TripleSet triples;  // independent survivors inside big^n
  LayerReport report;
};

/// Push a zeroing of small^n into f(n) independent triples through the
/// degeneration: restrict big^n to the best zero-sum weight layer.
/// Guarantees |triples| >= f(n) / zero_sum_layers.
TransferResult transfer_independent(const MonomialDegeneration& d, int n,
                                    const KillSets& small_kills,
                                    std::uint64_t term_cap = kDefaultTensorTermCap);

/// Turn a rank expression for big into an eps-graded border-rank expression
/// for small: each variable coefficient picks up eps^(weight - axis minimum).
/// The result has the same rank, certifying border rank <= rank(r).
RankExpression compose_border(const RankExpression& r, const MonomialDegeneration& d);

}  // namespace modq
