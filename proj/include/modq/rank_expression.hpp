#pragma once

#include <optional>
#include <vector>

#include "modq/tensor.hpp"

namespace modq {

/// Sum of rank-one factors, optionally eps-graded for border rank.
/// Factor coefficient vectors are aligned with the variable-set label order.
struct RankExpression {
  Ring ring;  // coefficient ring of the factors (EpsPoly when eps_graded)
  VarSet x, y, z;
  // Global multiplier, e.g. 1/p. Kept as an exact rational and applied via
  // Scalar::scaled so integer-vector cyclotomic coefficients stay exact.
  BigRational scale = 1;
  struct Factor {
    std::vector<Scalar> x, y, z;
  };
  std::vector<Factor> factors;
  bool eps_graded = false;
  int designated_h = 0;  // expected lowest eps order when eps_graded

  std::size_t rank() const { return factors.size(); }
};

struct Expansion {
  Tensor tensor;
  std::optional<int> h;  // lowest eps order, present for eps_graded input
};

/// Expand the sum of rank-one factors into an explicit tensor.
/// For eps_graded input, returns the lowest-order eps coefficient and its
/// order h, after checking that nothing survives below the designated order.
Expansion expand_rank_expression(const RankExpression& r);

}  // namespace modq
