#pragma once

#include <string>
#include <vector>

#include "modq/degeneration.hpp"
#include "modq/rank_expression.hpp"
#include "modq/tensor.hpp"

namespace modq {

/// Structural tensor of Z_q: q^2 terms x_i y_j z_k with
/// i+j+k = -z_offset (mod q), all coefficients 1.
/// z_offset=0 is T_q; z_offset=1 with q -> q+2 is the relabeled form that
/// contains the rotated Coppersmith-Winograd tensor.
Tensor structural_tensor(int q, int z_offset = 0, const Ring& ring = Ring::rational());

/// Matrix multiplication tensor <n,m,p>: sum over x_ij y_jk z_ki.
/// Variable labels are "i.j", "j.k", "k.i" with 0-based indices.
Tensor matmul_tensor(int n, int m, int p, const Ring& ring = Ring::rational());

/// Coppersmith-Winograd tensor with 3q+3 terms. rotated=true gives CW_q
/// (z index q+1-k), rotated=false gives the classical C_q.
Tensor cw_tensor(int q, bool rotated = true, const Ring& ring = Ring::rational());

/// Strassen's tensor S_q = sum_i x_0 y_i z_{q+1-i} + x_i y_0 z_{q+1-i},
/// with 2q terms, built over the full 0..q variable ranges of T_{q+1}.
Tensor strassen_tensor(int q, const Ring& ring = Ring::rational());

enum class TpRing { Cyclotomic, PrimeField };

/// Rank-p expression for T_p (optionally for the z_offset relabeling):
///   over Z[zeta_p]:  T_p = (1/p) sum_l (sum_i zeta^{li} x_i)(...)(...)
///   over GF(p+1):    T_p = - sum_a (sum_i a^i x_i)(...)(...),  p+1 prime
RankExpression rank_expression_Tp(int p, TpRing ring, int z_offset = 0);

/// One catalog degeneration with its provenance.
struct NamedDegeneration {
  std::string name;    // e.g. "cw q=2"
  std::string family;  // "cw" | "strassen" | "strassen-as-printed"
  int q = 0;
  bool expected_valid = true;  // the as-printed Strassen weights do not verify
  MonomialDegeneration degeneration;
};

/// The degeneration families: T_{q+2} -> CW_q (verbatim weights), the
/// corrected T_{q+1} -> S_q entry, and the as-printed Strassen weights that
/// fail verification and are shipped for regression pinning.
NamedDegeneration named_degeneration(const std::string& family, int q,
                                     const Ring& ring = Ring::rational());
std::vector<NamedDegeneration> named_degenerations(int max_q = 8);

/// Parse catalog names: "T4", "CW2", "C3", "S2", "MM(2,2,2)".
Tensor catalog_tensor(const std::string& name, int z_offset = 0,
                      const Ring& ring = Ring::rational());

}  // namespace modq
