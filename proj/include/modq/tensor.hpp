#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "modq/scalar.hpp"

namespace modq {

inline constexpr std::uint64_t kDefaultTensorTermCap = 1u << 20;
inline constexpr std::size_t kDefaultOracleCap = 24;

/// Variable label: a single name, or an n-tuple of names for power tensors.
/// Tuple parts are kept explicit so per-coordinate access stays cheap.
struct Label {
  std::vector<std::string> parts;

  Label() = default;
  Label(const char* s) : parts{std::string(s)} {}
  Label(std::string s) : parts{std::move(s)} {}
  explicit Label(std::vector<std::string> p) : parts(std::move(p)) {}

  auto operator<=>(const Label&) const = default;

  Label concat(const Label& other) const;
  std::string str() const;                   // parts joined with ','
  static Label parse(const std::string& s);  // inverse of str()
};

/// One of the three variable sets of a trilinear form. Order is stable and
/// drives deterministic serialization.
struct VarSet {
  std::string name;
  std::vector<Label> labels;

  VarSet() = default;
  VarSet(std::string name, std::vector<Label> labels);

  bool contains(const Label& l) const { return index_.count(l) > 0; }
  std::size_t size() const { return labels.size(); }
  bool operator==(const VarSet& other) const {
    return name == other.name && labels == other.labels;
  }

 private:
  std::set<Label> index_;
};

VarSet varset_product(const VarSet& a, const VarSet& b);

using TermKey = std::array<Label, 3>;

enum class TripleRole { Support, Independent, SumFree };

struct TripleSet {
  std::vector<TermKey> triples;
  TripleRole role = TripleRole::Support;
};

/// Kill sets: variables to substitute by zero, per axis.
struct KillSets {
  std::set<Label> x, y, z;
};

/// Sparse trilinear form over three named variable sets.
/// No zero coefficients are ever stored; |T| = terms().size().
class Tensor {
 public:
  Tensor() = default;  // empty tensor over the rational ring
  Tensor(Ring ring, VarSet x, VarSet y, VarSet z);

  void set_term(const Label& x, const Label& y, const Label& z, Scalar c);
  const Scalar* find(const TermKey& key) const;
  const std::map<TermKey, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const VarSet& x() const { return x_; }
  const VarSet& y() const { return y_; }
  const VarSet& z() const { return z_; }
  const Ring& ring() const { return ring_; }

  TripleSet support() const;

  /// Explicit relabeling along each axis; maps must be bijections onto the
  /// new label sets (missing labels keep their names).
  Tensor relabel(const std::map<Label, Label>& fx, const std::map<Label, Label>& fy,
                 const std::map<Label, Label>& fz) const;

  bool operator==(const Tensor& other) const;

 private:
  Ring ring_;
  VarSet x_, y_, z_;
  std::map<TermKey, Scalar> terms_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor tensor_power(const Tensor& a, int n, std::uint64_t term_cap = kDefaultTensorTermCap);

/// Remove every term touching a killed variable; variable sets are unchanged.
Tensor zero_out(const Tensor& a, const KillSets& kills);

/// True iff every term of a appears in b with identical coefficient.
/// Requires identical variable sets.
bool is_subset(const Tensor& a, const Tensor& b);

bool independent_triples(const std::vector<TermKey>& triples);
bool independent_support(const Tensor& a);

/// Maximum-cardinality independent subset of the support, by exhaustive
/// branch and bound. Deterministic: lexicographically smallest maximum.
TripleSet max_independent_oracle(const Tensor& a, std::size_t cap = kDefaultOracleCap);

/// Kill-sets that keep exactly the labels used by the given triples.
/// The survivors of the resulting zeroing always contain the triples but may
/// be a strict superset; callers that need an independent zeroing must check.
KillSets kills_from_triples(const Tensor& t, const TripleSet& kept);

/// Kill-sets on a x b killing every pair with a killed half. Zeroing with the
/// result equals the product of the per-factor zeroings.
KillSets product_kills(const Tensor& a, const KillSets& ka, const Tensor& b, const KillSets& kb);

/// Kill-sets on base^(x)n killing every tuple with a killed coordinate.
KillSets power_kills(const Tensor& base, const KillSets& kills, int n);

}  // namespace modq
