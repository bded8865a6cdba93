#include "modq/degeneration.hpp"

#include <algorithm>
#include <limits>

namespace modq {

namespace {

void require_weight_cover(const VarSet& vs, const std::map<Label, int>& w, const char* axis) {
  if (vs.size() != w.size())
    throw UnknownLabelError(std::string("weight map on axis ") + axis + " has " +
                            std::to_string(w.size()) + " entries for " +
                            std::to_string(vs.size()) + " variables");
  for (const Label& l : vs.labels)
    if (!w.count(l))
      throw UnknownLabelError(std::string("missing weight for ") + axis + " label '" + l.str() +
                              "'");
}

long long weight_of(const std::map<Label, int>& w, const Label& l) { return w.at(l); }

std::pair<long long, long long> weight_range(const std::map<Label, int>& w) {
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  for (const auto& [_, v] : w) {
    lo = std::min<long long>(lo, v);
    hi = std::max<long long>(hi, v);
  }
  return {lo, hi};
}

}  // namespace

DegenerationReport verify_degeneration(const MonomialDegeneration& d) {
  if (d.small.x() != d.big.x() || d.small.y() != d.big.y() || d.small.z() != d.big.z())
    throw InvalidArgumentError("degeneration requires small and big over the same variable sets");
  if (d.small.ring() != d.big.ring())
    throw RingMismatchError("degeneration requires small and big over the same ring");
  require_weight_cover(d.big.x(), d.a, "x");
  require_weight_cover(d.big.y(), d.b, "y");
  require_weight_cover(d.big.z(), d.c, "z");

  DegenerationReport report;
  using Kind = DegenerationViolation::Kind;
  for (const auto& [key, c] : d.small.terms()) {
    const Scalar* in_big = d.big.find(key);
    if (!in_big)
      report.violations.push_back({Kind::SmallTermMissing, key, 0});
    else if (!(*in_big == c))
      report.violations.push_back({Kind::CoefficientMismatch, key, 0});
  }
  for (const auto& [key, _] : d.big.terms()) {
    long long sum = weight_of(d.a, key[0]) + weight_of(d.b, key[1]) + weight_of(d.c, key[2]);
    bool in_small = d.small.find(key) != nullptr;
    if (sum < 0)
      report.violations.push_back({Kind::NegativeSum, key, sum});
    else if (sum == 0 && !in_small)
      report.violations.push_back({Kind::ZeroSumOutsideSmall, key, sum});
    else if (sum > 0 && in_small)
      report.violations.push_back({Kind::PositiveSumInSmall, key, sum});
  }
  report.valid = report.violations.empty();
  return report;
}

MonomialDegeneration product_degeneration(const MonomialDegeneration& d1,
                                          const MonomialDegeneration& d2) {
  MonomialDegeneration out;
  out.big = tensor_product(d1.big, d2.big);
  out.small = tensor_product(d1.small, d2.small);
  auto combine = [](const std::map<Label, int>& w1, const std::map<Label, int>& w2) {
    std::map<Label, int> out_w;
    for (const auto& [l1, v1] : w1)
      for (const auto& [l2, v2] : w2) out_w.emplace(l1.concat(l2), v1 + v2);
    return out_w;
  };
  out.a = combine(d1.a, d2.a);
  out.b = combine(d1.b, d2.b);
  out.c = combine(d1.c, d2.c);
  return out;
}

MonomialDegeneration power_degeneration(const MonomialDegeneration& d, int n,
                                        std::uint64_t term_cap) {
  if (n < 1) throw InvalidArgumentError("degeneration power requires n >= 1");
  if (!verify_degeneration(d).valid)
    throw InvalidArgumentError("cannot raise an invalid degeneration to a power");
  std::uint64_t projected = 1;
  for (int i = 0; i < n; ++i) {
    projected *= static_cast<std::uint64_t>(d.big.size());
    if (d.big.size() > 1 && projected > term_cap)
      throw SizeCapError("degeneration power would exceed the term cap");
  }
  MonomialDegeneration out = d;
  for (int i = 1; i < n; ++i) out = product_degeneration(out, d);
  return out;
}

TransferResult transfer_independent(const MonomialDegeneration& d, int n,
                                    const KillSets& small_kills, std::uint64_t term_cap) {
  MonomialDegeneration power = power_degeneration(d, n, term_cap);

  Tensor zeroed_small = zero_out(power.small, small_kills);
  if (zeroed_small.size() == 0)
    throw InvalidArgumentError("the zeroing of the small power keeps no terms");
  TripleSet survivors = zeroed_small.support();
  if (!independent_triples(survivors.triples))
    throw NotIndependentError("the supplied zeroing of the small power is not independent");

  LayerReport report;
  auto [ax_lo, ax_hi] = weight_range(power.a);
  auto [by_lo, by_hi] = weight_range(power.b);
  auto [cz_lo, cz_hi] = weight_range(power.c);
  report.window = {{{ax_lo, ax_hi}, {by_lo, by_hi}, {cz_lo, cz_hi}}};
  for (long long p = ax_lo; p <= ax_hi; ++p)
    for (long long q = by_lo; q <= by_hi; ++q) {
      long long r = -p - q;
      if (r >= cz_lo && r <= cz_hi) ++report.zero_sum_layers;
    }

  for (const TermKey& t : survivors.triples) {
    std::array<long long, 3> layer{weight_of(power.a, t[0]), weight_of(power.b, t[1]),
                                   weight_of(power.c, t[2])};
    ++report.layers[layer];
  }
  for (const auto& [layer, count] : report.layers) {
    if (count > report.best_count) {  // map order breaks ties lexicographically
      report.best = layer;
      report.best_count = count;
    }
  }

  TransferResult result;
  result.report = report;
  for (const Label& l : power.big.x().labels)
    if (weight_of(power.a, l) != report.best[0] || small_kills.x.count(l))
      result.big_kills.x.insert(l);
  for (const Label& l : power.big.y().labels)
    if (weight_of(power.b, l) != report.best[1] || small_kills.y.count(l))
      result.big_kills.y.insert(l);
  for (const Label& l : power.big.z().labels)
    if (weight_of(power.c, l) != report.best[2] || small_kills.z.count(l))
      result.big_kills.z.insert(l);

  Tensor zeroed_big = zero_out(power.big, result.big_kills);
  result.triples = zeroed_big.support();
  result.triples.role = TripleRole::Independent;
  if (!independent_triples(result.triples.triples))
    throw NotIndependentError("layer restriction of the big power is not independent");
  if (result.triples.triples.size() != report.best_count)
    throw Error("layer restriction survivor count does not match the layer census");
  if (result.triples.triples.size() * report.zero_sum_layers < survivors.triples.size())
    throw Error("pigeonhole guarantee violated in transfer_independent");
  return result;
}

RankExpression compose_border(const RankExpression& r, const MonomialDegeneration& d) {
  if (r.eps_graded)
    throw InvalidArgumentError("compose_border expects a plain (non eps-graded) rank expression");
  DegenerationReport check = verify_degeneration(d);
  if (!check.valid)
    throw InvalidArgumentError("compose_border requires a verified degeneration (" +
                               std::to_string(check.violations.size()) + " violations)");
  if (d.small.size() == 0)
    throw InvalidArgumentError("compose_border requires a nonempty small tensor");
  if (r.x != d.big.x() || r.y != d.big.y() || r.z != d.big.z())
    throw InvalidArgumentError("rank expression and degeneration use different variable sets");
  Expansion expanded = expand_rank_expression(r);
  if (!(expanded.tensor == d.big))
    throw InvalidArgumentError("rank expression does not expand to the big tensor");

  auto [a_lo, a_hi] = weight_range(d.a);
  auto [b_lo, b_hi] = weight_range(d.b);
  auto [c_lo, c_hi] = weight_range(d.c);

  RankExpression out;
  out.ring = Ring::eps_poly(r.ring);
  out.x = r.x;
  out.y = r.y;
  out.z = r.z;
  out.scale = r.scale;
  out.eps_graded = true;
  out.designated_h = static_cast<int>(-(a_lo + b_lo + c_lo));
  for (const auto& f : r.factors) {
    RankExpression::Factor g;
    for (std::size_t i = 0; i < f.x.size(); ++i)
      g.x.push_back(Scalar::eps_monomial(
          f.x[i], static_cast<unsigned>(d.a.at(r.x.labels[i]) - a_lo)));
    for (std::size_t j = 0; j < f.y.size(); ++j)
      g.y.push_back(Scalar::eps_monomial(
          f.y[j], static_cast<unsigned>(d.b.at(r.y.labels[j]) - b_lo)));
    for (std::size_t k = 0; k < f.z.size(); ++k)
      g.z.push_back(Scalar::eps_monomial(
          f.z[k], static_cast<unsigned>(d.c.at(r.z.labels[k]) - c_lo)));
    out.factors.push_back(std::move(g));
  }
  return out;
}

}  // namespace modq
