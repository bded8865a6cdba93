#include "modq/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace modq {

Label Label::concat(const Label& other) const {
  Label out;
  out.parts.reserve(parts.size() + other.parts.size());
  out.parts.insert(out.parts.end(), parts.begin(), parts.end());
  out.parts.insert(out.parts.end(), other.parts.begin(), other.parts.end());
  return out;
}

std::string Label::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

Label Label::parse(const std::string& s) {
  Label out;
  out.parts.clear();
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.parts.push_back(cur);
  return out;
}

VarSet::VarSet(std::string name, std::vector<Label> labels)
    : name(std::move(name)), labels(std::move(labels)) {
  for (const Label& l : this->labels)
    if (!index_.insert(l).second)
      throw InvalidArgumentError("duplicate label '" + l.str() + "' in variable set " + this->name);
}

VarSet varset_product(const VarSet& a, const VarSet& b) {
  std::vector<Label> labels;
  labels.reserve(a.size() * b.size());
  for (const Label& la : a.labels)
    for (const Label& lb : b.labels) labels.push_back(la.concat(lb));
  return VarSet(a.name, std::move(labels));
}

Tensor::Tensor(Ring ring, VarSet x, VarSet y, VarSet z)
    : ring_(std::move(ring)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

void Tensor::set_term(const Label& x, const Label& y, const Label& z, Scalar c) {
  if (!x_.contains(x)) throw UnknownLabelError("unknown x label '" + x.str() + "'");
  if (!y_.contains(y)) throw UnknownLabelError("unknown y label '" + y.str() + "'");
  if (!z_.contains(z)) throw UnknownLabelError("unknown z label '" + z.str() + "'");
  if (c.ring() != ring_) throw RingMismatchError("term coefficient outside the tensor ring");
  TermKey key{x, y, z};
  if (c.is_zero())
    terms_.erase(key);
  else
    terms_.insert_or_assign(std::move(key), std::move(c));
}

const Scalar* Tensor::find(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? nullptr : &it->second;
}

TripleSet Tensor::support() const {
  TripleSet s;
  s.role = TripleRole::Support;
  s.triples.reserve(terms_.size());
  for (const auto& [key, _] : terms_) s.triples.push_back(key);
  return s;
}

namespace {

Label map_label(const std::map<Label, Label>& f, const Label& l) {
  auto it = f.find(l);
  return it == f.end() ? l : it->second;
}

}  // namespace

Tensor Tensor::relabel(const std::map<Label, Label>& fx, const std::map<Label, Label>& fy,
                       const std::map<Label, Label>& fz) const {
  auto map_set = [](const VarSet& vs, const std::map<Label, Label>& f) {
    std::vector<Label> labels;
    labels.reserve(vs.labels.size());
    for (const Label& l : vs.labels) labels.push_back(map_label(f, l));
    return VarSet(vs.name, std::move(labels));
  };
  Tensor out(ring_, map_set(x_, fx), map_set(y_, fy), map_set(z_, fz));
  for (const auto& [key, c] : terms_)
    out.set_term(map_label(fx, key[0]), map_label(fy, key[1]), map_label(fz, key[2]), c);
  return out;
}

bool Tensor::operator==(const Tensor& other) const {
  return ring_ == other.ring_ && x_ == other.x_ && y_ == other.y_ && z_ == other.z_ &&
         terms_ == other.terms_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.ring() != b.ring()) throw RingMismatchError("tensor product across different rings");
  Tensor out(a.ring(), varset_product(a.x(), b.x()), varset_product(a.y(), b.y()),
             varset_product(a.z(), b.z()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.set_term(ka[0].concat(kb[0]), ka[1].concat(kb[1]), ka[2].concat(kb[2]), ca * cb);
  return out;
}

Tensor tensor_power(const Tensor& a, int n, std::uint64_t term_cap) {
  if (n < 1) throw InvalidArgumentError("tensor power requires n >= 1");
  std::uint64_t projected = 1;
  for (int i = 0; i < n; ++i) {
    projected *= static_cast<std::uint64_t>(a.size());
    if (a.size() > 1 && projected > term_cap)
      throw SizeCapError("tensor power would exceed the term cap of " + std::to_string(term_cap));
  }
  Tensor out = a;
  for (int i = 1; i < n; ++i) out = tensor_product(out, a);
  return out;
}

Tensor zero_out(const Tensor& a, const KillSets& kills) {
  for (const Label& l : kills.x)
    if (!a.x().contains(l)) throw UnknownLabelError("unknown x label '" + l.str() + "'");
  for (const Label& l : kills.y)
    if (!a.y().contains(l)) throw UnknownLabelError("unknown y label '" + l.str() + "'");
  for (const Label& l : kills.z)
    if (!a.z().contains(l)) throw UnknownLabelError("unknown z label '" + l.str() + "'");
  Tensor out(a.ring(), a.x(), a.y(), a.z());
  for (const auto& [key, c] : a.terms()) {
    if (kills.x.count(key[0]) || kills.y.count(key[1]) || kills.z.count(key[2])) continue;
    out.set_term(key[0], key[1], key[2], c);
  }
  return out;
}

bool is_subset(const Tensor& a, const Tensor& b) {
  if (a.x() != b.x() || a.y() != b.y() || a.z() != b.z())
    throw InvalidArgumentError("is_subset requires identical variable sets");
  for (const auto& [key, c] : a.terms()) {
    const Scalar* cb = b.find(key);
    if (!cb || !(*cb == c)) return false;
  }
  return true;
}

bool independent_triples(const std::vector<TermKey>& triples) {
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      if (triples[i][0] == triples[j][0] || triples[i][1] == triples[j][1] ||
          triples[i][2] == triples[j][2])
        return false;
  return true;
}

bool independent_support(const Tensor& a) { return independent_triples(a.support().triples); }

namespace {

// Branch and bound over the support, visiting terms in lexicographic order
// with include-before-exclude. The first maximum found in that order is the
// lexicographically smallest one, and pruning branches that cannot beat the
// incumbent never skips a larger set.
struct OracleSearch {
  const std::vector<TermKey>& terms;
  std::vector<std::size_t> chosen, best;

  bool compatible(std::size_t idx) const {
    const TermKey& t = terms[idx];
    for (std::size_t c : chosen) {
      const TermKey& s = terms[c];
      if (s[0] == t[0] || s[1] == t[1] || s[2] == t[2]) return false;
    }
    return true;
  }

  void run(std::size_t next) {
    if (chosen.size() + (terms.size() - next) <= best.size()) return;
    if (next == terms.size()) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (compatible(next)) {
      chosen.push_back(next);
      run(next + 1);
      chosen.pop_back();
    }
    run(next + 1);
  }
};

}  // namespace

TripleSet max_independent_oracle(const Tensor& a, std::size_t cap) {
  if (a.size() > cap)
    throw SizeCapError("oracle input has " + std::to_string(a.size()) +
                       " terms, cap is " + std::to_string(cap));
  std::vector<TermKey> terms = a.support().triples;
  OracleSearch search{terms, {}, {}};
  search.run(0);
  TripleSet out;
  out.role = TripleRole::Independent;
  for (std::size_t i : search.best) out.triples.push_back(terms[i]);
  return out;
}

KillSets product_kills(const Tensor& a, const KillSets& ka, const Tensor& b, const KillSets& kb) {
  KillSets out;
  auto cross = [](const std::vector<Label>& la, const std::set<Label>& killed_a,
                  const std::vector<Label>& lb, const std::set<Label>& killed_b,
                  std::set<Label>& dest) {
    for (const Label& x : la)
      for (const Label& y : lb)
        if (killed_a.count(x) || killed_b.count(y)) dest.insert(x.concat(y));
  };
  cross(a.x().labels, ka.x, b.x().labels, kb.x, out.x);
  cross(a.y().labels, ka.y, b.y().labels, kb.y, out.y);
  cross(a.z().labels, ka.z, b.z().labels, kb.z, out.z);
  return out;
}

KillSets power_kills(const Tensor& base, const KillSets& kills, int n) {
  if (n < 1) throw InvalidArgumentError("power_kills requires n >= 1");
  auto extend = [n](const VarSet& vs, const std::set<Label>& killed) {
    std::set<Label> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      Label tuple;
      bool dead = false;
      for (std::size_t i : idx) {
        tuple = tuple.concat(vs.labels[i]);
        dead = dead || killed.count(vs.labels[i]) > 0;
      }
      if (dead) out.insert(std::move(tuple));
      int pos = n - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == vs.labels.size())
        idx[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
    return out;
  };
  KillSets out;
  out.x = extend(base.x(), kills.x);
  out.y = extend(base.y(), kills.y);
  out.z = extend(base.z(), kills.z);
  return out;
}

KillSets kills_from_triples(const Tensor& t, const TripleSet& kept) {
  std::set<Label> ux, uy, uz;
  for (const TermKey& k : kept.triples) {
    ux.insert(k[0]);
    uy.insert(k[1]);
    uz.insert(k[2]);
  }
  KillSets kills;
  for (const Label& l : t.x().labels)
    if (!ux.count(l)) kills.x.insert(l);
  for (const Label& l : t.y().labels)
    if (!uy.count(l)) kills.y.insert(l);
  for (const Label& l : t.z().labels)
    if (!uz.count(l)) kills.z.insert(l);
  return kills;
}

}  // namespace modq
