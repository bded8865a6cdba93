#include "modq/json_io.hpp"

namespace modq {

namespace {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  return BigInt(j.get<std::string>());
}

std::string rational_str(const BigRational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(v).str() + "/" + denominator(v).str();
}

BigRational rational_from_str(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(s));
  return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

Json ring_to_json(const Ring& r) {
  Json j;
  switch (r.kind()) {
    case RingKind::Rational:
      j["kind"] = "rational";
      break;
    case RingKind::PrimeField:
      j["kind"] = "prime_field";
      j["modulus"] = r.modulus();
      break;
    case RingKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["order"] = r.order();
      break;
    case RingKind::EpsPoly:
      j["kind"] = "eps_poly";
      j["inner"] = ring_to_json(r.inner());
      break;
  }
  return j;
}

Ring ring_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Ring::rational();
  if (kind == "prime_field") return Ring::prime_field(j.at("modulus").get<std::int64_t>());
  if (kind == "cyclotomic") return Ring::cyclotomic(j.at("order").get<int>());
  if (kind == "eps_poly") return Ring::eps_poly(ring_from_json(j.at("inner")));
  throw InvalidArgumentError("unknown ring kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) {
  switch (s.ring().kind()) {
    case RingKind::Rational:
      return rational_str(s.rational_value());
    case RingKind::PrimeField:
      return s.residue_value();
    case RingKind::Cyclotomic: {
      Json arr = Json::array();
      for (const BigInt& c : s.cyclotomic_coeffs()) arr.push_back(bigint_to_json(c));
      return arr;
    }
    case RingKind::EpsPoly: {
      Json arr = Json::array();
      for (const Scalar& c : s.eps_coeffs()) arr.push_back(scalar_to_json(c));
      return arr;
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

Scalar scalar_from_json(const Json& j, const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Rational:
      if (j.is_number_integer()) return Scalar::rational(j.get<std::int64_t>());
      return Scalar::rational(rational_from_str(j.get<std::string>()));
    case RingKind::PrimeField:
      return Scalar::residue(ring.modulus(), j.get<std::int64_t>());
    case RingKind::Cyclotomic: {
      std::vector<BigInt> coeffs;
      for (const Json& c : j) coeffs.push_back(bigint_from_json(c));
      return Scalar::cyclotomic(ring.order(), std::move(coeffs));
    }
    case RingKind::EpsPoly: {
      std::vector<Scalar> coeffs;
      for (const Json& c : j) coeffs.push_back(scalar_from_json(c, ring.inner()));
      return Scalar::eps_poly(ring.inner(), std::move(coeffs));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

Json label_to_json(const Label& l) {
  if (l.parts.size() == 1) return l.parts.front();
  Json arr = Json::array();
  for (const std::string& p : l.parts) arr.push_back(p);
  return arr;
}

Label label_from_json(const Json& j) {
  if (j.is_string()) return Label(j.get<std::string>());
  std::vector<std::string> parts;
  for (const Json& p : j) parts.push_back(p.get<std::string>());
  return Label(std::move(parts));
}

namespace {

Json varset_to_json(const VarSet& v) {
  Json arr = Json::array();
  for (const Label& l : v.labels) arr.push_back(label_to_json(l));
  return arr;
}

VarSet varset_from_json(const Json& j, const std::string& name) {
  std::vector<Label> labels;
  for (const Json& l : j) labels.push_back(label_from_json(l));
  return VarSet(name, std::move(labels));
}

}  // namespace

Json tensor_to_json(const Tensor& t) {
  Json j;
  j["ring"] = ring_to_json(t.ring());
  j["x"] = varset_to_json(t.x());
  j["y"] = varset_to_json(t.y());
  j["z"] = varset_to_json(t.z());
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json term;
    term["x"] = label_to_json(key[0]);
    term["y"] = label_to_json(key[1]);
    term["z"] = label_to_json(key[2]);
    term["c"] = scalar_to_json(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Tensor tensor_from_json(const Json& j) {
  Ring ring = ring_from_json(j.at("ring"));
  Tensor t(ring, varset_from_json(j.at("x"), "X"), varset_from_json(j.at("y"), "Y"),
           varset_from_json(j.at("z"), "Z"));
  for (const Json& term : j.at("terms"))
    t.set_term(label_from_json(term.at("x")), label_from_json(term.at("y")),
               label_from_json(term.at("z")), scalar_from_json(term.at("c"), ring));
  return t;
}

namespace {

const char* role_name(TripleRole role) {
  switch (role) {
    case TripleRole::Support: return "support";
    case TripleRole::Independent: return "independent";
    case TripleRole::SumFree: return "sumfree";
  }
  return "?";
}

TripleRole role_from_name(const std::string& s) {
  if (s == "support") return TripleRole::Support;
  if (s == "independent") return TripleRole::Independent;
  if (s == "sumfree") return TripleRole::SumFree;
  throw InvalidArgumentError("unknown triple role '" + s + "'");
}

}  // namespace

Json tripleset_to_json(const TripleSet& s) {
  Json j;
  j["role"] = role_name(s.role);
  Json arr = Json::array();
  for (const TermKey& t : s.triples) {
    Json triple;
    triple["x"] = label_to_json(t[0]);
    triple["y"] = label_to_json(t[1]);
    triple["z"] = label_to_json(t[2]);
    arr.push_back(std::move(triple));
  }
  j["triples"] = std::move(arr);
  return j;
}

TripleSet tripleset_from_json(const Json& j) {
  TripleSet s;
  s.role = role_from_name(j.at("role").get<std::string>());
  for (const Json& t : j.at("triples"))
    s.triples.push_back(
        {label_from_json(t.at("x")), label_from_json(t.at("y")), label_from_json(t.at("z"))});
  return s;
}

Json killsets_to_json(const KillSets& k) {
  Json j;
  for (const char* axis : {"x", "y", "z"}) {
    const std::set<Label>& labels = axis[0] == 'x' ? k.x : axis[0] == 'y' ? k.y : k.z;
    Json arr = Json::array();
    for (const Label& l : labels) arr.push_back(label_to_json(l));
    j[axis] = std::move(arr);
  }
  return j;
}

KillSets killsets_from_json(const Json& j) {
  KillSets k;
  for (const Json& l : j.at("x")) k.x.insert(label_from_json(l));
  for (const Json& l : j.at("y")) k.y.insert(label_from_json(l));
  for (const Json& l : j.at("z")) k.z.insert(label_from_json(l));
  return k;
}

Json rank_expression_to_json(const RankExpression& r) {
  Json j;
  j["ring"] = ring_to_json(r.ring);
  j["x"] = varset_to_json(r.x);
  j["y"] = varset_to_json(r.y);
  j["z"] = varset_to_json(r.z);
  j["scale"] = rational_str(r.scale);
  j["eps_graded"] = r.eps_graded;
  if (r.eps_graded) j["designated_h"] = r.designated_h;
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json jf;
    for (const char* axis : {"x", "y", "z"}) {
      const std::vector<Scalar>& coeffs = axis[0] == 'x' ? f.x : axis[0] == 'y' ? f.y : f.z;
      Json arr = Json::array();
      for (const Scalar& c : coeffs) arr.push_back(scalar_to_json(c));
      jf[axis] = std::move(arr);
    }
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  return j;
}

namespace {

Json weights_to_json(const std::map<Label, int>& w) {
  Json j = Json::object();
  for (const auto& [l, v] : w) j[l.str()] = v;
  return j;
}

std::map<Label, int> weights_from_json(const Json& j) {
  std::map<Label, int> w;
  for (auto it = j.begin(); it != j.end(); ++it) w[Label::parse(it.key())] = it.value().get<int>();
  return w;
}

}  // namespace

Json degeneration_to_json(const MonomialDegeneration& d) {
  Json j;
  j["big"] = tensor_to_json(d.big);
  j["small"] = tensor_to_json(d.small);
  j["a"] = weights_to_json(d.a);
  j["b"] = weights_to_json(d.b);
  j["c"] = weights_to_json(d.c);
  return j;
}

MonomialDegeneration degeneration_from_json(const Json& j) {
  if (j.contains("family"))
    return named_degeneration(j.at("family").get<std::string>(), j.at("q").get<int>())
        .degeneration;
  MonomialDegeneration d;
  d.big = tensor_from_json(j.at("big"));
  d.small = tensor_from_json(j.at("small"));
  d.a = weights_from_json(j.at("a"));
  d.b = weights_from_json(j.at("b"));
  d.c = weights_from_json(j.at("c"));
  return d;
}

namespace {

const char* violation_name(DegenerationViolation::Kind kind) {
  using Kind = DegenerationViolation::Kind;
  switch (kind) {
    case Kind::SmallTermMissing: return "small_term_missing";
    case Kind::CoefficientMismatch: return "coefficient_mismatch";
    case Kind::NegativeSum: return "negative_sum";
    case Kind::ZeroSumOutsideSmall: return "zero_sum_outside_small";
    case Kind::PositiveSumInSmall: return "positive_sum_in_small";
  }
  return "?";
}

}  // namespace

Json degeneration_report_to_json(const DegenerationReport& r) {
  Json j;
  j["valid"] = r.valid;
  Json arr = Json::array();
  for (const DegenerationViolation& v : r.violations) {
    Json jv;
    jv["kind"] = violation_name(v.kind);
    jv["term"]["x"] = label_to_json(v.term[0]);
    jv["term"]["y"] = label_to_json(v.term[1]);
    jv["term"]["z"] = label_to_json(v.term[2]);
    jv["weight_sum"] = v.weight_sum;
    arr.push_back(std::move(jv));
  }
  j["violations"] = std::move(arr);
  return j;
}

Json layer_report_to_json(const LayerReport& r) {
  Json j;
  Json layers = Json::array();
  for (const auto& [layer, count] : r.layers) {
    Json jl;
    jl["layer"] = {layer[0], layer[1], layer[2]};
    jl["count"] = count;
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  j["best"] = {r.best[0], r.best[1], r.best[2]};
  j["best_count"] = r.best_count;
  j["window"] = {{r.window[0][0], r.window[0][1]},
                 {r.window[1][0], r.window[1][1]},
                 {r.window[2][0], r.window[2][1]}};
  j["zero_sum_layers"] = r.zero_sum_layers;
  return j;
}

Json transfer_result_to_json(const TransferResult& r) {
  Json j;
  j["kills"] = killsets_to_json(r.big_kills);
  j["triples"] = tripleset_to_json(r.triples);
  j["report"] = layer_report_to_json(r.report);
  return j;
}

Json construction_report_to_json(const ConstructionReport& r) {
  Json j;
  j["q"] = r.balance.q;
  j["m"] = r.balance.m;
  j["n"] = r.balance.n;
  j["balance"]["L2"] = bigint_to_json(r.balance.balanced_ik);
  j["balance"]["L1e"] = bigint_to_json(r.balance.balanced_ij);
  j["balance"]["K1"] = bigint_to_json(r.balance.k_per_ij);
  j["balance"]["Keps"] = bigint_to_json(r.balance.j_per_ik);
  j["hash"]["M"] = r.hash.M;
  j["hash"]["seed"] = r.hash.seed;
  j["hash"]["w"] = r.hash.w;
  j["progression_free"] = r.progression_free;
  j["phase1_survivors"] = r.phase1_survivors;
  j["phase2_survivors"] = r.phase2_survivors;
  j["phase3_triples"] = r.phase3_triples;
  Json stats = Json::array();
  for (const CollisionStat& s : r.collisions) {
    Json js;
    js["h"] = s.h;
    js["terms"] = s.terms;
    js["x_pairs"] = s.x_pairs;
    js["y_pairs"] = s.y_pairs;
    js["z_pairs"] = s.z_pairs;
    stats.push_back(std::move(js));
  }
  j["collisions"] = std::move(stats);
  j["kills"] = killsets_to_json(r.kills);
  j["result"] = tripleset_to_json(r.result);
  return j;
}

Json sumfree_to_json(const SumFreeSet& s) {
  Json j;
  j["q"] = s.q;
  j["n"] = s.n;
  Json arr = Json::array();
  for (const auto& t : s.triples) {
    Json jt;
    jt["a"] = t[0];
    jt["b"] = t[1];
    jt["c"] = t[2];
    arr.push_back(std::move(jt));
  }
  j["triples"] = std::move(arr);
  return j;
}

SumFreeSet sumfree_from_json(const Json& j) {
  SumFreeSet s;
  s.q = j.at("q").get<int>();
  s.n = j.at("n").get<int>();
  for (const Json& t : j.at("triples"))
    s.triples.push_back({t.at("a").get<std::vector<int>>(), t.at("b").get<std::vector<int>>(),
                         t.at("c").get<std::vector<int>>()});
  return s;
}

Json bound_profile_to_json(const BoundProfile& p) {
  Json j;
  j["q"] = p.q;
  j["prime_power"] = p.prime_power;
  if (p.rho) j["rho"] = p.rho->str(17);
  j["gamma"] = p.gamma.str(17);
  j["c"] = p.c.str(17);
  j["omega_lb_eps1"] = p.omega_lb_eps1.str(17);
  j["alpha_ub"] = p.alpha_ub.str(17);
  return j;
}

Json pipeline_report_to_json(const PipelineReport& r) {
  Json j;
  j["p"] = r.p;
  j["eps"] = r.eps.str(17);
  j["N"] = r.N;
  j["applicable"] = r.applicable;
  j["omega_prime"] = r.omega_prime.str(17);
  j["bound"] = r.bound.str(17);
  j["slack"] = r.slack.str(17);
  j["consistent"] = r.consistent;
  if (r.chain) {
    Json jc;
    jc["copies"] = r.chain->copies;
    jc["g"] = r.chain->g;
    jc["m"] = r.chain->m;
    jc["inner_power"] = r.chain->inner_power;
    jc["independent_triples"] = r.chain->independent_triples;
    jc["sumfree_size"] = r.chain->sumfree_size;
    jc["sumfree_cap"] = r.chain->sumfree_cap;
    jc["bound_ok"] = r.chain->bound_ok;
    j["chain"] = std::move(jc);
  }
  return j;
}

}  // namespace modq
