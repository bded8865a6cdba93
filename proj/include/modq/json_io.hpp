#pragma once

#include <nlohmann/json.hpp>

#include "modq/bounds.hpp"
#include "modq/catalog.hpp"
#include "modq/construct.hpp"
#include "modq/degeneration.hpp"

namespace modq {

// Key order is fixed so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

// Scalars follow the tensor file conventions: rationals are "num/den"
// strings, prime-field residues plain integers, cyclotomic values integer
// arrays, eps polynomials arrays of inner coefficients.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Ring& ring);

Json label_to_json(const Label& l);
Label label_from_json(const Json& j);

Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

Json tripleset_to_json(const TripleSet& s);
TripleSet tripleset_from_json(const Json& j);

Json killsets_to_json(const KillSets& k);
KillSets killsets_from_json(const Json& j);

Json rank_expression_to_json(const RankExpression& r);

Json degeneration_to_json(const MonomialDegeneration& d);
/// Accepts either inline big/small tensors with weight maps, or the
/// shorthand {"family": "cw", "q": 2} for a catalog entry.
MonomialDegeneration degeneration_from_json(const Json& j);

Json degeneration_report_to_json(const DegenerationReport& r);
Json layer_report_to_json(const LayerReport& r);
Json transfer_result_to_json(const TransferResult& r);
Json construction_report_to_json(const ConstructionReport& r);

Json sumfree_to_json(const SumFreeSet& s);
SumFreeSet sumfree_from_json(const Json& j);

Json bound_profile_to_json(const BoundProfile& p);
Json pipeline_report_to_json(const PipelineReport& r);

}  // namespace modq
