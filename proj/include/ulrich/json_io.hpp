#pragma once

#include "ulrich/ring.hpp"

#include <json.hpp>

namespace ulrich {

using Json = nlohmann::ordered_json;

struct BundleClass; // bundle.hpp

// Schemas (bit-exact round-trip):
//   ring:   {"type":"quadric","n":10} | {"type":"multiprojective","dims":[2,2]}
//   class:  {"ring":{...},"coeffs":{"b3":-84,"bp5":-220,...}}
//   bundle: {"ring":{...},"rank":16,"chern":{"b0":1,...}}
// Coefficients are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; the parser accepts both.
Json ring_to_json(const RingDescriptor& d);
RingDescriptor ring_from_json(const Json& j);

Json coh_to_json(const CohClass& x);
CohClass coh_from_json(const Json& j);

Json coeffs_to_json(const CohClass& x);
CohClass coeffs_from_json(const RingPtr& ring, const Json& j);

Json bundle_to_json(const BundleClass& e);
BundleClass bundle_from_json(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

} // namespace ulrich
