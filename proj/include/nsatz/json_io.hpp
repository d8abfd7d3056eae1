#pragma once

#include <json.hpp>

#include "nsatz/covering.hpp"
#include "nsatz/hermite.hpp"
#include "nsatz/multiset.hpp"
#include "nsatz/nonvanishing.hpp"
#include "nsatz/poly.hpp"
#include "nsatz/ring.hpp"

namespace nsatz {

using Json = nlohmann::json;

// {"nvars": n, "terms": [{"exp": [..], "coeff": "<decimal or p/q>"}]}
Json poly_to_json(const MultivarPoly& p);
MultivarPoly poly_from_json(const Json& j, const RingSpec& ring);

// {"ring": "<spec>", "elements": [{"value": "<string>", "mult": k}, ...]}
Json multiset_to_json(const Multiset& ms);
/// The "ring" key may be omitted when a context ring is supplied; when
/// present it must agree.
Multiset multiset_from_json(const Json& j, const RingSpec* context_ring = nullptr);

// A grid is a JSON array of multisets.
Json grid_to_json(const Grid& g);
Grid grid_from_json(const Json& j, const RingSpec* context_ring = nullptr);

// {"a": ["..", ".."], "b": ".."}
Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j, const RingSpec& ring);

// {"grid": [...], "planes": [...]}
CoverInstance cover_instance_from_json(const Json& j, const RingSpec* context_ring = nullptr);

// {"point": [...], "orders": [...], "value": "..."}
Json witness_to_json(const Witness& w);

// {"multiset": {...}, "values": [{"element": "..", "order": u, "y": ".."}]}
Json interpolation_data_to_json(const InterpolationData& data);
InterpolationData interpolation_data_from_json(const Json& j,
                                               const RingSpec* context_ring = nullptr);

} // namespace nsatz
