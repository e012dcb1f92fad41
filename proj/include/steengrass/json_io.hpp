#pragma once

#include "steengrass/grass.hpp"

#include "json.hpp"

namespace steengrass {

using nlohmann::json;

/// Big integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
json int_to_json(const Int& v);

json partition_to_json(const Partition& p);
json sym_to_json(const SymElem& f);
json boxed_to_json(const BoxedClass& b);
json poset_to_json(const AttachPoset& poset);

}  // namespace steengrass
