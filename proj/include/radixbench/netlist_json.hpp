// Structural JSON form of a Circuit.
//
//   {"inputs":  [{"name": "a0", "radix": 2, "net": 0}, ...],
//    "outputs": [{"name": "s0", "radix": 2, "net": 7}, ...],
//    "cells":   [{"kind": "BinFA", "ins": [0, 1, 2], "outs": [3, 4]}, ...]}
//
// Field order is fixed so dumps can be compared byte for byte.
#pragma once

#include "json.hpp"

#include "radixbench/netlist.hpp"

namespace radixbench {

nlohmann::ordered_json to_json(const Circuit& circuit);

/// Throws std::invalid_argument on malformed documents or invalid netlists.
Circuit circuit_from_json(const nlohmann::ordered_json& doc);

}  // namespace radixbench
