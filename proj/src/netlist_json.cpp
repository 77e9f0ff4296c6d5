#include "radixbench/netlist_json.hpp"

#include <stdexcept>

namespace radixbench {

nlohmann::ordered_json to_json(const Circuit& circuit) {
  using nlohmann::ordered_json;
  auto ports = [](const std::vector<Port>& list) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : list) {
      ordered_json j;
      j["name"] = p.name;
      j["radix"] = p.radix.value();
      j["net"] = p.net;
      arr.push_back(std::move(j));
    }
    return arr;
  };
  ordered_json doc;
  doc["inputs"] = ports(circuit.inputs());
  doc["outputs"] = ports(circuit.outputs());
  ordered_json cells = ordered_json::array();
  for (const auto& c : circuit.cells()) {
    ordered_json j;
    j["kind"] = c.kind.name();
    j["ins"] = c.inputs;
    j["outs"] = c.outputs;
    cells.push_back(std::move(j));
  }
  doc["cells"] = std::move(cells);
  return doc;
}

Circuit circuit_from_json(const nlohmann::ordered_json& doc) {
  try {
    auto ports = [](const nlohmann::ordered_json& arr) {
      std::vector<Port> out;
      for (const auto& j : arr) {
        out.push_back({j.at("name").get<std::string>(), j.at("net").get<NetId>(),
                       Radix::from_int(j.at("radix").get<int>())});
      }
      return out;
    };
    std::vector<CellInstance> cells;
    for (const auto& j : doc.at("cells")) {
      cells.push_back({CellKind::parse(j.at("kind").get<std::string>()), j.at("ins").get<std::vector<NetId>>(),
                       j.at("outs").get<std::vector<NetId>>()});
    }
    Circuit circuit(ports(doc.at("inputs")), ports(doc.at("outputs")), std::move(cells));
    for (std::size_t i = 0; i < circuit.outputs().size(); ++i) {
      const int declared = doc.at("outputs")[i].at("radix").get<int>();
      if (declared != circuit.outputs()[i].radix.value()) {
        throw std::invalid_argument("output '" + circuit.outputs()[i].name + "' declares radix " +
                                    std::to_string(declared) + " but its net is radix " +
                                    to_string(circuit.outputs()[i].radix));
      }
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("netlist json: ") + e.what());
  }
}

}  // namespace radixbench
