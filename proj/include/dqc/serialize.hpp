#pragma once

#include "dqc/circuit.hpp"
#include "dqc/distribute.hpp"
#include "dqc/entangle.hpp"
#include "dqc/partition.hpp"

#include <json.hpp>

#include <string>

namespace dqc {

using Json = nlohmann::json;

/// Circuit interchange schema: {name, num_qubits, gates: [{kind, qubits, params}]}.
/// Round-trips bit-exactly (parameters preserved through double round-trip).
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json partitioning_to_json(const Partitioning& p);
Partitioning partitioning_from_json(const Json& j, const WeightedGraph& g);

Json distributed_to_json(const DistributedCircuit& d);

Json time_estimate_to_json(const TimeEstimate& t);

Json link_model_to_json(const LinkModel& m);
LinkModel link_model_from_json(const Json& j);

/// Reads a LinkModel from a JSON config file.
LinkModel load_link_model(const std::string& path);

}  // namespace dqc
