#pragma once

#include "dqc/graph.hpp"

#include <cstdint>
#include <vector>

namespace dqc {

/// Node-to-part assignment with cached cut and balance data.
struct Partitioning {
    int k = 1;
    std::vector<int> assignment;    // per-node part id in [0, k)
    std::int64_t cut_weight = 0;    // total weight of edges crossing parts
    std::vector<int> part_sizes;    // node count per part
    double imbalance = 1.0;         // max part size / ceil(n/k)

    int max_part_size() const;
};

struct PartitionConfig {
    int k = 2;
    double max_imbalance = 1.30;
    std::uint64_t seed = 1;
    int refinement_passes = 8;
};

/// Sum of weights of edges whose endpoints land in different parts.
std::int64_t cut_weight(const WeightedGraph& g, const std::vector<int>& assignment);

/// Builds a Partitioning from an assignment, recomputing all cached fields.
Partitioning make_partitioning(const WeightedGraph& g, std::vector<int> assignment, int k);

/// Largest part size permitted for n nodes in k parts at the given ratio.
int max_part_size_allowed(int n, int k, double max_imbalance);

/// Multilevel heuristic partitioner: heavy-edge-matching coarsening, greedy
/// graph-growing initial cuts, Fiduccia-Mattheyses refinement with rollback,
/// recursive bisection for k > 2. Deterministic for a fixed config.
/// The returned imbalance never exceeds cfg.max_imbalance.
Partitioning multilevel_partition(const WeightedGraph& g, const PartitionConfig& cfg);

/// Exact minimum-cut partitioning by exhaustive search; requires <= 20 nodes.
/// Ties broken toward the lexicographically smallest canonical assignment.
Partitioning brute_force_partition(const WeightedGraph& g, int k, double max_imbalance);

/// Uniformly random assignment with the part-size pattern fixed to the
/// balanced split (ceil(n/k) for the first n mod k parts, floor(n/k) after).
Partitioning random_partition(const WeightedGraph& g, int k, std::uint64_t seed);

/// Closed-form e-bit count for a random balanced bipartition of a circuit
/// with the given size: ceil(cnot_count * n / (2 * (n - 1))).
std::int64_t expected_random_ebits(int num_qubits, std::int64_t cnot_count);

}  // namespace dqc
