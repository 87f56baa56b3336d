#include "dqc/partition.hpp"

#include "dqc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqc {

int Partitioning::max_part_size() const {
    return part_sizes.empty() ? 0 : *std::max_element(part_sizes.begin(), part_sizes.end());
}

std::int64_t cut_weight(const WeightedGraph& g, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.num_nodes()) {
        throw std::invalid_argument("assignment size does not match graph");
    }
    std::int64_t cut = 0;
    for (const auto& e : g.edges()) {
        if (assignment[e.u] != assignment[e.v]) cut += e.weight;
    }
    return cut;
}

Partitioning make_partitioning(const WeightedGraph& g, std::vector<int> assignment, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Partitioning p;
    p.k = k;
    p.part_sizes.assign(k, 0);
    for (int part : assignment) {
        if (part < 0 || part >= k) throw std::invalid_argument("part id out of range");
        ++p.part_sizes[part];
    }
    p.cut_weight = cut_weight(g, assignment);
    p.assignment = std::move(assignment);
    int n = g.num_nodes();
    int ideal = (n + k - 1) / k;
    p.imbalance = ideal == 0 ? 1.0 : static_cast<double>(p.max_part_size()) / ideal;
    return p;
}

int max_part_size_allowed(int n, int k, double max_imbalance) {
    if (max_imbalance < 1.0) throw std::invalid_argument("max_imbalance must be >= 1.0");
    int ideal = (n + k - 1) / k;
    int allowed = static_cast<int>(std::floor(max_imbalance * ideal + 1e-9));
    return std::min(n, std::max(allowed, ideal));
}

namespace {

// Recursive canonical enumeration: part ids appear in first-use order, which
// visits assignments in lexicographic order and halves the search space.
struct BruteForce {
    const WeightedGraph& g;
    int k;
    int max_size;
    std::vector<int> assignment;
    std::vector<int> sizes;
    std::vector<int> best;
    std::int64_t best_cut = -1;

    BruteForce(const WeightedGraph& graph, int parts, int cap)
        : g(graph), k(parts), max_size(cap), assignment(graph.num_nodes(), -1), sizes(parts, 0) {}

    void search(int node, std::int64_t cut, int used_parts) {
        if (best_cut >= 0 && cut > best_cut) return;
        if (node == g.num_nodes()) {
            if (best_cut < 0 || cut < best_cut) {
                best_cut = cut;
                best = assignment;
            }
            return;
        }
        int limit = std::min(used_parts + 1, k);
        for (int part = 0; part < limit; ++part) {
            if (sizes[part] + 1 > max_size) continue;
            std::int64_t delta = 0;
            for (const auto& nb : g.neighbors(node)) {
                int other = assignment[nb.node];
                if (other >= 0 && other != part) delta += g.edges()[nb.edge].weight;
            }
            assignment[node] = part;
            ++sizes[part];
            search(node + 1, cut + delta, std::max(used_parts, part + 1));
            --sizes[part];
            assignment[node] = -1;
        }
    }
};

}  // namespace

Partitioning brute_force_partition(const WeightedGraph& g, int k, double max_imbalance) {
    int n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("cannot partition an empty graph");
    if (n > 20) throw std::invalid_argument("brute force limited to 20 nodes");
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, num_nodes]");
    BruteForce bf(g, k, max_part_size_allowed(n, k, max_imbalance));
    bf.search(0, 0, 0);
    if (bf.best_cut < 0) throw std::runtime_error("no feasible partitioning");
    return make_partitioning(g, bf.best, k);
}

Partitioning random_partition(const WeightedGraph& g, int k, std::uint64_t seed) {
    int n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("cannot partition an empty graph");
    if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, num_nodes]");
    std::vector<int> labels;
    labels.reserve(n);
    int larger = n % k;
    for (int part = 0; part < k; ++part) {
        int size = n / k + (part < larger ? 1 : 0);
        labels.insert(labels.end(), size, part);
    }
    Rng rng(seed);
    rng.shuffle(labels);
    return make_partitioning(g, std::move(labels), k);
}

std::int64_t expected_random_ebits(int num_qubits, std::int64_t cnot_count) {
    if (num_qubits < 2) throw std::invalid_argument("expected_random_ebits requires n >= 2");
    if (cnot_count < 0) throw std::invalid_argument("cnot_count must be non-negative");
    std::int64_t numer = cnot_count * num_qubits;
    std::int64_t denom = 2 * (static_cast<std::int64_t>(num_qubits) - 1);
    return (numer + denom - 1) / denom;
}

}  // namespace dqc
