#pragma once

#include "dqc/circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dqc {

/// Edge annotation for gate graphs. Qubit graphs use Plain edges only.
enum class EdgeKind : std::uint8_t { Plain, CnotBond, Chronological };

/// Role of a node in a circuit graph.
enum class NodeRole : std::uint8_t { Qubit, OneQubitGate, CnotControlHalf, CnotTargetHalf };

/// Back-reference from a graph node to the circuit element it represents.
struct NodeLabel {
    NodeRole role = NodeRole::Qubit;
    int qubit = -1;     // the qubit this node lives on
    int gate_seq = -1;  // source gate for gate-graph nodes, -1 for qubit nodes
};

/// Undirected graph with positive integer edge weights and at most one edge
/// per node pair. Adding an existing pair merges by summing weights.
class WeightedGraph {
public:
    struct Edge {
        int u;
        int v;
        std::int64_t weight;
        EdgeKind kind;
    };

    struct Neighbor {
        int node;
        int edge;  // index into edges()
    };

    WeightedGraph() = default;
    explicit WeightedGraph(int num_nodes);

    void add_edge(int u, int v, std::int64_t weight, EdgeKind kind = EdgeKind::Plain);

    int num_nodes() const { return static_cast<int>(adjacency_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(int node) const { return adjacency_.at(node); }
    std::int64_t total_weight() const { return total_weight_; }

    /// Weighted degree of a node.
    std::int64_t degree(int node) const;

    /// Sorted `u v w [kind]` lines, one per edge.
    std::string to_edge_list() const;

    /// Parses the edge-list format back into a graph (node count inferred
    /// unless `num_nodes` is given); the interchange route for differential
    /// testing against external partitioners.
    static WeightedGraph from_edge_list(const std::string& text, int num_nodes = -1);

    std::vector<NodeLabel> labels;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::int64_t total_weight_ = 0;
};

/// Qubit-interaction graph: one node per qubit, edge weight = number of CNOTs
/// between the pair. Total edge weight equals the circuit's cnot_count.
WeightedGraph build_qubit_graph(const Circuit& c);

/// Gate graph: one node per single-qubit gate, two nodes per CNOT (control
/// and target halves). Unit-weight edges bond the two halves of each CNOT and
/// chain consecutive gates on each qubit timeline.
WeightedGraph build_gate_graph(const Circuit& c);

}  // namespace dqc
