#include "dqc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dqc {

WeightedGraph::WeightedGraph(int num_nodes) : adjacency_(num_nodes) {
    if (num_nodes < 0) {
        throw std::invalid_argument("graph node count must be non-negative");
    }
}

void WeightedGraph::add_edge(int u, int v, std::int64_t weight, EdgeKind kind) {
    if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    if (weight < 1) {
        throw std::invalid_argument("edge weight must be positive");
    }
    for (const Neighbor& nb : adjacency_[u]) {
        if (nb.node == v) {
            Edge& e = edges_[nb.edge];
            if (e.kind != kind) {
                throw std::logic_error("conflicting edge kinds for the same node pair");
            }
            e.weight += weight;
            total_weight_ += weight;
            return;
        }
    }
    int idx = static_cast<int>(edges_.size());
    edges_.push_back({std::min(u, v), std::max(u, v), weight, kind});
    adjacency_[u].push_back({v, idx});
    adjacency_[v].push_back({u, idx});
    total_weight_ += weight;
}

std::int64_t WeightedGraph::degree(int node) const {
    std::int64_t d = 0;
    for (const Neighbor& nb : adjacency_.at(node)) {
        d += edges_[nb.edge].weight;
    }
    return d;
}

std::string WeightedGraph::to_edge_list() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::ostringstream out;
    for (const Edge& e : sorted) {
        out << e.u << ' ' << e.v << ' ' << e.weight;
        if (e.kind == EdgeKind::CnotBond) out << " bond";
        if (e.kind == EdgeKind::Chronological) out << " chrono";
        out << '\n';
    }
    return out.str();
}

WeightedGraph WeightedGraph::from_edge_list(const std::string& text, int num_nodes) {
    struct Parsed {
        int u, v;
        std::int64_t w;
        EdgeKind kind;
    };
    std::vector<Parsed> parsed;
    int max_node = num_nodes - 1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Parsed p{-1, -1, 0, EdgeKind::Plain};
        std::string kind;
        if (!(ls >> p.u >> p.v >> p.w)) {
            throw std::invalid_argument("bad edge-list line " + std::to_string(line_no) + ": '" +
                                        line + "'");
        }
        if (ls >> kind) {
            if (kind == "bond") {
                p.kind = EdgeKind::CnotBond;
            } else if (kind == "chrono") {
                p.kind = EdgeKind::Chronological;
            } else {
                throw std::invalid_argument("unknown edge kind '" + kind + "' on line " +
                                            std::to_string(line_no));
            }
        }
        max_node = std::max({max_node, p.u, p.v});
        parsed.push_back(p);
    }
    WeightedGraph g(max_node + 1);
    for (const Parsed& p : parsed) g.add_edge(p.u, p.v, p.w, p.kind);
    return g;
}

WeightedGraph build_qubit_graph(const Circuit& c) {
    WeightedGraph g(c.num_qubits());
    g.labels.reserve(c.num_qubits());
    for (int q = 0; q < c.num_qubits(); ++q) {
        g.labels.push_back({NodeRole::Qubit, q, -1});
    }
    for (const Gate& gate : c.gates()) {
        if (gate.is_cnot()) {
            g.add_edge(gate.control, gate.target, 1);
        }
    }
    return g;
}

WeightedGraph build_gate_graph(const Circuit& c) {
    // Count nodes first: one per 1q gate, two per CNOT.
    const auto& gates = c.gates();
    int num_nodes = c.one_qubit_count() + 2 * c.cnot_count();
    WeightedGraph g(num_nodes);
    g.labels.resize(num_nodes);

    // node id of gate `seq` on qubit `q`
    std::vector<int> last_node_on_qubit(c.num_qubits(), -1);
    int next = 0;
    for (int seq = 0; seq < static_cast<int>(gates.size()); ++seq) {
        const Gate& gate = gates[seq];
        if (gate.is_cnot()) {
            int cn = next++;
            int tn = next++;
            g.labels[cn] = {NodeRole::CnotControlHalf, gate.control, seq};
            g.labels[tn] = {NodeRole::CnotTargetHalf, gate.target, seq};
            g.add_edge(cn, tn, 1, EdgeKind::CnotBond);
            if (last_node_on_qubit[gate.control] >= 0) {
                g.add_edge(last_node_on_qubit[gate.control], cn, 1, EdgeKind::Chronological);
            }
            if (last_node_on_qubit[gate.target] >= 0) {
                g.add_edge(last_node_on_qubit[gate.target], tn, 1, EdgeKind::Chronological);
            }
            last_node_on_qubit[gate.control] = cn;
            last_node_on_qubit[gate.target] = tn;
        } else {
            int n = next++;
            g.labels[n] = {NodeRole::OneQubitGate, gate.target, seq};
            if (last_node_on_qubit[gate.target] >= 0) {
                g.add_edge(last_node_on_qubit[gate.target], n, 1, EdgeKind::Chronological);
            }
            last_node_on_qubit[gate.target] = n;
        }
    }
    return g;
}

}  // namespace dqc
