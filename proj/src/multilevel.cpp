#include "dqc/partition.hpp"
#include "dqc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

// Multilevel bisection in the classic recipe: heavy-edge-matching coarsening
// until the graph is small, greedy graph-growing plus randomized initial
// cuts at the coarsest level, Fiduccia-Mattheyses boundary refinement with
// rollback while uncoarsening. k > 2 is handled by recursive bisection.

namespace dqc {

namespace {

using Weight = std::int64_t;

struct Level {
    int n = 0;
    std::vector<int> node_weight;                            // original nodes contained
    std::vector<std::vector<std::pair<int, Weight>>> adj;    // neighbor, edge weight
    std::vector<int> parent_map;                             // fine node -> coarse node
};

Level from_graph(const WeightedGraph& g, const std::vector<int>& nodes) {
    Level lvl;
    lvl.n = static_cast<int>(nodes.size());
    lvl.node_weight.assign(lvl.n, 1);
    lvl.adj.resize(lvl.n);
    std::vector<int> local(g.num_nodes(), -1);
    for (int i = 0; i < lvl.n; ++i) local[nodes[i]] = i;
    for (int i = 0; i < lvl.n; ++i) {
        for (const auto& nb : g.neighbors(nodes[i])) {
            int j = local[nb.node];
            if (j >= 0 && j != i) {
                lvl.adj[i].push_back({j, g.edges()[nb.edge].weight});
            }
        }
    }
    return lvl;
}

int total_weight_of(const Level& lvl) {
    int total = 0;
    for (int w : lvl.node_weight) total += w;
    return total;
}

// Heavy-edge matching. Returns the coarse level, or nullopt-equivalent n unchanged.
Level coarsen(const Level& fine, Rng& rng) {
    std::vector<int> order(fine.n);
    for (int i = 0; i < fine.n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<int> match(fine.n, -1);
    for (int u : order) {
        if (match[u] >= 0) continue;
        int best = -1;
        Weight best_w = -1;
        for (const auto& [v, w] : fine.adj[u]) {
            if (match[v] >= 0) continue;
            if (w > best_w || (w == best_w && v < best)) {
                best = v;
                best_w = w;
            }
        }
        if (best >= 0) {
            match[u] = best;
            match[best] = u;
        } else {
            match[u] = u;
        }
    }

    Level coarse;
    coarse.parent_map.assign(fine.n, -1);
    for (int u = 0; u < fine.n; ++u) {
        if (coarse.parent_map[u] >= 0) continue;
        int id = coarse.n++;
        coarse.parent_map[u] = id;
        if (match[u] != u) coarse.parent_map[match[u]] = id;
    }
    coarse.node_weight.assign(coarse.n, 0);
    coarse.adj.resize(coarse.n);
    for (int u = 0; u < fine.n; ++u) {
        coarse.node_weight[coarse.parent_map[u]] += fine.node_weight[u];
    }
    // Merge parallel edges per coarse node with a scatter array.
    std::vector<Weight> scatter(coarse.n, 0);
    std::vector<int> touched;
    for (int cu = 0; cu < coarse.n; ++cu) coarse.adj[cu].reserve(4);
    std::vector<std::vector<int>> members(coarse.n);
    for (int u = 0; u < fine.n; ++u) members[coarse.parent_map[u]].push_back(u);
    for (int cu = 0; cu < coarse.n; ++cu) {
        touched.clear();
        for (int u : members[cu]) {
            for (const auto& [v, w] : fine.adj[u]) {
                int cv = coarse.parent_map[v];
                if (cv == cu) continue;
                if (scatter[cv] == 0) touched.push_back(cv);
                scatter[cv] += w;
            }
        }
        for (int cv : touched) {
            coarse.adj[cu].push_back({cv, scatter[cv]});
            scatter[cv] = 0;
        }
    }
    return coarse;
}

// Pseudo-peripheral start node: BFS twice from a random node.
int far_node(const Level& lvl, int start) {
    std::vector<int> dist(lvl.n, -1);
    std::queue<int> q;
    q.push(start);
    dist[start] = 0;
    int last = start;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        last = u;
        for (const auto& [v, w] : lvl.adj[u]) {
            (void)w;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return last;
}

struct Bisection {
    std::vector<int> side;  // 0 or 1 per node
    Weight cut = 0;
};

Weight cut_of(const Level& lvl, const std::vector<int>& side) {
    Weight cut = 0;
    for (int u = 0; u < lvl.n; ++u) {
        for (const auto& [v, w] : lvl.adj[u]) {
            if (u < v && side[u] != side[v]) cut += w;
        }
    }
    return cut;
}

// Greedy graph growing: accrete the most-attracted frontier node into side 0
// until its weight reaches the target, skipping nodes that would overflow.
std::vector<int> grow_initial(const Level& lvl, int target0, int cap0, Rng& rng) {
    std::vector<int> side(lvl.n, 1);
    int start = far_node(lvl, far_node(lvl, rng.next_int(lvl.n)));
    std::vector<Weight> attraction(lvl.n, 0);
    std::vector<char> in0(lvl.n, 0);
    std::priority_queue<std::pair<Weight, int>> frontier;  // (attraction, -node)

    int weight0 = 0;
    auto add = [&](int u) {
        side[u] = 0;
        in0[u] = 1;
        weight0 += lvl.node_weight[u];
        for (const auto& [v, w] : lvl.adj[u]) {
            if (!in0[v]) {
                attraction[v] += w;
                frontier.push({attraction[v], -v});
            }
        }
    };
    if (lvl.node_weight[start] <= cap0) add(start);

    while (weight0 < target0) {
        int pick = -1;
        while (!frontier.empty()) {
            auto [w, negv] = frontier.top();
            int v = -negv;
            frontier.pop();
            if (in0[v] || w != attraction[v]) continue;  // stale
            if (weight0 + lvl.node_weight[v] > cap0) continue;
            pick = v;
            break;
        }
        if (pick < 0) {
            // Disconnected or blocked: take the lightest unassigned node that fits.
            for (int v = 0; v < lvl.n; ++v) {
                if (!in0[v] && weight0 + lvl.node_weight[v] <= cap0 &&
                    (pick < 0 || lvl.node_weight[v] < lvl.node_weight[pick])) {
                    pick = v;
                }
            }
            if (pick < 0) break;
        }
        add(pick);
    }
    return side;
}

std::vector<int> random_initial(const Level& lvl, int target0, int cap0, Rng& rng) {
    std::vector<int> order(lvl.n);
    for (int i = 0; i < lvl.n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<int> side(lvl.n, 1);
    int weight0 = 0;
    for (int u : order) {
        if (weight0 >= target0) break;
        if (weight0 + lvl.node_weight[u] <= cap0) {
            side[u] = 0;
            weight0 += lvl.node_weight[u];
        }
    }
    return side;
}

// Move nodes out of an over-capacity side, cheapest connection loss first.
// Only guaranteed to succeed when node weights are 1 (the finest level).
void repair_balance(const Level& lvl, std::vector<int>& side, int cap0, int cap1) {
    int w0 = 0, w1 = 0;
    for (int u = 0; u < lvl.n; ++u) (side[u] == 0 ? w0 : w1) += lvl.node_weight[u];
    for (int from = 0; from < 2; ++from) {
        int cap_from = from == 0 ? cap0 : cap1;
        int cap_to = from == 0 ? cap1 : cap0;
        int& w_from = from == 0 ? w0 : w1;
        int& w_to = from == 0 ? w1 : w0;
        while (w_from > cap_from) {
            int best = -1;
            Weight best_loss = std::numeric_limits<Weight>::max();
            for (int u = 0; u < lvl.n; ++u) {
                if (side[u] != from) continue;
                if (w_to + lvl.node_weight[u] > cap_to) continue;
                Weight loss = 0;
                for (const auto& [v, w] : lvl.adj[u]) {
                    loss += side[v] == from ? w : -w;
                }
                if (loss < best_loss) {
                    best = u;
                    best_loss = loss;
                }
            }
            if (best < 0) break;
            side[best] = 1 - from;
            w_from -= lvl.node_weight[best];
            w_to += lvl.node_weight[best];
        }
    }
}

// One FM pass over boundary nodes with tentative moves and rollback to the
// best prefix. Never increases the cut. Returns the improvement.
Weight fm_pass(const Level& lvl, std::vector<int>& side, int cap0, int cap1, Weight& cut) {
    std::vector<Weight> gain(lvl.n, 0);
    std::vector<char> moved(lvl.n, 0);
    std::priority_queue<std::pair<Weight, int>> heap;  // (gain, -node)

    int w0 = 0, w1 = 0;
    for (int u = 0; u < lvl.n; ++u) (side[u] == 0 ? w0 : w1) += lvl.node_weight[u];

    auto recompute_gain = [&](int u) {
        Weight g = 0;
        for (const auto& [v, w] : lvl.adj[u]) {
            g += side[v] != side[u] ? w : -w;
        }
        gain[u] = g;
    };
    for (int u = 0; u < lvl.n; ++u) {
        bool boundary = false;
        for (const auto& [v, w] : lvl.adj[u]) {
            (void)w;
            if (side[v] != side[u]) {
                boundary = true;
                break;
            }
        }
        if (boundary) {
            recompute_gain(u);
            heap.push({gain[u], -u});
        }
    }

    Weight best_cut = cut;
    Weight cur = cut;
    std::vector<int> move_log;
    std::size_t best_prefix = 0;

    while (!heap.empty()) {
        auto [g, negu] = heap.top();
        int u = -negu;
        heap.pop();
        if (moved[u] || g != gain[u]) continue;
        int to = 1 - side[u];
        int wu = lvl.node_weight[u];
        if ((to == 0 && w0 + wu > cap0) || (to == 1 && w1 + wu > cap1)) continue;

        side[u] = to;
        moved[u] = 1;
        cur -= g;
        if (to == 0) {
            w0 += wu;
            w1 -= wu;
        } else {
            w1 += wu;
            w0 -= wu;
        }
        move_log.push_back(u);
        if (cur < best_cut) {
            best_cut = cur;
            best_prefix = move_log.size();
        }
        for (const auto& [v, w] : lvl.adj[u]) {
            (void)w;
            if (!moved[v]) {
                recompute_gain(v);
                heap.push({gain[v], -v});
            }
        }
    }

    // Roll back past the best point.
    for (std::size_t i = move_log.size(); i > best_prefix; --i) {
        int u = move_log[i - 1];
        side[u] = 1 - side[u];
    }
    Weight gained = cut - best_cut;
    cut = best_cut;
    return gained;
}

void refine(const Level& lvl, std::vector<int>& side, int cap0, int cap1, Weight& cut,
            int max_passes) {
    for (int pass = 0; pass < max_passes; ++pass) {
        if (fm_pass(lvl, side, cap0, cap1, cut) == 0) break;
    }
}

// Full multilevel bisection of one level graph.
Bisection bisect(const Level& base, int target0, int cap0, int cap1, int refinement_passes,
                 Rng& rng) {
    std::vector<Level> hierarchy;
    hierarchy.push_back(base);
    while (hierarchy.back().n > 30) {
        Level next = coarsen(hierarchy.back(), rng);
        if (next.n >= hierarchy.back().n * 9 / 10) break;  // matching stalled
        Level parent = std::move(next);
        hierarchy.push_back(std::move(parent));
    }

    const Level& coarsest = hierarchy.back();
    Bisection best;
    best.cut = std::numeric_limits<Weight>::max();
    constexpr int kGrowTrials = 6;
    constexpr int kRandomTrials = 6;
    for (int trial = 0; trial < kGrowTrials + kRandomTrials; ++trial) {
        std::vector<int> side = trial < kGrowTrials
                                    ? grow_initial(coarsest, target0, cap0, rng)
                                    : random_initial(coarsest, target0, cap0, rng);
        repair_balance(coarsest, side, cap0, cap1);
        Weight cut = cut_of(coarsest, side);
        refine(coarsest, side, cap0, cap1, cut, std::max(refinement_passes, 4));
        if (cut < best.cut) {
            best.side = std::move(side);
            best.cut = cut;
        }
    }

    // Project back through the hierarchy, refining at each level.
    for (int li = static_cast<int>(hierarchy.size()) - 1; li > 0; --li) {
        const Level& fine = hierarchy[li - 1];
        const Level& coarse = hierarchy[li];
        std::vector<int> fine_side(fine.n);
        for (int u = 0; u < fine.n; ++u) fine_side[u] = best.side[coarse.parent_map[u]];
        best.side = std::move(fine_side);
        repair_balance(fine, best.side, cap0, cap1);
        best.cut = cut_of(fine, best.side);
        refine(fine, best.side, cap0, cap1, best.cut, refinement_passes);
    }
    repair_balance(hierarchy.front(), best.side, cap0, cap1);
    best.cut = cut_of(hierarchy.front(), best.side);
    return best;
}

// Recursive bisection: split k into k0 + k1 and the node set proportionally.
void solve(const WeightedGraph& g, const std::vector<int>& nodes, int k, int max_part_size,
           int refinement_passes, Rng& rng, int part_base, std::vector<int>& out) {
    if (nodes.empty()) return;  // parts may stay empty under loose imbalance
    if (k == 1) {
        for (int u : nodes) out[u] = part_base;
        return;
    }
    Level lvl = from_graph(g, nodes);
    int n = total_weight_of(lvl);
    int k0 = (k + 1) / 2;
    int k1 = k - k0;
    int cap0 = std::min(n, k0 * max_part_size);
    int cap1 = std::min(n, k1 * max_part_size);
    if (cap0 + cap1 < n) throw std::invalid_argument("infeasible balance constraint");
    int target0 = static_cast<int>(std::llround(static_cast<double>(n) * k0 / k));
    target0 = std::clamp(target0, n - cap1, cap0);

    Bisection bi = bisect(lvl, target0, cap0, cap1, refinement_passes, rng);

    std::vector<int> nodes0, nodes1;
    for (int i = 0; i < lvl.n; ++i) {
        (bi.side[i] == 0 ? nodes0 : nodes1).push_back(nodes[i]);
    }
    if (nodes0.empty() && k0 > 0 && !nodes1.empty() && static_cast<int>(nodes1.size()) > k1) {
        // Degenerate split; keep recursion well-formed by stealing one node.
        nodes0.push_back(nodes1.back());
        nodes1.pop_back();
    }
    solve(g, nodes0, k0, max_part_size, refinement_passes, rng, part_base, out);
    solve(g, nodes1, k1, max_part_size, refinement_passes, rng, part_base + k0, out);
}

}  // namespace

Partitioning multilevel_partition(const WeightedGraph& g, const PartitionConfig& cfg) {
    int n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("cannot partition an empty graph");
    if (cfg.k < 1 || cfg.k > n) throw std::invalid_argument("k must be in [1, num_nodes]");
    if (cfg.max_imbalance < 1.0) throw std::invalid_argument("max_imbalance must be >= 1.0");

    int max_size = max_part_size_allowed(n, cfg.k, cfg.max_imbalance);
    if (static_cast<std::int64_t>(cfg.k) * max_size < n) {
        throw std::invalid_argument("infeasible balance constraint");
    }

    std::vector<int> assignment(n, 0);
    if (cfg.k > 1) {
        std::vector<int> nodes(n);
        for (int i = 0; i < n; ++i) nodes[i] = i;
        Rng rng(cfg.seed);
        solve(g, nodes, cfg.k, max_size, std::max(1, cfg.refinement_passes), rng, 0, assignment);
    }
    Partitioning p = make_partitioning(g, std::move(assignment), cfg.k);
    if (p.max_part_size() > max_size) {
        throw std::logic_error("partitioner violated the balance constraint");
    }
    return p;
}

}  // namespace dqc
