#include "dqc/partition.hpp"

#include "dqc/generate.hpp"
#include "dqc/graph.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace dqc;

namespace {

WeightedGraph path_graph(int n) {
    WeightedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1);
    return g;
}

WeightedGraph random_graph(int n, double edge_prob, int max_weight, Rng& rng) {
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_double() < edge_prob) {
                g.add_edge(u, v, 1 + rng.next_int(max_weight));
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("expected_random_ebits matches the frozen baseline table") {
    // (qubits, cnots) -> e-bits
    CHECK(expected_random_ebits(5, 48) == 30);
    CHECK(expected_random_ebits(7, 480) == 280);
    CHECK(expected_random_ebits(9, 98) == 56);
    CHECK(expected_random_ebits(10, 163) == 91);
    CHECK(expected_random_ebits(10, 216) == 120);
    CHECK(expected_random_ebits(60, 11405) == 5800);
    CHECK(expected_random_ebits(63, 1405) == 714);
    CHECK(expected_random_ebits(64, 5552) == 2821);
    CHECK(expected_random_ebits(2, 1) == 1);
    CHECK(expected_random_ebits(2, 0) == 0);
    CHECK_THROWS_AS(expected_random_ebits(1, 5), std::invalid_argument);
}

TEST_CASE("brute force oracle") {
    SUBCASE("path P4 splits at the middle edge") {
        Partitioning p = brute_force_partition(path_graph(4), 2, 1.0);
        CHECK(p.cut_weight == 1);
        CHECK(p.part_sizes == std::vector<int>{2, 2});
        CHECK(p.assignment == std::vector<int>{0, 0, 1, 1});  // lexicographically smallest
    }
    SUBCASE("star K13 balanced cut is 2") {
        WeightedGraph star(4);
        star.add_edge(0, 1, 1);
        star.add_edge(0, 2, 1);
        star.add_edge(0, 3, 1);
        CHECK(brute_force_partition(star, 2, 1.0).cut_weight == 2);
    }
    SUBCASE("K4 balanced cut is 4") {
        WeightedGraph k4(4);
        for (int u = 0; u < 4; ++u) {
            for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, 1);
        }
        CHECK(brute_force_partition(k4, 2, 1.0).cut_weight == 4);
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(brute_force_partition(path_graph(21), 2, 1.0), std::invalid_argument);
    }
}

TEST_CASE("random_partition") {
    WeightedGraph g = path_graph(6);
    SUBCASE("k=1 puts everything in one part") {
        CHECK(random_partition(g, 1, 3).cut_weight == 0);
    }
    SUBCASE("edgeless graph cuts nothing") {
        CHECK(random_partition(WeightedGraph(5), 2, 3).cut_weight == 0);
    }
    SUBCASE("balanced sizes and determinism") {
        Partitioning p1 = random_partition(g, 2, 42);
        Partitioning p2 = random_partition(g, 2, 42);
        CHECK(p1.assignment == p2.assignment);
        CHECK(p1.part_sizes == std::vector<int>{3, 3});
        Partitioning odd = random_partition(path_graph(7), 2, 9);
        CHECK(odd.part_sizes == std::vector<int>{4, 3});
    }
    SUBCASE("mean cut over many seeds approaches the even-split closed form") {
        Rng rng(77);
        WeightedGraph k = random_graph(8, 0.5, 4, rng);
        double total = 0;
        const int samples = 20000;
        for (int s = 0; s < samples; ++s) total += random_partition(k, 2, s).cut_weight;
        double mean = total / samples;
        double predicted = k.total_weight() * 8.0 / (2.0 * 7.0);
        CHECK(mean == doctest::Approx(predicted).epsilon(0.02));
    }
}

TEST_CASE("multilevel partitioner") {
    SUBCASE("P4 balanced optimum") {
        Partitioning p = multilevel_partition(path_graph(4), {2, 1.0, 1, 8});
        CHECK(p.cut_weight == 1);
        CHECK(p.imbalance <= 1.0);
    }
    SUBCASE("tfim qubit graph cuts one path edge") {
        WeightedGraph g = build_qubit_graph(gen_tfim(7, 40));
        Partitioning p = multilevel_partition(g, {2, 1.30, 1, 8});
        CHECK(p.cut_weight == 80);
        CHECK(p.max_part_size() == 4);
    }
    SUBCASE("deterministic for a fixed config") {
        Rng rng(3);
        WeightedGraph g = random_graph(40, 0.2, 8, rng);
        Partitioning a = multilevel_partition(g, {3, 1.2, 99, 8});
        Partitioning b = multilevel_partition(g, {3, 1.2, 99, 8});
        CHECK(a.assignment == b.assignment);
        CHECK(a.cut_weight == b.cut_weight);
    }
    SUBCASE("k=1 keeps everything together") {
        Partitioning p = multilevel_partition(path_graph(5), {1, 1.0, 1, 8});
        CHECK(p.cut_weight == 0);
        CHECK(p.part_sizes == std::vector<int>{5});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(multilevel_partition(WeightedGraph(0), {2, 1.0, 1, 8}),
                        std::invalid_argument);
        CHECK_THROWS_AS(multilevel_partition(path_graph(3), {4, 1.0, 1, 8}),
                        std::invalid_argument);
    }
    SUBCASE("k-way balance holds on random graphs") {
        Rng rng(13);
        for (int trial = 0; trial < 15; ++trial) {
            int n = 6 + rng.next_int(40);
            int k = 2 + rng.next_int(4);
            WeightedGraph g = random_graph(n, 0.25, 8, rng);
            double imb = 1.0 + 0.15 * rng.next_int(4);
            Partitioning p = multilevel_partition(g, {k, imb, rng.next_u64(), 8});
            CHECK(p.max_part_size() <= max_part_size_allowed(n, k, imb));
            int total = 0;
            for (int s : p.part_sizes) total += s;
            CHECK(total == n);
            CHECK(p.cut_weight == cut_weight(g, p.assignment));
        }
    }
    SUBCASE("never worse than brute force, usually close (mini corpus)") {
        Rng rng(31);
        int optimal = 0, within_15 = 0;
        const int trials = 40;
        for (int trial = 0; trial < trials; ++trial) {
            int n = 5 + rng.next_int(6);
            WeightedGraph g = random_graph(n, 0.4, 8, rng);
            Partitioning exact = brute_force_partition(g, 2, 1.0);
            Partitioning heur = multilevel_partition(g, {2, 1.0, rng.next_u64(), 8});
            CHECK(heur.cut_weight >= exact.cut_weight);  // oracle dominance
            if (heur.cut_weight == exact.cut_weight) ++optimal;
            if (heur.cut_weight <= exact.cut_weight + exact.cut_weight / 2) ++within_15;
        }
        CHECK(optimal >= trials * 6 / 10);
        CHECK(within_15 >= trials * 9 / 10);
    }
}
