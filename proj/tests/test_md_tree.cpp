#include <catch2/catch_amalgamated.hpp>

#include "mwtk/md_tree.hpp"
#include "support/corpus.hpp"
#include "support/iso.hpp"

using namespace mwtk;

TEST_CASE("three-vertex path decomposes into series over parallel") {
    MDTree t = decompose(Graph::path(3));
    REQUIRE(serialize_tree(t) ==
            "series module={0,1,2}\n"
            "  parallel module={0,2}\n"
            "    leaf module={0}\n"
            "    leaf module={2}\n"
            "  leaf module={1}\n");
}

TEST_CASE("four-cycle decomposes into series over two parallel pairs") {
    MDTree t = decompose(Graph::cycle(4));
    REQUIRE(serialize_tree(t) ==
            "series module={0,1,2,3}\n"
            "  parallel module={0,2}\n"
            "    leaf module={0}\n"
            "    leaf module={2}\n"
            "  parallel module={1,3}\n"
            "    leaf module={1}\n"
            "    leaf module={3}\n");
    REQUIRE(modular_width(t) == 0);
}

TEST_CASE("star splits the centre off") {
    MDTree t = decompose(corpus::star(3));
    REQUIRE(serialize_tree(t) ==
            "series module={0,1,2,3}\n"
            "  leaf module={0}\n"
            "  parallel module={1,2,3}\n"
            "    leaf module={1}\n"
            "    leaf module={2}\n"
            "    leaf module={3}\n");
}

TEST_CASE("prime graphs decompose into a single prime node over leaves") {
    MDTree c5 = decompose(Graph::cycle(5));
    REQUIRE(c5.nodes[c5.root].kind == NodeKind::prime);
    REQUIRE(c5.nodes[c5.root].children.size() == 5);
    REQUIRE(modular_width(c5) == 5);
    MDTree p4 = decompose(Graph::path(4));
    REQUIRE(p4.nodes[p4.root].kind == NodeKind::prime);
    REQUIRE(modular_width(p4) == 4);
    MDTree pet = decompose(corpus::petersen());
    REQUIRE(pet.nodes[pet.root].kind == NodeKind::prime);
    REQUIRE(modular_width(pet) == 10);
}

TEST_CASE("graphs built from unions and joins have width zero") {
    REQUIRE(modular_width(Graph::complete(7)) == 0);
    REQUIRE(modular_width(Graph::edgeless(7)) == 0);
    REQUIRE(modular_width(Graph::cycle(4)) == 0);
    REQUIRE(modular_width(corpus::complete_bipartite(3, 4)) == 0);
    REQUIRE(modular_width(Graph(1)) == 0);
    REQUIRE(modular_width(Graph::cycle(5)) == 5);
}

TEST_CASE("tree width agrees with the subgraph characterisation") {
    for (const Graph& g : corpus::small_family()) {
        if (g.vertex_count() > 10) continue;
        INFO("n=" << g.vertex_count() << " m=" << g.edge_count());
        REQUIRE(modular_width(g) == mw_bruteforce(g));
    }
    for (unsigned seed = 0; seed < 18; ++seed) {
        Graph g = corpus::random_graph(3 + int(seed % 7), seed, 30 + int(seed % 5) * 15);
        INFO("seed " << seed);
        REQUIRE(modular_width(g) == mw_bruteforce(g));
    }
}

TEST_CASE("width is invariant under complement") {
    for (unsigned seed = 0; seed < 15; ++seed) {
        Graph g = corpus::random_graph(2 + int(seed % 8), seed + 100, 50);
        INFO("seed " << seed);
        REQUIRE(modular_width(g) == modular_width(complement(g)));
    }
}

TEST_CASE("decomposition is deterministic") {
    Graph g = corpus::random_graph(9, 7, 45);
    REQUIRE(serialize_tree(decompose(g)) == serialize_tree(decompose(g)));
}

TEST_CASE("validation passes on freshly built trees") {
    for (const Graph& g : corpus::small_family()) {
        INFO("n=" << g.vertex_count() << " m=" << g.edge_count());
        REQUIRE(validate_tree(decompose(g)).empty());
    }
    for (unsigned seed = 0; seed < 24; ++seed) {
        Graph g = corpus::random_graph(1 + int(seed % 10), seed, 25 + int(seed % 4) * 20);
        INFO("seed " << seed);
        REQUIRE(validate_tree(decompose(g)).empty());
    }
}

TEST_CASE("validation flags tampering") {
    MDTree t = decompose(Graph::cycle(4));
    t.nodes[t.root].kind = NodeKind::parallel;
    REQUIRE_FALSE(validate_tree(t).empty());
}

TEST_CASE("quotients") {
    MDTree c5 = decompose(Graph::cycle(5));
    REQUIRE(node_quotient(c5, c5.root) == Graph::cycle(5));
    MDTree c4 = decompose(Graph::cycle(4));
    REQUIRE(node_quotient(c4, c4.root) == Graph::complete(2));
    MDTree k1 = decompose(Graph(1));
    REQUIRE(node_quotient(k1, k1.root) == Graph(1));
}

TEST_CASE("quotient equals the projection onto representatives") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        Graph g = corpus::random_graph(8, seed + 40, 40 + int(seed % 3) * 15);
        MDTree t = decompose(g);
        for (int id = 0; id < int(t.nodes.size()); ++id) {
            const MDNode& node = t.nodes[id];
            if (node.kind == NodeKind::leaf) continue;
            VertexSet reps;
            for (int c : node.children) reps.push_back(t.nodes[c].module.front());
            std::sort(reps.begin(), reps.end());
            REQUIRE(node_quotient(t, id) == induced_subgraph(g, reps).graph);
        }
    }
}

TEST_CASE("mixed adjacency between children is rejected") {
    // Hand-built bogus tree over a four-cycle: {0,1} and {2,3} are not
    // modules, their cross adjacency is mixed.
    MDTree bogus{Graph::cycle(4),
                 {{NodeKind::leaf, {0, 1}, {}}, {NodeKind::leaf, {2, 3}, {}},
                  {NodeKind::parallel, {0, 1, 2, 3}, {0, 1}}},
                 2};
    REQUIRE_THROWS_AS(node_quotient(bogus, 2), decomposition_error);
}

TEST_CASE("contracting a module keeps the rest of the tree intact") {
    Graph star = corpus::star(3);
    Graph contracted = modular_replacement(star, {1, 2, 3}, Graph(1));
    MDTree t = decompose(contracted);
    REQUIRE(t.nodes[t.root].kind == NodeKind::series);
    REQUIRE(t.nodes[t.root].children.size() == 2);

    for (unsigned seed = 0; seed < 10; ++seed) {
        Graph g = corpus::random_graph(8, seed + 70, 50);
        MDTree tree = decompose(g);
        for (int id = 0; id < int(tree.nodes.size()); ++id) {
            if (id == tree.root || tree.nodes[id].kind == NodeKind::leaf) continue;
            Graph smaller = modular_replacement(g, tree.nodes[id].module, Graph(1));
            MDTree st = decompose(smaller);
            REQUIRE(validate_tree(st).empty());
            REQUIRE(modular_width(st) <= modular_width(tree));
        }
    }
}

TEST_CASE("every strong module shows up for random graphs") {
    // validate_tree cross-checks the node set against the strong modules for
    // graphs this small; make sure that path actually runs.
    Graph g = corpus::random_graph(10, 11, 50);
    REQUIRE(g.vertex_count() == 10);
    REQUIRE(validate_tree(decompose(g)).empty());
}
