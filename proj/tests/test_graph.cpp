#include <algorithm>
#include <random>

#include "doctest.h"

#include "finecurves/graph.hpp"
#include "helpers.hpp"

using namespace finecurves;
using finecurves::testhelpers::random_graph;

TEST_CASE("graph6 decoding of the documented two-vertex examples") {
    SimpleGraph k2 = parse_graph6("A_");
    REQUIRE(k2.n == 2);
    CHECK(k2.edge(0, 1));

    SimpleGraph e2 = parse_graph6("A?");
    REQUIRE(e2.n == 2);
    CHECK_FALSE(e2.edge(0, 1));
}

TEST_CASE("graph6 hand-checked small codes") {
    // 'B' header = 3 vertices; 'w' encodes bits 111 -> triangle.
    SimpleGraph k3 = parse_graph6("Bw");
    REQUIRE(k3.n == 3);
    CHECK(k3.edge_count() == 3);

    // 'W' - 63 = 24 = 011000; bits are MSB-first over pairs {0,1},{0,2},{1,2},
    // giving the path 0-2-1.
    SimpleGraph p3 = parse_graph6("BW");
    REQUIRE(p3.n == 3);
    CHECK_FALSE(p3.edge(0, 1));
    CHECK(p3.edge(0, 2));
    CHECK(p3.edge(1, 2));

    // 5-cycle as emitted by the family generator (vertices in cycle order).
    SimpleGraph c5 = parse_graph6("Dhc");
    REQUIRE(c5.n == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("graph6 emit is the inverse of parse") {
    CHECK(emit_graph6(parse_graph6("A_")) == "A_");
    CHECK(emit_graph6(parse_graph6("Bw")) == "Bw");
    CHECK(emit_graph6(parse_graph6("Dhc")) == "Dhc");

    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        SimpleGraph g = random_graph(rng, n);
        SimpleGraph back = parse_graph6(emit_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS((void)parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS((void)parse_graph6("A"), MalformedGraph6);   // missing edge bytes
    CHECK_THROWS_AS((void)parse_graph6("A__"), MalformedGraph6); // trailing bytes
    CHECK_THROWS_AS((void)parse_graph6("\x01_"), MalformedGraph6);
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g.edge(i, j)) h.set_edge(perm[i], perm[j]);
        CHECK(canonical_form(g) == canonical_form(h));
    }
    // Non-isomorphic graphs (path vs triangle) stay distinct.
    CHECK_FALSE(canonical_form(parse_graph6("BW")) == canonical_form(parse_graph6("Bw")));
}

TEST_CASE("isomorphism class counts for small n") {
    CHECK(isomorphism_classes(1).size() == 1);
    CHECK(isomorphism_classes(2).size() == 2);
    CHECK(isomorphism_classes(3).size() == 4);
    CHECK(isomorphism_classes(4).size() == 11);
    CHECK(isomorphism_classes(5).size() == 34);
    // Every listed class is its own canonical form, and they are ordered.
    auto cls = isomorphism_classes(4);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        CHECK(canonical_form(cls[i]) == cls[i]);
        if (i > 0) CHECK(cls[i - 1] < cls[i]);
    }
}

TEST_CASE("connectivity, unions and joins") {
    CHECK(is_connected(parse_graph6("Bw")));
    CHECK_FALSE(is_connected(parse_graph6("A?")));
    SimpleGraph one(1);
    CHECK(is_connected(one));

    SimpleGraph u = disjoint_union(parse_graph6("A_"), one);
    REQUIRE(u.n == 3);
    CHECK(u.edge(0, 1));
    CHECK_FALSE(u.edge(0, 2));
    CHECK_FALSE(u.edge(1, 2));

    SimpleGraph j = join_blocks({parse_graph6("A?"), parse_graph6("A?")});
    REQUIRE(j.n == 4);
    CHECK_FALSE(j.edge(0, 1)); // inside block 1
    CHECK_FALSE(j.edge(2, 3)); // inside block 2
    CHECK(j.edge(0, 2));       // every cross pair present
    CHECK(j.edge(0, 3));
    CHECK(j.edge(1, 2));
    CHECK(j.edge(1, 3));

    SimpleGraph ind = j.induced({0, 2, 3});
    REQUIRE(ind.n == 3);
    CHECK(ind.edge(0, 1));
    CHECK(ind.edge(0, 2));
    CHECK_FALSE(ind.edge(1, 2));
}
