#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "finecurves/errors.hpp"

namespace finecurves {

// Small simple undirected graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<uint8_t> bits; // upper-triangle adjacency, pair_index order

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), bits(static_cast<size_t>(n_) * (n_ - 1) / 2, 0) {
        if (n_ < 0) throw BadGraph("negative vertex count");
    }

    // graph6 column-major upper-triangle position of pair {i,j}, i != j.
    static size_t pair_index(int i, int j) {
        if (i > j) std::swap(i, j);
        return static_cast<size_t>(j) * (j - 1) / 2 + i;
    }
    bool edge(int i, int j) const {
        check(i); check(j);
        if (i == j) return false;
        return bits[pair_index(i, j)] != 0;
    }
    void set_edge(int i, int j, bool v = true) {
        check(i); check(j);
        if (i == j) throw BadGraph("self loop");
        bits[pair_index(i, j)] = v ? 1 : 0;
    }
    void check(int v) const {
        if (v < 0 || v >= n) throw BadGraph("vertex out of range: " + std::to_string(v));
    }
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && edge(u, v)) ++d;
        return d;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (edge(i, j)) e.emplace_back(i, j);
        return e;
    }
    size_t edge_count() const {
        size_t c = 0;
        for (auto b : bits) c += b;
        return c;
    }
    SimpleGraph complement() const {
        SimpleGraph g(n);
        for (size_t t = 0; t < bits.size(); ++t) g.bits[t] = bits[t] ? 0 : 1;
        return g;
    }
    SimpleGraph induced(const std::vector<int>& verts) const {
        SimpleGraph g(static_cast<int>(verts.size()));
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (edge(verts[a], verts[b])) g.set_edge(a, b);
        return g;
    }
    bool operator==(const SimpleGraph& o) const { return n == o.n && bits == o.bits; }
    bool operator<(const SimpleGraph& o) const {
        if (n != o.n) return n < o.n;
        return bits < o.bits;
    }
};

// graph6 text format (n <= 62 supported; single-byte header n+63, then the
// upper triangle column-major, 6 bits per printable byte offset by 63).
SimpleGraph parse_graph6(const std::string& text);
std::string emit_graph6(const SimpleGraph& g);

// Canonical form: the lexicographically smallest adjacency bitstring over all
// vertex relabelings. Exponential in n; intended for n <= 8.
SimpleGraph canonical_form(const SimpleGraph& g);

// One canonical representative per isomorphism class of graphs on n vertices,
// sorted; brute-force enumeration, intended for n <= 6.
std::vector<SimpleGraph> isomorphism_classes(int n);

bool is_connected(const SimpleGraph& g);

// Disjoint union followed by all cross edges ("join" of the blocks).
SimpleGraph join_blocks(const std::vector<SimpleGraph>& blocks);

// Disjoint union.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

} // namespace finecurves
