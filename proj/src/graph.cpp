#include "finecurves/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace finecurves {

SimpleGraph parse_graph6(const std::string& text) {
    // Strip a trailing newline so files written by other tools parse as-is.
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw MalformedGraph6("empty input (byte 0)");
    const unsigned char h = static_cast<unsigned char>(s[0]);
    if (h == 126) throw MalformedGraph6("orders above 62 not supported (byte 0)");
    if (h < 63 || h > 125) throw MalformedGraph6("bad header byte (byte 0)");
    const int n = h - 63;
    SimpleGraph g(n);
    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw MalformedGraph6("expected " + std::to_string(1 + nbytes) + " bytes, got " +
                              std::to_string(s.size()) + " (byte " + std::to_string(s.size()) + ")");
    size_t bit = 0;
    for (size_t k = 0; k < nbytes; ++k) {
        const unsigned char c = static_cast<unsigned char>(s[1 + k]);
        if (c < 63 || c > 126)
            throw MalformedGraph6("bad data byte (byte " + std::to_string(1 + k) + ")");
        const int v = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool on = (v >> b) & 1;
            if (bit < nbits) {
                g.bits[bit] = on ? 1 : 0;
            } else if (on) {
                throw MalformedGraph6("nonzero padding (byte " + std::to_string(1 + k) + ")");
            }
        }
    }
    return g;
}

std::string emit_graph6(const SimpleGraph& g) {
    if (g.n > 62) throw MalformedGraph6("orders above 62 not supported");
    std::string out(1, static_cast<char>(g.n + 63));
    const size_t nbits = g.bits.size();
    int acc = 0, filled = 0;
    for (size_t t = 0; t < nbits; ++t) {
        acc = (acc << 1) | (g.bits[t] ? 1 : 0);
        if (++filled == 6) {
            out += static_cast<char>(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

SimpleGraph canonical_form(const SimpleGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    SimpleGraph best = g;
    SimpleGraph cand(g.n);
    do {
        for (int j = 1; j < g.n; ++j)
            for (int i = 0; i < j; ++i)
                cand.bits[SimpleGraph::pair_index(i, j)] =
                    g.bits[SimpleGraph::pair_index(perm[i], perm[j])];
        if (cand.bits < best.bits) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<SimpleGraph> isomorphism_classes(int n) {
    if (n < 0 || n > 8) throw BadGraph("isomorphism enumeration supported for 0 <= n <= 8");
    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    std::set<std::vector<uint8_t>> seen;
    std::vector<SimpleGraph> reps;
    for (uint64_t mask = 0; mask < (uint64_t(1) << nbits); ++mask) {
        SimpleGraph g(n);
        for (size_t t = 0; t < nbits; ++t) g.bits[t] = (mask >> t) & 1;
        SimpleGraph c = canonical_form(g);
        if (seen.insert(c.bits).second) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return true;
    std::vector<char> vis(g.n, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.n; ++u)
            if (!vis[u] && g.edge(u, v)) {
                vis[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.n + b.n);
    for (auto [i, j] : a.edges()) g.set_edge(i, j);
    for (auto [i, j] : b.edges()) g.set_edge(a.n + i, a.n + j);
    return g;
}

SimpleGraph join_blocks(const std::vector<SimpleGraph>& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += b.n;
    SimpleGraph g(total);
    int off = 0;
    std::vector<int> offsets;
    for (const auto& b : blocks) {
        offsets.push_back(off);
        for (auto [i, j] : b.edges()) g.set_edge(off + i, off + j);
        off += b.n;
    }
    for (size_t p = 0; p < blocks.size(); ++p)
        for (size_t q = p + 1; q < blocks.size(); ++q)
            for (int i = 0; i < blocks[p].n; ++i)
                for (int j = 0; j < blocks[q].n; ++j)
                    g.set_edge(offsets[p] + i, offsets[q] + j);
    return g;
}

} // namespace finecurves
