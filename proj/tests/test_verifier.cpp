#include <algorithm>

#include "doctest.h"

#include "finecurves/realize.hpp"
#include "finecurves/verifier.hpp"
#include "helpers.hpp"

using namespace finecurves;
using namespace finecurves::testhelpers;

namespace {

// Two parallel verticals and one horizontal on the torus: the verticals are
// disjoint from each other and cross the horizontal once each.
CurveSystem two_verticals_one_horizontal() {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(vertical_curve(sys.surface, 0, rq(1, 4)));
    sys.curves.push_back(vertical_curve(sys.surface, 1, rq(3, 4)));
    sys.curves.push_back(horizontal_curve(sys.surface, 2, rq(1, 2)));
    return sys;
}

// Sorted pair of corner y-coordinates of a bigon, for fixture matching.
std::pair<Rat, Rat> corner_ys(const CurveSystem& sys, const Bigon& bg) {
    const Curve& a = sys.curve_by_label(0);
    Rat y1 = passage_point(a, bg.a_from).y;
    Rat y2 = passage_point(a, bg.a_to).y;
    if (y2 < y1) std::swap(y1, y2);
    return {y1, y2};
}

} // namespace

TEST_CASE("semantics names round-trip") {
    CHECK(semantics_name(AdjacencySpec{Semantics::Fine, 2}) == "fine");
    CHECK(semantics_name(AdjacencySpec{Semantics::Finitary, 2}) == "finitary");
    CHECK(semantics_name(AdjacencySpec{Semantics::KFine, 3}) == "k=3");
    for (const char* text : {"fine", "finitary", "k=1", "k=2", "k=17"}) {
        CHECK(semantics_name(parse_semantics(text)) == text);
    }
    for (const char* text : {"", "fin", "k=", "k=0", "k=-2", "K=2", "k=two"}) {
        CHECK_THROWS_AS((void)parse_semantics(text), Error);
    }
}

TEST_CASE("induced pattern of a hand-built system") {
    CurveSystem sys = two_verticals_one_horizontal();
    PatternResult fine = induced_pattern(sys, parse_semantics("fine"));
    REQUIRE(fine.graph.n == 3);
    CHECK(fine.labels == std::vector<int>{0, 1, 2});
    CHECK(fine.graph.edge(0, 1));       // disjoint verticals
    CHECK_FALSE(fine.graph.edge(0, 2)); // one crossing
    CHECK_FALSE(fine.graph.edge(1, 2));
    CHECK(fine.pair(0, 2).points == 1);
    CHECK(fine.pair(0, 2).all_crossing);
    CHECK_FALSE(fine.pair(0, 2).infinite);

    // One tolerated crossing makes everything adjacent here.
    PatternResult k1 = induced_pattern(sys, parse_semantics("k=1"));
    CHECK(k1.graph.edge(0, 1));
    CHECK(k1.graph.edge(0, 2));
    CHECK(k1.graph.edge(1, 2));
}

TEST_CASE("adjacency is monotone across the semantics ladder") {
    std::vector<CurveSystem> samples;
    samples.push_back(two_verticals_one_horizontal());
    samples.push_back(single_bigon_system());
    samples.push_back(double_bigon_system());
    samples.push_back(realize_fine_torus(parse_graph6("Dhc")).system);

    for (const CurveSystem& sys : samples) {
        SimpleGraph prev = induced_pattern(sys, parse_semantics("fine")).graph;
        for (const char* sem : {"k=1", "k=2", "k=3", "k=4", "finitary"}) {
            SimpleGraph next = induced_pattern(sys, parse_semantics(sem)).graph;
            for (int j = 1; j < prev.n; ++j)
                for (int i = 0; i < j; ++i)
                    if (prev.edge(i, j)) CHECK(next.edge(i, j));
            prev = next;
        }
    }
}

TEST_CASE("duplicate curve images are rejected") {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(vertical_curve(sys.surface, 0, rq(1, 2)));
    sys.curves.push_back(vertical_curve(sys.surface, 1, rq(1, 2)));
    CHECK_THROWS_AS((void)induced_pattern(sys, parse_semantics("fine")), DuplicateCurve);
}

TEST_CASE("certificate checking accepts a correct realization") {
    Certificate cert = realize_fine_torus(parse_graph6("Bw"));
    CheckReport rep = check_certificate(cert);
    CHECK(rep.ok);
    CHECK(rep.embedded_ok);
    CHECK(rep.essential_ok);
    CHECK(rep.pattern_ok);
    CHECK(rep.mismatches.empty());
}

TEST_CASE("certificate checking reports label-for-label mismatches") {
    Certificate cert = realize_fine_torus(parse_graph6("Bw"));
    // Claim the path 0-2-1 instead of the triangle: only the pair {0,1}
    // disagrees with the realized pattern.
    cert.claimed = parse_graph6("BW");
    CheckReport rep = check_certificate(cert);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.pattern_ok);
    REQUIRE(rep.mismatches.size() == 1);
    const Mismatch& m = rep.mismatches[0];
    CHECK(((m.a == 0 && m.b == 1) || (m.a == 1 && m.b == 0)));
    CHECK_FALSE(m.expected_adjacent); // the claim says non-adjacent...
    CHECK(m.got.points == 0);         // ...but the curves are disjoint
}

TEST_CASE("certificate checking flags a corrupted curve") {
    Certificate cert = realize_fine_torus(parse_graph6("Bw"));
    // Replace curve 0's vertical with a horizontal circle: it now crosses
    // both other curves once, so neither pair matches the claimed triangle.
    cert.system.curves[0] = horizontal_curve(cert.system.surface, 0, rq(1, 2));
    CheckReport rep = check_certificate(cert);
    CHECK_FALSE(rep.ok);
    CHECK(rep.mismatches.size() == 2);

    // Duplicating another curve's image is a structural error instead.
    Certificate dup = realize_fine_torus(parse_graph6("Bw"));
    Curve moved = dup.system.curve_by_label(1);
    moved.label = 0;
    dup.system.curves[0] = moved;
    CHECK_THROWS_AS((void)check_certificate(dup), DuplicateCurve);
}

TEST_CASE("a single innermost bigon is found with its arcs") {
    CurveSystem sys = single_bigon_system();
    PatternResult pat = induced_pattern(sys, parse_semantics("k=2"));
    CHECK(pat.pair(0, 1).points == 2);
    CHECK(pat.pair(0, 1).all_crossing);

    auto bigons = find_bigons(sys, 0, 1);
    REQUIRE(bigons.size() == 1);
    const Bigon& bg = bigons[0];
    CHECK(bg.innermost);
    auto ys = corner_ys(sys, bg);
    CHECK(ys.first == rq(3, 10));
    CHECK(ys.second == rq(7, 10));
    REQUIRE_FALSE(bg.arc_a.empty());
    REQUIRE_FALSE(bg.arc_b.empty());
    // The two arcs share endpoints: a_from..a_to and back.
    const Curve& a = sys.curve_by_label(0);
    CHECK(bg.arc_a.front().pts.front() == passage_point(a, bg.a_from));
    CHECK(bg.arc_a.back().pts.back() == passage_point(a, bg.a_to));
    CHECK(bg.arc_b.front().pts.front() == passage_point(a, bg.a_to));
    CHECK(bg.arc_b.back().pts.back() == passage_point(a, bg.a_from));
}

TEST_CASE("nested bigons: only the middle pair is innermost") {
    CurveSystem sys = double_bigon_system();
    PatternResult pat = induced_pattern(sys, parse_semantics("k=4"));
    REQUIRE(pat.pair(0, 1).points == 4);
    CHECK(pat.pair(0, 1).all_crossing);

    auto bigons = find_bigons(sys, 0, 1);
    REQUIRE(bigons.size() == 2);
    int inner = -1, outer = -1;
    for (int i = 0; i < 2; ++i) {
        auto ys = corner_ys(sys, bigons[static_cast<std::size_t>(i)]);
        if (ys == std::pair<Rat, Rat>(rq(9, 20), rq(11, 20))) inner = i;
        if (ys == std::pair<Rat, Rat>(rq(3, 10), rq(7, 10))) outer = i;
    }
    REQUIRE(inner >= 0);
    REQUIRE(outer >= 0);
    CHECK(bigons[static_cast<std::size_t>(inner)].innermost);
    CHECK_FALSE(bigons[static_cast<std::size_t>(outer)].innermost);
}

TEST_CASE("pairs in minimal position have no bigons") {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(vertical_curve(sys.surface, 0, rq(1, 2)));
    sys.curves.push_back(horizontal_curve(sys.surface, 1, rq(1, 2)));
    CHECK(find_bigons(sys, 0, 1).empty());

    CurveSystem sys2;
    sys2.surface = build_surface(SurfaceKind::Torus);
    sys2.curves.push_back(horizontal_curve(sys2.surface, 0, rq(1, 7)));
    sys2.curves.push_back(line_curve(sys2.surface, 1, rq(1, 11), rq(0), 1, 3));
    CHECK(find_bigons(sys2, 0, 1).empty());
}

TEST_CASE("bigon search preconditions") {
    // Touching pair: not all crossings.
    CurveSystem sys = touching_system();
    CHECK_THROWS_AS((void)find_bigons(sys, 0, 1), NotSupported);

    // Infinite overlap.
    CurveSystem sys2 = overlap_system();
    CHECK_THROWS_AS((void)find_bigons(sys2, 0, 1), NotSupported);
}

TEST_CASE("two-curve unions: at most one crossing leaves no extra cycles") {
    CurveSystem sys = two_verticals_one_horizontal();
    CHECK(curves_in_union(sys, 0, 1).empty()); // disjoint
    CHECK(curves_in_union(sys, 0, 2).empty()); // one crossing
}

TEST_CASE("two-curve unions: a double crossing yields an essential curve") {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(horizontal_curve(sys.surface, 0, rq(1, 7)));
    sys.curves.push_back(line_curve(sys.surface, 1, rq(1, 11), rq(0), 1, 2));
    auto cycles = curves_in_union(sys, 0, 1);
    REQUIRE_FALSE(cycles.empty());
    bool essential = false;
    for (const UnionCycle& uc : cycles) {
        CHECK(is_embedded(sys.surface, uc.curve));
        CHECK(is_contained_in_union(sys.surface, uc.curve,
                                    {sys.curves[0], sys.curves[1]}));
        if (uc.essential) essential = true;
    }
    CHECK(essential);

    // The bigon fixture also crosses twice; its union holds an essential
    // cycle as well as the contractible bigon boundary.
    CurveSystem big = single_bigon_system();
    auto cycles2 = curves_in_union(big, 0, 1);
    REQUIRE_FALSE(cycles2.empty());
    bool essential2 = false, contractible2 = false;
    for (const UnionCycle& uc : cycles2) {
        (uc.essential ? essential2 : contractible2) = true;
    }
    CHECK(essential2);
    CHECK(contractible2);
}

TEST_CASE("leg chains lift to connected polylines") {
    Surface s = build_surface(SurfaceKind::Torus);
    Curve c = line_curve(s, 0, rq(1, 3), rq(0), 1, 2);
    REQUIRE(c.legs.size() >= 2);
    auto lifted = lift_leg_chain(s, c.legs);
    REQUIRE(lifted.size() >= 3);
    CHECK(lifted.front() == c.legs.front().pts.front());
    // The lift is strictly a polyline: consecutive points differ.
    for (std::size_t i = 1; i < lifted.size(); ++i) CHECK(lifted[i] != lifted[i - 1]);
}
