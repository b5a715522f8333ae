#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "aec/axioms.hpp"
#include "aec/construct.hpp"
#include "aec/types.hpp"
#include "helpers.hpp"

using namespace aec;

namespace {

AecMorphism identity_morphism(const AecFragment& f) {
    return AecMorphism{LanguageMorphism::identity(*f.lang), &f, &f};
}

// two bare sets related only to themselves; the singleton inside the pair
// is not strong, which forces overhead on every closure
AecFragment reflexive_only() {
    AecFragment f;
    f.lang = th::bare(1).lang;
    f.structures = {th::bare(1), th::bare(2)};
    f.strong_pairs = {{0, 0}, {1, 1}};
    f.check();
    return f;
}

// every open stays open under pairwise union and intersection
void require_topology_laws(const TypeSpace& sp) {
    std::set<int> full;
    for (size_t i = 0; i < sp.analysis.types.size(); ++i) full.insert(static_cast<int>(i));
    REQUIRE(sp.opens.count({}));
    REQUIRE(sp.opens.count(full));
    for (const auto& a : sp.opens)
        for (const auto& b : sp.opens) {
            std::set<int> u = a;
            u.insert(b.begin(), b.end());
            std::set<int> cut;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(cut, cut.begin()));
            REQUIRE(sp.opens.count(u));
            REQUIRE(sp.opens.count(cut));
        }
    for (const auto& open : sp.basis) REQUIRE(sp.opens.count(open.points));
}

// when the class amalgamates, connectedness collapses to one shared cocone
// step; this re-derives the partition without touching zigzags
void require_one_step_collapse(const TypeAnalysis& ta) {
    FragmentCache cache(ta.pc.fragment);
    int n = ta.pc.fragment.count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool one_step = false;
            for (int c = 0; c < n && !one_step; ++c)
                one_step = has_cat_arrow(cache, a, c) && has_cat_arrow(cache, b, c);
            bool same = ta.partition.component_of[a] == ta.partition.component_of[b];
            REQUIRE(same == one_step);
        }
}

}  // namespace

TEST_CASE("types over a bare point with no names form a single class") {
    auto k = terminal_fragment(2);
    auto ta = g_types(k, th::bare(1), {});
    REQUIRE(ta.pc.triples.size() == 3);
    REQUIRE(ta.types.size() == 1);
    REQUIRE(ta.types[0].component == 0);
    REQUIRE(ta.types[0].rep == ta.pc.triples[0]);
    REQUIRE(ta.type_position(0) == 0);
    REQUIRE_THROWS_AS(ta.type_position(1), error);

    auto by_index = g_types(k, 0, {});
    REQUIRE(by_index.types.size() == 1);
    REQUIRE(by_index.partition.component_of == ta.partition.component_of);
}

TEST_CASE("one name over a bare point splits into equal and distinct") {
    auto k = terminal_fragment(2);
    auto ta = g_types(k, th::bare(1), {"i"});
    // triples: (0,{0},{0}) (1,{0},{0}) (1,{0},{1}) (1,{1},{0}) (1,{1},{1})
    REQUIRE(ta.pc.triples.size() == 5);
    REQUIRE(ta.partition.component_of == std::vector<int>{0, 0, 2, 2, 0});
    REQUIRE(ta.types.size() == 2);
    REQUIRE(ta.types[0].component == 0);
    REQUIRE(ta.types[0].rep == Triple{0, {0}, {0}});
    REQUIRE(ta.types[1].component == 2);
    REQUIRE(ta.types[1].rep == Triple{1, {0}, {1}});
    REQUIRE(ta.type_position(2) == 1);
}

TEST_CASE("one name over a bare pair tracks which element it denotes") {
    auto k = terminal_fragment(2);
    auto ta = g_types(k, th::bare(2), {"i"});
    // triples: (1,{0,1},{0}) (1,{0,1},{1}) (1,{1,0},{0}) (1,{1,0},{1})
    REQUIRE(ta.pc.triples.size() == 4);
    REQUIRE(ta.partition.component_of == std::vector<int>{0, 1, 1, 0});
    REQUIRE(ta.types.size() == 2);
}

TEST_CASE("amalgamating classes satisfy the one-step collapse") {
    require_one_step_collapse(g_types(terminal_fragment(2), th::bare(1), {"i"}));
    require_one_step_collapse(g_types(terminal_fragment(3), th::bare(2), {"i"}));
    require_one_step_collapse(g_types(terminal_fragment(3), th::bare(1), {}));
}

TEST_CASE("restriction along the full subset is the identity") {
    auto k = terminal_fragment(3);
    auto from = g_types(k, th::bare(2), {"i"});
    auto to = g_types(k, th::bare(2), {"i"});
    for (const auto& q : from.types) {
        auto r = restrict_type(from, q, {0, 1}, to);
        REQUIRE(r == q);
    }
}

TEST_CASE("restriction is independent of the chosen class member") {
    auto k = terminal_fragment(3);
    auto from = g_types(k, th::bare(2), {"i"});
    auto to = g_types(k, th::bare(1), {"i"});
    std::vector<int> subset = {1};
    for (size_t i = 0; i < from.pc.triples.size(); ++i) {
        const Triple& t = from.pc.triples[i];
        Triple restricted{t.n_index, {t.f[subset[0]]}, t.abar};
        int found = -1;
        for (size_t j = 0; j < to.pc.triples.size(); ++j)
            if (to.pc.triples[j] == restricted) found = static_cast<int>(j);
        REQUIRE(found >= 0);
        const GType& q = from.types[from.type_position(from.partition.component_of[i])];
        auto r = restrict_type(from, q, subset, to);
        REQUIRE(to.partition.component_of[found] == r.component);
    }
}

TEST_CASE("restriction composes along nested subsets") {
    auto k = terminal_fragment(3);
    auto over3 = g_types(k, th::bare(3), {"i"});
    auto over2 = g_types(k, th::bare(2), {"i"});
    auto over1 = g_types(k, th::bare(1), {"i"});
    for (const auto& q : over3.types) {
        auto mid = restrict_type(over3, q, {0, 1}, over2);
        auto twice = restrict_type(over2, mid, {1}, over1);
        auto once = restrict_type(over3, q, {1}, over1);
        REQUIRE(twice == once);
    }
}

TEST_CASE("restriction rejects non-strong and malformed subsets") {
    auto sparse = reflexive_only();
    auto from = g_types(sparse, th::bare(2), {});
    REQUIRE(from.types.size() == 1);

    auto k = terminal_fragment(2);
    auto to_other = g_types(k, th::bare(1), {});
    REQUIRE_THROWS_AS(restrict_type(from, from.types[0], {0}, to_other), error);

    auto pieces = restrict_to(sparse, {0});
    auto to_sparse1 = g_types(pieces.fragment, th::bare(1), {});
    REQUIRE_THROWS_AS(restrict_type(from, from.types[0], {0}, to_sparse1), error);

    auto full3 = g_types(k, th::bare(2), {});
    auto to1 = g_types(k, th::bare(1), {});
    REQUIRE_THROWS_AS(restrict_type(full3, full3.types[0], {1, 0}, to1), error);
    REQUIRE_THROWS_AS(restrict_type(full3, full3.types[0], {0, 5}, to1), error);
    REQUIRE_THROWS_AS(restrict_type(full3, GType{7, Triple{0, {0}, {}}}, {0}, to1), error);
}

TEST_CASE("non-strong singleton inside the reflexive-only pair throws") {
    auto sparse = reflexive_only();
    auto from = g_types(sparse, th::bare(2), {});
    auto to = g_types(sparse, th::bare(1), {});
    REQUIRE_THROWS_AS(restrict_type(from, from.types[0], {0}, to), NotStrongSubstructure);
}

TEST_CASE("zero bound yields the indiscrete space") {
    auto sp = type_space(terminal_fragment(2), th::bare(2), {"i"}, 0);
    REQUIRE(sp.small_sets.empty());
    REQUIRE(sp.basis.empty());
    REQUIRE(sp.opens == std::set<std::set<int>>{{}, {0, 1}});
    REQUIRE(!sp.discrete());
    require_topology_laws(sp);
}

TEST_CASE("bound one already separates the two named-pair types") {
    auto sp = type_space(terminal_fragment(2), th::bare(2), {"i"}, 1);
    REQUIRE(sp.small_sets == std::vector<std::vector<int>>{{0}, {1}});
    REQUIRE(sp.restriction == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    REQUIRE(sp.basis.size() == 4);
    REQUIRE(sp.opens == std::set<std::set<int>>{{}, {0}, {1}, {0, 1}});
    REQUIRE(sp.discrete());
    require_topology_laws(sp);
}

TEST_CASE("bound at the point size is discrete") {
    auto sp = type_space(terminal_fragment(3), th::bare(2), {"i"}, 2);
    REQUIRE(sp.small_sets == std::vector<std::vector<int>>{{0}, {1}, {0, 1}});
    REQUIRE(sp.discrete());
    require_topology_laws(sp);
}

TEST_CASE("raising the bound refines the topology") {
    auto k = terminal_fragment(3);
    auto sp0 = type_space(k, th::bare(3), {"i"}, 0);
    auto sp1 = type_space(k, th::bare(3), {"i"}, 1);
    auto sp3 = type_space(k, th::bare(3), {"i"}, 3);
    REQUIRE(sp1.analysis.types.size() == 3);
    for (const auto& o : sp0.opens) REQUIRE(sp1.opens.count(o));
    for (const auto& o : sp1.opens) REQUIRE(sp3.opens.count(o));
    REQUIRE(sp3.discrete());
    require_topology_laws(sp0);
    require_topology_laws(sp1);
    require_topology_laws(sp3);
}

TEST_CASE("canonical map at bound zero collapses to a single limit point") {
    auto rep = canonical_map(terminal_fragment(2), th::bare(2), {"i"}, 0);
    REQUIRE(rep.limit_points == std::vector<std::vector<int>>{{}});
    REQUIRE(rep.image == std::vector<int>{0, 0});
    REQUIRE(!rep.injective);
    REQUIRE(rep.fiber_witness == std::pair<int, int>{0, 1});
    REQUIRE(rep.surjective);
    REQUIRE(rep.continuous);
    REQUIRE(rep.initial_topology);
}

TEST_CASE("canonical map at bound one is injective but misses a family") {
    auto rep = canonical_map(terminal_fragment(2), th::bare(2), {"i"}, 1);
    // independent coordinates over {0} and {1}: four families, two hit
    REQUIRE(rep.limit_points ==
            std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    REQUIRE(rep.image == std::vector<int>{1, 2});
    REQUIRE(rep.injective);
    REQUIRE(!rep.surjective);
    REQUIRE(rep.miss_witness == 0);
    REQUIRE(rep.continuous);
    REQUIRE(rep.initial_topology);
}

TEST_CASE("including the whole point makes the canonical map bijective") {
    auto rep = canonical_map(terminal_fragment(2), th::bare(2), {"i"}, 2);
    REQUIRE(rep.limit_points.size() == 2);
    REQUIRE(rep.injective);
    REQUIRE(rep.surjective);
    REQUIRE(!rep.fiber_witness);
    REQUIRE(!rep.miss_witness);
    REQUIRE(rep.continuous);
    REQUIRE(rep.initial_topology);
}

TEST_CASE("three singleton coordinates leave five unreachable families") {
    auto rep = canonical_map(terminal_fragment(3), th::bare(3), {"i"}, 1);
    REQUIRE(rep.limit_points.size() == 8);
    REQUIRE(rep.image == std::vector<int>{3, 5, 6});
    REQUIRE(rep.injective);
    REQUIRE(!rep.surjective);
    REQUIRE(rep.miss_witness == 0);
    REQUIRE(rep.continuous);
    REQUIRE(rep.initial_topology);
}

TEST_CASE("identity functor and identity arrow induce identity maps") {
    auto k = terminal_fragment(2);
    auto mor = identity_morphism(k);
    KEmbedding h{1, 1, {0, 1}};
    auto rep = induced_type_maps(mor, h, {"i"}, 1);
    REQUIRE(rep.k_m1.types.size() == 2);
    REQUIRE(rep.top == std::vector<int>{0, 1});
    REQUIRE(rep.bottom == std::vector<int>{0, 1});
    REQUIRE(rep.left == std::vector<int>{0, 1});
    REQUIRE(rep.right == std::vector<int>{0, 1});
    REQUIRE(rep.commutes);
    REQUIRE(rep.maps_continuous);
    REQUIRE(rep.top_surjective == true);
    REQUIRE(rep.bottom_surjective == true);
}

TEST_CASE("an inclusion arrow induces the restriction map on types") {
    auto k = terminal_fragment(2);
    auto mor = identity_morphism(k);
    KEmbedding h{0, 1, {0}};
    auto rep = induced_type_maps(mor, h, {"i"}, 1);
    REQUIRE(rep.k_m0.types.size() == 2);
    REQUIRE(rep.k_m1.types.size() == 2);
    REQUIRE(rep.top == rep.bottom);
    REQUIRE(rep.left == std::vector<int>{0, 1});
    REQUIRE(rep.right == std::vector<int>{0, 1});
    auto from = rep.k_m1;
    auto to = rep.k_m0;
    for (size_t p = 0; p < from.types.size(); ++p) {
        auto r = restrict_type(from, from.types[p], {0}, to);
        REQUIRE(rep.top[p] == to.type_position(r.component));
    }
    REQUIRE(rep.commutes);
    REQUIRE(rep.maps_continuous);
    REQUIRE(rep.top_surjective == true);
}

TEST_CASE("a unary-relation expansion over bare sets gives a commuting square") {
    auto k = terminal_fragment(2);
    auto lr = th::make_lang({{"R", 1}});
    auto kp = full_structure_fragment(lr, 2, 1000);
    LanguageMorphism alpha;
    alpha.target = *lr;
    AecMorphism mor{alpha, &kp, &k};
    REQUIRE(check_morphism(alpha, kp, k).ok());

    // arrow from the R-empty singleton into the structure with R = {1}
    int src = -1, dst = -1;
    for (int i = 0; i < kp.count(); ++i) {
        const auto& s = kp.structures[i];
        if (s.size == 1 && s.rels.at("R").empty()) src = i;
        if (s.size == 2 && s.rels.at("R") == std::set<std::vector<int>>{{1}}) dst = i;
    }
    REQUIRE(src >= 0);
    REQUIRE(dst >= 0);
    KEmbedding h{src, dst, {0}};
    auto rep = induced_type_maps(mor, h, {"i"}, 1);
    REQUIRE(rep.commutes);
    REQUIRE(rep.maps_continuous);
    REQUIRE(rep.top_surjective.has_value());  // bare sets amalgamate
    REQUIRE(rep.top_surjective == true);
    REQUIRE(!rep.bottom_surjective.has_value());  // the expansion does not
    REQUIRE(check_ap(kp).holds == false);
}

TEST_CASE("induced square rejects data that is not an arrow") {
    auto k = terminal_fragment(2);
    auto mor = identity_morphism(k);
    REQUIRE_THROWS_AS(induced_type_maps(mor, KEmbedding{0, 1, {5}}, {}, 1), error);
    REQUIRE_THROWS_AS(induced_type_maps(mor, KEmbedding{0, 9, {0}}, {}, 1), error);
    auto sparse = reflexive_only();
    auto sparse_mor = identity_morphism(sparse);
    // {0} is an embedding image but not strong inside the reflexive-only pair
    REQUIRE_THROWS_AS(induced_type_maps(sparse_mor, KEmbedding{0, 1, {0}}, {}, 1), error);
}
