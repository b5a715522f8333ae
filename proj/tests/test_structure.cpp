#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "aec/structure.hpp"
#include "aec/util.hpp"
#include "helpers.hpp"

using namespace aec;

namespace {

// oracle: filter all injective maps by the definition, no search pruning
std::vector<Map> brute_embeddings(const FinStructure& a, const FinStructure& b) {
    std::vector<Map> out;
    if (a.size > b.size) return out;
    std::vector<int> pool(b.size);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> pick(a.size);
    std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t used) {
        if (i == a.size) {
            if (is_embedding_map(a, b, pick)) out.push_back(pick);
            return;
        }
        for (int y = 0; y < b.size; ++y) {
            if (used & (1ULL << y)) continue;
            pick[i] = y;
            rec(i + 1, used | (1ULL << y));
        }
    };
    rec(0, 0);
    return out;
}

FinStructure cyclic_successor(int n) {
    auto lang = th::make_lang({}, {{"s", 1}});
    std::vector<int> table(n);
    for (int i = 0; i < n; ++i) table[i] = (i + 1) % n;
    return th::make_struct(lang, n, {}, {{"s", table}});
}

}  // namespace

TEST_CASE("structure well-formedness") {
    auto lang = th::make_lang({{"R", 2}}, {{"f", 1}}, {"c"});
    auto m = th::make_struct(lang, 2, {{"R", {{0, 1}}}}, {{"f", {1, 0}}}, {{"c", 0}});
    CHECK_NOTHROW(m.check());

    auto bad = m;
    bad.consts["c"] = 5;
    CHECK_THROWS_AS(bad.check(), error);
    auto bad2 = m;
    bad2.rels["R"].insert({0, 2});
    CHECK_THROWS_AS(bad2.check(), error);
    auto bad3 = m;
    bad3.funcs["f"] = {0};
    CHECK_THROWS_AS(bad3.check(), error);
    auto bad4 = m;
    bad4.size = 0;
    CHECK_THROWS_AS(bad4.check(), error);
}

TEST_CASE("reduct drops and renames symbols, keeps the universe") {
    auto big = th::make_lang({{"R", 1}, {"S", 1}}, {{"f", 1}}, {"c"});
    auto m = th::make_struct(big, 3, {{"R", {{0}}}, {"S", {{1}, {2}}}}, {{"f", {1, 2, 0}}},
                             {{"c", 2}});

    auto small = *th::make_lang({{"P", 1}}, {{"g", 1}});
    LanguageMorphism alpha;
    alpha.source = small;
    alpha.target = *big;
    alpha.rel_map["P"] = "S";
    alpha.fun_map["g"] = "f";
    alpha.check();

    auto r = reduct(m, alpha);
    CHECK(r.size == 3);
    CHECK(r.rels.at("P") == std::set<std::vector<int>>{{1}, {2}});
    CHECK(r.funcs.at("g") == std::vector<int>{1, 2, 0});
    CHECK(r.consts.empty());
    r.check();

    // reduct along the identity is the structure itself
    auto id = LanguageMorphism::identity(*big);
    CHECK(reduct(m, id).same_content(m));

    // reduct to the empty language is the bare universe
    LanguageMorphism to_empty;
    to_empty.target = *big;
    auto b = reduct(m, to_empty);
    CHECK(b.size == 3);
    CHECK(b.rels.empty());

    LanguageMorphism wrong = alpha;
    wrong.target = small;
    CHECK_THROWS_AS(reduct(m, wrong), error);
}

TEST_CASE("induced substructure: closure and reindexing") {
    auto z4 = cyclic_successor(4);

    auto full = induced_substructure(z4, {0, 1, 2, 3});
    REQUIRE(std::holds_alternative<Induced>(full));
    CHECK(std::get<Induced>(full).structure.same_content(z4));

    auto bad = induced_substructure(z4, {0, 2});
    REQUIRE(std::holds_alternative<NotClosed>(bad));
    auto nc = std::get<NotClosed>(bad);
    CHECK(nc.symbol == "s");
    CHECK(nc.args == std::vector<int>{0});
    CHECK(nc.value == 1);

    // relational structures: every nonempty subset is closed
    auto lang = th::make_lang({{"E", 2}});
    auto g = th::make_struct(lang, 3, {{"E", {{0, 1}, {1, 2}}}});
    auto sub = induced_substructure(g, {1, 2});
    REQUIRE(std::holds_alternative<Induced>(sub));
    const auto& ind = std::get<Induced>(sub);
    CHECK(ind.universe == std::vector<int>{1, 2});
    CHECK(ind.structure.size == 2);
    CHECK(ind.structure.rels.at("E") == std::set<std::vector<int>>{{0, 1}});

    // constants must fall inside the subset
    auto cl = th::make_lang({}, {}, {"c"});
    auto cm = th::make_struct(cl, 2, {}, {}, {{"c", 1}});
    auto miss = induced_substructure(cm, {0});
    REQUIRE(std::holds_alternative<NotClosed>(miss));
    CHECK(std::get<NotClosed>(miss).symbol == "c");

    CHECK_THROWS_AS(induced_substructure(g, {}), error);
    CHECK_THROWS_AS(induced_substructure(g, {2, 1}), error);
    CHECK_THROWS_AS(induced_substructure(g, {0, 7}), error);
}

TEST_CASE("embedding counts on pinned instances") {
    // identity on a single point
    auto p1 = th::bare(1);
    CHECK(find_embeddings(p1, p1).size() == 1);

    // bare sets: all injections
    CHECK(find_embeddings(th::bare(2), th::bare(3)).size() == 6);

    auto lang = th::make_lang({{"E", 2}});
    auto edge = th::make_struct(lang, 2, {{"E", {{0, 1}}}});
    auto two_cycle = th::make_struct(lang, 2, {{"E", {{0, 1}, {1, 0}}}});
    auto path3 = th::make_struct(lang, 3, {{"E", {{0, 1}, {1, 2}}}});

    // strongness is biconditional: the 2-cycle's extra edge rules out both maps
    CHECK(find_embeddings(edge, two_cycle).empty());
    // the path admits exactly the two edge-onto-edge maps
    auto maps = find_embeddings(edge, path3);
    REQUIRE(maps.size() == 2);
    CHECK(maps[0] == Map{0, 1});
    CHECK(maps[1] == Map{1, 2});

    // 3-cycle onto itself: the three rotations (reflection reverses edges)
    auto c3 = th::make_struct(lang, 3, {{"E", {{0, 1}, {1, 2}, {2, 0}}}});
    CHECK(find_isomorphisms(c3, c3).size() == 3);

    // constants pin images
    auto cl = th::make_lang({}, {}, {"c"});
    auto a = th::make_struct(cl, 1, {}, {}, {{"c", 0}});
    auto b = th::make_struct(cl, 2, {}, {}, {{"c", 1}});
    auto cmaps = find_embeddings(a, b);
    REQUIRE(cmaps.size() == 1);
    CHECK(cmaps[0] == Map{1});
}

TEST_CASE("embedding enumeration agrees with the brute-force oracle") {
    Rng rng(20260825);
    auto lang1 = th::make_lang({{"E", 2}});
    auto lang2 = th::make_lang({{"R", 1}}, {{"f", 1}});
    auto lang3 = th::make_lang({{"R", 1}, {"S", 2}}, {}, {"c"});
    for (int round = 0; round < 60; ++round) {
        auto lang = round % 3 == 0 ? lang1 : round % 3 == 1 ? lang2 : lang3;
        int sa = rng.range(1, 4);
        int sb = rng.range(sa, 5);
        auto a = th::random_struct(rng, lang, sa);
        auto b = th::random_struct(rng, lang, sb);
        auto fast = find_embeddings(a, b);
        auto slow = brute_embeddings(a, b);
        REQUIRE(fast == slow);  // same maps, same lexicographic order
    }
}

TEST_CASE("embeddings come out in lexicographic order and respect limits") {
    auto maps = find_embeddings(th::bare(2), th::bare(3));
    REQUIRE(maps.size() == 6);
    CHECK(std::is_sorted(maps.begin(), maps.end()));
    CHECK(maps.front() == Map{0, 1});
    CHECK(maps.back() == Map{2, 1});
    CHECK(find_embeddings(th::bare(2), th::bare(3), 2).size() == 2);
}

TEST_CASE("isomorphism maps are embeddings with equal size") {
    auto lang = th::make_lang({{"E", 2}});
    auto c3 = th::make_struct(lang, 3, {{"E", {{0, 1}, {1, 2}, {2, 0}}}});
    auto p3 = th::make_struct(lang, 3, {{"E", {{0, 1}, {1, 2}}}});
    CHECK(find_isomorphisms(c3, p3).empty());
    CHECK(is_isomorphism_map(c3, c3, {1, 2, 0}));
    CHECK_FALSE(is_isomorphism_map(c3, c3, {1, 0, 2}));
    CHECK(find_isomorphisms(c3, th::make_struct(lang, 4, {{"E", {}}})).empty());
}

TEST_CASE("canonical encoding is relabeling-invariant and discriminating") {
    Rng rng(77);
    auto lang = th::make_lang({{"R", 1}}, {{"f", 1}}, {"c"});
    for (int round = 0; round < 40; ++round) {
        int n = rng.range(1, 4);
        auto m = th::random_struct(rng, lang, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        CHECK(canonical_encoding(m) == canonical_encoding(relabel(m, perm)));
    }
    auto a = th::make_struct(lang, 2, {{"R", {{0}}}}, {{"f", {0, 1}}}, {{"c", 0}});
    auto b = th::make_struct(lang, 2, {{"R", {{0}, {1}}}}, {{"f", {0, 1}}}, {{"c", 0}});
    CHECK(canonical_encoding(a) != canonical_encoding(b));
}

TEST_CASE("relabel round-trip") {
    auto lang = th::make_lang({{"E", 2}}, {{"f", 1}}, {"c"});
    auto m = th::make_struct(lang, 3, {{"E", {{0, 1}, {2, 2}}}}, {{"f", {2, 0, 1}}}, {{"c", 1}});
    std::vector<int> perm{2, 0, 1}, inv{1, 2, 0};
    CHECK(relabel(relabel(m, perm), inv).same_content(m));
}

TEST_CASE("subset enumeration helpers") {
    auto s = subsets_of_size(4, 2);
    CHECK(s.size() == 6);
    CHECK(s.front() == std::vector<int>{0, 1});
    CHECK(s.back() == std::vector<int>{2, 3});
    CHECK(all_subsets(3).size() == 8);
    CHECK(all_subsets(0).size() == 1);
}
