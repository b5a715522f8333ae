#pragma once

// Hand-built fragments shared between unit tests and the acceptance suite.

#include <string>
#include <vector>

#include "aec/fragment.hpp"
#include "helpers.hpp"

namespace th {

// fragment listing the given structures with every literal prefix pair
inline aec::AecFragment prefix_fragment(std::shared_ptr<const aec::Language> lang,
                                        std::vector<aec::FinStructure> structures) {
    aec::AecFragment f;
    f.lang = std::move(lang);
    f.structures = std::move(structures);
    for (int i = 0; i < f.count(); ++i) {
        for (int j = 0; j < f.count(); ++j) {
            const auto& a = f.structures[i];
            const auto& b = f.structures[j];
            if (a.size > b.size) continue;
            std::vector<int> prefix(a.size);
            std::iota(prefix.begin(), prefix.end(), 0);
            auto ind = aec::induced_substructure(b, prefix);
            if (std::holds_alternative<aec::NotClosed>(ind)) continue;
            if (std::get<aec::Induced>(ind).structure.same_content(a)) f.strong_pairs.insert({i, j});
        }
    }
    return f;
}

// bare sets of sizes 1..n with all inclusion pairs
inline aec::AecFragment bare_chain(int n) {
    std::vector<aec::FinStructure> ss;
    for (int k = 1; k <= n; ++k) ss.push_back(bare(k));
    return prefix_fragment(make_lang(), std::move(ss));
}

struct InvalidFragment {
    std::string name;
    std::string failing_axiom;  // "order" | "coherence"
    std::string witness_kind;   // OrderWitness.kind when axiom == order
    aec::AecFragment fragment;
};

// Each fails exactly the intended axiom. An ls-only failure cannot be built:
// reflexive pairs (demanded by order) always witness the full universe, so a
// missing small submodel is survivable and a missing top breaks order first.
inline std::vector<InvalidFragment> invalid_fragments() {
    std::vector<InvalidFragment> out;
    auto empty = make_lang();

    {
        // two interchangeable copies of the 2-set keep ls intact while the
        // second copy lacks its reflexive pair
        aec::AecFragment f;
        f.lang = empty;
        f.structures = {bare(1), bare(2), bare(2)};
        f.strong_pairs = {{0, 0}, {1, 1}, {0, 1}, {0, 2}};
        out.push_back({"missing-reflexive", "order", "missing-reflexive", f});
    }
    {
        aec::AecFragment f;
        f.lang = empty;
        f.structures = {bare(2), bare(2)};
        f.strong_pairs = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
        out.push_back({"not-antisymmetric", "order", "not-antisymmetric", f});
    }
    {
        aec::AecFragment f;
        f.lang = empty;
        f.structures = {bare(1), bare(2), bare(3)};
        f.strong_pairs = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}};
        out.push_back({"not-transitive", "order", "not-transitive", f});
    }
    {
        // listed pair whose prefix content disagrees with the declared sub
        auto lang = make_lang({{"R", 1}});
        aec::AecFragment f;
        f.lang = lang;
        f.structures = {make_struct(lang, 1, {{"R", {{0}}}}),
                        make_struct(lang, 2, {{"R", {{1}}}})};
        f.strong_pairs = {{0, 0}, {1, 1}, {0, 1}};
        out.push_back({"not-literal-substructure", "order", "not-literal-substructure", f});
    }
    {
        // three orderings of one four-point structure; the s-point and the
        // pair {r,s} are reachable as prefixes inside the big structure but
        // no listed copy of {r,s} puts s first, so coherence breaks
        auto lang = make_lang({{"R", 1}, {"S", 1}, {"T", 1}});
        auto pt = [&](char c) -> std::map<std::string, std::set<std::vector<int>>> {
            switch (c) {
                case 'r': return {{"R", {{0}}}};
                case 's': return {{"S", {{0}}}};
                case 't': return {{"T", {{0}}}};
                default: return {};
            }
        };
        auto word = [&](const std::string& w) {
            std::map<std::string, std::set<std::vector<int>>> rels;
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                switch (w[i]) {
                    case 'r': rels["R"].insert({i}); break;
                    case 's': rels["S"].insert({i}); break;
                    case 't': rels["T"].insert({i}); break;
                    default: break;
                }
            }
            return make_struct(lang, static_cast<int>(w.size()), rels);
        };
        (void)pt;
        std::vector<aec::FinStructure> ss;
        for (std::string root : {"brst", "rsbt", "sbrt"})
            for (size_t k = 1; k <= root.size(); ++k) ss.push_back(word(root.substr(0, k)));
        // dedup identical labeled structures
        std::vector<aec::FinStructure> uniq;
        for (auto& s : ss) {
            bool seen = false;
            for (const auto& u : uniq)
                if (u.same_content(s)) { seen = true; break; }
            if (!seen) uniq.push_back(std::move(s));
        }
        out.push_back({"coherence-gap", "coherence", "", prefix_fragment(lang, std::move(uniq))});
    }
    return out;
}

}  // namespace th
