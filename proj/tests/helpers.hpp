#pragma once

// shared test construction helpers; oracles live in the test files that use them

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "aec/fragment.hpp"
#include "aec/lang.hpp"
#include "aec/structure.hpp"
#include "aec/util.hpp"

namespace th {

inline std::shared_ptr<const aec::Language> make_lang(
    std::map<std::string, int> rels = {}, std::map<std::string, int> funs = {},
    std::set<std::string> cons = {}) {
    aec::Language l;
    l.relations = std::move(rels);
    l.functions = std::move(funs);
    l.constants = std::move(cons);
    l.check();
    return std::make_shared<aec::Language>(std::move(l));
}

inline aec::FinStructure make_struct(
    std::shared_ptr<const aec::Language> lang, int size,
    std::map<std::string, std::set<std::vector<int>>> rels = {},
    std::map<std::string, std::vector<int>> funcs = {},
    std::map<std::string, int> consts = {}) {
    aec::FinStructure s;
    s.lang = std::move(lang);
    s.size = size;
    s.rels = std::move(rels);
    for (const auto& [name, ar] : s.lang->relations)
        if (!s.rels.count(name)) s.rels[name] = {};
    s.funcs = std::move(funcs);
    s.consts = std::move(consts);
    s.check();
    return s;
}

// bare set over the empty language
inline aec::FinStructure bare(int size) {
    static auto empty = make_lang();
    return make_struct(empty, size);
}

// random structure over lang with universe size, used by oracle comparisons
inline aec::FinStructure random_struct(aec::Rng& rng, std::shared_ptr<const aec::Language> lang,
                                       int size) {
    aec::FinStructure s;
    s.lang = std::move(lang);
    s.size = size;
    for (const auto& [sym, arity] : s.lang->relations) {
        auto& tuples = s.rels[sym];
        int total = aec::table_size(arity, size);
        for (int idx = 0; idx < total; ++idx) {
            if (!rng.chance(1, 3)) continue;
            std::vector<int> t(arity);
            int v = idx;
            for (int p = arity - 1; p >= 0; --p) { t[p] = v % size; v /= size; }
            tuples.insert(std::move(t));
        }
    }
    for (const auto& [sym, arity] : s.lang->functions) {
        std::vector<int> table(aec::table_size(arity, size));
        for (auto& v : table) v = rng.below(size);
        s.funcs[sym] = std::move(table);
    }
    for (const auto& sym : s.lang->constants) s.consts[sym] = rng.below(size);
    s.check();
    return s;
}

}  // namespace th
