#include "aec/theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aec/util.hpp"

namespace aec {

TheoryPartition connection_partition(FragmentCache& cache) {
    const auto& f = cache.fragment();
    int n = f.count();
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (uf.find(a) == uf.find(b)) continue;
            if (has_cat_arrow(cache, a, b) || has_cat_arrow(cache, b, a)) uf.unite(a, b);
        }
    TheoryPartition p;
    p.component_of.resize(n);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        int id = uf.find(i);
        p.component_of[i] = id;
        groups[id].push_back(i);
    }
    for (auto& [id, members] : groups) p.components.push_back(std::move(members));
    return p;
}

TheoryPartition connection_partition(const AecFragment& f) {
    FragmentCache cache(f);
    return connection_partition(cache);
}

std::vector<ClosedTheory> max_theories(const TheoryPartition& p) {
    std::vector<ClosedTheory> out;
    out.reserve(p.components.size());
    for (const auto& members : p.components) {
        ClosedTheory t;
        t.component_ids = {members.front()};
        t.structures.insert(members.begin(), members.end());
        out.push_back(std::move(t));
    }
    return out;
}

bool is_closed_theory(const TheoryPartition& p, const std::set<int>& structure_subset) {
    for (int i : structure_subset)
        if (i < 0 || i >= static_cast<int>(p.component_of.size()))
            throw error("is_closed_theory: index out of range");
    for (const auto& members : p.components) {
        bool any = false, all = true;
        for (int i : members) {
            if (structure_subset.count(i)) any = true;
            else all = false;
        }
        if (any && !all) return false;
    }
    return true;
}

MorphismCheck check_morphism(const LanguageMorphism& alpha, const AecFragment& source,
                             const AecFragment& target) {
    alpha.check();
    if (!(*source.lang == alpha.target)) throw error("check_morphism: source fragment not over alpha's target language");
    if (!(*target.lang == alpha.source)) throw error("check_morphism: target fragment not over alpha's source language");
    MorphismCheck result;
    FragmentCache cache(target);
    std::vector<FinStructure> reducts;
    reducts.reserve(source.structures.size());
    for (const auto& s : source.structures) reducts.push_back(reduct(s, alpha));
    for (int i = 0; i < source.count(); ++i) {
        if (!cache.member(reducts[i])) {
            result.failure = MorphismFailure{"member", i, -1};
            return result;
        }
    }
    for (const auto& [i, j] : source.strong_pairs) {
        std::vector<int> prefix(source.structures[i].size);
        std::iota(prefix.begin(), prefix.end(), 0);
        if (!cache.closed_below(reducts[j], prefix)) {
            result.failure = MorphismFailure{"pair", i, j};
            return result;
        }
    }
    result.morphism = AecMorphism{alpha, &source, &target};
    return result;
}

ClosedTheory induced_theory(const AecMorphism& m, const ClosedTheory& t_source) {
    FragmentCache cache(*m.target);
    auto partition = connection_partition(cache);
    ClosedTheory out;
    for (int i : t_source.structures) {
        auto hit = cache.member(reduct(m.source->structures[i], m.alpha));
        if (!hit) throw error("induced_theory: reduct not listed in target (morphism invalid)");
        out.component_ids.insert(partition.component_of[hit->index]);
    }
    for (int id : out.component_ids) {
        auto it = std::find_if(partition.components.begin(), partition.components.end(),
                               [&](const auto& c) { return c.front() == id; });
        out.structures.insert(it->begin(), it->end());
    }
    return out;
}

ReductEquivalenceReport check_reduct_equivalence(const AecMorphism& m) {
    return check_reduct_equivalence(m, connection_partition(*m.source));
}

ReductEquivalenceReport check_reduct_equivalence(const AecMorphism& m,
                                                 const TheoryPartition& source_partition) {
    FragmentCache cache(*m.target);
    auto target_partition = connection_partition(cache);
    std::vector<int> image(m.source->count());
    for (int i = 0; i < m.source->count(); ++i) {
        auto hit = cache.member(reduct(m.source->structures[i], m.alpha));
        if (!hit) throw error("check_reduct_equivalence: reduct not listed in target (morphism invalid)");
        image[i] = hit->index;
    }
    ReductEquivalenceReport rep;
    for (int i = 0; i < m.source->count() && rep.holds; ++i)
        for (int j = i + 1; j < m.source->count(); ++j) {
            if (source_partition.component_of[i] != source_partition.component_of[j]) continue;
            if (target_partition.component_of[image[i]] != target_partition.component_of[image[j]]) {
                rep.holds = false;
                rep.counterexample = {i, j};
                break;
            }
        }
    return rep;
}

}  // namespace aec
