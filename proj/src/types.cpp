#include "aec/types.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "aec/axioms.hpp"

namespace aec {

namespace {

// commuting triangle over the base point: h carries the arrow and the named
// tuple of a onto those of b and lands on a strong image
bool triangle_arrow(FragmentCache& base_cache, const PointedClass& pc, int a, int b) {
    const Triple& ta = pc.triples[a];
    const Triple& tb = pc.triples[b];
    const FinStructure& sa = base_cache.fragment().structures[ta.n_index];
    const FinStructure& sb = base_cache.fragment().structures[tb.n_index];
    if (sa.size > sb.size) return false;
    bool found = false;
    visit_embeddings(sa, sb, [&](const Map& h) {
        for (size_t x = 0; x < ta.f.size(); ++x)
            if (h[ta.f[x]] != tb.f[x]) return true;
        for (size_t x = 0; x < ta.abar.size(); ++x)
            if (h[ta.abar[x]] != tb.abar[x]) return true;
        std::vector<int> image(h.begin(), h.end());
        std::sort(image.begin(), image.end());
        if (!base_cache.closed_below_listed(tb.n_index, image)) return true;
        found = true;
        return false;
    });
    return found;
}

TypeAnalysis analyze(PointedClass pc) {
    TypeAnalysis out;
    out.pc = std::move(pc);
    out.partition = connection_partition(out.pc.fragment);

    // independent route: zigzags of commuting triangles between the triples
    int n = static_cast<int>(out.pc.triples.size());
    FragmentCache base_cache(*out.pc.base);
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || uf.find(a) == uf.find(b)) continue;
            if (triangle_arrow(base_cache, out.pc, a, b)) uf.unite(a, b);
        }
    for (int i = 0; i < n; ++i)
        if (uf.find(i) != out.partition.component_of[i])
            throw error("g_types: triangle zigzags disagree with the pointed category");

    out.types.reserve(out.partition.components.size());
    for (const auto& members : out.partition.components) {
        GType t;
        t.component = members.front();
        t.rep = out.pc.triples[t.component];
        out.types.push_back(std::move(t));
    }
    return out;
}

int locate_triple(const TypeAnalysis& ta, const Triple& t, const char* who) {
    for (size_t i = 0; i < ta.pc.triples.size(); ++i)
        if (ta.pc.triples[i] == t)
            return ta.type_position(ta.partition.component_of[i]);
    throw error(std::string(who) + ": transported triple is not listed");
}

std::set<std::set<int>> generate_topology(int npoints, const std::vector<std::set<int>>& subbasis) {
    std::set<int> full;
    for (int i = 0; i < npoints; ++i) full.insert(i);
    // one pass per generator reaches every finite intersection
    std::set<std::set<int>> inters{full};
    for (const auto& b : subbasis) {
        std::vector<std::set<int>> fresh;
        for (const auto& s : inters) {
            std::set<int> cut;
            std::set_intersection(s.begin(), s.end(), b.begin(), b.end(),
                                  std::inserter(cut, cut.begin()));
            fresh.push_back(std::move(cut));
        }
        inters.insert(fresh.begin(), fresh.end());
    }
    std::set<std::set<int>> opens = inters;
    opens.insert(std::set<int>{});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<int>> fresh;
        for (const auto& s1 : opens)
            for (const auto& s2 : opens) {
                std::set<int> u = s1;
                u.insert(s2.begin(), s2.end());
                if (!opens.count(u)) fresh.push_back(std::move(u));
            }
        for (auto& u : fresh)
            if (opens.insert(std::move(u)).second) grew = true;
    }
    return opens;
}

// preimage-of-open test for a point map between two finished spaces
bool continuous_map(const TypeSpace& from, const TypeSpace& to, const std::vector<int>& map) {
    for (const auto& open : to.opens) {
        std::set<int> pre;
        for (size_t ti = 0; ti < map.size(); ++ti)
            if (open.count(map[ti])) pre.insert(static_cast<int>(ti));
        if (!from.opens.count(pre)) return false;
    }
    return true;
}

bool covers(const std::vector<int>& map, int target_count) {
    std::vector<char> hit(target_count, 0);
    for (int v : map) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace

int TypeAnalysis::type_position(int component) const {
    for (size_t i = 0; i < types.size(); ++i)
        if (types[i].component == component) return static_cast<int>(i);
    throw error("type_position: unknown component id");
}

TypeAnalysis g_types(const AecFragment& f, const FinStructure& m,
                     const std::vector<std::string>& index_names) {
    return analyze(pointed_class(f, m, index_names));
}

TypeAnalysis g_types(const AecFragment& f, int m_index, const std::vector<std::string>& index_names) {
    return analyze(pointed_class(f, m_index, index_names));
}

GType restrict_type(const TypeAnalysis& from, const GType& q, const std::vector<int>& subset,
                    const TypeAnalysis& to) {
    int pos = from.type_position(q.component);
    if (!(from.types[pos] == q)) throw error("restrict_type: type does not belong to the analysis");
    if (from.pc.base != to.pc.base)
        throw error("restrict_type: analyses range over different fragments");
    if (from.pc.index_names != to.pc.index_names)
        throw error("restrict_type: analyses use different index names");

    const FinStructure& m = from.pc.base_point;
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= m.size)
            throw error("restrict_type: subset element out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw error("restrict_type: subset must be sorted and duplicate-free");
    }
    if (!closed_below(*from.pc.base, m, subset))
        throw NotStrongSubstructure("restrict_type: subset is not strong below the base point");
    auto ind = induced_substructure(m, subset);
    if (!std::holds_alternative<Induced>(ind))
        throw NotStrongSubstructure("restrict_type: subset is not closed under the signature");
    if (!std::get<Induced>(ind).structure.same_content(to.pc.base_point))
        throw error("restrict_type: target analysis points at a different substructure");

    Triple t;
    t.n_index = q.rep.n_index;
    t.f.resize(subset.size());
    for (size_t x = 0; x < subset.size(); ++x) t.f[x] = q.rep.f[subset[x]];
    t.abar = q.rep.abar;
    int tpos = locate_triple(to, t, "restrict_type");
    return to.types[tpos];
}

bool TypeSpace::discrete() const {
    for (size_t ti = 0; ti < analysis.types.size(); ++ti)
        if (!opens.count({static_cast<int>(ti)})) return false;
    return true;
}

TypeSpace type_space(TypeAnalysis analysis, int lambda) {
    if (lambda < 0) throw error("type_space: negative size bound");
    TypeSpace sp;
    sp.analysis = std::move(analysis);
    sp.lambda = lambda;

    const AecFragment& f = *sp.analysis.pc.base;
    const FinStructure& m = sp.analysis.pc.base_point;
    FragmentCache cache(f);
    int cap = std::min(lambda, m.size);
    for (int k = 1; k <= cap; ++k)
        for (auto& X : subsets_of_size(m.size, k))
            if (cache.closed_below(m, X)) sp.small_sets.push_back(X);

    sp.small.reserve(sp.small_sets.size());
    for (const auto& X : sp.small_sets) {
        auto ind = induced_substructure(m, X);
        sp.small.push_back(
            g_types(f, std::get<Induced>(ind).structure, sp.analysis.pc.index_names));
    }

    int tcount = static_cast<int>(sp.analysis.types.size());
    sp.restriction.resize(sp.small_sets.size());
    for (size_t k = 0; k < sp.small_sets.size(); ++k) {
        sp.restriction[k].resize(tcount);
        for (int ti = 0; ti < tcount; ++ti) {
            GType r = restrict_type(sp.analysis, sp.analysis.types[ti], sp.small_sets[k],
                                    sp.small[k]);
            sp.restriction[k][ti] = sp.small[k].type_position(r.component);
        }
    }

    std::vector<std::set<int>> subbasis;
    for (size_t k = 0; k < sp.small_sets.size(); ++k)
        for (size_t p = 0; p < sp.small[k].types.size(); ++p) {
            BasisOpen open;
            open.subset = sp.small_sets[k];
            open.p_position = static_cast<int>(p);
            for (int ti = 0; ti < tcount; ++ti)
                if (sp.restriction[k][ti] == static_cast<int>(p)) open.points.insert(ti);
            subbasis.push_back(open.points);
            sp.basis.push_back(std::move(open));
        }
    sp.opens = generate_topology(tcount, subbasis);
    return sp;
}

TypeSpace type_space(const AecFragment& f, const FinStructure& m,
                     const std::vector<std::string>& index_names, int lambda) {
    return type_space(g_types(f, m, index_names), lambda);
}

CanonicalMapReport canonical_map(const TypeSpace& sp) {
    CanonicalMapReport rep;
    int scount = static_cast<int>(sp.small_sets.size());
    int tcount = static_cast<int>(sp.analysis.types.size());

    // restriction maps between comparable small subsets; the larger side is
    // strong below the base point, so the smaller side is strong below it
    std::map<std::pair<int, int>, std::vector<int>> cross;  // (super, sub) -> point map
    for (int su = 0; su < scount; ++su)
        for (int sb = 0; sb < scount; ++sb) {
            if (su == sb) continue;
            if (!std::includes(sp.small_sets[su].begin(), sp.small_sets[su].end(),
                               sp.small_sets[sb].begin(), sp.small_sets[sb].end()))
                continue;
            std::vector<int> relative;
            relative.reserve(sp.small_sets[sb].size());
            for (int e : sp.small_sets[sb]) {
                auto it = std::find(sp.small_sets[su].begin(), sp.small_sets[su].end(), e);
                relative.push_back(static_cast<int>(it - sp.small_sets[su].begin()));
            }
            std::vector<int> pmap(sp.small[su].types.size());
            for (size_t p = 0; p < sp.small[su].types.size(); ++p) {
                GType r = restrict_type(sp.small[su], sp.small[su].types[p], relative,
                                        sp.small[sb]);
                pmap[p] = sp.small[sb].type_position(r.component);
            }
            cross.emplace(std::make_pair(su, sb), std::move(pmap));
        }

    // limit elements: compatible choice families in lexicographic order
    std::map<std::vector<int>, int> limit_index;
    std::vector<int> family(scount, 0);
    bool more = true;
    if (scount == 0) {
        limit_index.emplace(family, 0);
        rep.limit_points.push_back(family);
        more = false;
    }
    while (more) {
        bool ok = true;
        for (const auto& [edge, pmap] : cross) {
            if (pmap[family[edge.first]] != family[edge.second]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            limit_index.emplace(family, static_cast<int>(rep.limit_points.size()));
            rep.limit_points.push_back(family);
        }
        int slot = scount - 1;
        while (slot >= 0) {
            if (++family[slot] < static_cast<int>(sp.small[slot].types.size())) break;
            family[slot] = 0;
            --slot;
        }
        more = slot >= 0;
    }

    rep.image.resize(tcount);
    for (int ti = 0; ti < tcount; ++ti) {
        std::vector<int> fam(scount);
        for (int k = 0; k < scount; ++k) fam[k] = sp.restriction[k][ti];
        auto it = limit_index.find(fam);
        if (it == limit_index.end())
            throw error("canonical_map: a type restricts to an incompatible family");
        rep.image[ti] = it->second;
    }

    rep.injective = true;
    for (int a = 0; a < tcount && rep.injective; ++a)
        for (int b = a + 1; b < tcount; ++b)
            if (rep.image[a] == rep.image[b]) {
                rep.injective = false;
                rep.fiber_witness = {a, b};
                break;
            }
    std::vector<char> hit(rep.limit_points.size(), 0);
    for (int v : rep.image) hit[v] = 1;
    rep.surjective = true;
    for (size_t i = 0; i < hit.size(); ++i)
        if (!hit[i]) {
            rep.surjective = false;
            rep.miss_witness = static_cast<int>(i);
            break;
        }

    // cylinder preimages are exactly the basis sets; re-generating the
    // topology from them tests whether the map could induce the space
    rep.continuous = true;
    std::vector<std::set<int>> pres;
    for (int k = 0; k < scount; ++k)
        for (size_t p = 0; p < sp.small[k].types.size(); ++p) {
            std::set<int> pre;
            for (int ti = 0; ti < tcount; ++ti)
                if (sp.restriction[k][ti] == static_cast<int>(p)) pre.insert(ti);
            if (!sp.opens.count(pre)) rep.continuous = false;
            pres.push_back(std::move(pre));
        }
    rep.initial_topology = generate_topology(tcount, pres) == sp.opens;
    return rep;
}

CanonicalMapReport canonical_map(const AecFragment& f, const FinStructure& m,
                                 const std::vector<std::string>& index_names, int lambda) {
    return canonical_map(type_space(f, m, index_names, lambda));
}

TypeSquareReport induced_type_maps(const AecMorphism& mor, const KEmbedding& h_prime,
                                   const std::vector<std::string>& names, int lambda) {
    auto chk = check_morphism(mor.alpha, *mor.source, *mor.target);
    if (!chk.ok()) throw error("induced_type_maps: not a reduct functor");
    const AecFragment& kp = *mor.source;  // primed class, over the larger language
    const AecFragment& k = *mor.target;
    if (h_prime.source < 0 || h_prime.source >= kp.count() || h_prime.target < 0 ||
        h_prime.target >= kp.count())
        throw error("induced_type_maps: arrow endpoints out of range");
    {
        FragmentCache kp_cache(kp);
        const FinStructure& s = kp.structures[h_prime.source];
        const FinStructure& t = kp.structures[h_prime.target];
        std::vector<int> image(h_prime.map.begin(), h_prime.map.end());
        std::sort(image.begin(), image.end());
        if (!is_embedding_map(s, t, h_prime.map) ||
            !kp_cache.closed_below_listed(h_prime.target, image))
            throw error("induced_type_maps: h is not an arrow of the source class");
    }

    const FinStructure& mp0 = kp.structures[h_prime.source];
    const FinStructure& mp1 = kp.structures[h_prime.target];
    FinStructure m0 = reduct(mp0, mor.alpha);
    FinStructure m1 = reduct(mp1, mor.alpha);

    TypeSquareReport rep;
    rep.k_m0 = g_types(k, m0, names);
    rep.k_m1 = g_types(k, m1, names);
    rep.kp_m0 = g_types(kp, mp0, names);
    rep.kp_m1 = g_types(kp, mp1, names);

    auto precompose = [&](const TypeAnalysis& from, const TypeAnalysis& to,
                          const Map& h) -> std::vector<int> {
        std::vector<int> out(from.types.size());
        for (size_t p = 0; p < from.types.size(); ++p) {
            const Triple& rep_t = from.types[p].rep;
            Triple t;
            t.n_index = rep_t.n_index;
            t.f.resize(h.size());
            for (size_t x = 0; x < h.size(); ++x) t.f[x] = rep_t.f[h[x]];
            t.abar = rep_t.abar;
            out[p] = locate_triple(to, t, "induced_type_maps");
        }
        return out;
    };
    rep.top = precompose(rep.k_m1, rep.k_m0, h_prime.map);
    rep.bottom = precompose(rep.kp_m1, rep.kp_m0, h_prime.map);

    FragmentCache k_cache(k);
    auto transport = [&](const TypeAnalysis& from, const TypeAnalysis& to) -> std::vector<int> {
        std::vector<int> out(from.types.size());
        for (size_t p = 0; p < from.types.size(); ++p) {
            const Triple& rep_t = from.types[p].rep;
            FinStructure r = reduct(kp.structures[rep_t.n_index], mor.alpha);
            auto w = k_cache.member(r);
            if (!w) throw error("induced_type_maps: a reduct escapes the target class");
            Map inv(w->iso.size());
            for (size_t x = 0; x < w->iso.size(); ++x) inv[w->iso[x]] = static_cast<int>(x);
            Triple t;
            t.n_index = w->index;
            t.f.resize(rep_t.f.size());
            for (size_t x = 0; x < rep_t.f.size(); ++x) t.f[x] = inv[rep_t.f[x]];
            t.abar.resize(rep_t.abar.size());
            for (size_t j = 0; j < rep_t.abar.size(); ++j) t.abar[j] = inv[rep_t.abar[j]];
            out[p] = locate_triple(to, t, "induced_type_maps");
        }
        return out;
    };
    rep.left = transport(rep.kp_m0, rep.k_m0);
    rep.right = transport(rep.kp_m1, rep.k_m1);

    rep.commutes = true;
    for (size_t p = 0; p < rep.kp_m1.types.size(); ++p)
        if (rep.left[rep.bottom[p]] != rep.top[rep.right[p]]) rep.commutes = false;

    TypeSpace sp_k0 = type_space(rep.k_m0, lambda);
    TypeSpace sp_k1 = type_space(rep.k_m1, lambda);
    TypeSpace sp_kp0 = type_space(rep.kp_m0, lambda);
    TypeSpace sp_kp1 = type_space(rep.kp_m1, lambda);
    rep.maps_continuous = continuous_map(sp_k1, sp_k0, rep.top) &&
                          continuous_map(sp_kp1, sp_kp0, rep.bottom) &&
                          continuous_map(sp_kp0, sp_k0, rep.left) &&
                          continuous_map(sp_kp1, sp_k1, rep.right);

    if (check_ap(k).holds)
        rep.top_surjective = covers(rep.top, static_cast<int>(rep.k_m0.types.size()));
    if (check_ap(kp).holds)
        rep.bottom_surjective = covers(rep.bottom, static_cast<int>(rep.kp_m0.types.size()));
    return rep;
}

}  // namespace aec
