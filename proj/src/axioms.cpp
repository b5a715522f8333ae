#include "aec/axioms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace aec {

namespace {

std::vector<std::vector<std::vector<KEmbedding>>> arrow_table(FragmentCache& cache) {
    int n = cache.fragment().count();
    std::vector<std::vector<std::vector<KEmbedding>>> t(n);
    for (int a = 0; a < n; ++a) {
        t[a].resize(n);
        for (int b = 0; b < n; ++b) t[a][b] = cat_arrows(cache, a, b);
    }
    return t;
}

}  // namespace

AxiomVerdict check_ap(const AecFragment& f) {
    FragmentCache cache(f);
    auto arr = arrow_table(cache);
    AxiomVerdict v;
    v.axiom = "ap";
    v.holds = true;
    int n = f.count(), bound = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (const auto& f0 : arr[a][b])
                    for (const auto& f1 : arr[a][c]) {
                        bool found = false;
                        for (int p = 0; p < n && !found; ++p)
                            for (const auto& g0 : arr[b][p]) {
                                for (const auto& g1 : arr[c][p]) {
                                    bool eq = true;
                                    for (int x = 0; x < f.structures[a].size && eq; ++x)
                                        eq = g0.map[f0.map[x]] == g1.map[f1.map[x]];
                                    if (eq) {
                                        found = true;
                                        bound = std::max(bound, f.structures[p].size);
                                        break;
                                    }
                                }
                                if (found) break;
                            }
                        if (!found) {
                            v.holds = false;
                            v.span = SpanWitness{f0, f1};
                            v.note = "span admits no commuting amalgam";
                            return v;
                        }
                    }
    v.bound = bound;
    return v;
}

AxiomVerdict check_jep(const AecFragment& f) {
    FragmentCache cache(f);
    int n = f.count();
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p) has[a][p] = has_cat_arrow(cache, a, p);
    AxiomVerdict v;
    v.axiom = "jep";
    v.holds = true;
    int bound = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            bool found = false;
            for (int p = 0; p < n && !found; ++p)
                if (has[a][p] && has[b][p]) {
                    found = true;
                    bound = std::max(bound, f.structures[p].size);
                }
            if (!found) {
                v.holds = false;
                v.pair = PairWitness{a, b};
                v.note = "pair admits no joint extension";
                return v;
            }
        }
    v.bound = bound;
    return v;
}

AxiomVerdict check_lrp(const AecFragment& f) {
    FragmentCache cache(f);
    int n = f.count();
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p) has[a][p] = has_cat_arrow(cache, a, p);
    auto part = connection_partition(cache);

    // a cocone forces equivalence (zigzag of length two); the partition is
    // built from the same arrows, so a mismatch means internal breakage
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool cocone = false;
            for (int p = 0; p < n && !cocone; ++p) cocone = has[a][p] && has[b][p];
            if (cocone && part.component_of[a] != part.component_of[b])
                throw error("check_lrp: cocone across distinct components");
        }

    AxiomVerdict v;
    v.axiom = "lrp";
    v.holds = true;
    int bound = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (part.component_of[a] != part.component_of[b]) continue;
            bool found = false;
            for (int p = 0; p < n && !found; ++p)
                if (has[a][p] && has[b][p]) {
                    found = true;
                    bound = std::max(bound, f.structures[p].size);
                }
            if (!found) {
                v.holds = false;
                v.pair = PairWitness{a, b};
                v.note = "equivalent pair admits no cocone";
                return v;
            }
        }
    v.bound = bound;
    return v;
}

RobinsonResult robinson_diagram(const AecFragment& f, int m, int n) {
    if (m < 0 || m >= f.count() || n < 0 || n >= f.count())
        throw error("robinson_diagram: index out of range");
    auto lrp = check_lrp(f);
    if (!lrp.holds) throw LrpNotSatisfied("robinson_diagram: fragment lacks the cocone property");

    int msize = f.structures[m].size;
    std::vector<std::string> names;
    for (int x = 0; x < msize; ++x) names.push_back("a" + std::to_string(x));
    auto de = diagram_expansion_indexed(f, names);
    auto part = connection_partition(de.fragment);

    std::vector<int> ident(msize);
    std::iota(ident.begin(), ident.end(), 0);
    int m_named = -1;
    for (int i = 0; i < de.fragment.count(); ++i)
        if (de.origin[i] == std::make_pair(m, ident)) {
            m_named = i;
            break;
        }
    if (m_named < 0) throw error("robinson_diagram: named diagram of m not listed");

    FragmentCache cache(f);
    RobinsonResult res;
    for (int i = 0; i < de.fragment.count(); ++i) {
        if (de.origin[i].first != n) continue;
        if (part.component_of[i] != part.component_of[m_named]) continue;
        res.equivalent_tuple_found = true;
        const auto& b = de.origin[i].second;
        if (!is_embedding_map(f.structures[m], f.structures[n], b)) continue;
        std::vector<int> img(b);
        std::sort(img.begin(), img.end());
        if (!cache.closed_below_listed(n, img)) continue;
        res.arrow = KEmbedding{m, n, b};
        break;
    }

    bool direct = !cat_arrows(cache, m, n).empty();
    if (res.arrow.has_value() != direct)
        throw error("robinson_diagram: named-diagram route disagrees with direct search");
    return res;
}

GlobalConfig make_global_config(const AecFragment& base, const AecMorphism& left,
                                const AecMorphism& right, long long budget) {
    GlobalConfig g;
    g.cfg = make_pullback_config(base, left, right);
    g.pullback = pullback_fragment(g.cfg, budget);
    return g;
}

namespace {

struct ConfigScan {
    FragmentCache base_cache, c0, c1;
    std::vector<FinStructure> red0, red1;  // base reducts of the component listings
    std::vector<int> comp0, comp1;         // base component of each reduct

    explicit ConfigScan(const PullbackConfig& cfg)
        : base_cache(*cfg.base), c0(*cfg.left.source), c1(*cfg.right.source) {
        auto part = connection_partition(base_cache);
        for (const auto& s : cfg.left.source->structures) {
            red0.push_back(reduct(s, cfg.left.alpha));
            auto w = base_cache.member(red0.back());
            if (!w) throw error("global config: component reduct escapes the base");
            comp0.push_back(part.component_of[w->index]);
        }
        for (const auto& s : cfg.right.source->structures) {
            red1.push_back(reduct(s, cfg.right.alpha));
            auto w = base_cache.member(red1.back());
            if (!w) throw error("global config: component reduct escapes the base");
            comp1.push_back(part.component_of[w->index]);
        }
    }
};

// arrow in the base category from one member structure into another
bool base_arrow_exists(FragmentCache& base_cache, const FinStructure& from,
                       const FinStructure& to) {
    bool found = false;
    visit_embeddings(from, to, [&](const Map& e) {
        std::vector<int> img(e);
        std::sort(img.begin(), img.end());
        if (base_cache.closed_below(to, img)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

AxiomVerdict trp_orientation(const std::string& name, const AecFragment& ext_frag,
                             FragmentCache& ext_cache, const std::vector<FinStructure>& ext_red,
                             const std::vector<int>& ext_comp, const AecFragment& other_frag,
                             const std::vector<FinStructure>& other_red,
                             const std::vector<int>& other_comp, FragmentCache& base_cache) {
    AxiomVerdict v;
    v.axiom = name;
    v.holds = true;
    int bound = 0;
    std::map<std::pair<int, int>, bool> reach;  // (other j, ext n) -> base arrow
    for (int i = 0; i < ext_frag.count(); ++i)
        for (int j = 0; j < other_frag.count(); ++j) {
            if (ext_comp[i] != other_comp[j]) continue;
            bool found = false;
            for (int n0 = 0; n0 < ext_frag.count() && !found; ++n0) {
                if (!has_cat_arrow(ext_cache, i, n0)) continue;
                auto key = std::make_pair(j, n0);
                auto it = reach.find(key);
                if (it == reach.end())
                    it = reach.emplace(key, base_arrow_exists(base_cache, other_red[j],
                                                              ext_red[n0]))
                             .first;
                if (it->second) {
                    found = true;
                    bound = std::max(bound, ext_frag.structures[n0].size);
                }
            }
            if (!found) {
                v.holds = false;
                v.pair = PairWitness{i, j};
                v.note = "equivalent pair with no transversal extension";
                return v;
            }
        }
    v.bound = bound;
    return v;
}

}  // namespace

TrpReport check_trp(const GlobalConfig& g) {
    ConfigScan s(g.cfg);
    TrpReport r;
    r.forward = trp_orientation("trp-forward", *g.cfg.left.source, s.c0, s.red0, s.comp0,
                                *g.cfg.right.source, s.red1, s.comp1, s.base_cache);
    r.backward = trp_orientation("trp-backward", *g.cfg.right.source, s.c1, s.red1, s.comp1,
                                 *g.cfg.left.source, s.red0, s.comp0, s.base_cache);
    return r;
}

AxiomVerdict check_grp(const GlobalConfig& g) {
    ConfigScan s(g.cfg);
    const auto& k0 = *g.cfg.left.source;
    const auto& k1 = *g.cfg.right.source;

    std::vector<FinStructure> proj0, proj1;  // component projections of pullback members
    for (const auto& p : g.pullback.structures) {
        proj0.push_back(reduct(p, g.cfg.pushout.inj0));
        proj1.push_back(reduct(p, g.cfg.pushout.inj1));
    }
    std::map<std::pair<int, int>, bool> emb0, emb1;  // (component index, pullback index)
    auto strong_into = [](FragmentCache& cache, const FinStructure& from, const FinStructure& to) {
        bool found = false;
        visit_embeddings(from, to, [&](const Map& e) {
            std::vector<int> img(e);
            std::sort(img.begin(), img.end());
            if (cache.closed_below(to, img)) {
                found = true;
                return false;
            }
            return true;
        });
        return found;
    };

    AxiomVerdict v;
    v.axiom = "grp";
    v.holds = true;
    int bound = 0;
    for (int i = 0; i < k0.count(); ++i)
        for (int j = 0; j < k1.count(); ++j) {
            if (s.comp0[i] != s.comp1[j]) continue;
            bool found = false;
            for (int p = 0; p < g.pullback.count() && !found; ++p) {
                auto k0key = std::make_pair(i, p);
                auto it0 = emb0.find(k0key);
                if (it0 == emb0.end())
                    it0 = emb0.emplace(k0key, strong_into(s.c0, k0.structures[i], proj0[p])).first;
                if (!it0->second) continue;
                auto k1key = std::make_pair(j, p);
                auto it1 = emb1.find(k1key);
                if (it1 == emb1.end())
                    it1 = emb1.emplace(k1key, strong_into(s.c1, k1.structures[j], proj1[p])).first;
                if (it1->second) {
                    found = true;
                    bound = std::max(bound, g.pullback.structures[p].size);
                }
            }
            if (!found) {
                v.holds = false;
                v.pair = PairWitness{i, j};
                v.note = "equivalent pair with no pullback witness";
                return v;
            }
        }
    v.bound = bound;
    return v;
}

AxiomVerdict check_cip(const GlobalConfig& g, const ClosedTheory& t0, const ClosedTheory& t1) {
    ConfigScan s(g.cfg);
    auto part0 = connection_partition(s.c0);
    auto part1 = connection_partition(s.c1);
    if (!is_closed_theory(part0, t0.structures) || !is_closed_theory(part1, t1.structures))
        throw error("check_cip: theory is not a union of connection classes");

    bool joint = false;
    for (const auto& p : g.pullback.structures) {
        auto w0 = s.c0.member(reduct(p, g.cfg.pushout.inj0));
        auto w1 = s.c1.member(reduct(p, g.cfg.pushout.inj1));
        if (!w0 || !w1) throw error("check_cip: pullback structure fails to project");
        if (t0.component_ids.count(part0.component_of[w0->index]) &&
            t1.component_ids.count(part1.component_of[w1->index])) {
            joint = true;
            break;
        }
    }

    auto ind0 = induced_theory(g.cfg.left, t0);
    auto ind1 = induced_theory(g.cfg.right, t1);
    std::vector<int> common;
    std::set_intersection(ind0.component_ids.begin(), ind0.component_ids.end(),
                          ind1.component_ids.begin(), ind1.component_ids.end(),
                          std::back_inserter(common));

    AxiomVerdict v;
    v.axiom = "cip";
    // implication: no joint pullback model forces the induced theories apart
    v.holds = joint || common.empty();
    if (!v.holds) {
        v.witness_index = common.front();
        v.note = "base component models both induced theories yet no pullback structure "
                 "projects into both";
    }
    return v;
}

AxiomVerdict check_gap(const GapInstance& inst) {
    check_glued_arrow(inst.to_n0);
    check_glued_arrow(inst.to_n1);
    if (!(inst.to_n0.source == inst.m) || !(inst.to_n1.source == inst.m))
        throw error("check_gap: arrows must share the instance source");

    AxiomVerdict v;
    v.axiom = "gap";
    v.note = "relative to pool of " + std::to_string(inst.pool.size()) + " candidate fragments";
    for (size_t k = 0; k < inst.pool.size(); ++k) {
        const AecFragment& kpp = *inst.pool[k];
        const auto& n0 = inst.to_n0.target;
        const auto& n1 = inst.to_n1.target;
        for (const auto& b0 : all_language_morphisms(*n0.fragment->lang, *kpp.lang)) {
            if (!check_morphism(b0, kpp, *n0.fragment).ok()) continue;
            for (const auto& b1 : all_language_morphisms(*n1.fragment->lang, *kpp.lang)) {
                if (!(compose(b0, inst.to_n0.phi.alpha) == compose(b1, inst.to_n1.phi.alpha)))
                    continue;
                if (!check_morphism(b1, kpp, *n1.fragment).ok()) continue;
                AecMorphism phi0{b0, &kpp, n0.fragment};
                AecMorphism phi1{b1, &kpp, n1.fragment};
                for (int p = 0; p < kpp.count(); ++p) {
                    GluedObject tgt{&kpp, p};
                    auto r0 = reduct(kpp.structures[p], b0);
                    auto r1 = reduct(kpp.structures[p], b1);
                    std::vector<Map> j0s, j1s;
                    visit_embeddings(n0.fragment->structures[n0.index], r0, [&](const Map& e) {
                        std::vector<int> img(e);
                        std::sort(img.begin(), img.end());
                        if (closed_below(*n0.fragment, r0, img)) j0s.push_back(e);
                        return true;
                    });
                    if (j0s.empty()) continue;
                    visit_embeddings(n1.fragment->structures[n1.index], r1, [&](const Map& e) {
                        std::vector<int> img(e);
                        std::sort(img.begin(), img.end());
                        if (closed_below(*n1.fragment, r1, img)) j1s.push_back(e);
                        return true;
                    });
                    for (const auto& j0 : j0s)
                        for (const auto& j1 : j1s) {
                            GluedArrow a0{n0, tgt, phi0, j0};
                            GluedArrow a1{n1, tgt, phi1, j1};
                            auto c0 = glue_compose(a0, inst.to_n0);
                            auto c1 = glue_compose(a1, inst.to_n1);
                            if (c0.h == c1.h && c0.phi.alpha == c1.phi.alpha) {
                                v.holds = true;
                                v.witness_index = p;
                                v.note += "; closed via candidate " + std::to_string(k);
                                v.bound = kpp.structures[p].size;
                                return v;
                            }
                        }
                }
            }
        }
    }
    v.holds = false;
    return v;
}

}  // namespace aec
