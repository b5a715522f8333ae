#include "aec/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aec/structure.hpp"
#include "aec/theory.hpp"
#include "aec/types.hpp"

namespace aec {

namespace {

// number of labeled structures of exactly size n, saturating at cap + 1
long long labeled_count(const Language& l, int n, long long cap) {
    long long total = 1;
    auto mul = [&](long long factor) {
        if (factor <= 0) factor = 1;
        if (total > cap / factor)
            total = cap + 1;
        else
            total *= factor;
    };
    auto slots = [&](int arity) {
        long long s = 1;
        for (int i = 0; i < arity; ++i) {
            if (s > cap) return cap + 1;
            s *= n;
        }
        return s;
    };
    for (const auto& [name, arity] : l.relations) {
        long long k = slots(arity);
        for (long long i = 0; i < k && total <= cap; ++i) mul(2);
    }
    for (const auto& [name, arity] : l.functions) {
        long long k = slots(arity);
        for (long long i = 0; i < k && total <= cap; ++i) mul(n);
    }
    for (size_t i = 0; i < l.constants.size(); ++i) mul(n);
    return total;
}

long long enumeration_cost(const Language& l, int max_size, long long cap) {
    long long total = 0;
    for (int n = 1; n <= max_size; ++n) {
        total += labeled_count(l, n, cap);
        if (total > cap) return cap + 1;
    }
    return total;
}

FinStructure random_structure(Rng& rng, std::shared_ptr<const Language> lang, int size) {
    FinStructure s;
    s.lang = std::move(lang);
    s.size = size;
    for (const auto& [name, arity] : s.lang->relations) {
        auto& tuples = s.rels[name];
        std::vector<int> t(arity, 0);
        while (true) {
            if (rng.chance(1, 2)) tuples.insert(t);
            int i = arity - 1;
            for (; i >= 0; --i) {
                if (++t[i] < size) break;
                t[i] = 0;
            }
            if (i < 0) break;
        }
    }
    for (const auto& [name, arity] : s.lang->functions) {
        auto& table = s.funcs[name];
        table.resize(table_size(arity, size));
        for (auto& v : table) v = rng.below(size);
    }
    for (const auto& name : s.lang->constants) s.consts[name] = rng.below(size);
    s.check();
    return s;
}

/// Labeled structures of sizes 1..max_size grouped into isomorphism
/// classes, with the induced-substructure relation between classes.
struct ClassTable {
    std::shared_ptr<const Language> lang;
    std::vector<FinStructure> all;           // enumeration order
    std::vector<int> class_of;               // structure -> class
    std::vector<int> rep;                    // class -> first structure index
    std::vector<std::vector<int>> members;   // class -> structure indices
    std::vector<std::set<int>> subs;         // class -> proper induced classes
};

ClassTable enumerate_classes(std::shared_ptr<const Language> lang, int max_size,
                             long long budget,
                             const std::function<bool(const FinStructure&)>& keep) {
    ClassTable t;
    t.lang = lang;
    long long visited = 0;
    bool over = false;
    for (int n = 1; n <= max_size && !over; ++n)
        visit_labeled_structures(lang, n, [&](FinStructure&& s) {
            if (++visited > budget) {
                over = true;
                return false;
            }
            if (!keep || keep(s)) t.all.push_back(std::move(s));
            return true;
        });
    if (over) throw budget_error("class enumeration exceeds the budget");

    std::map<std::vector<int>, int> of_canon;
    for (size_t i = 0; i < t.all.size(); ++i) {
        auto canon = canonical_encoding(t.all[i]);
        auto [it, fresh] = of_canon.emplace(std::move(canon), static_cast<int>(t.rep.size()));
        if (fresh) {
            t.rep.push_back(static_cast<int>(i));
            t.members.emplace_back();
        }
        t.class_of.push_back(it->second);
        t.members[it->second].push_back(static_cast<int>(i));
    }

    t.subs.resize(t.rep.size());
    for (size_t c = 0; c < t.rep.size(); ++c) {
        const FinStructure& s = t.all[t.rep[c]];
        for (const auto& X : all_subsets(s.size)) {
            if (X.empty() || static_cast<int>(X.size()) == s.size) continue;
            auto ind = induced_substructure(s, X);
            if (!std::holds_alternative<Induced>(ind)) continue;
            // a closed piece of an enumerated structure is itself enumerated
            t.subs[c].insert(of_canon.at(canonical_encoding(std::get<Induced>(ind).structure)));
        }
    }
    return t;
}

// random downward-closed class choice containing `forced`, trimmed from the
// maximal side to roughly `cap` labeled copies
std::set<int> pick_downset(Rng& rng, const ClassTable& t, const std::set<int>& forced,
                           long long cap) {
    std::set<int> chosen = forced;
    for (size_t c = 0; c < t.rep.size(); ++c)
        if (rng.chance(1, 2)) chosen.insert(static_cast<int>(c));
    std::vector<int> work(chosen.begin(), chosen.end());
    while (!work.empty()) {
        int c = work.back();
        work.pop_back();
        for (int d : t.subs[c])
            if (chosen.insert(d).second) work.push_back(d);
    }
    if (chosen.empty()) {
        chosen.insert(t.class_of[0]);  // the first size-1 class, downward closed alone
        for (int d : t.subs[t.class_of[0]]) chosen.insert(d);
    }
    auto total = [&] {
        long long n = 0;
        for (int c : chosen) n += static_cast<long long>(t.members[c].size());
        return n;
    };
    while (total() > cap) {
        int victim = -1;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            int c = *it;
            if (forced.count(c)) continue;
            bool below_other = false;
            for (int d : chosen)
                if (d != c && t.subs[d].count(c)) below_other = true;
            if (!below_other) {
                victim = c;
                break;
            }
        }
        if (victim < 0) break;
        chosen.erase(victim);
    }
    return chosen;
}

AecFragment materialize(const ClassTable& t, const std::set<int>& chosen) {
    AecFragment f;
    f.lang = t.lang;
    for (size_t i = 0; i < t.all.size(); ++i)
        if (chosen.count(t.class_of[i])) f.structures.push_back(t.all[i]);
    add_literal_prefix_pairs(f);
    f.check();
    return f;
}

LanguageMorphism name_inclusion(std::shared_ptr<const Language> from,
                                std::shared_ptr<const Language> to) {
    LanguageMorphism a;
    a.source = *from;
    a.target = *to;
    for (const auto& [name, arity] : from->relations) a.rel_map[name] = name;
    for (const auto& [name, arity] : from->functions) a.fun_map[name] = name;
    for (const auto& name : from->constants) a.con_map[name] = name;
    a.check();
    return a;
}

struct Expansion {
    std::shared_ptr<const AecFragment> fragment;
    LanguageMorphism inclusion;
};

// decorate the base with extra unary relations; every bare decoration of a
// base structure is forced in so the reduct functor is total and onto
Expansion expand_side(Rng& rng, const AecFragment& base, const std::string& prefix,
                      int extras, const GenProfile& profile) {
    Language l0 = *base.lang;
    for (int e = 0; e < extras; ++e) l0.relations[prefix + std::to_string(e)] = 1;
    auto lang0 = std::make_shared<const Language>(std::move(l0));
    LanguageMorphism incl = name_inclusion(base.lang, lang0);

    std::set<std::vector<int>> base_enc;
    for (const auto& s : base.structures) base_enc.insert(s.encode());
    auto keep = [&](const FinStructure& m) { return base_enc.count(reduct(m, incl).encode()) > 0; };
    ClassTable t = enumerate_classes(lang0, profile.max_size, profile.budget, keep);

    std::set<int> forced;
    for (size_t c = 0; c < t.rep.size(); ++c) {
        const FinStructure& s = t.all[t.rep[c]];
        bool bare_extras = true;
        for (int e = 0; e < extras; ++e)
            if (!s.rels.at(prefix + std::to_string(e)).empty()) bare_extras = false;
        if (bare_extras) forced.insert(static_cast<int>(c));
    }
    long long cap = static_cast<long long>(base.count()) + profile.max_structures;
    auto chosen = pick_downset(rng, t, forced, cap);

    Expansion out;
    out.fragment = std::make_shared<const AecFragment>(materialize(t, chosen));
    out.inclusion = std::move(incl);
    return out;
}

std::vector<Map> naive_embeddings(const FinStructure& a, const FinStructure& b) {
    std::vector<Map> out;
    Map m(a.size, 0);
    while (true) {
        bool injective = true;
        for (int x = 0; x < a.size && injective; ++x)
            for (int y = x + 1; y < a.size; ++y)
                if (m[x] == m[y]) {
                    injective = false;
                    break;
                }
        if (injective && is_embedding_map(a, b, m)) out.push_back(m);
        int i = a.size - 1;
        for (; i >= 0; --i) {
            if (++m[i] < b.size) break;
            m[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<int> reachability_components(const AecFragment& f) {
    FragmentCache cache(f);
    int n = f.count();
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (has_cat_arrow(cache, a, b)) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    std::vector<int> comp(n, -1);
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> queue{start};
        comp[start] = start;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = start;
                    queue.push_back(w);
                }
        }
    }
    return comp;
}

}  // namespace

std::shared_ptr<const Language> gen_language(Rng& rng, const GenProfile& profile) {
    if (profile.max_size < 1) throw error("gen_language: max_size must be positive");
    struct Sym {
        int kind;  // 0 relation, 1 function, 2 constant
        std::string name;
        int arity;
    };
    std::vector<Sym> syms;
    int nr = 0, nf = 0, nc = 0;
    int want = rng.below(profile.max_symbols + 1);
    for (int s = 0; s < want; ++s) {
        int roll = rng.below(6);
        int arity = 1;
        if (profile.arity_cap > 1 && rng.chance(1, 3)) arity = 2 + rng.below(profile.arity_cap - 1);
        if (roll <= 3)
            syms.push_back({0, "R" + std::to_string(nr++), arity});
        else if (roll == 4)
            syms.push_back({1, "f" + std::to_string(nf++), arity});
        else
            syms.push_back({2, "c" + std::to_string(nc++), 0});
    }
    auto build = [&] {
        Language l;
        for (const auto& s : syms) {
            if (s.kind == 0) l.relations[s.name] = s.arity;
            if (s.kind == 1) l.functions[s.name] = s.arity;
            if (s.kind == 2) l.constants.insert(s.name);
        }
        return l;
    };
    Language l = build();
    while (!syms.empty() && enumeration_cost(l, profile.max_size, profile.budget) > profile.budget) {
        syms.pop_back();
        l = build();
    }
    l.check();
    return std::make_shared<const Language>(std::move(l));
}

AecFragment gen_fragment(Rng& rng, std::shared_ptr<const Language> lang,
                         const GenProfile& profile) {
    ClassTable t = enumerate_classes(std::move(lang), profile.max_size, profile.budget, nullptr);
    auto chosen = pick_downset(rng, t, {}, profile.max_structures);
    return materialize(t, chosen);
}

AecFragment gen_fragment(Rng& rng, const GenProfile& profile) {
    return gen_fragment(rng, gen_language(rng, profile), profile);
}

AecFragment gen_rough_fragment(Rng& rng, const GenProfile& profile) {
    AecFragment f;
    f.lang = gen_language(rng, profile);
    std::set<std::vector<int>> seen;
    int want = 1 + rng.below(std::max(1, profile.max_structures));
    for (int k = 0; k < want; ++k) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            FinStructure s = random_structure(rng, f.lang, rng.range(1, profile.max_size));
            if (seen.insert(s.encode()).second) {
                f.structures.push_back(std::move(s));
                break;
            }
        }
    }
    AecFragment full = f;
    add_literal_prefix_pairs(full);
    for (const auto& p : full.strong_pairs)
        if (rng.chance(2, 3)) f.strong_pairs.insert(p);
    f.check();
    return f;
}

GeneratedConfig gen_config(Rng& rng, const GenProfile& profile) {
    GeneratedConfig out;
    out.base = std::make_shared<const AecFragment>(gen_fragment(rng, profile));
    int e0 = rng.below(profile.max_extras + 1);
    int e1 = rng.below(profile.max_extras + 1);
    auto fits = [&](int a, int b) {
        Language apex = *out.base->lang;
        for (int i = 0; i < a; ++i) apex.relations["P" + std::to_string(i)] = 1;
        for (int i = 0; i < b; ++i) apex.relations["Q" + std::to_string(i)] = 1;
        return enumeration_cost(apex, profile.max_size, profile.budget) <= profile.budget;
    };
    while (!fits(e0, e1)) {
        if (e0 >= e1 && e0 > 0)
            --e0;
        else if (e1 > 0)
            --e1;
        else
            throw budget_error("gen_config: base language alone exceeds the budget");
    }
    Expansion left = expand_side(rng, *out.base, "P", e0, profile);
    Expansion right = expand_side(rng, *out.base, "Q", e1, profile);
    out.k0 = left.fragment;
    out.k1 = right.fragment;
    AecMorphism lm{left.inclusion, out.k0.get(), out.base.get()};
    AecMorphism rm{right.inclusion, out.k1.get(), out.base.get()};
    out.global = make_global_config(*out.base, lm, rm, profile.budget);
    return out;
}

LawRunReport run_law(const std::string& law, std::uint64_t seed0, int seeds,
                     const GenProfile& profile) {
    LawRunReport rep;
    rep.law = law;
    if (seeds < 0) throw error("run_law: negative seed count");
    for (int s = 0; s < seeds; ++s) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(s);
        Rng rng(seed);
        ++rep.runs;
        if (law == "trp-grp") {
            auto g = gen_config(rng, profile);
            if (!check_trp(g.global).both()) continue;
            ++rep.applicable;
            if (!check_grp(g.global).holds)
                rep.violations.push_back(
                    {seed, "transversal extensions hold but a pullback witness is missing"});
        } else if (law == "trp-cip") {
            auto g = gen_config(rng, profile);
            if (!check_trp(g.global).both()) continue;
            auto t0s = max_theories(connection_partition(*g.k0));
            auto t1s = max_theories(connection_partition(*g.k1));
            int pairs = 0;
            for (size_t i = 0; i < t0s.size() && pairs < 16; ++i)
                for (size_t j = 0; j < t1s.size() && pairs < 16; ++j) {
                    ++pairs;
                    ++rep.applicable;
                    if (!check_cip(g.global, t0s[i], t1s[j]).holds)
                        rep.violations.push_back(
                            {seed, "interpolation fails for theory pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")"});
                }
        } else if (law == "pullback-ls") {
            auto g = gen_config(rng, profile);
            ++rep.applicable;
            auto vr = validate(g.global.pullback);
            if (!vr.ok()) {
                rep.violations.push_back({seed, "pullback fragment fails validation"});
                continue;
            }
            int bound = std::max({validate(*g.base).ls_number, validate(*g.k0).ls_number,
                                  validate(*g.k1).ls_number});
            if (vr.ls_number > bound)
                rep.violations.push_back({seed, "pullback ls number exceeds the input bound"});
        } else if (law == "reduct-equiv") {
            auto g = gen_config(rng, profile);
            rep.applicable += 2;
            if (!check_reduct_equivalence(g.global.cfg.left).holds)
                rep.violations.push_back({seed, "left leg separates an equivalent pair"});
            if (!check_reduct_equivalence(g.global.cfg.right).holds)
                rep.violations.push_back({seed, "right leg separates an equivalent pair"});
        } else if (law == "types-dual") {
            auto f = gen_fragment(rng, profile);
            int m = rng.below(f.count());
            std::vector<std::string> names;
            if (rng.chance(1, 2)) names.push_back("i");
            if (rng.chance(1, 3)) names.push_back("j");
            ++rep.applicable;
            try {
                auto ta = g_types(f, m, names);
                if (ta.types.size() != max_theories(ta.partition).size())
                    rep.violations.push_back(
                        {seed, "type count differs from the maximal theory count"});
            } catch (const error& e) {
                rep.violations.push_back({seed, e.what()});
            }
        } else if (law == "embeddings-oracle") {
            auto f = gen_rough_fragment(rng, profile);
            for (int a = 0; a < f.count(); ++a)
                for (int b = 0; b < f.count(); ++b) {
                    ++rep.applicable;
                    if (find_embeddings(f.structures[a], f.structures[b]) !=
                        naive_embeddings(f.structures[a], f.structures[b])) {
                        rep.violations.push_back(
                            {seed, "embedding enumerations differ on pair (" + std::to_string(a) +
                                       ", " + std::to_string(b) + ")"});
                    }
                }
        } else if (law == "connection-oracle") {
            auto f = gen_rough_fragment(rng, profile);
            ++rep.applicable;
            if (connection_partition(f).component_of != reachability_components(f))
                rep.violations.push_back({seed, "partition differs from brute-force reachability"});
        } else {
            throw error("run_law: unknown law " + law);
        }
    }
    return rep;
}

}  // namespace aec
