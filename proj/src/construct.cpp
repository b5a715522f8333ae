#include "aec/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "aec/util.hpp"

namespace aec {

namespace {

std::vector<std::vector<int>> all_tuples(int arity, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(arity, 0);
    while (true) {
        out.push_back(t);
        int i = arity - 1;
        for (; i >= 0; --i) {
            if (++t[i] < size) break;
            t[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

bool advance(std::vector<int>& digits, const std::vector<int>& bases) {
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[i] < bases[i]) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

void add_literal_prefix_pairs(AecFragment& f) {
    std::map<std::vector<int>, std::vector<int>> by_encode;
    for (int i = 0; i < f.count(); ++i) by_encode[f.structures[i].encode()].push_back(i);
    for (int j = 0; j < f.count(); ++j) {
        const auto& b = f.structures[j];
        for (int k = 1; k <= b.size; ++k) {
            std::vector<int> prefix(k);
            std::iota(prefix.begin(), prefix.end(), 0);
            auto ind = induced_substructure(b, prefix);
            if (std::holds_alternative<NotClosed>(ind)) continue;
            auto it = by_encode.find(std::get<Induced>(ind).structure.encode());
            if (it == by_encode.end()) continue;
            for (int i : it->second)
                if (k < b.size || i == j) f.strong_pairs.insert({i, j});
        }
    }
}

AecFragment terminal_fragment(int n) {
    if (n < 1) throw error("terminal_fragment: need n >= 1");
    AecFragment f;
    f.lang = std::make_shared<Language>();
    for (int k = 1; k <= n; ++k) {
        FinStructure s;
        s.lang = f.lang;
        s.size = k;
        f.structures.push_back(std::move(s));
    }
    add_literal_prefix_pairs(f);
    return f;
}

void visit_labeled_structures(std::shared_ptr<const Language> lang, int size,
                              const std::function<bool(FinStructure&&)>& visit) {
    if (size < 1) throw error("visit_labeled_structures: need size >= 1");
    std::vector<int> bases;
    for (const auto& [name, arity] : lang->relations)
        bases.insert(bases.end(), table_size(arity, size), 2);
    for (const auto& [name, arity] : lang->functions)
        bases.insert(bases.end(), table_size(arity, size), size);
    bases.insert(bases.end(), lang->constants.size(), size);

    std::vector<int> digits(bases.size(), 0);
    while (true) {
        FinStructure s;
        s.lang = lang;
        s.size = size;
        int pos = 0;
        for (const auto& [name, arity] : lang->relations) {
            auto& tuples = s.rels[name];
            for (auto& t : all_tuples(arity, size))
                if (digits[pos++]) tuples.insert(t);
        }
        for (const auto& [name, arity] : lang->functions) {
            auto& table = s.funcs[name];
            table.resize(table_size(arity, size));
            for (auto& t : all_tuples(arity, size)) table[table_index(t, size)] = digits[pos++];
        }
        for (const auto& name : lang->constants) s.consts[name] = digits[pos++];
        if (!visit(std::move(s))) return;
        if (!advance(digits, bases)) return;
    }
}

AecFragment full_structure_fragment(std::shared_ptr<const Language> lang, int max_size,
                                    long long budget) {
    if (max_size < 1) throw error("full_structure_fragment: need max_size >= 1");
    AecFragment f;
    f.lang = lang;
    long long seen = 0;
    for (int size = 1; size <= max_size; ++size) {
        visit_labeled_structures(lang, size, [&](FinStructure&& s) {
            if (++seen > budget) throw budget_error("full_structure_fragment: budget exceeded");
            f.structures.push_back(std::move(s));
            return true;
        });
    }
    add_literal_prefix_pairs(f);
    return f;
}

void PullbackConfig::check() const {
    if (!base) throw error("pullback config: no base fragment");
    if (left.target != base || right.target != base)
        throw error("pullback config: morphisms must share the base fragment as target");
    if (!(left.alpha.source == *base->lang) || !(right.alpha.source == *base->lang))
        throw error("pullback config: language legs must start at the base language");
    if (!(pushout.left == left.alpha) || !(pushout.right == right.alpha))
        throw error("pullback config: pushout does not match the legs");
}

PullbackConfig make_pullback_config(const AecFragment& base, const AecMorphism& left,
                                    const AecMorphism& right) {
    PullbackConfig cfg;
    cfg.base = &base;
    cfg.left = left;
    cfg.right = right;
    auto lchk = check_morphism(left.alpha, *left.source, *left.target);
    auto rchk = check_morphism(right.alpha, *right.source, *right.target);
    if (!lchk.ok() || !rchk.ok()) throw error("pullback config: a leg is not a reduct functor");
    cfg.pushout = pushout(left.alpha, right.alpha);
    cfg.check();
    return cfg;
}

AecFragment pullback_fragment(const PullbackConfig& cfg, long long budget) {
    cfg.check();
    FragmentCache cache0(*cfg.left.source);
    FragmentCache cache1(*cfg.right.source);
    FragmentCache cache_base(*cfg.base);

    std::set<int> sizes0, sizes1;
    for (const auto& s : cfg.left.source->structures) sizes0.insert(s.size);
    for (const auto& s : cfg.right.source->structures) sizes1.insert(s.size);
    std::vector<int> common;
    std::set_intersection(sizes0.begin(), sizes0.end(), sizes1.begin(), sizes1.end(),
                          std::back_inserter(common));

    AecFragment out;
    out.lang = std::make_shared<Language>(cfg.pushout.apex);
    std::vector<FinStructure> red0, red1;  // projections of the kept structures
    long long seen = 0;
    for (int size : common) {
        visit_labeled_structures(out.lang, size, [&](FinStructure&& s) {
            if (++seen > budget) throw budget_error("pullback_fragment: enumeration budget exceeded");
            auto r0 = reduct(s, cfg.pushout.inj0);
            if (!cache0.member(r0)) return true;
            auto r1 = reduct(s, cfg.pushout.inj1);
            if (!cache1.member(r1)) return true;
            // both component memberships imply the shared reduct is in the
            // base class; a failure here means a leg was not a morphism
            auto d = reduct(s, cfg.pushout.diagonal);
            if (!reduct(r0, cfg.left.alpha).same_content(d) ||
                !reduct(r1, cfg.right.alpha).same_content(d))
                throw error("pullback_fragment: projections disagree on the shared language");
            if (!cache_base.member(d))
                throw error("pullback_fragment: diagonal reduct escapes the base class");
            out.structures.push_back(std::move(s));
            red0.push_back(std::move(r0));
            red1.push_back(std::move(r1));
            return true;
        });
    }

    std::map<std::vector<int>, std::vector<int>> by_encode;
    for (int i = 0; i < out.count(); ++i) by_encode[out.structures[i].encode()].push_back(i);
    std::map<std::pair<int, int>, bool> strong_prefix;  // (j, k) -> both sides strong
    for (int j = 0; j < out.count(); ++j) {
        const auto& b = out.structures[j];
        for (int k = 1; k <= b.size; ++k) {
            std::vector<int> prefix(k);
            std::iota(prefix.begin(), prefix.end(), 0);
            auto ind = induced_substructure(b, prefix);
            if (std::holds_alternative<NotClosed>(ind)) continue;
            auto it = by_encode.find(std::get<Induced>(ind).structure.encode());
            if (it == by_encode.end()) continue;
            auto mit = strong_prefix.find({j, k});
            if (mit == strong_prefix.end()) {
                bool strong = cache0.closed_below(red0[j], prefix).has_value() &&
                              cache1.closed_below(red1[j], prefix).has_value();
                mit = strong_prefix.emplace(std::make_pair(j, k), strong).first;
            }
            if (!mit->second) continue;
            for (int i : it->second)
                if (k < b.size || i == j) out.strong_pairs.insert({i, j});
        }
    }
    return out;
}

PointedClass pointed_class(const AecFragment& f, const FinStructure& m,
                           const std::vector<std::string>& index_names) {
    FragmentCache cache(f);
    if (!cache.member(m)) throw error("pointed_class: base point is not a member");

    PointedClass pc;
    pc.base = &f;
    pc.base_point = m;
    pc.index_names = index_names;

    std::vector<std::string> constant_names;
    for (int k = 0; k < m.size; ++k) constant_names.push_back("m" + std::to_string(k));
    for (const auto& name : index_names) constant_names.push_back("i_" + name);
    auto [expanded, incl] = expand_with_constants(*f.lang, constant_names);
    pc.expanded_lang = std::make_shared<Language>(std::move(expanded));
    pc.inclusion = std::move(incl);

    int ni = static_cast<int>(index_names.size());
    for (int n = 0; n < f.count(); ++n) {
        const auto& target = f.structures[n];
        std::vector<Map> arrows;
        visit_embeddings(m, target, [&](const Map& e) {
            std::vector<int> image(e);
            std::sort(image.begin(), image.end());
            if (cache.closed_below_listed(n, image)) arrows.push_back(e);
            return true;
        });
        for (const auto& e : arrows) {
            std::vector<int> abar(ni, 0);
            std::vector<int> bases(ni, target.size);
            while (true) {
                pc.triples.push_back(Triple{n, e, abar});
                if (ni == 0 || !advance(abar, bases)) break;
            }
        }
    }

    pc.fragment.lang = pc.expanded_lang;
    for (const auto& t : pc.triples) {
        FinStructure s = f.structures[t.n_index];
        s.lang = pc.expanded_lang;
        for (int k = 0; k < m.size; ++k) s.consts["m" + std::to_string(k)] = t.f[k];
        for (int x = 0; x < ni; ++x) s.consts["i_" + pc.index_names[x]] = t.abar[x];
        pc.fragment.structures.push_back(std::move(s));
    }

    // pair (a, b): underlying structures are literal prefixes, the pointing
    // data agree, and the prefix universe is strong in the underlying class
    std::vector<std::vector<int>> encodes(f.count());
    for (int n = 0; n < f.count(); ++n) encodes[n] = f.structures[n].encode();
    std::map<std::pair<int, int>, bool> prefix_of;  // (sub, super) literal
    auto literal = [&](int sub, int super) {
        if (f.structures[sub].size > f.structures[super].size) return false;
        auto key = std::make_pair(sub, super);
        auto it = prefix_of.find(key);
        if (it != prefix_of.end()) return it->second;
        std::vector<int> prefix(f.structures[sub].size);
        std::iota(prefix.begin(), prefix.end(), 0);
        auto ind = induced_substructure(f.structures[super], prefix);
        bool ok = std::holds_alternative<Induced>(ind) &&
                  std::get<Induced>(ind).structure.encode() == encodes[sub];
        prefix_of.emplace(key, ok);
        return ok;
    };
    int t_count = static_cast<int>(pc.triples.size());
    for (int a = 0; a < t_count; ++a) {
        const auto& ta = pc.triples[a];
        for (int b = 0; b < t_count; ++b) {
            const auto& tb = pc.triples[b];
            if (ta.f != tb.f || ta.abar != tb.abar) continue;
            if (!literal(ta.n_index, tb.n_index)) continue;
            std::vector<int> prefix(f.structures[ta.n_index].size);
            std::iota(prefix.begin(), prefix.end(), 0);
            if (cache.closed_below_listed(tb.n_index, prefix)) pc.fragment.strong_pairs.insert({a, b});
        }
    }
    return pc;
}

PointedClass pointed_class(const AecFragment& f, int m_index,
                           const std::vector<std::string>& index_names) {
    if (m_index < 0 || m_index >= f.count()) throw error("pointed_class: index out of range");
    return pointed_class(f, f.structures[m_index], index_names);
}

AecFragment diagram_expansion(const AecFragment& f, const std::vector<std::string>& names) {
    return diagram_expansion_indexed(f, names).fragment;
}

DiagramExpansion diagram_expansion_indexed(const AecFragment& f,
                                           const std::vector<std::string>& names) {
    auto [expanded, incl] = expand_with_constants(*f.lang, names);
    DiagramExpansion de;
    AecFragment& out = de.fragment;
    out.lang = std::make_shared<Language>(std::move(expanded));

    int ni = static_cast<int>(names.size());
    std::map<std::pair<int, std::vector<int>>, int> index_of;  // (member, tuple) -> listed
    for (int i = 0; i < f.count(); ++i) {
        std::vector<int> abar(ni, 0);
        std::vector<int> bases(ni, f.structures[i].size);
        while (true) {
            FinStructure s = f.structures[i];
            s.lang = out.lang;
            for (int x = 0; x < ni; ++x) s.consts[names[x]] = abar[x];
            index_of[{i, abar}] = out.count();
            de.origin.emplace_back(i, abar);
            out.structures.push_back(std::move(s));
            if (ni == 0 || !advance(abar, bases)) break;
        }
    }
    for (const auto& [i, j] : f.strong_pairs) {
        int bound = f.structures[i].size;  // tuples must fit inside the prefix
        std::vector<int> abar(ni, 0);
        std::vector<int> bases(ni, bound);
        while (true) {
            out.strong_pairs.insert({index_of.at({i, abar}), index_of.at({j, abar})});
            if (ni == 0 || !advance(abar, bases)) break;
        }
    }
    return de;
}

void check_glued_arrow(const GluedArrow& a) {
    if (!a.source.fragment || !a.target.fragment) throw error("glued arrow: missing fragment");
    if (a.source.index < 0 || a.source.index >= a.source.fragment->count() ||
        a.target.index < 0 || a.target.index >= a.target.fragment->count())
        throw error("glued arrow: object index out of range");
    if (a.phi.source != a.target.fragment || a.phi.target != a.source.fragment)
        throw error("glued arrow: reduct functor endpoints disagree with the objects");
    if (!check_morphism(a.phi.alpha, *a.phi.source, *a.phi.target).ok())
        throw error("glued arrow: functor data is not a reduct functor");
    const auto& m = a.source.fragment->structures[a.source.index];
    auto red = reduct(a.target.fragment->structures[a.target.index], a.phi.alpha);
    if (!is_embedding_map(m, red, a.h)) throw error("glued arrow: map is not an embedding into the reduct");
    std::vector<int> image(a.h);
    std::sort(image.begin(), image.end());
    if (!closed_below(*a.source.fragment, red, image))
        throw error("glued arrow: image is not strong in the source class");
}

GluedArrow glue_identity(const GluedObject& obj) {
    if (!obj.fragment) throw error("glue_identity: missing fragment");
    GluedArrow a;
    a.source = obj;
    a.target = obj;
    a.phi = AecMorphism{LanguageMorphism::identity(*obj.fragment->lang), obj.fragment, obj.fragment};
    a.h.resize(obj.fragment->structures[obj.index].size);
    std::iota(a.h.begin(), a.h.end(), 0);
    return a;
}

GluedArrow glue_compose(const GluedArrow& outer, const GluedArrow& inner) {
    if (!(inner.target == outer.source))
        throw object_mismatch("glue_compose: inner target differs from outer source");
    GluedArrow out;
    out.source = inner.source;
    out.target = outer.target;
    out.phi.alpha = compose(outer.phi.alpha, inner.phi.alpha);
    out.phi.source = outer.phi.source;
    out.phi.target = inner.phi.target;
    out.h.resize(inner.h.size());
    for (size_t x = 0; x < inner.h.size(); ++x) out.h[x] = outer.h[inner.h[x]];
    check_glued_arrow(out);  // composites of valid arrows stay valid
    return out;
}

}  // namespace aec
