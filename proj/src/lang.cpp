#include "aec/lang.hpp"

#include <algorithm>
#include <functional>

#include "aec/util.hpp"

namespace aec {

std::string to_string(SymbolKind k) {
    switch (k) {
        case SymbolKind::Relation: return "relation";
        case SymbolKind::Function: return "function";
        case SymbolKind::Constant: return "constant";
    }
    return "?";
}

bool Language::has_symbol(const std::string& name) const {
    return relations.count(name) || functions.count(name) || constants.count(name);
}

SymbolKind Language::kind_of(const std::string& name) const {
    if (relations.count(name)) return SymbolKind::Relation;
    if (functions.count(name)) return SymbolKind::Function;
    if (constants.count(name)) return SymbolKind::Constant;
    throw error("unknown symbol: " + name);
}

int Language::arity_of(const std::string& name) const {
    if (auto it = relations.find(name); it != relations.end()) return it->second;
    if (auto it = functions.find(name); it != functions.end()) return it->second;
    if (constants.count(name)) return 0;
    throw error("unknown symbol: " + name);
}

int Language::symbol_count() const {
    return static_cast<int>(relations.size() + functions.size() + constants.size());
}

void Language::check() const {
    for (const auto& [name, ar] : relations) {
        if (ar < 1) throw error("relation " + name + " has non-positive arity");
        if (functions.count(name) || constants.count(name))
            throw error("symbol name used in two kinds: " + name);
    }
    for (const auto& [name, ar] : functions) {
        if (ar < 1) throw error("function " + name + " has non-positive arity");
        if (constants.count(name)) throw error("symbol name used in two kinds: " + name);
    }
}

const std::string& LanguageMorphism::apply(const std::string& name, SymbolKind kind) const {
    const std::map<std::string, std::string>* m = nullptr;
    switch (kind) {
        case SymbolKind::Relation: m = &rel_map; break;
        case SymbolKind::Function: m = &fun_map; break;
        case SymbolKind::Constant: m = &con_map; break;
    }
    auto it = m->find(name);
    if (it == m->end()) throw error("morphism undefined on " + to_string(kind) + " " + name);
    return it->second;
}

void LanguageMorphism::check() const {
    source.check();
    target.check();
    auto check_map = [&](const std::map<std::string, std::string>& m,
                         const std::map<std::string, int>& src,
                         const std::map<std::string, int>& tgt, const char* kind) {
        if (m.size() != src.size()) throw error(std::string("morphism not total on ") + kind + "s");
        std::set<std::string> images;
        for (const auto& [name, image] : m) {
            auto sit = src.find(name);
            if (sit == src.end()) throw error(std::string(kind) + " not in source: " + name);
            auto tit = tgt.find(image);
            if (tit == tgt.end()) throw error(std::string(kind) + " image not in target: " + image);
            if (sit->second != tit->second)
                throw error("arity mismatch: " + name + " -> " + image);
            if (!images.insert(image).second) throw error("morphism not injective at " + image);
        }
    };
    check_map(rel_map, source.relations, target.relations, "relation");
    check_map(fun_map, source.functions, target.functions, "function");
    if (con_map.size() != source.constants.size()) throw error("morphism not total on constants");
    std::set<std::string> images;
    for (const auto& [name, image] : con_map) {
        if (!source.constants.count(name)) throw error("constant not in source: " + name);
        if (!target.constants.count(image)) throw error("constant image not in target: " + image);
        if (!images.insert(image).second) throw error("morphism not injective at " + image);
    }
}

LanguageMorphism LanguageMorphism::identity(const Language& l) {
    LanguageMorphism m;
    m.source = l;
    m.target = l;
    for (const auto& [name, ar] : l.relations) m.rel_map[name] = name;
    for (const auto& [name, ar] : l.functions) m.fun_map[name] = name;
    for (const auto& name : l.constants) m.con_map[name] = name;
    return m;
}

bool LanguageMorphism::is_identity() const {
    if (source != target) return false;
    auto ident = [](const std::map<std::string, std::string>& m) {
        return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.first == kv.second; });
    };
    return ident(rel_map) && ident(fun_map) && ident(con_map);
}

LanguageMorphism compose(const LanguageMorphism& g, const LanguageMorphism& f) {
    if (f.target != g.source) throw error("compose: target of inner != source of outer");
    LanguageMorphism h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& [name, mid] : f.rel_map) h.rel_map[name] = g.rel_map.at(mid);
    for (const auto& [name, mid] : f.fun_map) h.fun_map[name] = g.fun_map.at(mid);
    for (const auto& [name, mid] : f.con_map) h.con_map[name] = g.con_map.at(mid);
    return h;
}

namespace {

// tagged symbol: side 0/1 plus name, for the pushout's union-find
struct Tagged {
    int side;
    std::string name;
    bool operator<(const Tagged& o) const {
        return side != o.side ? side < o.side : name < o.name;
    }
};

}  // namespace

LanguagePushout pushout(const LanguageMorphism& a0, const LanguageMorphism& a1) {
    a0.check();
    a1.check();
    if (a0.source != a1.source) throw error("pushout: span legs have different sources");

    // collect tagged symbols of both targets per kind
    struct Entry {
        SymbolKind kind;
        int arity;
    };
    std::map<Tagged, Entry> symbols;
    auto add_side = [&](int side, const Language& l) {
        for (const auto& [name, ar] : l.relations) symbols[{side, name}] = {SymbolKind::Relation, ar};
        for (const auto& [name, ar] : l.functions) symbols[{side, name}] = {SymbolKind::Function, ar};
        for (const auto& name : l.constants) symbols[{side, name}] = {SymbolKind::Constant, 0};
    };
    add_side(0, a0.target);
    add_side(1, a1.target);

    std::vector<Tagged> order;
    std::map<Tagged, int> index;
    for (const auto& [t, e] : symbols) {
        index[t] = static_cast<int>(order.size());
        order.push_back(t);
    }

    UnionFind uf(static_cast<int>(order.size()));
    auto unite_images = [&](const std::string& src, SymbolKind kind) {
        Tagged t0{0, a0.apply(src, kind)};
        Tagged t1{1, a1.apply(src, kind)};
        uf.unite(index.at(t0), index.at(t1));
    };
    for (const auto& [name, ar] : a0.source.relations) unite_images(name, SymbolKind::Relation);
    for (const auto& [name, ar] : a0.source.functions) unite_images(name, SymbolKind::Function);
    for (const auto& name : a0.source.constants) unite_images(name, SymbolKind::Constant);

    // kinds and arities must agree within a class (guaranteed by morphism checks)
    std::map<int, Entry> class_entry;
    for (const auto& [t, e] : symbols) {
        int root = uf.find(index.at(t));
        auto it = class_entry.find(root);
        if (it == class_entry.end()) {
            class_entry[root] = e;
        } else if (it->second.kind != e.kind || it->second.arity != e.arity) {
            throw error("pushout: kind or arity clash in identified class at " + t.name);
        }
    }

    // deterministic class names: side-0 representative wins its own name;
    // right-only classes append _r, _r2, ... on collision
    std::map<int, std::string> class_name;
    std::set<std::string> taken;
    auto fresh = [&](const std::string& base, int side) {
        if (!taken.count(base)) return base;
        std::string cand = base + "_r";
        int n = 2;
        while (taken.count(cand)) cand = base + "_r" + std::to_string(n++);
        if (side == 0) throw error("pushout: internal naming clash on left side at " + base);
        return cand;
    };
    for (const auto& t : order) {  // side 0 first by Tagged ordering
        int root = uf.find(index.at(t));
        if (class_name.count(root)) continue;
        std::string name = fresh(t.name, t.side);
        class_name[root] = name;
        taken.insert(name);
    }

    LanguagePushout po;
    po.left = a0;
    po.right = a1;
    for (const auto& [t, e] : symbols) {
        const std::string& name = class_name.at(uf.find(index.at(t)));
        switch (e.kind) {
            case SymbolKind::Relation: po.apex.relations[name] = e.arity; break;
            case SymbolKind::Function: po.apex.functions[name] = e.arity; break;
            case SymbolKind::Constant: po.apex.constants.insert(name); break;
        }
    }
    po.apex.check();

    auto make_inj = [&](int side, const Language& l) {
        LanguageMorphism m;
        m.source = l;
        m.target = po.apex;
        auto img = [&](const std::string& name) {
            return class_name.at(uf.find(index.at(Tagged{side, name})));
        };
        for (const auto& [name, ar] : l.relations) m.rel_map[name] = img(name);
        for (const auto& [name, ar] : l.functions) m.fun_map[name] = img(name);
        for (const auto& name : l.constants) m.con_map[name] = img(name);
        m.check();
        return m;
    };
    po.inj0 = make_inj(0, a0.target);
    po.inj1 = make_inj(1, a1.target);
    po.diagonal = compose(po.inj0, a0);
    if (!(po.diagonal == compose(po.inj1, a1))) throw error("pushout: square does not commute");
    return po;
}

std::pair<Language, LanguageMorphism> expand_with_constants(const Language& l,
                                                            const std::vector<std::string>& names) {
    Language out = l;
    for (const auto& n : names) {
        if (out.has_symbol(n)) throw error("expand_with_constants: name collision at " + n);
        out.constants.insert(n);
    }
    LanguageMorphism inc = LanguageMorphism::identity(l);
    inc.target = out;
    return {out, inc};
}

namespace {

// injective assignments item -> candidate, lexicographic in item order
void visit_assignments(const std::vector<std::string>& items,
                       const std::vector<std::vector<std::string>>& candidates, size_t at,
                       std::map<std::string, std::string>& acc, std::set<std::string>& used,
                       const std::function<void()>& done) {
    if (at == items.size()) {
        done();
        return;
    }
    for (const auto& c : candidates[at]) {
        if (used.count(c)) continue;
        used.insert(c);
        acc[items[at]] = c;
        visit_assignments(items, candidates, at + 1, acc, used, done);
        acc.erase(items[at]);
        used.erase(c);
    }
}

}  // namespace

std::vector<LanguageMorphism> all_language_morphisms(const Language& from, const Language& to) {
    std::vector<std::string> rel_items, fun_items, con_items;
    std::vector<std::vector<std::string>> rel_cand, fun_cand, con_cand;
    for (const auto& [name, ar] : from.relations) {
        rel_items.push_back(name);
        auto& c = rel_cand.emplace_back();
        for (const auto& [tname, tar] : to.relations)
            if (tar == ar) c.push_back(tname);
    }
    for (const auto& [name, ar] : from.functions) {
        fun_items.push_back(name);
        auto& c = fun_cand.emplace_back();
        for (const auto& [tname, tar] : to.functions)
            if (tar == ar) c.push_back(tname);
    }
    for (const auto& name : from.constants) {
        con_items.push_back(name);
        con_cand.emplace_back(to.constants.begin(), to.constants.end());
    }

    std::vector<LanguageMorphism> out;
    std::map<std::string, std::string> rels, funs, cons;
    std::set<std::string> used;
    visit_assignments(rel_items, rel_cand, 0, rels, used, [&] {
        std::set<std::string> used_f;
        visit_assignments(fun_items, fun_cand, 0, funs, used_f, [&] {
            std::set<std::string> used_c;
            visit_assignments(con_items, con_cand, 0, cons, used_c, [&] {
                LanguageMorphism m;
                m.source = from;
                m.target = to;
                m.rel_map = rels;
                m.fun_map = funs;
                m.con_map = cons;
                m.check();
                out.push_back(std::move(m));
            });
        });
    });
    return out;
}

}  // namespace aec
