#include "aec/structure.hpp"

#include <algorithm>

#include "aec/util.hpp"

namespace aec {

int table_index(const std::vector<int>& args, int size) {
    int idx = 0;
    for (int a : args) idx = idx * size + a;
    return idx;
}

int table_size(int arity, int size) {
    int n = 1;
    for (int i = 0; i < arity; ++i) n *= size;
    return n;
}

namespace {

// enumerate all tuples of given arity over {0..size-1} in row-major order
void for_each_tuple(int arity, int size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> t(arity, 0);
    while (true) {
        f(t);
        int i = arity - 1;
        while (i >= 0 && t[i] == size - 1) t[i--] = 0;
        if (i < 0) return;
        ++t[i];
    }
}

}  // namespace

bool FinStructure::rel_holds(const std::string& sym, const std::vector<int>& args) const {
    auto it = rels.find(sym);
    if (it == rels.end()) throw error("relation not interpreted: " + sym);
    return it->second.count(args) > 0;
}

int FinStructure::fun_value(const std::string& sym, const std::vector<int>& args) const {
    auto it = funcs.find(sym);
    if (it == funcs.end()) throw error("function not interpreted: " + sym);
    return it->second.at(table_index(args, size));
}

void FinStructure::check() const {
    if (!lang) throw error("structure has no language");
    lang->check();
    if (size < 1) throw error("structure universe must be nonempty");
    if (rels.size() != lang->relations.size() || funcs.size() != lang->functions.size() ||
        consts.size() != lang->constants.size())
        throw error("structure does not interpret exactly the language symbols");
    for (const auto& [sym, tuples] : rels) {
        auto it = lang->relations.find(sym);
        if (it == lang->relations.end()) throw error("unknown relation: " + sym);
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) != it->second) throw error("tuple arity mismatch in " + sym);
            for (int x : t)
                if (x < 0 || x >= size) throw error("tuple element out of range in " + sym);
        }
    }
    for (const auto& [sym, table] : funcs) {
        auto it = lang->functions.find(sym);
        if (it == lang->functions.end()) throw error("unknown function: " + sym);
        if (static_cast<int>(table.size()) != table_size(it->second, size))
            throw error("function table has wrong arity/size: " + sym);
        for (int v : table)
            if (v < 0 || v >= size) throw error("function value out of range in " + sym);
    }
    for (const auto& [sym, v] : consts) {
        if (!lang->constants.count(sym)) throw error("unknown constant: " + sym);
        if (v < 0 || v >= size) throw error("constant value out of range: " + sym);
    }
}

std::vector<int> FinStructure::encode() const {
    std::vector<int> out;
    out.push_back(size);
    for (const auto& [sym, tuples] : rels) {
        out.push_back(-1);
        for (const auto& t : tuples) {
            out.insert(out.end(), t.begin(), t.end());
            out.push_back(-2);
        }
    }
    for (const auto& [sym, table] : funcs) {
        out.push_back(-3);
        out.insert(out.end(), table.begin(), table.end());
    }
    for (const auto& [sym, v] : consts) {
        out.push_back(-4);
        out.push_back(v);
    }
    return out;
}

bool FinStructure::same_content(const FinStructure& other) const {
    if (size != other.size) return false;
    if (lang != other.lang && !(*lang == *other.lang)) return false;
    return rels == other.rels && funcs == other.funcs && consts == other.consts;
}

FinStructure relabel(const FinStructure& m, const std::vector<int>& perm) {
    FinStructure out;
    out.lang = m.lang;
    out.size = m.size;
    for (const auto& [sym, tuples] : m.rels) {
        auto& dst = out.rels[sym];
        for (const auto& t : tuples) {
            std::vector<int> u(t.size());
            for (size_t i = 0; i < t.size(); ++i) u[i] = perm[t[i]];
            dst.insert(std::move(u));
        }
    }
    for (const auto& [sym, table] : m.funcs) {
        int arity = m.lang->functions.at(sym);
        std::vector<int> dst(table.size());
        for_each_tuple(arity, m.size, [&](const std::vector<int>& t) {
            std::vector<int> u(t.size());
            for (size_t i = 0; i < t.size(); ++i) u[i] = perm[t[i]];
            dst[table_index(u, m.size)] = perm[table[table_index(t, m.size)]];
        });
        out.funcs[sym] = std::move(dst);
    }
    for (const auto& [sym, v] : m.consts) out.consts[sym] = perm[v];
    return out;
}

std::vector<int> canonical_encoding(const FinStructure& m) {
    std::vector<int> perm(m.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = m.encode();
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> cand = relabel(m, perm).encode();
        if (cand < best) best = std::move(cand);
    }
    return best;
}

FinStructure reduct(const FinStructure& m, const LanguageMorphism& alpha) {
    if (!(*m.lang == alpha.target)) throw error("reduct: structure not over target language");
    FinStructure out;
    out.lang = std::make_shared<Language>(alpha.source);
    out.size = m.size;
    for (const auto& [sym, img] : alpha.rel_map) out.rels[sym] = m.rels.at(img);
    for (const auto& [sym, img] : alpha.fun_map) out.funcs[sym] = m.funcs.at(img);
    for (const auto& [sym, img] : alpha.con_map) out.consts[sym] = m.consts.at(img);
    return out;
}

std::variant<Induced, NotClosed> induced_substructure(const FinStructure& n, const std::vector<int>& X) {
    if (X.empty()) throw error("induced_substructure: empty subset");
    for (size_t i = 0; i + 1 < X.size(); ++i)
        if (X[i] >= X[i + 1]) throw error("induced_substructure: subset not sorted/unique");
    if (X.front() < 0 || X.back() >= n.size) throw error("induced_substructure: subset out of range");

    std::vector<int> pos(n.size, -1);  // old element -> new index
    for (size_t i = 0; i < X.size(); ++i) pos[X[i]] = static_cast<int>(i);
    int k = static_cast<int>(X.size());

    for (const auto& [sym, v] : n.consts)
        if (pos[v] < 0) return NotClosed{sym, {}, v};

    Induced out;
    out.universe = X;
    out.structure.lang = n.lang;
    out.structure.size = k;
    for (const auto& [sym, v] : n.consts) out.structure.consts[sym] = pos[v];
    for (const auto& [sym, tuples] : n.rels) {
        auto& dst = out.structure.rels[sym];
        for (const auto& t : tuples) {
            std::vector<int> u(t.size());
            bool inside = true;
            for (size_t i = 0; i < t.size() && inside; ++i) {
                if (pos[t[i]] < 0) inside = false;
                else u[i] = pos[t[i]];
            }
            if (inside) dst.insert(std::move(u));
        }
    }
    std::optional<NotClosed> failure;
    for (const auto& [sym, table] : n.funcs) {
        int arity = n.lang->functions.at(sym);
        std::vector<int> dst(table_size(arity, k));
        for_each_tuple(arity, k, [&](const std::vector<int>& t) {
            if (failure) return;
            std::vector<int> old(t.size());
            for (size_t i = 0; i < t.size(); ++i) old[i] = X[t[i]];
            int v = table[table_index(old, n.size)];
            if (pos[v] < 0) {
                failure = NotClosed{sym, old, v};
                return;
            }
            dst[table_index(t, k)] = pos[v];
        });
        if (failure) return *failure;
        out.structure.funcs[sym] = std::move(dst);
    }
    return out;
}

bool is_embedding_map(const FinStructure& a, const FinStructure& b, const Map& m) {
    if (static_cast<int>(m.size()) != a.size) return false;
    std::vector<bool> used(b.size, false);
    for (int x : m) {
        if (x < 0 || x >= b.size || used[x]) return false;
        used[x] = true;
    }
    for (const auto& [sym, v] : a.consts)
        if (m[v] != b.consts.at(sym)) return false;
    for (const auto& [sym, tuples] : a.rels) {
        int arity = a.lang->relations.at(sym);
        bool ok = true;
        for_each_tuple(arity, a.size, [&](const std::vector<int>& t) {
            if (!ok) return;
            std::vector<int> u(t.size());
            for (size_t i = 0; i < t.size(); ++i) u[i] = m[t[i]];
            if (tuples.count(t) != b.rels.at(sym).count(u)) ok = false;
        });
        if (!ok) return false;
    }
    for (const auto& [sym, table] : a.funcs) {
        int arity = a.lang->functions.at(sym);
        const auto& btable = b.funcs.at(sym);
        bool ok = true;
        for_each_tuple(arity, a.size, [&](const std::vector<int>& t) {
            if (!ok) return;
            std::vector<int> u(t.size());
            for (size_t i = 0; i < t.size(); ++i) u[i] = m[t[i]];
            if (m[table[table_index(t, a.size)]] != btable[table_index(u, b.size)]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_isomorphism_map(const FinStructure& a, const FinStructure& b, const Map& m) {
    return a.size == b.size && is_embedding_map(a, b, m);
}

namespace {

// per-position relation degree vectors; an embedding needs
// deg_a(x) <= deg_b(m(x)) componentwise
std::vector<std::vector<int>> degree_profile(const FinStructure& s) {
    std::vector<std::vector<int>> deg(s.size);
    for (auto& d : deg) d.reserve(8);
    for (const auto& [sym, tuples] : s.rels) {
        int arity = s.lang->relations.at(sym);
        std::vector<std::vector<int>> cnt(s.size, std::vector<int>(arity, 0));
        for (const auto& t : tuples)
            for (int p = 0; p < arity; ++p) ++cnt[t[p]][p];
        for (int x = 0; x < s.size; ++x)
            for (int p = 0; p < arity; ++p) deg[x].push_back(cnt[x][p]);
    }
    return deg;
}

struct Search {
    const FinStructure& a;
    const FinStructure& b;
    const std::function<bool(const Map&)>& visit;
    Map map;
    std::vector<bool> used;
    std::vector<std::vector<int>> deg_a, deg_b;
    bool stopped = false;

    Search(const FinStructure& a, const FinStructure& b,
           const std::function<bool(const Map&)>& visit)
        : a(a), b(b), visit(visit), map(a.size, -1), used(b.size, false) {
        deg_a = degree_profile(a);
        deg_b = degree_profile(b);
    }

    // checks constraints that became decidable once `last` was assigned
    bool consistent(int last) {
        for (size_t i = 0; i < deg_a[last].size(); ++i)
            if (deg_a[last][i] > deg_b[map[last]][i]) return false;
        for (const auto& [sym, v] : a.consts)
            if (v == last && map[v] != b.consts.at(sym)) return false;
        for (const auto& [sym, tuples] : a.rels) {
            int arity = a.lang->relations.at(sym);
            const auto& btuples = b.rels.at(sym);
            bool ok = true;
            for_each_tuple(arity, last + 1, [&](const std::vector<int>& t) {
                if (!ok) return;
                if (std::find(t.begin(), t.end(), last) == t.end()) return;
                std::vector<int> u(t.size());
                for (size_t i = 0; i < t.size(); ++i) u[i] = map[t[i]];
                if (tuples.count(t) != btuples.count(u)) ok = false;
            });
            if (!ok) return false;
        }
        for (const auto& [sym, table] : a.funcs) {
            int arity = a.lang->functions.at(sym);
            const auto& btable = b.funcs.at(sym);
            bool ok = true;
            for_each_tuple(arity, last + 1, [&](const std::vector<int>& t) {
                if (!ok) return;
                bool involves = std::find(t.begin(), t.end(), last) != t.end();
                int v = table[table_index(t, a.size)];
                if (!involves && v != last) return;
                if (v > last) return;  // value not assigned yet
                std::vector<int> u(t.size());
                for (size_t i = 0; i < t.size(); ++i) u[i] = map[t[i]];
                if (map[v] != btable[table_index(u, b.size)]) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }

    void run(int x) {
        if (stopped) return;
        if (x == a.size) {
            if (!visit(map)) stopped = true;
            return;
        }
        for (int y = 0; y < b.size && !stopped; ++y) {
            if (used[y]) continue;
            map[x] = y;
            used[y] = true;
            if (consistent(x)) run(x + 1);
            used[y] = false;
            map[x] = -1;
        }
    }
};

}  // namespace

void visit_embeddings(const FinStructure& a, const FinStructure& b,
                      const std::function<bool(const Map&)>& visit) {
    if (!(*a.lang == *b.lang)) throw error("embedding search: language mismatch");
    if (a.size > b.size) return;
    Search s(a, b, visit);
    s.run(0);
}

std::vector<Map> find_embeddings(const FinStructure& a, const FinStructure& b,
                                 std::optional<int> limit) {
    std::vector<Map> out;
    visit_embeddings(a, b, [&](const Map& m) {
        out.push_back(m);
        return !limit || static_cast<int>(out.size()) < *limit;
    });
    return out;
}

void visit_isomorphisms(const FinStructure& a, const FinStructure& b,
                        const std::function<bool(const Map&)>& visit) {
    if (!(*a.lang == *b.lang)) throw error("isomorphism search: language mismatch");
    if (a.size != b.size) return;
    visit_embeddings(a, b, visit);  // equal sizes: injective = bijective
}

std::vector<Map> find_isomorphisms(const FinStructure& a, const FinStructure& b,
                                   std::optional<int> limit) {
    std::vector<Map> out;
    visit_isomorphisms(a, b, [&](const Map& m) {
        out.push_back(m);
        return !limit || static_cast<int>(out.size()) < *limit;
    });
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k) {
        auto part = subsets_of_size(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace aec
