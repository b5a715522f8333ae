#include "aec/fragment.hpp"

#include <algorithm>

#include "aec/util.hpp"

namespace aec {

void AecFragment::check() const {
    if (!lang) throw error("fragment has no language");
    for (const auto& s : structures) {
        s.check();
        if (!(*s.lang == *lang)) throw error("fragment structure over a different language");
    }
    for (const auto& [i, j] : strong_pairs)
        if (i < 0 || j < 0 || i >= count() || j >= count())
            throw error("strong pair index out of range");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
    }
    return "?";
}

FragmentCache::FragmentCache(const AecFragment& f) : f_(&f) {
    canon_.reserve(f.structures.size());
    for (int i = 0; i < f.count(); ++i) {
        canon_.push_back(canonical_encoding(f.structures[i]));
        auto it = canon_min_.find(canon_.back());
        if (it == canon_min_.end()) canon_min_[canon_.back()] = i;
    }
    for (const auto& [i, j] : f.strong_pairs) {
        auto& sizes = sub_sizes_[j];
        int s = f.structures[i].size;
        if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) sizes.push_back(s);
    }
    for (auto& [j, sizes] : sub_sizes_) std::sort(sizes.begin(), sizes.end());
}

std::optional<int> FragmentCache::member_index(const std::vector<int>& canon_encoding) const {
    auto it = canon_min_.find(canon_encoding);
    if (it == canon_min_.end()) return std::nullopt;
    return it->second;
}

std::optional<IsoWitness> FragmentCache::member(const FinStructure& m) {
    if (!(*m.lang == *f_->lang)) throw error("member: query over a different language");
    auto idx = member_index(canonical_encoding(m));
    if (!idx) return std::nullopt;
    auto isos = find_isomorphisms(f_->structures[*idx], m, 1);
    if (isos.empty()) throw error("canonical encodings equal but no isomorphism found");
    return IsoWitness{*idx, isos.front()};
}

std::optional<ClosedBelowWitness> FragmentCache::search(const FinStructure& b,
                                                        const std::vector<int>& bcanon,
                                                        const std::vector<int>& X) {
    int k = static_cast<int>(X.size());
    std::optional<ClosedBelowWitness> best;
    for (int j = 0; j < f_->count(); ++j) {
        if (f_->structures[j].size != b.size || canon_[j] != bcanon) continue;
        auto sit = sub_sizes_.find(j);
        if (sit == sub_sizes_.end() ||
            !std::binary_search(sit->second.begin(), sit->second.end(), k))
            continue;
        int sub = -1;
        for (const auto& [i, jj] : f_->strong_pairs) {
            if (jj == j && f_->structures[i].size == k) { sub = i; break; }
        }
        Map found;
        visit_isomorphisms(f_->structures[j], b, [&](const Map& iso) {
            for (int x = 0; x < k; ++x)
                if (!std::binary_search(X.begin(), X.end(), iso[x])) return true;
            found = iso;
            return false;
        });
        if (!found.empty()) { best = ClosedBelowWitness{sub, j, found}; break; }
    }
    return best;
}

std::optional<ClosedBelowWitness> FragmentCache::closed_below(const FinStructure& b,
                                                              const std::vector<int>& X) {
    if (!(*b.lang == *f_->lang)) throw error("closed_below: query over a different language");
    if (b.size > 60) throw error("closed_below: structure too large for subset enumeration");
    if (X.empty()) return std::nullopt;
    std::uint64_t mask = 0;
    for (int x : X) {
        if (x < 0 || x >= b.size) throw error("closed_below: subset out of range");
        mask |= (1ULL << x);
    }
    auto key = std::make_pair(b.encode(), mask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto result = search(b, canonical_encoding(b), X);
    memo_.emplace(std::move(key), result);
    return result;
}

std::optional<ClosedBelowWitness> FragmentCache::closed_below_listed(int b, const std::vector<int>& X) {
    return closed_below(f_->structures[b], X);
}

std::optional<IsoWitness> member_up_to_iso(const AecFragment& f, const FinStructure& m) {
    FragmentCache cache(f);
    return cache.member(m);
}

std::optional<ClosedBelowWitness> closed_below(const AecFragment& f, const FinStructure& b,
                                               const std::vector<int>& X) {
    FragmentCache cache(f);
    return cache.closed_below(b, X);
}

std::vector<KEmbedding> cat_arrows(FragmentCache& cache, int a, int b) {
    const auto& f = cache.fragment();
    std::vector<KEmbedding> out;
    visit_embeddings(f.structures[a], f.structures[b], [&](const Map& m) {
        std::vector<int> image(m);
        std::sort(image.begin(), image.end());
        if (cache.closed_below_listed(b, image)) out.push_back(KEmbedding{a, b, m});
        return true;
    });
    return out;
}

std::vector<KEmbedding> cat_arrows(const AecFragment& f, int a, int b) {
    FragmentCache cache(f);
    return cat_arrows(cache, a, b);
}

bool has_cat_arrow(FragmentCache& cache, int a, int b) {
    const auto& f = cache.fragment();
    bool found = false;
    visit_embeddings(f.structures[a], f.structures[b], [&](const Map& m) {
        std::vector<int> image(m);
        std::sort(image.begin(), image.end());
        if (cache.closed_below_listed(b, image)) { found = true; return false; }
        return true;
    });
    return found;
}

KEmbedding identity_k(const AecFragment& f, int i) {
    if (i < 0 || i >= f.count()) throw error("identity_k: index out of range");
    Map m(f.structures[i].size);
    std::iota(m.begin(), m.end(), 0);
    return KEmbedding{i, i, m};
}

KEmbedding compose_k(const AecFragment& f, const KEmbedding& g, const KEmbedding& kf) {
    if (kf.target != g.source) throw error("compose_k: target of inner != source of outer");
    Map m(kf.map.size());
    for (size_t x = 0; x < kf.map.size(); ++x) m[x] = g.map[kf.map[x]];
    if (!is_embedding_map(f.structures[kf.source], f.structures[g.target], m))
        throw error("compose_k: composite is not an embedding (invalid fragment)");
    std::vector<int> image(m);
    std::sort(image.begin(), image.end());
    if (!closed_below(f, f.structures[g.target], image))
        throw error("compose_k: composite image not strong-below target (invalid fragment)");
    return KEmbedding{kf.source, g.target, m};
}

bool ValidationReport::ok() const {
    auto fine = [](const AxiomReport& a) { return a.verdict != Verdict::Fail; };
    return fine(order) && fine(isomorphism) && fine(coherence) && fine(reunion) && fine(ls);
}

namespace {

std::vector<int> mask_to_subset(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (mask & (1ULL << x)) out.push_back(x);
    return out;
}

// positions of X within Y (both sorted, X subset of Y)
std::vector<int> positions_in(const std::vector<int>& X, const std::vector<int>& Y) {
    std::vector<int> out;
    out.reserve(X.size());
    for (int x : X) {
        auto it = std::lower_bound(Y.begin(), Y.end(), x);
        out.push_back(static_cast<int>(it - Y.begin()));
    }
    return out;
}

}  // namespace

ValidationReport validate(const AecFragment& f) {
    f.check();
    for (const auto& s : f.structures)
        if (s.size > 60) throw error("validate: structure too large for subset enumeration");
    ValidationReport rep;
    rep.isomorphism = {Verdict::Vacuous, "membership is closed under isomorphism by construction"};
    rep.reunion = {Verdict::Vacuous, "no infinite chains exist in a finite presentation"};
    rep.order.note = "partial order on listed pairs; literal substructure; closure transitivity";
    rep.coherence.note = "checked over all strong subset chains of each listed structure";
    rep.ls.note = "least additive overhead over all nonempty subsets";

    auto order_fail = [&](OrderWitness w) {
        rep.order.verdict = Verdict::Fail;
        rep.order_witness = std::move(w);
    };

    // listed-level partial order
    for (int i = 0; i < f.count() && !rep.order_witness; ++i)
        if (!f.strong_pairs.count({i, i}))
            order_fail({"missing-reflexive", i, i, -1, {}, {}, "no reflexive pair"});
    for (const auto& [i, j] : f.strong_pairs) {
        if (rep.order_witness) break;
        if (i != j && f.strong_pairs.count({j, i}))
            order_fail({"not-antisymmetric", i, j, -1, {}, {}, "both directions listed"});
    }
    for (const auto& [i, j] : f.strong_pairs) {
        if (rep.order_witness) break;
        for (const auto& [j2, k] : f.strong_pairs) {
            if (j2 != j) continue;
            if (!f.strong_pairs.count({i, k})) {
                order_fail({"not-transitive", i, j, k, {}, {}, "missing composite pair"});
                break;
            }
        }
    }

    // literal substructure condition on every listed pair
    for (const auto& [i, j] : f.strong_pairs) {
        if (rep.order_witness) break;
        const auto& a = f.structures[i];
        const auto& b = f.structures[j];
        if (a.size > b.size) {
            order_fail({"not-literal-substructure", i, j, -1, {}, {}, "sub larger than super"});
            break;
        }
        std::vector<int> prefix(a.size);
        std::iota(prefix.begin(), prefix.end(), 0);
        auto ind = induced_substructure(b, prefix);
        if (std::holds_alternative<NotClosed>(ind)) {
            const auto& nc = std::get<NotClosed>(ind);
            order_fail({"not-literal-substructure", i, j, -1, {}, {},
                        "prefix not closed under " + nc.symbol});
            break;
        }
        if (!std::get<Induced>(ind).structure.same_content(a)) {
            order_fail({"not-literal-substructure", i, j, -1, {}, {},
                        "prefix content differs from listed sub"});
            break;
        }
    }

    FragmentCache cache(f);

    // strong subsets per listed structure: function-closed, nonempty, closed-below
    int n = f.count();
    std::vector<std::vector<std::uint64_t>> strong_subsets(n);   // closed-below subsets
    std::vector<std::vector<std::uint64_t>> closed_subsets(n);   // merely induced-defined
    for (int p = 0; p < n; ++p) {
        const auto& P = f.structures[p];
        for (std::uint64_t mask = 1; mask < (1ULL << P.size); ++mask) {
            auto X = mask_to_subset(mask, P.size);
            auto ind = induced_substructure(P, X);
            if (std::holds_alternative<NotClosed>(ind)) continue;
            closed_subsets[p].push_back(mask);
            if (cache.closed_below(P, X)) strong_subsets[p].push_back(mask);
        }
    }

    // coherence and closure transitivity share the nested-subset sweep
    for (int p = 0; p < n && !rep.coherence_witness; ++p) {
        const auto& P = f.structures[p];
        for (std::uint64_t ymask : strong_subsets[p]) {
            if (rep.coherence_witness && rep.order_witness) break;
            auto Y = mask_to_subset(ymask, P.size);
            auto yind = std::get<Induced>(induced_substructure(P, Y));
            for (std::uint64_t xmask : closed_subsets[p]) {
                if ((xmask & ymask) != xmask || xmask == ymask) continue;
                auto X = mask_to_subset(xmask, P.size);
                bool cxp = std::binary_search(strong_subsets[p].begin(), strong_subsets[p].end(), xmask);
                bool cxy = cache.closed_below(yind.structure, positions_in(X, Y)).has_value();
                if (cxp && !cxy && !rep.coherence_witness) {
                    rep.coherence.verdict = Verdict::Fail;
                    rep.coherence_witness = CoherenceWitness{p, X, Y};
                }
                if (cxy && !cxp && !rep.order_witness)
                    order_fail({"closure-not-transitive", p, -1, -1, X, Y,
                                "X strong in Y and Y strong in P but X not strong in P"});
            }
        }
    }

    // ls: per structure and nonempty subset, least strong superset overhead
    int ls = 0;
    for (int p = 0; p < n && !rep.ls_witness; ++p) {
        const auto& P = f.structures[p];
        for (std::uint64_t xmask = 1; xmask < (1ULL << P.size); ++xmask) {
            int best = -1;
            int xbits = __builtin_popcountll(xmask);
            for (std::uint64_t ymask : strong_subsets[p]) {
                if ((xmask & ymask) != xmask) continue;
                int overhead = __builtin_popcountll(ymask) - xbits;
                if (best < 0 || overhead < best) best = overhead;
                if (best == 0) break;
            }
            if (best < 0) {
                rep.ls.verdict = Verdict::Fail;
                rep.ls_witness = LsWitness{p, mask_to_subset(xmask, P.size)};
                break;
            }
            ls = std::max(ls, best);
        }
    }
    if (!rep.ls_witness) rep.ls_number = ls;
    return rep;
}

RestrictedFragment restrict_to(const AecFragment& f, const std::vector<int>& indices) {
    RestrictedFragment out;
    out.fragment.lang = f.lang;
    std::vector<int> new_index(f.count(), -1);
    for (int old : indices) {
        if (old < 0 || old >= f.count()) throw error("restrict_to: index out of range");
        if (new_index[old] >= 0) throw error("restrict_to: duplicate index");
        new_index[old] = static_cast<int>(out.fragment.structures.size());
        out.fragment.structures.push_back(f.structures[old]);
        out.kept.push_back(old);
    }
    for (const auto& [i, j] : f.strong_pairs)
        if (new_index[i] >= 0 && new_index[j] >= 0)
            out.fragment.strong_pairs.insert({new_index[i], new_index[j]});
    return out;
}

}  // namespace aec
