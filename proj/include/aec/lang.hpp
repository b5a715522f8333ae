#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aec {

enum class SymbolKind { Relation, Function, Constant };

std::string to_string(SymbolKind k);

/// Finite relational/functional signature. Names are pairwise disjoint
/// across the three kinds; arities are >= 1.
struct Language {
    std::map<std::string, int> relations;
    std::map<std::string, int> functions;
    std::set<std::string> constants;

    bool has_symbol(const std::string& name) const;
    SymbolKind kind_of(const std::string& name) const;  // throws if absent
    int arity_of(const std::string& name) const;        // constants -> 0
    int symbol_count() const;

    // throws aec::error on duplicate names or non-positive arity
    void check() const;

    bool operator==(const Language&) const = default;
    auto operator<=>(const Language&) const = default;
};

/// Injective, kind- and arity-preserving symbol map.
struct LanguageMorphism {
    Language source;
    Language target;
    std::map<std::string, std::string> rel_map;
    std::map<std::string, std::string> fun_map;
    std::map<std::string, std::string> con_map;

    const std::string& apply(const std::string& name, SymbolKind kind) const;
    void check() const;  // totality, image existence, kind/arity, injectivity per kind

    static LanguageMorphism identity(const Language& l);
    bool is_identity() const;

    bool operator==(const LanguageMorphism&) const = default;
};

// g after f; throws on f.target != g.source
LanguageMorphism compose(const LanguageMorphism& g, const LanguageMorphism& f);

/// Colimit of a span a0: L -> L0, a1: L -> L1. Apex identifies a0(s) with
/// a1(s) for each source symbol s and nothing else.
struct LanguagePushout {
    LanguageMorphism left;    // a0
    LanguageMorphism right;   // a1
    Language apex;
    LanguageMorphism inj0;    // L0 -> apex
    LanguageMorphism inj1;    // L1 -> apex
    LanguageMorphism diagonal;  // L -> apex, = inj0 . a0 = inj1 . a1
};

// throws on a0.source != a1.source
LanguagePushout pushout(const LanguageMorphism& a0, const LanguageMorphism& a1);

// L plus fresh constants; returns the expansion and the inclusion L -> L'.
// Throws aec::error on a name collision with existing symbols or duplicates.
std::pair<Language, LanguageMorphism> expand_with_constants(const Language& l,
                                                            const std::vector<std::string>& names);

// every injective kind- and arity-preserving symbol map, in lexicographic
// order of the assignment vectors; empty when arities cannot be matched
std::vector<LanguageMorphism> all_language_morphisms(const Language& from, const Language& to);

}  // namespace aec
