#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aec/fragment.hpp"
#include "aec/theory.hpp"
#include "aec/util.hpp"

namespace aec {

/// Bare sets of sizes 1..n ordered by inclusion: the terminal class, every
/// subset of a member is strong.
AecFragment terminal_fragment(int n);

/// Every labeled structure over lang with size 1..max_size, ordered by
/// literal initial-segment inclusion. Throws budget_error when more than
/// budget candidate structures would be enumerated.
AecFragment full_structure_fragment(std::shared_ptr<const Language> lang, int max_size,
                                    long long budget);

/// Enumerate all labeled structures over lang of exactly the given size in
/// lexicographic slot order. Visitor returns false to stop early.
void visit_labeled_structures(std::shared_ptr<const Language> lang, int size,
                              const std::function<bool(FinStructure&&)>& visit);

/// Insert (i, j) for every listed i that literally equals a closed initial
/// segment of j. Assumes listed structures are pairwise distinct as labeled
/// objects, so equal-size matches can only be reflexive.
void add_literal_prefix_pairs(AecFragment& f);

/// Two reduct functors into a shared base class, plus the pushout of their
/// language maps. The pullback class lives over the pushout apex.
struct PullbackConfig {
    const AecFragment* base = nullptr;  // K over L
    AecMorphism left;                   // K0 over L0, alpha0: L -> L0
    AecMorphism right;                  // K1 over L1, alpha1: L -> L1
    LanguagePushout pushout;            // of alpha0, alpha1

    void check() const;  // shared base, matching languages
};

PullbackConfig make_pullback_config(const AecFragment& base, const AecMorphism& left,
                                    const AecMorphism& right);

/// Apex-language structures whose two projections are members, ordered by
/// literal prefix inclusion that is strong on both sides. Membership along
/// the diagonal reduct is implied by the component memberships and is
/// re-checked; a violation throws (it would mean a broken morphism).
/// Throws budget_error per the enumeration budget.
AecFragment pullback_fragment(const PullbackConfig& cfg, long long budget);

/// One point of the class over a base structure m and index names: a listed
/// target, an arrow from m into it, and an interpretation of the names.
struct Triple {
    int n_index;             // listed target structure
    Map f;                   // embedding |m| -> target, image strong
    std::vector<int> abar;   // one target element per index name

    bool operator==(const Triple&) const = default;
};

/// The class of pointed extensions of m: each triple is materialized as a
/// structure over base language + one constant per element of m ("m0", ...)
/// + one constant per index name ("i_<name>"). The constant prefixes keep
/// the two origins disjoint.
struct PointedClass {
    const AecFragment* base = nullptr;
    FinStructure base_point;                       // m, any member structure
    std::vector<std::string> index_names;
    std::shared_ptr<const Language> expanded_lang;
    LanguageMorphism inclusion;                    // base language -> expanded
    std::vector<Triple> triples;
    AecFragment fragment;                          // triples[i] materialized at index i
};

PointedClass pointed_class(const AecFragment& f, const FinStructure& m,
                           const std::vector<std::string>& index_names);
PointedClass pointed_class(const AecFragment& f, int m_index,
                           const std::vector<std::string>& index_names);

/// Members paired with a tuple of named constants; strong pairs keep the
/// underlying pair and demand equal tuples. With no names this is f itself.
AecFragment diagram_expansion(const AecFragment& f, const std::vector<std::string>& names);

/// Same expansion plus the provenance of each listed structure.
struct DiagramExpansion {
    AecFragment fragment;
    std::vector<std::pair<int, std::vector<int>>> origin;  // index -> (member, tuple)
};

DiagramExpansion diagram_expansion_indexed(const AecFragment& f,
                                           const std::vector<std::string>& names);

/// Objects of the gluing category: a listed structure inside its fragment.
struct GluedObject {
    const AecFragment* fragment = nullptr;
    int index = -1;

    bool operator==(const GluedObject&) const = default;
};

/// Arrow (m, k) -> (m', k'): a reduct functor phi from k' into k together
/// with an embedding of m into the phi-reduct of m', strong in k.
struct GluedArrow {
    GluedObject source, target;
    AecMorphism phi;  // phi.source == target.fragment, phi.target == source.fragment
    Map h;            // |m| -> |m'|, embedding into reduct(m', phi.alpha)
};

struct object_mismatch : error {
    explicit object_mismatch(const std::string& what) : error(what) {}
};

// throws aec::error with a reason when the arrow data is inconsistent
void check_glued_arrow(const GluedArrow& a);

GluedArrow glue_identity(const GluedObject& obj);

// outer after inner; throws object_mismatch when the objects do not meet
GluedArrow glue_compose(const GluedArrow& outer, const GluedArrow& inner);

}  // namespace aec
