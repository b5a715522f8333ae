#pragma once

#include <optional>
#include <set>
#include <vector>

#include "aec/fragment.hpp"
#include "aec/lang.hpp"

namespace aec {

/// Partition of the listed structures into connection classes: two
/// structures are equivalent when a zigzag of arrows (each hop in either
/// direction) links them. Component ids are the least index in the class.
struct TheoryPartition {
    std::vector<int> component_of;             // structure index -> component id
    std::vector<std::vector<int>> components;  // ascending ids, ascending members

    int component_count() const { return static_cast<int>(components.size()); }
};

TheoryPartition connection_partition(FragmentCache& cache);
TheoryPartition connection_partition(const AecFragment& f);

/// Union of connection classes, tracked by ids plus the flattened index set.
struct ClosedTheory {
    std::set<int> component_ids;
    std::set<int> structures;
};

std::vector<ClosedTheory> max_theories(const TheoryPartition& p);
bool is_closed_theory(const TheoryPartition& p, const std::set<int>& structure_subset);

/// Reduct functor between fragments: alpha maps the target fragment's
/// language into the source fragment's language, and taking alpha-reducts
/// carries source structures (and their strong pairs) into the target.
/// Holds views; both fragments must outlive the morphism.
struct AecMorphism {
    LanguageMorphism alpha;            // target's language -> source's language
    const AecFragment* source = nullptr;  // fragment over alpha.target
    const AecFragment* target = nullptr;  // fragment over alpha.source
};

struct MorphismFailure {
    std::string kind;  // "member": reduct of structure i missing from target;
                       // "pair": strong pair (i,j) whose reduct is not strong
    int i = -1;
    int j = -1;
};

struct MorphismCheck {
    std::optional<AecMorphism> morphism;
    std::optional<MorphismFailure> failure;
    bool ok() const { return morphism.has_value(); }
};

MorphismCheck check_morphism(const LanguageMorphism& alpha, const AecFragment& source,
                             const AecFragment& target);

/// Least closed theory of the target containing the reducts of the given
/// closed theory's structures.
ClosedTheory induced_theory(const AecMorphism& m, const ClosedTheory& t_source);

struct ReductEquivalenceReport {
    bool holds = true;
    // source-equivalent pair whose reducts land in different target classes
    std::optional<std::pair<int, int>> counterexample;
};

/// Connected structures stay connected after taking reducts. A failure is
/// impossible for a well-formed morphism; the partition override exists so
/// tests can feed a corrupted partition and watch the check catch it.
ReductEquivalenceReport check_reduct_equivalence(const AecMorphism& m);
ReductEquivalenceReport check_reduct_equivalence(const AecMorphism& m,
                                                 const TheoryPartition& source_partition);

}  // namespace aec
