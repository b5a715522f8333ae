#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aec/construct.hpp"
#include "aec/fragment.hpp"
#include "aec/theory.hpp"
#include "aec/util.hpp"

namespace aec {

/// Non-amalgamable span: two arrows out of the same listed structure.
struct SpanWitness {
    KEmbedding f0, f1;
};

/// Failing pair of listed indices; which lists they index depends on the
/// axiom (both in F, or one in each component class).
struct PairWitness {
    int a = -1, b = -1;
};

struct AxiomVerdict {
    std::string axiom;
    bool holds = false;
    std::string note;
    std::optional<SpanWitness> span;
    std::optional<PairWitness> pair;
    std::optional<int> witness_index;  // found object (per axiom doc)
    std::optional<int> bound;          // largest witness object used on success
};

/// Every span amalgamates: f0: M -> N0, f1: M -> N1 admit g0, g1 into a
/// common listed P with g0 . f0 = g1 . f1.
AxiomVerdict check_ap(const AecFragment& f);

/// Every two listed structures admit arrows into a common listed P.
AxiomVerdict check_jep(const AecFragment& f);

/// Zigzag-equivalent structures admit a cocone; the converse holds by
/// construction and is re-asserted.
AxiomVerdict check_lrp(const AecFragment& f);

struct LrpNotSatisfied : error {
    explicit LrpNotSatisfied(const std::string& what) : error(what) {}
};

struct RobinsonResult {
    // verified arrow m -> n with map x -> b[x]; absent when no tuple works
    std::optional<KEmbedding> arrow;
    // some tuple b was zigzag-equivalent to the named diagram of m
    bool equivalent_tuple_found = false;
};

/// Arrow search via the named-diagram route: expand f by one constant per
/// element of structure m, then look for a tuple b in n making (n, b)
/// zigzag-equivalent to (m, identity); candidate maps are re-verified as
/// embeddings with strong image before being returned. Throws
/// LrpNotSatisfied unless check_lrp passes.
RobinsonResult robinson_diagram(const AecFragment& f, int m, int n);

/// A pullback situation: two component classes over a shared base plus the
/// materialized pullback fragment.
struct GlobalConfig {
    PullbackConfig cfg;
    AecFragment pullback;
};

GlobalConfig make_global_config(const AecFragment& base, const AecMorphism& left,
                                const AecMorphism& right, long long budget);

/// Transversal Robinson property, one orientation per verdict: whenever the
/// base reducts of M0 (listed in K0) and M1 (listed in K1) are
/// zigzag-equivalent in the base, some N0 extends M0 strongly in K0 and
/// receives an arrow from M1's reduct in the base category.
struct TrpReport {
    AxiomVerdict forward;   // K0 provides the extension
    AxiomVerdict backward;  // roles swapped
    bool both() const { return forward.holds && backward.holds; }
};

TrpReport check_trp(const GlobalConfig& g);

/// Global Robinson property: equivalent base reducts admit a pullback
/// witness P' with M0 strongly below the K0-projection and an arrow from M1
/// into the K1-projection.
AxiomVerdict check_grp(const GlobalConfig& g);

/// Craig interpolation shape: if no pullback structure projects into both
/// theories, the induced base theories share no model.
AxiomVerdict check_cip(const GlobalConfig& g, const ClosedTheory& t0, const ClosedTheory& t1);

/// A cospan-completion instance in the gluing category: one object with
/// arrows into two others, to be closed into a commuting square by arrows
/// into some object over a candidate fragment from the pool.
struct GapInstance {
    GluedObject m;
    GluedArrow to_n0, to_n1;  // both with source m
    std::vector<const AecFragment*> pool;
};

/// Pool-relative search: all symbol maps into each candidate language are
/// tried. An empty pool yields a failing verdict marked relative to the
/// pool, not an error.
AxiomVerdict check_gap(const GapInstance& inst);

}  // namespace aec
