#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aec/construct.hpp"
#include "aec/theory.hpp"
#include "aec/util.hpp"

namespace aec {

/// One equivalence class of pointed triples; the representative is the
/// listed triple with the least index in the class.
struct GType {
    int component = -1;
    Triple rep;

    bool operator==(const GType&) const = default;
};

/// Every type over one pointed situation. The partition is computed both
/// from the materialized fragment's category and from direct
/// commuting-triangle zigzags between triples; construction throws if the
/// two routes ever disagree.
struct TypeAnalysis {
    PointedClass pc;
    TheoryPartition partition;  // over pc.fragment, triple index -> class
    std::vector<GType> types;   // ascending by component id

    int type_position(int component) const;  // index into types; throws
};

TypeAnalysis g_types(const AecFragment& f, const FinStructure& m,
                     const std::vector<std::string>& index_names);
TypeAnalysis g_types(const AecFragment& f, int m_index,
                     const std::vector<std::string>& index_names);

struct NotStrongSubstructure : error {
    explicit NotStrongSubstructure(const std::string& what) : error(what) {}
};

/// q restricted along the inclusion of the induced substructure on subset
/// (sorted elements of the base point, strong below it). `to` must analyze
/// that substructure over the same fragment and index names. Restriction
/// precomposes the representative's arrow with the inclusion.
GType restrict_type(const TypeAnalysis& from, const GType& q, const std::vector<int>& subset,
                    const TypeAnalysis& to);

/// U_{p,N}: the types over M whose restriction to N equals p.
struct BasisOpen {
    std::vector<int> subset;  // N as elements of the base point
    int p_position;           // index into the N-analysis type list
    std::set<int> points;     // positions of M-types inside the open
};

/// The size-bounded restriction topology on the types over M. Points are
/// positions into analysis.types. Opens are generated from the basis by
/// closing under finite intersection and then arbitrary union.
struct TypeSpace {
    TypeAnalysis analysis;
    int lambda = 0;
    std::vector<std::vector<int>> small_sets;  // strong subsets of size <= lambda
    std::vector<TypeAnalysis> small;           // aligned analyses
    std::vector<std::vector<int>> restriction;  // [k][ti] -> position in small[k]
    std::vector<BasisOpen> basis;
    std::set<std::set<int>> opens;

    bool discrete() const;  // every singleton open
};

TypeSpace type_space(TypeAnalysis analysis, int lambda);
TypeSpace type_space(const AecFragment& f, const FinStructure& m,
                     const std::vector<std::string>& index_names, int lambda);

/// The map into the inverse limit of the small discrete type spaces. Limit
/// elements are restriction-compatible families over the small subsets,
/// ordered lexicographically.
struct CanonicalMapReport {
    std::vector<std::vector<int>> limit_points;  // family[k] = position in small[k]
    std::vector<int> image;                      // M-type position -> limit index
    bool injective = false;
    bool surjective = false;
    std::optional<std::pair<int, int>> fiber_witness;  // equal-image type pair
    std::optional<int> miss_witness;                   // unhit limit index
    bool continuous = false;        // cylinder preimages are open
    bool initial_topology = false;  // opens equal the restriction-generated topology
};

CanonicalMapReport canonical_map(const TypeSpace& sp);
CanonicalMapReport canonical_map(const AecFragment& f, const FinStructure& m,
                                 const std::vector<std::string>& index_names, int lambda);

/// The induced square on type sets for a reduct functor and an arrow of the
/// source class: precomposition along the arrow horizontally, reduct
/// transport vertically. Map entries are positions into the corner type
/// lists.
struct TypeSquareReport {
    TypeAnalysis k_m0, k_m1;    // target class over the two reducts
    TypeAnalysis kp_m0, kp_m1;  // source class over the arrow's endpoints
    std::vector<int> top;       // k_m1 -> k_m0
    std::vector<int> bottom;    // kp_m1 -> kp_m0
    std::vector<int> left;      // kp_m0 -> k_m0
    std::vector<int> right;     // kp_m1 -> k_m1
    bool commutes = false;
    bool maps_continuous = false;  // all four, at the requested bound
    // surjectivity is asserted per class when that class amalgamates
    std::optional<bool> top_surjective;
    std::optional<bool> bottom_surjective;
};

TypeSquareReport induced_type_maps(const AecMorphism& m, const KEmbedding& h_prime,
                                   const std::vector<std::string>& names, int lambda);

}  // namespace aec
