#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aec/structure.hpp"

namespace aec {

/// Finite presentation of an abstract elementary class. Listed structures
/// share one language; (i,j) in strong_pairs asserts that structure i is
/// literally the induced substructure of structure j on {0..|S_i|-1}.
/// The presented class and strong-substructure relation are the closures
/// of the listed data under isomorphism.
struct AecFragment {
    std::shared_ptr<const Language> lang;
    std::vector<FinStructure> structures;
    std::set<std::pair<int, int>> strong_pairs;

    int count() const { return static_cast<int>(structures.size()); }
    // structural well-formedness (not the class axioms); throws aec::error
    void check() const;
};

struct IsoWitness {
    int index;  // lowest listed index isomorphic to the query
    Map iso;    // structures[index] -> query
};

struct ClosedBelowWitness {
    int base_sub;    // (base_sub, base_super) in strong_pairs
    int base_super;
    Map iso;         // structures[base_super] -> target, carrying the
                     // literal prefix of base_sub onto the queried subset
};

/// Memo shared across the closure queries of one computation.
/// Fragments are immutable, so a cache never goes stale.
class FragmentCache {
  public:
    explicit FragmentCache(const AecFragment& f);

    const AecFragment& fragment() const { return *f_; }
    const std::vector<int>& canon(int i) const { return canon_[i]; }
    // lowest listed index with the given canonical encoding, or nullopt
    std::optional<int> member_index(const std::vector<int>& canon_encoding) const;

    std::optional<IsoWitness> member(const FinStructure& m);
    // X: sorted element subset of B's universe; true iff the induced
    // substructure on X is strong-below B in the iso-closed relation
    std::optional<ClosedBelowWitness> closed_below(const FinStructure& b, const std::vector<int>& X);
    std::optional<ClosedBelowWitness> closed_below_listed(int b, const std::vector<int>& X);

  private:
    std::optional<ClosedBelowWitness> search(const FinStructure& b, const std::vector<int>& bcanon,
                                             const std::vector<int>& X);

    const AecFragment* f_;
    std::vector<std::vector<int>> canon_;
    std::map<std::vector<int>, int> canon_min_;
    std::map<int, std::vector<int>> sub_sizes_;  // super index -> sorted distinct sub sizes
    std::map<std::pair<std::vector<int>, std::uint64_t>, std::optional<ClosedBelowWitness>> memo_;
};

// convenience one-shot wrappers
std::optional<IsoWitness> member_up_to_iso(const AecFragment& f, const FinStructure& m);
std::optional<ClosedBelowWitness> closed_below(const AecFragment& f, const FinStructure& b,
                                               const std::vector<int>& X);

/// Arrow of the fragment's category: an embedding of listed structures
/// whose image is strong-below the target.
struct KEmbedding {
    int source;
    int target;
    Map map;
    bool operator==(const KEmbedding&) const = default;
};

std::vector<KEmbedding> cat_arrows(const AecFragment& f, int a, int b);
std::vector<KEmbedding> cat_arrows(FragmentCache& cache, int a, int b);
bool has_cat_arrow(FragmentCache& cache, int a, int b);
KEmbedding identity_k(const AecFragment& f, int i);
// g after f; throws aec::error when the composite image is not strong-below
// the final target (possible only for invalid fragments)
KEmbedding compose_k(const AecFragment& f, const KEmbedding& g, const KEmbedding& kf);

enum class Verdict { Pass, Fail, Vacuous };
std::string to_string(Verdict v);

struct AxiomReport {
    Verdict verdict = Verdict::Pass;
    std::string note;
};

struct OrderWitness {
    std::string kind;  // missing-reflexive | not-antisymmetric | not-transitive |
                       // not-literal-substructure | closure-not-transitive
    int i = -1, j = -1, k = -1;
    std::vector<int> X, Y;
    std::string detail;
};

struct CoherenceWitness {
    int p;
    std::vector<int> X, Y;  // X subset of Y, both strong-below P, X not strong-below Y
};

struct LsWitness {
    int n;
    std::vector<int> X;  // nonempty subset with no strong submodel above it
};

struct ValidationReport {
    AxiomReport order, isomorphism, coherence, reunion, ls;
    std::optional<OrderWitness> order_witness;
    std::optional<CoherenceWitness> coherence_witness;
    std::optional<LsWitness> ls_witness;
    // least k such that every nonempty X inside a listed N extends to some
    // strong M <= N with |M| <= |X| + k; -1 when the ls axiom fails
    int ls_number = -1;
    bool ok() const;
};

ValidationReport validate(const AecFragment& f);

struct RestrictedFragment {
    AecFragment fragment;
    std::vector<int> kept;  // kept[new index] = old index
};

// sub-presentation on a subset of listed indices, strong pairs restricted
RestrictedFragment restrict_to(const AecFragment& f, const std::vector<int>& indices);

}  // namespace aec
