#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "aec/lang.hpp"

namespace aec {

/// Finite structure over a shared language. Universe is {0,...,size-1}.
/// Function interpretations are row-major tables indexed by argument tuple.
struct FinStructure {
    std::shared_ptr<const Language> lang;
    int size = 0;
    std::map<std::string, std::set<std::vector<int>>> rels;
    std::map<std::string, std::vector<int>> funcs;
    std::map<std::string, int> consts;

    bool rel_holds(const std::string& sym, const std::vector<int>& args) const;
    int fun_value(const std::string& sym, const std::vector<int>& args) const;

    // full well-formedness: language set, size >= 1, every symbol interpreted,
    // all element references in range, tables total
    void check() const;

    // labeled content encoding; equal iff structures are identical as labeled objects
    std::vector<int> encode() const;

    bool same_content(const FinStructure& other) const;
};

int table_index(const std::vector<int>& args, int size);
int table_size(int arity, int size);

// universe permutation: element x of m becomes perm[x] in the result
FinStructure relabel(const FinStructure& m, const std::vector<int>& perm);

// lexicographically minimal encode() over all relabelings
std::vector<int> canonical_encoding(const FinStructure& m);

// Universe kept, symbols pulled back along alpha (m is over alpha.target).
FinStructure reduct(const FinStructure& m, const LanguageMorphism& alpha);

struct NotClosed {
    std::string symbol;       // function or constant that escapes the subset
    std::vector<int> args;    // empty for constants
    int value;
};

struct Induced {
    FinStructure structure;       // canonical universe {0..k-1}
    std::vector<int> universe;    // universe[new index] = old element, increasing
};

// X as a sorted duplicate-free element list; fails when X is not closed
// under functions or misses a constant
std::variant<Induced, NotClosed> induced_substructure(const FinStructure& n, const std::vector<int>& X);

using Map = std::vector<int>;  // map[x] = image of x

// injective + strong on relations + commutes with functions and constants
bool is_embedding_map(const FinStructure& a, const FinStructure& b, const Map& m);
bool is_isomorphism_map(const FinStructure& a, const FinStructure& b, const Map& m);

// Backtracking enumeration in lexicographic order of the map tuple.
// visit returns false to stop early.
void visit_embeddings(const FinStructure& a, const FinStructure& b,
                      const std::function<bool(const Map&)>& visit);
std::vector<Map> find_embeddings(const FinStructure& a, const FinStructure& b,
                                 std::optional<int> limit = std::nullopt);
void visit_isomorphisms(const FinStructure& a, const FinStructure& b,
                        const std::function<bool(const Map&)>& visit);
std::vector<Map> find_isomorphisms(const FinStructure& a, const FinStructure& b,
                                   std::optional<int> limit = std::nullopt);

// all size-k subsets of {0..n-1} as sorted lists, lexicographic
std::vector<std::vector<int>> subsets_of_size(int n, int k);
// all subsets (any size) ordered by (size, lex)
std::vector<std::vector<int>> all_subsets(int n);

}  // namespace aec
