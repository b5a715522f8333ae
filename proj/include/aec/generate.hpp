#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aec/axioms.hpp"
#include "aec/construct.hpp"
#include "aec/fragment.hpp"
#include "aec/lang.hpp"
#include "aec/util.hpp"

namespace aec {

/// Bounds for the seeded builders. Every output is a deterministic function
/// of the consumed rng draws and the profile.
struct GenProfile {
    int max_size = 2;           // universe size cap, >= 1
    int max_structures = 24;    // soft cap on listed labeled structures
    int max_symbols = 2;        // base-language symbol count cap
    int arity_cap = 2;
    int max_extras = 1;         // extra unary relations per expansion side
    long long budget = 200000;  // labeled-enumeration guard
};

/// Random language under the profile caps. Symbols are dropped from the
/// back until enumerating all labeled structures up to max_size fits the
/// budget, so downstream builders cannot blow up.
std::shared_ptr<const Language> gen_language(Rng& rng, const GenProfile& profile);

/// Valid by construction: every labeled copy of a downward-closed random
/// set of isomorphism classes over sizes 1..max_size, with all literal
/// prefix pairs. Downward closure makes every closed subset strong.
AecFragment gen_fragment(Rng& rng, std::shared_ptr<const Language> lang,
                         const GenProfile& profile);
AecFragment gen_fragment(Rng& rng, const GenProfile& profile);

/// Distinct random structures plus a random subset of the literal prefix
/// pairs: well-formed data that usually fails the class axioms. Oracle and
/// negative-test fodder.
AecFragment gen_rough_fragment(Rng& rng, const GenProfile& profile);

/// A base fragment, two unary-relation expansions of it, and the derived
/// pullback. The shared_ptrs own everything the inner pointers reference.
struct GeneratedConfig {
    std::shared_ptr<const AecFragment> base, k0, k1;
    GlobalConfig global;
};

/// The expansion legs list, for every chosen decorated class, the bare
/// decoration of its base class as well, so the pullback is never empty and
/// the reduct functors are defined by construction.
GeneratedConfig gen_config(Rng& rng, const GenProfile& profile);

struct LawViolation {
    std::uint64_t seed = 0;
    std::string note;
};

struct LawRunReport {
    std::string law;
    int runs = 0;        // seeds consumed
    int applicable = 0;  // instances where the hypothesis held
    std::vector<LawViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Seeded law sweep over generated instances. Laws:
///   trp-grp           transversal extensions imply pullback witnesses
///   trp-cip           transversal extensions imply interpolation for
///                     every pair of maximal theories (capped at 16)
///   pullback-ls       the pullback validates and its ls number stays
///                     within the three input ls numbers
///   reduct-equiv      reducts of equivalent pairs stay equivalent
///   types-dual        both type-partition routes agree and the type count
///                     matches the maximal-theory count
///   embeddings-oracle backtracking embeddings match injective filtering
///   connection-oracle the partition matches brute-force reachability
LawRunReport run_law(const std::string& law, std::uint64_t seed0, int seeds,
                     const GenProfile& profile);

}  // namespace aec
