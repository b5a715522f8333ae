#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aec/fragment.hpp"
#include "aec/generate.hpp"
#include "aec/lang.hpp"
#include "aec/structure.hpp"
#include "aec/util.hpp"

namespace aec {

/// Named declarations in file order plus the materialized objects.
/// Fragments sit behind shared_ptr so morphism pointers into them survive
/// workspace copies.
struct FragmentDecl {
    std::string language;
    std::vector<std::string> members;       // structure names, listing order
    std::set<std::pair<int, int>> pairs;

    bool operator==(const FragmentDecl&) const = default;
};

struct ConfigDecl {
    std::string base;
    std::string left_fragment, left_morphism;
    std::string right_fragment, right_morphism;

    bool operator==(const ConfigDecl&) const = default;
};

struct TheoryDecl {
    std::string fragment;
    std::set<int> members;  // listed structure indices, a union of classes

    bool operator==(const TheoryDecl&) const = default;
};

struct Workspace {
    std::vector<std::pair<std::string, std::string>> order;  // (kind, name)
    std::map<std::string, std::shared_ptr<const Language>> languages;
    std::map<std::string, FinStructure> structures;
    std::map<std::string, LanguageMorphism> morphisms;
    std::map<std::string, FragmentDecl> fragment_decls;
    std::map<std::string, std::shared_ptr<const AecFragment>> fragments;
    std::map<std::string, ConfigDecl> configs;
    std::map<std::string, TheoryDecl> theories;
};

struct ParseError : error {
    int line, col;
    std::string expected;
    ParseError(int line_, int col_, const std::string& expected_, const std::string& got)
        : error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                ": expected " + expected_ + ", got " + (got.empty() ? "end of line" : got)),
          line(line_),
          col(col_),
          expected(expected_) {}
};

struct UnresolvedReference : error {
    std::string name;
    UnresolvedReference(int line, const std::string& kind, const std::string& name_)
        : error("line " + std::to_string(line) + ": unresolved " + kind + " " + name_),
          name(name_) {}
};

struct ValidationFailure : error {
    std::string entity;
    std::string axiom;
    ValidationFailure(const std::string& entity_, const std::string& axiom_,
                      const std::string& detail)
        : error(entity_ + ": " + detail), entity(entity_), axiom(axiom_) {}
};

struct ParseOptions {
    bool allow_invalid = false;  // keep fragments that fail the class axioms
};

Workspace parse_workspace(const std::string& text, const ParseOptions& options = {});

/// Canonical form: parsing the output reproduces an equal workspace.
std::string print_workspace(const Workspace& ws);

bool same_workspace(const Workspace& a, const Workspace& b);

/// Seeded workspace: a base fragment, two expansion legs with their
/// inclusion morphisms, the spanning config, and one maximal theory per
/// leg. Deterministic in (seed, profile).
Workspace generate_workspace(std::uint64_t seed, const GenProfile& profile);

}  // namespace aec
