#include "aec/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "aec/axioms.hpp"
#include "aec/construct.hpp"
#include "aec/theory.hpp"
#include "aec/types.hpp"

namespace aec {

namespace {

struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

Json map_json(const Map& m) { return Json(m); }

Json embedding_json(const KEmbedding& e) {
    return Json{{"source", e.source}, {"target", e.target}, {"map", map_json(e.map)}};
}

Json axiom_json(const AxiomVerdict& v) {
    Json j{{"axiom", v.axiom}, {"holds", v.holds}};
    if (!v.note.empty()) j["note"] = v.note;
    if (v.span)
        j["span"] = Json{{"f0", embedding_json(v.span->f0)}, {"f1", embedding_json(v.span->f1)}};
    if (v.pair) j["pair"] = Json{v.pair->a, v.pair->b};
    if (v.witness_index) j["witnessIndex"] = *v.witness_index;
    if (v.bound) j["bound"] = *v.bound;
    return j;
}

Json axiom_report_json(const AxiomReport& r) {
    Json j{{"verdict", to_string(r.verdict)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json validation_json(const ValidationReport& rep) {
    Json j;
    j["order"] = axiom_report_json(rep.order);
    j["isomorphism"] = axiom_report_json(rep.isomorphism);
    j["coherence"] = axiom_report_json(rep.coherence);
    j["reunion"] = axiom_report_json(rep.reunion);
    j["ls"] = axiom_report_json(rep.ls);
    j["lsNumber"] = rep.ls_number;
    j["ok"] = rep.ok();
    if (rep.order_witness) {
        const OrderWitness& w = *rep.order_witness;
        j["orderWitness"] = Json{{"kind", w.kind}, {"i", w.i},        {"j", w.j}, {"k", w.k},
                                 {"X", w.X},       {"Y", w.Y},        {"detail", w.detail}};
    }
    if (rep.coherence_witness) {
        const CoherenceWitness& w = *rep.coherence_witness;
        j["coherenceWitness"] = Json{{"p", w.p}, {"X", w.X}, {"Y", w.Y}};
    }
    if (rep.ls_witness) {
        const LsWitness& w = *rep.ls_witness;
        j["lsWitness"] = Json{{"n", w.n}, {"X", w.X}};
    }
    return j;
}

// Declaration-ordered names of one kind, optionally narrowed to a target.
std::vector<std::string> pick(const Workspace& ws, const std::string& kind,
                              const std::string& target) {
    std::vector<std::string> out;
    for (const auto& [k, name] : ws.order)
        if (k == kind && (target.empty() || name == target)) out.push_back(name);
    if (!target.empty() && out.empty())
        throw input_error("no " + kind + " named " + target + " in the workspace");
    if (out.empty()) throw input_error("the workspace declares no " + kind);
    return out;
}

// A fresh printable workspace holding one derived fragment.
std::string fragment_dsl(const AecFragment& f, const std::string& lang_name,
                         const std::string& member_prefix, const std::string& frag_name) {
    Workspace mini;
    mini.languages.emplace(lang_name, f.lang);
    mini.order.emplace_back("language", lang_name);
    FragmentDecl decl;
    decl.language = lang_name;
    for (int i = 0; i < f.count(); ++i) {
        std::string sname = member_prefix + std::to_string(i);
        mini.structures.emplace(sname, f.structures[i]);
        mini.order.emplace_back("structure", sname);
        decl.members.push_back(sname);
    }
    decl.pairs = f.strong_pairs;
    mini.fragment_decls.emplace(frag_name, std::move(decl));
    mini.fragments.emplace(frag_name, std::make_shared<const AecFragment>(f));
    mini.order.emplace_back("fragment", frag_name);
    return print_workspace(mini);
}

struct ConfigParts {
    std::string name;
    const AecFragment* base;
    const AecFragment* left;
    const AecFragment* right;
    AecMorphism left_mor, right_mor;
};

ConfigParts config_parts(const Workspace& ws, const std::string& name) {
    const ConfigDecl& d = ws.configs.at(name);
    ConfigParts p;
    p.name = name;
    p.base = ws.fragments.at(d.base).get();
    p.left = ws.fragments.at(d.left_fragment).get();
    p.right = ws.fragments.at(d.right_fragment).get();
    p.left_mor = AecMorphism{ws.morphisms.at(d.left_morphism), p.left, p.base};
    p.right_mor = AecMorphism{ws.morphisms.at(d.right_morphism), p.right, p.base};
    return p;
}

Json cmd_validate(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    bool all = true;
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        ValidationReport rep = validate(f);
        all = all && rep.ok();
        Json j{{"name", name}, {"structures", f.count()}};
        j.update(validation_json(rep));
        frags.push_back(std::move(j));
    }
    out["fragments"] = std::move(frags);
    out["allPass"] = all;
    return out;
}

Json cmd_theories(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        TheoryPartition p = connection_partition(f);
        Json maxes = Json::array();
        for (const ClosedTheory& t : max_theories(p))
            maxes.push_back(Json{{"id", *t.component_ids.begin()}, {"members", t.structures}});
        frags.push_back(Json{{"name", name},
                             {"componentOf", p.component_of},
                             {"components", p.components},
                             {"max", std::move(maxes)}});
    }
    out["fragments"] = std::move(frags);
    return out;
}

Json cmd_embeddings(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        FragmentCache cache(f);
        Json groups = Json::array();
        int total = 0;
        for (int a = 0; a < f.count(); ++a)
            for (int b = 0; b < f.count(); ++b) {
                auto arrows = cat_arrows(cache, a, b);
                if (arrows.empty()) continue;
                total += static_cast<int>(arrows.size());
                Json maps = Json::array();
                for (const KEmbedding& e : arrows) maps.push_back(map_json(e.map));
                groups.push_back(Json{{"from", a}, {"to", b}, {"maps", std::move(maps)}});
            }
        frags.push_back(
            Json{{"name", name}, {"arrowCount", total}, {"arrows", std::move(groups)}});
    }
    out["fragments"] = std::move(frags);
    return out;
}

Json derived_fragment_json(const AecFragment& f, const std::string& lang_name,
                           const std::string& member_prefix, const std::string& frag_name) {
    ValidationReport rep = validate(f);
    Json j{{"structureCount", f.count()}};
    j["validation"] = validation_json(rep);
    j["lsNumber"] = rep.ls_number;
    j["dsl"] = fragment_dsl(f, lang_name, member_prefix, frag_name);
    return j;
}

Json cmd_pullback(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json configs = Json::array();
    for (const std::string& name : pick(ws, "config", opt.target)) {
        ConfigParts p = config_parts(ws, name);
        GlobalConfig g = make_global_config(*p.base, p.left_mor, p.right_mor, opt.budget);
        Json j{{"name", name}};
        j.update(derived_fragment_json(g.pullback, "Lp", "p", "P"));
        configs.push_back(std::move(j));
    }
    out["configs"] = std::move(configs);
    return out;
}

Json cmd_expand(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        AecFragment e = diagram_expansion(f, opt.names);
        Json j{{"name", name}, {"names", opt.names}};
        j.update(derived_fragment_json(e, "Le", "e", "E"));
        frags.push_back(std::move(j));
    }
    out["fragments"] = std::move(frags);
    return out;
}

const FinStructure& base_point(const AecFragment& f, const std::string& name, int member) {
    if (member < 0 || member >= f.count())
        throw input_error("fragment " + name + " has no member " + std::to_string(member));
    return f.structures[member];
}

Json cmd_types(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        base_point(f, name, opt.member);
        TypeAnalysis a = g_types(f, opt.member, opt.names);
        Json types = Json::array();
        for (const GType& t : a.types)
            types.push_back(Json{{"component", t.component},
                                 {"rep", Json{{"target", t.rep.n_index},
                                              {"map", map_json(t.rep.f)},
                                              {"point", t.rep.abar}}}});
        frags.push_back(Json{{"name", name},
                             {"basePoint", opt.member},
                             {"names", opt.names},
                             {"triples", static_cast<int>(a.pc.triples.size())},
                             {"typeCount", static_cast<int>(a.types.size())},
                             {"componentOf", a.partition.component_of},
                             {"types", std::move(types)}});
    }
    out["fragments"] = std::move(frags);
    return out;
}

Json cmd_topology(const Workspace& ws, const RunOptions& opt) {
    Json out;
    Json frags = Json::array();
    for (const std::string& name : pick(ws, "fragment", opt.target)) {
        const AecFragment& f = *ws.fragments.at(name);
        const FinStructure& m = base_point(f, name, opt.member);
        TypeSpace sp = type_space(f, m, opt.names, opt.lambda);
        CanonicalMapReport cm = canonical_map(sp);
        Json j{{"name", name},
               {"basePoint", opt.member},
               {"names", opt.names},
               {"lambda", sp.lambda},
               {"typeCount", static_cast<int>(sp.analysis.types.size())},
               {"smallSets", static_cast<int>(sp.small_sets.size())},
               {"basisSize", static_cast<int>(sp.basis.size())},
               {"openSetCount", static_cast<int>(sp.opens.size())},
               {"discrete", sp.discrete()},
               {"limitPoints", static_cast<int>(cm.limit_points.size())},
               {"image", cm.image},
               {"tame", cm.injective},
               {"compact", cm.surjective},
               {"continuous", cm.continuous},
               {"initialTopology", cm.initial_topology}};
        if (cm.fiber_witness)
            j["fiberWitness"] = Json{cm.fiber_witness->first, cm.fiber_witness->second};
        if (cm.miss_witness) j["missWitness"] = *cm.miss_witness;
        frags.push_back(std::move(j));
    }
    out["fragments"] = std::move(frags);
    return out;
}

ClosedTheory theory_from_decl(const TheoryDecl& d, const TheoryPartition& p) {
    ClosedTheory t;
    t.structures = d.members;
    for (int i : d.members) t.component_ids.insert(p.component_of[i]);
    return t;
}

// Declared theories over the given fragment, else its maximal theories.
std::vector<std::pair<std::string, ClosedTheory>> theories_over(const Workspace& ws,
                                                                const std::string& frag_name,
                                                                const AecFragment& f) {
    std::vector<std::pair<std::string, ClosedTheory>> out;
    TheoryPartition p = connection_partition(f);
    for (const auto& [k, name] : ws.order)
        if (k == "theory" && ws.theories.at(name).fragment == frag_name)
            out.emplace_back(name, theory_from_decl(ws.theories.at(name), p));
    if (out.empty()) {
        int i = 0;
        for (const ClosedTheory& t : max_theories(p))
            out.emplace_back("max" + std::to_string(i++), t);
    }
    return out;
}

bool same_arrow(const GluedArrow& a, const GluedArrow& b) {
    return a.source == b.source && a.target == b.target && a.phi.alpha == b.phi.alpha &&
           a.phi.source == b.phi.source && a.phi.target == b.phi.target && a.h == b.h;
}

struct GlueSample {
    std::vector<GluedObject> objects;
    std::vector<GluedArrow> arrows;
};

// Deterministic bounded sample of the gluing category around one config:
// within-fragment arrows from the fragment categories, plus cross arrows
// from base objects into each leg along its reduct functor.
GlueSample sample_glue(const ConfigParts& p) {
    GlueSample s;
    const int arrow_cap = 48;
    std::vector<const AecFragment*> frags{p.base, p.left, p.right};
    for (const AecFragment* f : frags)
        for (int i = 0; i < f->count(); ++i) s.objects.push_back(GluedObject{f, i});

    std::vector<AecMorphism> identities;
    identities.reserve(frags.size());
    for (const AecFragment* f : frags)
        identities.push_back(AecMorphism{LanguageMorphism::identity(*f->lang), f, f});

    for (size_t fi = 0; fi < frags.size(); ++fi) {
        const AecFragment* f = frags[fi];
        FragmentCache cache(*f);
        int taken = 0;
        for (int a = 0; a < f->count() && taken < arrow_cap; ++a)
            for (int b = 0; b < f->count() && taken < arrow_cap; ++b) {
                auto arrows = cat_arrows(cache, a, b);
                if (arrows.empty()) continue;
                s.arrows.push_back(GluedArrow{GluedObject{f, a}, GluedObject{f, b},
                                              identities[fi], arrows.front().map});
                ++taken;
            }
    }

    auto cross = [&](const AecFragment* leg, const AecMorphism& mor) {
        int taken = 0;
        for (int i = 0; i < p.base->count() && taken < arrow_cap; ++i)
            for (int j = 0; j < leg->count() && taken < arrow_cap; ++j) {
                FinStructure r = reduct(leg->structures[j], mor.alpha);
                for (const Map& h : find_embeddings(p.base->structures[i], r)) {
                    std::vector<int> image(h);
                    std::sort(image.begin(), image.end());
                    if (!closed_below(*p.base, r, image)) continue;
                    s.arrows.push_back(
                        GluedArrow{GluedObject{p.base, i}, GluedObject{leg, j}, mor, h});
                    ++taken;
                    break;
                }
            }
    };
    cross(p.left, p.left_mor);
    cross(p.right, p.right_mor);
    return s;
}

Json glue_laws_json(const ConfigParts& p) {
    GlueSample s = sample_glue(p);
    bool arrows_ok = true;
    for (const GluedArrow& a : s.arrows) {
        try {
            check_glued_arrow(a);
        } catch (const error&) {
            arrows_ok = false;
        }
    }

    bool identity_ok = true;
    int identity_checks = 0;
    for (const GluedArrow& a : s.arrows) {
        GluedArrow lhs = glue_compose(a, glue_identity(a.source));
        GluedArrow rhs = glue_compose(glue_identity(a.target), a);
        identity_ok = identity_ok && same_arrow(lhs, a) && same_arrow(rhs, a);
        identity_checks += 2;
    }

    bool assoc_ok = true;
    int assoc_checks = 0;
    const int assoc_cap = 300;
    for (const GluedArrow& a : s.arrows) {
        for (const GluedArrow& b : s.arrows) {
            if (!(b.source == a.target)) continue;
            for (const GluedArrow& c : s.arrows) {
                if (!(c.source == b.target)) continue;
                GluedArrow lhs = glue_compose(c, glue_compose(b, a));
                GluedArrow rhs = glue_compose(glue_compose(c, b), a);
                assoc_ok = assoc_ok && same_arrow(lhs, rhs);
                if (++assoc_checks >= assoc_cap) break;
            }
            if (assoc_checks >= assoc_cap) break;
        }
        if (assoc_checks >= assoc_cap) break;
    }

    bool holds = arrows_ok && identity_ok && assoc_ok;
    return Json{{"name", p.name},
                {"objects", static_cast<int>(s.objects.size())},
                {"arrows", static_cast<int>(s.arrows.size())},
                {"arrowsOk", arrows_ok},
                {"identityChecks", identity_checks},
                {"identityOk", identity_ok},
                {"associativityChecks", assoc_checks},
                {"associativityOk", assoc_ok},
                {"holds", holds}};
}

Json cmd_glue_check(const Workspace& ws, const RunOptions& opt, bool& verdict) {
    Json out;
    Json configs = Json::array();
    for (const std::string& name : pick(ws, "config", opt.target)) {
        Json j = glue_laws_json(config_parts(ws, name));
        verdict = verdict && j["holds"].get<bool>();
        configs.push_back(std::move(j));
    }
    out["configs"] = std::move(configs);
    return out;
}

// Spans out of base objects into the two legs, pool = all fragments in play.
Json check_gap_json(const ConfigParts& p, const GlobalConfig& g, bool& verdict) {
    const int instance_cap = 6;
    Json instances = Json::array();
    FragmentCache base_cache(*p.base);
    std::vector<const AecFragment*> pool{p.base, p.left, p.right, &g.pullback};
    int taken = 0;
    for (int i = 0; i < p.base->count() && taken < instance_cap; ++i) {
        auto arrow_into = [&](const AecFragment* leg,
                              const AecMorphism& mor) -> std::optional<GluedArrow> {
            for (int j = 0; j < leg->count(); ++j) {
                FinStructure r = reduct(leg->structures[j], mor.alpha);
                for (const Map& h : find_embeddings(p.base->structures[i], r)) {
                    std::vector<int> image(h);
                    std::sort(image.begin(), image.end());
                    if (!closed_below(*p.base, r, image)) continue;
                    return GluedArrow{GluedObject{p.base, i}, GluedObject{leg, j}, mor, h};
                }
            }
            return std::nullopt;
        };
        auto a0 = arrow_into(p.left, p.left_mor);
        auto a1 = arrow_into(p.right, p.right_mor);
        if (!a0 || !a1) continue;
        GapInstance inst{GluedObject{p.base, i}, *a0, *a1, pool};
        AxiomVerdict v = check_gap(inst);
        verdict = verdict && v.holds;
        Json j{{"base", i},
               {"n0", Json{{"fragment", "left"}, {"index", a0->target.index}}},
               {"n1", Json{{"fragment", "right"}, {"index", a1->target.index}}}};
        j["verdict"] = axiom_json(v);
        instances.push_back(std::move(j));
        ++taken;
    }
    return Json{{"name", p.name},
                {"poolSize", static_cast<int>(pool.size())},
                {"instances", std::move(instances)}};
}

Json cmd_check(const Workspace& ws, const RunOptions& opt, bool& verdict) {
    const std::string& ax = opt.axiom;
    if (ax.empty()) throw input_error("check requires --axiom (ap|jep|lrp|gap|trp|grp|cip)");
    Json out;
    out["axiom"] = ax;
    if (ax == "ap" || ax == "jep" || ax == "lrp") {
        Json frags = Json::array();
        for (const std::string& name : pick(ws, "fragment", opt.target)) {
            const AecFragment& f = *ws.fragments.at(name);
            AxiomVerdict v = ax == "ap" ? check_ap(f) : ax == "jep" ? check_jep(f) : check_lrp(f);
            verdict = verdict && v.holds;
            Json j{{"name", name}};
            j["verdict"] = axiom_json(v);
            frags.push_back(std::move(j));
        }
        out["fragments"] = std::move(frags);
        return out;
    }
    if (ax != "gap" && ax != "trp" && ax != "grp" && ax != "cip")
        throw input_error("unknown axiom " + ax);
    Json configs = Json::array();
    for (const std::string& name : pick(ws, "config", opt.target)) {
        ConfigParts p = config_parts(ws, name);
        GlobalConfig g = make_global_config(*p.base, p.left_mor, p.right_mor, opt.budget);
        if (ax == "trp") {
            TrpReport r = check_trp(g);
            verdict = verdict && r.both();
            configs.push_back(Json{{"name", name},
                                   {"forward", axiom_json(r.forward)},
                                   {"backward", axiom_json(r.backward)},
                                   {"holds", r.both()}});
        } else if (ax == "grp") {
            AxiomVerdict v = check_grp(g);
            verdict = verdict && v.holds;
            Json j{{"name", name}};
            j["verdict"] = axiom_json(v);
            j["holds"] = v.holds;
            configs.push_back(std::move(j));
        } else if (ax == "cip") {
            const ConfigDecl& d = ws.configs.at(name);
            auto lefts = theories_over(ws, d.left_fragment, *p.left);
            auto rights = theories_over(ws, d.right_fragment, *p.right);
            const int pair_cap = 16;
            Json pairs = Json::array();
            bool all = true;
            int taken = 0;
            for (const auto& [n0, t0] : lefts) {
                for (const auto& [n1, t1] : rights) {
                    if (taken >= pair_cap) break;
                    AxiomVerdict v = check_cip(g, t0, t1);
                    all = all && v.holds;
                    Json j{{"t0", n0}, {"t1", n1}};
                    j["verdict"] = axiom_json(v);
                    pairs.push_back(std::move(j));
                    ++taken;
                }
                if (taken >= pair_cap) break;
            }
            verdict = verdict && all;
            configs.push_back(Json{{"name", name}, {"pairs", std::move(pairs)}, {"holds", all}});
        } else {
            bool all = true;
            Json j = check_gap_json(p, g, all);
            verdict = verdict && all;
            j["holds"] = all;
            configs.push_back(std::move(j));
        }
    }
    out["configs"] = std::move(configs);
    return out;
}

Json cmd_harness(const RunOptions& opt, bool& verdict) {
    LawRunReport r = run_law(opt.law, opt.seed, opt.seeds, opt.profile);
    verdict = r.ok();
    Json violations = Json::array();
    for (const LawViolation& v : r.violations)
        violations.push_back(Json{{"seed", v.seed}, {"note", v.note}});
    return Json{{"law", r.law},
                {"runs", r.runs},
                {"applicable", r.applicable},
                {"violations", std::move(violations)},
                {"ok", r.ok()}};
}

Json cmd_generate(const RunOptions& opt) {
    Workspace ws = generate_workspace(opt.seed, opt.profile);
    Json counts{{"languages", static_cast<int>(ws.languages.size())},
                {"structures", static_cast<int>(ws.structures.size())},
                {"fragments", static_cast<int>(ws.fragments.size())},
                {"configs", static_cast<int>(ws.configs.size())},
                {"theories", static_cast<int>(ws.theories.size())}};
    return Json{{"counts", std::move(counts)}, {"dsl", print_workspace(ws)}};
}

}  // namespace

RunResult run_command(const Workspace& ws, const std::string& command, const RunOptions& opt) {
    Json out;
    out["schema"] = 1;
    out["command"] = command;
    out["seed"] = opt.seed;
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        bool verdict = true;
        Json body;
        if (command == "validate")
            body = cmd_validate(ws, opt);
        else if (command == "theories")
            body = cmd_theories(ws, opt);
        else if (command == "embeddings")
            body = cmd_embeddings(ws, opt);
        else if (command == "pullback")
            body = cmd_pullback(ws, opt);
        else if (command == "expand")
            body = cmd_expand(ws, opt);
        else if (command == "types")
            body = cmd_types(ws, opt);
        else if (command == "topology")
            body = cmd_topology(ws, opt);
        else if (command == "check")
            body = cmd_check(ws, opt, verdict);
        else if (command == "glue-check")
            body = cmd_glue_check(ws, opt, verdict);
        else if (command == "harness")
            body = cmd_harness(opt, verdict);
        else if (command == "generate")
            body = cmd_generate(opt);
        else
            throw input_error("unknown command " + command);
        out.update(body);
        if ((command == "check" || command == "glue-check" || command == "harness") && !verdict)
            code = 1;
    } catch (const budget_error& e) {
        out["error"] = Json{{"type", "budget"}, {"message", e.what()}};
        code = 3;
    } catch (const input_error& e) {
        out["error"] = Json{{"type", "input"}, {"message", e.what()}};
        code = 2;
    } catch (const std::exception& e) {
        out["error"] = Json{{"type", "input"}, {"message", e.what()}};
        code = 2;
    }
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out["timings"] = Json{{"totalMs", ms}};
    }
    return RunResult{std::move(out), code};
}

namespace {

void render_value(std::ostringstream& os, const Json& v, int depth) {
    std::string pad(2 * depth, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                os << pad << key << ":\n";
                render_value(os, val, depth + 1);
            } else {
                os << pad << key << ": " << val.dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        bool scalars = std::all_of(v.begin(), v.end(),
                                   [](const Json& x) { return !x.is_object() && !x.is_array(); });
        if (scalars) {
            os << pad << v.dump() << "\n";
            return;
        }
        int i = 0;
        for (const Json& item : v) {
            os << pad << "- [" << i++ << "]\n";
            render_value(os, item, depth + 1);
        }
    } else {
        os << pad << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render_value(os, report, 0);
    return os.str();
}

}  // namespace aec
