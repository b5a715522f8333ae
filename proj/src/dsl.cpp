#include "aec/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aec/theory.hpp"

namespace aec {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

struct Line {
    int number;  // 1-based
    std::vector<Token> toks;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++number;
        Line l{number, {}};
        size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            l.toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!l.toks.empty()) out.push_back(std::move(l));
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

class Parser {
  public:
    Parser(const std::string& text, const ParseOptions& options)
        : lines_(tokenize(text)), opt_(options) {}

    Workspace run() {
        while (li_ < lines_.size()) {
            const Line& h = lines_[li_++];
            const std::string& kind = h.toks[0].text;
            if (kind == "language")
                parse_language(h);
            else if (kind == "structure")
                parse_structure(h);
            else if (kind == "morphism")
                parse_morphism(h);
            else if (kind == "fragment")
                parse_fragment(h);
            else if (kind == "config")
                parse_config(h);
            else if (kind == "theory")
                parse_theory(h);
            else
                throw ParseError(h.number, h.toks[0].col,
                                 "one of language|structure|morphism|fragment|config|theory",
                                 kind);
        }
        return std::move(ws_);
    }

  private:
    const Token& tok(const Line& l, size_t k, const std::string& expected) const {
        if (k >= l.toks.size()) {
            int col = l.toks.empty() ? 1 : l.toks.back().col + static_cast<int>(l.toks.back().text.size());
            throw ParseError(l.number, col, expected, "");
        }
        return l.toks[k];
    }

    void expect_word(const Line& l, size_t k, const std::string& word) const {
        const Token& t = tok(l, k, "'" + word + "'");
        if (t.text != word) throw ParseError(l.number, t.col, "'" + word + "'", t.text);
    }

    void expect_end_of_line(const Line& l, size_t k) const {
        if (k < l.toks.size())
            throw ParseError(l.number, l.toks[k].col, "end of line", l.toks[k].text);
    }

    std::string ident(const Line& l, size_t k, const std::string& what) const {
        const Token& t = tok(l, k, what);
        if (!is_identifier(t.text)) throw ParseError(l.number, t.col, what, t.text);
        return t.text;
    }

    int integer(const Line& l, size_t k, const std::string& what) const {
        const Token& t = tok(l, k, what);
        if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError(l.number, t.col, what, t.text);
        return std::stoi(t.text);
    }

    std::vector<int> int_list(const Line& l, const std::string& inner, int col,
                              const std::string& what) const {
        std::vector<int> out;
        size_t pos = 0;
        while (true) {
            size_t comma = inner.find(',', pos);
            std::string piece = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
            if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw ParseError(l.number, col, what, piece);
            out.push_back(std::stoi(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    // "(a,b,...)" as integers
    std::vector<int> tuple(const Line& l, size_t k, const std::string& what) const {
        const Token& t = tok(l, k, what);
        if (t.text.size() < 3 || t.text.front() != '(' || t.text.back() != ')')
            throw ParseError(l.number, t.col, what, t.text);
        return int_list(l, t.text.substr(1, t.text.size() - 2), t.col, what);
    }

    // "(a,b->v)" as (args, value)
    std::pair<std::vector<int>, int> graph_entry(const Line& l, size_t k) const {
        static const std::string what = "graph entry like (0,1->2)";
        const Token& t = tok(l, k, what);
        if (t.text.size() < 3 || t.text.front() != '(' || t.text.back() != ')')
            throw ParseError(l.number, t.col, what, t.text);
        std::string inner = t.text.substr(1, t.text.size() - 2);
        size_t arrow = inner.find("->");
        if (arrow == std::string::npos) throw ParseError(l.number, t.col, what, t.text);
        auto args = int_list(l, inner.substr(0, arrow), t.col, what);
        auto value = int_list(l, inner.substr(arrow + 2), t.col, what);
        if (value.size() != 1) throw ParseError(l.number, t.col, what, t.text);
        return {std::move(args), value[0]};
    }

    std::vector<const Line*> body(const Line& header) {
        std::vector<const Line*> out;
        while (true) {
            if (li_ >= lines_.size()) throw ParseError(header.number, 1, "'end' for this section", "");
            const Line& l = lines_[li_++];
            if (l.toks[0].text == "end") {
                expect_end_of_line(l, 1);
                return out;
            }
            out.push_back(&l);
        }
    }

    void fresh(const Line& h, const std::string& kind, const std::string& name) const {
        bool used = (kind == "language" && ws_.languages.count(name)) ||
                    (kind == "structure" && ws_.structures.count(name)) ||
                    (kind == "morphism" && ws_.morphisms.count(name)) ||
                    (kind == "fragment" && ws_.fragment_decls.count(name)) ||
                    (kind == "config" && ws_.configs.count(name)) ||
                    (kind == "theory" && ws_.theories.count(name));
        if (used) throw ParseError(h.number, h.toks[1].col, "a fresh " + kind + " name", name);
    }

    std::shared_ptr<const Language> need_language(const Line& l, const std::string& name) const {
        auto it = ws_.languages.find(name);
        if (it == ws_.languages.end()) throw UnresolvedReference(l.number, "language", name);
        return it->second;
    }

    void parse_language(const Line& h) {
        std::string name = ident(h, 1, "language name");
        fresh(h, "language", name);
        expect_end_of_line(h, 2);
        Language l;
        for (const Line* b : body(h)) {
            const std::string& key = b->toks[0].text;
            if (key == "rel" || key == "fun") {
                std::string sym = ident(*b, 1, "symbol name");
                int arity = integer(*b, 2, "arity");
                expect_end_of_line(*b, 3);
                if (arity < 1) throw ParseError(b->number, b->toks[2].col, "positive arity", b->toks[2].text);
                if (l.relations.count(sym) || l.functions.count(sym) || l.constants.count(sym))
                    throw ParseError(b->number, b->toks[1].col, "a fresh symbol name", sym);
                (key == "rel" ? l.relations : l.functions)[sym] = arity;
            } else if (key == "const") {
                std::string sym = ident(*b, 1, "symbol name");
                expect_end_of_line(*b, 2);
                if (l.relations.count(sym) || l.functions.count(sym) || l.constants.count(sym))
                    throw ParseError(b->number, b->toks[1].col, "a fresh symbol name", sym);
                l.constants.insert(sym);
            } else {
                throw ParseError(b->number, b->toks[0].col, "rel, fun, or const", key);
            }
        }
        l.check();
        ws_.languages[name] = std::make_shared<const Language>(std::move(l));
        ws_.order.emplace_back("language", name);
    }

    void parse_structure(const Line& h) {
        std::string name = ident(h, 1, "structure name");
        fresh(h, "structure", name);
        expect_word(h, 2, "over");
        std::string lname = ident(h, 3, "language name");
        expect_word(h, 4, "size");
        int size = integer(h, 5, "universe size");
        expect_end_of_line(h, 6);
        auto lang = need_language(h, lname);
        if (size < 1) throw ParseError(h.number, h.toks[5].col, "positive size", h.toks[5].text);

        FinStructure s;
        s.lang = lang;
        s.size = size;
        auto in_range = [&](const Line& l, int col, const std::vector<int>& xs) {
            for (int x : xs)
                if (x < 0 || x >= size)
                    throw ParseError(l.number, col, "element below " + std::to_string(size),
                                     std::to_string(x));
        };
        for (const Line* b : body(h)) {
            const std::string& key = b->toks[0].text;
            if (key == "rel") {
                std::string sym = ident(*b, 1, "relation symbol");
                auto it = lang->relations.find(sym);
                if (it == lang->relations.end())
                    throw UnresolvedReference(b->number, "relation symbol", sym);
                auto& tuples = s.rels[sym];
                for (size_t k = 2; k < b->toks.size(); ++k) {
                    auto t = tuple(*b, k, "tuple like (0,1)");
                    if (static_cast<int>(t.size()) != it->second)
                        throw ParseError(b->number, b->toks[k].col,
                                         "arity " + std::to_string(it->second) + " tuple",
                                         b->toks[k].text);
                    in_range(*b, b->toks[k].col, t);
                    tuples.insert(std::move(t));
                }
            } else if (key == "fun") {
                std::string sym = ident(*b, 1, "function symbol");
                auto it = lang->functions.find(sym);
                if (it == lang->functions.end())
                    throw UnresolvedReference(b->number, "function symbol", sym);
                auto& table = s.funcs[sym];
                table.assign(table_size(it->second, size), -1);
                for (size_t k = 2; k < b->toks.size(); ++k) {
                    auto [args, value] = graph_entry(*b, k);
                    if (static_cast<int>(args.size()) != it->second)
                        throw ParseError(b->number, b->toks[k].col,
                                         "arity " + std::to_string(it->second) + " graph entry",
                                         b->toks[k].text);
                    in_range(*b, b->toks[k].col, args);
                    in_range(*b, b->toks[k].col, {value});
                    int idx = table_index(args, size);
                    if (table[idx] >= 0)
                        throw ParseError(b->number, b->toks[k].col, "a unique graph entry",
                                         b->toks[k].text);
                    table[idx] = value;
                }
                for (int v : table)
                    if (v < 0)
                        throw ParseError(b->number, b->toks[1].col, "a total graph for " + sym,
                                         "partial graph");
            } else if (key == "const") {
                std::string sym = ident(*b, 1, "constant symbol");
                if (!lang->constants.count(sym))
                    throw UnresolvedReference(b->number, "constant symbol", sym);
                int v = integer(*b, 2, "constant value");
                expect_end_of_line(*b, 3);
                in_range(*b, b->toks[2].col, {v});
                s.consts[sym] = v;
            } else {
                throw ParseError(b->number, b->toks[0].col, "rel, fun, or const", key);
            }
        }
        for (const auto& [sym, arity] : lang->relations)
            if (!s.rels.count(sym)) s.rels[sym] = {};
        for (const auto& [sym, arity] : lang->functions)
            if (!s.funcs.count(sym))
                throw ParseError(h.number, 1, "a fun line for " + sym, "missing function");
        for (const auto& sym : lang->constants)
            if (!s.consts.count(sym))
                throw ParseError(h.number, 1, "a const line for " + sym, "missing constant");
        s.check();
        ws_.structures.emplace(name, std::move(s));
        ws_.order.emplace_back("structure", name);
    }

    void parse_morphism(const Line& h) {
        std::string name = ident(h, 1, "morphism name");
        fresh(h, "morphism", name);
        expect_word(h, 2, "from");
        std::string src = ident(h, 3, "language name");
        expect_word(h, 4, "to");
        std::string dst = ident(h, 5, "language name");
        expect_end_of_line(h, 6);
        LanguageMorphism m;
        m.source = *need_language(h, src);
        m.target = *need_language(h, dst);
        for (const Line* b : body(h)) {
            const std::string& key = b->toks[0].text;
            if (key != "rel" && key != "fun" && key != "const")
                throw ParseError(b->number, b->toks[0].col, "rel, fun, or const", key);
            std::string from = ident(*b, 1, "source symbol");
            expect_word(*b, 2, "->");
            std::string to = ident(*b, 3, "target symbol");
            expect_end_of_line(*b, 4);
            auto& table = key == "rel" ? m.rel_map : key == "fun" ? m.fun_map : m.con_map;
            if (table.count(from))
                throw ParseError(b->number, b->toks[1].col, "a fresh source symbol", from);
            table[from] = to;
        }
        try {
            m.check();
        } catch (const error& e) {
            throw ParseError(h.number, 1, "a well-formed morphism", e.what());
        }
        ws_.morphisms.emplace(name, std::move(m));
        ws_.order.emplace_back("morphism", name);
    }

    void parse_fragment(const Line& h) {
        std::string name = ident(h, 1, "fragment name");
        fresh(h, "fragment", name);
        expect_word(h, 2, "over");
        std::string lname = ident(h, 3, "language name");
        expect_end_of_line(h, 4);
        auto lang = need_language(h, lname);

        FragmentDecl decl;
        decl.language = lname;
        AecFragment f;
        f.lang = lang;
        for (const Line* b : body(h)) {
            const std::string& key = b->toks[0].text;
            if (key == "member") {
                std::string sname = ident(*b, 1, "structure name");
                expect_end_of_line(*b, 2);
                auto it = ws_.structures.find(sname);
                if (it == ws_.structures.end())
                    throw UnresolvedReference(b->number, "structure", sname);
                if (!(*it->second.lang == *lang))
                    throw ParseError(b->number, b->toks[1].col,
                                     "a structure over language " + lname, sname);
                decl.members.push_back(sname);
                f.structures.push_back(it->second);
            } else if (key == "pair") {
                int i = integer(*b, 1, "member index");
                int j = integer(*b, 2, "member index");
                expect_end_of_line(*b, 3);
                decl.pairs.insert({i, j});
            } else {
                throw ParseError(b->number, b->toks[0].col, "member or pair", key);
            }
        }
        for (auto [i, j] : decl.pairs) {
            if (i >= static_cast<int>(decl.members.size()) || j >= static_cast<int>(decl.members.size()))
                throw ParseError(h.number, 1, "pair indices below " + std::to_string(decl.members.size()),
                                 "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
            f.strong_pairs.insert({i, j});
        }
        f.check();
        if (!opt_.allow_invalid) {
            auto rep = validate(f);
            if (!rep.ok()) {
                std::string axiom = rep.order.verdict == Verdict::Fail        ? "order"
                                    : rep.isomorphism.verdict == Verdict::Fail ? "isomorphism"
                                    : rep.coherence.verdict == Verdict::Fail   ? "coherence"
                                    : rep.reunion.verdict == Verdict::Fail     ? "reunion"
                                                                               : "ls";
                throw ValidationFailure(name, axiom, "fragment fails the " + axiom + " axiom");
            }
        }
        ws_.fragment_decls.emplace(name, std::move(decl));
        ws_.fragments.emplace(name, std::make_shared<const AecFragment>(std::move(f)));
        ws_.order.emplace_back("fragment", name);
    }

    void parse_config(const Line& h) {
        std::string name = ident(h, 1, "config name");
        fresh(h, "config", name);
        expect_end_of_line(h, 2);
        ConfigDecl decl;
        int seen_base = 0, seen_left = 0, seen_right = 0;
        const Line* where = &h;
        for (const Line* b : body(h)) {
            const std::string& key = b->toks[0].text;
            where = b;
            if (key == "base") {
                decl.base = ident(*b, 1, "fragment name");
                expect_end_of_line(*b, 2);
                ++seen_base;
            } else if (key == "left" || key == "right") {
                std::string frag = ident(*b, 1, "fragment name");
                expect_word(*b, 2, "via");
                std::string mor = ident(*b, 3, "morphism name");
                expect_end_of_line(*b, 4);
                (key == "left" ? decl.left_fragment : decl.right_fragment) = frag;
                (key == "left" ? decl.left_morphism : decl.right_morphism) = mor;
                ++(key == "left" ? seen_left : seen_right);
            } else {
                throw ParseError(b->number, b->toks[0].col, "base, left, or right", key);
            }
        }
        if (seen_base != 1 || seen_left != 1 || seen_right != 1)
            throw ParseError(h.number, 1, "exactly one base, left, and right line",
                             "config " + name);
        auto frag = [&](const std::string& n) {
            auto it = ws_.fragments.find(n);
            if (it == ws_.fragments.end()) throw UnresolvedReference(where->number, "fragment", n);
            return it->second;
        };
        auto mor = [&](const std::string& n) {
            auto it = ws_.morphisms.find(n);
            if (it == ws_.morphisms.end()) throw UnresolvedReference(where->number, "morphism", n);
            return it->second;
        };
        auto base = frag(decl.base);
        auto left = frag(decl.left_fragment);
        auto right = frag(decl.right_fragment);
        auto check_leg = [&](const char* side, const LanguageMorphism& alpha,
                             const AecFragment& leg) {
            if (!check_morphism(alpha, leg, *base).ok())
                throw ValidationFailure(name, "morphism",
                                        std::string("config ") + name + ": the " + side +
                                            " morphism is not a reduct functor into the base");
        };
        check_leg("left", mor(decl.left_morphism), *left);
        check_leg("right", mor(decl.right_morphism), *right);
        ws_.configs.emplace(name, std::move(decl));
        ws_.order.emplace_back("config", name);
    }

    void parse_theory(const Line& h) {
        std::string name = ident(h, 1, "theory name");
        fresh(h, "theory", name);
        expect_word(h, 2, "in");
        std::string fname = ident(h, 3, "fragment name");
        expect_end_of_line(h, 4);
        auto it = ws_.fragments.find(fname);
        if (it == ws_.fragments.end()) throw UnresolvedReference(h.number, "fragment", fname);
        TheoryDecl decl;
        decl.fragment = fname;
        for (const Line* b : body(h)) {
            if (b->toks[0].text != "members")
                throw ParseError(b->number, b->toks[0].col, "members", b->toks[0].text);
            for (size_t k = 1; k < b->toks.size(); ++k) {
                int i = integer(*b, k, "member index");
                if (i >= it->second->count())
                    throw ParseError(b->number, b->toks[k].col,
                                     "index below " + std::to_string(it->second->count()),
                                     b->toks[k].text);
                decl.members.insert(i);
            }
        }
        if (!opt_.allow_invalid &&
            !is_closed_theory(connection_partition(*it->second), decl.members))
            throw ValidationFailure(name, "theory",
                                    "theory " + name + " is not a union of connection classes");
        ws_.theories.emplace(name, std::move(decl));
        ws_.order.emplace_back("theory", name);
    }

    std::vector<Line> lines_;
    size_t li_ = 0;
    ParseOptions opt_;
    Workspace ws_;
};

std::string language_name_for(const Workspace& ws, const Language& l) {
    for (const auto& [name, lang] : ws.languages)
        if (*lang == l) return name;
    throw error("print_workspace: a referenced language is not declared");
}

void print_tuple(std::ostringstream& out, const std::vector<int>& t) {
    out << '(';
    for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << ')';
}

void print_structure(std::ostringstream& out, const Workspace& ws, const std::string& name,
                     const FinStructure& s) {
    out << "structure " << name << " over " << language_name_for(ws, *s.lang) << " size "
        << s.size << "\n";
    for (const auto& [sym, tuples] : s.rels) {
        if (tuples.empty()) continue;
        out << "  rel " << sym;
        for (const auto& t : tuples) {
            out << ' ';
            print_tuple(out, t);
        }
        out << "\n";
    }
    for (const auto& [sym, table] : s.funcs) {
        out << "  fun " << sym;
        int arity = s.lang->functions.at(sym);
        std::vector<int> args(arity, 0);
        for (int idx = 0; idx < static_cast<int>(table.size()); ++idx) {
            out << " (";
            for (int a = 0; a < arity; ++a) out << (a ? "," : "") << args[a];
            out << "->" << table[idx] << ')';
            for (int a = arity - 1; a >= 0; --a) {
                if (++args[a] < s.size) break;
                args[a] = 0;
            }
        }
        out << "\n";
    }
    for (const auto& [sym, v] : s.consts) out << "  const " << sym << ' ' << v << "\n";
    out << "end\n";
}

}  // namespace

Workspace parse_workspace(const std::string& text, const ParseOptions& options) {
    return Parser(text, options).run();
}

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [kind, name] : ws.order) {
        if (!first) out << "\n";
        first = false;
        if (kind == "language") {
            const Language& l = *ws.languages.at(name);
            out << "language " << name << "\n";
            for (const auto& [sym, ar] : l.relations) out << "  rel " << sym << ' ' << ar << "\n";
            for (const auto& [sym, ar] : l.functions) out << "  fun " << sym << ' ' << ar << "\n";
            for (const auto& sym : l.constants) out << "  const " << sym << "\n";
            out << "end\n";
        } else if (kind == "structure") {
            print_structure(out, ws, name, ws.structures.at(name));
        } else if (kind == "morphism") {
            const LanguageMorphism& m = ws.morphisms.at(name);
            out << "morphism " << name << " from " << language_name_for(ws, m.source) << " to "
                << language_name_for(ws, m.target) << "\n";
            for (const auto& [a, b] : m.rel_map) out << "  rel " << a << " -> " << b << "\n";
            for (const auto& [a, b] : m.fun_map) out << "  fun " << a << " -> " << b << "\n";
            for (const auto& [a, b] : m.con_map) out << "  const " << a << " -> " << b << "\n";
            out << "end\n";
        } else if (kind == "fragment") {
            const FragmentDecl& d = ws.fragment_decls.at(name);
            out << "fragment " << name << " over " << d.language << "\n";
            for (const auto& m : d.members) out << "  member " << m << "\n";
            for (const auto& [i, j] : d.pairs) out << "  pair " << i << ' ' << j << "\n";
            out << "end\n";
        } else if (kind == "config") {
            const ConfigDecl& d = ws.configs.at(name);
            out << "config " << name << "\n";
            out << "  base " << d.base << "\n";
            out << "  left " << d.left_fragment << " via " << d.left_morphism << "\n";
            out << "  right " << d.right_fragment << " via " << d.right_morphism << "\n";
            out << "end\n";
        } else if (kind == "theory") {
            const TheoryDecl& d = ws.theories.at(name);
            out << "theory " << name << " in " << d.fragment << "\n";
            out << "  members";
            for (int i : d.members) out << ' ' << i;
            out << "\n";
            out << "end\n";
        }
    }
    return out.str();
}

bool same_workspace(const Workspace& a, const Workspace& b) {
    if (a.order != b.order) return false;
    if (a.languages.size() != b.languages.size()) return false;
    for (const auto& [name, lang] : a.languages) {
        auto it = b.languages.find(name);
        if (it == b.languages.end() || !(*it->second == *lang)) return false;
    }
    if (a.structures.size() != b.structures.size()) return false;
    for (const auto& [name, s] : a.structures) {
        auto it = b.structures.find(name);
        if (it == b.structures.end() || !(*it->second.lang == *s.lang) ||
            it->second.encode() != s.encode())
            return false;
    }
    return a.morphisms == b.morphisms && a.fragment_decls == b.fragment_decls &&
           a.configs == b.configs && a.theories == b.theories;
}

Workspace generate_workspace(std::uint64_t seed, const GenProfile& profile) {
    Workspace ws;
    Rng rng(seed);
    GeneratedConfig g = gen_config(rng, profile);

    auto add_language = [&](const std::string& name, std::shared_ptr<const Language> l) {
        ws.languages.emplace(name, std::move(l));
        ws.order.emplace_back("language", name);
    };
    add_language("L", g.base->lang);
    add_language("L0", g.k0->lang);
    add_language("L1", g.k1->lang);

    auto add_fragment = [&](const std::string& name, const std::string& lname,
                            const std::string& prefix,
                            const std::shared_ptr<const AecFragment>& f) {
        FragmentDecl decl;
        decl.language = lname;
        for (int i = 0; i < f->count(); ++i) {
            std::string sname = prefix + std::to_string(i);
            ws.structures.emplace(sname, f->structures[i]);
            ws.order.emplace_back("structure", sname);
            decl.members.push_back(sname);
        }
        decl.pairs = f->strong_pairs;
        ws.fragment_decls.emplace(name, std::move(decl));
        ws.fragments.emplace(name, f);
        ws.order.emplace_back("fragment", name);
    };
    add_fragment("K", "L", "k", g.base);
    add_fragment("K0", "L0", "m", g.k0);
    add_fragment("K1", "L1", "n", g.k1);

    ws.morphisms.emplace("a0", g.global.cfg.left.alpha);
    ws.order.emplace_back("morphism", "a0");
    ws.morphisms.emplace("a1", g.global.cfg.right.alpha);
    ws.order.emplace_back("morphism", "a1");

    ws.configs.emplace("G", ConfigDecl{"K", "K0", "a0", "K1", "a1"});
    ws.order.emplace_back("config", "G");

    auto add_theory = [&](const std::string& name, const std::string& fname,
                          const AecFragment& f) {
        auto parts = max_theories(connection_partition(f));
        if (parts.empty()) return;
        ws.theories.emplace(name, TheoryDecl{fname, parts.front().structures});
        ws.order.emplace_back("theory", name);
    };
    add_theory("T0", "K0", *g.k0);
    add_theory("T1", "K1", *g.k1);
    return ws;
}

}  // namespace aec
