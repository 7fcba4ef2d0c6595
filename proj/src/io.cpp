#include "tlrep/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace tlrep {

namespace {

using json = nlohmann::json;

class Parser {
public:
    explicit Parser(const std::string& t) : text_(t) {}

    ParsedSpec run() {
        ParsedSpec out;
        skip();
        if (pos_ == text_.size()) throw ParseError("empty module spec", pos_);
        out.push_back(term());
        while (true) {
            skip();
            if (pos_ == text_.size()) break;
            expect('+');
            out.push_back(term());
        }
        return out;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
            throw ParseError(std::string("expected '") + c + "', found " + got, pos_);
        }
        ++pos_;
    }

    int integer() {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        long long v = 0;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000LL) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == digits) throw ParseError("expected integer", start);
        return static_cast<int>(neg ? -v : v);
    }

    SpecTerm term() {
        SpecTerm t;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t at = pos_;
            t.mult = integer();
            if (t.mult < 1) throw ParseError("multiplicity must be positive", at);
            expect('*');
        }
        skip();
        const std::size_t at = pos_;
        const char c = peek();
        bool two = false;
        switch (c) {
            case 'I': t.alias.kind = AliasKind::Irr; break;
            case 'S': t.alias.kind = AliasKind::Stan; break;
            case 'C': t.alias.kind = AliasKind::Cost; break;
            case 'P': t.alias.kind = AliasKind::Proj; break;
            case 'J': t.alias.kind = AliasKind::Inj; break;
            case 'B': t.alias.kind = AliasKind::B; two = true; break;
            case 'T': t.alias.kind = AliasKind::T; two = true; break;
            default: throw ParseError("expected one of I S C P J B T", at);
        }
        ++pos_;
        expect('(');
        t.alias.k = integer();
        if (two) {
            if (peek() != ',') throw ParseError(std::string(1, c) + " takes two arguments", pos_);
            ++pos_;
            t.alias.l = integer();
        } else if (peek() == ',') {
            throw ParseError(std::string(1, c) + " takes one argument", pos_);
        }
        expect(')');
        return t;
    }
};

char letter(const Indec& m) {
    switch (m.kind) {
        case Kind::B: return 'B';
        case Kind::T: return 'T';
        default: return 'P';
    }
}

std::vector<std::pair<Indec, int>> print_order(const ModuleSum& s) {
    std::vector<std::pair<Indec, int>> v(s.terms.begin(), s.terms.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(letter(a.first), a.first.k, a.first.l) < std::make_tuple(letter(b.first), b.first.k, b.first.l);
    });
    return v;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::B: return "B";
        case Kind::T: return "T";
        case Kind::Proj: return "Proj";
        case Kind::CritStan: return "CriticalStan";
    }
    return "?";
}

json ctx_obj(const AlgebraCtx& ctx) {
    return json{{"family", ctx.family == Family::TL ? "tl" : "dtl"}, {"n", ctx.n}, {"ell", ctx.ell}};
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

ParsedSpec parse_module_spec(const std::string& text) { return Parser(text).run(); }

ModuleSum to_module_sum(const AlgebraCtx& ctx, const ParsedSpec& spec) {
    ModuleSum out(ctx);
    for (const SpecTerm& t : spec) out.add(normalize(ctx, t.alias), t.mult);
    return out;
}

ModuleSum parse_module(const AlgebraCtx& ctx, const std::string& text) {
    return to_module_sum(ctx, parse_module_spec(text));
}

std::string alias_string(const AliasSpec& a) {
    const std::string k = std::to_string(a.k);
    switch (a.kind) {
        case AliasKind::Irr: return "I(" + k + ")";
        case AliasKind::Stan: return "S(" + k + ")";
        case AliasKind::Cost: return "C(" + k + ")";
        case AliasKind::Proj: return "P(" + k + ")";
        case AliasKind::Inj: return "J(" + k + ")";
        case AliasKind::B: return "B(" + k + "," + std::to_string(a.l) + ")";
        case AliasKind::T: return "T(" + k + "," + std::to_string(a.l) + ")";
    }
    return "?";
}

std::string to_string(const ModuleSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : print_order(s)) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += to_string(m);
    }
    return out;
}

std::string to_string(const Factors& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
    return out + "}";
}

std::string ctx_json(const AlgebraCtx& ctx) { return ctx_obj(ctx).dump(); }

std::string sum_json(const ModuleSum& s) {
    json arr = json::array();
    for (const auto& [m, c] : print_order(s)) {
        json e{{"kind", kind_name(m.kind)}, {"k", m.k}, {"mult", c}, {"spec", to_string(m)}};
        if (m.kind == Kind::B || m.kind == Kind::T) e["l"] = m.l;
        arr.push_back(e);
    }
    return json{{"summands", arr}}.dump();
}

std::string quiver_json(const ARQuiver& q, bool show_tau) {
    json block = ctx_obj(q.ctx);
    block["orbit"] = q.orbit.members;
    block["critical"] = q.orbit.critical;
    block["degenerate"] = q.degenerate_block;
    json local = json::object();
    for (const Local& v : q.vertices) local[to_string(q.global(v))] = local_name(v);
    block["local"] = local;
    block["labels"] = q.labels;

    std::vector<std::string> verts;
    for (const Local& v : q.vertices) verts.push_back(to_string(q.global(v)));
    std::sort(verts.begin(), verts.end());
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& [u, v] : q.arrows) arrows.push_back({to_string(q.global(u)), to_string(q.global(v))});
    std::sort(arrows.begin(), arrows.end());
    json arr = json::array();
    for (const auto& [a, b] : arrows) arr.push_back(json::array({a, b}));
    json tau = json::object();
    if (show_tau)
        for (const auto& [v, t] : q.tau) tau[to_string(q.global(v))] = to_string(q.global(t));
    return json{{"block", block}, {"vertices", verts}, {"arrows", arr}, {"tau", tau}}.dump();
}

std::string quiver_dot(const ARQuiver& q, bool show_tau) {
    std::vector<std::pair<std::string, std::string>> nodes;
    for (const Local& v : q.vertices) nodes.push_back({to_string(q.global(v)), local_name(v)});
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::pair<std::string, std::string>> arrows, taus;
    for (const auto& [u, v] : q.arrows) arrows.push_back({to_string(q.global(u)), to_string(q.global(v))});
    if (show_tau)
        for (const auto& [v, t] : q.tau) taus.push_back({to_string(q.global(v)), to_string(q.global(t))});
    std::sort(arrows.begin(), arrows.end());
    std::sort(taus.begin(), taus.end());

    std::ostringstream os;
    os << "digraph " << dot_quote(family_name(q.ctx.family) + " n=" + std::to_string(q.ctx.n) + " ell=" +
                                  std::to_string(q.ctx.ell) + " orbit=" + std::to_string(q.orbit.k_L()))
       << " {\n";
    os << "  // local labels:";
    for (std::size_t a = 0; a < q.labels.size(); ++a) os << " " << a + 1 << "->" << q.labels[a];
    os << "\n";
    for (const auto& [id, loc] : nodes) os << "  " << dot_quote(id) << " [xlabel=" << dot_quote(loc) << "];\n";
    for (const auto& [a, b] : arrows) os << "  " << dot_quote(a) << " -> " << dot_quote(b) << ";\n";
    for (const auto& [a, b] : taus) os << "  " << dot_quote(a) << " -> " << dot_quote(b) << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace tlrep
