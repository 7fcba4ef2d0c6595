#include "tlrep/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlrep {

Indec make_B(int k, int l) { return Indec{Kind::B, k, l}; }
Indec make_T(int k, int l) { return Indec{Kind::T, k, l}; }
Indec make_P(int k) { return Indec{Kind::Proj, k, 0}; }
Indec make_crit(int k) { return Indec{Kind::CritStan, k, 0}; }

void ModuleSum::add(const Indec& m, int mult) {
    if (mult == 0) return;
    int& v = terms[m];
    v += mult;
    if (v == 0) terms.erase(m);
}

void ModuleSum::add(const ModuleSum& other, int mult) {
    for (const auto& [m, c] : other.terms) add(m, c * mult);
}

int ModuleSum::total() const {
    int t = 0;
    for (const auto& kv : terms) t += kv.second;
    return t;
}

Factors merge(const Factors& a, const Factors& b) {
    Factors out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int count_of(const Factors& f, int k) {
    auto r = std::equal_range(f.begin(), f.end(), k);
    return static_cast<int>(r.second - r.first);
}

std::string to_string(const Indec& m) {
    switch (m.kind) {
        case Kind::B: return "B(" + std::to_string(m.k) + "," + std::to_string(m.l) + ")";
        case Kind::T: return "T(" + std::to_string(m.k) + "," + std::to_string(m.l) + ")";
        case Kind::Proj:
        case Kind::CritStan: return "P(" + std::to_string(m.k) + ")";
    }
    return "?";
}

namespace {

ModuleSum single(const AlgebraCtx& ctx, const Indec& m) {
    ModuleSum s(ctx);
    s.add(m);
    return s;
}

// zigzag of the given kind produced by a cokernel/kernel formula;
// negative length or a label outside Lambda_0 means zero
ModuleSum zigzag(const AlgebraCtx& ctx, Kind kind, int x, int l) {
    ModuleSum s(ctx);
    if (l < 0 || !in_lambda0(ctx, x)) return s;
    Indec m = (l == 0) ? make_B(x, 0) : Indec{kind, x, l};
    if (!validate(ctx, m)) throw std::logic_error("formula produced invalid class " + to_string(m) + " over " + describe(ctx));
    s.add(m);
    return s;
}

Factors exponents(const AlgebraCtx& ctx, int k, int l, int parity) {
    Factors f;
    for (int e = parity; e <= l; e += 2) f.push_back(neighbor(ctx, k, e));
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

bool validate(const AlgebraCtx& ctx, const Indec& m) {
    if (ctx.n < 1 || ctx.ell < 2) return false;
    switch (m.kind) {
        case Kind::CritStan:
            return m.l == 0 && in_lambda(ctx, m.k) && is_critical(ctx, m.k);
        case Kind::Proj: {
            if (m.l != 0 || !in_lambda0(ctx, m.k) || is_critical(ctx, m.k)) return false;
            return m.k > orbit_of(ctx, m.k).k_L();
        }
        case Kind::B:
        case Kind::T: {
            if (m.l < (m.kind == Kind::T ? 1 : 0)) return false;
            if (!in_lambda0(ctx, m.k) || is_critical(ctx, m.k)) return false;
            return in_lambda(ctx, neighbor(ctx, m.k, m.l));
        }
    }
    return false;
}

void require_valid(const AlgebraCtx& ctx, const Indec& m) {
    if (!validate(ctx, m)) throw DomainError(to_string(m) + " is not a valid class over " + describe(ctx));
}

ModuleSum normalize(const AlgebraCtx& ctx, const AliasSpec& a) {
    check_ctx(ctx);
    int k = a.k;
    if (!in_lambda(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda for " + describe(ctx));
    ModuleSum s(ctx);
    const bool degen = ctx.degenerate();
    if (a.kind == AliasKind::B || a.kind == AliasKind::T) {
        Indec m{a.kind == AliasKind::B ? Kind::B : Kind::T, k, a.l};
        if (m.kind == Kind::T && m.l == 0) m = make_B(k, 0);
        require_valid(ctx, m);
        s.add(m);
        return s;
    }
    if (is_critical(ctx, k)) {
        s.add(make_crit(k));
        return s;
    }
    OrbitView o = orbit_of(ctx, k);
    switch (a.kind) {
        case AliasKind::Irr:
            if (!(degen && k == 0)) s.add(make_B(k, 0));
            break;
        case AliasKind::Stan:
            if (degen && k == 0) s.add(make_B(2, 0));
            else s.add(k < o.k_R() ? make_T(k, 1) : make_B(k, 0));
            break;
        case AliasKind::Cost:
            if (degen && k == 0) s.add(make_B(2, 0));
            else s.add(k < o.k_R() ? make_B(k, 1) : make_B(k, 0));
            break;
        case AliasKind::Proj:
            if (degen && k == 0) throw DomainError("P(0) is undefined in the degenerate case");
            if (!degen && k == o.k_L()) s.add(k < o.k_R() ? make_T(k, 1) : make_B(k, 0));
            else s.add(make_P(k));
            break;
        case AliasKind::Inj:
            if (degen && k == 0) throw DomainError("J(0) is undefined in the degenerate case");
            if (!degen && k == o.k_L()) s.add(k < o.k_R() ? make_B(k, 1) : make_B(k, 0));
            else s.add(make_P(k));
            break;
        default:
            break;
    }
    return s;
}

ModuleSum normalize_or_zero(const AlgebraCtx& ctx, const AliasSpec& a) {
    if (!in_lambda(ctx, a.k)) return ModuleSum(ctx);
    if ((a.kind == AliasKind::Proj || a.kind == AliasKind::Inj) && !in_lambda0(ctx, a.k)) return ModuleSum(ctx);
    return normalize(ctx, a);
}

OrbitView orbit_of_indec(const AlgebraCtx& ctx, const Indec& m) { return orbit_of(ctx, m.k); }

std::vector<Indec> enumerate_orbit(const AlgebraCtx& ctx, const OrbitView& orb) {
    std::vector<Indec> out;
    if (orb.critical) {
        out.push_back(make_crit(orb.k_L()));
        return out;
    }
    std::vector<int> mem = local_members(ctx, orb);
    const int s = static_cast<int>(mem.size());
    for (int a = 0; a < s; ++a) {
        for (int l = 0; a + l < s; ++l) out.push_back(make_B(mem[a], l));
        for (int l = 1; a + l < s; ++l) out.push_back(make_T(mem[a], l));
        if (mem[a] > orb.k_L()) out.push_back(make_P(mem[a]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Indec> enumerate_indecomposables(const AlgebraCtx& ctx) {
    check_ctx(ctx);
    std::vector<Indec> out;
    for (const auto& o : orbit_partition(ctx)) {
        auto part = enumerate_orbit(ctx, o);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Factors composition_factors(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    Factors f;
    switch (m.kind) {
        case Kind::CritStan:
            f = {m.k};
            break;
        case Kind::Proj:
            for (int x : {neighbor(ctx, m.k, -1), m.k, m.k, neighbor(ctx, m.k, 1)})
                if (in_lambda0(ctx, x)) f.push_back(x);
            break;
        case Kind::B:
        case Kind::T:
            for (int e = 0; e <= m.l; ++e) f.push_back(neighbor(ctx, m.k, e));
            break;
    }
    std::sort(f.begin(), f.end());
    return f;
}

Factors composition_factors(const ModuleSum& s) {
    Factors out;
    for (const auto& [m, c] : s.terms) {
        Factors f = composition_factors(s.ctx, m);
        for (int i = 0; i < c; ++i) out = merge(out, f);
    }
    return out;
}

SocleHead socle_head(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    switch (m.kind) {
        case Kind::CritStan:
        case Kind::Proj:
            return {{m.k}, {m.k}};
        case Kind::B:
            return {exponents(ctx, m.k, m.l, 0), m.l == 0 ? Factors{m.k} : exponents(ctx, m.k, m.l, 1)};
        case Kind::T:
            return {exponents(ctx, m.k, m.l, 1), exponents(ctx, m.k, m.l, 0)};
    }
    return {};
}

std::vector<Factors> loewy_layers(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind == Kind::Proj) {
        Factors mid;
        for (int x : {neighbor(ctx, m.k, -1), neighbor(ctx, m.k, 1)})
            if (in_lambda0(ctx, x)) mid.push_back(x);
        if (mid.empty()) return {{m.k}, {m.k}};
        return {{m.k}, mid, {m.k}};
    }
    if (m.kind == Kind::CritStan || m.l == 0) return {{m.k}};
    SocleHead sh = socle_head(ctx, m);
    return {sh.head, sh.soc};
}

Indec dual(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind == Kind::B && m.l > 0) return make_T(m.k, m.l);
    if (m.kind == Kind::T) return make_B(m.k, m.l);
    return m;
}

ModuleSum dual(const ModuleSum& s) {
    ModuleSum out(s.ctx);
    for (const auto& [m, c] : s.terms) out.add(dual(s.ctx, m), c);
    return out;
}

ModuleSum projective_cover(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind == Kind::CritStan || m.kind == Kind::Proj) return single(ctx, m);
    ModuleSum s(ctx);
    for (int x : socle_head(ctx, m).head) s.add(normalize(ctx, {AliasKind::Proj, x, 0}));
    return s;
}

ModuleSum injective_hull(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind == Kind::CritStan || m.kind == Kind::Proj) return single(ctx, m);
    ModuleSum s(ctx);
    for (int x : socle_head(ctx, m).soc) s.add(normalize(ctx, {AliasKind::Inj, x, 0}));
    return s;
}

bool is_projective(const AlgebraCtx& ctx, const Indec& m) { return projective_cover(ctx, m) == single(ctx, m); }

bool is_injective(const AlgebraCtx& ctx, const Indec& m) { return injective_hull(ctx, m) == single(ctx, m); }

namespace {

struct Deltas {
    int dl;   // k = k_L
    int dr;   // k^l = k_R
};

Deltas deltas(const AlgebraCtx& ctx, const Indec& m) {
    OrbitView o = orbit_of(ctx, m.k);
    return {m.k == o.k_L() ? 1 : 0, neighbor(ctx, m.k, m.l) == o.k_R() ? 1 : 0};
}

}  // namespace

ModuleSum coker_inj(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind != Kind::B && m.kind != Kind::T) throw DomainError("coker_inj is defined for zigzag classes only");
    const auto [dl, dr] = deltas(ctx, m);
    const int j = m.l / 2;
    const bool even = m.l % 2 == 0;
    if (m.kind == Kind::B) {
        if (ctx.degenerate() && m.k == 2) {
            if (even) return zigzag(ctx, Kind::T, 2, 2 * j + 1 - dr);
            return zigzag(ctx, Kind::T, 2, 2 * j);
        }
        int x = neighbor(ctx, m.k, 2 * dl - 1);
        if (even) return zigzag(ctx, Kind::B, x, 2 * (j + 1 - dl) - dr);
        return zigzag(ctx, Kind::B, x, 2 * (j - dl) + 1);
    }
    int x = neighbor(ctx, m.k, 1);
    if (even) return zigzag(ctx, Kind::T, x, 2 * (j - 1));
    return zigzag(ctx, Kind::T, x, 2 * j + 1 - dr);
}

ModuleSum ker_proj(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (m.kind != Kind::B && m.kind != Kind::T) throw DomainError("ker_proj is defined for zigzag classes only");
    const auto [dl, dr] = deltas(ctx, m);
    const int j = m.l / 2;
    const bool even = m.l % 2 == 0;
    if (m.kind == Kind::B && m.l > 0) {
        int x = neighbor(ctx, m.k, 1);
        if (even) return zigzag(ctx, Kind::B, x, 2 * (j - 1));
        return zigzag(ctx, Kind::B, x, 2 * j + 1 - dr);
    }
    if (ctx.degenerate() && m.k == 2) {
        if (even) return zigzag(ctx, Kind::B, 2, 2 * j + 1 - dr);
        return zigzag(ctx, Kind::B, 2, 2 * j);
    }
    int x = neighbor(ctx, m.k, 2 * dl - 1);
    if (even) return zigzag(ctx, Kind::T, x, 2 * (j + 1 - dl) - dr);
    return zigzag(ctx, Kind::T, x, 2 * (j - dl) + 1);
}

namespace {

ModuleSum alias(const AlgebraCtx& ctx, AliasKind kind, int k, int l = 0) { return normalize_or_zero(ctx, {kind, k, l}); }

ShortExact dual_seq(const ShortExact& e) { return {dual(e.quot), dual(e.mid), dual(e.sub)}; }

std::vector<ShortExact> b_sequences(const AlgebraCtx& ctx, int k, int l) {
    std::vector<ShortExact> out;
    ModuleSum mid = single(ctx, make_B(k, l));
    if (l == 0) return out;
    if (l == 1) {
        out.push_back({alias(ctx, AliasKind::Irr, k), mid, alias(ctx, AliasKind::Irr, neighbor(ctx, k, 1))});
        return out;
    }
    const int j = l / 2;
    const int k2 = neighbor(ctx, k, 2);
    if (l % 2 == 0) {
        out.push_back({single(ctx, make_B(k, l - 2)), mid, alias(ctx, AliasKind::Stan, neighbor(ctx, k, l - 1))});
        out.push_back({single(ctx, make_B(k2, l - 2)), mid, alias(ctx, AliasKind::Cost, k)});
        out.push_back({alias(ctx, AliasKind::Irr, neighbor(ctx, k, l)), mid, single(ctx, make_B(k, l - 1))});
        return out;
    }
    if (neighbor(ctx, k, l) != orbit_of(ctx, k).k_R())
        out.push_back({single(ctx, make_B(k2, 2 * j - 1)), mid, alias(ctx, AliasKind::Cost, k)});
    else
        out.push_back({single(ctx, make_B(k, 2 * j)), mid, alias(ctx, AliasKind::Irr, neighbor(ctx, k, l))});
    return out;
}

}  // namespace

std::vector<ShortExact> exact_sequences(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    std::vector<ShortExact> out;
    switch (m.kind) {
        case Kind::CritStan:
            break;
        case Kind::B:
            out = b_sequences(ctx, m.k, m.l);
            break;
        case Kind::T:
            for (const auto& e : b_sequences(ctx, m.k, m.l)) out.push_back(dual_seq(e));
            break;
        case Kind::Proj: {
            ModuleSum mid = single(ctx, m);
            ModuleSum irr = alias(ctx, AliasKind::Irr, m.k);
            out.push_back({irr, mid, coker_inj(ctx, make_B(m.k, 0))});
            out.push_back({ker_proj(ctx, make_B(m.k, 0)), mid, irr});
            int km = neighbor(ctx, m.k, -1);
            out.push_back({alias(ctx, AliasKind::Stan, km), mid, alias(ctx, AliasKind::Stan, m.k)});
            out.push_back({alias(ctx, AliasKind::Cost, m.k), mid, alias(ctx, AliasKind::Cost, km)});
            break;
        }
    }
    return out;
}

Indec only_summand(const ModuleSum& s) {
    if (s.terms.size() != 1 || s.terms.begin()->second != 1) throw DomainError("expected exactly one indecomposable summand");
    return s.terms.begin()->first;
}

}  // namespace tlrep
