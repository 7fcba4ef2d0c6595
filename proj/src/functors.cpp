#include "tlrep/functors.hpp"

#include <stdexcept>

namespace tlrep {

namespace {

void add_alias(ModuleSum& out, AliasKind kind, int x, int mult = 1) {
    out.add(normalize_or_zero(out.ctx, {kind, x, 0}), mult);
}

// B or T(kappa, l) over out.ctx, dropping to l-1 when kappa^l leaves Lambda_0
void add_zigzag(ModuleSum& out, Kind kind, int kappa, int l) {
    const AlgebraCtx& t = out.ctx;
    if (l < 0 || !in_lambda0(t, kappa)) return;
    if (is_critical(t, kappa)) throw std::logic_error("zigzag at a critical label");
    if (!in_lambda0(t, neighbor(t, kappa, l))) --l;
    Indec m = (l == 0) ? make_B(kappa, 0) : Indec{kind, kappa, l};
    if (!validate(t, m)) throw std::logic_error("functor formula produced an invalid class over " + describe(t));
    out.add(m);
}

// as add_zigzag but without the boundary drop
void add_exact_zigzag(ModuleSum& out, Kind kind, int kappa, int l) {
    const AlgebraCtx& t = out.ctx;
    if (!in_lambda0(t, kappa)) return;
    Indec m = (l == 0) ? make_B(kappa, 0) : Indec{kind, kappa, l};
    if (!validate(t, m)) throw std::logic_error("functor formula produced an invalid class over " + describe(t));
    out.add(m);
}

// sum over j of P(k^{2j} + shift), j = 0..top
void add_critical_flank(const AlgebraCtx& src, ModuleSum& out, int k, int top, int shift) {
    for (int j = 0; j <= top; ++j) add_alias(out, AliasKind::Proj, neighbor(src, k, 2 * j) + shift);
}

ModuleSum restrict_zigzag(const AlgebraCtx& ctx, const Indec& m, ModuleSum out) {
    const int k = m.k, l = m.l;
    if (is_critical(ctx, k - 1)) add_critical_flank(ctx, out, k, l / 2, -1);
    else add_zigzag(out, m.kind, k - 1, l);
    if (ctx.family == Family::DTL) add_zigzag(out, m.kind, k, l);
    if (is_critical(ctx, k + 1)) add_critical_flank(ctx, out, k, (l - 1) / 2, +1);
    else add_zigzag(out, m.kind, k + 1, l);
    return out;
}

ModuleSum restrict_stan(const AlgebraCtx& ctx, int k, ModuleSum out) {
    add_alias(out, AliasKind::Stan, k - 1);
    if (ctx.family == Family::DTL) add_alias(out, AliasKind::Stan, k);
    add_alias(out, AliasKind::Stan, k + 1);
    return out;
}

ModuleSum restrict_critical(const AlgebraCtx& ctx, int k, ModuleSum out) {
    const int n = ctx.n;
    if (k == n) {
        add_alias(out, AliasKind::Stan, n - 1);
    } else if (ctx.family == Family::DTL && k == n - 1) {
        add_alias(out, AliasKind::Stan, n - 2);
        add_alias(out, AliasKind::Stan, n - 1);
    } else {
        if (ctx.family == Family::DTL) add_alias(out, AliasKind::Proj, k);
        add_alias(out, AliasKind::Proj, k + 1);
    }
    return out;
}

ModuleSum restrict_proj(const AlgebraCtx& ctx, int k, ModuleSum out) {
    const AlgebraCtx& t = out.ctx;
    struct Term {
        int label;
        int mult;
    };
    std::vector<Term> terms;
    if (is_critical(ctx, k - 1)) terms.push_back({k - 1, 2});
    else terms.push_back({k - 1, 1});
    if (ctx.family == Family::DTL) terms.push_back({k, 1});
    terms.push_back({k + 1, 1});
    if (is_critical(ctx, k + 1)) terms.push_back({neighbor(ctx, k, -1) - 1, 1});
    for (const Term& term : terms) {
        int x = term.label;
        if (x > t.n && !is_critical(t, x)) {
            add_alias(out, AliasKind::Stan, neighbor(t, x, -1), term.mult);
            continue;
        }
        if (!in_lambda0(t, x)) continue;
        add_alias(out, AliasKind::Proj, x, term.mult);
    }
    return out;
}

}  // namespace

ModuleSum restrict_module(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    if (ctx.n < 2) throw DomainError("restriction needs n >= 2");
    ModuleSum out(ctx.with_n(ctx.n - 1));
    switch (m.kind) {
        case Kind::CritStan:
            return restrict_critical(ctx, m.k, out);
        case Kind::Proj:
            return restrict_proj(ctx, m.k, out);
        case Kind::B:
        case Kind::T:
            break;
    }
    if (m.l == 0) {
        const int k = m.k;
        if (k == orbit_of(ctx, k).k_R()) return restrict_stan(ctx, k, out);
        add_alias(out, AliasKind::Irr, k - 1);
        if (ctx.family == Family::DTL) add_alias(out, AliasKind::Irr, k);
        if (!is_critical(ctx, k + 1)) add_alias(out, AliasKind::Irr, k + 1);
        return out;
    }
    return restrict_zigzag(ctx, m, out);
}

namespace {

// odd-length B over source ctx; l = 2i+1
ModuleSum induce_b_odd(const AlgebraCtx& ctx, int k, int l) {
    const int n = ctx.n, i = l / 2;
    const int top = neighbor(ctx, k, l + 1);
    ModuleSum out(ctx.with_n(n + 1));
    if (is_critical(ctx, k - 1)) add_critical_flank(ctx, out, k, i, -1);
    else if (top == n + 1 || top == n + 2) add_exact_zigzag(out, Kind::B, k - 1, l + 1);
    else add_exact_zigzag(out, Kind::B, k - 1, l);
    if (top == n + 1) add_exact_zigzag(out, Kind::B, k, l + 1);
    else add_exact_zigzag(out, Kind::B, k, l);
    if (is_critical(ctx, k + 1)) add_critical_flank(ctx, out, k, i, +1);
    else add_exact_zigzag(out, Kind::B, k + 1, l);
    return out;
}

// even-length T over source ctx; l = 2i >= 2
ModuleSum induce_t_even(const AlgebraCtx& ctx, int k, int l) {
    const int n = ctx.n, i = l / 2;
    const int top = neighbor(ctx, k, l + 1);
    ModuleSum out(ctx.with_n(n + 1));
    if (is_critical(ctx, k - 1)) add_critical_flank(ctx, out, k, i, -1);
    else add_exact_zigzag(out, Kind::T, k - 1, l);
    if (top == n + 1) add_exact_zigzag(out, Kind::T, k, l + 1);
    else add_exact_zigzag(out, Kind::T, k, l);
    if (is_critical(ctx, k + 1)) add_critical_flank(ctx, out, k, i - 1, +1);
    else if (top == n + 1 || top == n + 2) add_exact_zigzag(out, Kind::T, k + 1, l + 1);
    else add_exact_zigzag(out, Kind::T, k + 1, l);
    return out;
}

// Ind I(k_R) = Ind S(k_R) carries S(k_R + 1); when that label is critical at n+1
// it is a projective summand of Ind M once per copy of I(k_R) in the head of M
ModuleSum with_boundary_critical(const AlgebraCtx& ctx, const Indec& m, ModuleSum out) {
    const int kr = orbit_of(ctx, m.k).k_R();
    const int c = kr + 1;
    if (c > ctx.n + 1 || !is_critical(out.ctx, c)) return out;
    const int want = count_of(socle_head(ctx, m).head, kr);
    const Indec p = make_crit(c);
    const auto it = out.terms.find(p);
    const int have = it == out.terms.end() ? 0 : it->second;
    if (want > have) out.add(p, want - have);
    return out;
}

}  // namespace

ModuleSum induce_module(const AlgebraCtx& ctx, const Indec& m) {
    require_valid(ctx, m);
    const AlgebraCtx up = ctx.with_n(ctx.n + 2);
    switch (m.kind) {
        case Kind::CritStan:
        case Kind::Proj:
            return restrict_module(up, m);
        case Kind::B:
            if (m.l == 0) {
                if (m.k < orbit_of(ctx, m.k).k_R()) return restrict_module(up, m);
                return restrict_module(up, only_summand(normalize(up, {AliasKind::Stan, m.k, 0})));
            }
            if (m.l % 2 == 0) return restrict_module(up, m);
            return with_boundary_critical(ctx, m, induce_b_odd(ctx, m.k, m.l));
        case Kind::T:
            if (m.l % 2 == 1) return restrict_module(up, m);
            return with_boundary_critical(ctx, m, induce_t_even(ctx, m.k, m.l));
    }
    throw std::logic_error("unreachable");
}

ModuleSum restrict_sum(const ModuleSum& s) {
    ModuleSum out(s.ctx.with_n(s.ctx.n - 1));
    if (s.ctx.n < 2) throw DomainError("restriction needs n >= 2");
    for (const auto& [m, c] : s.terms) out.add(restrict_module(s.ctx, m), c);
    return out;
}

ModuleSum induce_sum(const ModuleSum& s) {
    ModuleSum out(s.ctx.with_n(s.ctx.n + 1));
    for (const auto& [m, c] : s.terms) out.add(induce_module(s.ctx, m), c);
    return out;
}

}  // namespace tlrep
