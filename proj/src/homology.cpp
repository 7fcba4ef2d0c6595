#include "tlrep/homology.hpp"

#include <stdexcept>

namespace tlrep {

namespace {

enum class Role { Irr, Stan, Cost, Proj, None };

Role role_of(const Indec& m) {
    switch (m.kind) {
        case Kind::CritStan: return Role::Irr;
        case Kind::Proj: return Role::Proj;
        case Kind::B: return m.l == 0 ? Role::Irr : (m.l == 1 ? Role::Cost : Role::None);
        case Kind::T: return m.l == 1 ? Role::Stan : Role::None;
    }
    return Role::None;
}

int d(int a, int b) { return a == b ? 1 : 0; }

int hom_table(const AlgebraCtx& ctx, Role r, int k, Role c, int kp) {
    const int km = neighbor(ctx, k, -1), kpl = neighbor(ctx, k, 1);
    const int col = static_cast<int>(c);
    switch (r) {
        case Role::Irr: {
            const int row[] = {d(kp, k), d(kp, km), d(kp, k), d(kp, k)};
            return row[col];
        }
        case Role::Stan: {
            const int row[] = {d(kp, k), d(kp, k) + d(kp, km), d(kp, k), d(kp, k) + d(kp, kpl)};
            return row[col];
        }
        case Role::Cost: {
            const int row[] = {d(kp, kpl), d(kp, k), d(kp, k) + d(kp, kpl), d(kp, k) + d(kp, kpl)};
            return row[col];
        }
        case Role::Proj: {
            const int row[] = {d(kp, k), d(kp, k) + d(kp, km), d(kp, k) + d(kp, km), 2 * d(kp, k) + d(kp, km) + d(kp, kpl)};
            return row[col];
        }
        default:
            break;
    }
    throw std::logic_error("hom table row out of range");
}

int ext_table(const AlgebraCtx& ctx, Role r, int k, Role c, int kp) {
    const int km = neighbor(ctx, k, -1), kmm = neighbor(ctx, k, -2);
    const int kpl = neighbor(ctx, k, 1), kpp = neighbor(ctx, k, 2);
    const int kR = orbit_of(ctx, k).k_R();
    const int col = static_cast<int>(c);
    switch (r) {
        case Role::Irr: {
            const int row[] = {d(kp, km) + d(kp, kpl), d(kp, km) * d(k, kR) + d(kp, kmm), d(kp, kpl)};
            return row[col];
        }
        case Role::Stan: {
            const int row[] = {d(kp, km), d(kp, km) + d(kp, kmm), 0};
            return row[col];
        }
        case Role::Cost: {
            const int row[] = {d(kp, kpl) * d(kp, kR) + d(kp, kpp), 0, d(kp, kpl) + d(kp, kpp)};
            return row[col];
        }
        default:
            break;
    }
    throw std::logic_error("ext table row out of range");
}

bool same_block(const AlgebraCtx& ctx, const Indec& m, const Indec& n) { return orbit_of(ctx, m.k).contains(n.k); }

// k^e == kp for some e in lo, lo+2, .., hi
bool hits(const AlgebraCtx& ctx, int k, int kp, int lo, int hi) {
    for (int e = lo; e <= hi; e += 2)
        if (neighbor(ctx, k, e) == kp) return true;
    return false;
}

// Ext(Irr kp, B(k,l))
int ext_irr_b(const AlgebraCtx& ctx, int kp, int k, int l) {
    const int j = l / 2;
    if (l % 2 == 0) return hits(ctx, k, kp, -1, 2 * (j + 1) - 1) ? 1 : 0;
    return hits(ctx, k, kp, -1, 2 * j - 1) ? 1 : 0;
}

// Ext(B(k,l), Irr kp)
int ext_b_irr(const AlgebraCtx& ctx, int k, int l, int kp) {
    const int j = l / 2;
    if (l == 2 && kp == neighbor(ctx, k, 1)) return 1;
    if (l % 2 == 0) return hits(ctx, k, kp, 2, 2 * (j - 1)) ? 1 : 0;
    return hits(ctx, k, kp, 2, 2 * (j + 1)) ? 1 : 0;
}

bool degenerate_exception(const AlgebraCtx& ctx, const Indec& m, const Indec& n) {
    if (!ctx.degenerate() || m.k != 2 || n.k != 2) return false;
    const Indec irr = make_B(2, 0);
    if (ctx.n == 2) return m == irr && n == irr;
    return (m == irr && n == make_B(2, 1)) || (m == make_T(2, 1) && n == irr);
}

}  // namespace

bool separation_vanishes(const AlgebraCtx& ctx, const Indec& m, const Indec& n) {
    require_valid(ctx, m);
    require_valid(ctx, n);
    if (!same_block(ctx, m, n)) return true;
    OrbitView o = orbit_of(ctx, m.k);
    for (int a : composition_factors(ctx, m))
        for (int b : composition_factors(ctx, n)) {
            int pa = o.position(a), pb = o.position(b);
            if (pa - pb <= 1 && pb - pa <= 1) return false;
        }
    return true;
}

DimResult hom_dim(const AlgebraCtx& ctx, const Indec& m, const Indec& n) {
    require_valid(ctx, m);
    require_valid(ctx, n);
    if (!same_block(ctx, m, n)) return DimResult::of(0);
    if (m.kind == Kind::CritStan) return DimResult::of(1);
    const Role rm = role_of(m), rn = role_of(n);
    if (rm != Role::None && rn != Role::None) return DimResult::of(hom_table(ctx, rm, m.k, rn, n.k));
    if (rm == Role::Irr) return DimResult::of(count_of(socle_head(ctx, n).soc, m.k));
    if (rn == Role::Irr) return DimResult::of(count_of(socle_head(ctx, m).head, n.k));
    if (is_projective(ctx, m)) return DimResult::of(count_of(composition_factors(ctx, n), socle_head(ctx, m).head.front()));
    if (is_injective(ctx, n)) return DimResult::of(count_of(composition_factors(ctx, m), socle_head(ctx, n).soc.front()));
    if (separation_vanishes(ctx, m, n)) return DimResult::of(0);
    return DimResult::unknown();
}

DimResult ext_dim(const AlgebraCtx& ctx, const Indec& m, const Indec& n) {
    require_valid(ctx, m);
    require_valid(ctx, n);
    if (!same_block(ctx, m, n)) return DimResult::of(0);
    if (m.kind == Kind::CritStan) return DimResult::of(0);
    if (degenerate_exception(ctx, m, n)) return DimResult::of(1);
    if (is_projective(ctx, m) || is_injective(ctx, n)) return DimResult::of(0);
    const Role rm = role_of(m), rn = role_of(n);
    if (rm != Role::None && rm != Role::Proj && rn != Role::None && rn != Role::Proj)
        return DimResult::of(ext_table(ctx, rm, m.k, rn, n.k));
    if (rm == Role::Irr) {
        if (n.kind == Kind::B) return DimResult::of(ext_irr_b(ctx, m.k, n.k, n.l));
        if (n.kind == Kind::T) return DimResult::of(ext_b_irr(ctx, n.k, n.l, m.k));
    }
    if (rn == Role::Irr) {
        if (m.kind == Kind::B) return DimResult::of(ext_b_irr(ctx, m.k, m.l, n.k));
        if (m.kind == Kind::T) return DimResult::of(ext_irr_b(ctx, n.k, m.k, m.l));
    }
    if (separation_vanishes(ctx, m, n)) return DimResult::of(0);
    return DimResult::unknown();
}

namespace {

ModuleSum checked(const AlgebraCtx& ctx, std::initializer_list<Indec> parts) {
    ModuleSum s(ctx);
    for (const Indec& p : parts) {
        if (!validate(ctx, p)) throw std::logic_error("extension middle produced an invalid class");
        s.add(p);
    }
    return s;
}

int exponent_of(const AlgebraCtx& ctx, int k, int kp, int lo, int hi) {
    for (int e = lo; e <= hi; ++e)
        if (neighbor(ctx, k, e) == kp) return e;
    throw std::logic_error("label not found among neighbors");
}

}  // namespace

ModuleSum extension_middle(const AlgebraCtx& ctx, const Indec& target, int kp, Side side) {
    require_valid(ctx, target);
    if (!in_lambda0(ctx, kp)) throw DomainError("label " + std::to_string(kp) + " not in Lambda_0");
    const ModuleSum irr_sum = normalize(ctx, {AliasKind::Irr, kp, 0});
    const Indec irr = only_summand(irr_sum);
    DimResult e = side == Side::Quot ? ext_dim(ctx, irr, target) : ext_dim(ctx, target, irr);
    if (e != DimResult::of(1)) throw DomainError("extension group vanishes or is not one-dimensional");

    if (degenerate_exception(ctx, side == Side::Quot ? irr : target, side == Side::Quot ? target : irr))
        return checked(ctx, {make_P(2)});
    if (target.kind == Kind::T)
        return dual(extension_middle(ctx, dual(ctx, target), kp, side == Side::Sub ? Side::Quot : Side::Sub));
    if (target.kind != Kind::B) throw DomainError("extension middle needs a zigzag target");

    const int k = target.k, l = target.l;
    const int kR = orbit_of(ctx, k).k_R();
    if (side == Side::Quot) {
        int ex = exponent_of(ctx, k, kp, -1, l + 1);
        if (ex == -1) return checked(ctx, {make_T(kp, l + 1)});
        if (ex == l + 1) return checked(ctx, {make_B(k, l + 1)});
        return checked(ctx, {make_B(k, ex), make_T(kp, l - ex)});
    }
    if (l == 0) return dual(extension_middle(ctx, target, kp, Side::Quot));
    if (l == 1 && kp == kR && neighbor(ctx, k, 1) == kR) return checked(ctx, {make_P(kR)});
    if (l == 2 && kp == neighbor(ctx, k, 1)) return checked(ctx, {make_P(kp)});
    int ex = exponent_of(ctx, k, kp, 2, l + 1);
    if (ex == l + 1) return checked(ctx, {make_B(k, l + 1)});
    return checked(ctx, {make_B(k, ex), make_B(kp, l - ex)});
}

}  // namespace tlrep
