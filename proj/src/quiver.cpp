#include "tlrep/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlrep {

Local local_B(int a, int l) { return Local{LKind::B, a, l}; }
Local local_T(int a, int l) { return l == 0 ? Local{LKind::B, a, 0} : Local{LKind::T, a, l}; }
Local local_I(int a) { return Local{LKind::B, a, 0}; }
Local local_P(int a) { return Local{LKind::P, a, 0}; }

Local local_dual(const Local& v) {
    if (v.kind == LKind::B && v.l > 0) return local_T(v.a, v.l);
    if (v.kind == LKind::T) return local_B(v.a, v.l);
    return v;
}

bool is_irreducible(const Local& v) { return v.kind == LKind::B && v.l == 0; }

std::string local_name(const Local& v) {
    if (v.kind == LKind::P) return "P_" + std::to_string(v.a);
    if (is_irreducible(v)) return "I_" + std::to_string(v.a);
    return std::string(v.kind == LKind::B ? "B_" : "T_") + std::to_string(v.a) + "^" + std::to_string(v.l);
}

std::optional<Local> reflect_delete(int k, int j, int s) {
    if (!(0 <= j && j <= 2 * s + 1 && -s <= k && k <= s && 1 <= j + k && j + k <= 2 * s + 1))
        throw DomainError("reflection-deletion conditions violated");
    std::set<int> gone;
    for (int m = k; m <= k + j; ++m) {
        if (m <= 0) gone.insert({m, -m});
        if (m >= s + 1) gone.insert({m, 2 * (s + 1) - m});
    }
    std::vector<int> keep;
    for (int m = k; m <= k + j; ++m)
        if (!gone.count(m)) keep.push_back(m);
    if (keep.empty()) return std::nullopt;
    const int a = keep.front(), b = keep.back();
    if (b - a + 1 != static_cast<int>(keep.size())) throw std::logic_error("reflection-deletion left a gap");
    const bool bottom = (a - k) % 2 == 0;
    return bottom ? local_B(a, b - a) : local_T(a, b - a);
}

namespace {

Local rd(int k, int j, int s) {
    auto v = reflect_delete(k, j, s);
    if (!v) throw std::logic_error("reflection-deletion vanished inside an orbit recipe");
    return *v;
}

int contiguous_index(const std::string& id) {
    const int m = std::stoi(id.substr(1));
    if (id[0] == 't') return m;
    return m - 1;
}

}  // namespace

std::vector<TauOrbit> tau_orbits(int s) {
    if (s < 2) throw DomainError("tau orbits need s >= 2");
    const int i = s / 2;
    const bool odd = s % 2 == 1;
    std::vector<TauOrbit> out;

    TauOrbit t0{"t0", true, {}};
    for (int a = 1; a <= 2 * i - 1; a += 2) t0.members.push_back(local_T(a, 1));
    if (odd) t0.members.push_back(local_I(s));
    for (int a = 2 * i - 1; a >= 1; a -= 2) t0.members.push_back(local_B(a, 1));
    out.push_back(t0);

    for (int l = 1; l <= i; ++l) {
        // i_{2l}
        const int m = odd ? 2 * l : 2 * i + 1 - 2 * l;
        std::vector<Local> x;
        for (int k = 2 * i + 1 - m; k >= 1 - m; k -= 2) x.push_back(rd(k, 2 * m - 1, s));
        TauOrbit orb{"i" + std::to_string(2 * l), false, x};
        for (int t = static_cast<int>(x.size()) - 2; t >= 1; --t) orb.members.push_back(local_dual(x[t]));
        if (!is_irreducible(x.front())) orb.members.push_back(local_dual(x.front()));
        out.push_back(orb);

        // t_{2l}
        if (2 * l > s - 1) continue;
        const int mt = 2 * l;
        std::vector<Local> y;
        for (int k = 2 * i - 1 - mt; k >= 1 - mt; k -= 2) y.push_back(rd(k, 2 * mt + 1, s));
        TauOrbit tor{"t" + std::to_string(2 * l), false, {}};
        if (odd) tor.members.push_back(rd(2 * i + 1 - mt, 2 * mt + 1, s));
        tor.members.insert(tor.members.end(), y.begin(), y.end());
        for (auto it = y.rbegin(); it != y.rend(); ++it) tor.members.push_back(local_dual(*it));
        out.push_back(tor);
    }
    return out;
}

std::vector<Arrow> seed_morphisms(int s) {
    std::vector<Arrow> out;
    out.push_back({local_B(1, 1), local_I(2)});
    out.push_back({local_I(2), local_T(1, 1)});
    for (int j = 2; j < s; ++j) {
        const Local t = local_T(j - 1, 2), b = local_B(j - 1, 2);
        for (const Local& mid : {local_P(j), local_I(j - 1), local_I(j + 1)}) {
            out.push_back({t, mid});
            out.push_back({mid, b});
        }
    }
    const Local t = local_T(s - 1, 1), b = local_B(s - 1, 1);
    for (const Local& mid : {local_P(s), local_I(s - 1)}) {
        out.push_back({t, mid});
        out.push_back({mid, b});
    }
    return out;
}

namespace {

std::optional<Local> at(const TauOrbit& o, int idx) {
    const int n = static_cast<int>(o.members.size());
    if (o.chain) {
        if (idx < 0 || idx >= n) return std::nullopt;
        return o.members[idx];
    }
    return o.members[((idx % n) + n) % n];
}

int index_in(const TauOrbit& o, const Local& v) {
    auto it = std::find(o.members.begin(), o.members.end(), v);
    return it == o.members.end() ? -1 : static_cast<int>(it - o.members.begin());
}

}  // namespace

std::vector<Arrow> weave(const TauOrbit& x, const TauOrbit& y, const Arrow& seed, int s) {
    const int p = index_in(x, seed.first), q = index_in(y, seed.second);
    if (p < 0 || q < 0) throw DomainError("seed endpoints do not lie in the given tau-orbits");
    const int dx = contiguous_index(x.id), dy = contiguous_index(y.id);
    if (dx - dy != 1 && dy - dx != 1) throw DomainError("tau-orbits " + x.id + " and " + y.id + " are not contiguous");
    std::set<Arrow> out;
    for (int m = -2 * s - 2; m <= 2 * s + 2; ++m) {
        auto u = at(x, p + m), v = at(y, q + m), u1 = at(x, p + m + 1);
        if (u && v) out.insert({*u, *v});
        if (v && u1) out.insert({*v, *u1});
    }
    return {out.begin(), out.end()};
}

Indec ARQuiver::global(const Local& v) const {
    const int k = labels.at(v.a - 1);
    if (orbit.critical) return make_crit(k);
    switch (v.kind) {
        case LKind::B: return make_B(k, v.l);
        case LKind::T: return make_T(k, v.l);
        case LKind::P: return make_P(k);
    }
    throw std::logic_error("unreachable");
}

ARQuiver local_quiver(int s) {
    ARQuiver q;
    const auto orbits = tau_orbits(s);
    std::map<Local, int> where;
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
        const TauOrbit& orb = orbits[o];
        const int n = static_cast<int>(orb.members.size());
        for (int p = 0; p < n; ++p) {
            const Local& v = orb.members[p];
            if (!q.vertices.insert(v).second) throw std::logic_error("tau-orbits overlap at " + local_name(v));
            where[v] = o;
            if (p > 0) q.tau[v] = orb.members[p - 1];
            else if (!orb.chain) q.tau[v] = orb.members[n - 1];
        }
    }
    for (int j = 2; j <= s; ++j) q.vertices.insert(local_P(j));

    std::set<std::pair<int, int>> woven;
    for (const Arrow& a : seed_morphisms(s)) {
        if (a.first.kind == LKind::P || a.second.kind == LKind::P) {
            q.arrows.insert(a);
            continue;
        }
        const int ox = where.at(a.first), oy = where.at(a.second);
        if (ox == oy) throw std::logic_error("seed inside a single tau-orbit");
        for (const Arrow& w : weave(orbits[ox], orbits[oy], a, s)) q.arrows.insert(w);
        woven.insert({std::min(ox, oy), std::max(ox, oy)});
    }
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o)
        for (int r = o + 1; r < static_cast<int>(orbits.size()); ++r) {
            const int d = contiguous_index(orbits[o].id) - contiguous_index(orbits[r].id);
            if ((d == 1 || d == -1) && !woven.count({o, r}))
                throw std::logic_error("no seed links " + orbits[o].id + " and " + orbits[r].id);
        }
    for (const auto& [v, t] : q.tau) q.tau_inv[t] = v;
    return q;
}

ARQuiver build_block_quiver(const AlgebraCtx& ctx, const OrbitView& orbit) {
    ARQuiver q;
    std::vector<int> labels = orbit.critical ? orbit.members : local_members(ctx, orbit);
    const bool degen = ctx.degenerate() && !orbit.critical && orbit.k_L() == 0;
    const int s = static_cast<int>(labels.size());
    if (orbit.critical || (s == 1 && !degen)) {
        q.vertices.insert(local_I(1));
    } else if (s == 1) {
        q.vertices = {local_I(1), local_P(1)};
        q.arrows = {{local_I(1), local_P(1)}, {local_P(1), local_I(1)}};
        q.tau[local_I(1)] = local_I(1);
    } else {
        q = local_quiver(s);
        if (degen) {
            const Local p1 = local_P(1), t11 = local_T(1, 1), b11 = local_B(1, 1);
            q.vertices.insert(p1);
            q.arrows.insert({b11, p1});
            q.arrows.insert({p1, t11});
            q.tau[t11] = b11;
        }
    }
    q.tau_inv.clear();
    for (const auto& [v, t] : q.tau) q.tau_inv[t] = v;
    q.ctx = ctx;
    q.orbit = orbit;
    q.labels = labels;
    q.degenerate_block = degen;
    return q;
}

std::vector<ARQuiver> full_quiver(const AlgebraCtx& ctx) {
    check_ctx(ctx);
    std::vector<ARQuiver> out;
    for (const auto& o : orbit_partition(ctx)) out.push_back(build_block_quiver(ctx, o));
    return out;
}

namespace {

std::string gname(const ARQuiver& q, const Local& v) {
    return to_string(q.global(v)) + " [" + local_name(v) + "]";
}

Factors factors_of(const ARQuiver& q, const Local& v) { return composition_factors(q.ctx, q.global(v)); }

}  // namespace

VerifyReport verify_almost_split(const ARQuiver& q) {
    VerifyReport rep;
    std::map<Local, std::vector<Local>> into, from;
    for (const auto& [u, v] : q.arrows) {
        into[v].push_back(u);
        from[u].push_back(v);
    }
    for (const Local& v : q.vertices) {
        auto t = q.tau.find(v);
        if (t != q.tau.end()) {
            Factors lhs = merge(factors_of(q, t->second), factors_of(q, v));
            Factors rhs;
            for (const Local& u : into[v]) rhs = merge(rhs, factors_of(q, u));
            if (lhs != rhs) rep.violations.push_back("sequence ending at " + gname(q, v) + " does not balance");
            for (const Local& u : q.vertices) {
                const bool a = q.arrows.count({u, v}) > 0, b = q.arrows.count({t->second, u}) > 0;
                if (a != b) rep.violations.push_back("mesh mismatch at " + gname(q, v) + " through " + gname(q, u));
            }
        }
        auto ti = q.tau_inv.find(v);
        if (ti != q.tau_inv.end()) {
            Factors lhs = merge(factors_of(q, v), factors_of(q, ti->second));
            Factors rhs;
            for (const Local& m : from[v]) rhs = merge(rhs, factors_of(q, m));
            if (lhs != rhs) rep.violations.push_back("sequence starting at " + gname(q, v) + " does not balance");
        }
    }
    return rep;
}

VerifyReport verify_block_structure(const ARQuiver& q) {
    VerifyReport rep;
    std::vector<Indec> expect = enumerate_orbit(q.ctx, q.orbit);
    std::vector<Indec> got;
    for (const Local& v : q.vertices) got.push_back(q.global(v));
    std::sort(got.begin(), got.end());
    if (got != expect) rep.violations.push_back("vertex set differs from the catalog for orbit at " + std::to_string(q.orbit.k_L()));
    for (const Local& v : q.vertices) {
        const Indec m = q.global(v);
        if (!validate(q.ctx, m)) {
            rep.violations.push_back("invalid vertex " + gname(q, v));
            continue;
        }
        if ((q.tau.count(v) > 0) == is_projective(q.ctx, m)) rep.violations.push_back("tau domain wrong at " + gname(q, v));
        if ((q.tau_inv.count(v) > 0) == is_injective(q.ctx, m)) rep.violations.push_back("inverse tau domain wrong at " + gname(q, v));
        const Local d = local_dual(v);
        if (!q.vertices.count(d)) rep.violations.push_back("dual missing for " + gname(q, v));
        else if (q.global(d) != dual(q.ctx, m)) rep.violations.push_back("dual mismatch at " + gname(q, v));
        auto t = q.tau.find(v);
        if (t != q.tau.end()) {
            auto td = q.tau_inv.find(d);
            if (td == q.tau_inv.end() || td->second != local_dual(t->second))
                rep.violations.push_back("tau does not commute with duality at " + gname(q, v));
        }
    }
    for (const auto& [u, v] : q.arrows)
        if (!q.arrows.count({local_dual(v), local_dual(u)})) rep.violations.push_back("arrow dual missing for " + gname(q, u) + " -> " + gname(q, v));
    return rep;
}

}  // namespace tlrep
