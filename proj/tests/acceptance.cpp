// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tlrep/functors.hpp"
#include "tlrep/homology.hpp"
#include "tlrep/io.hpp"
#include "tlrep/quiver.hpp"
#include "tlrep/verify.hpp"

using namespace tlrep;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> why;

    void fail(const std::string& m) {
        ok = false;
        if (why.size() < 8) why.push_back(m);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string names(const std::vector<Local>& v) {
    std::string s;
    for (const Local& x : v) s += (s.empty() ? "" : " ") + local_name(x);
    return s;
}

const TauOrbit* find_orbit(const std::vector<TauOrbit>& orbits, const std::string& id) {
    for (const auto& o : orbits)
        if (o.id == id) return &o;
    return nullptr;
}

void from_sweep(Outcome& out, const CheckResult& r) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += r.name + ": " + std::to_string(r.checks) + " checks";
    if (!r.ok()) {
        out.fail(r.name + ": " + std::to_string(r.failures) + " failures");
        for (const auto& s : r.samples) out.fail(s);
    }
}

Outcome criterion_orbits() {
    Outcome out;
    const auto t0 = Clock::now();
    for (int s : {6, 7}) {
        const auto got = tau_orbits(s);
        const auto& want = fixtures::reference_orbits(s);
        if (got.size() != want.size()) out.fail("s=" + std::to_string(s) + ": orbit count " + std::to_string(got.size()));
        for (const auto& w : want) {
            const TauOrbit* o = find_orbit(got, w.id);
            const auto members = fixtures::tokens(w.members);
            if (!o) {
                out.fail("s=" + std::to_string(s) + ": missing orbit " + w.id);
                continue;
            }
            const bool ok = o->chain ? o->members == members : fixtures::same_cycle(o->members, members);
            if (!ok) out.fail("s=" + std::to_string(s) + " " + w.id + ": got " + names(o->members));
            if (static_cast<int>(o->members.size()) != s) out.fail("s=" + std::to_string(s) + " " + w.id + ": wrong size");
            if (o->chain != (w.id == "t0")) out.fail(w.id + ": chain/cycle type wrong");
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 1.0) out.fail("runtime " + std::to_string(dt) + " s");
    out.detail = "13 orbits compared, " + std::to_string(dt) + " s";
    return out;
}

Outcome criterion_weaves() {
    Outcome out;
    int pairs = 0;
    for (int s : {6, 7}) {
        const auto orbits = tau_orbits(s);
        const auto seeds = seed_morphisms(s);
        for (const auto& w : fixtures::reference_weaves(s)) {
            const TauOrbit* x = find_orbit(orbits, w.x);
            const TauOrbit* y = find_orbit(orbits, w.y);
            if (!x || !y) {
                out.fail("missing orbit for " + w.x + "/" + w.y);
                continue;
            }
            const auto want = fixtures::walk(w.walk);
            int used = 0;
            for (const Arrow& a : seeds) {
                auto in = [](const TauOrbit* o, const Local& v) {
                    return std::find(o->members.begin(), o->members.end(), v) != o->members.end();
                };
                std::vector<Arrow> got;
                if (in(x, a.first) && in(y, a.second)) got = weave(*x, *y, a, s);
                else if (in(y, a.first) && in(x, a.second)) got = weave(*y, *x, a, s);
                else continue;
                ++used;
                if (std::set<Arrow>(got.begin(), got.end()) != want)
                    out.fail("s=" + std::to_string(s) + " " + w.x + "<->" + w.y + " from seed " + local_name(a.first) +
                             "->" + local_name(a.second) + " gives " + std::to_string(got.size()) + " arrows, expected " +
                             std::to_string(want.size()));
            }
            if (used == 0) out.fail("s=" + std::to_string(s) + " " + w.x + "<->" + w.y + ": no seed");
            ++pairs;
        }
    }
    out.detail = std::to_string(pairs) + " contiguous pairs";
    return out;
}

// first context with a non-critical, non-degenerate orbit of local size s
std::pair<AlgebraCtx, OrbitView> context_with_orbit(int s) {
    for (int n = 1; n < 64; ++n) {
        const AlgebraCtx ctx{Family::TL, n, 3};
        for (const auto& o : orbit_partition(ctx))
            if (!o.critical && static_cast<int>(local_members(ctx, o).size()) == s) return {ctx, o};
    }
    throw std::logic_error("no context found");
}

void compare_quiver(Outcome& out, const ARQuiver& q, const fixtures::QuiverFixture& f, const std::string& tag,
                    std::size_t want_vertices) {
    const auto verts = fixtures::tokens(f.vertices);
    const std::set<Local> vset(verts.begin(), verts.end());
    if (q.vertices.size() != want_vertices) out.fail(tag + ": " + std::to_string(q.vertices.size()) + " vertices");
    if (vset.size() != want_vertices) out.fail(tag + ": fixture has " + std::to_string(vset.size()) + " vertices");
    if (q.vertices != vset) out.fail(tag + ": vertex set differs");
    const auto arrows = fixtures::arrow_list(f.arrows);
    if (q.arrows != arrows) {
        for (const auto& a : q.arrows)
            if (!arrows.count(a)) out.fail(tag + ": extra arrow " + local_name(a.first) + "->" + local_name(a.second));
        for (const auto& a : arrows)
            if (!q.arrows.count(a)) out.fail(tag + ": missing arrow " + local_name(a.first) + "->" + local_name(a.second));
    }
}

Outcome criterion_generic_quivers() {
    Outcome out;
    for (const auto& f : fixtures::generic_quivers()) {
        const auto [ctx, orb] = context_with_orbit(f.s);
        const ARQuiver q = build_block_quiver(ctx, orb);
        compare_quiver(out, q, f, "s=" + std::to_string(f.s), static_cast<std::size_t>(f.s * f.s + f.s - 1));
    }
    out.detail = "s = 2, 3, 4, 5";
    return out;
}

Outcome criterion_degenerate_quivers() {
    Outcome out;
    for (const auto& f : fixtures::degenerate_quivers()) {
        const AlgebraCtx ctx{Family::TL, 2 * f.s, 2};
        const auto blocks = full_quiver(ctx);
        const ARQuiver* q = nullptr;
        for (const auto& b : blocks)
            if (b.degenerate_block) q = &b;
        if (!q) {
            out.fail("n=" + std::to_string(ctx.n) + ": no degenerate block");
            continue;
        }
        compare_quiver(out, *q, f, "n=" + std::to_string(ctx.n), static_cast<std::size_t>(f.s * f.s + f.s));
        if (q->global(local_P(1)) != make_P(2)) out.fail("n=" + std::to_string(ctx.n) + ": central projective is not P(2)");
    }
    out.detail = "n = 2, 4, 6, 8";
    return out;
}

Outcome criterion_almost_split() {
    Outcome out;
    const auto t0 = Clock::now();
    const SweepRange r{1, 14, 2, 7};
    from_sweep(out, sweep_almost_split(r));
    from_sweep(out, sweep_block_structure(r));
    const double dt = seconds_since(t0);
    if (dt >= 30.0) out.fail("runtime " + std::to_string(dt) + " s");
    out.detail += "; " + std::to_string(dt) + " s";
    return out;
}

Outcome criterion_restriction() {
    Outcome out;
    from_sweep(out, sweep_restriction_exactness({1, 12, 2, 6}));
    return out;
}

Outcome criterion_res_ind() {
    Outcome out;
    from_sweep(out, sweep_res_ind({1, 12, 2, 6}));
    const AlgebraCtx tl2{Family::TL, 2, 2};
    const ModuleSum got = induce_sum(parse_module(tl2, "S(0)"));
    const ModuleSum want = parse_module(tl2.with_n(3), "S(1) + S(3)");
    if (got != want) out.fail("TL_2 ell=2 Ind S(0) = " + to_string(got));
    return out;
}

struct Spot {
    AlgebraCtx ctx;
    bool ext;
    std::string a, b;
    int want;
};

Outcome criterion_hom_ext() {
    Outcome out;
    const AlgebraCtx c{Family::TL, 14, 3};  // orbit {0,4,6,10,12}
    const AlgebraCtx d{Family::DTL, 12, 4};  // orbit {2,4,10,12}
    const std::vector<Spot> spots = {
        {c, false, "I(6)", "I(6)", 1},   {c, false, "I(6)", "S(4)", 1},   {c, false, "I(6)", "C(6)", 1},
        {c, false, "I(6)", "P(6)", 1},   {c, false, "S(6)", "S(6)", 1},   {c, false, "S(6)", "S(4)", 1},
        {c, false, "S(6)", "S(10)", 0},  {c, false, "S(6)", "P(10)", 1},  {c, false, "C(6)", "I(10)", 1},
        {c, false, "C(6)", "C(10)", 1},  {c, false, "P(6)", "P(6)", 2},   {c, false, "P(6)", "P(4)", 1},
        {c, false, "P(6)", "P(10)", 1},  {c, false, "P(6)", "P(12)", 0},  {c, false, "P(6)", "S(4)", 1},
        {c, false, "P(6)", "C(4)", 1},   {d, false, "S(4)", "S(2)", 1},   {d, false, "P(10)", "P(10)", 2},
        {c, false, "I(10)", "B(4,2)", 1}, {c, false, "I(6)", "B(4,2)", 0},
        {c, true, "I(6)", "I(4)", 1},    {c, true, "I(6)", "I(10)", 1},   {c, true, "I(6)", "I(12)", 0},
        {c, true, "I(6)", "S(0)", 1},    {c, true, "I(6)", "S(4)", 0},    {c, true, "I(12)", "S(10)", 1},
        {c, true, "I(6)", "C(10)", 1},   {c, true, "S(6)", "I(4)", 1},    {c, true, "S(6)", "S(4)", 1},
        {c, true, "S(6)", "S(0)", 1},    {c, true, "S(6)", "C(4)", 0},    {c, true, "C(6)", "I(12)", 1},
        {c, true, "C(6)", "I(10)", 0},   {c, true, "C(10)", "I(12)", 1},  {c, true, "C(6)", "C(10)", 1},
        {c, true, "C(6)", "C(12)", 1},   {c, true, "P(6)", "I(6)", 0},    {d, true, "I(4)", "I(2)", 1},
        {c, true, "I(0)", "B(4,2)", 1},  {c, true, "I(6)", "B(4,2)", 1},  {c, true, "I(12)", "B(4,2)", 1},
        {c, true, "I(10)", "B(4,2)", 0}, {c, true, "B(4,2)", "I(6)", 1},  {c, true, "B(0,4)", "I(6)", 1},
        {{Family::TL, 2, 2}, true, "I(2)", "I(2)", 1},
        {{Family::TL, 4, 2}, true, "I(2)", "C(2)", 1},
        {{Family::TL, 4, 2}, true, "S(2)", "I(2)", 1},
        {{Family::TL, 8, 2}, true, "I(2)", "C(2)", 1},
        {{Family::TL, 8, 2}, true, "S(2)", "I(2)", 1},
        {{Family::TL, 8, 2}, true, "I(2)", "I(2)", 0},
    };
    auto one = [](const AlgebraCtx& ctx, const std::string& s) { return only_summand(parse_module(ctx, s)); };
    for (const Spot& sp : spots) {
        const Indec a = one(sp.ctx, sp.a), b = one(sp.ctx, sp.b);
        const DimResult got = sp.ext ? ext_dim(sp.ctx, a, b) : hom_dim(sp.ctx, a, b);
        if (got != DimResult::of(sp.want))
            out.fail(std::string(sp.ext ? "Ext(" : "Hom(") + sp.a + ", " + sp.b + ") over " + describe(sp.ctx) + " = " +
                     got.str() + ", expected " + std::to_string(sp.want));
    }

    long pairs = 0;
    for (Family f : {Family::TL, Family::DTL})
        for (int n = 1; n <= 12; ++n)
            for (int ell = 2; ell <= 6; ++ell) {
                const AlgebraCtx ctx{f, n, ell};
                std::vector<Indec> cls;
                for (int k : lambda_set(ctx))
                    for (AliasKind kind : {AliasKind::Irr, AliasKind::Stan, AliasKind::Cost, AliasKind::Proj}) {
                        if (kind == AliasKind::Proj && ctx.degenerate() && k == 0) continue;
                        for (const auto& [m, mult] : normalize(ctx, {kind, k, 0}).terms) cls.push_back(m);
                    }
                std::sort(cls.begin(), cls.end());
                cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
                for (const Indec& a : cls)
                    for (const Indec& b : cls) {
                        const Indec da = dual(ctx, a), db = dual(ctx, b);
                        for (bool ext : {false, true}) {
                            const DimResult x = ext ? ext_dim(ctx, a, b) : hom_dim(ctx, a, b);
                            const DimResult y = ext ? ext_dim(ctx, db, da) : hom_dim(ctx, db, da);
                            ++pairs;
                            if (!x.known() || x != y)
                                out.fail(std::string(ext ? "Ext" : "Hom") + " duality transport fails for " + to_string(a) +
                                         ", " + to_string(b) + " over " + describe(ctx) + ": " + x.str() + " vs " + y.str());
                        }
                    }
            }
    out.detail = std::to_string(spots.size()) + " spot values, " + std::to_string(pairs) + " duality pairs";
    return out;
}

Outcome criterion_two_path() {
    Outcome out;
    from_sweep(out, sweep_two_path_ext({1, 12, 2, 6}));
    return out;
}

Outcome criterion_enumeration() {
    Outcome out;
    from_sweep(out, sweep_enumeration({1, 14, 2, 7}));
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"tau-orbit oracle s=6,7", criterion_orbits},
        {"weave oracle s=6,7", criterion_weaves},
        {"generic quivers s=2..5", criterion_generic_quivers},
        {"degenerate quivers n=2,4,6,8", criterion_degenerate_quivers},
        {"almost-split accounting", criterion_almost_split},
        {"restriction exactness", criterion_restriction},
        {"Res/Ind agreement", criterion_res_ind},
        {"Hom/Ext spot suite and duality", criterion_hom_ext},
        {"two-path Ext consistency", criterion_two_path},
        {"enumeration counts", criterion_enumeration},
    };
    int failed = 0, idx = 0;
    for (const auto& [name, fn] : criteria) {
        ++idx;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << idx << ". " << name << "  (" << o.detail << ")\n";
        for (const auto& w : o.why) std::cout << "        " << w << "\n";
        if (!o.ok) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
