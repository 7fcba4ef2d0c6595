#include "tlrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

#include "tlrep/functors.hpp"
#include "tlrep/homology.hpp"
#include "tlrep/io.hpp"
#include "tlrep/quiver.hpp"

namespace tlrep {

namespace {

constexpr std::size_t kSamples = 12;

struct Cell {
    long checks = 0;
    std::vector<std::string> fails;

    void expect(bool ok, const std::function<std::string()>& msg) {
        ++checks;
        if (!ok) fails.push_back(msg());
    }
};

using CellFn = std::function<void(const AlgebraCtx&, Cell&)>;

CheckResult sweep(const std::string& name, const SweepRange& r, int threads, const CellFn& fn) {
    std::vector<AlgebraCtx> cells;
    for (Family f : {Family::TL, Family::DTL})
        for (int n = std::max(1, r.min_n); n <= r.max_n; ++n)
            for (int ell = std::max(2, r.min_ell); ell <= r.max_ell; ++ell) cells.push_back({f, n, ell});

    auto run = [&fn](const AlgebraCtx& ctx) {
        Cell c;
        try {
            fn(ctx, c);
        } catch (const std::exception& e) {
            ++c.checks;
            c.fails.push_back(describe(ctx) + ": exception: " + e.what());
        }
        return c;
    };

    std::vector<Cell> results(cells.size());
    unsigned hw = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    if (hw <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run(cells[i]);
    } else {
        for (std::size_t start = 0; start < cells.size(); start += hw) {
            std::vector<std::future<Cell>> fut;
            for (std::size_t i = start; i < std::min(cells.size(), start + hw); ++i)
                fut.push_back(std::async(std::launch::async, run, cells[i]));
            for (std::size_t i = 0; i < fut.size(); ++i) results[start + i] = fut[i].get();
        }
    }

    CheckResult out;
    out.name = name;
    for (const Cell& c : results) {
        out.checks += c.checks;
        out.failures += static_cast<long>(c.fails.size());
        for (const auto& m : c.fails)
            if (out.samples.size() < kSamples) out.samples.push_back(m);
    }
    return out;
}

std::string at(const AlgebraCtx& ctx, const Indec& m) { return to_string(m) + " over " + describe(ctx); }

Indec irreducible(const AlgebraCtx& ctx, int k) { return only_summand(normalize(ctx, {AliasKind::Irr, k, 0})); }

}  // namespace

CheckResult sweep_almost_split(const SweepRange& r, int threads) {
    return sweep("almost-split accounting", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        for (const ARQuiver& q : full_quiver(ctx)) {
            VerifyReport rep = verify_almost_split(q);
            c.expect(rep.ok(), [&] { return describe(ctx) + ": " + rep.violations.front(); });
        }
    });
}

CheckResult sweep_block_structure(const SweepRange& r, int threads) {
    return sweep("block structure and duality", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        for (const ARQuiver& q : full_quiver(ctx)) {
            VerifyReport rep = verify_block_structure(q);
            c.expect(rep.ok(), [&] { return describe(ctx) + ": " + rep.violations.front(); });
        }
    });
}

CheckResult sweep_enumeration(const SweepRange& r, int threads) {
    return sweep("enumeration counts", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        std::size_t total = 0;
        for (const OrbitView& o : orbit_partition(ctx)) {
            const std::vector<Indec> cls = enumerate_orbit(ctx, o);
            total += cls.size();
            if (o.critical) {
                c.expect(cls.size() == 1, [&] { return describe(ctx) + ": critical orbit count"; });
                continue;
            }
            const int s = static_cast<int>(local_members(ctx, o).size());
            const bool degen = ctx.degenerate() && o.k_L() == 0;
            const std::size_t want = static_cast<std::size_t>(s * s + s - (degen ? 0 : 1));
            c.expect(cls.size() == want, [&] {
                return describe(ctx) + ": orbit at " + std::to_string(o.k_L()) + " has " + std::to_string(cls.size()) +
                       " classes, expected " + std::to_string(want);
            });
            const ARQuiver q = build_block_quiver(ctx, o);
            std::vector<Indec> verts;
            for (const Local& v : q.vertices) verts.push_back(q.global(v));
            std::sort(verts.begin(), verts.end());
            c.expect(verts == cls, [&] { return describe(ctx) + ": quiver vertices differ at orbit " + std::to_string(o.k_L()); });
        }
        c.expect(total == enumerate_indecomposables(ctx).size(), [&] { return describe(ctx) + ": total count"; });
    });
}

CheckResult sweep_restriction_exactness(const SweepRange& r, int threads) {
    return sweep("restriction exactness", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        if (ctx.n < 2) return;
        for (const Indec& m : enumerate_indecomposables(ctx)) {
            const Factors lhs = composition_factors(restrict_module(ctx, m));
            Factors rhs;
            for (int k : composition_factors(ctx, m))
                rhs = merge(rhs, composition_factors(restrict_module(ctx, irreducible(ctx, k))));
            c.expect(lhs == rhs, [&] { return at(ctx, m) + ": factors " + to_string(lhs) + " vs " + to_string(rhs); });
        }
    });
}

CheckResult sweep_res_ind(const SweepRange& r, int threads) {
    return sweep("induction agrees with restriction from n+2", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        const AlgebraCtx up = ctx.with_n(ctx.n + 2);
        for (const Indec& m : enumerate_indecomposables(ctx)) {
            const bool covered = m.kind == Kind::Proj || m.kind == Kind::CritStan ||
                                 (m.kind == Kind::B && m.l >= 2 && m.l % 2 == 0) ||
                                 (m.kind == Kind::T && m.l % 2 == 1);
            if (!covered) continue;
            const ModuleSum got = induce_module(ctx, m), want = restrict_module(up, m);
            c.expect(got == want, [&] { return at(ctx, m) + ": Ind " + to_string(got) + " vs " + to_string(want); });
        }
        for (int k : lambda_set(ctx)) {
            const ModuleSum stan = normalize(ctx, {AliasKind::Stan, k, 0});
            const ModuleSum got = induce_sum(stan);
            ModuleSum want(ctx.with_n(ctx.n + 1));
            if (ctx.family == Family::TL && ctx.ell == 2 && ctx.n == 2 && k == 0) {
                want.add(normalize(want.ctx, {AliasKind::Stan, 1, 0}));
                want.add(normalize(want.ctx, {AliasKind::Stan, 3, 0}));
            } else {
                want = restrict_sum(normalize(up, {AliasKind::Stan, k, 0}));
            }
            c.expect(got == want, [&] {
                return "S(" + std::to_string(k) + ") over " + describe(ctx) + ": Ind " + to_string(got) + " vs " + to_string(want);
            });
        }
    });
}

CheckResult sweep_two_path_ext(const SweepRange& r, int threads) {
    return sweep("Ext tables against presentations", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        for (const Indec& m : enumerate_indecomposables(ctx)) {
            if ((m.kind != Kind::B && m.kind != Kind::T) || m.l < 2) continue;
            const ModuleSum co = coker_inj(ctx, m), ke = ker_proj(ctx, m);
            Factors soc, head;
            for (const auto& [x, mult] : co.terms)
                for (int i = 0; i < mult; ++i) soc = merge(soc, socle_head(ctx, x).soc);
            for (const auto& [x, mult] : ke.terms)
                for (int i = 0; i < mult; ++i) head = merge(head, socle_head(ctx, x).head);
            for (int kp : lambda0_set(ctx)) {
                const Indec irr = irreducible(ctx, kp);
                const DimResult a = ext_dim(ctx, irr, m), b = ext_dim(ctx, m, irr);
                c.expect(a == DimResult::of(count_of(soc, kp)), [&] {
                    return at(ctx, m) + ": Ext(I(" + std::to_string(kp) + "), -) = " + a.str() + ", cokernel socle gives " +
                           std::to_string(count_of(soc, kp));
                });
                c.expect(b == DimResult::of(count_of(head, kp)), [&] {
                    return at(ctx, m) + ": Ext(-, I(" + std::to_string(kp) + ")) = " + b.str() + ", kernel head gives " +
                           std::to_string(count_of(head, kp));
                });
            }
        }
    });
}

CheckResult sweep_exact_sequences(const SweepRange& r, int threads) {
    return sweep("exact sequence factor accounting", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        for (const Indec& m : enumerate_indecomposables(ctx)) {
            for (const ShortExact& e : exact_sequences(ctx, m)) {
                const Factors lhs = merge(composition_factors(e.sub), composition_factors(e.quot));
                c.expect(lhs == composition_factors(e.mid), [&] {
                    return at(ctx, m) + ": 0 -> " + to_string(e.sub) + " -> " + to_string(e.mid) + " -> " + to_string(e.quot);
                });
            }
        }
    });
}

CheckResult sweep_extension_middles(const SweepRange& r, int threads) {
    return sweep("extension middle factor accounting", r, threads, [](const AlgebraCtx& ctx, Cell& c) {
        for (const Indec& m : enumerate_indecomposables(ctx)) {
            if (m.kind != Kind::B && m.kind != Kind::T) continue;
            for (int kp : lambda0_set(ctx)) {
                const Indec irr = irreducible(ctx, kp);
                for (Side side : {Side::Sub, Side::Quot}) {
                    const DimResult d = side == Side::Sub ? ext_dim(ctx, m, irr) : ext_dim(ctx, irr, m);
                    if (d != DimResult::of(1)) continue;
                    const ModuleSum mid = extension_middle(ctx, m, kp, side);
                    Factors want = composition_factors(ctx, m);
                    want = merge(want, Factors{kp});
                    c.expect(composition_factors(mid) == want, [&] {
                        return at(ctx, m) + ": extension by I(" + std::to_string(kp) + ") gave " + to_string(mid);
                    });
                }
            }
        }
    });
}

std::vector<CheckResult> run_all_sweeps(const SweepRange& r, int threads) {
    return {sweep_enumeration(r, threads),           sweep_almost_split(r, threads),
            sweep_block_structure(r, threads),       sweep_restriction_exactness(r, threads),
            sweep_res_ind(r, threads),               sweep_two_path_ext(r, threads),
            sweep_exact_sequences(r, threads),       sweep_extension_middles(r, threads)};
}

}  // namespace tlrep
