#include "tlrep/orbit.hpp"

#include <algorithm>

namespace tlrep {

namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// smallest critical integer strictly above k
int critical_above(int ell, int k) {
    return k + 1 + floor_mod(ell - 2 - k, ell);
}

// largest critical integer strictly below k
int critical_below(int ell, int k) {
    return k - 1 - floor_mod(k, ell);
}

}  // namespace

void check_ctx(const AlgebraCtx& ctx) {
    if (ctx.n < 1) throw DomainError("n must be at least 1");
    if (ctx.ell < 2) throw DomainError("ell must be at least 2");
}

std::string family_name(Family f) { return f == Family::TL ? "tl" : "dtl"; }

std::string describe(const AlgebraCtx& ctx) {
    return family_name(ctx.family) + " n=" + std::to_string(ctx.n) + " ell=" + std::to_string(ctx.ell);
}

bool OrbitView::contains(int k) const { return position(k) >= 0; }

int OrbitView::position(int k) const {
    auto it = std::lower_bound(members.begin(), members.end(), k);
    if (it == members.end() || *it != k) return -1;
    return static_cast<int>(it - members.begin());
}

bool is_critical(const AlgebraCtx& ctx, int k) { return floor_mod(k + 1, ctx.ell) == 0; }

bool in_lambda(const AlgebraCtx& ctx, int k) {
    if (k < 0 || k > ctx.n) return false;
    if (ctx.family == Family::TL) return (ctx.n - k) % 2 == 0;
    return true;
}

bool in_lambda0(const AlgebraCtx& ctx, int k) {
    if (ctx.degenerate() && k == 0) return false;
    return in_lambda(ctx, k);
}

std::vector<int> lambda_set(const AlgebraCtx& ctx) {
    std::vector<int> out;
    for (int k = 0; k <= ctx.n; ++k)
        if (in_lambda(ctx, k)) out.push_back(k);
    return out;
}

std::vector<int> lambda0_set(const AlgebraCtx& ctx) {
    std::vector<int> out;
    for (int k = 0; k <= ctx.n; ++k)
        if (in_lambda0(ctx, k)) out.push_back(k);
    return out;
}

int neighbor(const AlgebraCtx& ctx, int k, int j) {
    if (is_critical(ctx, k)) throw DomainError("neighbor of critical label " + std::to_string(k));
    int x = k;
    for (; j > 0; --j) x = 2 * critical_above(ctx.ell, x) - x;
    for (; j < 0; ++j) x = 2 * critical_below(ctx.ell, x) - x;
    return x;
}

OrbitView orbit_of(const AlgebraCtx& ctx, int k) {
    if (!in_lambda(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda for " + describe(ctx));
    OrbitView v;
    if (ctx.family == Family::DTL) v.parity = (ctx.n - k) % 2;
    if (is_critical(ctx, k)) {
        v.critical = true;
        v.members = {k};
        return v;
    }
    int m = 2 * ctx.ell;
    for (int x : lambda_set(ctx)) {
        if (is_critical(ctx, x)) continue;
        if ((x - k) % 2 != 0) continue;
        int a = floor_mod(x + 1, m), b = floor_mod(k + 1, m), c = floor_mod(-(k + 1), m);
        if (a == b || a == c) v.members.push_back(x);
    }
    return v;
}

std::vector<OrbitView> orbit_partition(const AlgebraCtx& ctx) {
    std::vector<OrbitView> out;
    std::vector<bool> seen(ctx.n + 1, false);
    for (int k : lambda_set(ctx)) {
        if (seen[k]) continue;
        OrbitView v = orbit_of(ctx, k);
        for (int x : v.members) seen[x] = true;
        out.push_back(std::move(v));
    }
    return out;
}

bool orbit_equivalent(const AlgebraCtx& ctx, int k, int k2) {
    if (!in_lambda(ctx, k) || !in_lambda(ctx, k2)) return false;
    return orbit_of(ctx, k).contains(k2);
}

int parity(const AlgebraCtx& ctx, int k) {
    if (ctx.family != Family::DTL) throw DomainError("parity is defined for dTL only");
    if (!in_lambda(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda");
    return (ctx.n - k) % 2;
}

std::vector<int> local_members(const AlgebraCtx& ctx, const OrbitView& orb) {
    std::vector<int> out;
    for (int x : orb.members)
        if (in_lambda0(ctx, x)) out.push_back(x);
    return out;
}

}  // namespace tlrep
