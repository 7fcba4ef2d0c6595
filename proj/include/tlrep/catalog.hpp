#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlrep/orbit.hpp"

namespace tlrep {

enum class Kind { B, T, Proj, CritStan };

// canonical isomorphism class of an indecomposable
struct Indec {
    Kind kind = Kind::B;
    int k = 0;
    int l = 0;  // zero for Proj and CritStan

    auto operator<=>(const Indec&) const = default;
};

// canonical spec string; critical standards print as P(k)
std::string to_string(const Indec& m);

Indec make_B(int k, int l);
Indec make_T(int k, int l);
Indec make_P(int k);
Indec make_crit(int k);

enum class AliasKind { Irr, Stan, Cost, Proj, Inj, B, T };

struct AliasSpec {
    AliasKind kind = AliasKind::Irr;
    int k = 0;
    int l = 0;
    bool operator==(const AliasSpec&) const = default;
};

// multiset of indecomposables over one context; empty is the zero module
struct ModuleSum {
    AlgebraCtx ctx;
    std::map<Indec, int> terms;

    ModuleSum() = default;
    explicit ModuleSum(const AlgebraCtx& c) : ctx(c) {}

    void add(const Indec& m, int mult = 1);
    void add(const ModuleSum& other, int mult = 1);
    bool empty() const { return terms.empty(); }
    int total() const;
    bool operator==(const ModuleSum& o) const { return ctx == o.ctx && terms == o.terms; }
};

// sorted multiset of labels
using Factors = std::vector<int>;

Factors merge(const Factors& a, const Factors& b);
int count_of(const Factors& f, int k);

struct SocleHead {
    Factors soc;
    Factors head;
};

struct ShortExact {
    ModuleSum sub, mid, quot;
};

bool validate(const AlgebraCtx& ctx, const Indec& m);
void require_valid(const AlgebraCtx& ctx, const Indec& m);

// strict form: labels outside Lambda raise DomainError
ModuleSum normalize(const AlgebraCtx& ctx, const AliasSpec& a);
// lenient form used inside formulas: labels outside Lambda give zero
ModuleSum normalize_or_zero(const AlgebraCtx& ctx, const AliasSpec& a);

std::vector<Indec> enumerate_indecomposables(const AlgebraCtx& ctx);
std::vector<Indec> enumerate_orbit(const AlgebraCtx& ctx, const OrbitView& orb);

// orbit containing the factors of m
OrbitView orbit_of_indec(const AlgebraCtx& ctx, const Indec& m);

Factors composition_factors(const AlgebraCtx& ctx, const Indec& m);
Factors composition_factors(const ModuleSum& s);
SocleHead socle_head(const AlgebraCtx& ctx, const Indec& m);
std::vector<Factors> loewy_layers(const AlgebraCtx& ctx, const Indec& m);
Indec dual(const AlgebraCtx& ctx, const Indec& m);
ModuleSum dual(const ModuleSum& s);

ModuleSum projective_cover(const AlgebraCtx& ctx, const Indec& m);
ModuleSum injective_hull(const AlgebraCtx& ctx, const Indec& m);
ModuleSum coker_inj(const AlgebraCtx& ctx, const Indec& m);
ModuleSum ker_proj(const AlgebraCtx& ctx, const Indec& m);
std::vector<ShortExact> exact_sequences(const AlgebraCtx& ctx, const Indec& m);

bool is_projective(const AlgebraCtx& ctx, const Indec& m);
bool is_injective(const AlgebraCtx& ctx, const Indec& m);

// single summand of a sum known to hold exactly one indecomposable
Indec only_summand(const ModuleSum& s);

}  // namespace tlrep
