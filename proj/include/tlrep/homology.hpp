#pragma once

#include <optional>
#include <string>

#include "tlrep/catalog.hpp"

namespace tlrep {

// dimension or Unknown for pairs outside the tables
struct DimResult {
    std::optional<int> value;

    static DimResult unknown() { return {}; }
    static DimResult of(int v) { return {v}; }
    bool known() const { return value.has_value(); }
    std::string str() const { return value ? std::to_string(*value) : "unknown"; }
    bool operator==(const DimResult&) const = default;
};

enum class Side { Sub, Quot };

DimResult hom_dim(const AlgebraCtx& ctx, const Indec& m, const Indec& n);
DimResult ext_dim(const AlgebraCtx& ctx, const Indec& m, const Indec& n);
bool separation_vanishes(const AlgebraCtx& ctx, const Indec& m, const Indec& n);

// middle term of the non-split extension of target by Irr(kp):
// Sub puts Irr(kp) below target, Quot puts it on top
ModuleSum extension_middle(const AlgebraCtx& ctx, const Indec& target, int kp, Side side);

}  // namespace tlrep
