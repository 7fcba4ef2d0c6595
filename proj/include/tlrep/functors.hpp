#pragma once

#include "tlrep/catalog.hpp"

namespace tlrep {

// result lives over ctx.with_n(n-1)
ModuleSum restrict_module(const AlgebraCtx& ctx, const Indec& m);
// result lives over ctx.with_n(n+1)
ModuleSum induce_module(const AlgebraCtx& ctx, const Indec& m);

ModuleSum restrict_sum(const ModuleSum& s);
ModuleSum induce_sum(const ModuleSum& s);

}  // namespace tlrep
