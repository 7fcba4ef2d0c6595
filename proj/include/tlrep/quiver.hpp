#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tlrep/catalog.hpp"

namespace tlrep {

enum class LKind { B, T, P };

// indecomposable over local labels 1..s of one orbit; B with l = 0 is the irreducible I_a
struct Local {
    LKind kind = LKind::B;
    int a = 1;
    int l = 0;

    auto operator<=>(const Local&) const = default;
};

Local local_B(int a, int l);
Local local_T(int a, int l);
Local local_I(int a);
Local local_P(int a);
Local local_dual(const Local& v);
bool is_irreducible(const Local& v);
std::string local_name(const Local& v);

std::optional<Local> reflect_delete(int k, int j, int s);

struct TauOrbit {
    std::string id;   // "t0", "t2", "i2", ...
    bool chain = false;
    std::vector<Local> members;  // successive members differ by tau^{-1}
};

std::vector<TauOrbit> tau_orbits(int s);

using Arrow = std::pair<Local, Local>;

std::vector<Arrow> seed_morphisms(int s);

// arrows generated from seed u -> v between the tau-orbits holding u and v
std::vector<Arrow> weave(const TauOrbit& x, const TauOrbit& y, const Arrow& seed, int s);

struct ARQuiver {
    AlgebraCtx ctx;
    OrbitView orbit;
    std::vector<int> labels;   // local a -> labels[a-1]
    bool degenerate_block = false;
    std::set<Local> vertices;
    std::set<Arrow> arrows;
    std::map<Local, Local> tau;
    std::map<Local, Local> tau_inv;

    int s() const { return static_cast<int>(labels.size()); }
    Indec global(const Local& v) const;
};

// local quiver of a generic orbit of length s >= 2
ARQuiver local_quiver(int s);

ARQuiver build_block_quiver(const AlgebraCtx& ctx, const OrbitView& orbit);
std::vector<ARQuiver> full_quiver(const AlgebraCtx& ctx);

struct VerifyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

VerifyReport verify_almost_split(const ARQuiver& q);
// vertex set against the catalog, duality symmetry, tau domains
VerifyReport verify_block_structure(const ARQuiver& q);

}  // namespace tlrep
