#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tlrep {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { TL, DTL };

struct AlgebraCtx {
    Family family = Family::TL;
    int n = 1;
    int ell = 2;

    bool degenerate() const { return family == Family::TL && n % 2 == 0 && ell == 2; }
    AlgebraCtx with_n(int m) const { return AlgebraCtx{family, m, ell}; }
    bool operator==(const AlgebraCtx&) const = default;
};

// throws DomainError unless n >= 1 and ell >= 2
void check_ctx(const AlgebraCtx& ctx);

std::string family_name(Family f);
std::string describe(const AlgebraCtx& ctx);

struct OrbitView {
    bool critical = false;
    std::vector<int> members;   // sorted; a single entry for critical singletons
    int parity = -1;            // (n-k) mod 2 for dTL, -1 for TL

    int k_L() const { return members.front(); }
    int k_R() const { return members.back(); }
    int size() const { return static_cast<int>(members.size()); }
    bool contains(int k) const;
    int position(int k) const;  // index into members, -1 if absent
};

bool is_critical(const AlgebraCtx& ctx, int k);
std::vector<int> lambda_set(const AlgebraCtx& ctx);
std::vector<int> lambda0_set(const AlgebraCtx& ctx);
bool in_lambda(const AlgebraCtx& ctx, int k);
bool in_lambda0(const AlgebraCtx& ctx, int k);

OrbitView orbit_of(const AlgebraCtx& ctx, int k);
std::vector<OrbitView> orbit_partition(const AlgebraCtx& ctx);

// k^j, a virtual label: may be negative or exceed n
int neighbor(const AlgebraCtx& ctx, int k, int j);
bool orbit_equivalent(const AlgebraCtx& ctx, int k, int k2);
int parity(const AlgebraCtx& ctx, int k);

// local labels 1..s: members of orbit meet Lambda_{n,0}
std::vector<int> local_members(const AlgebraCtx& ctx, const OrbitView& orb);

}  // namespace tlrep
