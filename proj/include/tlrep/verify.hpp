#pragma once

#include <string>
#include <vector>

#include "tlrep/orbit.hpp"

namespace tlrep {

struct SweepRange {
    int min_n = 1;
    int max_n = 12;
    int min_ell = 2;
    int max_ell = 6;
};

struct CheckResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> samples;  // first few failure messages

    bool ok() const { return failures == 0; }
};

// one sweep over every (family, n, ell) cell of the range
CheckResult sweep_almost_split(const SweepRange& r, int threads = 0);
CheckResult sweep_block_structure(const SweepRange& r, int threads = 0);
CheckResult sweep_enumeration(const SweepRange& r, int threads = 0);
CheckResult sweep_restriction_exactness(const SweepRange& r, int threads = 0);
CheckResult sweep_res_ind(const SweepRange& r, int threads = 0);
CheckResult sweep_two_path_ext(const SweepRange& r, int threads = 0);
CheckResult sweep_exact_sequences(const SweepRange& r, int threads = 0);
CheckResult sweep_extension_middles(const SweepRange& r, int threads = 0);

std::vector<CheckResult> run_all_sweeps(const SweepRange& r, int threads = 0);

}  // namespace tlrep
