#pragma once

#include "orbitlab/classify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitlab {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kDefaultMaxRank = 6;

enum class Severity { known_boundary, hard_failure };

struct Discrepancy {
    std::string check;
    std::string group;
    std::string input;
    std::string expected;
    std::string actual;
    Severity severity = Severity::hard_failure;
};

std::string to_jsonl(const Discrepancy& d);

struct ScanOptions {
    int max_abs_entry = 8;
    std::uint64_t seed = kDefaultSeed;
};

/// All lambda0 shapes for the family with pattern entries bounded by
/// max_abs (the normalization-forced first entry may exceed the bound).
std::vector<WeightSeq> lambda0_grid(const GroupSpec& g, int max_abs);

/// z values probed per input: the reduction points z_k (continued past the
/// rank), 1/3-shifted off-lattice probes, and the input's branch boundaries.
std::vector<Rat> default_z_grid(const GroupSpec& g, const WeightSeq& lambda0);

struct CheckResult {
    std::vector<Discrepancy> discrepancies;
    long long cases_run = 0;
};

/// Closed-form annihilator variety vs the partition pipeline, exhaustively
/// over the grids; classical families only.
CheckResult check_closed_vs_pipeline(const GroupSpec& g, const ScanOptions& opts);

/// dim(annihilator orbit) = 2 (k (h_check - 1) - k (k-1) c) over the grids.
CheckResult check_dim_doubling(const GroupSpec& g, const ScanOptions& opts);

/// At every unitary reduction point z = z_k the associated rank is min(k, r).
CheckResult check_theorem_7_1(const GroupSpec& g, const ScanOptions& opts);

/// For the E families: every (pattern x z) sweep lands in the expected label
/// set with the table dimension.
CheckResult check_exceptional_tables(const GroupSpec& g, const ScanOptions& opts);

/// Random dominant concatenations: the second-column count of the inserted
/// tableau equals the largest antichain bound.
CheckResult check_antichain(int trials, int max_block, std::uint64_t seed);

/// Constructive collapse equals the brute-force dominance maximum for every
/// B/C/D partition of total <= max_total.
CheckResult check_collapse_oracle(int max_total);

struct VerificationRun {
    std::vector<Discrepancy> discrepancies;  // sorted deterministically
    long long cases_run = 0;
    long long known_boundaries = 0;
    long long hard_failures = 0;
    std::uint64_t seed = kDefaultSeed;
    int max_rank = kDefaultMaxRank;
};

/// Groups covered by the default verification at a given rank cap:
/// SU(p,q) with p+q <= R+1, Sp(n) n <= R-1, SO*(2n) n <= R,
/// SO(2,2n-1) n <= R-1, SO(2,2n-2) n <= R, and both E families.
std::vector<GroupSpec> default_groups(int max_rank);

VerificationRun run_group_scan(const GroupSpec& g, const ScanOptions& opts);

/// Full default configuration: all families at the rank cap, plus the
/// collapse oracle (totals <= 12) and 1000 antichain trials.
VerificationRun run_full_verification(int max_rank, std::uint64_t seed);

std::string summary_text(const VerificationRun& run);

}  // namespace orbitlab
