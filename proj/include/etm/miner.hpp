#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "etm/etn.hpp"
#include "etm/temporal_graph.hpp"

namespace etm {

namespace detail {
struct SigHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};
} // namespace detail

// Signature text -> occurrence count over a whole graph.
struct CountTable {
    int k = 0;
    std::int64_t delta_t = 0;
    std::unordered_map<std::string, std::uint64_t, detail::SigHash, std::equal_to<>> counts;
    std::uint64_t total = 0;

    std::uint64_t count(std::string_view signature) const {
        auto it = counts.find(signature);
        return it == counts.end() ? 0 : it->second;
    }
};

struct MiningParams {
    double alpha = 0.01;        // over-representation threshold
    double beta = 0.1;          // minimum-deviation factor
    std::uint64_t gamma = 5;    // minimum frequency
    std::size_t n_null = 100;   // number of null models
    std::uint64_t seed = 1;
    // Empirical p-value uses strict '>' by default: null counts equal to the
    // observed count do not testify against the motif.
    bool ties_exceed = false;
};

struct MotifRecord {
    std::string signature;
    std::uint64_t count = 0;            // N_G
    double null_mean = 0.0;             // mean count over null models
    double null_exceed_fraction = 0.0;  // fraction of null models with count > N_G
    bool is_motif = false;
};

struct MotifReport {
    int k = 0;
    std::int64_t delta_t = 0;
    MiningParams params;
    std::vector<MotifRecord> records;  // count desc, then signature asc

    const MotifRecord* find(std::string_view signature) const;
    std::vector<std::string> motif_signatures() const;  // sorted ascending
};

// Counts the signature of every ETN seeded at a window whose first slice
// gives the ego at least one neighbor; empty signatures are skipped.
// Throws graph_too_short when the snapshot count m satisfies m <= k.
// Windows may be fanned out over `workers` threads; partial tables merge by
// summation, so the result is worker-count independent.
CountTable count_etn(const SnapshotSequence& seq, int k, int workers = 1);
CountTable count_etn(const TemporalGraph& g, std::int64_t delta_t, int k, int workers = 1,
                     bool strict_windows = false);

// Uniformly random permutation of the snapshots (Fisher-Yates on the seeded
// stream); per-snapshot contents unchanged, start times reassigned to the
// window grid.
SnapshotSequence shuffle_null(const SnapshotSequence& seq, std::uint64_t seed);

// n_null independently shuffled sequences, counted. Null model j uses
// derive_seed(seed, j).
std::vector<CountTable> null_ensemble_counts(const SnapshotSequence& seq, int k,
                                             std::size_t n_null, std::uint64_t seed,
                                             int workers = 1);
std::vector<CountTable> null_ensemble_counts(const TemporalGraph& g, std::int64_t delta_t, int k,
                                             std::size_t n_null, std::uint64_t seed,
                                             int workers = 1, bool strict_windows = false);

// Applies the three motif criteria to every signature of `observed`:
// (i)  fraction of null models whose count exceeds N_G is below alpha,
// (ii) N_G - mean >= beta * mean,
// (iii) N_G >= gamma.
// Signatures appearing only in nulls are ignored. n_null = 0 is allowed only
// with alpha >= 1 (no significance testing).
MotifReport select_motifs(const CountTable& observed, const std::vector<CountTable>& nulls,
                          const MiningParams& params);

} // namespace etm
