#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "etm/miner.hpp"
#include "etm/temporal_graph.hpp"

namespace etm {

// Count vector of a graph over an ordered motif list.
struct Embedding {
    std::vector<std::string> motif_list;
    std::vector<double> values;  // values[i] = count of motif_list[i], >= 0
};

struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;  // square, symmetric, zero diagonal
};

// values[i] = table.count(motif_list[i]). motif_list must be nonempty and
// duplicate-free.
Embedding embed(const CountTable& table, const std::vector<std::string>& motif_list);

// 1 - a.b / (|a||b|), in [0,1] for nonnegative inputs. Requires identical
// motif lists; throws undefined_cosine_error if either vector is all-zero.
double cosine_distance(const Embedding& a, const Embedding& b);

// Cosine distance of the two count tables over the intersection of the two
// reports' motif sets (sorted). Empty intersection or an all-zero restricted
// embedding yields 1.0 and, when `diagnostic` is given, a note about why.
double etm_distance(const MotifReport& report1, const CountTable& table1,
                    const MotifReport& report2, const CountTable& table2,
                    std::string* diagnostic = nullptr);

// The j signatures whose occurrence varies most across the tables.
// Variance is population variance of per-table relative frequencies
// (count/total, absent = 0); raw counts behind relative=false. Ties break
// toward the lexicographically smaller signature. j larger than the number
// of distinct signatures returns all of them (with a diagnostic).
std::vector<std::string> top_variance_motifs(std::span<const CountTable> tables, std::size_t j,
                                             bool relative = true,
                                             std::string* diagnostic = nullptr);

enum class MotifMode {
    AllShared,    // per pair: intersection of the two motif sets
    TopVariance,  // additionally restricted to the global top-variance list
};

// One graph mined once: counts, null ensemble, motif report. `ok` is false
// when mining failed (error kept in `error`); such graphs distance 1.0 to
// everything.
struct MinedGraph {
    std::string label;
    bool ok = false;
    std::string error;
    CountTable table;
    MotifReport report;
};

MinedGraph mine_graph(std::string label, const TemporalGraph& g, std::int64_t delta_t, int k,
                      const MiningParams& params, int workers = 1, bool strict_windows = false);

// Pairwise ETM distances over already-mined graphs.
DistanceMatrix etm_distance_matrix(std::span<const MinedGraph> graphs, MotifMode mode,
                                   std::size_t top_j = 3,
                                   std::vector<std::string>* diagnostics = nullptr);

// Mines every graph (graph i is seeded with derive_seed(params.seed, i)),
// then assembles the matrix. Per-graph failures become diagnostics and 1.0
// entries rather than errors.
DistanceMatrix etm_distance_matrix(std::span<const std::pair<std::string, const TemporalGraph*>> graphs,
                                   std::int64_t delta_t, int k, const MiningParams& params,
                                   MotifMode mode, std::size_t top_j = 3, int workers = 1,
                                   bool strict_windows = false,
                                   std::vector<std::string>* diagnostics = nullptr);

} // namespace etm
