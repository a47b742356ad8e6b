#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etm/temporal_graph.hpp"

namespace etm {

// Egocentric temporal neighborhood of one ego over k+1 consecutive slices.
// presence maps each neighbor identifier to a (k+1)-bit row; bit j of the
// row (counted from the slice-0 side) is set iff the node neighbors the ego
// in slice window + j. Rows are never all-zero and the ego has no row: the
// layered graph of the definition is fully determined by these rows, so it
// is never materialized here.
struct Etn {
    NodeId ego = 0;
    std::size_t window = 0;  // first slice index, 0-based
    int k = 0;
    std::vector<std::pair<NodeId, std::uint32_t>> presence;  // any order
};

// Canonical signature: the presence rows sorted lexicographically
// ('0' < '1'), concatenated. Rows are stored as integers whose big-endian
// (k+1)-bit rendering is the text block, so numeric order equals
// lexicographic text order.
struct Etns {
    int k = 0;
    std::vector<std::uint32_t> blocks;  // ascending, duplicates kept

    std::string canonical_text() const;

    friend bool operator==(const Etns&, const Etns&) = default;
};

// Text block for one row, e.g. row 0b110 with k=2 -> "110".
std::string render_block(std::uint32_t row, int k);

// ETN of `ego` for the window of slices [window, window + k]. Requires
// window + k < seq.size(). Nodes absent from every slice are omitted.
Etn build_etn(const SnapshotSequence& seq, NodeId ego, std::size_t window, int k);

// Sorts the presence rows and renders nothing else: equal up to identifier
// renaming implies equal signature, and conversely.
Etns compute_etns(const Etn& e);

// Inverse of canonical_text(). Rejects non-'0'/'1' characters and lengths
// not divisible by k+1 (parse_error), and unsorted or all-zero blocks
// (canonicality_error).
Etns etns_parse(std::string_view text, int k);

// Signature equality; by construction this coincides with label-preserving
// isomorphism of the layered neighborhood graphs. Orders must match.
bool etn_isomorphic(const Etn& a, const Etn& b);

} // namespace etm
