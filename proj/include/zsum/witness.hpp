#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsum/sequence.hpp"

namespace zsum {

// One pick: some copies of a single sequence entry, each copy carrying a weight.
struct WitnessPick {
    std::size_t entry = 0;            // index into Sequence.entries
    std::vector<std::int64_t> signs;  // one display weight per copy used

    std::int64_t copies() const { return static_cast<std::int64_t>(signs.size()); }
};

// A signed subsequence. Valid iff signed_sum(...) is the identity.
struct Witness {
    std::vector<WitnessPick> picks;

    std::int64_t length() const {
        std::int64_t total = 0;
        for (const auto& p : picks) total += p.copies();
        return total;
    }
};

// Replays the signed combination. Throws std::invalid_argument on structural
// violations (entry out of range, copies exceeding multiplicity, no copies).
GroupElement signed_sum(const Sequence& s, const Witness& w);

// Structural validity plus weight membership plus identity replay.
bool is_valid_witness(const Sequence& s, const Witness& w, const WeightSet& a);

// {"length": L, "picks": [{"element": [...], "sign": w}, ...]} with picks
// expanded one copy per record in stored order.
std::string witness_to_json(const Sequence& s, const Witness& w);

} // namespace zsum
