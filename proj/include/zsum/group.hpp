#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zsum {

// The ambient group C_n^r, elements written additively as residue vectors.
struct GroupParams {
    std::int64_t n = 0;        // modulus, >= 2
    int r = 0;                 // rank, >= 1
    std::uint64_t order = 0;   // n^r
    std::int64_t exponent = 0; // exp(C_n^r) = n
};

// Validates n >= 2, r >= 1 and n^r <= 2^40. Throws std::invalid_argument otherwise.
GroupParams make_group(std::int64_t n, int r);

struct GroupElement {
    std::vector<std::int64_t> coords; // each in [0, n)
    bool operator==(const GroupElement&) const = default;
};

GroupElement identity(const GroupParams& g);
bool is_identity(const GroupElement& a);

GroupElement add(const GroupElement& a, const GroupElement& b, const GroupParams& g);
GroupElement neg(const GroupElement& a, const GroupParams& g);
GroupElement scale(std::int64_t k, const GroupElement& a, const GroupParams& g);

// Little-endian mixed-radix encoding: coords[0] is the least significant base-n digit.
// index_of and element_at are mutually inverse bijections [0, n^r) <-> elements.
std::uint64_t index_of(const GroupElement& a, const GroupParams& g);
GroupElement element_at(std::uint64_t index, const GroupParams& g);

// One representative per pair {g, -g} of nonzero elements; the representative is
// the element with the smaller index_of value. Requires n odd; size (n^r - 1) / 2.
std::vector<GroupElement> positive_half(const GroupParams& g);

// Weights act on elements as integer scalars; they are reduced mod n at use sites.
struct WeightSet {
    std::vector<std::int64_t> weights{-1, 1};
};

struct ReducedWeight {
    std::int64_t display; // the weight as given, e.g. -1
    std::int64_t residue; // reduced mod n, e.g. 2
};

// Reduced, deduplicated weights in deterministic rank order: +1 first (if present),
// then -1, then the rest ascending. Throws if a weight reduces to 0 mod n or the
// set is empty.
std::vector<ReducedWeight> reduce_weights(const WeightSet& a, const GroupParams& g);

// True iff the reduced weight set is exactly {1, n-1} with n == 3, the setting all
// C_3^r-specific results live in.
bool is_plus_minus_one_mod3(const WeightSet& a, const GroupParams& g);

std::string to_string(const GroupElement& a);

} // namespace zsum
