#pragma once

#include <cstdint>
#include <optional>

#include "zsum/sequence.hpp"
#include "zsum/witness.hpp"

namespace zsum {

// The three conditions a sequence can satisfy:
//   eta - an A-zero-sum subsequence of length at most exp(G) exists,
//   s   - one of length exactly exp(G) exists,
//   g   - same as s, but the sequence must consist of distinct elements.
enum class ConditionKind { eta, s, g };

const char* condition_name(ConditionKind kind);

// Layered-reachability search for an A-zero-sum subsequence of length exactly
// `length`. Returns the deterministic canonical witness (lexicographically
// smallest expanded entry-index tuple, then smallest sign tuple with +1 < -1),
// or nullopt when no signed selection sums to the identity.
std::optional<Witness> find_zero_subsequence(const Sequence& s, std::int64_t length,
                                             const WeightSet& a);

// Independent oracle: enumerates all size-`length` position combinations and all
// weight assignments. Guarded at ~1e9 enumerated candidates; test use only.
std::optional<Witness> find_zero_subsequence_bruteforce(const Sequence& s, std::int64_t length,
                                                        const WeightSet& a);

// Smallest-length witness with length in 1..max_length, or nullopt.
std::optional<Witness> find_short_zero_sum(const Sequence& s, std::int64_t max_length,
                                           const WeightSet& a);

bool satisfies_condition(const Sequence& s, ConditionKind kind, const WeightSet& a);

// Constructive extractor for A = {-1,1} and odd n: given
// |S| >= (n^r - 1)(n - 1)/2 + 1, produces a length-n witness without global
// search, by pair-class pigeonhole.
Witness extract_pigeonhole_witness(const Sequence& s, const WeightSet& a = WeightSet{});

} // namespace zsum
