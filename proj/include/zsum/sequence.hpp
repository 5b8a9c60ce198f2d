#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

struct SequenceEntry {
    GroupElement element;
    std::int64_t multiplicity = 1;
};

// A finite multiset of group elements. Entries are kept canonical: pairwise
// distinct elements sorted by index_of, multiplicities >= 1.
struct Sequence {
    GroupParams group;
    std::vector<SequenceEntry> entries;

    std::int64_t length() const {
        std::int64_t total = 0;
        for (const auto& e : entries) total += e.multiplicity;
        return total;
    }
};

// Merges duplicate elements, sorts by index_of, validates coordinates and
// multiplicities. Throws std::invalid_argument on bad input.
Sequence make_sequence(const GroupParams& g,
                       std::vector<std::pair<GroupElement, std::int64_t>> items);

// Convenience: every element with multiplicity 1 (duplicates merge).
Sequence sequence_from_elements(const GroupParams& g, const std::vector<GroupElement>& elems);

bool all_multiplicities_one(const Sequence& s);

// v1 text format:
//   zsum-seq v1
//   n=<n> r=<r>
//   c1,c2,...,cr x<mult>     ("x<mult>" optional, default 1; '#' starts a comment line)
Sequence parse_sequence(std::string_view text);
std::string serialize_sequence(const Sequence& s);

Sequence load_sequence_file(const std::string& path);
void save_sequence_file(const Sequence& s, const std::string& path);

} // namespace zsum
