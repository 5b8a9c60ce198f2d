#include "zsum/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace zsum {

GroupElement signed_sum(const Sequence& s, const Witness& w) {
    GroupElement acc = identity(s.group);
    for (const auto& pick : w.picks) {
        if (pick.entry >= s.entries.size())
            throw std::invalid_argument("signed_sum: entry index out of range");
        const auto& entry = s.entries[pick.entry];
        if (pick.copies() < 1 || pick.copies() > entry.multiplicity)
            throw std::invalid_argument("signed_sum: copy count out of range");
        for (std::int64_t sign : pick.signs)
            acc = add(acc, scale(sign, entry.element, s.group), s.group);
    }
    return acc;
}

bool is_valid_witness(const Sequence& s, const Witness& w, const WeightSet& a) {
    for (const auto& pick : w.picks)
        for (std::int64_t sign : pick.signs)
            if (std::find(a.weights.begin(), a.weights.end(), sign) == a.weights.end())
                return false;
    try {
        return is_identity(signed_sum(s, w));
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::string witness_to_json(const Sequence& s, const Witness& w) {
    nlohmann::ordered_json j;
    j["length"] = w.length();
    auto& picks = j["picks"] = nlohmann::ordered_json::array();
    for (const auto& pick : w.picks) {
        const auto& elem = s.entries.at(pick.entry).element;
        for (std::int64_t sign : pick.signs) {
            nlohmann::ordered_json rec;
            rec["element"] = elem.coords;
            rec["sign"] = sign;
            picks.push_back(std::move(rec));
        }
    }
    return j.dump();
}

} // namespace zsum
