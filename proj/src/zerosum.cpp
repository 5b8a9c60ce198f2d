#include "zsum/zerosum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace zsum {

namespace {

std::uint64_t idx_add(std::uint64_t a, std::uint64_t b, const GroupParams& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.n);
    std::uint64_t out = 0, radix = 1;
    for (int i = 0; i < g.r; ++i) {
        const std::uint64_t d = (a % n + b % n) % n;
        out += d * radix;
        radix *= n;
        a /= n;
        b /= n;
    }
    return out;
}

std::uint64_t idx_neg(std::uint64_t a, const GroupParams& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.n);
    std::uint64_t out = 0, radix = 1;
    for (int i = 0; i < g.r; ++i) {
        const std::uint64_t d = (n - a % n) % n;
        out += d * radix;
        radix *= n;
        a /= n;
    }
    return out;
}

std::uint64_t idx_sub(std::uint64_t a, std::uint64_t b, const GroupParams& g) {
    return idx_add(a, idx_neg(b, g), g);
}

std::uint64_t idx_scale(std::int64_t t, std::uint64_t a, const GroupParams& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.n);
    const std::uint64_t tr = static_cast<std::uint64_t>(((t % g.n) + g.n) % g.n);
    std::uint64_t out = 0, radix = 1;
    for (int i = 0; i < g.r; ++i) {
        out += ((a % n) * tr % n) * radix;
        radix *= n;
        a /= n;
    }
    return out;
}

// Backward feasibility table: row (i, c) holds every group value achievable by
// picking exactly c signed copies from entries i..E-1. Dense bitset rows while
// they fit in memory, hash sets beyond that.
class ReachTable {
public:
    ReachTable(const Sequence& s, const std::vector<ReducedWeight>& weights,
               std::int64_t max_copies)
        : seq_(s), group_(s.group), weights_(weights),
          entries_(s.entries.size()), max_copies_(max_copies) {
        coeff_sums_.resize(static_cast<std::size_t>(max_copies_) + 1);
        coeff_sums_[0] = {0};
        for (std::int64_t k = 1; k <= max_copies_; ++k) {
            std::unordered_set<std::int64_t> sums;
            for (std::int64_t prev : coeff_sums_[static_cast<std::size_t>(k - 1)])
                for (const auto& w : weights_)
                    sums.insert((prev + w.residue) % group_.n);
            coeff_sums_[static_cast<std::size_t>(k)].assign(sums.begin(), sums.end());
            std::sort(coeff_sums_[static_cast<std::size_t>(k)].begin(),
                      coeff_sums_[static_cast<std::size_t>(k)].end());
        }

        // t * element, as an index, per entry and coefficient residue t.
        contrib_.resize(entries_);
        for (std::size_t i = 0; i < entries_; ++i) {
            contrib_[i].assign(static_cast<std::size_t>(group_.n), 0);
            for (std::int64_t t = 0; t < group_.n; ++t)
                contrib_[i][static_cast<std::size_t>(t)] =
                    index_of(scale(t, s.entries[i].element, group_), group_);
        }

        const std::size_t rows = (entries_ + 1) * static_cast<std::size_t>(max_copies_ + 1);
        words_ = static_cast<std::size_t>((group_.order + 63) / 64);
        const unsigned __int128 dense_bytes =
            static_cast<unsigned __int128>(rows) * words_ * 8;
        dense_ = group_.order <= (1ull << 22) && dense_bytes <= (1ull << 29);
        if (dense_)
            bits_.assign(rows * words_, 0);
        else
            sets_.assign(rows, {});

        fill();
    }

    bool contains(std::size_t i, std::int64_t c, std::uint64_t v) const {
        const std::size_t row = row_index(i, c);
        if (dense_)
            return (bits_[row * words_ + v / 64] >> (v % 64)) & 1u;
        return sets_[row].count(v) != 0;
    }

    // Greedy canonical reconstruction: maximise copies taken at the earliest
    // entries (lexicographically smallest expanded index tuple), then take the
    // lexicographically smallest feasible sign tuple in weight rank order.
    Witness reconstruct(std::int64_t total) const {
        Witness w;
        std::uint64_t target = 0;
        std::int64_t remaining = total;
        for (std::size_t i = 0; i < entries_ && remaining > 0; ++i) {
            const std::int64_t cap = std::min<std::int64_t>(seq_.entries[i].multiplicity, remaining);
            for (std::int64_t k = cap; k >= 0; --k) {
                if (k == 0) break; // taking nothing from this entry; move on
                std::vector<std::int64_t> signs;
                if (feasible_sign_tuple(i, k, remaining, target, signs)) {
                    const std::int64_t t = residue_sum(signs);
                    target = idx_sub(target, contrib_[i][static_cast<std::size_t>(t)], group_);
                    remaining -= k;
                    w.picks.push_back({i, std::move(signs)});
                    break;
                }
            }
        }
        return w;
    }

private:
    std::size_t row_index(std::size_t i, std::int64_t c) const {
        return i * static_cast<std::size_t>(max_copies_ + 1) + static_cast<std::size_t>(c);
    }

    void set_bit(std::size_t row, std::uint64_t v) {
        if (dense_)
            bits_[row * words_ + v / 64] |= 1ull << (v % 64);
        else
            sets_[row].insert(v);
    }

    template <typename Fn>
    void for_each(std::size_t row, Fn&& fn) const {
        if (dense_) {
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t word = bits_[row * words_ + w];
                while (word) {
                    const int bit = __builtin_ctzll(word);
                    fn(static_cast<std::uint64_t>(w * 64 + static_cast<std::size_t>(bit)));
                    word &= word - 1;
                }
            }
        } else {
            for (std::uint64_t v : sets_[row]) fn(v);
        }
    }

    void fill() {
        set_bit(row_index(entries_, 0), 0);
        for (std::size_t ii = entries_; ii-- > 0;) {
            const std::int64_t mult = seq_.entries[ii].multiplicity;
            for (std::int64_t c = 0; c <= max_copies_; ++c) {
                const std::size_t dst = row_index(ii, c);
                const std::int64_t kmax = std::min(mult, c);
                for (std::int64_t k = 0; k <= kmax; ++k) {
                    const std::size_t src = row_index(ii + 1, c - k);
                    for (std::int64_t t : coeff_sums_[static_cast<std::size_t>(k)]) {
                        const std::uint64_t shift = contrib_[ii][static_cast<std::size_t>(t)];
                        for_each(src, [&](std::uint64_t v) {
                            set_bit(dst, idx_add(v, shift, group_));
                        });
                    }
                }
            }
        }
    }

    std::int64_t residue_sum(const std::vector<std::int64_t>& signs) const {
        std::int64_t t = 0;
        for (std::int64_t s : signs) {
            std::int64_t res = s % group_.n;
            if (res < 0) res += group_.n;
            t = (t + res) % group_.n;
        }
        return t;
    }

    // Enumerates size-k sign multisets as non-decreasing tuples in weight rank
    // order and returns the first one whose contribution leaves a feasible
    // suffix state. k is at most exp(G), so this stays tiny.
    bool feasible_sign_tuple(std::size_t i, std::int64_t k, std::int64_t remaining,
                             std::uint64_t target, std::vector<std::int64_t>& out) const {
        std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
        while (true) {
            std::int64_t t = 0;
            for (std::size_t c : choice) t = (t + weights_[c].residue) % group_.n;
            const std::uint64_t need =
                idx_sub(target, contrib_[i][static_cast<std::size_t>(t)], group_);
            if (contains(i + 1, remaining - k, need)) {
                out.clear();
                for (std::size_t c : choice) out.push_back(weights_[c].display);
                return true;
            }
            // next non-decreasing tuple
            std::size_t pos = choice.size();
            while (pos > 0 && choice[pos - 1] + 1 == weights_.size()) --pos;
            if (pos == 0) return false;
            const std::size_t next = choice[pos - 1] + 1;
            for (std::size_t j = pos - 1; j < choice.size(); ++j) choice[j] = next;
        }
    }

    const Sequence& seq_;
    GroupParams group_;
    std::vector<ReducedWeight> weights_;
    std::size_t entries_;
    std::int64_t max_copies_;
    std::vector<std::vector<std::int64_t>> coeff_sums_;
    std::vector<std::vector<std::uint64_t>> contrib_;
    bool dense_ = true;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::unordered_set<std::uint64_t>> sets_;
};

} // namespace

const char* condition_name(ConditionKind kind) {
    switch (kind) {
        case ConditionKind::eta: return "eta";
        case ConditionKind::s: return "s";
        case ConditionKind::g: return "g";
    }
    return "?";
}

std::optional<Witness> find_zero_subsequence(const Sequence& s, std::int64_t length,
                                             const WeightSet& a) {
    if (length < 0 || length > s.length())
        throw std::invalid_argument("find_zero_subsequence: length out of range");
    if (length == 0) return Witness{};
    const auto weights = reduce_weights(a, s.group);
    ReachTable table(s, weights, length);
    if (!table.contains(0, length, 0)) return std::nullopt;
    return table.reconstruct(length);
}

std::optional<Witness> find_zero_subsequence_bruteforce(const Sequence& s, std::int64_t length,
                                                        const WeightSet& a) {
    if (length < 0 || length > s.length())
        throw std::invalid_argument("find_zero_subsequence_bruteforce: length out of range");
    const auto weights = reduce_weights(a, s.group);
    if (length == 0) return Witness{};

    const std::int64_t m = s.length();
    long double work = 1.0L; // C(m, length) * |weights|^length
    for (std::int64_t i = 0; i < length; ++i)
        work = work * static_cast<long double>(m - i) / static_cast<long double>(i + 1);
    for (std::int64_t i = 0; i < length; ++i)
        work *= static_cast<long double>(weights.size());
    if (work > 1e9L)
        throw std::invalid_argument("find_zero_subsequence_bruteforce: guard exceeded");

    // flattened copy positions -> entry index
    std::vector<std::size_t> entry_of_pos;
    entry_of_pos.reserve(static_cast<std::size_t>(m));
    for (std::size_t e = 0; e < s.entries.size(); ++e)
        for (std::int64_t c = 0; c < s.entries[e].multiplicity; ++c)
            entry_of_pos.push_back(e);
    std::vector<std::uint64_t> elem_idx(s.entries.size());
    for (std::size_t e = 0; e < s.entries.size(); ++e)
        elem_idx[e] = index_of(s.entries[e].element, s.group);

    const std::size_t L = static_cast<std::size_t>(length);
    std::vector<std::size_t> comb(L);
    for (std::size_t i = 0; i < L; ++i) comb[i] = i;
    std::vector<std::size_t> signs(L, 0);

    const GroupParams& g = s.group;
    while (true) {
        // all weight assignments for this combination
        std::fill(signs.begin(), signs.end(), 0);
        while (true) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < L; ++i) {
                const std::uint64_t base = elem_idx[entry_of_pos[comb[i]]];
                std::uint64_t scaled = 0;
                for (std::int64_t t = 0; t < weights[signs[i]].residue; ++t)
                    scaled = idx_add(scaled, base, g);
                acc = idx_add(acc, scaled, g);
            }
            if (acc == 0) {
                Witness w;
                for (std::size_t i = 0; i < L; ++i) {
                    const std::size_t entry = entry_of_pos[comb[i]];
                    if (!w.picks.empty() && w.picks.back().entry == entry)
                        w.picks.back().signs.push_back(weights[signs[i]].display);
                    else
                        w.picks.push_back({entry, {weights[signs[i]].display}});
                }
                return w;
            }
            std::size_t pos = L;
            while (pos > 0 && signs[pos - 1] + 1 == weights.size()) signs[--pos] = 0;
            if (pos == 0) break;
            ++signs[pos - 1];
        }
        // next combination
        std::size_t pos = L;
        while (pos > 0 && comb[pos - 1] == static_cast<std::size_t>(m) - (L - pos) - 1) --pos;
        if (pos == 0) break;
        ++comb[pos - 1];
        for (std::size_t j = pos; j < L; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

std::optional<Witness> find_short_zero_sum(const Sequence& s, std::int64_t max_length,
                                           const WeightSet& a) {
    if (max_length < 1)
        throw std::invalid_argument("find_short_zero_sum: max_length must be >= 1");
    const std::int64_t cap = std::min(max_length, s.length());
    if (cap < 1) return std::nullopt;
    const auto weights = reduce_weights(a, s.group);
    ReachTable table(s, weights, cap);
    for (std::int64_t len = 1; len <= cap; ++len)
        if (table.contains(0, len, 0)) return table.reconstruct(len);
    return std::nullopt;
}

bool satisfies_condition(const Sequence& s, ConditionKind kind, const WeightSet& a) {
    const std::int64_t exp = s.group.exponent;
    switch (kind) {
        case ConditionKind::eta:
            return find_short_zero_sum(s, exp, a).has_value();
        case ConditionKind::s:
            if (s.length() < exp) return false;
            return find_zero_subsequence(s, exp, a).has_value();
        case ConditionKind::g:
            if (!all_multiplicities_one(s))
                throw std::invalid_argument(
                    "satisfies_condition: g-condition requires distinct elements");
            if (s.length() < exp) return false;
            return find_zero_subsequence(s, exp, a).has_value();
    }
    throw std::logic_error("unreachable");
}

Witness extract_pigeonhole_witness(const Sequence& s, const WeightSet& a) {
    const GroupParams& g = s.group;
    if (g.n % 2 == 0)
        throw std::invalid_argument("extract_pigeonhole_witness: requires odd n");
    const auto weights = reduce_weights(a, g);
    std::int64_t w_plus = 0, w_minus = 0;
    bool have_plus = false, have_minus = false;
    for (const auto& w : weights) {
        if (w.residue == 1 && !have_plus) { w_plus = w.display; have_plus = true; }
        if (w.residue == g.n - 1 && !have_minus) { w_minus = w.display; have_minus = true; }
    }
    if (!have_plus || !have_minus || weights.size() != 2)
        throw std::invalid_argument("extract_pigeonhole_witness: requires A = {-1,1}");

    const std::int64_t n = g.n;
    const std::int64_t threshold =
        static_cast<std::int64_t>(g.order - 1) * ((n - 1) / 2) + 1;
    if (s.length() < threshold)
        throw std::invalid_argument("extract_pigeonhole_witness: length below threshold");

    // pair-class decomposition
    struct PairClass {
        std::size_t plus_entry = SIZE_MAX;  // representative (smaller index)
        std::size_t minus_entry = SIZE_MAX; // its negation
        std::int64_t v_plus = 0, v_minus = 0;
    };
    std::vector<std::pair<std::uint64_t, PairClass>> classes; // keyed by rep index, ascending
    std::size_t zero_entry = SIZE_MAX;
    std::int64_t zeros = 0;
    for (std::size_t e = 0; e < s.entries.size(); ++e) {
        const std::uint64_t idx = index_of(s.entries[e].element, g);
        if (idx == 0) {
            zero_entry = e;
            zeros = s.entries[e].multiplicity;
            continue;
        }
        const std::uint64_t nidx = idx_neg(idx, g);
        const std::uint64_t rep = std::min(idx, nidx);
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& kv) { return kv.first == rep; });
        if (it == classes.end()) {
            classes.push_back({rep, PairClass{}});
            it = classes.end() - 1;
        }
        if (idx == rep) {
            it->second.plus_entry = e;
            it->second.v_plus = s.entries[e].multiplicity;
        } else {
            it->second.minus_entry = e;
            it->second.v_minus = s.entries[e].multiplicity;
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    auto finish = [&](Witness w) {
        std::sort(w.picks.begin(), w.picks.end(),
                  [](const WitnessPick& x, const WitnessPick& y) { return x.entry < y.entry; });
        if (!is_identity(signed_sum(s, w)) || w.length() != n)
            throw std::logic_error("extract_pigeonhole_witness: replay check failed");
        return w;
    };

    // case 1: a whole class covers n copies; +1 on g, -1 on -g gives n*g = 0
    for (const auto& [rep, cls] : classes) {
        if (cls.v_plus + cls.v_minus >= n) {
            const std::int64_t take_plus = std::min(cls.v_plus, n);
            const std::int64_t take_minus = n - take_plus;
            Witness w;
            if (take_plus > 0)
                w.picks.push_back({cls.plus_entry,
                                   std::vector<std::int64_t>(static_cast<std::size_t>(take_plus), w_plus)});
            if (take_minus > 0)
                w.picks.push_back({cls.minus_entry,
                                   std::vector<std::int64_t>(static_cast<std::size_t>(take_minus), w_minus)});
            return finish(std::move(w));
        }
    }

    // all zeros
    if (zeros >= n) {
        Witness w;
        w.picks.push_back({zero_entry, std::vector<std::int64_t>(static_cast<std::size_t>(n), w_plus)});
        return finish(std::move(w));
    }

    // case 2: zeros plus an even run from one class
    if (zeros >= 1) {
        for (const auto& [rep, cls] : classes) {
            if (zeros + cls.v_plus + cls.v_minus > n) {
                std::int64_t t = n - zeros;
                if (t % 2 != 0) ++t; // even length, >= n - zeros
                const std::int64_t a_cnt = std::min(cls.v_plus, t);
                const std::int64_t b_cnt = t - a_cnt;
                // contributions: (plus, w_plus) -> +x, (plus, w_minus) -> -x,
                //                (minus, w_plus) -> -x, (minus, w_minus) -> +x
                const std::int64_t need_pos = t / 2;
                const std::int64_t p_pos = std::min(a_cnt, need_pos);
                const std::int64_t p_neg = a_cnt - p_pos;
                const std::int64_t q_pos = need_pos - p_pos; // minus copies contributing +x
                const std::int64_t q_neg = b_cnt - q_pos;
                Witness w;
                if (a_cnt > 0) {
                    std::vector<std::int64_t> signs;
                    signs.insert(signs.end(), static_cast<std::size_t>(p_pos), w_plus);
                    signs.insert(signs.end(), static_cast<std::size_t>(p_neg), w_minus);
                    w.picks.push_back({cls.plus_entry, std::move(signs)});
                }
                if (b_cnt > 0) {
                    std::vector<std::int64_t> signs;
                    signs.insert(signs.end(), static_cast<std::size_t>(q_neg), w_plus);
                    signs.insert(signs.end(), static_cast<std::size_t>(q_pos), w_minus);
                    w.picks.push_back({cls.minus_entry, std::move(signs)});
                }
                if (n - t > 0)
                    w.picks.push_back({zero_entry,
                                       std::vector<std::int64_t>(static_cast<std::size_t>(n - t), w_plus)});
                return finish(std::move(w));
            }
        }
    }

    // Only reachable for (n, r) = (3, 1) inputs at the exact threshold, where the
    // counting argument admits equality; one more element always resolves it.
    throw std::runtime_error("extract_pigeonhole_witness: no extraction case applies");
}

} // namespace zsum
