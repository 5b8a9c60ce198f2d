#include "zsum/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsum {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t m = v % n;
    return m < 0 ? m + n : m;
}

void check_rank(const GroupElement& a, const GroupParams& g, const char* what) {
    if (static_cast<int>(a.coords.size()) != g.r)
        throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

} // namespace

GroupParams make_group(std::int64_t n, int r) {
    if (n < 2) throw std::invalid_argument("make_group: n must be >= 2");
    if (r < 1) throw std::invalid_argument("make_group: r must be >= 1");
    constexpr unsigned __int128 kMaxOrder = (static_cast<unsigned __int128>(1) << 40);
    unsigned __int128 order = 1;
    for (int i = 0; i < r; ++i) {
        order *= static_cast<unsigned __int128>(n);
        if (order > kMaxOrder)
            throw std::invalid_argument("make_group: n^r exceeds 2^40");
    }
    GroupParams g;
    g.n = n;
    g.r = r;
    g.order = static_cast<std::uint64_t>(order);
    g.exponent = n;
    return g;
}

GroupElement identity(const GroupParams& g) {
    GroupElement e;
    e.coords.assign(static_cast<std::size_t>(g.r), 0);
    return e;
}

bool is_identity(const GroupElement& a) {
    return std::all_of(a.coords.begin(), a.coords.end(),
                       [](std::int64_t c) { return c == 0; });
}

GroupElement add(const GroupElement& a, const GroupElement& b, const GroupParams& g) {
    check_rank(a, g, "add");
    check_rank(b, g, "add");
    GroupElement out;
    out.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = mod_reduce(a.coords[i] + b.coords[i], g.n);
    return out;
}

GroupElement neg(const GroupElement& a, const GroupParams& g) {
    check_rank(a, g, "neg");
    GroupElement out;
    out.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = mod_reduce(-a.coords[i], g.n);
    return out;
}

GroupElement scale(std::int64_t k, const GroupElement& a, const GroupParams& g) {
    check_rank(a, g, "scale");
    const std::int64_t kr = mod_reduce(k, g.n);
    GroupElement out;
    out.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = mod_reduce(kr * a.coords[i], g.n);
    return out;
}

std::uint64_t index_of(const GroupElement& a, const GroupParams& g) {
    check_rank(a, g, "index_of");
    std::uint64_t idx = 0;
    std::uint64_t radix = 1;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        const std::int64_t c = a.coords[i];
        if (c < 0 || c >= g.n)
            throw std::invalid_argument("index_of: coordinate out of range");
        idx += static_cast<std::uint64_t>(c) * radix;
        radix *= static_cast<std::uint64_t>(g.n);
    }
    return idx;
}

GroupElement element_at(std::uint64_t index, const GroupParams& g) {
    if (index >= g.order)
        throw std::invalid_argument("element_at: index out of range");
    GroupElement out;
    out.coords.resize(static_cast<std::size_t>(g.r));
    for (int i = 0; i < g.r; ++i) {
        out.coords[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(index % static_cast<std::uint64_t>(g.n));
        index /= static_cast<std::uint64_t>(g.n);
    }
    return out;
}

std::vector<GroupElement> positive_half(const GroupParams& g) {
    if (g.n % 2 == 0)
        throw std::invalid_argument("positive_half: undefined for even n");
    std::vector<GroupElement> half;
    half.reserve(static_cast<std::size_t>((g.order - 1) / 2));
    for (std::uint64_t i = 1; i < g.order; ++i) {
        GroupElement e = element_at(i, g);
        if (i < index_of(neg(e, g), g))
            half.push_back(std::move(e));
    }
    return half;
}

std::vector<ReducedWeight> reduce_weights(const WeightSet& a, const GroupParams& g) {
    if (a.weights.empty())
        throw std::invalid_argument("reduce_weights: empty weight set");
    std::vector<std::int64_t> ordered = a.weights;
    std::sort(ordered.begin(), ordered.end(), [](std::int64_t x, std::int64_t y) {
        auto rank = [](std::int64_t w) { return w == 1 ? 0 : w == -1 ? 1 : 2; };
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        return x < y;
    });
    std::vector<ReducedWeight> out;
    for (std::int64_t w : ordered) {
        const std::int64_t res = mod_reduce(w, g.n);
        if (res == 0)
            throw std::invalid_argument("reduce_weights: weight reduces to 0 mod n");
        bool seen = std::any_of(out.begin(), out.end(), [&](const ReducedWeight& rw) {
            return rw.residue == res;
        });
        if (!seen) out.push_back({w, res});
    }
    return out;
}

bool is_plus_minus_one_mod3(const WeightSet& a, const GroupParams& g) {
    if (g.n != 3) return false;
    auto reduced = reduce_weights(a, g);
    if (reduced.size() != 2) return false;
    bool has1 = false, has2 = false;
    for (const auto& rw : reduced) {
        if (rw.residue == 1) has1 = true;
        if (rw.residue == 2) has2 = true;
    }
    return has1 && has2;
}

std::string to_string(const GroupElement& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coords[i]);
    }
    s += ")";
    return s;
}

} // namespace zsum
