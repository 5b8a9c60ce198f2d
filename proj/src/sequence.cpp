#include "zsum/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zsum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view tok, const char* what) {
    tok = trim(tok);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("parse_sequence: bad ") + what + " '" +
                                    std::string(tok) + "'");
    return value;
}

} // namespace

Sequence make_sequence(const GroupParams& g,
                       std::vector<std::pair<GroupElement, std::int64_t>> items) {
    std::map<std::uint64_t, std::pair<GroupElement, std::int64_t>> merged;
    for (auto& [elem, mult] : items) {
        if (mult < 1)
            throw std::invalid_argument("make_sequence: multiplicity must be >= 1");
        const std::uint64_t idx = index_of(elem, g); // validates rank and range
        auto it = merged.find(idx);
        if (it == merged.end())
            merged.emplace(idx, std::make_pair(std::move(elem), mult));
        else
            it->second.second += mult;
    }
    Sequence s;
    s.group = g;
    s.entries.reserve(merged.size());
    for (auto& [idx, em] : merged)
        s.entries.push_back({std::move(em.first), em.second});
    return s;
}

Sequence sequence_from_elements(const GroupParams& g, const std::vector<GroupElement>& elems) {
    std::vector<std::pair<GroupElement, std::int64_t>> items;
    items.reserve(elems.size());
    for (const auto& e : elems) items.emplace_back(e, 1);
    return make_sequence(g, std::move(items));
}

bool all_multiplicities_one(const Sequence& s) {
    return std::all_of(s.entries.begin(), s.entries.end(),
                       [](const SequenceEntry& e) { return e.multiplicity == 1; });
}

Sequence parse_sequence(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    std::size_t li = 0;
    auto next_meaningful = [&]() -> std::string_view {
        while (li < lines.size()) {
            std::string_view l = trim(lines[li]);
            ++li;
            if (l.empty() || l.front() == '#') continue;
            return l;
        }
        return {};
    };

    std::string_view header = next_meaningful();
    if (header != "zsum-seq v1")
        throw std::invalid_argument("parse_sequence: missing 'zsum-seq v1' header");
    std::string_view params = next_meaningful();
    if (params.substr(0, 2) != "n=")
        throw std::invalid_argument("parse_sequence: malformed parameter line");
    const std::size_t sp = params.find(' ');
    if (sp == std::string_view::npos || params.substr(sp + 1, 2) != "r=")
        throw std::invalid_argument("parse_sequence: malformed parameter line");
    const std::int64_t n = parse_int(params.substr(2, sp - 2), "n");
    const std::int64_t r = parse_int(params.substr(sp + 3), "r");
    if (r < 1 || r > 64)
        throw std::invalid_argument("parse_sequence: bad rank");
    const GroupParams g = make_group(n, static_cast<int>(r));

    std::vector<std::pair<GroupElement, std::int64_t>> items;
    for (std::string_view line = next_meaningful(); !line.empty(); line = next_meaningful()) {
        std::int64_t mult = 1;
        const std::size_t xs = line.rfind(" x");
        std::string_view coords = line;
        if (xs != std::string_view::npos) {
            mult = parse_int(line.substr(xs + 2), "multiplicity");
            if (mult < 1)
                throw std::invalid_argument("parse_sequence: multiplicity must be >= 1");
            coords = trim(line.substr(0, xs));
        }
        GroupElement e;
        std::string_view rest = coords;
        while (true) {
            const std::size_t comma = rest.find(',');
            e.coords.push_back(parse_int(rest.substr(0, comma), "coordinate"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (static_cast<int>(e.coords.size()) != g.r)
            throw std::invalid_argument("parse_sequence: wrong number of coordinates");
        for (std::int64_t c : e.coords)
            if (c < 0 || c >= g.n)
                throw std::invalid_argument("parse_sequence: coordinate out of range");
        items.emplace_back(std::move(e), mult);
    }
    return make_sequence(g, std::move(items));
}

std::string serialize_sequence(const Sequence& s) {
    std::ostringstream out;
    out << "zsum-seq v1\n";
    out << "n=" << s.group.n << " r=" << s.group.r << "\n";
    for (const auto& entry : s.entries) {
        for (std::size_t i = 0; i < entry.element.coords.size(); ++i) {
            if (i) out << ',';
            out << entry.element.coords[i];
        }
        if (entry.multiplicity != 1) out << " x" << entry.multiplicity;
        out << '\n';
    }
    return out.str();
}

Sequence load_sequence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

void save_sequence_file(const Sequence& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write sequence file: " + path);
    out << serialize_sequence(s);
}

} // namespace zsum
