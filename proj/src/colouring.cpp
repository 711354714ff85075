#include "urforge/colouring.hpp"

#include "urforge/rng.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace urforge {

namespace {

std::uint64_t parse_seed(const std::string& s, const std::string& spec) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw ParseError("bad seed in strategy '" + spec + "'");
    return v;
}

std::map<Point, int> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read colouring file '" + path + "'");
    std::map<Point, int> t;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long id = 0;
        int c = 0;
        if (!(ls >> id)) continue;
        if (!(ls >> c) || (c != 0 && c != 1) || id < 0)
            throw ParseError("bad line in colouring file '" + path + "'");
        t[static_cast<Point>(id)] = c;
    }
    return t;
}

}  // namespace

Colouring Colouring::parse(const std::string& spec) {
    Colouring c;
    c.name_ = spec;
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "const") {
        if (tail != "0" && tail != "1") throw ParseError("unknown strategy '" + spec + "'");
        c.kind_ = Kind::constant;
        c.value_ = tail == "1";
    } else if (head == "random") {
        c.kind_ = Kind::random;
        c.seed_ = parse_seed(tail, spec);
    } else if (head == "parity" && colon == std::string::npos) {
        c.kind_ = Kind::parity;
    } else if (head == "profile-hash") {
        c.kind_ = Kind::profile_hash;
        c.seed_ = colon == std::string::npos ? 0 : parse_seed(tail, spec);
    } else if (head == "class-alternating" && colon == std::string::npos) {
        c.kind_ = Kind::class_alternating;
    } else if (head == "file" && !tail.empty()) {
        c.kind_ = Kind::table;
        c.table_ = read_table(tail);
    } else {
        throw ParseError("unknown strategy '" + spec + "'");
    }
    return c;
}

Colouring Colouring::from_table(std::map<Point, int> table, std::string name) {
    Colouring c;
    c.kind_ = Kind::table;
    c.table_ = std::move(table);
    c.name_ = std::move(name);
    return c;
}

int Colouring::peek(Point p) const {
    if (p < 0 || static_cast<std::size_t>(p) >= memo_.size()) return -1;
    return memo_[static_cast<std::size_t>(p)];
}

int Colouring::operator()(const Space& s, Point p) {
    if (static_cast<std::size_t>(p) >= memo_.size()) memo_.resize(static_cast<std::size_t>(p) + 1, -1);
    int& m = memo_[static_cast<std::size_t>(p)];
    if (m < 0) m = compute(s, p);
    return m;
}

int Colouring::compute(const Space& s, Point p) {
    switch (kind_) {
    case Kind::constant:
        return value_;
    case Kind::random:
        return static_cast<int>(mix64(seed_ ^ mix64(static_cast<std::uint64_t>(p))) & 1u);
    case Kind::parity:
        return p & 1;
    case Kind::profile_hash: {
        std::uint64_t h = mix64(seed_ + 0x51ed2705u);
        for (auto v : s.row(p)) h = mix64(h ^ v);
        return static_cast<int>((h >> 17) & 1u);
    }
    case Kind::class_alternating: {
        int m = 0;
        try {
            m = *s.D().index_of(blocks(s.D()).front().back());
        } catch (const PreconditionError&) {
            m = static_cast<int>(s.D().size()) - 1;
        }
        while (cls_.size() <= static_cast<std::size_t>(p)) {
            Point q = static_cast<Point>(cls_.size());
            int k = -1;
            const auto& row = s.row(q);
            for (Point r = 0; r < q && k < 0; ++r)
                if (row[static_cast<std::size_t>(r)] <= m) k = cls_[static_cast<std::size_t>(r)];
            cls_.push_back(k < 0 ? ncls_++ : k);
        }
        return cls_[static_cast<std::size_t>(p)] & 1;
    }
    case Kind::table: {
        auto it = table_.find(p);
        return it == table_.end() ? 0 : it->second;
    }
    }
    return 0;
}

}  // namespace urforge
