#include "urforge/io.hpp"

#include <sstream>

namespace urforge {

namespace {

Dist dist_from_json(const Json& v) {
    if (v.is_string()) return parse_dist(v.get<std::string>());
    if (v.is_number_unsigned() || v.is_number_integer()) {
        auto n = v.get<std::int64_t>();
        if (n < 0) throw ParseError("negative distance");
        return Dist(n);
    }
    throw ParseError("distance must be a rational string or an integer");
}

}  // namespace

DistanceSet parse_distance_set(std::string_view text) {
    auto b = text.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw ParseError("empty distance set");
    if (text[b] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw ParseError(std::string("bad JSON distance set: ") + e.what());
        }
        return distance_set_from_json(j);
    }
    std::vector<Dist> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        try {
            v.push_back(parse_dist(item));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (v.size() > DistanceSet::max_size) throw ParseError("distance set too large");
    return DistanceSet(v);
}

std::string format_distance_set(const DistanceSet& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + d[i].str();
    return out;
}

Json distance_set_json(const DistanceSet& d) {
    Json j = Json::array();
    for (auto& x : d.members()) j.push_back(x.str());
    return j;
}

DistanceSet distance_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("distance set must be a JSON array");
    std::vector<Dist> v;
    try {
        for (auto& x : j) v.push_back(dist_from_json(x));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    if (v.size() > DistanceSet::max_size) throw ParseError("distance set too large");
    return DistanceSet(v);
}

Json space_json(const Space& s) {
    Json rows = Json::array();
    for (Point i = 0; i < s.size(); ++i) {
        Json r = Json::array();
        for (Point j = 0; j < s.size(); ++j) r.push_back(s.dist(i, j).str());
        rows.push_back(std::move(r));
    }
    return Json{{"D", distance_set_json(s.D())}, {"n", s.size()}, {"dist", std::move(rows)}};
}

Space space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("D") || !j.contains("dist")) throw ParseError("space JSON needs D and dist");
    auto d = distance_set_from_json(j.at("D"));
    const auto& rows = j.at("dist");
    if (!rows.is_array()) throw ParseError("dist must be a matrix");
    if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<std::size_t>() != rows.size()))
        throw ParseError("n does not match the matrix");
    std::vector<std::vector<Dist>> m;
    try {
        for (auto& r : rows) {
            if (!r.is_array() || r.size() != rows.size()) throw ParseError("dist must be square");
            std::vector<Dist> row;
            for (auto& x : r) row.push_back(dist_from_json(x));
            m.push_back(std::move(row));
        }
        return Space::from_matrix(d, m);
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json approximant_json(const Approximant& a, int saturation) {
    Json j = space_json(a.space);
    j["seed"] = a.seed;
    j["saturation"] = saturation;
    return j;
}

Approximant approximant_from_json(const Json& j) {
    Approximant a{space_from_json(j), 0, 1};
    if (j.contains("seed")) a.seed = j.at("seed").get<std::uint64_t>();
    return a;
}

Json quotient_json(const QuotientSpace& q) {
    Json j = space_json(q.space);
    j["classes"] = q.back;
    return j;
}

Json index_metric_json(const IndexMetric& m) {
    Json j = Json::array();
    for (auto& r : m) {
        Json row = Json::array();
        for (auto& x : r) row.push_back(x.str());
        j.push_back(std::move(row));
    }
    return j;
}

std::string dot(const Space& s, const std::string& name) {
    std::ostringstream o;
    o << "graph " << name << " {\n";
    for (Point i = 0; i < s.size(); ++i) o << "  " << i << ";\n";
    for (Point i = 0; i < s.size(); ++i)
        for (Point j = i + 1; j < s.size(); ++j) o << "  " << i << " -- " << j << " [label=\"" << s.dist(i, j).str() << "\"];\n";
    o << "}\n";
    return o.str();
}

}  // namespace urforge
