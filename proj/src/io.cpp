#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace rainbow {

using nlohmann::json;

namespace {

std::uint64_t parse_unsigned(const std::string& token, const char* what) {
    std::uint64_t value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
        throw FormatError(std::string("malformed ") + what + " '" + token + "'");
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

}  // namespace

void write_family(std::ostream& out, const ColoringFamily& family) {
    out << family.n() << ' ' << family.k() << '\n';
    for (Vertex v = 0; v < family.n(); ++v) {
        bool first = true;
        for (Vertex a = 0; a < family.n(); ++a)
            for (Vertex b = a + 1; b < family.n(); ++b) {
                if (!first) out << ' ';
                out << family.color(v, a, b);
                first = false;
            }
        out << '\n';
    }
}

ColoringFamily read_family(std::istream& in) {
    std::string token;
    if (!(in >> token)) throw FormatError("family file is empty");
    const auto n = parse_unsigned(token, "vertex count");
    if (!(in >> token)) throw FormatError("family header lacks a color count");
    const auto k = parse_unsigned(token, "color count");
    if (n < 2 || k < 1) throw FormatError("family header needs n >= 2 and k >= 1");
    if (k > std::numeric_limits<Color>::max()) throw FormatError("color count too large");

    const std::uint64_t expected = n * complete_edge_count(n);
    std::vector<Color> cells;
    cells.reserve(expected);
    while (in >> token) {
        const auto c = parse_unsigned(token, "color");
        if (c < 1 || c > k)
            throw ColorRangeError("color " + token + " at cell " + std::to_string(cells.size()) +
                                  " outside [1, " + std::to_string(k) + "]");
        if (cells.size() == expected)
            throw SizeMismatchError("family file has more than the " + std::to_string(expected) +
                                    " cells its header announces");
        cells.push_back(static_cast<Color>(c));
    }
    if (cells.size() != expected)
        throw SizeMismatchError("family file has " + std::to_string(cells.size()) + " cells, header needs " +
                                std::to_string(expected));
    return ColoringFamily::dense(n, static_cast<Color>(k), std::move(cells));
}

void save_family(const std::filesystem::path& path, const ColoringFamily& family) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_family(out, family);
    if (!out) throw Error("write failed for " + path.string());
}

ColoringFamily load_family(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_family(in);
}

void write_pattern(std::ostream& out, const PatternGraph& pattern) {
    // Isolated vertices with the highest labels go into the trailer.
    std::size_t trailing = 0;
    while (trailing < pattern.num_vertices() &&
           pattern.degree(static_cast<Vertex>(pattern.num_vertices() - 1 - trailing)) == 0)
        ++trailing;
    out << pattern.num_vertices() - trailing << '\n';
    for (const auto& e : pattern.edges()) out << e.a << ' ' << e.b << '\n';
    if (trailing > 0) out << "isolated " << trailing << '\n';
}

PatternGraph read_pattern(std::istream& in) {
    std::string token;
    if (!(in >> token)) throw FormatError("pattern file is empty");
    auto vertices = parse_unsigned(token, "vertex count");
    std::vector<Edge> edges;
    while (in >> token) {
        if (token == "isolated") {
            if (!(in >> token)) throw FormatError("isolated trailer lacks a count");
            vertices += parse_unsigned(token, "isolated count");
            if (in >> token) throw FormatError("text after the isolated trailer");
            break;
        }
        const auto a = parse_unsigned(token, "edge endpoint");
        if (!(in >> token)) throw FormatError("edge line lacks a second endpoint");
        const auto b = parse_unsigned(token, "edge endpoint");
        if (a >= vertices || b >= vertices || a == b)
            throw FormatError("invalid edge " + std::to_string(a) + " " + std::to_string(b));
        edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    }
    try {
        return PatternGraph(vertices, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

PatternGraph load_pattern(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_pattern(in);
}

namespace {

json edge_json(const Edge& e) { return json::array({e.a, e.b}); }

Edge edge_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("edge must be a two-element array");
    return make_edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

}  // namespace

std::string certificate_to_json(const AnchoredViolation& violation, std::string_view extra_fields) {
    const auto& cert = violation.certificate;
    const auto& pattern = cert.embedding.pattern;
    json record = json::object();
    record["type"] = "certificate";
    json edges = json::array();
    for (const auto& e : pattern.edges()) edges.push_back(edge_json(e));
    record["pattern"] = {{"name", pattern.name()}, {"vertices", pattern.num_vertices()}, {"edges", edges}};
    record["embedding"] = cert.embedding.image;
    json collisions = json::array();
    for (const auto& c : cert.collisions) collisions.push_back(json::array({edge_json(c.first), edge_json(c.second)}));
    record["collisions"] = collisions;
    if (const auto* common = std::get_if<CommonAnchor>(&violation.anchor)) {
        record["anchor"] = {{"kind", "common"}, {"edges", json::array({edge_json(common->first), edge_json(common->second)})}};
    } else if (const auto* hub = std::get_if<HubAnchor>(&violation.anchor)) {
        record["anchor"] = {{"kind", "hub"}, {"hubs", json::array({hub->hub_first, hub->hub_second})}};
    } else {
        record["anchor"] = nullptr;
    }
    record["slack"] = violation.slack;
    const auto extra = json::parse(extra_fields);
    if (!extra.is_object()) throw std::invalid_argument("extra certificate fields must be a JSON object");
    for (const auto& [key, value] : extra.items()) record[key] = value;
    return record.dump();
}

AnchoredViolation certificate_from_json(std::string_view line) {
    try {
        const auto record = json::parse(line);
        const auto& pj = record.at("pattern");
        std::vector<Edge> edges;
        for (const auto& e : pj.at("edges")) edges.push_back(edge_from(e));
        PatternGraph pattern(pj.at("vertices").get<std::size_t>(), std::move(edges),
                             pj.value("name", std::string{}));
        AnchoredViolation out;
        out.certificate.embedding = Embedding{std::move(pattern), record.at("embedding").get<std::vector<Vertex>>()};
        for (const auto& c : record.at("collisions")) {
            if (!c.is_array() || c.size() != 2) throw FormatError("collision must list two edges");
            out.certificate.collisions.push_back({edge_from(c[0]), edge_from(c[1])});
        }
        const auto& anchor = record.at("anchor");
        if (!anchor.is_null()) {
            const auto kind = anchor.at("kind").get<std::string>();
            if (kind == "common") {
                out.anchor = CommonAnchor{edge_from(anchor.at("edges")[0]), edge_from(anchor.at("edges")[1])};
            } else if (kind == "hub") {
                out.anchor = HubAnchor{anchor.at("hubs")[0].get<Vertex>(), anchor.at("hubs")[1].get<Vertex>()};
            } else {
                throw FormatError("unknown anchor kind '" + kind + "'");
            }
        }
        out.slack = record.value("slack", std::vector<Vertex>{});
        return out;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    }
}

AnchoredViolation load_certificate(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) return certificate_from_json(line);
    throw FormatError("certificate file " + path.string() + " is empty");
}

}  // namespace rainbow
