#include "intercol/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace intercol {

namespace {

using nlohmann::json;  // object keys are kept sorted by the default map

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

int get_int(const json& j, const std::string& ctx, const std::string& key) {
    if (!j.contains(key)) fail(ctx + ": missing field '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(ctx + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("document: ") + e.what());
    }
}

void check_header(const json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ctx + ": top level must be an object");
    int version = get_int(j, ctx, "format_version");
    if (version != document_format_version)
        fail(ctx + ": unsupported format_version " + std::to_string(version));
}

DocumentMetadata parse_metadata(const json& j, const std::string& ctx) {
    DocumentMetadata md;
    if (!j.contains("metadata")) return md;
    const json& m = j.at("metadata");
    if (!m.is_object()) fail(ctx + ": field 'metadata' must be an object");
    for (const char* key : {"method", "shift_vector"}) {
        if (!m.contains(key)) continue;
        if (!m.at(key).is_string())
            fail(ctx + ": field 'metadata." + key + "' must be a string");
        (key[0] == 'm' ? md.method : md.shift_vector) = m.at(key).get<std::string>();
    }
    return md;
}

ColoringDocument coloring_from_json(const json& j) {
    const std::string ctx = "coloring document";
    check_header(j, ctx);
    int n = get_int(j, ctx, "n");
    if (n < 1) fail(ctx + ": n must be >= 1");
    int t = get_int(j, ctx, "t");

    if (!j.contains("edges") || !j.at("edges").is_array())
        fail(ctx + ": field 'edges' must be an array");
    const json& edges = j.at("edges");

    int nv = vertex_count(n);
    std::vector<int> colors(edge_count(n), 0);
    std::vector<char> seen(edge_count(n), 0);
    for (size_t i = 0; i < edges.size(); ++i) {
        std::string ectx = ctx + ": edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_object()) fail(ectx + " must be an object");
        int a = get_int(e, ectx, "a");
        int b = get_int(e, ectx, "b");
        int color = get_int(e, ectx, "color");
        if (a < 0 || a >= nv || b < 0 || b >= nv || a == b)
            fail(ectx + ": endpoints must be distinct vertices in [0, " +
                 std::to_string(nv) + ")");
        int idx = edge_index(std::min(a, b), std::max(a, b), n);
        if (seen[idx]) fail(ectx + ": duplicate edge");
        seen[idx] = 1;
        colors[idx] = color;
    }
    for (size_t idx = 0; idx < seen.size(); ++idx)
        if (!seen[idx]) {
            auto [a, b] = edge_endpoints(static_cast<int>(idx), n);
            fail(ctx + ": missing edge {" + std::to_string(a) + ", " + std::to_string(b) +
                 "}");
        }

    try {
        return {EdgeColoring(n, t, std::move(colors)), parse_metadata(j, ctx)};
    } catch (const std::invalid_argument& e) {
        fail(ctx + ": " + e.what());
    }
}

FactorizationDocument factorization_from_json(const json& j) {
    const std::string ctx = "factorization document";
    check_header(j, ctx);
    int n = get_int(j, ctx, "n");
    if (n < 1) fail(ctx + ": n must be >= 1");

    if (!j.contains("matchings") || !j.at("matchings").is_array())
        fail(ctx + ": field 'matchings' must be an array");
    const json& ms = j.at("matchings");

    int nv = vertex_count(n);
    std::vector<PerfectMatching> matchings;
    std::vector<int> labels;
    for (size_t i = 0; i < ms.size(); ++i) {
        std::string mctx = ctx + ": matchings[" + std::to_string(i) + "]";
        const json& m = ms[i];
        if (!m.is_object()) fail(mctx + " must be an object");
        labels.push_back(get_int(m, mctx, "label"));
        if (!m.contains("edges") || !m.at("edges").is_array())
            fail(mctx + ": field 'edges' must be an array");
        EdgeList pairs;
        for (size_t k = 0; k < m.at("edges").size(); ++k) {
            const json& e = m.at("edges")[k];
            std::string ectx = mctx + ": edges[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail(ectx + " must be a pair of integers");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || a >= nv || b < 0 || b >= nv || a == b)
                fail(ectx + ": endpoints must be distinct vertices in [0, " +
                     std::to_string(nv) + ")");
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        try {
            matchings.push_back(PerfectMatching::from_edges(n, pairs));
        } catch (const std::invalid_argument& e) {
            fail(mctx + ": " + e.what());
        }
    }

    try {
        return {LabeledFactorization(PairedOrdering::identity(n), std::move(matchings),
                                     std::move(labels))};
    } catch (const std::invalid_argument& e) {
        fail(ctx + ": " + e.what());
    }
}

}  // namespace

std::string serialize(const ColoringDocument& doc) {
    const EdgeColoring& c = doc.coloring;
    json j;
    j["format_version"] = document_format_version;
    j["n"] = c.n();
    j["t"] = c.t();
    json edges = json::array();
    for (int idx = 0; idx < edge_count(c.n()); ++idx) {
        auto [a, b] = edge_endpoints(idx, c.n());
        edges.push_back({{"a", a}, {"b", b}, {"color", c.color_by_index(idx)}});
    }
    j["edges"] = std::move(edges);
    if (!doc.metadata.empty()) {
        json md = json::object();
        if (!doc.metadata.method.empty()) md["method"] = doc.metadata.method;
        if (!doc.metadata.shift_vector.empty())
            md["shift_vector"] = doc.metadata.shift_vector;
        j["metadata"] = std::move(md);
    }
    return j.dump(2) + "\n";
}

std::string serialize(const FactorizationDocument& doc) {
    LabeledFactorization f = doc.factorization.normalized();
    json j;
    j["format_version"] = document_format_version;
    j["n"] = f.n();
    json ms = json::array();
    for (int i = 0; i < f.size(); ++i) {
        json edges = json::array();
        for (auto [a, b] : f.matching(i).edges()) edges.push_back({a, b});
        ms.push_back({{"edges", std::move(edges)}, {"label", f.label(i)}});
    }
    j["matchings"] = std::move(ms);
    return j.dump(2) + "\n";
}

ColoringDocument parse_coloring_document(const std::string& text) {
    return coloring_from_json(parse_json(text));
}

FactorizationDocument parse_factorization_document(const std::string& text) {
    return factorization_from_json(parse_json(text));
}

Document parse_document(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("edges")) return coloring_from_json(j);
    if (j.is_object() && j.contains("matchings")) return factorization_from_json(j);
    fail("document: expected a top-level 'edges' or 'matchings' field");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) fail("cannot read file: " + path);
    return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out.good()) fail("cannot write file: " + path);
}

}  // namespace intercol
