// SPDX-License-Identifier: Apache-2.0

#include "lichor/format.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "json.hpp"

#include "lichor/errors.hpp"

namespace lichor {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::size_t line_at(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key", for diagnostics on semantic errors.
std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    return pos == std::string_view::npos ? 1 : line_at(text, pos);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& err) {
        throw ParseError(line_at(text, err.byte == 0 ? 0 : err.byte - 1), "", err.what());
    }
}

class Fields {
public:
    Fields(std::string_view text, const json& doc, std::initializer_list<const char*> required,
           std::initializer_list<const char*> optional = {})
        : text_(text) {
        if (!doc.is_object()) throw ParseError(1, "", "document must be a JSON object");
        std::set<std::string> known;
        for (const char* k : required) {
            known.insert(k);
            if (!doc.contains(k)) throw ParseError(1, k, "missing required field");
        }
        for (const char* k : optional) known.insert(k);
        for (const auto& [k, v] : doc.items())
            if (!known.count(k)) throw ParseError(line_of_key(text, k), k, "unknown field");
    }

    [[noreturn]] void fail(std::string_view key, const std::string& path,
                           const std::string& what) const {
        throw ParseError(line_of_key(text_, key), path, what);
    }

    std::uint64_t unsigned_at(const json& v, std::string_view key, const std::string& path) const {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            fail(key, path, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    const json& array_at(const json& v, std::string_view key, const std::string& path) const {
        if (!v.is_array()) fail(key, path, "expected an array");
        return v;
    }

private:
    std::string_view text_;
};

} // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    const Fields f(text, doc, {"vertices", "edges", "lists"});

    const std::uint64_t n = f.unsigned_at(doc["vertices"], "vertices", "vertices");
    if (n > std::numeric_limits<VertexId>::max()) f.fail("vertices", "vertices", "too many vertices");
    const json& edges = f.array_at(doc["edges"], "edges", "edges");
    const json& lists = f.array_at(doc["lists"], "lists", "lists");
    if (lists.size() != edges.size())
        f.fail("lists", "lists", "has " + std::to_string(lists.size()) + " entries for " +
                                     std::to_string(edges.size()) + " edges");

    std::vector<Endpoints> ends;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        const json& pair = f.array_at(edges[i], "edges", path);
        if (pair.size() != 2) f.fail("edges", path, "expected two endpoints");
        VertexId uv[2];
        for (std::size_t k = 0; k < 2; ++k) {
            const std::string at = path + "[" + std::to_string(k) + "]";
            const std::uint64_t x = f.unsigned_at(pair[k], "edges", at);
            if (x >= n) f.fail("edges", at, "vertex " + std::to_string(x) + " >= vertices " +
                                                std::to_string(n));
            uv[k] = static_cast<VertexId>(x);
        }
        if (uv[0] == uv[1]) f.fail("edges", path, "loops are not allowed");
        ends.push_back({uv[0], uv[1]});
    }

    std::vector<std::vector<Color>> colors(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        const std::string path = "lists[" + std::to_string(i) + "]";
        for (std::size_t k = 0; k < f.array_at(lists[i], "lists", path).size(); ++k)
            colors[i].push_back(
                f.unsigned_at(lists[i][k], "lists", path + "[" + std::to_string(k) + "]"));
    }
    return {Multigraph(static_cast<std::size_t>(n), std::move(ends)), ColorLists(std::move(colors))};
}

std::string emit_instance(const Instance& inst) {
    ordered_json doc;
    doc["vertices"] = inst.graph.vertex_count();
    doc["edges"] = ordered_json::array();
    for (const auto& [u, v] : inst.graph.edges()) doc["edges"].push_back({u, v});
    doc["lists"] = ordered_json::array();
    for (std::size_t e = 0; e < inst.lists.size(); ++e)
        doc["lists"].push_back(inst.lists[static_cast<EdgeId>(e)]);
    return doc.dump() + "\n";
}

std::string emit_report(const SolveReport& report) {
    ordered_json doc;
    doc["colors"] = ordered_json::array();
    for (std::size_t e = 0; e < report.coloring.size(); ++e) {
        const auto c = report.coloring[static_cast<EdgeId>(e)];
        doc["colors"].push_back(c ? ordered_json(*c) : ordered_json(nullptr));
    }
    doc["trace"] = ordered_json::array();
    for (const auto& t : report.trace) {
        ordered_json item;
        item["block"] = t.block;
        item["class"] = t.kind;
        item["entry"] = t.entry ? ordered_json(*t.entry) : ordered_json(nullptr);
        item["forbidden"] = t.forbidden;
        item["depth"] = t.depth;
        doc["trace"].push_back(std::move(item));
    }
    doc["conforming"] = report.conforming;
    doc["diagnostics"] = report.diagnostics;
    return doc.dump() + "\n";
}

SolveReport parse_report(std::string_view text) {
    const json doc = parse_json(text);
    const Fields f(text, doc, {"colors"}, {"trace", "conforming", "diagnostics"});

    SolveReport report;
    const json& colors = f.array_at(doc["colors"], "colors", "colors");
    report.coloring = EdgeColoring(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i].is_null()) continue;
        report.coloring.assign(static_cast<EdgeId>(i),
                               f.unsigned_at(colors[i], "colors", "colors[" + std::to_string(i) + "]"));
    }
    if (doc.contains("trace")) {
        const json& trace = f.array_at(doc["trace"], "trace", "trace");
        for (std::size_t i = 0; i < trace.size(); ++i) {
            const std::string path = "trace[" + std::to_string(i) + "]";
            const json& item = trace[i];
            if (!item.is_object()) f.fail("trace", path, "expected an object");
            for (const char* k : {"block", "class", "entry", "forbidden", "depth"})
                if (!item.contains(k)) f.fail("trace", path + "." + k, "missing field");
            if (!item["class"].is_string()) f.fail("trace", path + ".class", "expected a string");
            BlockTrace t;
            t.block = f.unsigned_at(item["block"], "trace", path + ".block");
            t.kind = item["class"].get<std::string>();
            if (!item["entry"].is_null())
                t.entry = static_cast<VertexId>(f.unsigned_at(item["entry"], "trace", path + ".entry"));
            t.forbidden = f.unsigned_at(item["forbidden"], "trace", path + ".forbidden");
            t.depth = f.unsigned_at(item["depth"], "trace", path + ".depth");
            report.trace.push_back(std::move(t));
        }
    }
    if (doc.contains("conforming")) {
        if (!doc["conforming"].is_boolean())
            f.fail("conforming", "conforming", "expected a boolean");
        report.conforming = doc["conforming"].get<bool>();
    }
    if (doc.contains("diagnostics")) {
        const json& diags = f.array_at(doc["diagnostics"], "diagnostics", "diagnostics");
        for (std::size_t i = 0; i < diags.size(); ++i) {
            if (!diags[i].is_string())
                f.fail("diagnostics", "diagnostics[" + std::to_string(i) + "]", "expected a string");
            report.diagnostics.push_back(diags[i].get<std::string>());
        }
    }
    return report;
}

} // namespace lichor
