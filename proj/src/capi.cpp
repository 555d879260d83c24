// SPDX-License-Identifier: Apache-2.0

#include "lichor/lichor.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "json.hpp"

#include "lichor/errors.hpp"
#include "lichor/format.hpp"
#include "lichor/generate.hpp"
#include "lichor/invariants.hpp"
#include "lichor/solve.hpp"
#include "lichor/structure.hpp"
#include "lichor/verify.hpp"

struct lichor_instance {
    lichor::Instance inst;
};

struct lichor_report {
    lichor::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

lichor_status fail(lichor_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
lichor_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const lichor::ParseError& e) {
        return fail(LICHOR_ERR_PARSE, e.what());
    } catch (const lichor::NotLinePerfect& e) {
        return fail(LICHOR_ERR_NOT_LINE_PERFECT, e.what());
    } catch (const lichor::ListTooSmall& e) {
        return fail(LICHOR_ERR_LIST_TOO_SMALL, e.what());
    } catch (const lichor::InvariantError& e) {
        return fail(LICHOR_ERR_INVARIANT, e.what());
    } catch (const lichor::SizeCapExceeded& e) {
        return fail(LICHOR_ERR_SIZE_CAP, e.what());
    } catch (const lichor::InputError& e) {
        return fail(LICHOR_ERR_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(LICHOR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LICHOR_ERR_INTERNAL, "unknown error");
    }
}

#define LICHOR_REQUIRE(ptr)                                              \
    do {                                                                 \
        if (!(ptr)) return fail(LICHOR_ERR_INPUT, #ptr " is null");      \
    } while (0)

} // namespace

extern "C" {

void lichor_gen_params_default(lichor_gen_params* params) {
    if (!params) return;
    *params = lichor_gen_params{};
    params->blocks = 1;
    params->max_multiplicity = 1;
    params->max_centers = 3;
    params->weight_bipartite = 1;
    params->weight_four_vertex = 1;
    params->weight_k11n = 1;
}

const char* lichor_last_error(void) { return g_last_error.c_str(); }

const char* lichor_status_name(lichor_status status) {
    switch (status) {
    case LICHOR_OK: return "ok";
    case LICHOR_ERR_INPUT: return "input";
    case LICHOR_ERR_PARSE: return "parse";
    case LICHOR_ERR_NOT_LINE_PERFECT: return "not_line_perfect";
    case LICHOR_ERR_LIST_TOO_SMALL: return "list_too_small";
    case LICHOR_ERR_INVARIANT: return "invariant";
    case LICHOR_ERR_SIZE_CAP: return "size_cap";
    case LICHOR_ERR_VERIFY: return "verify";
    case LICHOR_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void lichor_string_free(char* text) { std::free(text); }

lichor_status lichor_instance_parse(const char* text, size_t length, lichor_instance** out) {
    LICHOR_REQUIRE(text);
    LICHOR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new lichor_instance{lichor::parse_instance(std::string_view(text, length))};
        return LICHOR_OK;
    });
}

void lichor_instance_free(lichor_instance* instance) { delete instance; }

lichor_status lichor_instance_emit(const lichor_instance* instance, char** out) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(out);
    return guarded([&] {
        *out = dup(lichor::emit_instance(instance->inst));
        return LICHOR_OK;
    });
}

size_t lichor_instance_edge_count(const lichor_instance* instance) {
    return instance ? instance->inst.graph.edge_count() : 0;
}

lichor_status lichor_generate(const lichor_gen_params* params, lichor_instance** out) {
    LICHOR_REQUIRE(params);
    LICHOR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        lichor::GenParams p;
        p.seed = params->seed;
        p.block_count = params->blocks;
        p.max_multiplicity = params->max_multiplicity;
        p.max_centers = params->max_centers;
        p.max_edges = params->max_edges;
        p.weights = {params->weight_bipartite, params->weight_four_vertex, params->weight_k11n};
        auto g = lichor::gen_line_perfect(p);
        const std::size_t chi = lichor::chromatic_index(g);
        // Separate stream so lists do not perturb the graph for a given seed.
        lichor::Rng rng(params->seed ^ 0x9e3779b97f4a7c15ULL);
        auto lists = params->identical_lists ? lichor::identical_lists(g, chi)
                                             : lichor::random_lists(g, chi, 2 * chi, rng);
        *out = new lichor_instance{{std::move(g), std::move(lists)}};
        return LICHOR_OK;
    });
}

lichor_status lichor_chromatic_index(const lichor_instance* instance, size_t* out) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(out);
    return guarded([&] {
        *out = lichor::chromatic_index(instance->inst.graph);
        return LICHOR_OK;
    });
}

lichor_status lichor_classify(const lichor_instance* instance, char** out) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(out);
    return guarded([&] {
        using json = nlohmann::ordered_json;
        const auto& g = instance->inst.graph;
        const auto dec = lichor::decompose_blocks(g);
        json doc;
        doc["chromatic_index"] = lichor::chromatic_index(g);
        doc["blocks"] = json::array();
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            const auto cls = lichor::classify_block(g, dec.blocks[i]);
            json b;
            b["block"] = i;
            b["class"] = lichor::block_kind_name(cls);
            b["edges"] = dec.blocks[i].ids();
            b["vertices"] = lichor::vertices_of(g, dec.blocks[i]);
            b["clique_bound"] = lichor::clique_bound(g, dec.blocks[i]);
            if (const auto* k = std::get_if<lichor::K11nBlock>(&cls)) {
                b["apexes"] = {k->apex_a, k->apex_b};
                b["centers"] = k->centers;
            }
            doc["blocks"].push_back(std::move(b));
        }
        doc["cut_vertices"] = dec.cut_vertices;
        *out = dup(doc.dump() + "\n");
        return LICHOR_OK;
    });
}

lichor_status lichor_solve(const lichor_instance* instance, size_t root_block,
                           lichor_report** out) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        lichor::SolveOptions opts;
        opts.root = root_block;
        *out = new lichor_report{lichor::solve(instance->inst, opts)};
        return LICHOR_OK;
    });
}

void lichor_report_free(lichor_report* report) { delete report; }

lichor_status lichor_report_parse(const char* text, size_t length, lichor_report** out) {
    LICHOR_REQUIRE(text);
    LICHOR_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new lichor_report{lichor::parse_report(std::string_view(text, length))};
        return LICHOR_OK;
    });
}

lichor_status lichor_report_emit(const lichor_report* report, char** out) {
    LICHOR_REQUIRE(report);
    LICHOR_REQUIRE(out);
    return guarded([&] {
        *out = dup(lichor::emit_report(report->report));
        return LICHOR_OK;
    });
}

int lichor_report_conforming(const lichor_report* report) {
    return report && report->report.conforming ? 1 : 0;
}

lichor_status lichor_report_color(const lichor_report* report, size_t edge, uint64_t* out) {
    LICHOR_REQUIRE(report);
    LICHOR_REQUIRE(out);
    const auto& c = report->report.coloring;
    if (edge >= c.size()) return fail(LICHOR_ERR_INPUT, "edge out of range");
    if (!c.assigned(static_cast<lichor::EdgeId>(edge)))
        return fail(LICHOR_ERR_INPUT, "edge " + std::to_string(edge) + " is uncolored");
    *out = *c[static_cast<lichor::EdgeId>(edge)];
    return LICHOR_OK;
}

lichor_status lichor_verify(const lichor_instance* instance, const lichor_report* report) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(report);
    return guarded([&] {
        const auto& g = instance->inst.graph;
        const auto& c = report->report.coloring;
        if (c.size() != g.edge_count())
            return fail(LICHOR_ERR_VERIFY, "report colors " + std::to_string(c.size()) +
                                               " edges, instance has " +
                                               std::to_string(g.edge_count()));
        const auto r = lichor::verify_coloring(g, g.all_edges(), instance->inst.lists, c);
        return r.ok ? LICHOR_OK : fail(LICHOR_ERR_VERIFY, r.message);
    });
}

lichor_status lichor_oracle(const lichor_instance* instance, char** out) {
    LICHOR_REQUIRE(instance);
    LICHOR_REQUIRE(out);
    return guarded([&] {
        using json = nlohmann::ordered_json;
        const auto& g = instance->inst.graph;
        const auto found = lichor::brute_force_list_color(g, g.all_edges(), instance->inst.lists);
        json doc;
        doc["feasible"] = found.has_value();
        if (found) {
            doc["colors"] = json::array();
            for (lichor::EdgeId e = 0; e < g.edge_count(); ++e) doc["colors"].push_back(*(*found)[e]);
        } else {
            doc["colors"] = nullptr;
        }
        doc["chi"] = lichor::brute_force_chi(g);
        *out = dup(doc.dump() + "\n");
        return LICHOR_OK;
    });
}

} // extern "C"
