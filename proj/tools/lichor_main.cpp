// SPDX-License-Identifier: Apache-2.0

// lichor command-line front end. Talks to the library only through lichor.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lichor/lichor.h"

namespace {

enum Exit : int {
    kOk = 0,
    kError = 1,
    kNotLinePerfect = 2,
    kInvariant = 3,
};

int exit_for(lichor_status s) {
    switch (s) {
    case LICHOR_OK: return kOk;
    case LICHOR_ERR_NOT_LINE_PERFECT: return kNotLinePerfect;
    case LICHOR_ERR_INVARIANT: return kInvariant;
    default: return kError;
    }
}

int report_error(lichor_status s, const std::string& context) {
    std::cerr << "lichor: " << context << ": " << lichor_status_name(s) << ": "
              << lichor_last_error() << "\n";
    return exit_for(s);
}

std::optional<std::string> slurp(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "lichor: cannot read " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct InstanceDeleter {
    void operator()(lichor_instance* p) const { lichor_instance_free(p); }
};
struct ReportDeleter {
    void operator()(lichor_report* p) const { lichor_report_free(p); }
};
using InstancePtr = std::unique_ptr<lichor_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<lichor_report, ReportDeleter>;

// Prints and frees a library-owned string.
void emit(char* text) {
    std::fputs(text, stdout);
    lichor_string_free(text);
}

int load(const std::string& path, InstancePtr& out) {
    const auto text = slurp(path);
    if (!text) return kError;
    lichor_instance* raw = nullptr;
    const auto s = lichor_instance_parse(text->data(), text->size(), &raw);
    if (s != LICHOR_OK) return report_error(s, path);
    out.reset(raw);
    return kOk;
}

int cmd_solve(const std::string& path, std::size_t root) {
    InstancePtr inst;
    if (int rc = load(path, inst)) return rc;
    lichor_report* raw = nullptr;
    auto s = lichor_solve(inst.get(), root, &raw);
    if (s != LICHOR_OK) return report_error(s, path);
    ReportPtr report(raw);
    char* text = nullptr;
    s = lichor_report_emit(report.get(), &text);
    if (s != LICHOR_OK) return report_error(s, path);
    emit(text);
    if (!lichor_report_conforming(report.get())) {
        std::cerr << "lichor: " << path << ": an induction step failed; coloring completed by "
                                           "exhaustive search\n";
        return kInvariant;
    }
    return kOk;
}

int cmd_chi(const std::string& path) {
    InstancePtr inst;
    if (int rc = load(path, inst)) return rc;
    std::size_t chi = 0;
    const auto s = lichor_chromatic_index(inst.get(), &chi);
    if (s != LICHOR_OK) return report_error(s, path);
    std::cout << chi << "\n";
    return kOk;
}

int cmd_classify(const std::string& path) {
    InstancePtr inst;
    if (int rc = load(path, inst)) return rc;
    char* text = nullptr;
    const auto s = lichor_classify(inst.get(), &text);
    if (s != LICHOR_OK) return report_error(s, path);
    emit(text);
    return kOk;
}

int cmd_oracle(const std::string& path) {
    InstancePtr inst;
    if (int rc = load(path, inst)) return rc;
    char* text = nullptr;
    const auto s = lichor_oracle(inst.get(), &text);
    if (s != LICHOR_OK) return report_error(s, path);
    emit(text);
    return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& report_path) {
    InstancePtr inst;
    if (int rc = load(inst_path, inst)) return rc;
    const auto text = slurp(report_path);
    if (!text) return kError;
    lichor_report* raw = nullptr;
    auto s = lichor_report_parse(text->data(), text->size(), &raw);
    if (s != LICHOR_OK) return report_error(s, report_path);
    ReportPtr report(raw);
    s = lichor_verify(inst.get(), report.get());
    if (s != LICHOR_OK) return report_error(s, report_path);
    std::cout << "ok\n";
    return kOk;
}

int cmd_gen(lichor_gen_params params) {
    if (const char* env = std::getenv("LICHOR_SEED"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0') {
            std::cerr << "lichor: LICHOR_SEED is not an unsigned integer: " << env << "\n";
            return kError;
        }
        params.seed = v;
    }
    lichor_instance* raw = nullptr;
    auto s = lichor_generate(&params, &raw);
    if (s != LICHOR_OK) return report_error(s, "gen");
    InstancePtr inst(raw);
    char* text = nullptr;
    s = lichor_instance_emit(inst.get(), &text);
    if (s != LICHOR_OK) return report_error(s, "gen");
    emit(text);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"List edge coloring of line perfect multigraphs"};
    app.require_subcommand(1);

    std::string file, report_file;
    std::size_t root = 0;

    auto* solve = app.add_subcommand("solve", "Color every edge from its list");
    solve->add_option("file", file, "Instance document ('-' for stdin)")->required();
    solve->add_option("--root", root, "Block to start the traversal from");

    auto* chi = app.add_subcommand("chi", "Print the chromatic index");
    chi->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "Print blocks and their classes");
    classify->add_option("file", file)->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive list coloring (small graphs)");
    oracle->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify", "Check a report against an instance");
    verify->add_option("instance", file)->required();
    verify->add_option("report", report_file)->required();

    lichor_gen_params params;
    lichor_gen_params_default(&params);
    std::string lists_mode = "random";
    auto* gen = app.add_subcommand("gen", "Generate a random line perfect instance");
    gen->add_option("--seed", params.seed, "RNG seed (LICHOR_SEED overrides)");
    gen->add_option("--blocks", params.blocks, "Number of blocks")->check(CLI::PositiveNumber);
    gen->add_option("--max-mult", params.max_multiplicity, "Maximum edge multiplicity")
        ->check(CLI::PositiveNumber);
    gen->add_option("--max-centers", params.max_centers, "Maximum centers in a K_{1,1,n} block")
        ->check(CLI::PositiveNumber);
    gen->add_option("--max-edges", params.max_edges, "Edge bound, 0 for none");
    gen->add_option("--lists", lists_mode, "List assignment")
        ->check(CLI::IsMember({"random", "identical"}));

    CLI11_PARSE(app, argc, argv);

    if (*solve) return cmd_solve(file, root);
    if (*chi) return cmd_chi(file);
    if (*classify) return cmd_classify(file);
    if (*oracle) return cmd_oracle(file);
    if (*verify) return cmd_verify(file, report_file);
    if (*gen) {
        params.identical_lists = lists_mode == "identical";
        return cmd_gen(params);
    }
    return kError;
}
