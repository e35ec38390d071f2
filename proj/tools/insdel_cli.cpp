// Command-line front end; talks to the library exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "insdel/insdel_c.h"

namespace {

struct CommonOpts {
    uint64_t pairs_budget = 0;  // 0 = library default
    uint64_t enum_budget = 0;
    std::string json_path;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--pairs-budget", o.pairs_budget, "Maximum codeword pairs to sweep");
    cmd->add_option("--enum-budget", o.enum_budget, "Maximum codewords/subspaces to enumerate");
    cmd->add_option("--json", o.json_path, "Write the JSON report to this path");
    cmd->add_flag("--quiet", o.quiet, "Suppress the human-readable summary");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(insdel_status status, char* report, const CommonOpts& o) {
    if (!report) {
        std::cerr << "error: " << insdel_status_name(status) << "\n";
        return status;
    }
    if (!o.json_path.empty()) {
        std::ofstream out(o.json_path);
        out << report << "\n";
    } else {
        std::cout << report << "\n";
    }
    if (!o.quiet) {
        char* summary = insdel_report_summary(report);
        if (summary) {
            std::cerr << "[" << insdel_status_name(status) << "] " << summary << "\n";
            insdel_string_free(summary);
        }
    }
    insdel_string_free(report);
    return status;
}

int with_code(const std::string& path, const CommonOpts& o,
              insdel_status (*run)(const insdel_code*, const CommonOpts&, char**)) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return INSDEL_ERR_INPUT;
    }
    insdel_code* code = nullptr;
    char* err = nullptr;
    insdel_status st = insdel_code_load_json(text.c_str(), &code, &err);
    if (st != INSDEL_OK) {
        std::cerr << "error: " << (err ? err : "load failed") << "\n";
        insdel_string_free(err);
        return st;
    }
    char* report = nullptr;
    st = run(code, o, &report);
    insdel_code_free(code);
    return emit(st, report, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact insdel-distance analysis for linear codes over finite fields"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string code_path, family, a_tokens, bound = "strict", ones = "none", example_id;
    uint32_t p = 2, e = 1;
    size_t n = 0, k = 0;

    auto* c_bounds = app.add_subcommand("bounds", "Evaluate every applicable upper bound");
    c_bounds->add_option("code", code_path, "Code file (JSON)")->required();
    add_common(c_bounds, o);

    auto* c_dist = app.add_subcommand("distance", "Brute-force insdel distance with witness");
    c_dist->add_option("code", code_path, "Code file (JSON)")->required();
    add_common(c_dist, o);

    auto* c_cert = app.add_subcommand("certify", "Determinant certificate of optimality");
    c_cert->add_option("code", code_path, "Code file (JSON)")->required();
    add_common(c_cert, o);

    auto* c_sd = app.add_subcommand("strict-direct", "Gap-pair witness for the strict direct bound");
    c_sd->add_option("code", code_path, "Code file (JSON)")->required();
    add_common(c_sd, o);

    auto* c_con = app.add_subcommand("construct", "Build a code from a named family");
    c_con->add_option("family", family, "palindrome | odd | rs-example")->required();
    c_con->add_option("-p", p, "Field characteristic")->required();
    c_con->add_option("-e", e, "Extension degree");
    c_con->add_option("-k", k, "Dimension (length for rs-example)")->required();
    c_con->add_option("-a", a_tokens, "Space-separated parameter tokens for the odd family");
    add_common(c_con, o);

    auto* c_search = app.add_subcommand("search", "Exhaustive binary optimal-code search");
    c_search->add_option("-n", n, "Length")->required();
    c_search->add_option("-k", k, "Dimension")->required();
    c_search->add_option("--bound", bound, "strict | half");
    c_search->add_option("--ones", ones, "none | require-in | require-out");
    add_common(c_search, o);

    auto* c_ver = app.add_subcommand("verify-example", "Re-verify a registered reference code");
    c_ver->add_option("id", example_id,
                      "ex1-gf49 | ex2-gf121 | ex3-gf169 | ex-11-4-binary | ex-nonlinear")
        ->required();
    add_common(c_ver, o);

    CLI11_PARSE(app, argc, argv);

    if (c_bounds->parsed())
        return with_code(code_path, o, [](const insdel_code* c, const CommonOpts& o, char** r) {
            return insdel_run_bounds(c, o.enum_budget, r);
        });
    if (c_dist->parsed())
        return with_code(code_path, o, [](const insdel_code* c, const CommonOpts& o, char** r) {
            return insdel_run_distance(c, o.pairs_budget, o.enum_budget, r);
        });
    if (c_cert->parsed())
        return with_code(code_path, o, [](const insdel_code* c, const CommonOpts&, char** r) {
            return insdel_run_certify(c, r);
        });
    if (c_sd->parsed())
        return with_code(code_path, o, [](const insdel_code* c, const CommonOpts& o, char** r) {
            return insdel_run_strict_direct(c, o.enum_budget, r);
        });
    if (c_con->parsed()) {
        char* report = nullptr;
        insdel_status st = insdel_run_construct(family.c_str(), p, e, k,
                                                a_tokens.empty() ? nullptr : a_tokens.c_str(),
                                                &report);
        return emit(st, report, o);
    }
    if (c_search->parsed()) {
        char* report = nullptr;
        insdel_status st = insdel_run_search(n, k, bound.c_str(), ones.c_str(), o.enum_budget,
                                             o.pairs_budget, &report);
        return emit(st, report, o);
    }
    if (c_ver->parsed()) {
        char* report = nullptr;
        insdel_status st = insdel_run_verify_example(example_id.c_str(), o.pairs_budget,
                                                     o.enum_budget, &report);
        return emit(st, report, o);
    }
    return 2;
}
