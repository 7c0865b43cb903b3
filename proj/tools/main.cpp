// Command-line front end. Everything goes through the shared-library C API;
// output is deterministic for a fixed command line and seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "morsemoduli.h"

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    int p = 0, q = 0, r = 0;
    std::string labels = "all";
    int filter_s = -1;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    long long budget = 20'000'000;
    unsigned long long seed = 0;
    std::string plugin;
    long long samples = 100;
    int threads = 1;
};

int fail_with(mm_status st) {
    std::cerr << "error: " << mm_last_error() << "\n";
    if (st == MM_ERR_BUDGET_EXCEEDED)
        return 2;
    return 3;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    mm_string_free(s);
    return out;
}

// Labels flag: "all", "none", or a path to a JSON label spec.
ordered_json labels_json(const std::string& labels) {
    if (labels == "all" || labels == "none")
        return labels;
    std::ifstream in(labels);
    if (!in)
        throw CLI::ValidationError("--labels", "cannot open label spec file " + labels);
    ordered_json j;
    in >> j;
    return j;
}

std::string query_string(const Options& opt) {
    ordered_json q;
    q["minima"] = opt.p;
    q["saddles"] = opt.q;
    q["maxima"] = opt.r;
    q["labels"] = labels_json(opt.labels);
    if (opt.filter_s >= 0)
        q["filter_s"] = opt.filter_s;
    q["budget"] = opt.budget;
    q["threads"] = opt.threads;
    return q.dump();
}

int run_enumerate(const Options& opt) {
    if ((opt.p - opt.q + opt.r) % 2 != 0)
        std::cerr << "warning: odd Euler characteristic, no classes exist\n";
    mm_classset* set = nullptr;
    mm_status st = mm_enumerate_cached(query_string(opt).c_str(), opt.cache_dir.c_str(),
                                       opt.no_cache ? 0 : 1, &set);
    if (st != MM_OK)
        return fail_with(st);
    if (opt.format == "json") {
        char* json = nullptr;
        mm_classset_to_json(set, &json);
        std::cout << take(json);
    } else {
        long long n = 0;
        mm_classset_count(set, &n);
        char* hist = nullptr;
        mm_classset_histogram(set, &hist);
        std::cout << "classes: " << n << "\n";
        std::cout << "s-histogram: " << take(hist);
        for (long long i = 0; i < n; ++i) {
            char* id = nullptr;
            mm_classset_class_id(set, i, &id);
            std::cout << take(id) << "\n";
        }
    }
    mm_classset_free(set);
    return 0;
}

int run_poset(const Options& opt) {
    mm_classset* set = nullptr;
    mm_status st = mm_enumerate_cached(query_string(opt).c_str(), opt.cache_dir.c_str(),
                                       opt.no_cache ? 0 : 1, &set);
    if (st != MM_OK)
        return fail_with(st);
    mm_poset* poset = nullptr;
    st = mm_poset_build(set, &poset);
    mm_classset_free(set);
    if (st != MM_OK)
        return fail_with(st);
    const std::string fmt = opt.format == "text" ? "json" : opt.format;
    char* out = nullptr;
    st = mm_poset_export(poset, fmt.c_str(), &out);
    mm_poset_free(poset);
    if (st != MM_OK)
        return fail_with(st);
    std::cout << take(out);
    return 0;
}

int run_euler(const Options& opt) {
    mm_classset* set = nullptr;
    mm_status st = mm_enumerate_cached(query_string(opt).c_str(), opt.cache_dir.c_str(),
                                       opt.no_cache ? 0 : 1, &set);
    if (st != MM_OK)
        return fail_with(st);
    long long chi = 0;
    mm_classset_euler(set, &chi);
    char* hist = nullptr;
    mm_classset_histogram(set, &hist);
    char* full = nullptr;
    mm_classset_to_json(set, &full);
    ordered_json meta = ordered_json::parse(take(full));
    mm_classset_free(set);
    if (opt.format == "json") {
        ordered_json j;
        j["euler_characteristic"] = chi;
        j["s_histogram"] = ordered_json::parse(take(hist));
        j["main_condition"] = meta["main_condition"];
        j["identity_component_factor"] = meta["identity_component_factor"];
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (chi >= 0 ? "+" : "") << chi << "\n";
        std::cout << "s-histogram: " << take(hist);
        std::cout << "identity component factor: "
                  << meta["identity_component_factor"].get<std::string>() << "\n";
    }
    return 0;
}

int run_qpoly(const Options& opt) {
    mm_classset* set = nullptr;
    mm_status st = mm_enumerate_cached(query_string(opt).c_str(), opt.cache_dir.c_str(),
                                       opt.no_cache ? 0 : 1, &set);
    if (st != MM_OK)
        return fail_with(st);
    mm_poset* poset = nullptr;
    st = mm_poset_build(set, &poset);
    mm_classset_free(set);
    if (st != MM_OK)
        return fail_with(st);
    std::string plugin_text;
    if (!opt.plugin.empty()) {
        std::ifstream in(opt.plugin);
        if (!in) {
            std::cerr << "error: cannot open plugin file " << opt.plugin << "\n";
            mm_poset_free(poset);
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        plugin_text = buf.str();
    }
    char* report = nullptr;
    st = mm_poset_q_polynomial(poset, plugin_text.c_str(), &report);
    mm_poset_free(poset);
    if (st != MM_OK)
        return fail_with(st);
    if (opt.format == "json") {
        std::cout << take(report);
    } else {
        ordered_json j = ordered_json::parse(take(report));
        std::cout << "plugin: " << j["plugin"].get<std::string>() << "\n";
        std::cout << "Q(t) = " << j["q_text"].get<std::string>() << "\n";
        std::cout << "deg Q = " << j["degree"] << " (bound " << j["degree_bound"] << "): "
                  << (j["degree_ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
        if (j.contains("morse_smale"))
            std::cout << "inequalities: "
                      << (j["morse_smale"]["pass"].get<bool>() ? "pass" : "FAIL") << ", weak "
                      << (j["morse_smale"]["weak_pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& w : j["warnings"])
            std::cout << "warning: " << w.get<std::string>() << "\n";
    }
    return 0;
}

int run_atlas_check(const Options& opt) {
    mm_classset* set = nullptr;
    mm_status st = mm_enumerate_cached(query_string(opt).c_str(), opt.cache_dir.c_str(),
                                       opt.no_cache ? 0 : 1, &set);
    if (st != MM_OK)
        return fail_with(st);
    char* report = nullptr;
    st = mm_atlas_check(set, opt.samples, opt.seed, &report);
    mm_classset_free(set);
    if (st != MM_OK)
        return fail_with(st);
    if (opt.format == "json") {
        std::cout << take(report);
    } else {
        ordered_json j = ordered_json::parse(take(report));
        std::cout << "charts: " << j["charts"] << ", samples/chart: " << j["samples_per_chart"]
                  << ", transitions: " << j["transitions"] << "\n";
        std::cout << "cocycle failures: " << j["cocycle_failures"] << "\n";
        std::cout << "cone violations: " << j["cone_violations"] << "\n";
        std::cout << "fixed points observed: " << j["fixed_points_observed"] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial moduli of Morse functions on closed oriented surfaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_plugin, bool with_samples) {
        cmd->add_option("--p", opt.p, "number of minima")->required();
        cmd->add_option("--q", opt.q, "number of saddles")->required();
        cmd->add_option("--r", opt.r, "number of maxima")->required();
        cmd->add_option("--labels", opt.labels, "all|none|<label spec file>");
        cmd->add_option("--filter-s", opt.filter_s, "keep classes with exactly this level count");
        cmd->add_option("--format", opt.format, "text|json|dot|csv");
        cmd->add_option("--cache-dir", opt.cache_dir, "content-addressed result cache directory");
        cmd->add_flag("--no-cache", opt.no_cache, "recompute even when cached");
        cmd->add_option("--budget", opt.budget, "enumeration node budget");
        cmd->add_option("--seed", opt.seed, "random seed for sampled checks");
        cmd->add_option("--threads", opt.threads, "worker threads for enumeration");
        if (with_plugin)
            cmd->add_option("--plugin", opt.plugin, "stratum homotopy data file");
        if (with_samples)
            cmd->add_option("--samples", opt.samples, "sample points per chart");
    };

    auto* c_enum = app.add_subcommand("enumerate", "list all classes for a signature");
    add_common(c_enum, false, false);
    auto* c_poset = app.add_subcommand("poset", "build and export the strata poset");
    add_common(c_poset, false, false);
    auto* c_euler = app.add_subcommand("euler", "Euler characteristic of the moduli space");
    add_common(c_euler, false, false);
    auto* c_qpoly = app.add_subcommand("qpoly", "Morse polynomial and inequality report");
    add_common(c_qpoly, true, false);
    auto* c_atlas = app.add_subcommand("atlas-check", "chart transition consistency run");
    add_common(c_atlas, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(c_enum))
            return run_enumerate(opt);
        if (app.got_subcommand(c_poset))
            return run_poset(opt);
        if (app.got_subcommand(c_euler))
            return run_euler(opt);
        if (app.got_subcommand(c_qpoly))
            return run_qpoly(opt);
        if (app.got_subcommand(c_atlas))
            return run_atlas_check(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
