#include "hcolor/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <variant>

#include <CLI11.hpp>

#include "hcolor/campaign.hpp"
#include "hcolor/io.hpp"
#include "hcolor/local_structure.hpp"
#include "hcolor/search.hpp"
#include "hcolor/theorems.hpp"
#include "hcolor/walks.hpp"

namespace hcolor {

using nlohmann::json;

namespace {

json label_of(Vertex x, const std::vector<std::string>& labels) {
    if (static_cast<std::size_t>(x) < labels.size()) return labels[x];
    return x;
}

void emit(const json& report, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << report.dump(2) << '\n';
    else
        write_json(out_path, report);
}

json check_report(const InstanceDocument& doc) {
    const auto& inst = doc.instance;
    const auto& labels = doc.labels;
    json report;
    const auto violations = validate_instance(inst);
    report["valid"] = violations.empty();
    json vlist = json::array();
    for (const auto& v : violations)
        vlist.push_back({{"code", to_string(v.code)}, {"u", v.u}, {"v", v.v}, {"color", v.color}});
    report["violations"] = vlist;
    if (!violations.empty()) return report;

    const int n = inst.order();
    report["n"] = n;
    report["complete"] = inst.graph().is_complete();

    bool multipartite = true;
    json local = json::array();
    for (Vertex x = 0; x < n; ++x) {
        json entry{{"vertex", label_of(x, labels)}};
        if (inst.graph().degree(x) == 0) {
            entry["isolated"] = true;
        } else {
            const auto lp = local_partition(inst, x);
            if (const auto* parts = std::get_if<LocalPartition>(&lp)) {
                entry["k"] = parts->k();
                json pj = json::array();
                for (const auto& part : parts->parts) {
                    json p = json::array();
                    for (Vertex y : part) p.push_back(label_of(y, labels));
                    pj.push_back(p);
                }
                entry["parts"] = pj;
            } else {
                multipartite = false;
                const auto& nm = std::get<NotMultipartite>(lp);
                entry["not_multipartite"] = {label_of(nm.witness[0], labels), label_of(nm.witness[1], labels),
                                             label_of(nm.witness[2], labels)};
            }
        }
        local.push_back(entry);
    }
    report["local"] = local;

    if (inst.graph().is_complete() && n >= 3) {
        json hyp;
        if (multipartite) {
            const auto degree = check_degree_hypothesis(inst);
            hyp["degree"] = {{"holds", degree.holds}, {"k", degree.k}};
        } else {
            hyp["degree"] = {{"holds", false}, {"reason", "some G_x is not complete multipartite"}};
        }
        for (const auto& [name, check] : {std::pair{"no_c4_exactly3", check_no_c4_exactly3(inst)},
                                          std::pair{"no_c3_exactly2", check_no_c3_exactly2(inst)}}) {
            json offending = json::array();
            for (const auto& r : check.offending) {
                json obs = json::array();
                for (int pos : r.obstructions) obs.push_back(label_of(r.walk.vertices[pos], labels));
                offending.push_back({{"cycle", walk_to_json(r.walk, labels)}, {"obstructions", obs}});
            }
            hyp[name] = {{"holds", check.holds}, {"total", check.total}, {"offending", offending}};
        }
        report["hypotheses"] = hyp;
    }

    json vertices = json::array();
    for (Vertex x = 0; x < n; ++x) {
        json entry{{"vertex", label_of(x, labels)}};
        for (int length : {3, 4}) {
            if (length > n) continue;
            const auto cycle = find_h_cycle_through(inst, x, length);
            const std::string key = "h_c" + std::to_string(length);
            entry[key] = cycle.has_value();
            if (cycle) entry[key + "_cycle"] = walk_to_json(*cycle, labels);
        }
        vertices.push_back(entry);
    }
    report["vertices"] = vertices;

    if (doc.spec) {
        json checks = json::array();
        bool all = true;
        for (const auto& c : check_constraints(inst, *doc.spec)) {
            checks.push_back({{"constraint", c.description}, {"holds", c.holds}});
            all = all && c.holds;
        }
        report["spec_checks"] = checks;
        report["spec_satisfied"] = all;
    }
    return report;
}

int cmd_check(const std::string& file, const std::string& out_path, std::ostream& out, std::ostream& err) {
    InstanceDocument doc;
    try {
        doc = load_instance(file);
    } catch (const std::exception& e) {
        err << "hcolor check: " << e.what() << '\n';
        return kExitInput;
    }
    const auto report = check_report(doc);
    emit(report, out_path, out);
    if (!report["valid"].get<bool>()) {
        err << "hcolor check: instance violates " << report["violations"].size() << " invariant(s)\n";
        return kExitInput;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string which;
    int n = 0;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::string mode = "pc";
    std::size_t budget = 2000;
    unsigned threads = 0;
    std::string out_path;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    const auto which = parse_statement(opt.which);
    if (!which) {
        err << "hcolor verify: unknown statement " << opt.which << '\n';
        return kExitInput;
    }
    if (!in_range(*which, opt.n)) {
        err << "hcolor verify: n = " << opt.n << " is outside the range of " << opt.which << '\n';
        return kExitInput;
    }
    CampaignConfig config;
    config.which = *which;
    config.n = opt.n;
    config.samples = opt.samples;
    config.seed = opt.seed;
    config.mode = opt.mode == "general" ? SampleMode::General : SampleMode::ProperlyColored;
    config.general_budget = opt.budget;
    config.threads = opt.threads;

    const auto result = run_campaign(config);
    emit(campaign_to_json(result), opt.out_path, out);
    if (result.violations == 0) return kExitOk;

    const std::string side = opt.out_path.empty()
                                 ? "falsifying-" + opt.which + "-n" + std::to_string(opt.n) + "-seed" +
                                       std::to_string(opt.seed) + ".json"
                                 : opt.out_path + ".falsifying.json";
    json instances = json::array();
    for (const auto& inst : result.falsifying) instances.push_back(instance_to_json(inst));
    write_json(side, {{"falsifying", instances}});
    err << "hcolor verify: " << result.violations << " violation(s); instances written to " << side << '\n';
    return kExitViolation;
}

struct SearchOptions {
    int figure = 0;
    std::string spec_file;
    int colors = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
    SearchSpec spec;
    try {
        if (!opt.spec_file.empty())
            spec = load_spec(opt.spec_file);
        else if (opt.figure == 1)
            spec = figure1_spec();
        else if (opt.figure == 2)
            spec = figure2_spec();
        else {
            err << "hcolor search: pass --figure 1|2 or --spec FILE\n";
            return kExitInput;
        }
    } catch (const std::exception& e) {
        err << "hcolor search: " << e.what() << '\n';
        return kExitInput;
    }
    if (opt.colors > 0) spec.colors = opt.colors;
    if (opt.budget > 0) spec.budget = opt.budget;
    if (opt.seed > 0) spec.seed = opt.seed;
    if (const auto problems = validate_spec(spec); !problems.empty()) {
        for (const auto& p : problems) err << "hcolor search: " << p << '\n';
        return kExitInput;
    }

    const auto result = search_tightness(spec);
    json stats{{"nodes", result.stats.nodes},
               {"max_depth", result.stats.max_depth},
               {"budget_exceeded", result.stats.budget_exceeded},
               {"deepest_conflict", result.stats.deepest_conflict}};
    if (result.exhausted()) {
        out << json{{"found", false}, {"stats", stats}}.dump(2) << '\n';
        err << "hcolor search: exhausted after " << result.stats.nodes << " nodes\n";
        return kExitExhausted;
    }

    auto doc_json = instance_to_json(*result.instance, spec.labels);
    doc_json["spec"] = spec_to_json(spec);

    // Re-verify from the serialized form, exactly as `check` would.
    const auto doc = instance_from_json(doc_json);
    const auto report = check_report(doc);
    json summary{{"found", true}, {"stats", stats}, {"check", report}};
    if (opt.out_path.empty())
        summary["instance"] = doc_json;
    else
        write_json(opt.out_path, doc_json);
    out << summary.dump(2) << '\n';
    if (!report.value("spec_satisfied", false)) {
        err << "hcolor search: found instance failed independent re-verification\n";
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"H-colored complete graphs: checks, theorem campaigns and tightness searches", "hcolor"};
    app.require_subcommand(1);

    std::string check_file, check_out;
    auto* check = app.add_subcommand("check", "Validate an instance file and report its local structure");
    check->add_option("instance", check_file, "Instance JSON file")->required();
    check->add_option("--out", check_out, "Write the report here instead of stdout");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Sample hypothesis-satisfying instances and verify a statement");
    verify->add_option("--which", verify_opt.which, "T3cycle | T4small | T4large | Cor4")->required();
    verify->add_option("--n", verify_opt.n, "Order of the complete graph")->required();
    verify->add_option("--samples", verify_opt.samples, "Instances to sample");
    verify->add_option("--seed", verify_opt.seed, "Base seed for every random stream");
    verify->add_option("--mode", verify_opt.mode, "pc | general")->check(CLI::IsMember({"pc", "general"}));
    verify->add_option("--budget", verify_opt.budget, "Rejection attempts per sample in general mode");
    verify->add_option("--threads", verify_opt.threads, "Worker cap (0: all cores)");
    verify->add_option("--out", verify_opt.out_path, "Write the report here instead of stdout");

    SearchOptions search_opt;
    auto* search = app.add_subcommand("search", "Search a complete H-colored graph meeting a constraint spec");
    auto* fig = search->add_option("--figure", search_opt.figure, "Built-in spec: 1 or 2")->check(CLI::Range(1, 2));
    search->add_option("--spec", search_opt.spec_file, "JSON file with a \"spec\" object")->excludes(fig);
    search->add_option("--colors", search_opt.colors, "Palette size override");
    search->add_option("--budget", search_opt.budget, "Search node budget override");
    search->add_option("--seed", search_opt.seed, "Value-order seed override");
    search->add_option("--out", search_opt.out_path, "Write the found instance here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hcolor: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*check) return cmd_check(check_file, check_out, out, err);
        if (*verify) return cmd_verify(verify_opt, out, err);
        if (*search) return cmd_search(search_opt, out, err);
    } catch (const std::exception& e) {
        err << "hcolor: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace hcolor
