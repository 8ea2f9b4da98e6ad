#include "sted/cli.hpp"

#include "sted/consistency.hpp"
#include "sted/errors.hpp"
#include "sted/parallel.hpp"
#include "sted/semantic.hpp"
#include "sted/sted.hpp"
#include "sted/ted.hpp"
#include "sted/tree.hpp"
#include "sted/variation.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace sted::cli {

namespace {

/// Structured run configuration: StedConfig + scalar policy + provider +
/// cache path, loadable from a JSON file. Flags win over file values.
struct RunConfig {
    StedConfig sted;
    EmbeddingProviderSpec provider;
    std::string cache_path;
    double alpha = 20.0;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw std::invalid_argument("config file is not a JSON object: " + path);
    }

    static const std::set<std::string> known = {
        "mode",          "w_s",          "w_c",          "lambda",
        "alpha",         "insert_cost",  "delete_cost",  "coercion_enabled",
        "coercion_penalty", "string_threshold_chars", "chunk_overlap_chars",
        "provider",      "cache_path",   "seed",         "jobs"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw std::invalid_argument("unknown config field: " + key);
        }
    }

    if (j.contains("mode")) cfg.sted = cfg.sted.with_mode(mode_from_name(j["mode"]));
    if (j.contains("w_s")) cfg.sted.w_s = j["w_s"].get<double>();
    if (j.contains("w_c")) cfg.sted.w_c = j["w_c"].get<double>();
    if (j.contains("lambda")) cfg.sted.lambda = j["lambda"].get<double>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("insert_cost")) cfg.sted.insert_cost = j["insert_cost"].get<double>();
    if (j.contains("delete_cost")) cfg.sted.delete_cost = j["delete_cost"].get<double>();
    if (j.contains("coercion_enabled"))
        cfg.sted.scalar_policy.coercion_enabled = j["coercion_enabled"].get<bool>();
    if (j.contains("coercion_penalty"))
        cfg.sted.scalar_policy.coercion_penalty = j["coercion_penalty"].get<double>();
    if (j.contains("string_threshold_chars"))
        cfg.sted.scalar_policy.string_threshold_chars = j["string_threshold_chars"].get<std::size_t>();
    if (j.contains("chunk_overlap_chars"))
        cfg.sted.scalar_policy.chunk_overlap_chars = j["chunk_overlap_chars"].get<std::size_t>();
    if (j.contains("cache_path")) cfg.cache_path = j["cache_path"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<unsigned>();

    if (j.contains("provider")) {
        const auto& p = j["provider"];
        static const std::set<std::string> pknown = {"provider_id", "kind",      "endpoint",
                                                     "model_id",    "dimension", "timeout_ms",
                                                     "max_batch"};
        for (const auto& [key, value] : p.items()) {
            if (!pknown.count(key)) {
                throw std::invalid_argument("unknown provider config field: " + key);
            }
        }
        if (p.contains("provider_id")) cfg.provider.provider_id = p["provider_id"];
        if (p.contains("kind")) {
            const std::string kind = p["kind"];
            if (kind == "deterministic-local") {
                cfg.provider.kind = ProviderKind::DeterministicLocal;
            } else if (kind == "remote-http") {
                cfg.provider.kind = ProviderKind::RemoteHttp;
            } else {
                throw std::invalid_argument("unknown provider kind: " + kind);
            }
        }
        if (p.contains("endpoint")) cfg.provider.endpoint = p["endpoint"];
        if (p.contains("model_id")) cfg.provider.model_id = p["model_id"];
        if (p.contains("dimension")) cfg.provider.dimension = p["dimension"].get<std::size_t>();
        if (p.contains("timeout_ms")) cfg.provider.timeout_ms = p["timeout_ms"].get<int>();
        if (p.contains("max_batch")) cfg.provider.max_batch = p["max_batch"].get<std::size_t>();
    }
}

SimilarityContext make_context(const RunConfig& cfg) {
    auto provider = make_provider(cfg.provider);
    auto cache = std::make_shared<EmbeddingCache>(
        cfg.cache_path.empty() ? fs::path{} : fs::path(cfg.cache_path));
    return SimilarityContext(provider, cache, cfg.sted.scalar_policy);
}

/// Directory -> sorted *.json inside; '*' patterns match file names within
/// the named directory; anything else is taken as a literal file path.
std::vector<std::string> expand_inputs(const std::vector<std::string>& raw_inputs) {
    std::vector<std::string> files;
    for (const std::string& input : raw_inputs) {
        if (fs::is_directory(input)) {
            std::vector<std::string> found;
            for (const auto& entry : fs::directory_iterator(input)) {
                if (entry.is_regular_file() && entry.path().extension() == ".json") {
                    found.push_back(entry.path().string());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
            continue;
        }
        if (input.find('*') != std::string::npos) {
            const fs::path pattern_path(input);
            const fs::path dir =
                pattern_path.parent_path().empty() ? "." : pattern_path.parent_path();
            const std::string pattern = pattern_path.filename().string();
            auto matches = [&](const std::string& name) {
                // iterative '*' wildcard match
                std::size_t n = 0, p = 0, star = std::string::npos, mark = 0;
                while (n < name.size()) {
                    if (p < pattern.size() && (pattern[p] == name[n] || pattern[p] == '?')) {
                        ++n, ++p;
                    } else if (p < pattern.size() && pattern[p] == '*') {
                        star = p++;
                        mark = n;
                    } else if (star != std::string::npos) {
                        p = star + 1;
                        n = ++mark;
                    } else {
                        return false;
                    }
                }
                while (p < pattern.size() && pattern[p] == '*') ++p;
                return p == pattern.size();
            };
            std::vector<std::string> found;
            if (fs::is_directory(dir)) {
                for (const auto& entry : fs::directory_iterator(dir)) {
                    if (entry.is_regular_file() && matches(entry.path().filename().string())) {
                        found.push_back(entry.path().string());
                    }
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
            continue;
        }
        files.push_back(input);
    }
    return files;
}

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string csv_safe(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
    }
    return text;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_compare(const std::string& file_a, const std::string& file_b, const RunConfig& cfg,
                const std::string& metric, double threshold, bool pretty, bool include_all,
                std::ostream& out) {
    const DocumentTree a = parse_file(file_a);
    const DocumentTree b = parse_file(file_b);
    SimilarityResult result;
    if (metric == "ted") {
        TedConfig tcfg;
        tcfg.insert_cost = cfg.sted.insert_cost;
        tcfg.delete_cost = cfg.sted.delete_cost;
        tcfg.lambda = cfg.sted.lambda;
        result = ted_report(a, b, tcfg);
    } else {
        SimilarityContext ctx = make_context(cfg);
        result = include_all ? compare_report(a, b, cfg.sted, ctx, true)
                             : sted_similarity(a, b, cfg.sted, ctx);
    }
    out << result.to_json(pretty);
    if (!pretty) out << "\n";
    return result.score >= threshold ? kOk : kThresholdFail;
}

int cmd_consistency(const std::vector<std::string>& raw_inputs, const RunConfig& cfg,
                    const std::string& mode_name_arg, bool all_modes, bool skip_bad, bool pretty,
                    std::ostream& out, std::ostream& err) {
    const std::vector<std::string> files = expand_inputs(raw_inputs);
    if (files.empty()) {
        err << "error: no input files\n";
        return kInputError;
    }
    std::vector<DocumentTree> outputs;
    for (const std::string& file : files) {
        try {
            outputs.push_back(parse_file(file));
        } catch (const std::exception& e) {
            if (!skip_bad) {
                err << "error: " << file << ": " << e.what() << "\n";
                return kInputError;
            }
            err << "warning: skipping " << file << ": " << e.what() << "\n";
        }
    }
    if (outputs.empty()) {
        err << "error: no parsable input files\n";
        return kInputError;
    }

    SimilarityContext ctx = make_context(cfg);
    if (all_modes) {
        nlohmann::ordered_json combined;
        for (Mode mode : {Mode::Structural, Mode::Semantic, Mode::Hybrid}) {
            const ConsistencyReport report =
                evaluate_consistency(outputs, mode, cfg.sted, ctx, cfg.alpha, cfg.jobs);
            combined[mode_name(mode)] = nlohmann::ordered_json::parse(report.to_json());
        }
        out << (pretty ? combined.dump(2) + "\n" : combined.dump() + "\n");
        return kOk;
    }
    const Mode mode = mode_from_name(mode_name_arg);
    const ConsistencyReport report =
        evaluate_consistency(outputs, mode, cfg.sted, ctx, cfg.alpha, cfg.jobs);
    out << report.to_json(pretty);
    if (!pretty) out << "\n";
    return kOk;
}

int cmd_generate(const std::string& out_dir, const RunConfig& cfg, const std::string& kind,
                 std::optional<double> ratio, std::size_t count, std::size_t min_depth,
                 std::ostream& out) {
    CorpusOptions options;
    options.count = count;
    options.seed = cfg.seed;
    options.min_depth = min_depth;
    if (kind == "all") {
        // every kind
    } else if (kind == "all-gradual") {
        options.kinds = {VariationKind::FieldRename, VariationKind::Expression,
                         VariationKind::Semantic};
    } else if (kind == "all-structural") {
        options.kinds = {VariationKind::Flatten, VariationKind::Nest};
    } else {
        options.kinds = {variation_kind_from_name(kind)};
    }
    if (ratio) {
        options.ratios = {*ratio};
    }
    const std::vector<CorpusCase> cases = generate_corpus(out_dir, options);
    nlohmann::ordered_json summary;
    summary["manifest"] = (fs::path(out_dir) / "manifest.jsonl").string();
    summary["cases"] = cases.size();
    summary["seed"] = cfg.seed;
    out << summary.dump() << "\n";
    return kOk;
}

int cmd_sweep(const std::string& manifest_path, const RunConfig& cfg,
              const std::vector<std::string>& metrics, const std::string& out_csv, bool keep_going,
              std::ostream& out, std::ostream& err) {
    const std::vector<CorpusCase> cases = read_manifest(manifest_path);
    if (cases.empty()) {
        err << "error: manifest has no cases\n";
        return kInputError;
    }
    for (const std::string& metric : metrics) {
        if (metric != "sted" && metric != "ted") {
            err << "error: unknown metric: " << metric << "\n";
            return kInputError;
        }
    }
    const fs::path root = fs::path(manifest_path).parent_path();

    struct Row {
        std::string case_id, kind, ratio, metric, score, error;
    };
    std::vector<Row> rows(cases.size() * metrics.size());
    SimilarityContext ctx = make_context(cfg);
    std::string first_error;
    std::mutex error_mutex;

    parallel_for_indexed(cases.size(), cfg.jobs, [&](std::size_t i) {
        const CorpusCase& c = cases[i];
        char ratio_buf[16];
        std::snprintf(ratio_buf, sizeof(ratio_buf), "%.1f", c.ratio);
        DocumentTree base, variant;
        std::string load_error;
        try {
            base = parse_file((root / c.base_path).string());
            variant = parse_file((root / c.variant_path).string());
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            Row& row = rows[i * metrics.size() + m];
            row.case_id = c.case_id;
            row.kind = c.kind;
            row.ratio = ratio_buf;
            row.metric = metrics[m];
            if (!load_error.empty()) {
                row.error = csv_safe(load_error);
                continue;
            }
            try {
                double score = 0.0;
                if (metrics[m] == "ted") {
                    TedConfig tcfg;
                    tcfg.lambda = cfg.sted.lambda;
                    score = ted_similarity(base, variant, tcfg);
                } else {
                    score = sted_similarity(base, variant, cfg.sted, ctx).score;
                }
                row.score = format_score(score);
            } catch (const std::exception& e) {
                row.error = csv_safe(e.what());
            }
        }
        if (!load_error.empty()) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (first_error.empty()) first_error = c.case_id + ": " + load_error;
        }
    });

    if (!keep_going) {
        for (const Row& row : rows) {
            if (!row.error.empty()) {
                err << "error: " << row.case_id << ": " << row.error << "\n";
                return kInputError;
            }
        }
    }

    std::string csv = "case_id,kind,ratio,metric,score,error\n";
    for (const Row& row : rows) {
        csv += row.case_id + "," + row.kind + "," + row.ratio + "," + row.metric + "," +
               row.score + "," + row.error + "\n";
    }
    if (out_csv.empty() || out_csv == "-") {
        out << csv;
    } else {
        std::ofstream f(out_csv, std::ios::binary | std::ios::trunc);
        if (!f) {
            err << "error: cannot write " << out_csv << "\n";
            return kInputError;
        }
        f.write(csv.data(), static_cast<std::streamsize>(csv.size()));
        nlohmann::ordered_json summary;
        summary["csv"] = out_csv;
        summary["rows"] = rows.size();
        out << summary.dump() << "\n";
    }
    return kOk;
}

int cmd_cache(const std::string& action, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
    if (cfg.cache_path.empty()) {
        err << "error: cache command requires --cache or cache_path in the config\n";
        return kInputError;
    }
    EmbeddingCache cache{fs::path(cfg.cache_path)};
    nlohmann::ordered_json j;
    j["path"] = cfg.cache_path;
    if (action == "stats") {
        const EmbeddingCache::Stats stats = cache.disk_stats();
        j["entries"] = stats.entries;
        j["bytes"] = stats.bytes;
    } else {
        const EmbeddingCache::Stats before = cache.disk_stats();
        cache.clear();
        j["removed_entries"] = before.entries;
    }
    out << j.dump() << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"STED: semantic tree edit distance and consistency scoring for JSON outputs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_file;
    std::string cache_flag;
    std::string mode_flag;
    unsigned jobs_flag = 0;
    bool jobs_set = false;

    app.add_option("--config", config_file, "JSON run configuration file");
    app.add_option_function<std::string>(
        "--cache", [&](const std::string& v) { cache_flag = v; }, "embedding cache directory");
    app.add_option_function<unsigned>(
        "--jobs",
        [&](unsigned v) {
            jobs_flag = v;
            jobs_set = true;
        },
        "worker threads (0 = logical CPUs)");

    // compare
    auto* compare = app.add_subcommand("compare", "compare two JSON documents");
    std::string file_a, file_b, metric = "sted";
    double threshold = 0.0;
    bool pretty = false, include_all = false;
    compare->add_option("file_a", file_a)->required();
    compare->add_option("file_b", file_b)->required();
    compare->add_option("--metric", metric)->check(CLI::IsMember({"sted", "ted"}));
    compare->add_option("--mode", mode_flag)->check(CLI::IsMember({"structural", "semantic", "hybrid"}));
    compare->add_option("--threshold", threshold, "exit 3 when score falls below");
    compare->add_flag("--pretty", pretty);
    compare->add_flag("--include-all", include_all, "report every pair, zero-cost included");

    // consistency
    auto* consistency = app.add_subcommand("consistency", "score repeated generations");
    std::vector<std::string> inputs;
    bool all_modes = false, skip_bad = false;
    double alpha_flag = -1.0;
    consistency->add_option("inputs", inputs, "files, directories or *.json patterns")->required();
    consistency->add_option("--mode", mode_flag)
        ->check(CLI::IsMember({"structural", "semantic", "hybrid"}));
    consistency->add_flag("--all-modes", all_modes);
    consistency->add_option("--alpha", alpha_flag, "steepness of the consistency score");
    consistency->add_flag("--skip-bad", skip_bad, "tolerate unparsable inputs");
    consistency->add_flag("--pretty", pretty);

    // generate
    auto* generate = app.add_subcommand("generate", "write a synthetic variation corpus");
    std::string out_dir, kind = "all";
    std::size_t count = 75, min_depth = 2;
    double ratio_flag = -1.0;
    std::uint64_t seed_flag = 0;
    bool seed_set = false;
    generate->add_option("--out", out_dir)->required();
    generate->add_option("--kind", kind,
                         "field-rename|expression|semantic|flatten|nest|all-gradual|all-structural|all");
    generate->add_option("--ratio", ratio_flag, "single modification ratio (default: ten levels)");
    generate->add_option("--count", count, "number of base documents");
    generate->add_option("--min-depth", min_depth, "minimum base document depth");
    generate->add_option_function<std::uint64_t>(
        "--seed",
        [&](std::uint64_t v) {
            seed_flag = v;
            seed_set = true;
        },
        "master seed");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "score a corpus manifest into CSV");
    std::string manifest_path, metrics_csv = "sted,ted", out_csv;
    bool keep_going = false;
    sweep->add_option("--corpus", manifest_path, "manifest.jsonl path")->required();
    sweep->add_option("--metrics", metrics_csv, "comma-separated: sted,ted");
    sweep->add_option("--out", out_csv, "output CSV path (default stdout)");
    sweep->add_option("--mode", mode_flag)->check(CLI::IsMember({"structural", "semantic", "hybrid"}));
    sweep->add_flag("--keep-going", keep_going, "record per-case failures in the error column");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the embedding cache");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action)->required()->check(CLI::IsMember({"stats", "clear"}));

    std::vector<const char*> argv;
    argv.push_back("sted");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (!config_file.empty()) {
            load_config_file(config_file, cfg);
        }
        if (!cache_flag.empty()) cfg.cache_path = cache_flag;
        if (!mode_flag.empty()) cfg.sted = cfg.sted.with_mode(mode_from_name(mode_flag));
        if (jobs_set) cfg.jobs = jobs_flag;
        if (alpha_flag >= 0.0) cfg.alpha = alpha_flag;
        if (seed_set) cfg.seed = seed_flag;
        cfg.sted.validate();

        if (compare->parsed()) {
            return cmd_compare(file_a, file_b, cfg, metric, threshold, pretty, include_all, out);
        }
        if (consistency->parsed()) {
            const std::string mode = mode_flag.empty() ? "hybrid" : mode_flag;
            return cmd_consistency(inputs, cfg, mode, all_modes, skip_bad, pretty, out, err);
        }
        if (generate->parsed()) {
            std::optional<double> ratio;
            if (ratio_flag >= 0.0) ratio = ratio_flag;
            return cmd_generate(out_dir, cfg, kind, ratio, count, min_depth, out);
        }
        if (sweep->parsed()) {
            std::vector<std::string> metrics;
            std::stringstream ss(metrics_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) metrics.push_back(item);
            }
            return cmd_sweep(manifest_path, cfg, metrics, out_csv, keep_going, out, err);
        }
        if (cache_cmd->parsed()) {
            return cmd_cache(cache_action, cfg, out, err);
        }
        err << "error: no subcommand\n";
        return kInputError;
    } catch (const ProviderUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return kProviderError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kProviderError;
    } catch (const ParseError& e) {
        err << "error: parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return kInputError;
    } catch (const DepthExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InfeasibleSpec& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace sted::cli
