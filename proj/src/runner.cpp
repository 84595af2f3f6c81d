#include "vsakit/runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "vsakit/cognition.hpp"
#include "vsakit/costmodel.hpp"
#include "vsakit/learning.hpp"
#include "vsakit/prng.hpp"
#include "vsakit/reasoning.hpp"
#include "vsakit/serialize.hpp"
#include "vsakit/synth.hpp"
#include "vsakit/workloads.hpp"

namespace vsa {

namespace {

using nlohmann::json;

// --- configuration plumbing --------------------------------------------------

json env_defaults() {
    json j = json::object();
    if (const char* v = std::getenv("VSAKIT_SEED")) j["seed"] = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("VSAKIT_OUT")) j["out"] = v;
    if (const char* v = std::getenv("VSAKIT_FORMAT")) j["format"] = v;
    if (const char* v = std::getenv("VSAKIT_JOBS")) j["jobs"] = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("VSAKIT_TECH_TABLE")) j["tech_table"] = v;
    return j;
}

void merge_over(json& base, const json& layer) {
    for (auto it = layer.begin(); it != layer.end(); ++it) base[it.key()] = it.value();
}

struct Context {
    json config;
    std::string out_dir;
    std::string format;  // "json" or "csv"
    std::uint64_t seed = 0;
    std::size_t jobs = 1;

    std::string out_path(const std::string& file) const { return out_dir + "/" + file; }

    void write_report(const std::string& file, const std::string& contents) const {
        std::string path = out_path(file);
        write_file_atomic(path, contents);
        std::cerr << "wrote " << path << "\n";
    }

    void write_json(const std::string& file, const json& j) const {
        write_report(file, j.dump(2) + "\n");
    }
};

Context make_context(const RunOptions& options) {
    json config = env_defaults();
    if (!options.config_path.empty()) {
        json from_file = json::parse(read_file(options.config_path), nullptr, false);
        if (from_file.is_discarded() || !from_file.is_object())
            raise(ErrorCode::ParseError, "config file is not a JSON object: " +
                                             options.config_path);
        merge_over(config, from_file);
    }
    if (options.overrides.is_object()) merge_over(config, options.overrides);
    if (options.seed) config["seed"] = *options.seed;
    if (options.jobs) config["jobs"] = *options.jobs;
    if (!options.out_dir.empty()) config["out"] = options.out_dir;
    if (!options.format.empty()) config["format"] = options.format;

    Context ctx;
    ctx.config = config;
    ctx.out_dir = config.value("out", "out");
    ctx.format = config.value("format", "json");
    if (ctx.format != "json" && ctx.format != "csv")
        raise(ErrorCode::ParseError, "format must be 'json' or 'csv'");
    ctx.seed = config.value("seed", 0ull);
    ctx.jobs = config.value("jobs", 1ull);
    if (ctx.jobs < 1) ctx.jobs = 1;
    return ctx;
}

// Schema version stamped into every report.
json report_header(const Context& ctx, const std::string& kind) {
    return {{"format", "vsakit-report"},
            {"version", 1},
            {"kind", kind},
            {"seed", ctx.seed}};
}

// --- dataset ingestion ----------------------------------------------------------

struct Csv {
    std::vector<std::string> header;  // empty when headerless
    std::vector<std::vector<std::string>> rows;
};

Csv read_csv(const std::string& path, bool has_header) {
    std::istringstream in(read_file(path));
    Csv csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (first && has_header) {
            csv.header = cells;
        } else {
            if (!csv.rows.empty() && cells.size() != csv.rows.front().size())
                raise(ErrorCode::ParseError, path + ": ragged CSV row");
            csv.rows.push_back(std::move(cells));
        }
        first = false;
    }
    if (csv.rows.empty()) raise(ErrorCode::ParseError, path + ": no data rows");
    return csv;
}

double parse_number(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, path + ": not a number: '" + s + "'");
    }
}

// Label column: name (needs header), non-negative index, or -1 for none.
int resolve_label_column(const Csv& csv, const json& config, const std::string& path) {
    if (!config.contains("label_column")) return static_cast<int>(csv.rows.front().size()) - 1;
    const json& lc = config.at("label_column");
    if (lc.is_number_integer()) return lc.get<int>();
    std::string name = lc.get<std::string>();
    if (name == "none") return -1;
    for (std::size_t i = 0; i < csv.header.size(); ++i)
        if (csv.header[i] == name) return static_cast<int>(i);
    raise(ErrorCode::ParseError, path + ": no column named '" + name + "'");
}

LabeledDataset dataset_from_csv(const std::string& path, const json& config) {
    Csv csv = read_csv(path, config.value("header", true));
    int label_col = resolve_label_column(csv, config, path);
    LabeledDataset ds;
    for (const auto& row : csv.rows) {
        std::vector<double> features;
        std::string label = "unlabeled";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (static_cast<int>(i) == label_col) label = row[i];
            else features.push_back(parse_number(row[i], path));
        }
        ds.features.push_back(std::move(features));
        ds.labels.push_back(std::move(label));
    }
    return ds;
}

// --- subcommands -------------------------------------------------------------------

void run_encode(const Context& ctx) {
    const json& cfg = ctx.config;
    std::uint32_t dim = cfg.value("dim", 10000u);
    std::string encoder_kind = cfg.value("encoder", "projection");

    if (encoder_kind == "ngram") {
        // Sequence per input line; symbols are single characters.
        std::string text = read_file(cfg.at("input").get<std::string>());
        std::size_t n = cfg.value("n", 3ull);
        Codebook cb("ngram-items", ctx.seed, dim, Repr::Binary);
        std::ostringstream blob(std::ios::binary);
        std::istringstream in(text);
        std::string line;
        std::size_t count = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::vector<std::string> symbols;
            for (char c : line) {
                symbols.emplace_back(1, c);
                cb.add(symbols.back());
            }
            if (symbols.size() < n) continue;
            save_hv(ngram_encode(cb, symbols, n, ctx.seed), blob, ctx.seed);
            ++count;
        }
        if (count == 0) raise(ErrorCode::ParseError, "no line long enough for the n-gram size");
        write_file_atomic(ctx.out_path("encoded.vsah"), blob.str());
        std::cerr << "wrote " << ctx.out_path("encoded.vsah") << "\n";
        json summary = report_header(ctx, "encode");
        summary["encoder"] = "ngram";
        summary["n"] = n;
        summary["vectors"] = count;
        summary["dim"] = dim;
        ctx.write_json("encode_summary.json", summary);
        return;
    }

    if (encoder_kind == "multimodal") {
        // JSON-lines {modality, t, features:{id:value}}; the whole file fuses
        // into one hypervector.
        std::istringstream in(read_file(cfg.at("input").get<std::string>()));
        std::vector<ModalRecord> records;
        ModalitySchema schema;
        Codebook ids("modal-ids", ctx.seed, dim, Repr::Binary);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded()) raise(ErrorCode::ParseError, "bad modal record: " + line);
            ModalRecord rec;
            rec.modality = j.at("modality").get<std::string>();
            rec.timestamp = j.value("t", 0u);
            for (auto it = j.at("features").begin(); it != j.at("features").end(); ++it) {
                rec.features.emplace_back(it.key(), it.value().get<double>());
                ids.add(it.key());
            }
            schema[rec.modality] = rec.features.size();
            records.push_back(std::move(rec));
        }
        LevelEmbedding values(cfg.value("min_value", 0.0), cfg.value("max_value", 1.0),
                              cfg.value("levels", 16ull), dim, ctx.seed);
        HyperVector fused = multimodal_encode(records, schema, ids, values, ctx.seed);
        save_hv_file(fused, ctx.out_path("encoded.vsah"), ctx.seed);
        std::cerr << "wrote " << ctx.out_path("encoded.vsah") << "\n";
        json summary = report_header(ctx, "encode");
        summary["encoder"] = "multimodal";
        summary["records"] = records.size();
        summary["modalities"] = schema.size();
        summary["dim"] = dim;
        ctx.write_json("encode_summary.json", summary);
        return;
    }
    if (encoder_kind != "projection")
        raise(ErrorCode::ParseError, "unknown encoder '" + encoder_kind + "'");

    LabeledDataset ds = dataset_from_csv(cfg.at("input").get<std::string>(), cfg);
    ProjectionEncoder enc(ds.features.front().size(), dim, ctx.seed);
    std::ostringstream blob(std::ios::binary);
    for (const auto& row : ds.features) save_hv(enc.encode(row), blob, ctx.seed);
    write_file_atomic(ctx.out_path("encoded.vsah"), blob.str());
    std::cerr << "wrote " << ctx.out_path("encoded.vsah") << "\n";

    json summary = report_header(ctx, "encode");
    summary["encoder"] = "projection";
    summary["vectors"] = ds.size();
    summary["in_dim"] = ds.features.front().size();
    summary["dim"] = dim;
    ctx.write_json("encode_summary.json", summary);
}

double model_accuracy(const ClassifierModel& model, const LabeledDataset& ds) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (infer(model, ds.features[i]).first == ds.labels[i]) ++hits;
    return ds.size() ? static_cast<double>(hits) / static_cast<double>(ds.size()) : 0.0;
}

LabeledDataset load_or_make_dataset(const Context& ctx, const json& cfg) {
    if (cfg.contains("data")) return dataset_from_csv(cfg.at("data").get<std::string>(), cfg);
    const json& synth = cfg.value("synthetic", json{{"samples", 200}, {"features", 16},
                                                    {"classes", 2}});
    return make_blobs(synth.value("samples", 200ull), synth.value("features", 16ull),
                      synth.value("classes", 2ull), ctx.seed);
}

void run_train(const Context& ctx) {
    const json& cfg = ctx.config;
    LabeledDataset full = load_or_make_dataset(ctx, cfg);
    double holdout = cfg.value("holdout", 0.25);
    auto [train, test] = split_dataset(full, holdout, ctx.seed);
    if (train.size() == 0) raise(ErrorCode::ParseError, "holdout leaves no training data");

    std::uint32_t dim = cfg.value("dim", 10000u);
    ProjectionEncoder enc(train.features.front().size(), dim, ctx.seed);
    ClassifierModel model = train_single_pass(train, enc, SimilarityMetric::Cosine, ctx.seed);
    double single_pass_train = model_accuracy(model, train);

    std::size_t epochs = cfg.value("epochs", 0ull);
    if (epochs > 0) retrain_iterative(model, train, cfg.value("eta", 0.5), epochs);

    save_model(model, ctx.out_path("model.json"));
    std::cerr << "wrote " << ctx.out_path("model.json") << "\n";

    json report = report_header(ctx, "train");
    report["dim"] = dim;
    report["classes"] = model.classes();
    report["train_samples"] = train.size();
    report["holdout_samples"] = test.size();
    report["epochs"] = epochs;
    report["train_accuracy_single_pass"] = single_pass_train;
    report["train_accuracy"] = model_accuracy(model, train);
    if (test.size()) report["holdout_accuracy"] = model_accuracy(model, test);
    ctx.write_json("train_report.json", report);
}

void run_infer(const Context& ctx) {
    const json& cfg = ctx.config;
    ClassifierModel model = load_model(cfg.at("model").get<std::string>());
    LabeledDataset ds = dataset_from_csv(cfg.at("data").get<std::string>(), cfg);

    json rows = json::array();
    std::size_t hits = 0, labeled = 0;
    std::ostringstream csv;
    csv << "index,label";
    for (const auto& c : model.classes()) csv << ",score_" << c;
    csv << "\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto [label, scores] = infer(model, ds.features[i]);
        if (ds.labels[i] != "unlabeled") {
            ++labeled;
            if (label == ds.labels[i]) ++hits;
        }
        rows.push_back({{"index", i}, {"label", label}, {"scores", scores}});
        csv << i << ',' << label;
        csv.precision(6);
        for (double s : scores) csv << ',' << s;
        csv << "\n";
    }
    if (ctx.format == "csv") {
        ctx.write_report("predictions.csv", csv.str());
    } else {
        json report = report_header(ctx, "infer");
        report["predictions"] = rows;
        if (labeled) report["accuracy"] = static_cast<double>(hits) / labeled;
        ctx.write_json("infer_report.json", report);
    }
}

void run_cluster(const Context& ctx) {
    const json& cfg = ctx.config;
    LabeledDataset ds = load_or_make_dataset(ctx, cfg);
    std::uint32_t dim = cfg.value("dim", 10000u);
    std::size_t k = cfg.value("k", 2ull);
    std::size_t max_iters = cfg.value("max_iters", 50ull);

    ProjectionEncoder enc(ds.features.front().size(), dim, ctx.seed);
    ClusterModel model = cluster(ds.features, enc, k, max_iters, ctx.seed);

    json report = report_header(ctx, "cluster");
    report["k"] = k;
    report["dim"] = dim;
    report["iterations"] = model.iterations;
    report["converged"] = model.converged;
    report["assignment_changes"] = model.change_history;
    report["assignments"] = model.assignments;
    ctx.write_json("cluster_report.json", report);
}

void run_factorize(const Context& ctx) {
    const json& cfg = ctx.config;
    std::size_t codebook_count = cfg.value("codebooks", 3ull);
    std::size_t items = cfg.value("items", 8ull);
    std::uint32_t dim = cfg.value("dim", 1024u);
    std::size_t trials = cfg.value("trials", 200ull);
    std::size_t max_iters = cfg.value("max_iters", 100ull);
    double noise_p = cfg.value("noise_p", 0.0);
    ResonatorSchedule schedule = cfg.value("schedule", "parallel") == std::string("sequential")
                                     ? ResonatorSchedule::Sequential
                                     : ResonatorSchedule::Parallel;

    // A fixed problem instance: either a target composition of named items
    // or a raw composite vector from a container file. Otherwise seeded
    // random instances per trial.
    const bool fixed_target = cfg.contains("target") || cfg.contains("target_vector");
    if (fixed_target) trials = cfg.value("trials", 1ull);

    json trials_out = json::array();
    std::size_t converged = 0, correct = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Codebook> cbs;
        std::vector<const Codebook*> ptrs;
        for (std::size_t i = 0; i < codebook_count; ++i) {
            std::uint64_t cb_seed = fixed_target
                                        ? ctx.seed + i
                                        : CounterRng::derive_key(
                                              "cli-fact", std::to_string(t * 16 + i), ctx.seed);
            cbs.emplace_back("factor" + std::to_string(i), cb_seed, dim, Repr::Bipolar);
            cbs.back().add_range("item", items);
        }
        for (const auto& cb : cbs) ptrs.push_back(&cb);

        std::vector<std::string> truth;
        HyperVector f;
        if (cfg.contains("target_vector")) {
            f = load_hv_file(cfg.at("target_vector").get<std::string>());
            if (f.dim() != dim)
                raise(ErrorCode::ParseError, "target vector dimension != configured dim");
        } else if (cfg.contains("target")) {
            std::vector<HyperVector> parts;
            const auto& names = cfg.at("target");
            if (names.size() != codebook_count)
                raise(ErrorCode::ParseError, "target needs one item per codebook");
            for (std::size_t i = 0; i < codebook_count; ++i) {
                truth.push_back(names[i].get<std::string>());
                parts.push_back(cbs[i].get(truth.back()));
            }
            f = parts.size() == 1 ? parts.front() : compose(parts);
        } else {
            CounterRng pick = CounterRng::keyed("cli-fact-pick", std::to_string(t), ctx.seed);
            std::vector<HyperVector> parts;
            for (std::size_t i = 0; i < codebook_count; ++i) {
                std::size_t idx = pick.next_below(items);
                truth.push_back("item" + std::to_string(idx));
                parts.push_back(cbs[i].at(idx));
            }
            f = parts.size() == 1 ? parts.front() : compose(parts);
        }

        FactorizeResult res = factorize(f, ptrs, max_iters, schedule, noise_p, ctx.seed + t);
        if (res.converged) ++converged;
        if (!truth.empty() && res.factors == truth) ++correct;
        json record = {{"trial", t},
                       {"iterations", res.iterations},
                       {"converged", res.converged},
                       {"decoded", res.factors},
                       {"recompose_similarity", res.recompose_similarity},
                       {"trusted", res.trusted}};
        if (!truth.empty()) record["expected"] = truth;
        trials_out.push_back(std::move(record));
    }

    json report = report_header(ctx, "factorize");
    report["codebooks"] = codebook_count;
    report["items"] = items;
    report["dim"] = dim;
    report["schedule"] = schedule == ResonatorSchedule::Sequential ? "sequential" : "parallel";
    report["noise_p"] = noise_p;
    report["summary"] = {{"trials", trials},
                         {"converged", converged},
                         {"accuracy", trials ? static_cast<double>(correct) / trials : 0.0}};
    report["trials"] = trials_out;
    ctx.write_json("factorize_report.json", report);
}

NavigationDemo demo_from_json(const json& j) {
    NavigationDemo demo;
    auto to_str = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    for (auto it = j.at("sensors").begin(); it != j.at("sensors").end(); ++it)
        demo.sensors[it.key()] = to_str(it.value());
    for (auto it = j.at("actuators").begin(); it != j.at("actuators").end(); ++it)
        demo.actuators[it.key()] = to_str(it.value());
    return demo;
}

void run_navigate(const Context& ctx) {
    const json& cfg = ctx.config;
    std::uint32_t dim = cfg.value("dim", 10000u);
    double threshold = cfg.value("threshold", 0.1);

    std::vector<NavigationDemo> demos;
    NavigationVocabulary vocab = [&] {
        if (cfg.contains("demos")) {
            // JSON-lines {sensors:{id:value}, actuators:{id:value}}; the
            // vocabulary is collected from the file.
            std::istringstream in(read_file(cfg.at("demos").get<std::string>()));
            std::string line;
            std::set<std::string> sensor_ids, sensor_values, actuator_ids, actuator_values;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                json j = json::parse(line, nullptr, false);
                if (j.is_discarded())
                    raise(ErrorCode::ParseError, "demos: bad JSON line: " + line);
                demos.push_back(demo_from_json(j));
                for (const auto& [k, v] : demos.back().sensors) {
                    sensor_ids.insert(k);
                    sensor_values.insert(v);
                }
                for (const auto& [k, v] : demos.back().actuators) {
                    actuator_ids.insert(k);
                    actuator_values.insert(v);
                }
            }
            if (demos.empty()) raise(ErrorCode::ParseError, "demos file has no demos");
            return NavigationVocabulary(
                std::vector<std::string>(sensor_ids.begin(), sensor_ids.end()),
                std::vector<std::string>(sensor_values.begin(), sensor_values.end()),
                std::vector<std::string>(actuator_ids.begin(), actuator_ids.end()),
                std::vector<std::string>(actuator_values.begin(), actuator_values.end()), dim,
                ctx.seed);
        }
        std::size_t count = cfg.value("synthetic_demos", 20ull);
        demos = make_grid_demos(count, ctx.seed);
        return make_grid_vocab(dim, ctx.seed);
    }();

    NavigationProgram program = navigation_train(vocab, demos);
    json recalls = json::array();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < demos.size(); ++i) {
        auto actions = navigation_recall(program, vocab, demos[i].sensors, threshold);
        json acts = json::array();
        bool all_match = true;
        for (const auto& a : actions) {
            acts.push_back({{"actuator", a.actuator},
                            {"value", a.value},
                            {"score", a.score},
                            {"matched", a.matched}});
            auto want = demos[i].actuators.find(a.actuator);
            all_match &= want != demos[i].actuators.end() && want->second == a.value;
        }
        if (all_match) ++hits;
        recalls.push_back({{"demo", i}, {"actions", acts}});
    }

    json report = report_header(ctx, "navigate");
    report["dim"] = dim;
    report["demos"] = demos.size();
    report["threshold"] = threshold;
    report["recall_accuracy"] = static_cast<double>(hits) / static_cast<double>(demos.size());
    report["recalls"] = recalls;
    ctx.write_json("navigate_report.json", report);
}

void run_graph(const Context& ctx) {
    const json& cfg = ctx.config;
    std::uint32_t dim = cfg.value("dim", 10000u);
    double threshold = cfg.value("threshold", 0.25);

    EdgeList edges;
    std::uint32_t nodes = 0;
    if (cfg.contains("edges")) {
        // Edge-list text: "i j" per line, '#' comments.
        std::istringstream in(read_file(cfg.at("edges").get<std::string>()));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            std::uint32_t a, b;
            if (!(row >> a >> b)) raise(ErrorCode::ParseError, "bad edge line: " + line);
            edges.emplace_back(a, b);
            nodes = std::max({nodes, a + 1, b + 1});
        }
        nodes = std::max(nodes, cfg.value("nodes", 0u));
    } else {
        nodes = cfg.value("nodes", 50u);
        edges = random_graph(nodes, cfg.value("edge_prob", 0.1), ctx.seed);
    }

    GraphOptions options;
    options.dedupe = cfg.value("dedupe", false);
    GraphMemory gm = graph_encode(edges, nodes, dim, ctx.seed, options);

    // Score all pairs against the exact adjacency.
    std::set<std::pair<std::uint32_t, std::uint32_t>> truth;
    for (auto [a, b] : edges) truth.insert(std::minmax(a, b));
    double wins = 0, pairs = 0;
    std::size_t pos = 0, neg = 0;
    std::vector<std::pair<double, bool>> scored;
    for (std::uint32_t i = 0; i < nodes; ++i) {
        for (std::uint32_t j = i + 1; j < nodes; ++j) {
            auto [present, score] = graph_edge_query(gm, i, j, threshold);
            scored.emplace_back(score, truth.count({i, j}) > 0);
        }
    }
    for (const auto& [sp, is_edge] : scored) (is_edge ? pos : neg) += 1;
    for (const auto& [sp, is_edge] : scored) {
        if (!is_edge) continue;
        for (const auto& [sn, other_edge] : scored) {
            if (other_edge) continue;
            wins += sp > sn ? 1.0 : (sp == sn ? 0.5 : 0.0);
            pairs += 1;
        }
    }

    json report = report_header(ctx, "graph");
    report["nodes"] = nodes;
    report["edges"] = gm.edge_count();
    report["dim"] = dim;
    report["threshold"] = threshold;
    if (pairs > 0) report["edge_query_auc"] = wins / pairs;
    ctx.write_json("graph_report.json", report);
}

void run_ood(const Context& ctx) {
    const json& cfg = ctx.config;
    HdffConfig hc;
    hc.dim = cfg.value("dim", 10000u);
    hc.seed = ctx.seed;
    hc.threshold = cfg.value("threshold", 0.25);
    if (cfg.value("combine", "bundle") == std::string("bind"))
        hc.combine = HdffConfig::Combine::Bind;

    json report = report_header(ctx, "ood");
    if (cfg.contains("train")) {
        // Per class: one CSV per layer; rows are samples.
        std::map<std::string, std::vector<Csv>> classes;
        for (auto it = cfg.at("train").begin(); it != cfg.at("train").end(); ++it) {
            std::vector<Csv> layers;
            for (const auto& path : it.value())
                layers.push_back(read_csv(path.get<std::string>(), cfg.value("header", true)));
            classes[it.key()] = std::move(layers);
        }
        const auto& first_layers = classes.begin()->second;
        for (const auto& layer : first_layers) hc.layer_dims.push_back(layer.rows[0].size());
        HdffDescriptor desc(hc);
        for (const auto& [label, layers] : classes) {
            std::vector<std::vector<std::vector<double>>> samples;
            for (std::size_t s = 0; s < layers[0].rows.size(); ++s) {
                std::vector<std::vector<double>> sample;
                for (const auto& layer : layers) {
                    std::vector<double> feats;
                    for (const auto& cell : layer.rows[s]) feats.push_back(parse_number(cell, label));
                    sample.push_back(std::move(feats));
                }
                samples.push_back(std::move(sample));
            }
            desc.fit_class(label, samples);
        }

        std::vector<Csv> test_layers;
        for (const auto& path : cfg.at("test"))
            test_layers.push_back(read_csv(path.get<std::string>(), cfg.value("header", true)));
        json scores = json::array();
        for (std::size_t s = 0; s < test_layers[0].rows.size(); ++s) {
            std::vector<std::vector<double>> sample;
            for (const auto& layer : test_layers) {
                std::vector<double> feats;
                for (const auto& cell : layer.rows[s]) feats.push_back(parse_number(cell, "test"));
                sample.push_back(std::move(feats));
            }
            auto res = desc.score(sample);
            scores.push_back({{"sample", s},
                              {"score", res.score},
                              {"nearest", res.nearest},
                              {"out_of_distribution", res.out_of_distribution}});
        }
        report["scores"] = scores;
    } else {
        // Synthetic self-check: seeded in-distribution and far draws.
        std::size_t classes = cfg.value("classes", 2ull);
        std::size_t per_class = cfg.value("samples", 20ull);
        hc.layer_dims = {16, 24};
        HdffDescriptor desc(hc);
        CounterRng rng = CounterRng::keyed("ood-synth", "", ctx.seed);
        std::vector<std::vector<std::vector<double>>> centroids;
        for (std::size_t c = 0; c < classes; ++c) {
            std::vector<std::vector<double>> centroid{std::vector<double>(16),
                                                      std::vector<double>(24)};
            for (auto& layer : centroid)
                for (auto& x : layer) x = 3.0 * rng.next_gaussian();
            centroids.push_back(centroid);
            std::vector<std::vector<std::vector<double>>> train;
            for (std::size_t s = 0; s < per_class; ++s) {
                auto sample = centroid;
                for (auto& layer : sample)
                    for (auto& x : layer) x += 0.3 * rng.next_gaussian();
                train.push_back(std::move(sample));
            }
            desc.fit_class("class" + std::to_string(c), train);
        }
        std::size_t id_flagged = 0, ood_flagged = 0, probes = 20;
        for (std::size_t s = 0; s < probes; ++s) {
            auto sample = centroids[s % classes];
            for (auto& layer : sample)
                for (auto& x : layer) x += 0.3 * rng.next_gaussian();
            if (desc.score(sample).out_of_distribution) ++id_flagged;
            std::vector<std::vector<double>> far{std::vector<double>(16),
                                                 std::vector<double>(24)};
            for (auto& layer : far)
                for (auto& x : layer) x = 3.0 * rng.next_gaussian();
            if (desc.score(far).out_of_distribution) ++ood_flagged;
        }
        report["synthetic"] = {{"probes", probes},
                               {"id_flag_rate", static_cast<double>(id_flagged) / probes},
                               {"ood_flag_rate", static_cast<double>(ood_flagged) / probes}};
    }
    ctx.write_json("ood_report.json", report);
}

// --- cost model subcommands ----------------------------------------------------

imc::TechTable tech_table_for(const Context& ctx) {
    if (ctx.config.contains("tech_table"))
        return imc::TechTable::load(ctx.config.at("tech_table").get<std::string>());
    return imc::TechTable::load_default();
}

imc::WorkloadModel workload_for(const Context& ctx, const std::string& name) {
    const json& cfg = ctx.config;
    if (name == "perception" || name == "multimodal_perception") {
        imc::PerceptionConfig pc;
        pc.seed = ctx.seed + 1;
        pc.samples = cfg.value("samples", pc.samples);
        pc.dim = cfg.value("workload_dim", pc.dim);
        return imc::build_perception_workload(pc);
    }
    if (name == "navigation" || name == "navigation_train") {
        imc::NavigationConfig nc;
        nc.seed = ctx.seed + 2;
        nc.demos = cfg.value("demos", nc.demos);
        nc.dim = cfg.value("workload_dim", nc.dim);
        return imc::build_navigation_workload(nc);
    }
    if (name == "navigation_recall") {
        imc::NavigationConfig nc;
        nc.seed = ctx.seed + 2;
        nc.phase = imc::NavigationConfig::Phase::Recall;
        return imc::build_navigation_workload(nc);
    }
    if (name == "factorization" || name == "factorization_parallel") {
        imc::FactorizationConfig fc;
        fc.seed = ctx.seed + 3;
        fc.trials = cfg.value("trials", fc.trials);
        return imc::build_factorization_workload(fc);
    }
    if (name == "factorization_sequential") {
        imc::FactorizationConfig fc;
        fc.seed = ctx.seed + 3;
        fc.trials = cfg.value("trials", fc.trials);
        fc.schedule = ResonatorSchedule::Sequential;
        fc.sequential_cores = true;
        return imc::build_factorization_workload(fc);
    }
    raise(ErrorCode::ParseError, "unknown workload '" + name + "'");
}

imc::MemoryConfig memory_config_for(const json& cfg) {
    std::string name = cfg.value("memory", "hetero_mram_sram");
    for (const auto& mc : imc::default_memory_configs())
        if (mc.name == name) return mc;
    if (cfg.contains("static_memory") && cfg.contains("dynamic_memory"))
        return {name, imc::memory_from_name(cfg.at("static_memory").get<std::string>()),
                imc::memory_from_name(cfg.at("dynamic_memory").get<std::string>())};
    raise(ErrorCode::ParseError, "unknown memory config '" + name + "'");
}

void run_cost(const Context& ctx) {
    const json& cfg = ctx.config;
    imc::TechTable table = tech_table_for(ctx);
    imc::WorkloadModel workload = workload_for(ctx, cfg.value("workload", "perception"));
    imc::TechNode node = imc::node_from_name(cfg.value("node", "65"));

    imc::Architecture arch;
    if (cfg.contains("arch")) {
        json aj = json::parse(read_file(cfg.at("arch").get<std::string>()), nullptr, false);
        if (aj.is_discarded())
            raise(ErrorCode::ParseError, "architecture config is not valid JSON");
        arch = imc::Architecture::from_json(aj);
    } else {
        arch = imc::architecture_for(workload, memory_config_for(cfg), node);
    }

    imc::Mapping mapping = imc::map_workload(workload, arch);
    imc::OpTrace trace = imc::trace_workload(workload, mapping);
    imc::CostReport report = imc::estimate_cost(trace, mapping, table);

    json out = report_header(ctx, "cost");
    out["workload"] = workload.name;
    out["architecture"] = arch.name;
    out["node_nm"] = imc::node_name(node);
    out["run_summary"] = workload.run_summary;
    out["reprogram_events"] = trace.reprogram_events;
    out["report"] = report.to_json();
    ctx.write_json("cost_report.json", out);
}

void run_sweep(const Context& ctx) {
    const json& cfg = ctx.config;
    imc::TechTable table = tech_table_for(ctx);
    std::string mode = cfg.value("mode", "memories");

    imc::SweepResult result;
    if (mode == "nodes") {
        imc::WorkloadModel workload = workload_for(ctx, cfg.value("workload", "perception"));
        result = imc::sweep_nodes(workload, table);
    } else {
        std::vector<imc::WorkloadModel> workloads;
        std::vector<std::string> names =
            cfg.value("workloads", std::vector<std::string>{"perception", "navigation",
                                                            "factorization"});
        for (const auto& n : names) workloads.push_back(workload_for(ctx, n));
        result = imc::sweep_memories(workloads, imc::default_memory_configs(), table,
                                     imc::node_from_name(cfg.value("node", "65")), ctx.jobs);
    }

    ctx.write_report("sweep.csv", result.to_csv());
    json out = report_header(ctx, "sweep");
    out["mode"] = mode;
    merge_over(out, result.to_json());
    ctx.write_json("sweep.json", out);
}

void run_bounds(const Context& ctx) {
    std::ostringstream csv;
    csv << "category,lower_bytes,upper_bytes\n";
    json rows = json::array();
    for (int c = 0; c <= static_cast<int>(imc::WorkloadCategory::MultiModalPerception); ++c) {
        auto category = static_cast<imc::WorkloadCategory>(c);
        imc::FootprintBound b =
            imc::footprint_bounds(imc::WorkloadDescriptor::defaults(category));
        csv << imc::category_name(category) << ',' << b.lower_bytes << ',' << b.upper_bytes
            << "\n";
        rows.push_back({{"category", imc::category_name(category)},
                        {"lower_bytes", b.lower_bytes},
                        {"upper_bytes", b.upper_bytes}});
    }
    ctx.write_report("bounds.csv", csv.str());
    json out = report_header(ctx, "bounds");
    out["bounds"] = rows;
    ctx.write_json("bounds.json", out);
}

} // namespace

nlohmann::json resolve_config(const RunOptions& options) {
    return make_context(options).config;
}

void run_subcommand(const std::string& name, const RunOptions& options) {
    Context ctx = make_context(options);
    std::filesystem::create_directories(ctx.out_dir);

    if (name == "encode") return run_encode(ctx);
    if (name == "train") return run_train(ctx);
    if (name == "infer") return run_infer(ctx);
    if (name == "cluster") return run_cluster(ctx);
    if (name == "factorize") return run_factorize(ctx);
    if (name == "navigate") return run_navigate(ctx);
    if (name == "graph") return run_graph(ctx);
    if (name == "ood") return run_ood(ctx);
    if (name == "cost") return run_cost(ctx);
    if (name == "sweep") return run_sweep(ctx);
    if (name == "bounds") return run_bounds(ctx);
    raise(ErrorCode::ParseError, "unknown subcommand '" + name + "'");
}

} // namespace vsa
