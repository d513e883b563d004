// collabnet: multi-level collaboration network analysis from publication
// metadata. Subcommands build author / institute / country graphs from a
// JSONL or CSV corpus and report structural measures, rankings, temporal
// series and exports for external tooling.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "collabnet/errors.hpp"
#include "collabnet/ingest.hpp"
#include "collabnet/serialize.hpp"

namespace {

using namespace collabnet;

struct CmdState {
    // corpus input
    std::string input;
    std::string input_format;  // inferred from extension when empty
    std::string aliases_path;
    std::string countries_path;
    std::string regions_path;
    // graph input (alternative to a corpus for graph-consuming commands)
    std::string graph_path;
    std::string graph_nodes_path;
    // build options
    std::string level = "country";
    int from = 0, to = 0;
    std::string policy = "per-publication";
    bool include_isolates = false;
    std::string attribution = "all";
    // command specifics
    std::string format;
    std::string out;
    std::string nodes_out;
    int top_k = 20;
    int min_size = 3;
    int min_total = 1;
    bool clustering_zeros = false;
    bool cumulative = false;
    std::vector<std::string> period_specs;
    std::string early_spec, recent_spec;
    std::string axis = "authors";
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file: " + path);
    return in;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + out_path);
    out << payload;
}

std::string json_payload(const ordered_json& value) { return value.dump(2) + "\n"; }

CorpusFormat corpus_format(const CmdState& state) {
    if (!state.input_format.empty()) return corpus_format_from_string(state.input_format);
    if (state.input.size() >= 4 && state.input.ends_with(".csv")) return CorpusFormat::csv;
    return CorpusFormat::jsonl;
}

struct Pipeline {
    std::vector<PublicationRecord> records;
    EntityRegistry registry;
    CleaningStats cleaning;
};

Pipeline load_pipeline(const CmdState& state) {
    Pipeline p;
    auto in = open_input(state.input);
    ParseResult parsed = parse_corpus(in, corpus_format(state));
    for (const auto& err : parsed.errors)
        std::cerr << "warning: " << state.input << " line " << err.line << ": " << err.message
                  << "\n";
    p.cleaning.row_errors = static_cast<long long>(parsed.errors.size());
    p.cleaning.empty_affiliations_dropped = parsed.empty_affiliations_dropped;
    p.records = std::move(parsed.records);

    if (!state.aliases_path.empty()) {
        auto f = open_input(state.aliases_path);
        load_aliases_csv(f, p.registry);
    }
    if (!state.countries_path.empty()) {
        auto f = open_input(state.countries_path);
        load_institute_countries_csv(f, p.registry);
    }
    if (!state.regions_path.empty()) {
        auto f = open_input(state.regions_path);
        load_regions_csv(f, p.registry);
    }
    p.registry.finalize();

    p.cleaning.rewritten_fields = apply_aliases(p.records, p.registry).rewritten_fields;
    InferStats inferred = infer_countries(p.records, p.registry);
    p.cleaning.inferred_countries = inferred.resolved;
    p.cleaning.unresolved_affiliations = inferred.unresolved;
    return p;
}

std::optional<YearWindow> window_of(const CmdState& state) {
    if (state.from == 0 && state.to == 0) return std::nullopt;
    return YearWindow{state.from == 0 ? 1000 : state.from, state.to == 0 ? 3000 : state.to};
}

BuildOptions build_options(const CmdState& state) {
    BuildOptions options;
    options.level = level_from_string(state.level);
    options.window = window_of(state);
    options.policy = policy_from_string(state.policy);
    options.include_isolates = state.include_isolates;
    options.attribution = state.attribution == "first" ? AffiliationAttribution::first
                                                       : AffiliationAttribution::all;
    return options;
}

CollabGraph make_graph(const CmdState& state) {
    if (!state.graph_path.empty()) {
        auto edges = open_input(state.graph_path);
        if (!state.graph_nodes_path.empty()) {
            auto nodes = open_input(state.graph_nodes_path);
            return read_edge_csv(edges, &nodes, level_from_string(state.level));
        }
        return read_edge_csv(edges, nullptr, level_from_string(state.level));
    }
    Pipeline p = load_pipeline(state);
    return build_graph(p.records, build_options(state), &p.registry);
}

YearWindow parse_window_spec(const std::string& spec, const char* what) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DataError(std::string(what) + " must be FROM:TO, got '" + spec + "'");
    try {
        int from = std::stoi(spec.substr(0, colon));
        int to = std::stoi(spec.substr(colon + 1));
        return YearWindow{from, to};
    } catch (const std::exception&) {
        throw DataError(std::string(what) + " must be FROM:TO with integer years, got '" +
                        spec + "'");
    }
}

LabeledWindow parse_period_spec(const std::string& spec) {
    // FROM:TO[:LABEL]
    auto first = spec.find(':');
    auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    std::string window_part = second == std::string::npos ? spec : spec.substr(0, second);
    YearWindow window = parse_window_spec(window_part, "--period");
    std::string label = second == std::string::npos
                            ? std::to_string(window.from) + "-" + std::to_string(window.to)
                            : spec.substr(second + 1);
    if (label.empty()) throw DataError("--period label must not be empty");
    return {label, window};
}

// shared option groups

void add_corpus_options(CLI::App* sub, const std::shared_ptr<CmdState>& state,
                        bool required = true) {
    auto* opt = sub->add_option("--input", state->input, "corpus file (JSONL or CSV)");
    if (required) opt->required();
    sub->add_option("--input-format", state->input_format, "corpus format override")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    sub->add_option("--aliases", state->aliases_path, "alias map CSV (level,alias,canonical)");
    sub->add_option("--countries", state->countries_path,
                    "institute-country map CSV (institute,country)");
    sub->add_option("--regions", state->regions_path, "region map CSV (country,region)");
}

void add_build_options(CLI::App* sub, const std::shared_ptr<CmdState>& state) {
    sub->add_option("--level", state->level, "projection level")
        ->check(CLI::IsMember({"author", "institute", "country"}));
    sub->add_option("--from", state->from, "window start year")
        ->check(CLI::Range(1000, 3000));
    sub->add_option("--to", state->to, "window end year")->check(CLI::Range(1000, 3000));
    sub->add_option("--policy", state->policy, "edge weight policy")
        ->check(CLI::IsMember({"per-publication", "per-pair"}));
    sub->add_flag("--include-isolates", state->include_isolates,
                  "keep entities without collaborations as isolated nodes");
    sub->add_option("--attribution", state->attribution,
                    "affiliations of multi-affiliation authors used for projections")
        ->check(CLI::IsMember({"all", "first"}));
}

void add_graph_source_options(CLI::App* sub, const std::shared_ptr<CmdState>& state) {
    add_corpus_options(sub, state, false);
    add_build_options(sub, state);
    sub->add_option("--graph", state->graph_path,
                    "weighted edge-list CSV to analyze instead of building from a corpus");
    sub->add_option("--graph-nodes", state->graph_nodes_path,
                    "node attribute CSV accompanying --graph");
    sub->parse_complete_callback([state] {
        if (state->input.empty() && state->graph_path.empty())
            throw CLI::RequiredError("--input or --graph");
    });
}

void add_out_option(CLI::App* sub, const std::shared_ptr<CmdState>& state) {
    sub->add_option("--out", state->out, "output path (default standard output)");
}

CLI::Option* add_format_option(CLI::App* sub, const std::shared_ptr<CmdState>& state,
                               const std::vector<std::string>& allowed,
                               const std::string& fallback) {
    state->format = fallback;
    return sub->add_option("--format", state->format, "output format")
        ->check(CLI::IsMember(allowed));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-level collaboration network toolkit"};
    app.require_subcommand(1);

    // stats
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("stats", "corpus and cleaning statistics");
        add_corpus_options(sub, state);
        add_format_option(sub, state, {"json"}, "json");
        add_out_option(sub, state);
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            write_output(state->out, json_payload(stats_json(corpus_stats(p.records),
                                                             p.cleaning)));
        });
    }

    // build
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("build", "build a graph and write its edge list");
        add_corpus_options(sub, state);
        add_build_options(sub, state);
        add_out_option(sub, state);
        sub->add_option("--nodes-out", state->nodes_out, "also write node attributes CSV");
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            CollabGraph g = build_graph(p.records, build_options(*state), &p.registry);
            std::ostringstream edges;
            write_edge_csv(g, edges);
            write_output(state->out, edges.str());
            if (!state->nodes_out.empty()) {
                std::ostringstream nodes;
                write_node_attr_csv(g, nodes);
                write_output(state->nodes_out, nodes.str());
            }
        });
    }

    // metrics
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("metrics", "full structural measure report");
        add_graph_source_options(sub, state);
        add_format_option(sub, state, {"json", "csv"}, "json");
        add_out_option(sub, state);
        sub->add_flag("--clustering-zeros", state->clustering_zeros,
                      "average clustering over all nodes, counting degree<2 nodes as zero");
        sub->final_callback([state] {
            MetricsReport report = full_report(make_graph(*state), state->clustering_zeros);
            write_output(state->out, state->format == "csv"
                                         ? to_csv(report)
                                         : json_payload(to_json(report)));
        });
    }

    // top
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("top", "most collaborative entities");
        add_graph_source_options(sub, state);
        sub->add_option("--top", state->top_k, "number of rows")->check(CLI::PositiveNumber);
        add_format_option(sub, state, {"json", "csv"}, "csv");
        add_out_option(sub, state);
        sub->final_callback([state] {
            TopEntitiesTable table = top_entities(make_graph(*state), state->top_k);
            write_output(state->out, state->format == "json" ? json_payload(to_json(table))
                                                             : to_csv(table));
        });
    }

    // links
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("links", "strongest collaboration links");
        add_graph_source_options(sub, state);
        sub->add_option("--top", state->top_k, "number of rows")->check(CLI::PositiveNumber);
        add_format_option(sub, state, {"json", "csv"}, "csv");
        add_out_option(sub, state);
        sub->final_callback([state] {
            StrongestLinksTable table = strongest_links(make_graph(*state), state->top_k);
            write_output(state->out, state->format == "json" ? json_payload(to_json(table))
                                                             : to_csv(table));
        });
    }

    // cliques
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("cliques", "maximal cliques and their overlaps");
        add_graph_source_options(sub, state);
        sub->add_option("--min-size", state->min_size, "smallest clique to report")
            ->check(CLI::Range(3, 1000000));
        add_format_option(sub, state, {"json"}, "json");
        add_out_option(sub, state);
        sub->final_callback([state] {
            auto cliques = maximal_cliques(make_graph(*state), state->min_size);
            write_output(state->out, json_payload(cliques_json(cliques, state->min_size)));
        });
    }

    // series
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("series", "per-year evolution series");
        add_corpus_options(sub, state);
        add_build_options(sub, state);
        add_format_option(sub, state, {"json", "csv"}, "csv");
        add_out_option(sub, state);
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            YearlySeries series =
                yearly_series(p.records, level_from_string(state->level),
                              policy_from_string(state->policy),
                              state->attribution == "first" ? AffiliationAttribution::first
                                                            : AffiliationAttribution::all);
            write_output(state->out, state->format == "json" ? json_payload(to_json(series))
                                                             : to_csv(series));
        });
    }

    // periods
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("periods", "cross-period network comparison");
        add_corpus_options(sub, state);
        add_build_options(sub, state);
        sub->add_option("--period", state->period_specs, "period window FROM:TO[:LABEL]")
            ->required()
            ->take_all();
        sub->add_flag("--cumulative", state->cumulative, "allow overlapping periods");
        add_format_option(sub, state, {"json"}, "json");
        add_out_option(sub, state);
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            std::vector<LabeledWindow> windows;
            for (const auto& spec : state->period_specs)
                windows.push_back(parse_period_spec(spec));
            PeriodComparison comparison = period_compare(
                p.records, level_from_string(state->level), windows,
                policy_from_string(state->policy), state->cumulative,
                state->attribution == "first" ? AffiliationAttribution::first
                                              : AffiliationAttribution::all);
            write_output(state->out, json_payload(to_json(comparison)));
        });
    }

    // growth
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("growth", "cross-period growth-rate ranking");
        add_corpus_options(sub, state);
        add_build_options(sub, state);
        sub->add_option("--early", state->early_spec, "early window FROM:TO")->required();
        sub->add_option("--recent", state->recent_spec, "recent window FROM:TO")->required();
        sub->add_option("--min-total", state->min_total,
                        "minimum combined collaborations across both windows")
            ->check(CLI::PositiveNumber);
        add_format_option(sub, state, {"json", "csv"}, "csv");
        add_out_option(sub, state);
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            GrowthReport report = growth_rates(
                p.records, level_from_string(state->level),
                parse_window_spec(state->early_spec, "--early"),
                parse_window_spec(state->recent_spec, "--recent"),
                policy_from_string(state->policy), state->min_total,
                state->attribution == "first" ? AffiliationAttribution::first
                                              : AffiliationAttribution::all);
            write_output(state->out, state->format == "json" ? json_payload(to_json(report))
                                                             : to_csv(report));
        });
    }

    // dist
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("dist", "per-publication affiliation distributions");
        add_corpus_options(sub, state);
        sub->add_option("--axis", state->axis, "distribution axis")
            ->check(CLI::IsMember({"authors", "institutes", "countries"}));
        add_format_option(sub, state, {"json", "csv"}, "csv");
        add_out_option(sub, state);
        sub->final_callback([state] {
            Pipeline p = load_pipeline(*state);
            DistributionTable table =
                authorship_distribution(p.records, axis_from_string(state->axis));
            write_output(state->out, state->format == "json" ? json_payload(to_json(table))
                                                             : to_csv(table));
        });
    }

    // export
    {
        auto state = std::make_shared<CmdState>();
        auto* sub = app.add_subcommand("export", "export a graph for external tools");
        add_graph_source_options(sub, state);
        add_format_option(sub, state, {"csv", "edge_csv", "dot", "graphml"}, "dot");
        add_out_option(sub, state);
        sub->final_callback([state] {
            CollabGraph g = make_graph(*state);
            ExportFormat format = ExportFormat::dot;
            if (state->format == "csv" || state->format == "edge_csv")
                format = ExportFormat::edge_csv;
            else if (state->format == "graphml")
                format = ExportFormat::graphml;
            std::ostringstream out;
            export_graph(g, format, out);
            write_output(state->out, out.str());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    } catch (const UndefinedResultError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
