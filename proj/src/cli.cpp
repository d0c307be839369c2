#include "lexirank/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <CLI11.hpp>

#include "lexirank/agreement.hpp"
#include "lexirank/error.hpp"
#include "lexirank/format.hpp"
#include "lexirank/report.hpp"
#include "lexirank/sentiment.hpp"
#include "lexirank/stats.hpp"
#include "lexirank/symbols.hpp"

namespace lexirank::cli {

namespace fs = std::filesystem;
using report::TextTable;

namespace {

constexpr std::size_t kBatchSize = 8192;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

const std::string& single_input(const RunConfig& config) {
    if (config.inputs.empty()) throw IoError("no --input given");
    return config.inputs.front();
}

Corpus load_corpus(const RunConfig& config) {
    Corpus corpus;
    for (const auto& path : config.inputs) {
        auto in = open_input(path);
        CorpusReader reader(in);
        while (auto r = reader.next()) corpus.push_back(std::move(*r));
    }
    if (config.inputs.empty()) throw IoError("no --input given");
    return corpus;
}

// Streams every input corpus through `shards` accumulators, one batch at a
// time, and merges them in shard order.
LexiconAccumulator accumulate(const RunConfig& config) {
    const std::size_t shards = std::max<std::size_t>(config.shards, 1);
    std::vector<LexiconAccumulator> partial(shards);
    std::vector<AnnotatedText> batch;
    batch.reserve(kBatchSize);

    auto flush = [&] {
        if (shards == 1) {
            for (const auto& r : batch) partial[0].add(r);
        } else {
            const std::size_t chunk = (batch.size() + shards - 1) / shards;
            std::vector<std::exception_ptr> failures(shards);
            {
                std::vector<std::jthread> workers;
                for (std::size_t s = 0; s < shards; ++s) {
                    workers.emplace_back([&, s] {
                        try {
                            const std::size_t lo = std::min(batch.size(), s * chunk);
                            const std::size_t hi = std::min(batch.size(), lo + chunk);
                            for (std::size_t i = lo; i < hi; ++i) partial[s].add(batch[i]);
                        } catch (...) {
                            failures[s] = std::current_exception();
                        }
                    });
                }
            }
            for (auto& f : failures)
                if (f) std::rethrow_exception(f);
        }
        batch.clear();
    };

    if (config.inputs.empty()) throw IoError("no --input given");
    for (const auto& path : config.inputs) {
        auto in = open_input(path);
        CorpusReader reader(in);
        while (auto r = reader.next()) {
            batch.push_back(std::move(*r));
            if (batch.size() == kBatchSize) flush();
        }
    }
    flush();
    for (std::size_t s = 1; s < shards; ++s) partial[0] += partial[s];
    return std::move(partial[0]);
}

void print_table(std::ostream& out, const RunConfig& config, const std::string& title, const TextTable& table) {
    if (config.format == OutputFormat::csv) {
        out << "# " << title << '\n';
        table.print_csv(out);
    } else {
        out << title << '\n';
        table.print(out);
    }
    out << '\n';
}

void print_line(std::ostream& out, const RunConfig& config, const std::string& key, const std::string& value) {
    if (config.format == OutputFormat::csv) {
        out << csv::escape(key) << ',' << csv::escape(value) << '\n';
    } else {
        out << key << ": " << value << '\n';
    }
}

std::string p_value(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", p);
    return buf;
}

std::string starred(double r, const stats::CorrelationTest& test) {
    return signed_fixed(r, 3) + (test.significant ? "*" : "");
}


std::vector<std::string> distribution_row(const std::string& name, const SentimentCounts& c) {
    const auto d = laplace_distribution(c);
    return {name,
            std::to_string(c.neg),
            std::to_string(c.neut),
            std::to_string(c.pos),
            std::to_string(c.total()),
            signed_fixed(d.score, 3),
            fixed(d.sd, 3),
            d.sem ? fixed(*d.sem, 4) : "n/a"};
}

void write_welch(std::ostream& out, const RunConfig& config, const std::string& what,
                 const stats::SampleSummary& a, const stats::SampleSummary& b) {
    try {
        const auto w = stats::welch_t_test(a, b);
        print_line(out, config, what,
                   "t = " + fixed(w.t, 2) + ", dof = " + std::to_string(w.dof) + ", p = " + p_value(w.p_two_tailed));
    } catch (const DomainError& e) {
        print_line(out, config, what, std::string("not applicable (") + e.what() + ")");
    }
}

void lexicon_summary(std::ostream& out, const RunConfig& config, const RankedLexicon& lexicon,
                     std::uint64_t texts_with_symbols) {
    print_line(out, config, "texts with symbols", std::to_string(texts_with_symbols));
    print_line(out, config, "lexicon entries", std::to_string(lexicon.size()));
    print_line(out, config, "min occurrences", std::to_string(lexicon.min_occurrences));
    print_line(out, config, "total occurrences", std::to_string(lexicon.total_occurrences()));
    if (lexicon.empty()) return;
    print_line(out, config, "mean score (unweighted)", signed_fixed(mean_score(lexicon), 3));
    print_line(out, config, "mean position", fixed(mean_position(lexicon), 4));

    const std::size_t mid = midpoint_rank(lexicon);
    print_line(out, config, "midpoint rank", std::to_string(mid));
    if (mid < lexicon.size()) {
        const auto parts = partition_stats(lexicon, mid);
        TextTable t({"half", "entries", "occurrences", "mean", "sd", "sem"});
        auto add = [&](const std::string& name, const GroupSummary& g) {
            t.add_row({name, std::to_string(g.entries), std::to_string(g.occurrences), signed_fixed(g.mean, 3),
                       fixed(g.sd, 3), fixed(g.sem, 4)});
        };
        add("ranks <= " + std::to_string(mid), parts.first);
        add("ranks > " + std::to_string(mid), parts.second);
        add("all", summarize_entries(lexicon.entries));
        out << '\n';
        print_table(out, config, "Frequent vs infrequent symbols", t);
        write_welch(out, config, "Welch's t-test (halves)", {parts.first.mean, parts.first.sd, parts.first.occurrences},
                    {parts.second.mean, parts.second.sd, parts.second.occurrences});
    }

    std::vector<double> occurrences;
    for (const auto& e : lexicon.entries) occurrences.push_back(static_cast<double>(e.occurrences));
    try {
        const auto fit = stats::power_law_mle(
            Eigen::Map<const stats::Vector>(occurrences.data(), static_cast<Eigen::Index>(occurrences.size())),
            static_cast<double>(lexicon.min_occurrences));
        print_line(out, config, "power-law exponent",
                   fixed(fit.exponent(), 3) + " (+/- " + fixed(fit.std_error, 3) + ", x_min = " +
                       std::to_string(lexicon.min_occurrences) + ", n = " + std::to_string(fit.n) + ")");
    } catch (const DomainError& e) {
        print_line(out, config, "power-law exponent", std::string("not applicable (") + e.what() + ")");
    }

    TextTable hist({"bin start", "entries"});
    for (const auto& bin : score_histogram(lexicon, config.bin_width))
        hist.add_row({signed_fixed(bin.start, 3), std::to_string(bin.count)});
    out << '\n';
    print_table(out, config, "Score histogram (bin width " + fixed(config.bin_width, 3) + ")", hist);
}

void write_renders(const RunConfig& config, const RankedLexicon& lexicon) {
    if (!config.map_path.empty() && !lexicon.empty())
        write_file(config.map_path, report::render_sentiment_map(lexicon));
    if (!config.bars_dir.empty()) {
        fs::create_directories(config.bars_dir);
        for (const auto& e : lexicon.entries)
            write_file(fs::path(config.bars_dir) / (format_codepoint(e.codepoint) + ".svg"),
                       report::render_sentiment_bar(e));
    }
    if (!config.html_path.empty()) write_file(config.html_path, report::export_lexicon_html(lexicon));
}

RankedLexicon read_lexicon_file(const std::string& path) {
    auto in = open_input(path);
    return report::read_lexicon_csv(in);
}

RankedLexicon filter_lexicon(const RankedLexicon& lexicon, std::uint64_t min_occurrences) {
    RankedLexicon out;
    out.min_occurrences = min_occurrences;
    for (const auto& e : lexicon.entries)
        if (e.occurrences >= min_occurrences) out.entries.push_back(e);
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].rank = i + 1;
    return out;
}

}  // namespace

void cmd_build(const RunConfig& config, std::ostream& out) {
    const LexiconAccumulator acc = accumulate(config);
    const RankedLexicon lexicon = acc.finish(config.min_occurrences);
    if (config.output.empty()) {
        report::export_lexicon_csv(out, lexicon);
    } else {
        write_file(config.output, report::export_lexicon_csv(lexicon));
        lexicon_summary(out, config, lexicon, acc.texts_with_symbols());
    }
    write_renders(config, lexicon);
}

void cmd_split_stats(const RunConfig& config, std::ostream& out) {
    SentimentCounts with, without;
    if (config.inputs.empty()) throw IoError("no --input given");
    const RangeTable& table = active_symbol_table();
    for (const auto& path : config.inputs) {
        auto in = open_input(path);
        CorpusReader reader(in);
        while (auto r = reader.next()) {
            const auto text = utf8::decode(r->text);
            const bool has = has_symbol_occurrence(text, table);
            (has ? with : without).add(r->label);
        }
    }
    TextTable t({"subset", "negative", "neutral", "positive", "total", "mean", "sd", "sem"});
    t.add_row(distribution_row("with symbols", with));
    t.add_row(distribution_row("without symbols", without));
    print_table(out, config, "Sentiment of texts with and without symbols", t);

    const auto dw = laplace_distribution(with);
    const auto dwo = laplace_distribution(without);
    if (with.total() < 2 || without.total() < 2) {
        print_line(out, config, "Welch's t-test", "not applicable (a subset has fewer than 2 texts)");
    } else {
        write_welch(out, config, "Welch's t-test", {dw.score, dw.sd, with.total()}, {dwo.score, dwo.sd, without.total()});
    }
}

void cmd_agreement(const RunConfig& config, std::ostream& out) {
    const Corpus corpus = load_corpus(config);
    const RangeTable& table = active_symbol_table();

    std::unordered_map<std::string, bool> has_symbol;
    for (const auto& r : corpus) {
        if (has_symbol.contains(r.text_id)) continue;
        const auto text = utf8::decode(r.text);
        has_symbol[r.text_id] = has_symbol_occurrence(text, table);
    }

    const auto pairs = derive_pairs(corpus, config.pair_mode);
    std::vector<AnnotationPair> with, without;
    for (const auto& p : pairs) (has_symbol[p.text_id] ? with : without).push_back(p);
    const CoincidenceMatrix m_with = coincidence_from_pairs(with);
    const CoincidenceMatrix m_without = coincidence_from_pairs(without);

    if (pairs.empty()) {
        print_line(out, config, "annotation pairs", "none (no text was annotated more than once)");
        return;
    }

    auto measure = [](auto&& fn, const CoincidenceMatrix& m) -> std::string {
        try {
            return fixed(fn(m), 3);
        } catch (const DomainError&) {
            return "n/a";
        }
    };
    TextTable t({"measure", "with symbols", "without symbols"});
    t.add_row({"Alpha", measure(alpha_interval, m_with), measure(alpha_interval, m_without)});
    t.add_row({"Accuracy", measure(accuracy, m_with), measure(accuracy, m_without)});
    t.add_row({"F1(-,+)", measure(f1_neg_pos, m_with), measure(f1_neg_pos, m_without)});
    t.add_row({"pairs", std::to_string(with.size()), std::to_string(without.size())});
    const char* mode = config.pair_mode == PairMode::inter ? "inter" : config.pair_mode == PairMode::self ? "self" : "all";
    print_table(out, config, std::string("Annotator agreement (") + mode + " pairs)", t);

    auto matrix_table = [](const CoincidenceMatrix& m) {
        TextTable mt({"label", "negative", "neutral", "positive", "total"});
        for (auto c : kAllLabels) {
            std::vector<std::string> row{std::string(label_name(c))};
            for (auto c2 : kAllLabels) row.push_back(std::to_string(m(c, c2)));
            row.push_back(std::to_string(m.total(c)));
            mt.add_row(std::move(row));
        }
        mt.add_row({"total", std::to_string(m.total(SentimentLabel::negative())),
                    std::to_string(m.total(SentimentLabel::neutral())),
                    std::to_string(m.total(SentimentLabel::positive())), std::to_string(m.grand_total())});
        return mt;
    };
    print_table(out, config, "Coincidence matrix, texts with symbols", matrix_table(m_with));
    print_table(out, config, "Coincidence matrix, texts without symbols", matrix_table(m_without));

    if (!config.output.empty()) {
        std::ostringstream a, b;
        write_coincidence_csv(a, m_with);
        write_coincidence_csv(b, m_without);
        write_file(fs::path(config.output) / "coincidence_with.csv", a.str());
        write_file(fs::path(config.output) / "coincidence_without.csv", b.str());
    }
}

void cmd_positions(const RunConfig& config, std::ostream& out) {
    const LexiconAccumulator acc = accumulate(config);
    const RankedLexicon all = acc.finish(1);
    if (all.empty()) {
        print_line(out, config, "mean position", "n/a (no symbol occurrences)");
        return;
    }
    print_line(out, config, "mean position (all occurrences)", fixed(mean_position(all), 4));

    const RankedLexicon lexicon = acc.finish(config.min_occurrences);
    print_line(out, config, "lexicon entries", std::to_string(lexicon.size()));
    TextTable t({"component", "slope", "intercept", "R^2"});
    const auto n = static_cast<Eigen::Index>(lexicon.size());
    stats::Vector x(n), p_neg(n), p_neut(n), p_pos(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& e = lexicon.entries[static_cast<std::size_t>(i)];
        x(i) = e.mean_position;
        p_neg(i) = e.distribution.p_neg;
        p_neut(i) = e.distribution.p_neut;
        p_pos(i) = e.distribution.p_pos;
    }
    auto fit_row = [&](const std::string& name, const stats::Vector& y) {
        try {
            const auto f = stats::ols_fit(x, y);
            t.add_row({name, signed_fixed(f.slope, 3), signed_fixed(f.intercept, 3), fixed(f.r_squared, 3)});
        } catch (const DomainError&) {
            t.add_row({name, "n/a", "n/a", "n/a"});
        }
    };
    fit_row("negativity", p_neg);
    fit_row("neutrality", p_neut);
    fit_row("positivity", p_pos);
    out << '\n';
    print_table(out, config, "Sentiment components regressed on mean position", t);
}

void cmd_compare_langs(const RunConfig& config, std::ostream& out) {
    const Corpus corpus = load_corpus(config);
    const RankedLexicon reference = config.reference_path.empty()
                                        ? build_lexicon(corpus, config.min_occurrences)
                                        : filter_lexicon(read_lexicon_file(config.reference_path), config.min_occurrences);
    const auto rows = report::language_report(corpus, reference, config.min_occurrences, config.level);
    TextTable t({"language", "texts with symbols", "symbols", "shared", "pearson", "spearman"});
    for (const auto& r : rows) {
        t.add_row({r.language, std::to_string(r.texts_with_symbols), std::to_string(r.distinct_symbols),
                   std::to_string(r.shared_symbols), r.pearson ? starred(r.pearson->r, r.pearson->test) : "n/a",
                   r.spearman ? starred(r.spearman->r, r.spearman->test) : "n/a"});
    }
    print_table(out, config,
                "Per-language scores vs reference (* significant at " + fixed(config.level, 3) + ")", t);
}

void cmd_correlate_counts(const RunConfig& config, std::ostream& out) {
    if (config.counts_path.empty()) throw IoError("no --counts file given");
    const RankedLexicon lexicon = filter_lexicon(read_lexicon_file(single_input(config)), config.min_occurrences);
    auto counts_in = open_input(config.counts_path);
    const SymbolInventory external = read_counts_csv(counts_in);

    SymbolInventory ours;
    for (const auto& e : lexicon.entries) ours.add(e.codepoint, e.occurrences);
    const InventoryDiff diff = inventory_diff(ours, external);

    print_line(out, config, "lexicon symbols", std::to_string(ours.size()));
    print_line(out, config, "external symbols", std::to_string(external.size()));
    print_line(out, config, "common", std::to_string(diff.common.size()));
    print_line(out, config, "only in lexicon", std::to_string(diff.only_a.size()));
    print_line(out, config, "only in external", std::to_string(diff.only_b.size()));

    if (diff.common.size() < 4) {
        print_line(out, config, "pearson", "n/a (fewer than 4 common symbols)");
        print_line(out, config, "spearman", "n/a (fewer than 4 common symbols)");
        return;
    }
    stats::Vector x(static_cast<Eigen::Index>(diff.common.size())), y(x.size());
    Eigen::Index i = 0;
    for (char32_t cp : diff.common) {
        x(i) = static_cast<double>(ours.count(cp));
        y(i) = static_cast<double>(external.count(cp));
        ++i;
    }
    auto line = [&](const std::string& name, auto&& fn) {
        try {
            const double r = fn(x, y);
            const auto test = stats::correlation_significant(r, diff.common.size(), config.level);
            print_line(out, config, name, starred(r, test) + " (p = " + p_value(test.p) + ")");
        } catch (const DomainError& e) {
            print_line(out, config, name, std::string("n/a (") + e.what() + ")");
        }
    };
    line("pearson", [](const auto& a, const auto& b) { return stats::pearson(a, b); });
    line("spearman", [](const auto& a, const auto& b) { return stats::spearman(a, b); });
}

void cmd_render(const RunConfig& config, std::ostream& out) {
    const RankedLexicon lexicon = read_lexicon_file(single_input(config));
    if (config.map_path.empty() && config.bars_dir.empty() && config.html_path.empty()) {
        if (lexicon.empty()) throw DomainError("nothing to render: empty lexicon");
        const std::string svg = report::render_sentiment_map(lexicon);
        if (config.output.empty()) {
            out << svg;
        } else {
            write_file(config.output, svg);
        }
        return;
    }
    write_renders(config, lexicon);
    print_line(out, config, "rendered entries", std::to_string(lexicon.size()));
}

void dispatch(const RunConfig& config, std::ostream& out) {
    if (config.min_occurrences < 1) throw DomainError("--min-occurrences must be >= 1");
    switch (config.command) {
        case Command::build: return cmd_build(config, out);
        case Command::agreement: return cmd_agreement(config, out);
        case Command::split_stats: return cmd_split_stats(config, out);
        case Command::positions: return cmd_positions(config, out);
        case Command::compare_langs: return cmd_compare_langs(config, out);
        case Command::correlate_counts: return cmd_correlate_counts(config, out);
        case Command::render: return cmd_render(config, out);
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Builds and analyzes sentiment lexicons of Unicode pictograph symbols"};
    app.require_subcommand(1);
    RunConfig config;
    std::string pair_mode = "inter";
    std::string format = "text";

    struct Spec {
        const char* name;
        Command command;
        const char* help;
    };
    const Spec specs[] = {
        {"build", Command::build, "Build the lexicon CSV (and optional SVG/HTML) from an annotated corpus"},
        {"agreement", Command::agreement, "Annotator agreement on texts with and without symbols"},
        {"split-stats", Command::split_stats, "Sentiment of texts with and without symbols, Welch's t-test"},
        {"positions", Command::positions, "Symbol positions and sentiment trendlines"},
        {"compare-langs", Command::compare_langs, "Per-language lexicons correlated with a reference"},
        {"correlate-counts", Command::correlate_counts, "Compare lexicon occurrences with an external counts file"},
        {"render", Command::render, "Render the sentiment map and bars from a lexicon CSV"},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--input,-i", config.inputs, "Input file(s)")->required();
        sub->add_option("--output,-o", config.output, "Output file or directory");
        sub->add_option("--min-occurrences", config.min_occurrences, "Drop symbols with fewer occurrences")
            ->check(CLI::PositiveNumber);
        sub->add_option("--pair-mode", pair_mode, "Annotation pairs: inter, self or all")
            ->check(CLI::IsMember({"inter", "self", "all"}));
        sub->add_option("--bins", config.bin_width, "Histogram bin width")->check(CLI::Range(1e-6, 2.0));
        sub->add_option("--level", config.level, "Significance level")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--format", format, "Report format: text or csv")->check(CLI::IsMember({"text", "csv"}));
        sub->add_option("--map", config.map_path, "Write the sentiment map SVG here");
        sub->add_option("--bars", config.bars_dir, "Write one sentiment bar SVG per symbol into this directory");
        sub->add_option("--html", config.html_path, "Write a static HTML ranking page here");
        sub->add_option("--counts", config.counts_path, "External codepoint,count CSV");
        sub->add_option("--reference", config.reference_path, "Reference lexicon CSV");
        sub->add_option("--shards", config.shards, "Parallel accumulation shards")->check(CLI::Range(1, 256));
        sub->callback([&config, command = spec.command] { config.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    config.pair_mode = *parse_pair_mode(pair_mode);
    config.format = format == "csv" ? OutputFormat::csv : OutputFormat::text;

    try {
        dispatch(config, out);
        return kOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const EncodingError& e) {
        err << "encoding error: " << e.what() << '\n';
        return kInputError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kInputError;
    } catch (const fs::filesystem_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace lexirank::cli
