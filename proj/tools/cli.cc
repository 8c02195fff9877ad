// Copyright 2026 The nocomments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "CLI11.hpp"
#include "nocomments/audit.h"
#include "nocomments/corpus.h"
#include "nocomments/encoding.h"
#include "nocomments/error.h"
#include "nocomments/error_report.h"
#include "nocomments/graph_export.h"
#include "nocomments/linkgraph.h"
#include "nocomments/outputs.h"
#include "nocomments/pipeline.h"
#include "nocomments/slicer.h"
#include "nocomments/textstats.h"

namespace nocomments::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string corpus;
  std::string manifest;
  std::string encoding;
  std::string out;
  std::string edges;
  std::string stopwords;
  bool no_stopwords = false;
  std::string format = "gexf";
  unsigned jobs = 1;
  bool include_comments = false;
  bool direct = false;
  bool export_docs = false;
  std::size_t top_k = 0;
  std::size_t sample_n = 0;
  std::uint64_t seed = 0;
  NoiseThresholds thresholds;
};

void require_file(const std::string& path, std::string_view what) {
  if (!fs::is_regular_file(path)) {
    throw Error(std::string(what) + " not found: " + path);
  }
}

void require_dir(const std::string& path, std::string_view what) {
  if (!fs::is_directory(path)) {
    throw Error(std::string(what) + " not found: " + path);
  }
}

// Checks every input path up front and creates the output root. The output
// root may not lie inside the corpus.
void validate(const RunConfig& cfg, bool needs_corpus, bool needs_encoding) {
  require_file(cfg.manifest, "manifest");
  if (needs_corpus) require_dir(cfg.corpus, "corpus root");
  if (needs_encoding) require_file(cfg.encoding, "encoding file");
  if (!cfg.edges.empty()) require_file(cfg.edges, "edge table");
  if (!cfg.stopwords.empty()) require_file(cfg.stopwords, "stopword file");

  if (needs_corpus) {
    const fs::path corpus = fs::weakly_canonical(cfg.corpus);
    const fs::path out = fs::weakly_canonical(cfg.out);
    auto [c, o] = std::mismatch(corpus.begin(), corpus.end(), out.begin(),
                                out.end());
    if (c == corpus.end()) {
      throw Error("output root " + cfg.out +
                  " lies inside the corpus root; refusing to write there");
    }
  }
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec || !fs::is_directory(cfg.out)) {
    throw Error("cannot create output root " + cfg.out);
  }
}

struct Inputs {
  Corpus corpus;
  EncodingFile rules;
};

Inputs load_inputs(const RunConfig& cfg) {
  Inputs in;
  in.corpus = load_corpus(cfg.corpus, cfg.manifest);
  in.rules = parse_encoding_file(cfg.encoding);
  require_rules_for(in.rules, in.corpus.registry);
  return in;
}

StopwordList load_stopwords(const RunConfig& cfg) {
  if (cfg.no_stopwords) return StopwordList();
  if (!cfg.stopwords.empty()) return StopwordList::from_file(cfg.stopwords, "custom");
  return StopwordList::french();
}

void write_error_report(const fs::path& out, const ErrorReport& report) {
  write_file(out / "errors.csv", report.errors_csv());
  write_file(out / "error_summary.csv", report.summary_csv());
}

void print_report_summary(std::ostream& os, const ErrorReport& report) {
  os << "slice errors: MissingOpening="
     << report.count(SliceErrorKind::kMissingOpening)
     << " MissingClosure=" << report.count(SliceErrorKind::kMissingClosure)
     << " MultipleOpenings="
     << report.count(SliceErrorKind::kMultipleOpenings) << "\n";
  for (const std::string& site : report.uniform_size_warnings()) {
    os << "warning: every comment section of site '" << site
       << "' has the same size; extraction failed or the site has no "
          "comments\n";
  }
}

int slice_rough(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true, true);
  const Inputs in = load_inputs(cfg);
  const fs::path out(cfg.out);
  const std::vector<SlicedPage> sliced =
      rough_slice_all(in.corpus, in.rules, cfg.jobs);

  parallel_for(sliced.size(), cfg.jobs, [&](std::size_t i) {
    const Page& page = in.corpus.pages[i];
    write_file(out / "stripped" / page.page_path, strip(page, sliced[i]));
    const std::vector<std::string> sections = extract_sections(page, sliced[i]);
    for (std::size_t k = 0; k < sections.size(); ++k) {
      write_file(out / "sections" / section_file_name(page.page_path, k),
                 sections[k]);
    }
  });

  const ErrorReport report = build_error_report(sliced, {});
  write_error_report(out, report);
  std::size_t sections = 0;
  for (const SlicedPage& s : sliced) sections += s.comment_section_spans.size();
  os << "pages: " << sliced.size() << ", comment sections: " << sections
     << "\n";
  print_report_summary(os, report);
  return kExitOk;
}

int slice_precise(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true, true);
  const Inputs in = load_inputs(cfg);
  const fs::path out(cfg.out);
  const std::vector<SlicedPage> sliced =
      rough_slice_all(in.corpus, in.rules, cfg.jobs);

  std::vector<std::optional<PageComments>> per_page(sliced.size());
  parallel_for(sliced.size(), cfg.jobs, [&](std::size_t i) {
    const Page& page = in.corpus.pages[i];
    const EncodingRule& rule = *in.rules.find(page.site_id);
    if (!rule.supports_precise()) return;
    per_page[i] = cfg.direct ? precise_slice_page(page, rule)
                             : precise_slice_sections(page, sliced[i], rule);
  });

  std::vector<Comment> comments;
  CommentsPerPage stats;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < per_page.size(); ++i) {
    if (!per_page[i]) {
      ++skipped;
      continue;
    }
    const Page& page = in.corpus.pages[i];
    stats[{page.site_id, page.page_path}] =
        PageCommentStats{per_page[i]->comments.size(),
                         per_page[i]->short_sections};
    comments.insert(comments.end(), per_page[i]->comments.begin(),
                    per_page[i]->comments.end());
  }
  write_file(out / "comments.jsonl", comments_jsonl(comments));
  const ErrorReport report = build_error_report(sliced, stats);
  write_error_report(out, report);

  std::size_t short_sections = 0;
  for (const auto& [key, s] : stats) short_sections += s.short_sections;
  os << "comments: " << comments.size() << " from "
     << (per_page.size() - skipped) << " pages";
  if (skipped > 0) os << " (" << skipped << " pages without comment_pattern)";
  os << "\n";
  if (short_sections > 0) {
    os << "sections shorter than empty_size: " << short_sections << "\n";
  }
  print_report_summary(os, report);
  return kExitOk;
}

std::vector<Edge> corpus_edges(const RunConfig& cfg, std::ostream& os) {
  const Inputs in = load_inputs(cfg);
  const std::vector<SlicedPage> sliced =
      rough_slice_all(in.corpus, in.rules, cfg.jobs);
  LinkDiagnostics diag;
  std::vector<Edge> edges =
      extract_all_links(in.corpus, sliced, cfg.jobs, &diag);
  os << "anchors: " << diag.anchors << ", registered-site links: "
     << edges.size() << ", external: " << diag.external
     << ", relative: " << diag.relative << ", malformed: " << diag.malformed
     << "\n";
  return edges;
}

// Edges from --edges when given, otherwise by slicing the corpus.
std::vector<Edge> load_edges(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.edges.empty()) {
    return parse_edges_csv(read_file(cfg.edges), cfg.edges);
  }
  return corpus_edges(cfg, os);
}

void validate_edge_source(const RunConfig& cfg) {
  const bool from_corpus = cfg.edges.empty();
  if (from_corpus && (cfg.corpus.empty() || cfg.encoding.empty())) {
    throw CLI::ValidationError(
        "either --edges or both --corpus and --encoding are required");
  }
  validate(cfg, from_corpus, from_corpus);
}

int links(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true, true);
  const std::vector<Edge> edges = corpus_edges(cfg, os);
  write_file(fs::path(cfg.out) / "edges.csv", edges_csv(edges));
  return kExitOk;
}

int crosstab_cmd(const RunConfig& cfg, std::ostream& os) {
  validate_edge_source(cfg);
  const SiteRegistry registry = load_registry(cfg.manifest);
  const std::vector<Edge> edges = load_edges(cfg, os);
  const std::vector<CrossTabRow> rows = crosstab(edges, registry);
  const std::string table = crosstab_csv(rows);
  write_file(fs::path(cfg.out) / "crosstab.csv", table);
  os << table;
  return kExitOk;
}

int graph_cmd(const RunConfig& cfg, std::ostream& os) {
  const auto format = graph_format_from_string(cfg.format);
  validate_edge_source(cfg);
  const SiteRegistry registry = load_registry(cfg.manifest);
  const std::vector<Edge> edges = load_edges(cfg, os);
  const MutualGraph graph = mutual_graph(edges, cfg.include_comments, registry);
  const auto comps = components(graph);

  const std::string stem =
      cfg.include_comments ? "graph_with_comments" : "graph_without_comments";
  const fs::path out(cfg.out);
  export_graph(graph, registry, out / (stem + "." + cfg.format), *format);
  write_file(out / (stem + "_components.csv"), components_csv(comps, registry));
  os << "nodes: " << graph.nodes.size() << ", mutual edges: "
     << graph.edges.size() << ", components: " << comps.size() << "\n";
  return kExitOk;
}

int tokens_cmd(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true, true);
  const Inputs in = load_inputs(cfg);
  const StopwordList stopwords = load_stopwords(cfg);
  const std::vector<SlicedPage> sliced =
      rough_slice_all(in.corpus, in.rules, cfg.jobs);

  const std::size_t n = in.corpus.pages.size();
  std::vector<TokenizedDocument> with_docs(n);
  std::vector<TokenizedDocument> without_docs(n);
  parallel_for(n, cfg.jobs, [&](std::size_t i) {
    const Page& page = in.corpus.pages[i];
    with_docs[i] = {page.site_id, page.page_path,
                    tokenize(page.raw_bytes, stopwords)};
    without_docs[i] = {
        page.site_id, page.page_path,
        tokenize_pieces(span_views(page.raw_bytes, sliced[i].main_spans),
                        stopwords)};
  });

  TokenTable with_table;
  TokenTable without_table;
  for (std::size_t i = 0; i < n; ++i) {
    with_table.add(with_docs[i].tokens);
    without_table.add(without_docs[i].tokens);
  }
  const fs::path out(cfg.out);
  write_file(out / "tokens_with_comments.csv",
             frequency_csv(with_table, cfg.top_k));
  write_file(out / "tokens_without_comments.csv",
             frequency_csv(without_table, cfg.top_k));
  if (cfg.export_docs) {
    write_file(out / "docs_with_comments.jsonl", documents_jsonl(with_docs));
    write_file(out / "docs_without_comments.jsonl",
               documents_jsonl(without_docs));
  }
  os << "tokens with comments: " << with_table.total
     << ", without comments: " << without_table.total << "\n";
  if (!with_table.empty() || !without_table.empty()) {
    os << "jensen-shannon divergence (bits): "
       << frequency_divergence(with_table, without_table) << "\n";
  }
  return kExitOk;
}

int audit_cmd(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true, true);
  const Inputs in = load_inputs(cfg);
  const StopwordList stopwords = load_stopwords(cfg);
  const std::vector<const Page*> sample =
      sample_corpus(in.corpus, cfg.sample_n, cfg.seed);
  NoiseMetrics metrics =
      measure_noise(sample, in.rules, in.corpus.registry, stopwords, cfg.jobs);
  metrics.seed = cfg.seed;
  const SliceRecommendation recommendation = decide(metrics, cfg.thresholds);

  const fs::path out(cfg.out);
  const std::string text = audit_text(metrics, recommendation);
  write_file(out / "audit.txt", text);
  write_file(out / "audit.csv", audit_csv(metrics, recommendation));
  write_file(out / "audit_sites.csv", audit_sites_csv(metrics));
  os << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Remove or extract comment sections from crawled websites and "
               "measure the bias they induce.",
               "nocomments"};
  app.require_subcommand(1);
  app.fallthrough(false);

  RunConfig cfg;
  cfg.jobs = default_jobs();

  auto inputs = [&](CLI::App* sub, bool corpus_required) {
    auto* corpus = sub->add_option("--corpus", cfg.corpus, "Corpus root directory");
    sub->add_option("--manifest", cfg.manifest, "Corpus manifest CSV")->required();
    auto* encoding = sub->add_option("--encoding", cfg.encoding, "Encoding file CSV");
    sub->add_option("--out", cfg.out, "Output root directory")->required();
    sub->add_option("--jobs", cfg.jobs,
                    "Worker threads (default: NOCOMMENTS_JOBS or CPU count)")
        ->check(CLI::PositiveNumber);
    if (corpus_required) {
      corpus->required();
      encoding->required();
    }
  };
  auto stopword_options = [&](CLI::App* sub) {
    sub->add_option("--stopwords", cfg.stopwords,
                    "Stopword file, one token per line (default: bundled French list)");
    sub->add_flag("--no-stopwords", cfg.no_stopwords, "Keep stopwords");
  };

  CLI::App* rough = app.add_subcommand(
      "slice-rough", "Write the stripped corpus, extracted sections and the error report");
  inputs(rough, true);

  CLI::App* precise = app.add_subcommand(
      "slice-precise", "Write one JSON line per comment plus the error report");
  inputs(precise, true);
  precise->add_flag("--direct", cfg.direct,
                    "Precise-slice whole pages instead of rough-sliced sections");

  CLI::App* links_sub = app.add_subcommand(
      "links", "Write the registered-site edge table (edges.csv)");
  inputs(links_sub, true);

  CLI::App* crosstab_sub = app.add_subcommand(
      "crosstab", "Write inside/outside link counts per label pair (crosstab.csv)");
  inputs(crosstab_sub, false);
  crosstab_sub->add_option("--edges", cfg.edges,
                           "Use an existing edges.csv instead of the corpus");

  CLI::App* graph_sub = app.add_subcommand(
      "graph", "Export the mutual-link graph and its connected components");
  inputs(graph_sub, false);
  graph_sub->add_option("--edges", cfg.edges,
                        "Use an existing edges.csv instead of the corpus");
  graph_sub->add_flag("--include-comments", cfg.include_comments,
                      "Count links located in comment sections");
  graph_sub->add_option("--format", cfg.format, "gexf or graphml")
      ->check(CLI::IsMember({"gexf", "graphml"}));

  CLI::App* tokens_sub = app.add_subcommand(
      "tokens", "Write token frequency tables with and without comments");
  inputs(tokens_sub, true);
  stopword_options(tokens_sub);
  tokens_sub->add_option("--top-k", cfg.top_k, "Rows per table (0: all)");
  tokens_sub->add_flag("--export-docs", cfg.export_docs,
                       "Also write per-page token lists as JSON lines");

  CLI::App* audit_sub = app.add_subcommand(
      "audit", "Sample the corpus, measure comment noise and recommend slicing or not");
  inputs(audit_sub, true);
  stopword_options(audit_sub);
  audit_sub->add_option("--sample-n", cfg.sample_n, "Pages to sample")
      ->required()
      ->check(CLI::PositiveNumber);
  audit_sub->add_option("--seed", cfg.seed, "Sampling seed");
  audit_sub->add_option("--threshold-link", cfg.thresholds.link_noise,
                        "Maximum acceptable link_noise")
      ->check(CLI::NonNegativeNumber);
  audit_sub->add_option("--threshold-token", cfg.thresholds.token_noise,
                        "Maximum acceptable token_noise")
      ->check(CLI::NonNegativeNumber);
  audit_sub->add_option("--threshold-divergence", cfg.thresholds.text_divergence,
                        "Maximum acceptable text_divergence (bits)")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"nocomments"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitUsage;
  }

  try {
    if (rough->parsed()) return slice_rough(cfg, out);
    if (precise->parsed()) return slice_precise(cfg, out);
    if (links_sub->parsed()) return links(cfg, out);
    if (crosstab_sub->parsed()) return crosstab_cmd(cfg, out);
    if (graph_sub->parsed()) return graph_cmd(cfg, out);
    if (tokens_sub->parsed()) return tokens_cmd(cfg, out);
    if (audit_sub->parsed()) return audit_cmd(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "nocomments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "nocomments: " << e.what() << "\n";
    return kExitFatal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace nocomments::cli
