// Copyright 2026 The metricdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metricdim/constructions.h"
#include "metricdim/distances.h"
#include "metricdim/graph.h"
#include "metricdim/graph6.h"
#include "metricdim/parallel.h"
#include "metricdim/solver.h"
#include "metricdim/verifier.h"

namespace metricdim::cli {
namespace {

constexpr const char* kFooter = R"(
Input: --input FILE, --edges "n m / u v / ...", or standard input.
Lines starting with '#' are comments. With --format auto a line starting
with a digit begins an edge list ("n m" then m lines "u v"); anything else
is graph6, one graph per line.

Audit records are tab-separated:
  graph6 n k d g unique dim_vs_diameter order_bound unique_no_twins
  unique_diameter_bound unique_girth_bound unique_half_order [extremal]
with g = inf for trees and verdicts pass, fail or na. Unreadable graphs
give "text error message". A summary block follows.

Exit status: 0 success, 1 a check failed (one line starting "FAIL\t" is
printed), 2 usage or input error. METRICDIM_JOBS sets the default --jobs.)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kAuto, kGraph6, kEdgeList };

struct Config {
  std::string input;
  std::string edges;
  Format format = Format::kAuto;
  int jobs = 1;

  std::size_t max_bases = 0;
  bool randomly = false;

  int all_connected = 0;
  bool extremal = false;
  bool fail_fast = false;

  std::string family;
  int k = 0;
  Format emit = Format::kGraph6;

  int max_n = 0;
  bool dedup = false;
  bool skip_below_bound = false;
  bool stream = false;
  std::uint64_t skip = 0;
  std::uint64_t checkpoint_every = 0;

  int m = 0;
  int u = -1;
};

// Splits a text stream into graphs. Parse failures become items that carry
// an error, so streams keep going.
class GraphReader {
 public:
  GraphReader(std::istream& in, Format format) : in_(in), format_(format) {}

  bool Next(StreamItem& item) {
    item = StreamItem{};
    std::string line;
    if (!NextLine(line)) return false;
    if (format_ == Format::kAuto) {
      format_ = std::isdigit(static_cast<unsigned char>(line[0]))
                    ? Format::kEdgeList
                    : Format::kGraph6;
    }
    if (format_ == Format::kGraph6) {
      item.text = line;
      try {
        item.graph = ParseGraph6(line);
      } catch (const Graph6Error& e) {
        item.error = Where() + " offset " + std::to_string(e.offset()) +
                     ": " + e.what();
      } catch (const GraphError& e) {
        item.error = Where() + ": " + e.what();
      }
      return true;
    }
    ReadEdgeList(line, item);
    return true;
  }

  std::uint64_t line_number() const { return line_number_; }

 private:
  std::string Where() const { return "line " + std::to_string(line_number_); }

  // Skips blank and comment lines; strips a trailing carriage return.
  bool NextLine(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  static std::size_t CountTokens(const std::string& s) {
    std::istringstream tokens(s);
    std::size_t count = 0;
    for (std::string t; tokens >> t;) ++count;
    return count;
  }

  void ReadEdgeList(const std::string& header, StreamItem& item) {
    const std::string where = Where();
    std::istringstream head(header);
    long long n = 0;
    long long m = 0;
    std::string text = header;
    if (head >> n >> m && m >= 0) {
      const std::size_t need = 2 + 2 * static_cast<std::size_t>(m);
      std::size_t have = CountTokens(header);
      std::string line;
      while (have < need && NextLine(line)) {
        have += CountTokens(line);
        text += "\n" + line;
      }
    }
    try {
      item.graph = ParseEdgeList(text);
      item.text = EmitGraph6(*item.graph);
    } catch (const GraphError& e) {
      item.text = header;
      item.error = where + ": " + e.what();
    }
  }

  std::istream& in_;
  Format format_;
  std::uint64_t line_number_ = 0;
};

// Opens the configured input source.
class Source {
 public:
  Source(const Config& config, std::istream& standard_input) {
    const int given = !config.input.empty() + !config.edges.empty();
    if (given > 1) throw UsageError("give at most one of --input and --edges");
    if (!config.edges.empty()) {
      std::string text = config.edges;
      std::replace(text.begin(), text.end(), '/', '\n');
      owned_ = std::make_unique<std::istringstream>(text);
      format_ = Format::kEdgeList;
    } else if (!config.input.empty()) {
      auto file = std::make_unique<std::ifstream>(config.input);
      if (!*file) throw UsageError("cannot open " + config.input);
      owned_ = std::move(file);
    }
    stream_ = owned_ ? owned_.get() : &standard_input;
    if (format_ == Format::kAuto) format_ = config.format;
  }

  GraphReader Reader() { return GraphReader(*stream_, format_); }

  // Every graph of the input; the first unreadable one is a usage error.
  std::vector<Graph> Graphs() {
    GraphReader reader = Reader();
    std::vector<Graph> graphs;
    for (StreamItem item; reader.Next(item);) {
      if (!item.error.empty()) throw UsageError(item.error);
      graphs.push_back(*item.graph);
    }
    if (graphs.empty()) throw UsageError("no graph in input");
    return graphs;
  }

  Graph SingleGraph() {
    std::vector<Graph> graphs = Graphs();
    if (graphs.size() != 1) {
      throw UsageError("expected one graph, got " +
                       std::to_string(graphs.size()));
    }
    return graphs.front();
  }

 private:
  std::unique_ptr<std::istream> owned_;
  std::istream* stream_ = nullptr;
  Format format_ = Format::kAuto;
};

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string GirthText(const std::optional<int>& g) {
  return g ? std::to_string(*g) : "inf";
}

void Emit(const Graph& g, Format format, std::ostream& out) {
  if (format == Format::kEdgeList) {
    out << ToEdgeList(g);
  } else {
    out << EmitGraph6(g) << "\n";
  }
}

int RunDim(const Config& config, std::istream& in, std::ostream& out) {
  Source source(config, in);
  for (const Graph& g : source.Graphs()) {
    const MetricBasisSolver solver(g);
    out << "n=" << g.order() << " diameter=" << solver.distances().Diameter()
        << " girth=" << GirthText(Girth(g))
        << " dimension=" << solver.Dimension() << "\n";
  }
  return kExitOk;
}

int RunBases(const Config& config, std::istream& in, std::ostream& out) {
  Source source(config, in);
  const std::vector<Graph> graphs = source.Graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs.size() > 1) {
      out << "# graph " << i << " " << EmitGraph6(graphs[i]) << "\n";
    }
    const BasisReport r = AllBases(
        graphs[i],
        {.max_bases = config.max_bases, .evaluate_randomly = config.randomly});
    out << "dimension=" << r.dimension << " bases=" << r.bases.size()
        << " unique=" << Bool(r.unique);
    if (!r.complete) out << " complete=false";
    out << "\n";
    if (r.randomly_k) out << "randomly_k=" << Bool(*r.randomly_k) << "\n";
    for (VertexSet b : r.bases) out << "basis\t" << b.ToString() << "\n";
  }
  return kExitOk;
}

std::string RecordLine(const AuditRecord& r) {
  if (!r.error.empty()) return r.graph6 + "\terror\t" + r.error;
  const GraphProfile& p = r.report->profile;
  std::string line = r.graph6 + "\t" + std::to_string(p.order) + "\t" +
                     std::to_string(p.dimension) + "\t" +
                     std::to_string(p.diameter) + "\t" + GirthText(p.girth) +
                     "\t" + Bool(p.unique);
  for (const CheckResult& c : r.report->checks) {
    line += "\t";
    line += VerdictName(c.verdict);
  }
  return line;
}

std::string FailLine(const AuditRecord& r) {
  for (const CheckResult& c : r.report->checks) {
    if (c.verdict == Verdict::kFail) {
      return "FAIL\t" + r.graph6 + "\t" + std::string(CheckName(c.id)) +
             "\t" + c.detail;
    }
  }
  return "FAIL\t" + r.graph6;
}

int RunAudit(const Config& config, std::istream& in, std::ostream& out) {
  const AuditOptions options{.fail_fast = config.fail_fast,
                             .extremal = config.extremal,
                             .jobs = config.jobs};
  out << "# graph6\tn\tk\td\tg\tunique";
  const std::size_t checks = config.extremal ? kCheckCount : kCoreCheckCount;
  for (std::size_t i = 0; i < checks; ++i) {
    out << "\t" << CheckName(static_cast<CheckId>(i));
  }
  out << "\n";

  std::optional<std::string> first_failure;
  const RecordSink sink = [&](const AuditRecord& r) {
    out << RecordLine(r) << "\n";
    if (!first_failure && r.error.empty() && !r.report->Passed()) {
      first_failure = FailLine(r);
    }
  };
  AuditSummary summary;
  if (config.all_connected > 0) {
    if (!config.input.empty() || !config.edges.empty()) {
      throw UsageError("--all-connected takes no input graphs");
    }
    out << "# all connected labeled graphs on " << config.all_connected
        << " vertices; only failing records are listed\n";
    summary = AuditAllConnected(config.all_connected, options, sink);
  } else {
    Source source(config, in);
    GraphReader reader = source.Reader();
    std::vector<StreamItem> items;
    for (StreamItem item; reader.Next(item);) items.push_back(item);
    summary = AuditStream(items, options, sink);
  }
  if (first_failure) out << *first_failure << "\n";
  out << "summary\tgraphs=" << summary.graphs << "\terrors=" << summary.errors
      << "\tfailed=" << summary.failed_graphs
      << "\tstopped_early=" << Bool(summary.stopped_early) << "\n";
  for (std::size_t i = 0; i < checks; ++i) {
    const CheckTally& t = summary.tallies[i];
    out << "tally\t" << CheckName(static_cast<CheckId>(i))
        << "\tpass=" << t.pass << "\tfail=" << t.fail
        << "\tna=" << t.not_applicable << "\n";
  }
  if (summary.failed_graphs > 0) return kExitCheckFailed;
  if (summary.errors > 0) return kExitUsage;
  return kExitOk;
}

ConstructedGraph Build(const Config& config) {
  const std::string& f = config.family;
  const auto need_k = [&] {
    if (config.k == 0) throw UsageError("--family " + f + " needs --k");
    return config.k;
  };
  if (f == "3k") return Construct3k(need_k());
  if (f == "kplus3k") return ConstructKPlus3k(need_k());
  if (f == "fivehalves") return ConstructFiveHalves(need_k());
  if (f == "order9") return ConstructOrder9();
  if (f == "base6") return FindBase6();
  throw UsageError("unknown family " + f);
}

int RunConstruct(const Config& config, std::ostream& out) {
  const ConstructedGraph c = Build(config);
  out << "# " << c.Metadata() << "\n";
  Emit(c.graph, config.emit, out);
  return kExitOk;
}

void PrintN0(const N0Result& r, const std::string& mode, std::ostream& out) {
  out << "# k=" << r.k << " mode=" << mode << "\n";
  out << "order\tgraphs\thits\texample\n";
  for (const N0Row& row : r.rows) {
    out << row.order << "\t";
    if (row.skipped) {
      out << "skipped\tskipped\t-\n";
      continue;
    }
    out << row.graphs << "\t" << row.hits << "\t"
        << row.example.value_or("-") << "\n";
  }
  if (r.n0) {
    out << "n0=" << *r.n0 << "\n";
  } else {
    out << "n0=none max_n=" << r.max_order << "\n";
  }
}

int RunSearchN0(const Config& config, std::istream& in, std::ostream& out,
                std::ostream& err) {
  N0Result result;
  std::string mode;
  if (config.stream) {
    Source source(config, in);
    GraphReader reader = source.Reader();
    N0Tally tally(config.k);
    std::uint64_t seen = 0;
    for (StreamItem item; reader.Next(item);) {
      ++seen;
      if (seen <= config.skip) continue;
      if (!item.error.empty()) {
        err << "# checkpoint graphs=" << seen - 1 << "\n";
        throw UsageError(item.error);
      }
      tally.Add(*item.graph);
      if (config.checkpoint_every > 0 && seen % config.checkpoint_every == 0) {
        err << "# checkpoint graphs=" << seen << "\n";
      }
    }
    result = tally.Result();
    mode = config.skip > 0 ? "stream skip=" + std::to_string(config.skip)
                           : "stream";
  } else {
    if (config.max_n == 0) throw UsageError("search-n0 needs --max-n");
    result = SearchN0(config.k, config.max_n,
                      {.dedup = config.dedup,
                       .skip_below_bound = config.skip_below_bound,
                       .jobs = config.jobs});
    mode = config.dedup ? "classes" : "labeled";
  }
  PrintN0(result, mode, out);
  if (!result.consistent) {
    out << "FAIL\tn0\tn0=" << *result.n0 << " <= 2k=" << 2 * result.k << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int RunExtend(const Config& config, std::istream& in, std::ostream& out) {
  Source source(config, in);
  const Graph g = source.SingleGraph();
  const BasisReport r = AllBases(g, {.max_bases = 2});
  if (!r.unique || r.single_vertex) {
    throw UsageError("input graph is not uniquely dimensional");
  }
  ConstructedGraph base{
      .graph = g,
      .designated_basis = r.bases.front(),
      .predicted = {},
      .family = "input",
      .k = r.dimension,
  };
  base.predicted.order = g.order();
  base.predicted.dimension = r.dimension;
  const Vertex u = config.u >= 0 ? config.u : base.designated_basis.Min();
  const ConstructedGraph c = ExtendByPath(base, u, config.m);
  out << "# " << c.Metadata() << " u=" << u << "\n";
  Emit(c.graph, config.emit, out);
  const BasisReport check = AllBases(c.graph, {.max_bases = 2});
  const bool ok = check.unique && check.dimension == c.k &&
                  check.bases.front() == c.designated_basis;
  out << "# verified dimension=" << check.dimension
      << " bases=" << check.bases.size() << " unique=" << Bool(check.unique)
      << "\n";
  if (!ok) {
    out << "FAIL\t" << EmitGraph6(c.graph) << "\textend\texpected basis {"
        << c.designated_basis.ToString() << "} as the only basis\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int RunConvert(const Config& config, std::istream& in, std::ostream& out) {
  Source source(config, in);
  for (const Graph& g : source.Graphs()) Emit(g, config.emit, out);
  return kExitOk;
}

const std::map<std::string, Format> kFormats = {
    {"auto", Format::kAuto},
    {"graph6", Format::kGraph6},
    {"edgelist", Format::kEdgeList},
};
const std::map<std::string, Format> kEmitFormats = {
    {"graph6", Format::kGraph6},
    {"edgelist", Format::kEdgeList},
};

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config config;
  config.jobs = DefaultJobs();

  CLI::App app{"Metric dimension, metric bases and uniquely dimensional graphs",
               "metricdim"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", config.input, "Read graphs from FILE");
  app.add_option("--edges", config.edges,
                 "Inline edge list, '/' separates lines");
  app.add_option("--format", config.format, "auto, graph6 or edgelist")
      ->transform(CLI::CheckedTransformer(kFormats));
  app.add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* dim =
      app.add_subcommand("dim", "Print n, diameter, girth, dimension");
  CLI::App* bases = app.add_subcommand("bases", "List every metric basis");
  bases->add_option("--max-bases", config.max_bases,
                    "Stop after this many bases, 0 for all");
  bases->add_flag("--randomly", config.randomly,
                  "Also decide whether every k vertices resolve");

  CLI::App* audit = app.add_subcommand("audit", "Check the bounds per graph");
  audit->add_option("--all-connected", config.all_connected,
                    "Audit every connected labeled graph on N vertices")
      ->check(CLI::Range(2, 8));
  audit->add_flag("--extremal", config.extremal,
                  "Add the extremal-order check");
  audit->add_flag("--fail-fast", config.fail_fast,
                  "Stop at the first failing graph");

  CLI::App* construct =
      app.add_subcommand("construct", "Build a family member");
  construct
      ->add_option("--family", config.family,
                   "3k, kplus3k, order9, base6 or fivehalves")
      ->required();
  construct->add_option("--k", config.k, "Dimension parameter");
  construct->add_option("--emit", config.emit, "graph6 or edgelist")
      ->transform(CLI::CheckedTransformer(kEmitFormats));

  CLI::App* search = app.add_subcommand(
      "search-n0", "Count uniquely k-dimensional graphs per order");
  search->add_option("--k", config.k, "Dimension")->required()->check(
      CLI::PositiveNumber);
  search->add_option("--max-n", config.max_n, "Largest order to enumerate");
  search->add_flag("--dedup", config.dedup,
                   "One graph per isomorphism class");
  search->add_flag("--skip-below-bound", config.skip_below_bound,
                   "Skip orders below 2k+1");
  search->add_flag("--stream", config.stream,
                   "Tally graphs from the input instead of enumerating");
  search->add_option("--skip", config.skip,
                     "Stream mode: ignore the first N graphs");
  search->add_option("--checkpoint-every", config.checkpoint_every,
                     "Stream mode: report progress every N graphs");

  CLI::App* extend = app.add_subcommand(
      "extend", "Attach a path to a uniquely dimensional graph");
  extend->add_option("--m", config.m, "Path length")->required();
  extend->add_option("--u", config.u,
                     "Basis vertex the path end is farthest from");
  extend->add_option("--emit", config.emit, "graph6 or edgelist")
      ->transform(CLI::CheckedTransformer(kEmitFormats));

  CLI::App* convert = app.add_subcommand("convert", "Transcode graphs");
  convert->add_option("--to", config.emit, "graph6 or edgelist")
      ->required()
      ->transform(CLI::CheckedTransformer(kEmitFormats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (config.stream && config.max_n != 0) {
      throw UsageError("--stream and --max-n are exclusive");
    }
    if (*dim) return RunDim(config, in, out);
    if (*bases) return RunBases(config, in, out);
    if (*audit) return RunAudit(config, in, out);
    if (*construct) return RunConstruct(config, out);
    if (*search) return RunSearchN0(config, in, out, err);
    if (*extend) return RunExtend(config, in, out);
    if (*convert) return RunConvert(config, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metricdim::cli
