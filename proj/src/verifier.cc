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

#include "metricdim/verifier.h"

#include <algorithm>
#include <stdexcept>

#include "metricdim/distances.h"
#include "metricdim/enumerate.h"
#include "metricdim/graph6.h"
#include "metricdim/parallel.h"
#include "metricdim/twins.h"

namespace metricdim {
namespace {

constexpr std::array<std::string_view, kCheckCount> kCheckNames = {
    "dim_vs_diameter",       "order_bound",       "unique_no_twins",
    "unique_diameter_bound", "unique_girth_bound", "unique_half_order",
    "extremal",
};

// base^exp, saturating at `cap`.
std::int64_t PowerCapped(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t p = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && p > cap / base) return cap;
    p *= base;
  }
  return std::min(p, cap);
}

std::string Numbers(int beta, int n, int d) {
  return "beta=" + std::to_string(beta) + " n=" + std::to_string(n) +
         " d=" + std::to_string(d);
}

CheckResult Bound(CheckId id, bool holds, std::string detail) {
  return {id, holds ? Verdict::kPass : Verdict::kFail, std::move(detail)};
}

CheckResult NotApplicable(CheckId id, std::string reason) {
  return {id, Verdict::kNotApplicable, std::move(reason)};
}

// Everything the checks need, computed once per graph.
class Facts {
 public:
  explicit Facts(const Graph& g) : solver_(Checked(g)) {
    basis_report_ = solver_.Bases({.max_bases = 2});
    girth_ = Girth(g);
  }

  int n() const { return solver_.graph().order(); }
  int beta() const { return basis_report_.dimension; }
  int d() const { return solver_.distances().Diameter(); }
  bool unique() const { return basis_report_.unique; }

  GraphProfile Profile() const {
    return {
        .order = n(),
        .dimension = beta(),
        .diameter = d(),
        .girth = girth_,
        .twin_class_sizes = solver_.twins().Sizes(),
        .unique = unique(),
    };
  }

  CheckResult Run(CheckId id) const {
    const std::string numbers = Numbers(beta(), n(), d());
    switch (id) {
      case CheckId::kDimVsDiameter:
        return Bound(id, beta() <= n() - d(), numbers);
      case CheckId::kOrderBound: {
        const std::int64_t reach = PowerCapped(d(), beta(), 1'000'000);
        return Bound(id, n() <= beta() + reach,
                     numbers + " d^beta=" + std::to_string(reach));
      }
      case CheckId::kUniqueNoTwins: {
        if (!unique()) return NotApplicable(id, "not uniquely dimensional");
        for (VertexSet c : solver_.twins().classes) {
          if (c.size() >= 2) {
            VertexSet rest = c;
            rest.Erase(c.Min());
            return Bound(id, false,
                         "twins=(" + std::to_string(c.Min()) + "," +
                             std::to_string(rest.Min()) + ")");
          }
        }
        return Bound(id, true, "twins=none");
      }
      case CheckId::kUniqueDiameterBound:
        if (!unique()) return NotApplicable(id, "not uniquely dimensional");
        return Bound(id, beta() <= n() - d() - 2, numbers);
      case CheckId::kUniqueGirthBound: {
        if (!unique()) return NotApplicable(id, "not uniquely dimensional");
        if (!girth_) return NotApplicable(id, "acyclic");
        return Bound(id, beta() <= n() - *girth_ + 1,
                     "beta=" + std::to_string(beta()) +
                         " n=" + std::to_string(n()) +
                         " g=" + std::to_string(*girth_));
      }
      case CheckId::kUniqueHalfOrder:
        if (!unique()) return NotApplicable(id, "not uniquely dimensional");
        return Bound(id, 2 * beta() < n(),
                     "beta=" + std::to_string(beta()) +
                         " n=" + std::to_string(n()));
      case CheckId::kExtremal:
        return Extremal();
    }
    throw std::logic_error("unknown check");
  }

 private:
  static const Graph& Checked(const Graph& g) {
    if (g.order() < 2) {
      throw std::invalid_argument("audit needs at least 2 vertices");
    }
    return g;
  }

  CheckResult Extremal() const {
    const CheckId id = CheckId::kExtremal;
    const std::int64_t reach = PowerCapped(d(), beta(), 1'000'000);
    if (n() != beta() + reach) {
      return NotApplicable(id, "n != beta + d^beta");
    }
    // The diameter clause needs two basis vertices; every path is extremal.
    if (beta() >= 2 && d() > 3) return Bound(id, false, numbers_with("d > 3"));
    const std::int64_t need = PowerCapped(d(), beta() - 1, 1'000'000);
    std::vector<VertexSet> bases;
    solver_.ResolvingSetsOfSize(beta(), 0, bases);
    int smallest = n();
    for (VertexSet b : bases) {
      for (Vertex v : b) {
        const int far = Gamma(solver_.distances(), v, d()).size();
        smallest = std::min(smallest, far);
        if (far < need) {
          return Bound(id, false,
                       numbers_with("basis={" + b.ToString() + "} v=" +
                                    std::to_string(v) + " |gamma_d|=" +
                                    std::to_string(far) + " < " +
                                    std::to_string(need)));
        }
      }
    }
    return Bound(id, true,
                 numbers_with("bases=" + std::to_string(bases.size()) +
                              " min|gamma_d|=" + std::to_string(smallest) +
                              " need=" + std::to_string(need)));
  }

  std::string numbers_with(const std::string& extra) const {
    return Numbers(beta(), n(), d()) + " " + extra;
  }

  MetricBasisSolver solver_;
  BasisReport basis_report_;
  std::optional<int> girth_;
};

AuditRecord AuditOne(const Graph& g, std::uint64_t index, bool extremal) {
  AuditRecord record;
  record.index = index;
  record.graph6 = EmitGraph6(g);
  try {
    record.report = AuditGraph(g, extremal);
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  return record;
}

bool RecordFailed(const AuditRecord& r) {
  return !r.error.empty() || (r.report && !r.report->Passed());
}

}  // namespace

std::string_view CheckName(CheckId id) {
  return kCheckNames[static_cast<std::size_t>(id)];
}

std::optional<CheckId> CheckFromName(std::string_view name) {
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    if (kCheckNames[i] == name) return static_cast<CheckId>(i);
  }
  return std::nullopt;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kNotApplicable:
      return "na";
  }
  return "?";
}

bool AuditReport::Passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.verdict == Verdict::kFail;
  });
}

const CheckResult* AuditReport::Find(CheckId id) const {
  for (const CheckResult& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AuditReport AuditGraph(const Graph& g, bool extremal) {
  const Facts facts(g);
  AuditReport report;
  report.profile = facts.Profile();
  const std::size_t count = extremal ? kCheckCount : kCoreCheckCount;
  for (std::size_t i = 0; i < count; ++i) {
    report.checks.push_back(facts.Run(static_cast<CheckId>(i)));
  }
  return report;
}

CheckResult RunCheck(const Graph& g, CheckId id) { return Facts(g).Run(id); }

CheckResult VerifyExtremal(const Graph& g) {
  return RunCheck(g, CheckId::kExtremal);
}

void AuditSummary::Add(const AuditRecord& record) {
  ++graphs;
  if (!record.error.empty()) {
    ++errors;
    return;
  }
  if (!record.report) return;
  if (!record.report->Passed()) ++failed_graphs;
  for (const CheckResult& c : record.report->checks) {
    CheckTally& t = tallies[static_cast<std::size_t>(c.id)];
    switch (c.verdict) {
      case Verdict::kPass:
        ++t.pass;
        break;
      case Verdict::kFail:
        ++t.fail;
        break;
      case Verdict::kNotApplicable:
        ++t.not_applicable;
        break;
    }
  }
}

void AuditSummary::Merge(const AuditSummary& later) {
  graphs += later.graphs;
  errors += later.errors;
  failed_graphs += later.failed_graphs;
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    tallies[i].pass += later.tallies[i].pass;
    tallies[i].fail += later.tallies[i].fail;
    tallies[i].not_applicable += later.tallies[i].not_applicable;
  }
  stopped_early = stopped_early || later.stopped_early;
}

AuditSummary AuditStream(std::span<const StreamItem> items,
                         const AuditOptions& options, const RecordSink& sink,
                         std::uint64_t first_index) {
  std::vector<AuditRecord> records(items.size());
  ParallelRanges(items.size(), options.jobs,
                 [&](int, std::uint64_t begin, std::uint64_t end) {
                   for (std::uint64_t i = begin; i < end; ++i) {
                     const StreamItem& item = items[i];
                     if (item.graph) {
                       records[i] = AuditOne(*item.graph, first_index + i,
                                             options.extremal);
                     } else {
                       records[i].index = first_index + i;
                       records[i].graph6 = item.text;
                       records[i].error = item.error;
                     }
                   }
                 });
  AuditSummary summary;
  for (const AuditRecord& r : records) {
    summary.Add(r);
    if (sink) sink(r);
    if (options.fail_fast && RecordFailed(r)) {
      summary.stopped_early = true;
      break;
    }
  }
  return summary;
}

AuditSummary AuditAllConnected(int n, const AuditOptions& options,
                               const RecordSink& sink) {
  struct Part {
    AuditSummary summary;
    std::vector<AuditRecord> failures;
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<Part> parts(jobs);
  ParallelRanges(LabeledGraphCount(n), jobs,
                 [&](int w, std::uint64_t begin, std::uint64_t end) {
                   Part& part = parts[w];
                   ForEachConnectedLabeled(
                       n, begin, end, [&](std::uint64_t code, const Graph& g) {
                         AuditRecord r = AuditOne(g, code, options.extremal);
                         part.summary.Add(r);
                         if (!RecordFailed(r)) return true;
                         part.failures.push_back(std::move(r));
                         if (!options.fail_fast) return true;
                         part.summary.stopped_early = true;
                         return false;
                       });
                 });
  // Worker ranges are ascending, so concatenation equals a sequential run
  // up to the first worker that stopped.
  AuditSummary total;
  for (const Part& part : parts) {
    total.Merge(part.summary);
    if (sink) {
      for (const AuditRecord& r : part.failures) sink(r);
    }
    if (part.summary.stopped_early) break;
  }
  return total;
}

bool IsUniquelyKDimensional(const Graph& g, int k) {
  const MetricBasisSolver solver(g);
  if (solver.LowerBound() > k) return false;
  if (k >= 1 && solver.HasResolvingSetOfSize(k - 1)) return false;
  std::vector<VertexSet> bases;
  const bool complete = solver.ResolvingSetsOfSize(k, 2, bases);
  return complete && bases.size() == 1;
}

N0Result SearchN0(int k, int max_order, const N0Options& options) {
  if (k < 1) throw std::out_of_range("k must be at least 1");
  if (max_order > kMaxEnumerationOrder) {
    throw std::out_of_range(
        "built-in enumeration stops at order " +
        std::to_string(kMaxEnumerationOrder) +
        "; scan larger orders from a graph6 stream");
  }
  N0Result result;
  result.k = k;
  result.max_order = max_order;
  result.dedup = options.dedup;
  const int jobs = std::max(1, options.jobs);
  for (int n = 2; n <= max_order; ++n) {
    N0Row row;
    row.order = n;
    if (options.skip_below_bound && n < 2 * k + 1) {
      row.skipped = true;
      result.rows.push_back(row);
      continue;
    }
    struct Part {
      std::uint64_t graphs = 0;
      std::uint64_t hits = 0;
      std::optional<std::uint64_t> first;
    };
    std::vector<Part> parts(jobs);
    const auto consider = [&](Part& part, std::uint64_t code, const Graph& g) {
      ++part.graphs;
      if (IsUniquelyKDimensional(g, k)) {
        ++part.hits;
        if (!part.first) part.first = code;
      }
    };
    if (options.dedup) {
      const std::vector<std::uint64_t> codes = ConnectedClassCodes(n);
      ParallelRanges(codes.size(), jobs,
                     [&](int w, std::uint64_t begin, std::uint64_t end) {
                       for (std::uint64_t i = begin; i < end; ++i) {
                         consider(parts[w], codes[i],
                                  GraphFromCode(n, codes[i]));
                       }
                     });
    } else {
      ParallelRanges(LabeledGraphCount(n), jobs,
                     [&](int w, std::uint64_t begin, std::uint64_t end) {
                       ForEachConnectedLabeled(
                           n, begin, end,
                           [&](std::uint64_t code, const Graph& g) {
                             consider(parts[w], code, g);
                             return true;
                           });
                     });
    }
    for (const Part& part : parts) {
      row.graphs += part.graphs;
      row.hits += part.hits;
      if (!row.example && part.first) {
        row.example = EmitGraph6(GraphFromCode(n, *part.first));
      }
    }
    if (row.hits > 0 && !result.n0) result.n0 = n;
    result.rows.push_back(row);
  }
  result.consistent = !(result.n0 && *result.n0 <= 2 * k);
  return result;
}

void N0Tally::Add(const Graph& g) {
  N0Row& row = rows_[g.order()];
  row.order = g.order();
  ++row.graphs;
  if (g.order() >= 2 && IsUniquelyKDimensional(g, k_)) {
    ++row.hits;
    const std::string line = EmitGraph6(g);
    if (!row.example || line < *row.example) row.example = line;
  } else {
    RequireConnected(g);
  }
}

N0Result N0Tally::Result() const {
  N0Result result;
  result.k = k_;
  for (const N0Row& row : rows_) {
    if (row.graphs == 0) continue;
    result.rows.push_back(row);
    result.max_order = row.order;
    if (row.hits > 0 && !result.n0) result.n0 = row.order;
  }
  result.consistent = !(result.n0 && *result.n0 <= 2 * k_);
  return result;
}

}  // namespace metricdim
