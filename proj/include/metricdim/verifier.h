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

#ifndef METRICDIM_VERIFIER_H_
#define METRICDIM_VERIFIER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metricdim/graph.h"
#include "metricdim/solver.h"

namespace metricdim {

// Bounds on metric dimension checked against computed values. Each check is
// either not applicable to a graph, or passes, or fails with a witness.
enum class CheckId {
  kDimVsDiameter,        // β <= n - d
  kOrderBound,           // n <= β + d^β
  kUniqueNoTwins,        // unique basis => no twin vertices
  kUniqueDiameterBound,  // unique basis => β <= n - d - 2
  kUniqueGirthBound,     // unique basis, cyclic => β <= n - g + 1
  kUniqueHalfOrder,      // unique basis => 2β < n
  kExtremal,             // n = β + d^β => |Γ_d(v)| >= d^(β-1); β >= 2 => d <= 3
};
inline constexpr std::size_t kCheckCount = 7;
// The checks AuditGraph always runs; kExtremal is opt-in.
inline constexpr std::size_t kCoreCheckCount = 6;

std::string_view CheckName(CheckId id);
std::optional<CheckId> CheckFromName(std::string_view name);

enum class Verdict { kPass, kFail, kNotApplicable };
std::string_view VerdictName(Verdict v);

struct CheckResult {
  CheckId id;
  Verdict verdict;
  // The numbers behind the verdict, e.g. "beta=3 n=9 d=2"; on failure this is
  // the witness.
  std::string detail;
};

struct GraphProfile {
  int order = 0;
  int dimension = 0;
  int diameter = 0;
  std::optional<int> girth;
  std::vector<int> twin_class_sizes;
  bool unique = false;
};

struct AuditReport {
  GraphProfile profile;
  std::vector<CheckResult> checks;

  bool Passed() const;
  const CheckResult* Find(CheckId id) const;
};

// Runs the six core checks (and kExtremal when `extremal` is set). Throws
// DisconnectedGraphError, and std::invalid_argument for a single vertex.
AuditReport AuditGraph(const Graph& g, bool extremal = false);

// Re-runs one check, e.g. to reproduce a witness.
CheckResult RunCheck(const Graph& g, CheckId id);

// The extremal-order check on its own: applicable when n = β + d^β. Then
// every vertex of every basis has |Γ_d(v)| >= d^(β-1), and d <= 3 when
// β >= 2.
CheckResult VerifyExtremal(const Graph& g);

// --- Streams -------------------------------------------------------------

struct CheckTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
};

// One graph of a stream and what became of it.
struct AuditRecord {
  std::uint64_t index = 0;  // position in the stream, or edge code
  std::string graph6;
  std::optional<AuditReport> report;
  std::string error;  // set when the graph could not be audited
};

struct AuditSummary {
  std::uint64_t graphs = 0;
  std::uint64_t errors = 0;
  std::uint64_t failed_graphs = 0;
  std::array<CheckTally, kCheckCount> tallies{};
  bool stopped_early = false;

  void Add(const AuditRecord& record);
  // Appends `later`, which must cover the stream positions after this one.
  void Merge(const AuditSummary& later);
};

struct AuditOptions {
  bool fail_fast = false;
  bool extremal = false;
  int jobs = 1;
};

// An item of an input stream: a graph, or the reason it could not be read.
struct StreamItem {
  std::optional<Graph> graph;
  std::string text;  // the input line
  std::string error;
};

using RecordSink = std::function<void(const AuditRecord&)>;

// Audits items in order; per-graph errors become marked records. `sink`
// sees every record in input order regardless of the worker count. With
// fail_fast the stream stops after the first failing or erroneous record.
AuditSummary AuditStream(std::span<const StreamItem> items,
                         const AuditOptions& options, const RecordSink& sink,
                         std::uint64_t first_index = 0);

// Audits every connected labeled graph on n vertices. Only failing records
// reach `sink`, in edge-code order. Results are independent of the worker
// count, also with fail_fast.
AuditSummary AuditAllConnected(int n, const AuditOptions& options,
                               const RecordSink& sink);

// --- Minimum order of uniquely k-dimensional graphs ----------------------

// True iff β(g) = k and g has exactly one metric basis.
bool IsUniquelyKDimensional(const Graph& g, int k);

struct N0Row {
  int order = 0;
  bool skipped = false;
  std::uint64_t graphs = 0;  // labeled graphs, or classes in dedup mode
  std::uint64_t hits = 0;
  std::optional<std::string> example;  // graph6 of the least hit
};

struct N0Result {
  int k = 0;
  int max_order = 0;
  bool dedup = false;
  std::vector<N0Row> rows;
  std::optional<int> n0;
  // False if some hit has order <= 2k, which would contradict 2β < n for
  // uniquely dimensional graphs.
  bool consistent = true;
};

struct N0Options {
  bool dedup = false;
  // Skip orders below 2k + 1 instead of scanning them.
  bool skip_below_bound = false;
  int jobs = 1;
};

// Scans orders 2..max_order ascending, counting uniquely k-dimensional
// connected graphs. Throws std::out_of_range if max_order exceeds the
// built-in enumeration limit or k < 1.
N0Result SearchN0(int k, int max_order, const N0Options& options = {});

// Incremental form for external graph6 streams of any order up to 64. The
// example kept per order is the least graph6 line, which for a fixed order
// is also the least edge code.
class N0Tally {
 public:
  explicit N0Tally(int k) : k_(k) {}
  // Throws DisconnectedGraphError.
  void Add(const Graph& g);
  N0Result Result() const;

 private:
  int k_;
  std::array<N0Row, kMaxVertices + 1> rows_{};
};

}  // namespace metricdim

#endif  // METRICDIM_VERIFIER_H_
