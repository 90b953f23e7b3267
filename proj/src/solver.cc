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

#include "metricdim/solver.h"

#include <algorithm>
#include <cassert>

namespace metricdim {

MetricVector Representation(const DistanceMatrix& d, Vertex v,
                            std::span<const Vertex> landmarks) {
  MetricVector r;
  r.reserve(landmarks.size());
  for (Vertex w : landmarks) r.push_back(d(v, w));
  return r;
}

bool IsResolving(const DistanceMatrix& d, VertexSet w) {
  const VertexSet outside = VertexSet::Range(d.order()) - w;
  for (Vertex u : outside) {
    for (Vertex v : outside) {
      if (v <= u) continue;
      bool separated = false;
      for (Vertex x : w) {
        if (d(u, x) != d(v, x)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

PairDistinguishers::PairDistinguishers(const DistanceMatrix& d)
    : n_(d.order()) {
  sets_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      VertexSet s;
      for (Vertex w = 0; w < n_; ++w) {
        if (d(u, w) != d(v, w)) s.Insert(w);
      }
      assert(s.Contains(u) && s.Contains(v));
      sets_.push_back(s);
    }
  }
}

VertexSet PairDistinguishers::Of(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return sets_[static_cast<std::size_t>(v) * (v - 1) / 2 + u];
}

bool PairDistinguishers::HitByAll(VertexSet w) const {
  return std::all_of(sets_.begin(), sets_.end(),
                     [w](VertexSet s) { return s.Intersects(w); });
}

// Depth-first enumeration of k-subsets in lexicographic order. A node holds
// the chosen prefix, the candidates (all vertices after the last choice) and
// the remaining budget. It is pruned when some unhit set has no candidate
// left, or when pairwise disjoint unhit sets outnumber the budget.
class MetricBasisSolver::Search {
 public:
  Search(const MetricBasisSolver& solver, std::size_t limit,
         std::vector<VertexSet>* out)
      : solver_(solver), n_(solver.graph_.order()), limit_(limit), out_(out) {}

  // Returns false if the limit stopped the search.
  bool Run(int k) {
    unhit_.reserve(solver_.reduced_.size());
    return Visit(VertexSet(), 0, k);
  }
  std::size_t found() const { return found_; }

 private:
  bool Visit(VertexSet chosen, Vertex start, int budget) {
    const VertexSet candidates = VertexSet::Range(n_) - VertexSet::Range(start);
    if (candidates.size() < budget) return true;

    // Unhit sets restricted to the candidates, gathered on a shared stack.
    const std::size_t base = unhit_.size();
    Vertex last_branch = n_ - budget;
    int packing = 0;
    VertexSet packed;
    bool dead = false;
    for (VertexSet d : solver_.reduced_) {
      if (d.Intersects(chosen)) continue;
      const VertexSet reachable = d & candidates;
      if (reachable.empty()) {
        dead = true;
        break;
      }
      // The next choice must not skip past every vertex of this set.
      last_branch = std::min(last_branch, reachable.Max());
      if (!reachable.Intersects(packed)) {
        ++packing;
        packed |= reachable;
      }
      unhit_.push_back(reachable);
    }
    const bool all_hit = unhit_.size() == base;
    unhit_.resize(base);
    if (dead || packing > budget) return true;

    if (budget == 0) {
      assert(all_hit);
      assert(IsResolving(solver_.distances_, chosen));
      ++found_;
      if (out_ != nullptr) out_->push_back(chosen);
      return limit_ == 0 || found_ < limit_;
    }
    (void)all_hit;
    for (Vertex v = start; v <= last_branch; ++v) {
      VertexSet next = chosen;
      next.Insert(v);
      if (!Visit(next, v + 1, budget - 1)) return false;
    }
    return true;
  }

  const MetricBasisSolver& solver_;
  const int n_;
  const std::size_t limit_;
  std::vector<VertexSet>* out_;
  std::size_t found_ = 0;
  std::vector<VertexSet> unhit_;
};

MetricBasisSolver::MetricBasisSolver(const Graph& g)
    : graph_(g),
      distances_(g),
      twins_(ComputeTwinClasses(g)),
      pairs_(distances_) {
  std::vector<VertexSet> sets(pairs_.All().begin(), pairs_.All().end());
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (VertexSet s : sets) {
    const bool dominated =
        std::any_of(reduced_.begin(), reduced_.end(),
                    [s](VertexSet kept) { return kept.IsSubsetOf(s); });
    if (!dominated) reduced_.push_back(s);
  }
}

int MetricBasisSolver::LowerBound() const {
  int packing = 0;
  VertexSet packed;
  for (VertexSet d : reduced_) {
    if (!d.Intersects(packed)) {
      ++packing;
      packed |= d;
    }
  }
  int bound = std::max(twins_.ForcedCount(), packing);
  if (graph_.order() >= 2) bound = std::max(bound, 1);
  return bound;
}

VertexSet MetricBasisSolver::GreedyResolvingSet() const {
  VertexSet chosen;
  std::vector<VertexSet> open = reduced_;
  while (!open.empty()) {
    Vertex best = 0;
    int best_hits = -1;
    for (Vertex v = 0; v < graph_.order(); ++v) {
      int hits = 0;
      for (VertexSet d : open) hits += d.Contains(v) ? 1 : 0;
      if (hits > best_hits) {
        best = v;
        best_hits = hits;
      }
    }
    chosen.Insert(best);
    std::erase_if(open, [best](VertexSet d) { return d.Contains(best); });
  }
  return chosen;
}

bool MetricBasisSolver::HasResolvingSetOfSize(int k) const {
  if (k < 0 || k > graph_.order()) return false;
  Search search(*this, 1, nullptr);
  search.Run(k);
  return search.found() > 0;
}

int MetricBasisSolver::Dimension() const {
  const int upper = GreedyResolvingSet().size();
  for (int k = LowerBound(); k < upper; ++k) {
    if (HasResolvingSetOfSize(k)) return k;
  }
  return upper;
}

bool MetricBasisSolver::ResolvingSetsOfSize(int k, std::size_t limit,
                                            std::vector<VertexSet>& out) const {
  if (k < 0 || k > graph_.order()) return true;
  Search search(*this, limit, &out);
  return search.Run(k);
}

BasisReport MetricBasisSolver::Bases(const SolveOptions& options) const {
  BasisReport report;
  report.order = graph_.order();
  report.single_vertex = graph_.order() == 1;
  report.dimension = Dimension();
  report.complete =
      ResolvingSetsOfSize(report.dimension, options.max_bases, report.bases);
  report.unique = report.complete && report.bases.size() == 1;
  if (report.complete &&
      (report.order <= 20 || options.evaluate_randomly)) {
    report.randomly_k =
        report.bases.size() == Binomial(report.order, report.dimension);
  }
  return report;
}

int MetricDimension(const Graph& g) { return MetricBasisSolver(g).Dimension(); }

BasisReport AllBases(const Graph& g, const SolveOptions& options) {
  return MetricBasisSolver(g).Bases(options);
}

bool IsUniquelyDimensional(const Graph& g) {
  return MetricBasisSolver(g).Bases({.max_bases = 2}).unique;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return static_cast<std::uint64_t>(c);
}

}  // namespace metricdim
