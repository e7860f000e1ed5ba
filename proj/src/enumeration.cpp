#include "cbenum/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbenum {

EnumState root_state(const Graph& g, const Ranking& r) {
  return EnumState{{}, WsSet(r), AwsSet(r, g.vertices()), kRootSentinel};
}

std::pair<VertexSet, Vertex> parent_of(const Graph& g, const VertexSet& x, const Ranking& r) {
  if (x.empty()) throw InputError("the empty set has no parent");
  const WsSet ws = compute_ws(g, x, r);
  const auto top = ws.max();
  if (!top) throw std::logic_error("no weak-simplicial vertex: X does not induce a solution");
  VertexSet parent = normalize_set(g, x);
  parent.erase(std::find(parent.begin(), parent.end(), *top));
  return {std::move(parent), *top};
}

std::vector<Vertex> candidate_set(const Graph& g, const EnumState& st, const Ranking& r) {
  if (st.pv == kRootSentinel) return st.aws.members();
  const auto pv_rank = r.rank(st.pv);
  const VertexSet ball = ambient_neighbors_within_2(g, st.pv, /*closed=*/false);
  std::vector<Vertex> out;
  for (Vertex u : st.aws.members()) {
    if (r.rank(u) >= pv_rank || std::binary_search(ball.begin(), ball.end(), u)) out.push_back(u);
  }
  return out;
}

std::optional<EnumState> try_child(const Graph& g, const EnumState& st, Vertex v,
                                   const Ranking& r) {
  WsSet ws = update_ws(g, st.x, v, st.ws, r);
  if (ws.max() != v) return std::nullopt;
  AwsSet aws = update_aws(g, st.x, v, st.aws, r);
  VertexSet x = st.x;
  x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  return EnumState{std::move(x), std::move(ws), std::move(aws), v};
}

VertexSet StateView::sorted() const {
  VertexSet out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Traversal {
 public:
  Traversal(const Graph& g, const Ranking& r)
      : g_(g),
        r_(r),
        kernel_(g),
        x_mask_(g.num_vertices()),
        ws_mask_(g.num_vertices()),
        aws_mask_(g.num_vertices()),
        ws_(r),
        aws_(r),
        seen_(g.num_vertices()) {}

  EnumStats run(const SolutionSink& sink, const EnumOptions& options) {
    EnumStats stats;
    for (Vertex v = 1; v <= g_.num_vertices(); ++v) {
      aws_.insert(v);
      aws_mask_.insert(v);
    }
    auto emit = [&](Vertex pv) {
      ++stats.solutions;
      stats.max_depth = std::max(stats.max_depth, members_.size());
      sink(StateView{members_, ws_, aws_, pv, members_.size()});
      if (options.limit && stats.solutions >= *options.limit) stats.limit_reached = true;
    };

    emit(kRootSentinel);
    if (stats.limit_reached) return stats;
    Frame root;
    root.pv = kRootSentinel;
    root.cand = aws_.members();
    stack_.push_back(std::move(root));

    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next == top.cand.size()) {
        const std::uint64_t waste = top.cand.size() - top.children;
        stats.max_waste = std::max(stats.max_waste, waste);
        if (options.on_state_done) options.on_state_done(members_.size(), top.cand.size(), top.children);
        undo(top);
        stack_.pop_back();
        continue;
      }
      const Vertex v = top.cand[top.next++];
      ++stats.candidate_attempts;

      delta_ws_.clear();
      kernel_.delta_ws(x_mask_, v, ws_mask_, delta_ws_);
      if (!is_parent_vertex(v)) {
        ++stats.rejected;
        continue;
      }
      ++top.children;
      delta_aws_.clear();
      kernel_.delta_aws(x_mask_, v, aws_mask_, delta_aws_);

      Frame child;
      child.pv = v;
      child.ws_removed = delta_ws_;
      child.aws_removed = delta_aws_;
      apply(child);
      child.cand = candidates(v);
      stack_.push_back(std::move(child));  // invalidates `top`

      emit(v);
      if (stats.limit_reached) return stats;
    }
    return stats;
  }

 private:
  struct Frame {
    Vertex pv = kRootSentinel;
    std::vector<Vertex> cand;
    std::size_t next = 0;
    std::size_t children = 0;
    std::vector<Vertex> ws_removed;
    std::vector<Vertex> aws_removed;
  };

  // v is the maximum of (WS(X) \ delta) ∪ {v}: every member ranked above v
  // must be in delta.
  bool is_parent_vertex(Vertex v) {
    seen_.clear();
    for (Vertex u : delta_ws_) seen_.mark(u);
    const auto v_rank = r_.rank(v);
    const auto& ranks = ws_.ranks();
    for (auto it = ranks.rbegin(); it != ranks.rend() && *it > v_rank; ++it) {
      if (!seen_.marked(r_.vertex_at(*it))) return false;
    }
    return true;
  }

  void apply(const Frame& f) {
    const Vertex v = f.pv;
    for (Vertex u : f.ws_removed) {
      ws_.erase(u);
      ws_mask_.erase(u);
    }
    for (Vertex u : f.aws_removed) {
      aws_.erase(u);
      aws_mask_.erase(u);
    }
    aws_.erase(v);
    aws_mask_.erase(v);
    ws_.insert(v);
    ws_mask_.insert(v);
    x_mask_.insert(v);
    members_.push_back(v);
  }

  void undo(const Frame& f) {
    if (f.pv == kRootSentinel) return;
    const Vertex v = f.pv;
    members_.pop_back();
    x_mask_.erase(v);
    ws_.erase(v);
    ws_mask_.erase(v);
    aws_.insert(v);
    aws_mask_.insert(v);
    for (Vertex u : f.aws_removed) {
      aws_.insert(u);
      aws_mask_.insert(u);
    }
    for (Vertex u : f.ws_removed) {
      ws_.insert(u);
      ws_mask_.insert(u);
    }
  }

  // cand(X) for pv(X) = pv, ascending rank.
  std::vector<Vertex> candidates(Vertex pv) {
    const auto pv_rank = r_.rank(pv);
    std::vector<std::uint32_t> low;
    seen_.clear();
    seen_.mark(pv);
    auto consider = [&](Vertex z) {
      if (seen_.marked(z)) return;
      seen_.mark(z);
      if (aws_mask_.contains(z) && r_.rank(z) < pv_rank) low.push_back(r_.rank(z));
    };
    for (Vertex w : g_.neighbors(pv)) consider(w);
    for (Vertex w : g_.neighbors(pv)) {
      for (Vertex z : g_.neighbors(w)) consider(z);
    }
    std::sort(low.begin(), low.end());

    std::vector<Vertex> out;
    out.reserve(low.size());
    for (auto rk : low) out.push_back(r_.vertex_at(rk));
    const auto& ranks = aws_.ranks();
    for (auto it = ranks.upper_bound(pv_rank); it != ranks.end(); ++it) {
      out.push_back(r_.vertex_at(*it));
    }
    return out;
  }

  const Graph& g_;
  const Ranking& r_;
  WsKernel kernel_;
  VertexMask x_mask_;
  VertexMask ws_mask_;
  VertexMask aws_mask_;
  WsSet ws_;
  AwsSet aws_;
  std::vector<Vertex> members_;
  std::vector<Frame> stack_;
  std::vector<Vertex> delta_ws_;
  std::vector<Vertex> delta_aws_;
  StampSet seen_;
};

}  // namespace

EnumStats enumerate(const Graph& g, const Ranking& r, const SolutionSink& sink,
                    const EnumOptions& options) {
  if (r.size() != g.num_vertices()) throw InputError("ranking size does not match the graph");
  Traversal traversal(g, r);
  return traversal.run(sink, options);
}

std::vector<VertexSet> enumerate_all(const Graph& g, const Ranking& r) {
  std::vector<VertexSet> out;
  enumerate(g, r, [&](const StateView& s) { out.push_back(s.sorted()); });
  return out;
}

WasteReport waste_bound_report(const Graph& g, const Ranking& r) {
  WasteReport report;
  report.bound = 2ULL * r.degeneracy() * g.max_degree();
  EnumOptions options;
  options.on_state_done = [&](std::size_t, std::size_t cand, std::size_t children) {
    const std::uint64_t waste = cand - children;
    ++report.states;
    report.total_waste += waste;
    report.max_waste = std::max(report.max_waste, waste);
  };
  enumerate(g, r, [](const StateView&) {}, options);
  report.within_bound = report.max_waste <= report.bound;
  return report;
}

}  // namespace cbenum
