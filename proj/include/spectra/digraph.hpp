#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spectra {

// Weighted directed multigraph. Edges either carry a weight of type W or the
// special "bottom" weight, which sorts strictly below every W value. Bottom
// edges participate in connectivity but never contribute an output weight.
template <typename W>
struct Digraph {
  std::uint32_t n_vertices = 0;
  std::vector<std::uint32_t> src;
  std::vector<std::uint32_t> dst;
  std::vector<std::int32_t> weight_id;  // index into weights, -1 for bottom
  std::vector<W> weights;

  std::uint32_t add_vertices(std::uint32_t count) {
    std::uint32_t first = n_vertices;
    n_vertices += count;
    return first;
  }

  std::size_t add_bottom_edge(std::uint32_t u, std::uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    src.push_back(u);
    dst.push_back(v);
    weight_id.push_back(-1);
    return src.size() - 1;
  }

  std::size_t add_edge(std::uint32_t u, std::uint32_t v, W w) {
    check_vertex(u);
    check_vertex(v);
    src.push_back(u);
    dst.push_back(v);
    weight_id.push_back(static_cast<std::int32_t>(weights.size()));
    weights.push_back(std::move(w));
    return src.size() - 1;
  }

  std::size_t edge_count() const { return src.size(); }

  bool is_bottom(std::size_t e) const { return weight_id[e] < 0; }

  const W& weight(std::size_t e) const { return weights[weight_id[e]]; }

  // weight(e) <= weight(f) in the order extended with bottom as minimum
  bool weight_leq(std::size_t e, std::size_t f) const {
    if (is_bottom(e)) return true;
    if (is_bottom(f)) return false;
    return !(weights[weight_id[f]] < weights[weight_id[e]]);
  }

 private:
  void check_vertex(std::uint32_t v) const {
    if (v >= n_vertices) throw std::out_of_range("Digraph: vertex out of range");
  }
};

namespace detail {

// Iterative Tarjan over an explicit adjacency structure; fills comp ids and
// returns the component count. Avoids recursion so large graphs are safe.
inline std::uint32_t tarjan_scc(const std::vector<std::vector<std::uint32_t>>& adj,
                                std::vector<std::uint32_t>& comp) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> index(n, none), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  comp.assign(n, none);
  std::uint32_t next_index = 0, comp_count = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      std::uint32_t v = f.v;
      if (f.child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (f.child < adj[v].size()) {
        std::uint32_t w = adj[v][f.child++];
        if (index[w] == none) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return comp_count;
}

}  // namespace detail

template <typename W>
std::uint32_t strongly_connected_component_count(const Digraph<W>& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n_vertices);
  for (std::size_t e = 0; e < g.edge_count(); ++e) adj[g.src[e]].push_back(g.dst[e]);
  std::vector<std::uint32_t> comp;
  return detail::tarjan_scc(adj, comp);
}

// An edge is a cycle-maximum ("Lagrange") edge when some cycle through it uses
// only edges of weight <= its own; a single reachability search in the
// thresholded subgraph decides that.
template <typename W>
bool is_lagrange_edge(const Digraph<W>& g, std::size_t e) {
  std::vector<std::vector<std::uint32_t>> adj(g.n_vertices);
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (g.weight_leq(f, e)) adj[g.src[f]].push_back(g.dst[f]);
  }
  std::uint32_t start = g.dst[e], goal = g.src[e];
  if (start == goal) return true;
  std::vector<char> seen(g.n_vertices, 0);
  std::vector<std::uint32_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : adj[v]) {
      if (w == goal) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

// An edge is a path-maximum ("Markov") edge when, inside the subgraph of
// edges with weight <= its own, its head reaches a cycle and its tail is
// reached from a cycle; the edge may itself sit on either cycle.
template <typename W>
bool is_markov_edge(const Digraph<W>& g, std::size_t e) {
  std::vector<std::vector<std::uint32_t>> adj(g.n_vertices), radj(g.n_vertices);
  std::vector<char> has_loop(g.n_vertices, 0);
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (!g.weight_leq(f, e)) continue;
    adj[g.src[f]].push_back(g.dst[f]);
    radj[g.dst[f]].push_back(g.src[f]);
    if (g.src[f] == g.dst[f]) has_loop[g.src[f]] = 1;
  }
  std::vector<std::uint32_t> comp;
  std::uint32_t ncomp = detail::tarjan_scc(adj, comp);
  std::vector<std::uint32_t> comp_size(ncomp, 0);
  for (std::uint32_t v = 0; v < g.n_vertices; ++v) ++comp_size[comp[v]];
  std::vector<char> cyclic(g.n_vertices, 0);
  for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
    cyclic[v] = has_loop[v] || comp_size[comp[v]] > 1;
  }

  auto reaches_cycle = [&](std::uint32_t start,
                           const std::vector<std::vector<std::uint32_t>>& a) {
    if (cyclic[start]) return true;
    std::vector<char> seen(g.n_vertices, 0);
    std::vector<std::uint32_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t w : a[v]) {
        if (cyclic[w]) return true;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };
  return reaches_cycle(g.dst[e], adj) && reaches_cycle(g.src[e], radj);
}

// Sorted, deduplicated weight sets with one witnessing edge per weight.
template <typename W>
struct SpectrumSets {
  std::vector<W> lagrange;
  std::vector<W> markov;
  std::vector<std::uint32_t> lagrange_witness;
  std::vector<std::uint32_t> markov_witness;
};

namespace detail {

template <typename W>
void sort_dedup_weights(std::vector<std::pair<W, std::uint32_t>>& found,
                        std::vector<W>& weights, std::vector<std::uint32_t>& witness) {
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  weights.clear();
  witness.clear();
  for (auto& p : found) {
    if (weights.empty() || weights.back() < p.first) {
      weights.push_back(p.first);
      witness.push_back(p.second);
    }
  }
}

}  // namespace detail

// Quadratic-time reference: apply the two per-edge tests to every edge.
template <typename W>
SpectrumSets<W> naive_weight_sets(const Digraph<W>& g) {
  std::vector<std::pair<W, std::uint32_t>> lag, mar;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.is_bottom(e)) continue;
    if (is_lagrange_edge(g, e)) lag.emplace_back(g.weight(e), static_cast<std::uint32_t>(e));
    if (is_markov_edge(g, e)) mar.emplace_back(g.weight(e), static_cast<std::uint32_t>(e));
  }
  SpectrumSets<W> out;
  detail::sort_dedup_weights(lag, out.lagrange, out.lagrange_witness);
  detail::sort_dedup_weights(mar, out.markov, out.markov_witness);
  return out;
}

namespace detail {

// Incremental condensation: edges are inserted in nondecreasing weight order
// into a union-find over strongly connected components, with a topological
// order over the component DAG maintained by bounded local searches and local
// reordering (Pearce-Kelly style). An insertion that closes a cycle merges the
// components between its endpoints and records its weight; per-component
// "reaches a cyclic component" flags in both directions answer the
// path-between-cycles queries as edges arrive.
template <typename W>
class IncrementalCondensation {
 public:
  explicit IncrementalCondensation(const Digraph<W>& g)
      : g_(g),
        parent_(g.n_vertices),
        rank_(g.n_vertices, 0),
        ord_(g.n_vertices),
        out_(g.n_vertices),
        in_(g.n_vertices),
        cyclic_(g.n_vertices, 0),
        fwd_(g.n_vertices, 0),
        bwd_(g.n_vertices, 0),
        mark_(g.n_vertices, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    std::iota(ord_.begin(), ord_.end(), std::int64_t{0});
  }

  // Returns (closed_cycle, head_flags && tail_flags) for the inserted edge.
  std::pair<bool, bool> insert(std::uint32_t eid) {
    std::uint32_t u = g_.src[eid], v = g_.dst[eid];
    std::uint32_t cu = find(u), cv = find(v);
    bool closed = false;
    if (cu == cv) {
      closed = true;
      make_cyclic(cu);
    } else if (ord_[cv] < ord_[cu]) {
      std::vector<std::uint32_t> fset, bset;
      bool hit = forward_region(cv, ord_[cu], fset, cu);
      if (hit) {
        backward_region(cu, ord_[cv], bset);
        merge_cycle(fset, bset);
        closed = true;
      } else {
        backward_region(cu, ord_[cv], bset);
        reorder_acyclic(bset, fset);
      }
    }
    cu = find(u);
    cv = find(v);
    if (cu != cv) {
      out_[cu].push_back(eid);
      in_[cv].push_back(eid);
      if (fwd_[cv] && !fwd_[cu]) propagate_fwd(cu);
      if (bwd_[cu] && !bwd_[cv]) propagate_bwd(cv);
    }
    cu = find(u);
    cv = find(v);
    return {closed, fwd_[cv] && bwd_[cu]};
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

 private:
  void make_cyclic(std::uint32_t c) {
    if (cyclic_[c]) {
      // Flags for a known cyclic component are already propagated.
      return;
    }
    cyclic_[c] = 1;
    propagate_fwd(c);
    propagate_bwd(c);
  }

  // Mark c and every component that reaches it as forward-flagged. Walks the
  // full in-list of c unconditionally: after a merge, c may already carry the
  // flag while freshly attached members' predecessors do not.
  void propagate_fwd(std::uint32_t c) {
    fwd_[c] = 1;
    std::vector<std::uint32_t> stack{c};
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t eid : in_[x]) {
        std::uint32_t y = find(g_.src[eid]);
        if (y == x || fwd_[y]) continue;
        fwd_[y] = 1;
        stack.push_back(y);
      }
    }
  }

  void propagate_bwd(std::uint32_t c) {
    bwd_[c] = 1;
    std::vector<std::uint32_t> stack{c};
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t eid : out_[x]) {
        std::uint32_t y = find(g_.dst[eid]);
        if (y == x || bwd_[y]) continue;
        bwd_[y] = 1;
        stack.push_back(y);
      }
    }
  }

  // Depth-first over component out-edges, restricted to ord <= hi. Returns
  // true as soon as goal is found (the collected set is then partial, which
  // is fine: the cycle merge recomputes both cones in full).
  bool forward_region(std::uint32_t start, std::int64_t hi,
                      std::vector<std::uint32_t>& visited, std::uint32_t goal) {
    ++epoch_;
    std::vector<std::uint32_t> stack{start};
    mark_set(start);
    visited.push_back(start);
    bool hit = (start == goal);
    while (!stack.empty() && !hit) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t eid : out_[x]) {
        std::uint32_t y = find(g_.dst[eid]);
        if (y == x || marked(y) || ord_[y] > hi) continue;
        mark_set(y);
        visited.push_back(y);
        if (y == goal) {
          hit = true;
          break;
        }
        stack.push_back(y);
      }
    }
    return hit;
  }

  void backward_region(std::uint32_t start, std::int64_t lo,
                       std::vector<std::uint32_t>& visited) {
    ++epoch_;
    std::vector<std::uint32_t> stack{start};
    mark_set(start);
    visited.push_back(start);
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t eid : in_[x]) {
        std::uint32_t y = find(g_.src[eid]);
        if (y == x || marked(y) || ord_[y] < lo) continue;
        mark_set(y);
        visited.push_back(y);
        stack.push_back(y);
      }
    }
  }

  // Cycle case: everything both reachable from the new edge's head and
  // reaching its tail collapses into one component. The head cone is
  // recomputed in full (the detecting search may have stopped early).
  void merge_cycle(std::vector<std::uint32_t>& fset_partial,
                   std::vector<std::uint32_t>& bset) {
    std::uint32_t head = fset_partial.front();
    std::uint32_t tail = bset.front();
    std::vector<std::uint32_t> fset;
    forward_full(head, ord_[tail], fset);

    ++epoch_;
    for (std::uint32_t x : bset) mark_set(x);
    std::vector<std::uint32_t> merged, fonly;
    for (std::uint32_t x : fset) {
      if (marked(x)) {
        merged.push_back(x);
      } else {
        fonly.push_back(x);
      }
    }
    ++epoch_;
    for (std::uint32_t x : fset) mark_set(x);
    std::vector<std::uint32_t> bonly;
    for (std::uint32_t x : bset) {
      if (!marked(x)) bonly.push_back(x);
    }

    std::vector<std::int64_t> pool;
    pool.reserve(fset.size() + bset.size());
    for (std::uint32_t x : fonly) pool.push_back(ord_[x]);
    for (std::uint32_t x : bonly) pool.push_back(ord_[x]);
    for (std::uint32_t x : merged) pool.push_back(ord_[x]);
    std::sort(pool.begin(), pool.end());

    std::uint32_t root = merged.front();
    for (std::uint32_t x : merged) root = unite(root, x);
    // Propagate unconditionally: the union may OR the cyclic flag in from one
    // member while another member's predecessors have never been marked.
    cyclic_[root] = 1;
    propagate_fwd(root);
    propagate_bwd(root);

    // Components that only reach the cycle keep the low order slots, the
    // merged component takes the next slot, components only reachable from
    // the cycle take the top slots; each group keeps its relative order.
    std::sort(bonly.begin(), bonly.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ord_[a] < ord_[b]; });
    std::sort(fonly.begin(), fonly.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ord_[a] < ord_[b]; });
    for (std::size_t i = 0; i < bonly.size(); ++i) ord_[bonly[i]] = pool[i];
    ord_[root] = pool[bonly.size()];
    for (std::size_t i = 0; i < fonly.size(); ++i) {
      ord_[fonly[i]] = pool[pool.size() - fonly.size() + i];
    }
  }

  void forward_full(std::uint32_t start, std::int64_t hi,
                    std::vector<std::uint32_t>& visited) {
    ++epoch_;
    std::vector<std::uint32_t> stack{start};
    mark_set(start);
    visited.push_back(start);
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t eid : out_[x]) {
        std::uint32_t y = find(g_.dst[eid]);
        if (y == x || marked(y) || ord_[y] > hi) continue;
        mark_set(y);
        visited.push_back(y);
        stack.push_back(y);
      }
    }
  }

  // Acyclic case: give the tail cone the low slots and the head cone the
  // high slots, preserving relative order inside each cone.
  void reorder_acyclic(std::vector<std::uint32_t>& bset, std::vector<std::uint32_t>& fset) {
    std::vector<std::int64_t> pool;
    pool.reserve(bset.size() + fset.size());
    for (std::uint32_t x : bset) pool.push_back(ord_[x]);
    for (std::uint32_t x : fset) pool.push_back(ord_[x]);
    std::sort(pool.begin(), pool.end());
    std::sort(bset.begin(), bset.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ord_[a] < ord_[b]; });
    std::sort(fset.begin(), fset.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ord_[a] < ord_[b]; });
    for (std::size_t i = 0; i < bset.size(); ++i) ord_[bset[i]] = pool[i];
    for (std::size_t i = 0; i < fset.size(); ++i) ord_[fset[i]] = pool[bset.size() + i];
  }

  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    if (rank_[a] == rank_[b]) ++rank_[a];
    parent_[b] = a;
    splice(out_[a], out_[b]);
    splice(in_[a], in_[b]);
    cyclic_[a] = cyclic_[a] || cyclic_[b];
    fwd_[a] = fwd_[a] || fwd_[b];
    bwd_[a] = bwd_[a] || bwd_[b];
    return a;
  }

  static void splice(std::vector<std::uint32_t>& into, std::vector<std::uint32_t>& from) {
    if (into.size() < from.size()) into.swap(from);
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    from.shrink_to_fit();
  }

  void mark_set(std::uint32_t x) { mark_[x] = epoch_; }
  bool marked(std::uint32_t x) const { return mark_[x] == epoch_; }

  const Digraph<W>& g_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::int64_t> ord_;
  std::vector<std::vector<std::uint32_t>> out_, in_;
  std::vector<char> cyclic_, fwd_, bwd_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;
};

}  // namespace detail

// Insertion order for the incremental algorithm: bottom edges first, then
// nondecreasing weight; ties keep edge-id order.
template <typename W>
std::vector<std::uint32_t> sorted_edge_order(const Digraph<W>& g) {
  std::vector<std::uint32_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (g.is_bottom(a) != g.is_bottom(b)) return g.is_bottom(a);
    if (g.is_bottom(a)) return false;
    return g.weight(a) < g.weight(b);
  });
  return order;
}

template <typename W>
SpectrumSets<W> incremental_weight_sets(const Digraph<W>& g,
                                        const std::vector<std::uint32_t>& order) {
  if (order.size() != g.edge_count()) {
    throw std::invalid_argument("incremental_weight_sets: order must cover every edge");
  }
  detail::IncrementalCondensation<W> cond(g);
  std::vector<std::pair<W, std::uint32_t>> lag, mar;
  for (std::uint32_t eid : order) {
    auto [closed, spanning] = cond.insert(eid);
    if (g.is_bottom(eid)) continue;
    if (closed) {
      lag.emplace_back(g.weight(eid), eid);
      mar.emplace_back(g.weight(eid), eid);
    } else if (spanning) {
      mar.emplace_back(g.weight(eid), eid);
    }
  }
  SpectrumSets<W> out;
  detail::sort_dedup_weights(lag, out.lagrange, out.lagrange_witness);
  detail::sort_dedup_weights(mar, out.markov, out.markov_witness);
  return out;
}

template <typename W>
SpectrumSets<W> incremental_weight_sets(const Digraph<W>& g) {
  return incremental_weight_sets(g, sorted_edge_order(g));
}

}  // namespace spectra
