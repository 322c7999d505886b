#include "spectra/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace spectra {

namespace {

bool is_leaf_node(const Trie& trie, std::int32_t node) {
  return trie.nodes[node].leaf >= 0;
}

}  // namespace

Word node_word(const Trie& trie, std::int32_t node, int k) {
  std::vector<Digit> digits;
  for (std::int32_t n = node; n > 0; n = trie.nodes[n].parent) {
    digits.push_back(trie.nodes[n].digit);
  }
  std::reverse(digits.begin(), digits.end());
  return Word(std::move(digits), k);
}

SuffixTrie build_trie(const CylinderSet& cs) {
  SuffixTrie t;
  t.trie = cs.trie;
  t.k = cs.ctx.k;
  t.words = cs.words;
  t.leaf_node = cs.leaf_node;
  t.suffix_link.resize(cs.size());
  t.vplus.assign(cs.trie.size(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& d = cs.words[i].digits;
    std::int32_t node = 0;
    for (std::size_t j = 1; j < d.size(); ++j) {
      node = t.trie.child(node, d[j]);
      if (node < 0) throw std::logic_error("build_trie: suffix walk left the trie");
    }
    t.suffix_link[i] = node;
    t.vplus[node] = 1;
  }
  for (std::size_t n = 0; n < t.vplus.size(); ++n) {
    if (t.vplus[n]) t.vplus_nodes.push_back(static_cast<std::int32_t>(n));
  }
  return t;
}

GPlus build_gplus(const SuffixTrie& t) {
  GPlus g;
  g.vertices = t.vplus_nodes;

  // Prolongation edges: from each target, descend every branch until the
  // next target below.  Branches that dead-end in a plain leaf read no
  // further input and are dropped.
  for (std::int32_t v : t.vplus_nodes) {
    if (is_leaf_node(t.trie, v)) continue;
    struct Item {
      std::int32_t node;
      std::vector<Digit> label;
    };
    std::vector<Item> stack;
    for (int d = t.k; d >= 1; --d) {
      std::int32_t c = t.trie.child(v, static_cast<Digit>(d));
      if (c >= 0) stack.push_back({c, {static_cast<Digit>(d)}});
    }
    while (!stack.empty()) {
      Item it = std::move(stack.back());
      stack.pop_back();
      if (t.vplus[it.node]) {
        g.edges.push_back({v, it.node, false, Word(it.label, t.k), no_leaf});
        continue;
      }
      if (is_leaf_node(t.trie, it.node)) continue;
      for (int d = t.k; d >= 1; --d) {
        std::int32_t c = t.trie.child(it.node, static_cast<Digit>(d));
        if (c < 0) continue;
        auto label = it.label;
        label.push_back(static_cast<Digit>(d));
        stack.push_back({c, std::move(label)});
      }
    }
  }

  // One shift edge per leaf, rooted at the leaf's deepest target ancestor
  // (the leaf itself when it is a target, giving an empty label).
  for (std::size_t i = 0; i < t.leaf_node.size(); ++i) {
    std::int32_t n = t.leaf_node[i];
    while (n >= 0 && !t.vplus[n]) n = t.trie.nodes[n].parent;
    if (n < 0) throw std::logic_error("build_gplus: leaf without a target ancestor");
    const auto& w = t.words[i].digits;
    std::size_t from = t.trie.nodes[n].depth;
    std::vector<Digit> label(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
    g.edges.push_back({n, t.suffix_link[i], true, Word(std::move(label), t.k), i});
  }
  return g;
}

ProductGraph::VertexInfo ProductGraph::vertex_info(std::uint32_t v) const {
  int a0 = cs.ctx.k;
  while (a0 > 1 && block_base[a0 - 1] > v) --a0;
  std::size_t r = v - block_base[a0 - 1];
  std::size_t n = cs.size();
  return {r % n, static_cast<Digit>(a0), block_nodes[a0 - 1][r / n]};
}

std::uint32_t ProductGraph::vertex_id(std::size_t past_leaf, Digit a0,
                                      std::int32_t node) const {
  std::size_t pos = node_pos[a0 - 1][node];
  if (pos == no_pos) throw std::logic_error("vertex_id: node not in the digit's block");
  return static_cast<std::uint32_t>(block_base[a0 - 1] + pos * cs.size() + past_leaf);
}

ProductGraph build_product(const CylinderSet& cs) {
  ProductGraph pg;
  pg.cs = cs;
  pg.links = build_trie(cs);
  const int k = cs.ctx.k;
  const std::size_t n_leaves = cs.size();
  const Trie& trie = pg.cs.trie;

  pg.block_nodes.resize(k);
  pg.block_entry.resize(k);
  pg.node_pos.assign(k, std::vector<std::size_t>(trie.size(), no_pos));
  pg.block_base.resize(k);

  // Entry nodes per digit: the suffix-link images of the leaves starting
  // with that digit, in leaf order.  They are pairwise non-nested, so the
  // subtree walk below visits each block node exactly once.
  for (std::size_t i = 0; i < n_leaves; ++i) {
    Digit first = cs.words[i].digits.front();
    std::int32_t entry = pg.links.suffix_link[i];
    auto& nodes = pg.block_nodes[first - 1];
    auto& entry_of = pg.block_entry[first - 1];
    auto& pos = pg.node_pos[first - 1];
    if (pos[entry] != no_pos) throw std::logic_error("build_product: nested entries");
    std::vector<std::int32_t> stack{entry};
    while (!stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      pos[u] = nodes.size();
      nodes.push_back(u);
      entry_of.push_back(entry);
      if (is_leaf_node(trie, u)) continue;
      for (int d = k; d >= 1; --d) {
        std::int32_t c = trie.child(u, static_cast<Digit>(d));
        if (c >= 0) stack.push_back(c);
      }
    }
  }

  std::size_t total = 0;
  for (int a0 = 1; a0 <= k; ++a0) {
    pg.block_base[a0 - 1] = total;
    total += pg.block_nodes[a0 - 1].size() * n_leaves;
  }
  pg.graph.add_vertices(static_cast<std::uint32_t>(total));

  // prefix_leaf(a0 . p) lookups, shared by all futures of a block row
  std::vector<std::vector<std::size_t>> plshift(k, std::vector<std::size_t>(n_leaves));
  for (int a0 = 1; a0 <= k; ++a0) {
    for (std::size_t p = 0; p < n_leaves; ++p) {
      plshift[a0 - 1][p] =
          prefix_leaf(pg.cs, cs.words[p].prepended(static_cast<Digit>(a0)).digits);
    }
  }

  for (int a0 = 1; a0 <= k; ++a0) {
    for (std::int32_t u : pg.block_nodes[a0 - 1]) {
      if (!is_leaf_node(trie, u)) {
        for (std::size_t p = 0; p < n_leaves; ++p) {
          std::uint32_t from = pg.vertex_id(p, static_cast<Digit>(a0), u);
          for (int d = 1; d <= k; ++d) {
            std::int32_t c = trie.child(u, static_cast<Digit>(d));
            pg.graph.add_bottom_edge(from, pg.vertex_id(p, static_cast<Digit>(a0), c));
            pg.edge_shift.push_back(-1);
            ++pg.prolongation_edge_count;
          }
        }
        continue;
      }
      std::size_t s = static_cast<std::size_t>(trie.nodes[u].leaf);
      Digit s1 = cs.words[s].digits.front();
      std::int32_t target = pg.links.suffix_link[s];
      for (std::size_t p = 0; p < n_leaves; ++p) {
        std::uint32_t from = pg.vertex_id(p, static_cast<Digit>(a0), u);
        std::uint32_t to = pg.vertex_id(plshift[a0 - 1][p], s1, target);
        Surd weight = Surd(Rational(a0)) + cs.mids[p] + cs.mids[s];
        pg.graph.add_edge(from, to, std::move(weight));
        pg.edge_shift.push_back(static_cast<std::int32_t>(pg.shifts.size()));
        pg.shifts.push_back({static_cast<std::uint32_t>(p),
                             static_cast<std::uint32_t>(s), static_cast<Digit>(a0)});
        ++pg.shift_edge_count;
      }
    }
  }

  pg.out_start.assign(pg.graph.n_vertices + 1, 0);
  for (std::size_t e = 0; e < pg.graph.edge_count(); ++e) ++pg.out_start[pg.graph.src[e] + 1];
  for (std::size_t v = 0; v < pg.graph.n_vertices; ++v) pg.out_start[v + 1] += pg.out_start[v];
  pg.out_edge.resize(pg.graph.edge_count());
  {
    std::vector<std::uint32_t> cursor(pg.out_start.begin(), pg.out_start.end() - 1);
    for (std::size_t e = 0; e < pg.graph.edge_count(); ++e) {
      pg.out_edge[cursor[pg.graph.src[e]]++] = static_cast<std::uint32_t>(e);
    }
  }
  return pg;
}

std::uint32_t CompressedProduct::vertex_id(std::size_t past_leaf, Digit a0,
                                           std::int32_t entry) const {
  std::size_t pos = entry_pos[a0 - 1][entry];
  if (pos == no_pos) throw std::logic_error("vertex_id: not an entry of the digit's block");
  return static_cast<std::uint32_t>(block_base[a0 - 1] + pos * leaf_count + past_leaf);
}

CompressedProduct compress_product(const ProductGraph& pg) {
  CompressedProduct cp;
  const int k = pg.cs.ctx.k;
  const std::size_t n_leaves = pg.cs.size();
  cp.leaf_count = n_leaves;
  cp.block_entries.resize(k);
  cp.entry_pos.assign(k, std::vector<std::size_t>(pg.cs.trie.size(), no_pos));
  cp.block_base.resize(k);

  std::size_t total = 0;
  for (int a0 = 1; a0 <= k; ++a0) {
    auto& entries = cp.block_entries[a0 - 1];
    for (std::int32_t e : pg.block_entry[a0 - 1]) {
      if (entries.empty() || entries.back() != e) {
        cp.entry_pos[a0 - 1][e] = entries.size();
        entries.push_back(e);
      }
    }
    cp.block_base[a0 - 1] = total;
    total += entries.size() * n_leaves;
  }
  cp.graph.add_vertices(static_cast<std::uint32_t>(total));

  for (std::size_t e = 0; e < pg.graph.edge_count(); ++e) {
    std::int32_t si = pg.edge_shift[e];
    if (si < 0) continue;
    const ShiftInfo& info = pg.shifts[si];
    auto from_info = pg.vertex_info(pg.graph.src[e]);
    auto to_info = pg.vertex_info(pg.graph.dst[e]);
    std::size_t from_pos = pg.node_pos[from_info.a0 - 1][from_info.node];
    std::int32_t from_entry = pg.block_entry[from_info.a0 - 1][from_pos];
    std::uint32_t from = cp.vertex_id(from_info.past_leaf, from_info.a0, from_entry);
    std::uint32_t to = cp.vertex_id(to_info.past_leaf, to_info.a0, to_info.node);
    cp.graph.add_edge(from, to, pg.graph.weight(e));
    cp.shifts.push_back(info);
  }
  return cp;
}

Walk encode_walk(const ProductGraph& g, const std::vector<Digit>& window,
                 std::size_t origin, std::size_t left_pad, Digit a0) {
  const int k = g.cs.ctx.k;
  if (origin >= window.size()) {
    throw std::invalid_argument("encode_walk: origin outside the window");
  }
  for (Digit d : window) {
    if (d < 1 || d > k) throw std::invalid_argument("encode_walk: digit out of range");
  }
  if (a0 != window[origin]) {
    throw std::invalid_argument("encode_walk: a0 must be the digit at the origin");
  }
  if (left_pad >= g.cs.size()) {
    throw std::invalid_argument("encode_walk: left_pad is not a leaf index");
  }

  std::vector<Digit> future(window.begin() + static_cast<std::ptrdiff_t>(origin) + 1,
                            window.end());
  std::size_t s0;
  try {
    s0 = prefix_leaf(g.cs, future);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "encode_walk: insufficient context, the window ends inside the first cylinder");
  }

  Walk walk;
  std::uint32_t cur = g.vertex_id(left_pad, a0, g.cs.leaf_node[s0]);
  walk.start = cur;
  std::size_t next = origin + 1 + g.cs.words[s0].size();
  const Trie& trie = g.cs.trie;

  while (true) {
    auto info = g.vertex_info(cur);
    if (trie.nodes[info.node].leaf >= 0) {
      // A leaf has exactly one outgoing edge: its shift.
      std::uint32_t e = g.out_edge[g.out_start[cur]];
      walk.edges.push_back(e);
      cur = g.graph.dst[e];
      continue;
    }
    if (next >= window.size()) break;
    Digit c = window[next];
    ++next;
    std::int32_t child = trie.child(info.node, c);
    bool advanced = false;
    for (std::uint32_t idx = g.out_start[cur]; idx < g.out_start[cur + 1]; ++idx) {
      std::uint32_t e = g.out_edge[idx];
      if (g.edge_shift[e] >= 0) continue;
      if (g.vertex_info(g.graph.dst[e]).node == child) {
        walk.edges.push_back(e);
        cur = g.graph.dst[e];
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("encode_walk: missing prolongation edge");
  }
  return walk;
}

std::vector<Digit> decode_walk(const ProductGraph& g, const Walk& walk) {
  auto info = g.vertex_info(walk.start);
  std::vector<Digit> out{info.a0};
  Word start_word = node_word(g.cs.trie, info.node, g.cs.ctx.k);
  out.insert(out.end(), start_word.digits.begin(), start_word.digits.end());
  std::uint32_t cur = walk.start;
  for (std::uint32_t e : walk.edges) {
    if (g.graph.src[e] != cur) {
      throw std::invalid_argument("decode_walk: edges do not form a path");
    }
    cur = g.graph.dst[e];
    if (g.edge_shift[e] < 0) {
      out.push_back(g.cs.trie.nodes[g.vertex_info(cur).node].digit);
    }
  }
  return out;
}

double edge_count_bound(const CylinderSet& cs) {
  double c = static_cast<double>(cs.size());
  double k = cs.ctx.k;
  double inner = (k * (k + 1) + 1) * (k + 2) * static_cast<double>(cs.q) / k;
  return c * (c + std::log2(inner));
}

}  // namespace spectra
