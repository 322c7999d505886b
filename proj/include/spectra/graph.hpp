#pragma once

// Suffix links over the cylinder trie, the one-sided automaton on the
// suffix-link endpoints, and the weighted product graph whose biinfinite
// paths read exactly the digit sequences of the bounded shift.

#include <cstdint>
#include <vector>

#include "spectra/cylinders.hpp"
#include "spectra/digraph.hpp"

namespace spectra {

inline constexpr std::size_t no_leaf = static_cast<std::size_t>(-1);
inline constexpr std::size_t no_pos = static_cast<std::size_t>(-1);

// Cylinder trie enriched with, per leaf, the node holding the leaf's word
// minus its first digit.  That node always exists: dropping the front digit
// shrinks every prefix's denominator growth, so the walk stays strictly
// inside the internal part of the trie until the final step.
struct SuffixTrie {
  Trie trie;
  int k = 0;
  std::vector<Word> words;                  // leaf index -> word
  std::vector<std::int32_t> leaf_node;      // leaf index -> trie node
  std::vector<std::int32_t> suffix_link;    // leaf index -> target node
  std::vector<char> vplus;                  // node -> is a suffix-link target
  std::vector<std::int32_t> vplus_nodes;    // ascending list of targets
};

SuffixTrie build_trie(const CylinderSet& cs);

// Word spelled by the root-to-node path.
Word node_word(const Trie& trie, std::int32_t node, int k);

// Automaton on the suffix-link targets.  Prolongation edges compress the
// tree paths between consecutive targets; each leaf contributes one shift
// edge from its deepest target ancestor (possibly the leaf itself, giving
// an empty label) to its suffix-link node.
struct GPlusEdge {
  std::int32_t src_node = -1;
  std::int32_t dst_node = -1;
  bool shift = false;
  Word label;
  std::size_t leaf = no_leaf;  // consumed leaf, shift edges only
};

struct GPlus {
  std::vector<std::int32_t> vertices;
  std::vector<GPlusEdge> edges;
};

GPlus build_gplus(const SuffixTrie& t);

// Provenance of one shift edge: the exact data its weight was built from.
struct ShiftInfo {
  std::uint32_t past_leaf = 0;
  std::uint32_t future_leaf = 0;
  Digit a0 = 0;
};

// Product graph over states (past leaf p, current digit a0, future trie
// node u).  For each digit the future component ranges over the subtrees
// hanging from that digit's entry nodes (the suffix-link images of leaves
// starting with the digit); those subtrees are disjoint and jointly contain
// every leaf, which keeps the graph strongly connected and the shift edges
// in bijection with (p, a0, s) triples.
struct ProductGraph {
  CylinderSet cs;
  SuffixTrie links;

  // Per digit a0 (index a0-1): materialized nodes, positions, entry of each
  // position, and the base vertex id of the block.
  std::vector<std::vector<std::int32_t>> block_nodes;
  std::vector<std::vector<std::int32_t>> block_entry;
  std::vector<std::vector<std::size_t>> node_pos;
  std::vector<std::size_t> block_base;

  Digraph<Surd> graph;
  std::vector<std::int32_t> edge_shift;  // edge -> index into shifts, -1 if prolongation
  std::vector<ShiftInfo> shifts;
  std::size_t shift_edge_count = 0;
  std::size_t prolongation_edge_count = 0;

  // Out-edges in CSR form, for walk encoding.
  std::vector<std::uint32_t> out_start;
  std::vector<std::uint32_t> out_edge;

  struct VertexInfo {
    std::size_t past_leaf;
    Digit a0;
    std::int32_t node;
  };
  VertexInfo vertex_info(std::uint32_t v) const;
  std::uint32_t vertex_id(std::size_t past_leaf, Digit a0, std::int32_t node) const;
};

ProductGraph build_product(const CylinderSet& cs);

// Contraction of the prolongation chains: one vertex per (past leaf, digit,
// entry node); every edge is a shift edge with its original weight, so the
// weight multiset and the cycle structure through shift edges are intact.
struct CompressedProduct {
  std::vector<std::vector<std::int32_t>> block_entries;
  std::vector<std::vector<std::size_t>> entry_pos;
  std::vector<std::size_t> block_base;
  std::size_t leaf_count = 0;
  Digraph<Surd> graph;
  std::vector<ShiftInfo> shifts;  // parallel to the edges

  std::uint32_t vertex_id(std::size_t past_leaf, Digit a0, std::int32_t entry) const;
};

CompressedProduct compress_product(const ProductGraph& pg);

// Edge path through the product graph reading a digit window.  The window
// carries a marked origin; digits before it are displayed context only.
struct Walk {
  std::uint32_t start = 0;
  std::vector<std::uint32_t> edges;
};

// Unique path reading window[origin:] when the past component starts at the
// leaf left_pad and the current digit is a0 (which must equal the digit at
// the origin).  Throws std::invalid_argument when the window ends before
// the first future cylinder is resolved ("insufficient context").
Walk encode_walk(const ProductGraph& g, const std::vector<Digit>& window,
                 std::size_t origin, std::size_t left_pad, Digit a0);

// Digits read along the walk: the start state's digit and future word, then
// one digit per prolongation edge.  Inverse of encode_walk.
std::vector<Digit> decode_walk(const ProductGraph& g, const Walk& walk);

// Published upper-bound formula for the edge count; reported against the
// actual count, never asserted.
double edge_count_bound(const CylinderSet& cs);

}  // namespace spectra
