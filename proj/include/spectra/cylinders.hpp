#pragma once

// Minimal prefix-free covers of the digit shift by cylinders of diameter
// at most 1/Q, stored as a trie together with per-leaf exact data.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spectra/cf.hpp"

namespace spectra {

// Prefix tree over the leaf words and all their prefixes.  Every internal
// node has a child for each digit in {1..k} (the cover is a partition), so
// a walk from the root either ends in a leaf or runs out of input.
struct Trie {
  struct Node {
    std::int32_t parent = -1;
    std::int32_t leaf = -1;  // index into the leaf arrays, -1 if internal
    Digit digit = 0;         // edge label from the parent
    std::uint16_t depth = 0;
  };

  int k = 0;
  std::vector<Node> nodes;
  std::vector<std::int32_t> child_table;  // nodes.size() * k entries

  std::int32_t child(std::int32_t node, Digit d) const {
    return child_table[static_cast<std::size_t>(node) * k + (d - 1)];
  }
  std::int32_t add_node(std::int32_t parent, Digit d);
  std::size_t size() const { return nodes.size(); }
};

struct CylinderSet {
  KContext ctx;
  long long q = 0;
  std::vector<Word> words;          // leaves in lexicographic order
  std::vector<Convergents> convs;   // parallel to words
  std::vector<Surd> diams;
  std::vector<Surd> mids;
  std::vector<std::int32_t> leaf_node;  // trie node of each leaf
  Trie trie;

  std::size_t size() const { return words.size(); }
};

// All minimal words whose cylinder has diameter <= 1/q while every proper
// prefix stays above 1/q.  Throws std::invalid_argument when q is too small
// for any cylinder to qualify (diam of the empty word is already <= 1/q).
CylinderSet build_cylinders(const KContext& ctx, long long q);

// Index of the unique leaf that is a prefix of the given digit string.
// Throws std::invalid_argument if the digits run out before a leaf is hit.
std::size_t prefix_leaf(const CylinderSet& cs, const std::vector<Digit>& digits);
const Word& prefix_leaf_word(const CylinderSet& cs, const Word& w);

// Versioned line-oriented text cache: header with k and q, then one leaf
// word per line (single-character digits).  Loading re-derives the exact
// per-leaf data and re-checks the diameter thresholds.
void save_cylinders(const CylinderSet& cs, const std::string& path);
CylinderSet load_cylinders(const std::string& path);
void write_cylinders(const CylinderSet& cs, std::ostream& out);
CylinderSet read_cylinders(std::istream& in);

}  // namespace spectra
