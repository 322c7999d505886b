#include "spectra/cylinders.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spectra {

std::int32_t Trie::add_node(std::int32_t parent, Digit d) {
  auto id = static_cast<std::int32_t>(nodes.size());
  Node n;
  n.parent = parent;
  n.digit = d;
  n.depth = parent < 0 ? 0 : static_cast<std::uint16_t>(nodes[parent].depth + 1);
  nodes.push_back(n);
  child_table.resize(nodes.size() * static_cast<std::size_t>(k), -1);
  if (parent >= 0) {
    child_table[static_cast<std::size_t>(parent) * k + (d - 1)] = id;
  }
  return id;
}

namespace {

struct Builder {
  const KContext& ctx;
  Rational threshold;  // 1/q
  CylinderSet out;
  std::vector<Digit> path;

  explicit Builder(const KContext& c, long long q) : ctx(c), threshold(1, q) {
    out.ctx = c;
    out.q = q;
    out.trie.k = c.k;
    out.trie.add_node(-1, 0);
  }

  void expand(std::int32_t node, const Convergents& conv) {
    for (int d = 1; d <= ctx.k; ++d) {
      Convergents child = conv;
      child.push_digit(static_cast<Digit>(d));
      std::int32_t child_node = out.trie.add_node(node, static_cast<Digit>(d));
      path.push_back(static_cast<Digit>(d));
      Surd diam = cylinder_diam(child, ctx);
      if (diam.compare(threshold) <= 0) {
        out.trie.nodes[child_node].leaf = static_cast<std::int32_t>(out.words.size());
        out.words.emplace_back(path, ctx.k);
        out.convs.push_back(child);
        out.diams.push_back(std::move(diam));
        out.mids.push_back(cylinder_mid(child, ctx));
        out.leaf_node.push_back(child_node);
      } else {
        expand(child_node, child);
      }
      path.pop_back();
    }
  }
};

}  // namespace

CylinderSet build_cylinders(const KContext& ctx, long long q) {
  if (q < 1) throw std::invalid_argument("build_cylinders: q must be positive");
  Builder b(ctx, q);
  Surd root_diam = ctx.alpha_plus - ctx.alpha_minus;
  if (root_diam.compare(b.threshold) <= 0) {
    throw std::invalid_argument(
        "build_cylinders: 1/q already covers the whole digit set; use a larger q");
  }
  b.expand(0, Convergents{});
  return std::move(b.out);
}

std::size_t prefix_leaf(const CylinderSet& cs, const std::vector<Digit>& digits) {
  std::int32_t node = 0;
  for (Digit d : digits) {
    if (d < 1 || static_cast<int>(d) > cs.ctx.k) {
      throw std::invalid_argument("prefix_leaf: digit outside [1,k]");
    }
    if (cs.trie.nodes[node].leaf >= 0) return cs.trie.nodes[node].leaf;
    node = cs.trie.child(node, d);
  }
  if (cs.trie.nodes[node].leaf >= 0) return cs.trie.nodes[node].leaf;
  throw std::invalid_argument("prefix_leaf: no leaf is a prefix of the given word");
}

const Word& prefix_leaf_word(const CylinderSet& cs, const Word& w) {
  if (w.k != cs.ctx.k) throw std::invalid_argument("prefix_leaf: context mismatch");
  return cs.words[prefix_leaf(cs, w.digits)];
}

namespace {
constexpr const char* kCacheMagic = "spectra-cylinders 1";
}

void write_cylinders(const CylinderSet& cs, std::ostream& out) {
  if (cs.ctx.k > 9) {
    throw std::invalid_argument("cylinder cache: single-digit format requires k <= 9");
  }
  out << kCacheMagic << '\n' << cs.ctx.k << ' ' << cs.q << '\n';
  for (const Word& w : cs.words) {
    for (Digit d : w.digits) out << static_cast<char>('0' + d);
    out << '\n';
  }
}

void save_cylinders(const CylinderSet& cs, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cylinder cache: cannot open " + path + " for writing");
  write_cylinders(cs, f);
  if (!f.good()) throw std::runtime_error("cylinder cache: write failed for " + path);
}

CylinderSet read_cylinders(std::istream& in) {
  std::string magic;
  if (!std::getline(in, magic) || magic != kCacheMagic) {
    throw std::runtime_error("cylinder cache: unrecognized header");
  }
  int k = 0;
  long long q = 0;
  {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("cylinder cache: truncated header");
    std::istringstream hs(line);
    if (!(hs >> k >> q)) throw std::runtime_error("cylinder cache: malformed header");
  }
  KContext ctx = make_context(k);
  Rational threshold(1, q);

  CylinderSet cs;
  cs.ctx = ctx;
  cs.q = q;
  cs.trie.k = k;
  cs.trie.add_node(-1, 0);

  std::string line;
  std::vector<Digit> digits;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    digits.clear();
    for (char ch : line) {
      int d = ch - '0';
      if (d < 1 || d > k) throw std::runtime_error("cylinder cache: digit out of range");
      digits.push_back(static_cast<Digit>(d));
    }
    // Insert the leaf, creating internal nodes along the way.
    std::int32_t node = 0;
    Convergents conv;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (cs.trie.nodes[node].leaf >= 0) {
        throw std::runtime_error("cylinder cache: leaf words are not prefix-free");
      }
      conv.push_digit(digits[i]);
      std::int32_t next = cs.trie.child(node, digits[i]);
      if (next < 0) next = cs.trie.add_node(node, digits[i]);
      node = next;
    }
    if (cs.trie.nodes[node].leaf >= 0 ||
        cs.trie.child_table[static_cast<std::size_t>(node) * k] >= 0) {
      throw std::runtime_error("cylinder cache: leaf words are not prefix-free");
    }
    Surd diam = cylinder_diam(conv, ctx);
    if (diam.compare(threshold) > 0) {
      throw std::runtime_error("cylinder cache: stored word is not a valid leaf");
    }
    cs.trie.nodes[node].leaf = static_cast<std::int32_t>(cs.words.size());
    cs.words.emplace_back(digits, k);
    cs.convs.push_back(conv);
    cs.diams.push_back(std::move(diam));
    cs.mids.push_back(cylinder_mid(conv, ctx));
    cs.leaf_node.push_back(node);
  }

  // Structural completeness: every internal node needs all k children and a
  // diameter above the threshold, otherwise the file does not describe the
  // minimal cover for (k, q).
  for (std::size_t id = 0; id < cs.trie.size(); ++id) {
    const auto& n = cs.trie.nodes[id];
    if (n.leaf >= 0) continue;
    for (int d = 1; d <= k; ++d) {
      if (cs.trie.child(static_cast<std::int32_t>(id), static_cast<Digit>(d)) < 0) {
        throw std::runtime_error("cylinder cache: cover is incomplete");
      }
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::int32_t parent = cs.trie.nodes[cs.leaf_node[i]].parent;
    if (parent < 0) throw std::runtime_error("cylinder cache: empty word leaf");
    if (parent == 0) continue;  // the root diameter was checked at build time
    Word parent_word(std::vector<Digit>(cs.words[i].digits.begin(),
                                        cs.words[i].digits.end() - 1),
                     k);
    if (cylinder_diam(parent_word, ctx).compare(threshold) <= 0) {
      throw std::runtime_error("cylinder cache: stored word is not minimal");
    }
  }
  return cs;
}

CylinderSet load_cylinders(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cylinder cache: cannot open " + path);
  return read_cylinders(f);
}

}  // namespace spectra
