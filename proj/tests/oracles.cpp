#include "oracles.hpp"

#include <algorithm>
#include <utility>

namespace oracles {

namespace {

// Pairs the smallest remaining element with each possible partner.
long long count_matchings(std::vector<int>& elements) {
  if (elements.empty()) return 1;
  long long total = 0;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < elements.size(); ++j) {
      if (j != i) rest.push_back(elements[j]);
    }
    total += count_matchings(rest);
  }
  return total;
}

void build_matchings(std::vector<int>& elements,
                     std::vector<std::pair<int, int>>& blocks,
                     std::set<std::string>& out) {
  if (elements.empty()) {
    // Blocks already come out sorted by smaller element: each step pairs the
    // smallest remaining element.
    std::string text;
    for (const auto& [a, b] : blocks) {
      text += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    out.insert(text);
    return;
  }
  const int first = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < elements.size(); ++j) {
      if (j != i) rest.push_back(elements[j]);
    }
    blocks.emplace_back(first, elements[i]);
    build_matchings(rest, blocks, out);
    blocks.pop_back();
  }
}

struct OTree {
  int leaf = 0;  // >0 iff leaf
  std::vector<OTree> kids;
};

int otree_min_leaf(const OTree& t) {
  if (t.kids.empty()) return t.leaf;
  return std::min(otree_min_leaf(t.kids[0]), otree_min_leaf(t.kids[1]));
}

std::string otree_text(const OTree& t) {
  if (t.kids.empty()) return std::to_string(t.leaf);
  const std::string a = otree_text(t.kids[0]);
  const std::string b = otree_text(t.kids[1]);
  if (otree_min_leaf(t.kids[0]) <= otree_min_leaf(t.kids[1])) {
    return "(" + a + "," + b + ")";
  }
  return "(" + b + "," + a + ")";
}

// Every node of the tree marks one insertion position: the edge above it
// (above the root: a fresh root). `slot` counts down in preorder.
bool insert_leaf_at(OTree& t, int leaf, int& slot) {
  if (slot == 0) {
    OTree joined;
    joined.kids.push_back(std::move(t));
    joined.kids.push_back(OTree{leaf, {}});
    t = std::move(joined);
    return true;
  }
  --slot;
  for (OTree& kid : t.kids) {
    if (insert_leaf_at(kid, leaf, slot)) return true;
  }
  return false;
}

int otree_node_count(const OTree& t) {
  int total = 1;
  for (const OTree& kid : t.kids) total += otree_node_count(kid);
  return total;
}

void grow_trees(const OTree& t, int next_leaf, int max_leaf,
                std::set<std::string>& out) {
  if (next_leaf > max_leaf) {
    out.insert(otree_text(t));
    return;
  }
  const int positions = otree_node_count(t);
  for (int pos = 0; pos < positions; ++pos) {
    OTree copy = t;
    int slot = pos;
    insert_leaf_at(copy, next_leaf, slot);
    grow_trees(copy, next_leaf + 1, max_leaf, out);
  }
}

void digit_vectors(int n, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  const int bound = 2 * static_cast<int>(prefix.size() + 1) - 1;
  for (int x = 1; x <= bound; ++x) {
    prefix.push_back(x);
    digit_vectors(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

long long count_pair_partitions(int n) {
  std::vector<int> elements;
  for (int i = 1; i <= 2 * n; ++i) elements.push_back(i);
  return count_matchings(elements);
}

std::set<std::string> enumerate_pair_partitions(int n) {
  std::vector<int> elements;
  for (int i = 1; i <= 2 * n; ++i) elements.push_back(i);
  std::vector<std::pair<int, int>> blocks;
  std::set<std::string> out;
  build_matchings(elements, blocks, out);
  return out;
}

std::set<std::string> enumerate_phylo_trees(int n) {
  std::set<std::string> out;
  grow_trees(OTree{1, {}}, 2, n + 1, out);
  return out;
}

std::vector<std::vector<int>> lex_digit_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  digit_vectors(n, prefix, out);
  return out;
}

}  // namespace oracles
