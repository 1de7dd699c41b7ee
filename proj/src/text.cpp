#include "treebij/text.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace treebij {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // Decimal nonnegative integer. Leading zeros accepted, value range guarded.
  int read_int() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a decimal integer", pos_);
    }
    const std::size_t start = pos_;
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError("integer too large", start);
      }
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PortNode parse_port_node(Cursor& in) {
  PortNode node;
  node.label = in.read_int();
  if (in.try_consume('(')) {
    node.children.push_back(parse_port_node(in));
    while (in.try_consume(',')) {
      node.children.push_back(parse_port_node(in));
    }
    in.expect(')');
  }
  return node;
}

PhyloNode parse_phylo_node(Cursor& in) {
  PhyloNode node;
  if (in.try_consume('(')) {
    node.children.push_back(parse_phylo_node(in));
    in.expect(',');
    node.children.push_back(parse_phylo_node(in));
    in.expect(')');
  } else {
    node.leaf_label = in.read_int();
  }
  return node;
}

void write_port(const PortNode& node, std::string& out) {
  out += std::to_string(node.label);
  if (node.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ',';
    write_port(node.children[i], out);
  }
  out += ')';
}

void write_phylo(const PhyloNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += std::to_string(node.leaf_label);
    return;
  }
  out += '(';
  write_phylo(node.children[0], out);
  out += ',';
  write_phylo(node.children[1], out);
  out += ')';
}

}  // namespace

TrapezoidalWord parse_word(std::string_view text) {
  Cursor in(text);
  std::vector<int> digits;
  if (!in.at_end()) {
    digits.push_back(in.read_int());
    while (in.try_consume(',')) {
      digits.push_back(in.read_int());
    }
    in.expect_end();
  }
  return TrapezoidalWord::from_digits(std::move(digits));
}

std::string format_word(const TrapezoidalWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.digits().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w.digits()[i]);
  }
  return out;
}

TwoPartition parse_partition(std::string_view text) {
  Cursor in(text);
  std::vector<TwoPartition::Block> blocks;
  while (!in.at_end()) {
    in.expect('{');
    const int a = in.read_int();
    in.expect(',');
    const int b = in.read_int();
    in.expect('}');
    blocks.emplace_back(a, b);
  }
  return TwoPartition::from_blocks(std::move(blocks));
}

std::string format_partition(const TwoPartition& p) {
  std::string out;
  for (const auto& [a, b] : p.blocks()) {
    out += '{';
    out += std::to_string(a);
    out += ',';
    out += std::to_string(b);
    out += '}';
  }
  return out;
}

Port parse_port(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) {
    throw ParseError("expected a port term", in.pos());
  }
  PortNode root = parse_port_node(in);
  in.expect_end();
  return Port::from_root(std::move(root));
}

std::string format_port(const Port& t) {
  std::string out;
  write_port(t.root(), out);
  return out;
}

PhyloTree parse_phylo(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) {
    throw ParseError("expected a phylogenetic tree term", in.pos());
  }
  PhyloNode root = parse_phylo_node(in);
  in.expect_end();
  return PhyloTree::from_root(std::move(root));
}

std::string format_phylo(const PhyloTree& t) {
  std::string out;
  write_phylo(t.root(), out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const TrapezoidalWord& w) {
  return os << format_word(w);
}

std::ostream& operator<<(std::ostream& os, const TwoPartition& p) {
  return os << format_partition(p);
}

std::ostream& operator<<(std::ostream& os, const Port& t) {
  return os << format_port(t);
}

std::ostream& operator<<(std::ostream& os, const PhyloTree& t) {
  return os << format_phylo(t);
}

}  // namespace treebij
