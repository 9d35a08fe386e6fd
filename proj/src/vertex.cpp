#include "nfree/vertex.hpp"

#include <cctype>
#include <vector>

#include "nfree/errors.hpp"

namespace nfree {

namespace {

constexpr const char* kDummyAtom = "_d";

bool compare_nodes_eq(const VertexId::Node& a, const VertexId::Node& b) {
  if (a.round != b.round) return false;
  if (a.round == 0) return a.label == b.label;
  return compare_nodes_eq(*a.lower, *b.lower) &&
         compare_nodes_eq(*a.upper, *b.upper);
}

std::strong_ordering compare_nodes(const VertexId::Node& a,
                                   const VertexId::Node& b) {
  const bool a_dummy = a.round != 0;
  const bool b_dummy = b.round != 0;
  if (a_dummy != b_dummy)
    return a_dummy ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a_dummy) return a.label.compare(b.label) <=> 0;
  if (auto c = compare_nodes(*a.lower, *b.lower); c != 0) return c;
  if (auto c = compare_nodes(*a.upper, *b.upper); c != 0) return c;
  return a.round <=> b.round;
}

void encode_node(const VertexId::Node& n, std::string& out) {
  if (n.round == 0) {
    out += n.label;
    return;
  }
  out += kDummyAtom;
  out += '.';
  encode_node(*n.lower, out);
  out += '.';
  encode_node(*n.upper, out);
  out += '.';
  out += std::to_string(n.round);
}

}  // namespace

bool VertexId::valid_label(const std::string& label) {
  if (label.empty()) return false;
  if (label == kDummyAtom) return false;
  for (unsigned char ch : label) {
    if (std::isspace(ch) || ch == '<' || ch == '#' || ch == '.') return false;
  }
  return true;
}

VertexId VertexId::original(std::string label) {
  if (!valid_label(label))
    throw InvalidLabelError("invalid element label '" + label +
                            "': labels must be nonempty, free of whitespace, "
                            "'<', '#' and '.', and must not be the reserved "
                            "atom '_d'");
  auto node = std::make_shared<Node>();
  node->label = std::move(label);
  return VertexId(std::move(node));
}

VertexId VertexId::dummy(const VertexId& lower, const VertexId& upper,
                         int round) {
  if (round < 1)
    throw InvalidLabelError("dummy round must be a positive integer");
  auto node = std::make_shared<Node>();
  node->lower = lower.node_;
  node->upper = upper.node_;
  node->round = round;
  return VertexId(std::move(node));
}

const std::string& VertexId::label() const {
  if (!is_original()) throw InvalidLabelError("dummy vertex has no label");
  return node_->label;
}

VertexId VertexId::lower() const {
  if (!is_dummy())
    throw InvalidLabelError("original vertex has no lower endpoint");
  return VertexId(node_->lower);
}

VertexId VertexId::upper() const {
  if (!is_dummy())
    throw InvalidLabelError("original vertex has no upper endpoint");
  return VertexId(node_->upper);
}

int VertexId::round() const { return node_->round; }

std::string VertexId::encode() const {
  std::string out;
  encode_node(*node_, out);
  return out;
}

namespace {

VertexId decode_atoms(const std::vector<std::string>& atoms, std::size_t& pos,
                      const std::string& full);

int decode_round(const std::vector<std::string>& atoms, std::size_t& pos,
                 const std::string& full) {
  if (pos >= atoms.size())
    throw InvalidLabelError("truncated dummy encoding in '" + full + "'");
  const std::string& atom = atoms[pos++];
  if (atom.empty()) throw InvalidLabelError("empty atom in '" + full + "'");
  long value = 0;
  for (unsigned char ch : atom) {
    if (!std::isdigit(ch))
      throw InvalidLabelError("expected a round number, got '" + atom +
                              "' in '" + full + "'");
    value = value * 10 + (ch - '0');
    if (value > 1'000'000'000)
      throw InvalidLabelError("round number out of range in '" + full + "'");
  }
  if (value < 1)
    throw InvalidLabelError("dummy round must be positive in '" + full + "'");
  return static_cast<int>(value);
}

VertexId decode_atoms(const std::vector<std::string>& atoms, std::size_t& pos,
                      const std::string& full) {
  if (pos >= atoms.size())
    throw InvalidLabelError("truncated dummy encoding in '" + full + "'");
  if (atoms[pos] == kDummyAtom) {
    ++pos;
    VertexId lower = decode_atoms(atoms, pos, full);
    VertexId upper = decode_atoms(atoms, pos, full);
    int round = decode_round(atoms, pos, full);
    return VertexId::dummy(lower, upper, round);
  }
  return VertexId::original(atoms[pos++]);
}

}  // namespace

VertexId VertexId::decode(const std::string& text) {
  std::vector<std::string> atoms;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string::npos) {
      atoms.push_back(text.substr(start));
      break;
    }
    atoms.push_back(text.substr(start, dot - start));
    start = dot + 1;
  }
  std::size_t pos = 0;
  VertexId v = decode_atoms(atoms, pos, text);
  if (pos != atoms.size())
    throw InvalidLabelError("trailing atoms in vertex encoding '" + text + "'");
  return v;
}

std::strong_ordering VertexId::operator<=>(const VertexId& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  return compare_nodes(*node_, *other.node_);
}

bool VertexId::operator==(const VertexId& other) const {
  if (node_ == other.node_) return true;
  return compare_nodes_eq(*node_, *other.node_);
}

}  // namespace nfree
