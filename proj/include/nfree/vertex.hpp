#pragma once

#include <compare>
#include <memory>
#include <string>

namespace nfree {

// A poset vertex: either an original element carrying its label, or a dummy
// created by subdividing a cover edge. A dummy is identified by the edge it
// subdivides plus a round counter, so subdividing the same (lower, upper)
// pair again yields a distinct vertex. Values are immutable and cheap to
// copy.
//
// Canonical text form: originals print as their label, dummies as
// "_d.<lower>.<upper>.<round>". To keep that form round-trippable, original
// labels may not contain whitespace, '<', '#', or '.', and "_d" itself is
// reserved.
class VertexId {
 public:
  static VertexId original(std::string label);  // throws InvalidLabelError
  static VertexId dummy(const VertexId& lower, const VertexId& upper,
                        int round);

  bool is_original() const { return node_->round == 0; }
  bool is_dummy() const { return node_->round != 0; }

  const std::string& label() const;  // originals only
  VertexId lower() const;            // dummies only
  VertexId upper() const;
  int round() const;

  std::string encode() const;
  static VertexId decode(const std::string& text);  // throws InvalidLabelError

  static bool valid_label(const std::string& label);

  // Originals sort before dummies; originals by label, dummies by
  // (lower, upper, round).
  std::strong_ordering operator<=>(const VertexId& other) const;
  bool operator==(const VertexId& other) const;

 private:
  struct Node;
  explicit VertexId(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct VertexId::Node {
  std::string label;  // originals
  std::shared_ptr<const Node> lower, upper;
  int round = 0;  // 0 marks an original
};

// An ordered covering pair of some poset, lower ≺ upper.
struct Edge {
  VertexId lower;
  VertexId upper;

  std::strong_ordering operator<=>(const Edge& other) const = default;
  bool operator==(const Edge& other) const = default;

  std::string encode() const { return lower.encode() + "<" + upper.encode(); }
};

}  // namespace nfree
