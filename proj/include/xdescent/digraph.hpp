#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace xdescent {

/// Loop-free directed graph on vertex set {1,...,n}, n <= 64. Adjacency is
/// stored as one out-neighbor bitmask per vertex (bit v-1 of out_mask(u)
/// means the edge u -> v is present).
class Digraph {
 public:
  explicit Digraph(int n);

  int size() const { return n_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Out-neighbors of u as a 0-based bitmask.
  std::uint64_t out_mask(int u) const { return out_[static_cast<std::size_t>(u - 1)]; }

  int edge_count() const;

  /// Complement relative to all ordered pairs u != v.
  Digraph complement() const;

  bool is_tournament() const;

  static Digraph complete(int n);

  /// Text fixture format: first line n, then one "u v" line per edge.
  static Digraph parse(std::istream& in);
  void write(std::ostream& out) const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> out_;
};

}  // namespace xdescent
