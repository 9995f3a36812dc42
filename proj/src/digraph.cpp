#include "xdescent/digraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "xdescent/errors.hpp"

namespace xdescent {

namespace {

void check_vertex(int v, int n) {
  if (v < 1 || v > n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) +
                            "]");
  }
}

}  // namespace

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > 64) {
    throw std::invalid_argument("digraph size must be in [0,64], got " + std::to_string(n));
  }
}

void Digraph::add_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
  out_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
}

void Digraph::remove_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  out_[static_cast<std::size_t>(u - 1)] &= ~(std::uint64_t{1} << (v - 1));
}

bool Digraph::has_edge(int u, int v) const {
  check_vertex(u, n_);
  check_vertex(v, n_);
  return (out_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1;
}

int Digraph::edge_count() const {
  int total = 0;
  for (auto mask : out_) total += __builtin_popcountll(mask);
  return total;
}

Digraph Digraph::complement() const {
  Digraph c(n_);
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (int u = 1; u <= n_; ++u) {
    c.out_[static_cast<std::size_t>(u - 1)] =
        all & ~out_[static_cast<std::size_t>(u - 1)] & ~(std::uint64_t{1} << (u - 1));
  }
  return c;
}

bool Digraph::is_tournament() const {
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (has_edge(u, v) == has_edge(v, u)) return false;
    }
  }
  return true;
}

Digraph Digraph::complete(int n) {
  Digraph d(n);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int u = 1; u <= n; ++u) {
    d.out_[static_cast<std::size_t>(u - 1)] = all & ~(std::uint64_t{1} << (u - 1));
  }
  return d;
}

Digraph Digraph::parse(std::istream& in) {
  int n = -1;
  if (!(in >> n)) throw ParseError("digraph: missing vertex count");
  if (n < 0 || n > 64) throw ParseError("digraph: vertex count out of range");
  Digraph d(n);
  int u, v;
  while (in >> u >> v) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) {
      throw ParseError("digraph: bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    d.add_edge(u, v);
  }
  return d;
}

void Digraph::write(std::ostream& out) const {
  out << n_ << "\n";
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      if (u != v && has_edge(u, v)) out << u << " " << v << "\n";
    }
  }
}

}  // namespace xdescent
