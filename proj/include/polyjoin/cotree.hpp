#pragma once

#include "polyjoin/graph.hpp"
#include "polyjoin/poly.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyjoin {

/// Cotree of a cograph. Internal nodes have at least two children, and a
/// normalized tree never nests a Union directly under a Union or a Join
/// under a Join.
class Cotree {
 public:
  enum class Kind { Leaf, Union, Join };

  Cotree() = default;  // a single leaf
  static Cotree leaf() { return {}; }
  /// Builds an internal node and normalizes it (flattens same-kind children,
  /// collapses a single child).
  static Cotree node(Kind kind, std::vector<Cotree> children);

  Kind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == Kind::Leaf; }
  const std::vector<Cotree>& children() const { return children_; }
  std::size_t leaf_count() const { return leaves_; }

  bool is_normalized() const;

  friend bool operator==(const Cotree& a, const Cotree& b);

 private:
  Kind kind_ = Kind::Leaf;
  std::vector<Cotree> children_;
  std::size_t leaves_ = 1;
};

/// Syntax error in a cograph expression; position() is a 0-based byte offset.
class CographParseError : public std::runtime_error {
 public:
  CographParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the cograph expression language:
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := 'K1' | 'K(' int ')' | 'E(' int ')' | 'K(' int (',' int)+ ')' | '(' expr ')'
///
/// '+' is disjoint union, '*' is join and binds tighter. K(n) is the complete
/// graph, E(n) the edgeless graph, K(a1,...,am) the complete multipartite graph.
Cotree parse_cograph_expr(std::string_view text);

/// Renders a cotree back into the expression language; the output reparses to
/// an equal tree.
std::string render_cograph_expr(const Cotree& ct);

/// Cotree of g, or nullopt when g is not a cograph (some induced subgraph is
/// connected with a connected complement). Requires g.n() >= 1.
std::optional<Cotree> recognize_cograph(const Graph& g);

/// Realizes the cotree; leaves are numbered left to right.
Graph cotree_to_graph(const Cotree& ct);

enum class PolyKind { PathCover, Matching, CliqueCover, Chromatic };

std::string_view to_string(PolyKind kind);

/// Bottom-up evaluation over the cotree: a leaf is t, a union multiplies its
/// children, a join applies the kind's inverse transform to each child,
/// multiplies, and applies the forward transform. Children of large nodes are
/// evaluated concurrently when POLYJOIN_THREADS allows it.
Poly compute_graph_polynomial(const Cotree& ct, PolyKind kind);

/// Random normalized cotree with the given number of leaves: node arity drawn
/// from 2..4, node colour drawn at random, then normalized.
Cotree random_cotree(std::size_t leaves, std::mt19937_64& rng);

/// Thread cap from POLYJOIN_THREADS (default: hardware concurrency, at least 1).
unsigned thread_budget();

}  // namespace polyjoin
