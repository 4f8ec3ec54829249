#include "polyjoin/cotree.hpp"

#include "polyjoin/random.hpp"
#include "polyjoin/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace polyjoin {

Cotree Cotree::node(Kind kind, std::vector<Cotree> children) {
  if (kind == Kind::Leaf) throw std::invalid_argument("Cotree::node needs Union or Join");
  if (children.empty()) throw std::invalid_argument("Cotree::node needs at least one child");
  if (children.size() == 1) return std::move(children.front());
  Cotree out;
  out.kind_ = kind;
  out.leaves_ = 0;
  for (auto& c : children) {
    if (c.kind_ == kind) {
      for (auto& gc : c.children_) out.children_.push_back(std::move(gc));
    } else {
      out.children_.push_back(std::move(c));
    }
  }
  for (const auto& c : out.children_) out.leaves_ += c.leaves_;
  return out;
}

bool Cotree::is_normalized() const {
  if (is_leaf()) return children_.empty();
  if (children_.size() < 2) return false;
  return std::all_of(children_.begin(), children_.end(),
                     [&](const Cotree& c) { return c.kind_ != kind_ && c.is_normalized(); });
}

bool operator==(const Cotree& a, const Cotree& b) {
  return a.kind_ == b.kind_ && a.leaves_ == b.leaves_ && a.children_ == b.children_;
}

CographParseError::CographParseError(std::size_t position, const std::string& what)
    : std::runtime_error("cograph expression, position " + std::to_string(position) + ": " +
                         what),
      position_(position) {}

namespace {

Cotree repeated(Cotree::Kind kind, std::size_t count) {
  if (count == 1) return Cotree::leaf();
  return Cotree::node(kind, std::vector<Cotree>(count));
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Cotree parse() {
    Cotree ct = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return ct;
  }

 private:
  // Largest accepted literal; keeps typos from allocating enormous trees.
  static constexpr std::size_t kMaxLiteral = 10'000'000;

  [[noreturn]] void fail(const std::string& what) const { throw CographParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  std::size_t integer() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("part sizes must be positive");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a positive integer");
    }
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
      if (value > kMaxLiteral) {
        pos_ = start;
        fail("integer literal too large");
      }
    }
    if (value == 0) {
      pos_ = start;
      fail("part sizes must be positive");
    }
    return value;
  }

  Cotree expr() {
    std::vector<Cotree> terms;
    terms.push_back(term());
    while (accept('+')) terms.push_back(term());
    return Cotree::node(Cotree::Kind::Union, std::move(terms));
  }

  Cotree term() {
    std::vector<Cotree> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    return Cotree::node(Cotree::Kind::Join, std::move(factors));
  }

  Cotree factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cotree inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'K') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '1' &&
          (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        return Cotree::leaf();
      }
      expect('(');
      std::vector<std::size_t> parts{integer()};
      while (accept(',')) parts.push_back(integer());
      expect(')');
      if (parts.size() == 1) return repeated(Cotree::Kind::Join, parts[0]);
      std::vector<Cotree> sides;
      for (std::size_t a : parts) sides.push_back(repeated(Cotree::Kind::Union, a));
      return Cotree::node(Cotree::Kind::Join, std::move(sides));
    }
    if (c == 'E') {
      ++pos_;
      expect('(');
      const std::size_t n = integer();
      expect(')');
      return repeated(Cotree::Kind::Union, n);
    }
    fail("expected 'K1', 'K(', 'E(' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool all_leaves(const Cotree& ct) {
  return std::all_of(ct.children().begin(), ct.children().end(),
                     [](const Cotree& c) { return c.is_leaf(); });
}

void render(const Cotree& ct, std::ostream& os) {
  switch (ct.kind()) {
    case Cotree::Kind::Leaf:
      os << "K1";
      return;
    case Cotree::Kind::Union: {
      if (all_leaves(ct)) {
        os << "E(" << ct.leaf_count() << ')';
        return;
      }
      bool first = true;
      for (const auto& c : ct.children()) {
        if (!first) os << " + ";
        first = false;
        render(c, os);
      }
      return;
    }
    case Cotree::Kind::Join: {
      if (all_leaves(ct)) {
        os << "K(" << ct.leaf_count() << ')';
        return;
      }
      const bool multipartite = std::all_of(
          ct.children().begin(), ct.children().end(),
          [](const Cotree& c) { return c.is_leaf() || all_leaves(c); });
      if (multipartite) {
        os << "K(";
        bool first = true;
        for (const auto& c : ct.children()) {
          if (!first) os << ',';
          first = false;
          os << c.leaf_count();
        }
        os << ')';
        return;
      }
      bool first = true;
      for (const auto& c : ct.children()) {
        if (!first) os << " * ";
        first = false;
        const bool paren = c.kind() == Cotree::Kind::Union && !all_leaves(c);
        if (paren) os << '(';
        render(c, os);
        if (paren) os << ')';
      }
      return;
    }
  }
}

std::optional<Cotree> recognize(const Graph& g) {
  if (g.n() == 1) return Cotree::leaf();
  auto split = [&](const std::vector<std::vector<std::size_t>>& parts,
                   Cotree::Kind kind) -> std::optional<Cotree> {
    std::vector<Cotree> children;
    children.reserve(parts.size());
    for (const auto& part : parts) {
      auto child = recognize(induced_subgraph(g, part));
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    return Cotree::node(kind, std::move(children));
  };
  if (auto comps = connected_components(g); comps.size() > 1) {
    return split(comps, Cotree::Kind::Union);
  }
  if (auto co = connected_components(complement(g)); co.size() > 1) {
    return split(co, Cotree::Kind::Join);
  }
  return std::nullopt;
}

struct KindOps {
  TransformKind forward;
  TransformKind inverse;
};

KindOps ops_for(PolyKind kind) {
  switch (kind) {
    case PolyKind::PathCover: return {TransformKind::PiFwd, TransformKind::PiInv};
    case PolyKind::Matching: return {TransformKind::MuFwd, TransformKind::MuInv};
    case PolyKind::CliqueCover: return {TransformKind::XiFwd, TransformKind::ChiFwd};
    case PolyKind::Chromatic: return {TransformKind::ChiFwd, TransformKind::XiFwd};
  }
  return {TransformKind::PiFwd, TransformKind::PiInv};
}

// Subtrees smaller than this are always evaluated inline.
constexpr std::size_t kParallelLeafCutoff = 128;

class Evaluator {
 public:
  Evaluator(KindOps ops, unsigned threads) : ops_(ops), spare_(static_cast<int>(threads) - 1) {}

  Poly eval(const Cotree& ct) {
    if (ct.is_leaf()) return Poly::monomial(1);
    const bool is_join = ct.kind() == Cotree::Kind::Join;
    const auto& kids = ct.children();
    std::vector<Poly> parts(kids.size());
    std::vector<std::future<void>> pending;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      auto task = [this, &kids, &parts, i, is_join] {
        Poly p = eval(kids[i]);
        parts[i] = is_join ? apply_transform(ops_.inverse, p) : std::move(p);
      };
      if (kids[i].leaf_count() >= kParallelLeafCutoff && i + 1 < kids.size() && take_thread()) {
        pending.push_back(std::async(std::launch::async, [this, task] {
          task();
          spare_.fetch_add(1);
        }));
      } else {
        task();
      }
    }
    for (auto& f : pending) f.get();
    Poly product = mul_many(std::move(parts));
    return is_join ? apply_transform(ops_.forward, product) : product;
  }

 private:
  bool take_thread() {
    int cur = spare_.load();
    while (cur > 0) {
      if (spare_.compare_exchange_weak(cur, cur - 1)) return true;
    }
    return false;
  }

  KindOps ops_;
  std::atomic<int> spare_;
};

Cotree random_tree(std::size_t leaves, std::mt19937_64& rng) {
  if (leaves == 1) return Cotree::leaf();
  const std::size_t max_arity = std::min<std::size_t>(4, leaves);
  const std::size_t arity = 2 + uniform_below(rng, max_arity - 1);
  std::set<std::size_t> cuts;
  while (cuts.size() < arity - 1) cuts.insert(1 + uniform_below(rng, leaves - 1));
  std::vector<Cotree> children;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    children.push_back(random_tree(c - prev, rng));
    prev = c;
  }
  children.push_back(random_tree(leaves - prev, rng));
  const auto kind = coin(rng) ? Cotree::Kind::Join : Cotree::Kind::Union;
  return Cotree::node(kind, std::move(children));
}

}  // namespace

Cotree parse_cograph_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string render_cograph_expr(const Cotree& ct) {
  std::ostringstream os;
  render(ct, os);
  return os.str();
}

std::optional<Cotree> recognize_cograph(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("recognize_cograph: graph has no vertices");
  return recognize(g);
}

Graph cotree_to_graph(const Cotree& ct) {
  if (ct.is_leaf()) return Graph(1);
  Graph g;
  for (const auto& c : ct.children()) {
    g = ct.kind() == Cotree::Kind::Join ? join(g, cotree_to_graph(c))
                                         : graph_union(g, cotree_to_graph(c));
  }
  return g;
}

std::string_view to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::PathCover: return "path-cover";
    case PolyKind::Matching: return "matching";
    case PolyKind::CliqueCover: return "clique-cover";
    case PolyKind::Chromatic: return "chromatic";
  }
  return "?";
}

Poly compute_graph_polynomial(const Cotree& ct, PolyKind kind) {
  Evaluator ev(ops_for(kind), thread_budget());
  return ev.eval(ct);
}

Cotree random_cotree(std::size_t leaves, std::mt19937_64& rng) {
  if (leaves == 0) throw std::invalid_argument("random_cotree: need at least one leaf");
  return random_tree(leaves, rng);
}

unsigned thread_budget() {
  if (const char* env = std::getenv("POLYJOIN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace polyjoin
