#include "polyjoin/fixtures.hpp"

#include <array>
#include <numeric>

namespace polyjoin::fixtures {

Graph complete(std::size_t n) { return complement(Graph(n)); }

Graph empty(std::size_t n) { return Graph(n); }

Graph cycle(std::size_t n) {
  Graph g(n);
  if (n < 3) return path(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  Graph g;
  for (std::size_t a : parts) g = join(g, empty(a));
  return g;
}

Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph petersen_complement() { return complement(petersen()); }

Graph paley9() {
  // Elements of GF(9) as (a, b) meaning a + b i with i^2 = -1 over F3.
  std::array<bool, 9> is_square{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const int re = ((a * a - b * b) % 3 + 3) % 3;
      const int im = (2 * a * b) % 3;
      is_square[static_cast<std::size_t>(3 * re + im)] = true;
    }
  }
  Graph g(9);
  for (int x = 0; x < 9; ++x) {
    for (int y = x + 1; y < 9; ++y) {
      const int da = ((x / 3 - y / 3) % 3 + 3) % 3;
      const int db = ((x % 3 - y % 3) % 3 + 3) % 3;
      if (is_square[static_cast<std::size_t>(3 * da + db)]) {
        g.add_edge(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
      }
    }
  }
  return g;
}

}  // namespace polyjoin::fixtures
