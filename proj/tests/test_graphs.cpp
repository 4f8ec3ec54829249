#include "polyjoin/fixtures.hpp"
#include "polyjoin/graph.hpp"
#include "polyjoin/graph_io.hpp"
#include "polyjoin/oracles.hpp"
#include "polyjoin/random.hpp"
#include "polyjoin/simd_kernels.hpp"
#include "polyjoin/verify.hpp"
#include "support/brute.hpp"

#include <doctest.h>

#include <sstream>

using namespace polyjoin;
namespace fx = polyjoin::fixtures;

TEST_CASE("complement") {
  CHECK(complement(fx::complete(3)) == fx::empty(3));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(1 + uniform_below(rng, 9), rng);
    CHECK(complement(complement(g)) == g);
  }
  const Graph lk5 = complement(fx::petersen());
  CHECK(lk5.edge_count() == 30);
  CHECK(lk5 == fx::petersen_complement());
}

TEST_CASE("union and join") {
  CHECK(graph_union(fx::complete(1), fx::complete(1)) == fx::empty(2));
  CHECK(join(fx::complete(1), fx::complete(1)) == fx::complete(2));
  const std::size_t parts[] = {2, 3};
  const Graph k23 = join(fx::empty(2), fx::empty(3));
  CHECK(k23 == fx::complete_multipartite(parts));
  CHECK(k23.edge_count() == 6);
  CHECK(!k23.has_edge(0, 1));
  CHECK(k23.has_edge(1, 4));
  // complement of a join is the union of complements
  const Graph g = fx::path(3), h = fx::cycle(4);
  CHECK(complement(join(g, h)) == graph_union(complement(g), complement(h)));
}

TEST_CASE("graph invariants") {
  Graph g(4);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  g.add_edge(0, 3);
  CHECK(g.has_edge(3, 0));
  CHECK(g.degree(0) == 1);
  g.remove_edge(3, 0);
  CHECK(g.edge_count() == 0);
  // wide rows
  Graph w(130);
  w.add_edge(0, 129);
  w.add_edge(64, 65);
  CHECK(w.has_edge(129, 0));
  CHECK(connected_components(w).size() == 128);
  CHECK_THROWS_AS(w.row_mask(0), std::logic_error);
}

TEST_CASE("fixtures") {
  const Graph p = fx::petersen();
  CHECK(p.n() == 10);
  CHECK(p.edge_count() == 15);
  for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  const Graph q = fx::paley9();
  CHECK(q.n() == 9);
  CHECK(q.edge_count() == 18);
  // Paley(9) is self-complementary and strongly regular (9, 4, 1, 2)
  for (std::size_t u = 0; u < 9; ++u) {
    CHECK(q.degree(u) == 4);
    for (std::size_t v = u + 1; v < 9; ++v) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < 9; ++w) common += q.has_edge(u, w) && q.has_edge(v, w);
      CHECK(common == (q.has_edge(u, v) ? 1u : 2u));
    }
  }
}

TEST_CASE("graph file round trip and errors") {
  std::stringstream ss;
  write_graph(ss, fx::petersen());
  CHECK(read_graph(ss) == fx::petersen());

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  CHECK(parse("3 2\n0 1\n1 2\n") == fx::path(3));
  CHECK(parse("2 0\n") == fx::empty(2));
  CHECK_THROWS_AS(parse(""), GraphParseError);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), GraphParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n1 0\n"), GraphParseError);
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), GraphParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), GraphParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), GraphParseError);
  CHECK_THROWS_AS(parse("x y\n"), GraphParseError);
  try {
    parse("3 2\n0 1\n2 2\n");
    FAIL("expected a parse error");
  } catch (const GraphParseError& e) {
    CHECK(e.line() == 3);
  }
  for (const char* name : {"petersen", "petersen_complement", "paley9"}) {
    const Graph g = read_graph_file(std::string(POLYJOIN_FIXTURE_DIR) + "/" + name + ".txt");
    const Graph expect = std::string(name) == "petersen"              ? fx::petersen()
                         : std::string(name) == "petersen_complement" ? fx::petersen_complement()
                                                                      : fx::paley9();
    CHECK(g == expect);
  }
}

TEST_CASE("path cover oracle") {
  CHECK(path_cover_poly_oracle(fx::complete(2)) == Poly{0, 2, 1});
  CHECK(path_cover_poly_oracle(fx::empty(3)) == Poly{0, 0, 0, 1});
  CHECK(path_cover_poly_oracle(fx::petersen()) ==
        Poly{0, 240, 3120, 11160, 18280, 15912, 7860, 2240, 360, 30, 1});
  CHECK_THROWS_AS(path_cover_poly_oracle(Graph(17)), OracleLimitError);
}

TEST_CASE("signed polynomials") {
  CHECK(signed_path_cover_poly(Poly{0, 0, 1}, 2) == Poly{0, 0, 1});
  CHECK(signed_path_cover_poly(Poly{0, 2, 1}, 2) == Poly{0, -2, 1});
  CHECK(signed_path_cover_poly(path_cover_poly_oracle(fx::paley9()), 9) ==
        Poly{0, 1512, -11736, 26952, -26640, 13248, -3528, 504, -36, 1});
  // K2: t^2 + 1 -> t^2 - 1; C4: t^4 + 4t^2 + 2 -> t^4 - 4t^2 + 2
  CHECK(signed_matching_poly(Poly{1, 0, 1}, 2) == Poly{-1, 0, 1});
  CHECK(signed_matching_poly(Poly{2, 0, 4, 0, 1}, 4) == Poly{2, 0, -4, 0, 1});
}

TEST_CASE("matching oracle") {
  CHECK(matching_poly_oracle(fx::complete(2)) == Poly{1, 0, 1});
  CHECK(matching_poly_oracle(fx::empty(4)) == Poly{0, 0, 0, 0, 1});
  CHECK(matching_poly_oracle(fx::cycle(4)) == Poly{2, 0, 4, 0, 1});
  CHECK(brute::matching_poly(fx::cycle(4)) == Poly{2, 0, 4, 0, 1});
  CHECK_THROWS_AS(matching_poly_oracle(Graph(25)), OracleLimitError);
  CHECK(count_perfect_matchings(fx::complete(12)) == 10395);
}

TEST_CASE("clique cover oracle") {
  CHECK(clique_cover_poly_oracle(fx::complete(3)) == Poly{0, 1, 3, 1});
  CHECK(clique_cover_poly_oracle(fx::empty(2)) == Poly{0, 0, 1});
  CHECK(clique_cover_poly_oracle(fx::complete(2)) == Poly{0, 1, 1});
}

TEST_CASE("chromatic oracle") {
  CHECK(chromatic_poly_oracle(fx::complete(3)) == Poly{0, 2, -3, 1});
  for (std::size_t n = 0; n <= 8; ++n) CHECK(chromatic_poly_oracle(fx::empty(n)) == Poly::monomial(n));
  CHECK(chromatic_poly_oracle(fx::cycle(4)) == Poly{0, -3, 6, -4, 1});
  CHECK(brute::colourings(fx::cycle(4), 2) == 2);
  CHECK(brute::colourings(fx::cycle(4), 3) == 18);
  CHECK(eval_int(chromatic_poly_oracle(fx::petersen()), 3) ==
        static_cast<unsigned long>(brute::colourings(fx::petersen(), 3)));
}

TEST_CASE("hamiltonian counts") {
  CHECK(count_directed_ham_cycles(fx::complete(3)) == 2);
  CHECK(count_directed_ham_cycles(fx::petersen()) == 0);
  CHECK(count_directed_ham_paths(join(fx::empty(2), fx::empty(2))) == 8);
  CHECK(brute::ham_paths(fx::cycle(4)) == 8);
  // cyclic-ordering convention: c(K_m) = (m-1)!
  CHECK(count_directed_ham_cycles(fx::complete(1)) == 1);
  CHECK(count_directed_ham_cycles(fx::complete(2)) == 1);
  CHECK(count_directed_ham_cycles(fx::empty(2)) == 0);
  CHECK(count_directed_ham_cycles(fx::complete(7)) == 720);
  CHECK(count_directed_ham_cycles(fx::petersen_complement()) == 6432);
  CHECK(count_directed_ham_cycles(fx::paley9()) == 96);
  CHECK_THROWS_AS(count_directed_ham_paths(Graph(21)), OracleLimitError);
}

TEST_CASE("oracles agree with brute force on small graphs") {
  std::mt19937_64 rng(42);
  auto check = [](const Graph& g) {
    REQUIRE(path_cover_poly_oracle(g) == brute::path_cover_poly(g));
    REQUIRE(matching_poly_oracle(g) == brute::matching_poly(g));
    REQUIRE(clique_cover_poly_oracle(g) == brute::clique_cover_poly(g));
    REQUIRE(chromatic_poly_oracle(g) == brute::chromatic_poly(g));
    REQUIRE(count_directed_ham_paths(g) == static_cast<unsigned long>(brute::ham_paths(g)));
    REQUIRE(count_directed_ham_cycles(g) == static_cast<unsigned long>(brute::ham_cycles(g)));
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      check(labeled_graph(n, mask));
    }
  }
  for (std::size_t n = 5; n <= 7; ++n) {
    for (int i = 0; i < 25; ++i) check(random_graph(n, rng));
  }
}

TEST_CASE("oracle invariants on graphs up to 7 vertices") {
  std::mt19937_64 rng(43);
  auto check = [](const Graph& g) {
    const std::size_t n = g.n();
    const Poly pi = path_cover_poly_oracle(g);
    const Poly mu = matching_poly_oracle(g);
    const Poly xi = clique_cover_poly_oracle(g);
    const Poly chi = chromatic_poly_oracle(g);
    REQUIRE(pi.coeff(1) == count_directed_ham_paths(g));
    if (n % 2 == 0) REQUIRE(mu.coeff(0) == static_cast<unsigned long>(brute::perfect_matchings(g)));
    for (const Poly* p : {&pi, &mu, &xi, &chi}) {
      REQUIRE(p->degree() == n);
      REQUIRE(p->coeff(n) == 1);
    }
    for (std::size_t q = 0; q <= 3; ++q) {
      REQUIRE(eval_int(chi, static_cast<unsigned long>(q)) ==
              static_cast<unsigned long>(brute::colourings(g, q)));
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      check(labeled_graph(n, mask));
    }
  }
  for (std::size_t n = 6; n <= 7; ++n) {
    for (int i = 0; i < 200; ++i) check(random_graph(n, rng));
  }
}

TEST_CASE("polynomials are multiplicative over disjoint union") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(1 + uniform_below(rng, 6), rng);
    const Graph h = random_graph(1 + uniform_below(rng, 6), rng);
    const Graph u = graph_union(g, h);
    CHECK(path_cover_poly_oracle(u) == path_cover_poly_oracle(g) * path_cover_poly_oracle(h));
    CHECK(matching_poly_oracle(u) == matching_poly_oracle(g) * matching_poly_oracle(h));
    CHECK(clique_cover_poly_oracle(u) == clique_cover_poly_oracle(g) * clique_cover_poly_oracle(h));
    CHECK(chromatic_poly_oracle(u) == chromatic_poly_oracle(g) * chromatic_poly_oracle(h));
  }
}

TEST_CASE("oracles give the same answers under the scalar kernels") {
  const auto saved = simd::active_isa();
  std::mt19937_64 rng(45);
  std::vector<Graph> graphs;
  for (int i = 0; i < 10; ++i) graphs.push_back(random_graph(8 + uniform_below(rng, 5), rng));
  std::vector<Poly> fast;
  for (const auto& g : graphs) fast.push_back(path_cover_poly_oracle(g) + clique_cover_poly_oracle(g));
  simd::set_active_isa(simd::Isa::Scalar);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(path_cover_poly_oracle(graphs[i]) + clique_cover_poly_oracle(graphs[i]) == fast[i]);
  }
  simd::set_active_isa(saved);
}
