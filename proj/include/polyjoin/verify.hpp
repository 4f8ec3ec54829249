#pragma once

#include "polyjoin/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Seeded self-check suites shared by the CLI `verify` command and the
// acceptance tests. Every check is exact except the Poisson suite.

namespace polyjoin {

struct VerifyOptions {
  std::size_t max_n = 7;       // largest single-graph size for duality / characteristic
  std::size_t samples = 200;   // random graphs (or pairs) per suite and size
  std::uint64_t seed = 1;
  std::size_t max_pair = 12;   // |G| + |H| bound for join-based suites
  double poisson_tolerance = 1e-9;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string details;  // first failure, or summary statistics
};

/// Uniform random labeled graph on n vertices (each edge by a fair coin).
Graph random_graph(std::size_t n, std::mt19937_64& rng);

/// All 2^(n(n-1)/2) labeled graphs on n vertices, by edge mask. n <= 8.
Graph labeled_graph(std::size_t n, std::uint64_t edge_mask);

SuiteResult verify_duality(const VerifyOptions& opt);
SuiteResult verify_join(const VerifyOptions& opt);
SuiteResult verify_inner_product(const VerifyOptions& opt);
SuiteResult verify_cauchy_schwarz(const VerifyOptions& opt);
SuiteResult verify_poisson(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

/// "SUITE <name> PASS|FAIL <details>"
std::string format_suite_line(const SuiteResult& r);

}  // namespace polyjoin
