#include "polyjoin/verify.hpp"

#include "polyjoin/counts.hpp"
#include "polyjoin/oracles.hpp"
#include "polyjoin/random.hpp"
#include "polyjoin/transforms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace polyjoin {

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph labeled_graph(std::size_t n, std::uint64_t edge_mask) {
  if (n > 8) throw std::invalid_argument("labeled_graph supports n <= 8");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((edge_mask >> bit) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

enum Stream : std::uint64_t { kDuality = 1, kJoin, kPairs, kCharacteristic, kPoisson };

std::mt19937_64 stream_rng(std::uint64_t seed, Stream s) {
  return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * s));
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << u << '-' << v;
  }
  os << ']';
  return os.str();
}

struct Tally {
  SuiteResult r;

  explicit Tally(std::string name) { r.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (!ok && r.pass) {
      r.pass = false;
      r.details = "first failure: " + what();
    }
  }

  SuiteResult done(const std::string& summary) {
    if (r.pass) r.details = summary;
    return r;
  }
};

std::string cases_summary(const SuiteResult& r) { return "cases=" + std::to_string(r.cases); }

// All graphs for n <= 5, then `samples` random graphs per n in 6..max_n.
void for_each_test_graph(const VerifyOptions& opt, std::size_t min_n, std::mt19937_64& rng,
                         const std::function<void(const Graph&)>& fn) {
  for (std::size_t n = min_n; n <= std::min<std::size_t>(5, opt.max_n); ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(labeled_graph(n, mask));
  }
  for (std::size_t n = std::max<std::size_t>(6, min_n); n <= opt.max_n; ++n) {
    for (std::size_t i = 0; i < opt.samples; ++i) fn(random_graph(n, rng));
  }
}

std::pair<Graph, Graph> random_pair(std::mt19937_64& rng, std::size_t max_total) {
  const std::size_t total = 2 + uniform_below(rng, max_total - 1);
  const std::size_t a = 1 + uniform_below(rng, total - 1);
  Graph g = random_graph(a, rng);
  Graph h = random_graph(total - a, rng);
  return {std::move(g), std::move(h)};
}

std::string describe_pair(const Graph& g, const Graph& h) {
  return "G{" + describe(g) + "} H{" + describe(h) + "}";
}

Poly pi_plus(const Graph& g) { return signed_path_cover_poly(path_cover_poly_oracle(g), g.n()); }
Poly mu_plus(const Graph& g) { return signed_matching_poly(matching_poly_oracle(g), g.n()); }

struct JoinKind {
  const char* name;
  Poly (*oracle)(const Graph&);
  TransformKind forward;
  TransformKind inverse;
};

constexpr JoinKind kJoinKinds[] = {
    {"path-cover", path_cover_poly_oracle, TransformKind::PiFwd, TransformKind::PiInv},
    {"matching", matching_poly_oracle, TransformKind::MuFwd, TransformKind::MuInv},
    {"clique-cover", clique_cover_poly_oracle, TransformKind::XiFwd, TransformKind::ChiFwd},
    {"chromatic", chromatic_poly_oracle, TransformKind::ChiFwd, TransformKind::XiFwd},
};

}  // namespace

SuiteResult verify_duality(const VerifyOptions& opt) {
  Tally t("duality");
  auto rng = stream_rng(opt.seed, kDuality);
  for_each_test_graph(opt, 1, rng, [&](const Graph& g) {
    const Graph gb = complement(g);
    const auto what = [&](const char* rel) { return [&, rel] { return std::string(rel) + " " + describe(g); }; };
    t.check(apply_transform(TransformKind::PiFwd, pi_plus(gb)) == path_cover_poly_oracle(g),
            what("path-cover"));
    t.check(apply_transform(TransformKind::MuFwd, mu_plus(gb)) == matching_poly_oracle(g),
            what("matching"));
    const Poly chi_b = chromatic_poly_oracle(gb);
    const Poly xi_b = clique_cover_poly_oracle(gb);
    t.check(apply_transform(TransformKind::ChiFwd, xi_b) == chromatic_poly_oracle(g),
            what("chromatic"));
    t.check(apply_transform(TransformKind::XiFwd, chi_b) == clique_cover_poly_oracle(g),
            what("clique-cover"));
  });
  return t.done(cases_summary(t.r));
}

SuiteResult verify_join(const VerifyOptions& opt) {
  Tally t("join");
  auto rng = stream_rng(opt.seed, kJoin);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto pair = random_pair(rng, opt.max_pair);
    const Graph& g = pair.first;
    const Graph& h = pair.second;
    const Graph gh = join(g, h);
    for (const auto& k : kJoinKinds) {
      const Poly op = apply_transform(
          k.forward, apply_transform(k.inverse, k.oracle(g)) * apply_transform(k.inverse, k.oracle(h)));
      t.check(op == k.oracle(gh), [&] { return std::string(k.name) + " " + describe_pair(g, h); });
    }
  }
  return t.done(cases_summary(t.r));
}

SuiteResult verify_inner_product(const VerifyOptions& opt) {
  Tally t("inner-product");
  auto rng = stream_rng(opt.seed, kPairs);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto pair = random_pair(rng, opt.max_pair);
    const Graph& g = pair.first;
    const Graph& h = pair.second;
    const Graph gh = join(g, h);
    const auto what = [&](const char* rel) { return [&, rel] { return std::string(rel) + " " + describe_pair(g, h); }; };
    const Poly pg = pi_plus(complement(g));
    const Poly ph = pi_plus(complement(h));
    const BigInt cycles = count_directed_ham_cycles(gh);
    t.check(inner_product(MomentFunctional::Laguerre, pg, ph) == cycles, what("laguerre-inner"));
    t.check(ham_cycles_join(path_cover_poly_oracle(g), path_cover_poly_oracle(h)) == cycles,
            what("ham-cycles-join"));
    t.check(ham_paths_via_inner(pg * ph) == count_directed_ham_paths(gh), what("ham-integral"));
    t.check(perfect_matchings_join(mu_plus(complement(g)), mu_plus(complement(h))) ==
                count_perfect_matchings(gh),
            what("perfect-matchings-join"));
  }
  auto crng = stream_rng(opt.seed, kCharacteristic);
  for_each_test_graph(opt, 2, crng, [&](const Graph& g) {
    const BigInt c = count_directed_ham_cycles(g);
    const BigInt cb = count_directed_ham_cycles(complement(g));
    const BigInt expect = (g.n() % 2 == 1) ? BigInt(c + cb) : BigInt(c - cb);
    t.check(cycle_characteristic(g) == expect,
            [&] { return "cycle-characteristic " + describe(g); });
  });
  return t.done(cases_summary(t.r));
}

SuiteResult verify_cauchy_schwarz(const VerifyOptions& opt) {
  Tally t("cauchy-schwarz");
  auto rng = stream_rng(opt.seed, kPairs);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto pair = random_pair(rng, opt.max_pair);
    const Graph& g = pair.first;
    const Graph& h = pair.second;
    const auto what = [&](const char* rel) { return [&, rel] { return std::string(rel) + " " + describe_pair(g, h); }; };
    const Poly pg = pi_plus(complement(g));
    const Poly ph = pi_plus(complement(h));
    const auto lag = [](const Poly& a, const Poly& b) {
      return inner_product(MomentFunctional::Laguerre, a, b);
    };
    const BigInt cgh = lag(pg, ph);
    t.check(cgh * cgh <= lag(pg, pg) * lag(ph, ph), what("ham-cycles"));
    const Poly mg = mu_plus(complement(g));
    const Poly mh = mu_plus(complement(h));
    const auto her = [](const Poly& a, const Poly& b) {
      return inner_product(MomentFunctional::Hermite, a, b);
    };
    const BigInt mgh = her(mg, mh);
    t.check(mgh * mgh <= her(mg, mg) * her(mh, mh), what("perfect-matchings"));
  }
  return t.done(cases_summary(t.r));
}

SuiteResult verify_poisson(const VerifyOptions& opt) {
  Tally t("poisson");
  auto rng = stream_rng(opt.seed, kPoisson);
  constexpr double kLambdas[] = {0.5, 1.0, 2.0};
  double worst = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::size_t n = 1 + uniform_below(rng, opt.max_n);
    const Graph g = random_graph(n, rng);
    const Poly xi = clique_cover_poly_oracle(g);
    const Poly chi_b = chromatic_poly_oracle(complement(g));
    for (double lambda : kLambdas) {
      const PoissonResult pr = poisson_check(xi, chi_b, lambda, opt.poisson_tolerance);
      worst = std::max(worst, pr.residual);
      t.check(pr.residual < opt.poisson_tolerance, [&] {
        std::ostringstream os;
        os << "lambda=" << lambda << " residual=" << pr.residual << ' ' << describe(g);
        return os.str();
      });
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << cases_summary(t.r) << " max_residual=" << std::scientific << worst;
  return t.done(os.str());
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
  return {verify_duality(opt), verify_join(opt), verify_inner_product(opt),
          verify_cauchy_schwarz(opt), verify_poisson(opt)};
}

std::string format_suite_line(const SuiteResult& r) {
  return "SUITE " + r.name + (r.pass ? " PASS " : " FAIL ") + r.details;
}

}  // namespace polyjoin
