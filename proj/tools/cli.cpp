#include "cli.hpp"

#include "polyjoin/cotree.hpp"
#include "polyjoin/counts.hpp"
#include "polyjoin/graph_io.hpp"
#include "polyjoin/multipartite.hpp"
#include "polyjoin/oracles.hpp"
#include "polyjoin/transforms.hpp"
#include "polyjoin/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

namespace polyjoin::cli {

namespace {

// Thrown for failures that map to a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Input {
  std::string cograph;
  std::string graph_file;
};

// Either a cotree (Algorithm 1 applies) or a raw graph for the oracles.
struct Resolved {
  std::optional<Cotree> ct;
  std::optional<Graph> g;
  std::size_t n = 0;
};

Resolved resolve(const Input& in) {
  Resolved r;
  if (!in.cograph.empty()) {
    r.ct = parse_cograph_expr(in.cograph);
    r.n = r.ct->leaf_count();
  } else {
    r.g = read_graph_file(in.graph_file);
    r.n = r.g->n();
    if (r.n == 0) throw Exit{kPrecondition, "graph has no vertices"};
  }
  return r;
}

// Falls back to recognition when the raw graph exceeds an oracle guard.
const Cotree& need_cotree(Resolved& r, std::size_t limit) {
  if (!r.ct) {
    r.ct = recognize_cograph(*r.g);
    if (!r.ct) {
      throw Exit{kPrecondition, "graph has " + std::to_string(r.n) +
                                    " vertices (oracle limit " + std::to_string(limit) +
                                    ") and is not a cograph"};
    }
  }
  return *r.ct;
}

Poly polynomial(Resolved& r, PolyKind kind) {
  std::size_t limit = kSubsetPartitionLimit;
  Poly (*oracle)(const Graph&) = nullptr;
  switch (kind) {
    case PolyKind::PathCover: oracle = path_cover_poly_oracle; break;
    case PolyKind::Matching: oracle = matching_poly_oracle; limit = kMatchingLimit; break;
    case PolyKind::CliqueCover: oracle = clique_cover_poly_oracle; break;
    case PolyKind::Chromatic: oracle = chromatic_poly_oracle; break;
  }
  if (!r.ct && r.n <= limit) return oracle(*r.g);
  return compute_graph_polynomial(need_cotree(r, limit), kind);
}

const std::map<std::string, PolyKind> kKinds = {
    {"path-cover", PolyKind::PathCover},
    {"matching", PolyKind::Matching},
    {"clique-cover", PolyKind::CliqueCover},
    {"chromatic", PolyKind::Chromatic},
};

void add_input(CLI::App* cmd, Input& in) {
  auto* c = cmd->add_option("--cograph", in.cograph, "cograph expression");
  auto* g = cmd->add_option("--graph", in.graph_file, "edge-list file (`n m` then `u v` lines)");
  c->excludes(g);
  g->excludes(c);
}

void check_input(const Input& in) {
  if (in.cograph.empty() == in.graph_file.empty()) {
    throw Exit{kUsage, "exactly one of --cograph or --graph is required"};
  }
}

int cmd_poly(const std::string& kind, const Input& in, bool json, bool pretty, std::ostream& out) {
  check_input(in);
  Resolved r = resolve(in);
  Poly p;
  if (kind == "signed-path-cover") {
    p = signed_path_cover_poly(polynomial(r, PolyKind::PathCover), r.n);
  } else if (kind == "signed-matching") {
    p = signed_matching_poly(polynomial(r, PolyKind::Matching), r.n);
  } else {
    p = polynomial(r, kKinds.at(kind));
  }
  if (json) {
    out << render_json(p) << '\n';
  } else if (pretty) {
    out << render_pretty(p) << '\n';
  } else {
    out << render_text(p);
  }
  return kOk;
}

BigInt parse_bigint(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Exit{kUsage, "not an integer: '" + s + "'"};
  return v;
}

int cmd_count(const std::string& what, const Input& in, std::ostream& out) {
  check_input(in);
  static const std::string kColorings = "colorings=";
  std::optional<BigInt> lambda;
  if (what.rfind(kColorings, 0) == 0) {
    lambda = parse_bigint(what.substr(kColorings.size()));
  } else if (what != "perfect-matchings" && what != "ham-paths" && what != "ham-cycles" &&
             what != "acyclic-orientations") {
    throw Exit{kUsage, "unknown --what '" + what + "'"};
  }
  Resolved r = resolve(in);
  BigInt result;
  if (lambda) {
    result = colorings(polynomial(r, PolyKind::Chromatic), *lambda);
  } else if (what == "acyclic-orientations") {
    result = acyclic_orientations(polynomial(r, PolyKind::Chromatic));
  } else if (what == "perfect-matchings") {
    result = perfect_matchings(polynomial(r, PolyKind::Matching));
  } else if (what == "ham-paths") {
    if (r.g && r.n <= kHamiltonianLimit) {
      result = count_directed_ham_paths(*r.g);
    } else {
      result = ham_paths(compute_graph_polynomial(need_cotree(r, kHamiltonianLimit),
                                                  PolyKind::PathCover));
    }
  } else {  // ham-cycles
    if (r.g && r.n <= kHamiltonianLimit) {
      result = count_directed_ham_cycles(*r.g);
    } else {
      const Cotree& ct = need_cotree(r, kHamiltonianLimit);
      // Tiny cographs follow the oracle's cyclic-ordering convention.
      result = ct.leaf_count() < 3 ? count_directed_ham_cycles(cotree_to_graph(ct))
                                   : ham_cycles_cograph(ct);
    }
  }
  out << result.get_str() << '\n';
  return kOk;
}

PartSizes parse_parts(const std::string& s) {
  PartSizes parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Exit{kUsage, "--parts expects positive integers separated by commas"};
    }
    const unsigned long v = std::stoul(item);
    if (v == 0) throw Exit{kUsage, "part sizes must be positive"};
    parts.push_back(v);
  }
  if (parts.empty() || s.back() == ',') {
    throw Exit{kUsage, "--parts expects positive integers separated by commas"};
  }
  return parts;
}

int cmd_multipartite(const std::string& parts_text, const std::string& what,
                     const std::string& method, std::ostream& out) {
  const PartSizes parts = parse_parts(parts_text);
  const bool cycles = what == "ham-cycles";
  if (cycles && parts.size() < 2) {
    throw Exit{kDomain, "ham-cycles needs at least two parts"};
  }
  BigInt result;
  if (method == "operator") {
    result = cycles ? hc_multipartite(parts) : hp_multipartite(parts);
  } else {
    for (unsigned long a : parts) {
      if (a != parts.front()) throw Exit{kDomain, "--method " + method + " needs equal parts"};
    }
    const unsigned long n = parts.front();
    const unsigned long m = parts.size();
    if (method == "bell") {
      result = cycles ? hc_balanced(n, m - 1) : hp_balanced(n, m);
    } else {
      result = cycles ? hc_balanced_fast(n, m - 1) : hp_balanced_fast(n, m);
    }
  }
  out << result.get_str() << '\n';
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  bool all = true;
  for (const auto& r : verify_all(opt)) {
    out << format_suite_line(r) << '\n';
    all = all && r.pass;
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_bench(std::size_t leaves, const std::string& kind, std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  const Cotree ct = random_cotree(leaves, rng);
  std::vector<std::string> kinds;
  if (kind == "all") {
    for (const auto& [name, _] : kKinds) kinds.push_back(name);
  } else {
    kinds.push_back(kind);
  }
  for (const auto& name : kinds) {
    const auto start = std::chrono::steady_clock::now();
    const Poly p = compute_graph_polynomial(ct, kKinds.at(name));
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::size_t bits = 0;
    for (const auto& c : p.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    out << "leaves=" << leaves << " kind=" << name << " seed=" << seed
        << " degree=" << (p.is_zero() ? 0 : p.degree()) << " max_coeff_bits=" << bits
        << " seconds=" << std::fixed << std::setprecision(3) << dt.count() << '\n';
    out << std::defaultfloat;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph polynomials and Hamiltonian counts for cographs", "polyjoin"};
  app.require_subcommand(1);

  std::string kind;
  Input poly_in;
  bool json = false;
  bool pretty = false;
  auto* poly = app.add_subcommand("poly", "compute a graph polynomial");
  poly->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"path-cover", "signed-path-cover", "matching", "signed-matching",
                             "clique-cover", "chromatic"}));
  add_input(poly, poly_in);
  poly->add_flag("--json", json, "JSON array of decimal strings");
  poly->add_flag("--pretty", pretty, "human-readable rendering");

  std::string what;
  Input count_in;
  auto* count = app.add_subcommand("count", "derived integer counts");
  count->add_option("--what", what,
                    "perfect-matchings|ham-paths|ham-cycles|colorings=<lambda>|acyclic-orientations")
      ->required();
  add_input(count, count_in);

  std::string parts;
  std::string mp_what;
  std::string method = "operator";
  auto* mp = app.add_subcommand("multipartite", "counts for complete multipartite graphs");
  mp->add_option("--parts", parts, "comma-separated part sizes")->required();
  mp->add_option("--what", mp_what)->required()->check(CLI::IsMember({"ham-paths", "ham-cycles"}));
  mp->add_option("--method", method)->check(CLI::IsMember({"operator", "bell", "fast"}));

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--max-n", vopt.max_n)->check(CLI::Range(2, 8));
  verify->add_option("--samples", vopt.samples)->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", vopt.seed);

  bool algorithm1 = false;
  std::size_t leaves = 0;
  std::string bench_kind = "all";
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time Algorithm 1 on a random cotree");
  bench->add_flag("--algorithm1", algorithm1)->required();
  bench->add_option("--leaves", leaves)->required()->check(CLI::Range(1, 100000));
  bench->add_option("--kind", bench_kind)
      ->check(CLI::IsMember({"path-cover", "matching", "clique-cover", "chromatic", "all"}));
  bench->add_option("--seed", bench_seed);

  std::vector<const char*> argv{"polyjoin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*poly) return cmd_poly(kind, poly_in, json, pretty, out);
    if (*count) return cmd_count(what, count_in, out);
    if (*mp) return cmd_multipartite(parts, mp_what, method, out);
    if (*verify) return cmd_verify(vopt, out);
    if (*bench) return cmd_bench(leaves, bench_kind, bench_seed, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const CographParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConventionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace polyjoin::cli
