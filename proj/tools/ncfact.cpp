// ncfact: enumerate factorization posets, build order/interval/stratum
// complexes, render degree-d circle partitions, and run the verification
// suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// guard exceeded, 4 invalid input data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "ncfact/checks.hpp"
#include "ncfact/export.hpp"
#include "ncfact/top_poset.hpp"

namespace {

using namespace ncfact;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitData = 4;

struct GroupSpec {
  bool symmetric = true;
  int degree = 3;       // sym:d
  long long target = 0; // int:n
};

GroupSpec parse_group(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--group", "expected sym:<d> or int:<n>");
  std::string kind = text.substr(0, colon);
  std::string value = text.substr(colon + 1);
  GroupSpec spec;
  try {
    if (kind == "sym") {
      spec.symmetric = true;
      spec.degree = std::stoi(value);
      if (spec.degree < 1) throw std::invalid_argument("degree");
    } else if (kind == "int") {
      spec.symmetric = false;
      spec.target = std::stoll(value);
      if (spec.target < 0) throw std::invalid_argument("target");
    } else {
      throw std::invalid_argument(kind);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--group", "expected sym:<d> or int:<n>");
  }
  return spec;
}

struct CommandConfig {
  std::string group = "sym:3";
  std::string poset = "fact-linear";
  std::string kind = "order";
  std::string target;
  std::string format = "text";
  std::string suite = "all";
  std::string input;
  std::string output;
  int rank = -1;
  bool panel = false;
  std::uint64_t seed = 1;
  std::uint64_t guard_limit = 0;  // 0 = default / env
};

SizeGuard make_guard(const CommandConfig& config) {
  SizeGuard guard = size_guard_from_env();
  if (config.guard_limit > 0) guard.limit = config.guard_limit;
  return guard;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << content;
}

template <MarkedGroup G>
int enumerate_for(const G& group, const typename G::Element& target, const CommandConfig& config) {
  const bool circular = config.poset == "fact-circular" || config.poset == "comp-circular";
  if (!circular && config.poset != "fact-linear" && config.poset != "comp-linear") {
    std::cerr << "unknown poset: " << config.poset << "\n";
    return kExitUsage;
  }
  auto guard = make_guard(config);
  auto linear = enumerate_linear(group, target, guard);

  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<long> counts;
  std::vector<std::pair<int, int>> covers;
  if (circular) {
    auto poset = enumerate_circular(group, linear);
    labels = poset.keys;
    ranks = poset.ranks;
    counts = poset.rank_counts;
    covers = poset.covers;
  } else {
    labels = linear.keys;
    ranks = linear.ranks;
    counts = linear.rank_counts;
    covers = linear.covers;
  }

  if (config.format == "text") {
    std::cout << poset_report(labels, ranks, counts, config.rank);
  } else if (config.format == "json") {
    std::cout << poset_to_json(group.to_string(target), config.poset, labels, ranks, counts,
                               config.rank);
  } else if (config.format == "dot") {
    std::cout << hasse_to_dot(config.poset, labels, covers);
  } else {
    std::cerr << "unknown format: " << config.format << "\n";
    return kExitUsage;
  }
  return 0;
}

template <MarkedGroup G>
int complex_for(const G& group, const typename G::Element& target, const CommandConfig& config) {
  auto guard = make_guard(config);
  if (config.kind == "order") {
    auto complex = build_order_complex(group, target, guard);
    std::cout << (config.format == "json" ? complex_to_json(complex.summary)
                                          : complex_report(complex.summary));
  } else if (config.kind == "interval") {
    auto complex = build_interval_complex(group, target, guard);
    std::cout << (config.format == "json" ? complex_to_json(complex.summary)
                                          : complex_report(complex.summary));
  } else if (config.kind == "stratum") {
    if (config.rank < 0) {
      std::cerr << "stratum needs --rank\n";
      return kExitUsage;
    }
    auto stratum = stratum_complex(group, target, config.rank, guard);
    std::cout << (config.format == "json"
                      ? stratum_to_json(stratum.summary, stratum.cover_degrees)
                      : stratum_report(stratum.summary, stratum.cover_degrees, stratum.components));
  } else {
    std::cerr << "unknown kind: " << config.kind << "\n";
    return kExitUsage;
  }
  return 0;
}

template <typename Fn>
int with_group(const CommandConfig& config, Fn&& fn) {
  GroupSpec spec = parse_group(config.group);
  if (spec.symmetric) {
    SymmetricGroup group(spec.degree);
    Permutation target = config.target.empty() ? delta(spec.degree)
                                               : parse_cycles(spec.degree, config.target);
    return fn(group, target);
  }
  IntegerGroup group;
  long long target = config.target.empty() ? spec.target : std::stoll(config.target);
  return fn(group, target);
}

int cmd_render(const CommandConfig& config) {
  auto p = ncs_from_json(read_input(config.input));
  if (!validate_ncs(p)) throw DomainError("partition is not noncrossing");
  write_output(config.output, render_ncs_svg(p, config.panel));
  return 0;
}

int cmd_verify(const CommandConfig& config) {
  std::vector<SuiteResult> suites;
  if (config.suite == "all") {
    suites = run_all_suites(config.seed);
  } else if (config.suite == "paper-counts") {
    suites.push_back(run_paper_counts());
  } else if (config.suite == "catalan") {
    suites.push_back(run_catalan());
  } else if (config.suite == "armstrong") {
    suites.push_back(run_armstrong(config.seed));
  } else if (config.suite == "top-poset") {
    suites.push_back(run_top_poset(config.seed));
  } else if (config.suite == "ncs") {
    suites.push_back(run_ncs(config.seed));
  } else if (config.suite == "psi") {
    suites.push_back(run_psi(config.seed));
  } else {
    std::cerr << "unknown suite: " << config.suite << "\n";
    return kExitUsage;
  }
  std::string report;
  bool ok = print_suites(suites, report);
  std::cout << report;
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing factorization posets, complexes, and circle partitions"};
  app.require_subcommand(1);

  CommandConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group", config.group, "group instance, sym:<d> or int:<n>");
    cmd->add_option("--target", config.target,
                    "target element (cycle notation or integer; default: the long cycle / n)");
    cmd->add_option("--guard", config.guard_limit, "size guard override");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list a factorization poset");
  add_common(enumerate);
  enumerate->add_option("--poset", config.poset,
                        "fact-linear | fact-circular | comp-linear | comp-circular");
  enumerate->add_option("--rank", config.rank, "only list elements of this rank");
  enumerate->add_option("--format", config.format, "text | json | dot");

  auto* complex = app.add_subcommand("complex", "build a cell complex");
  add_common(complex);
  complex->add_option("--kind", config.kind, "order | interval | stratum");
  complex->add_option("--rank", config.rank, "stratum rank");
  complex->add_option("--format", config.format, "text | json");

  auto* render = app.add_subcommand("render", "render a degree-d partition as SVG");
  render->add_option("--input", config.input, "partition JSON file (default: stdin)");
  render->add_option("--output", config.output, "SVG file (default: stdout)");
  render->add_flag("--panel", config.panel, "add the image-points panel");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", config.suite,
                     "all | paper-counts | catalan | armstrong | top-poset | ncs | psi");
  verify->add_option("--seed", config.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      return with_group(config, [&](const auto& group, const auto& target) {
        return enumerate_for(group, target, config);
      });
    }
    if (complex->parsed()) {
      return with_group(config, [&](const auto& group, const auto& target) {
        return complex_for(group, target, config);
      });
    }
    if (render->parsed()) return cmd_render(config);
    if (verify->parsed()) return cmd_verify(config);
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "data: " << e.what() << "\n";
    return kExitData;
  } catch (const OrderError& e) {
    std::cerr << "data: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
