#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sqfpow/depth_lab.hpp"
#include "sqfpow/error.hpp"
#include "sqfpow/facet_cover.hpp"
#include "sqfpow/homology.hpp"
#include "sqfpow/io.hpp"
#include "sqfpow/linquot.hpp"
#include "sqfpow/verify.hpp"

using namespace sqfpow;
using nlohmann::json;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string field = "q";
  int budget = 16;
  bool json = false;
  bool trim = false;
  double timeout = 0;

  Field parsed_field() const {
    if (field == "q" || field == "Q") return Field::rational();
    try {
      return Field::gf(static_cast<std::uint32_t>(std::stoul(field)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadSpec, "--field takes 'q' or a prime, got '" + field + "'");
    }
  }

  HochsterOptions hochster() const {
    HochsterOptions h;
    h.max_ambient = budget;
    return h;
  }

  SearchLimits limits() const {
    SearchLimits l;
    if (timeout > 0)
      l.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout));
    return l;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--field", c.field, "Coefficient field: q or a prime")->capture_default_str();
  app->add_option("--budget", c.budget, "Largest ambient dimension for homology")->capture_default_str();
  app->add_flag("--json", c.json, "JSON output");
  app->add_flag("--trim", c.trim, "Drop variables outside the support of the ideal");
  app->add_option("--timeout", c.timeout, "Seconds allowed for linear quotients search (0 = none)");
}

SqfIdeal load_checked(const std::string& source, const Common& c) {
  SqfIdeal ideal = load_ideal(source);
  if (!ideal.is_zero() && ideal.support() != VarSet::range(ideal.ambient())) {
    if (c.trim) {
      ideal = trim_ambient(ideal);
    } else {
      std::cerr << "warning: variables " << (VarSet::range(ideal.ambient()) - ideal.support()).to_string()
                << " do not occur; each adds one to the depth (use --trim)\n";
    }
  }
  return ideal;
}

void print_ideal(const SqfIdeal& ideal, bool as_json) {
  if (as_json)
    std::cout << to_json(ideal).dump(2) << "\n";
  else
    std::cout << format_ideal(ideal);
}

int cmd_power(const std::string& source, int k, const Common& c) {
  print_ideal(squarefree_power(load_checked(source, c), k), c.json);
  return 0;
}

int cmd_betti(const std::string& source, const Common& c) {
  const SqfIdeal ideal = load_checked(source, c);
  const Field field = c.parsed_field();
  const BettiTable table = hochster_betti(ideal, field, c.hochster());
  if (c.json) {
    json out = to_json(table);
    out["depth"] = ideal.ambient() - table.projdim();
    out["field"] = field.name();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : table.entries()) std::cout << key.first << " " << key.second << " " << value << "\n";
  }
  return 0;
}

int cmd_depth(const std::string& source, const Common& c) {
  const SqfIdeal ideal = load_checked(source, c);
  const Field field = c.parsed_field();
  const int d = depth(ideal, field, c.hochster());
  if (c.json)
    std::cout << json{{"depth", d}, {"ambient", ideal.ambient()}, {"field", field.name()}}.dump(2) << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_profile(const std::string& source, bool cross_check, const Common& c) {
  ProfileOptions o;
  o.hochster = c.hochster();
  o.cross_check = cross_check;
  o.linquot_limits = c.limits();
  if (c.timeout <= 0) o.linquot_limits.max_nodes = 20000;
  const DepthProfile p = profile(load_checked(source, c), c.parsed_field(), o, source);
  if (c.json) {
    std::cout << to_json(p).dump(2) << "\n";
  } else {
    std::cout << "k  d_k  gens  depth  g  method\n";
    for (const ProfileRow& r : p.rows)
      std::cout << r.k << "  " << r.min_degree << "  " << r.generators << "  " << r.depth << "  " << r.g << "  "
                << (r.method == DepthMethod::LinearQuotients ? "linear-quotients" : "homology") << "\n";
    if (!check_nonincreasing(p.g_values())) std::cout << "g is not nonincreasing\n";
  }
  return 0;
}

int cmd_cover(const std::string& source, int k, const std::string& construct, const Common& c) {
  Graph g = load_graph(source);
  std::optional<FacetCover> cover;
  std::string how = construct;
  if (construct == "disconnected") {
    cover = construct_cover_disconnected(g, k);
  } else if (construct == "clique") {
    cover = construct_cover_dominating_clique(g, k);
  } else {
    const SqfIdeal power = squarefree_power(edge_ideal(g), k);
    if (power.is_zero()) throw Error(ErrorCode::OutOfRange, "k exceeds nu(G)");
    cover = find_well_ordered_cover(facet_complex(power), g.order() - 2 * k + 1);
    how = "search";
  }
  if (!cover) {
    std::cerr << "no well-ordered facet cover of cardinality " << g.order() - 2 * k + 1 << "\n";
    return kExitCheck;
  }
  const CoverCheck check = check_well_ordered_cover(*cover);
  const int n = g.order();
  const auto beta = hochster_betti(squarefree_power(edge_ideal(g), k), c.parsed_field(), c.hochster())
                        .at(static_cast<int>(cover->sequence.size()), n);
  if (c.json) {
    json out = to_json(*cover, check);
    out["construction"] = how;
    out["betti"] = {{"i", cover->sequence.size()}, {"j", n}, {"value", beta}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "construction " << how << "\n";
    for (VarSet f : cover->sequence) std::cout << f.to_string() << "\n";
    std::cout << (check.ok ? "well-ordered" : "NOT well-ordered: " + check.failure) << "\n";
    std::cout << "beta_{" << cover->sequence.size() << "," << n << "} = " << beta << "\n";
  }
  return check.ok && beta != 0 ? 0 : kExitCheck;
}

int cmd_linquot(const std::string& source, const Common& c) {
  const SqfIdeal ideal = load_checked(source, c);
  const auto cert = find_linear_quotients(ideal, c.limits());
  if (!cert) {
    if (c.json)
      std::cout << json{{"linear_quotients", false}}.dump(2) << "\n";
    else
      std::cout << "no linear quotients order\n";
    return kExitCheck;
  }
  if (c.json) {
    json out = to_json(*cert);
    out["linear_quotients"] = true;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < cert->ordering.size(); ++i)
      std::cout << cert->ordering[i].to_string() << "  r=" << cert->r[i] << "\n";
    if (cert->ordering.size() >= 2)
      std::cout << "depth " << depth_from_linear_quotients(*cert) << "\n";
    else
      std::cout << "single generator: depth formula does not apply\n";
  }
  return 0;
}

std::vector<CorpusEntry> build_corpus(const std::string& spec) {
  std::vector<CorpusEntry> corpus;
  const auto args_of = [&](std::size_t prefix) {
    std::vector<int> out;
    std::stringstream ss(spec.substr(prefix));
    for (std::string t; std::getline(ss, t, ',');) out.push_back(std::stoi(t));
    return out;
  };
  const auto add_graph = [&](const Graph& g) { corpus.push_back({graph_name(g), edge_ideal(g)}); };
  try {
    if (spec.rfind("all:", 0) == 0) {
      for (int n = 2; n <= args_of(4).at(0); ++n)
        for (const Graph& g : graphs_without_isolated_vertices(n)) add_graph(g);
    } else if (spec.rfind("random:", 0) == 0) {
      const auto a = args_of(7);
      for (const Graph& g : random_graphs(a.at(0), static_cast<std::size_t>(a.at(1)), static_cast<std::uint64_t>(a.at(2))))
        add_graph(g);
    } else if (spec.rfind("whiskered-ones:", 0) == 0) {
      const auto a = args_of(15);
      for (int s = a.at(0); s <= a.at(1); ++s) {
        const std::vector<int> ones(static_cast<std::size_t>(s), 1);
        corpus.push_back({"whiskered-ones:" + std::to_string(s), edge_ideal(family::whiskered(ones))});
      }
    } else if (std::filesystem::is_directory(spec)) {
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(spec))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) corpus.push_back({f.filename().string(), load_ideal(f.string())});
    } else {
      corpus.push_back({spec, load_ideal(spec)});
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadSpec, "cannot read corpus '" + spec + "'");
  }
  return corpus;
}

int cmd_scan(const std::string& spec, const Common& c) {
  const auto corpus = build_corpus(spec);
  ProfileOptions o;
  o.hochster = c.hochster();
  o.linquot_limits = c.limits();
  if (c.timeout <= 0) o.linquot_limits.max_nodes = 20000;
  const ScanReport report = scan(corpus, c.parsed_field(), o, spec);
  if (c.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << "corpus " << report.corpus << ": " << report.instances << " instances, " << report.violations.size()
              << " violations, " << report.failures.size() << " failures, " << std::fixed << std::setprecision(2)
              << report.seconds << " s\n";
    for (const auto& v : report.violations) {
      std::cout << "violation " << v.name << " g=(";
      for (std::size_t i = 0; i < v.g.size(); ++i) std::cout << (i ? "," : "") << v.g[i];
      std::cout << ")\n" << v.ideal_text;
    }
    for (const auto& f : report.failures) std::cout << "failure " << f.name << ": " << f.error << "\n";
    for (const auto& [name, t] : report.tail_zero) std::cout << "zero tail from k=" << t << "  " << name << "\n";
  }
  if (!report.failures.empty()) return kExitBudget;
  return report.violations.empty() ? 0 : kExitCheck;
}

int cmd_verify(const std::vector<int>& only, const Common& c) {
  VerifyOptions o;
  o.field = c.parsed_field();
  o.hochster = c.hochster();
  o.only = {only.begin(), only.end()};
  const VerifyReport report = verify_paper(o);
  if (c.json) {
    json rows = json::array();
    for (const auto& r : report.results)
      rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"finding", r.finding},
                      {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << json{{"field", report.field.name()}, {"criteria", rows}}.dump(2) << "\n";
  } else {
    std::cout << "field " << report.field.name() << "\n" << format_report(report);
  }
  if (report.all_passed()) return 0;
  const bool budget = std::any_of(report.results.begin(), report.results.end(), [](const CriterionResult& r) {
    return !r.passed && r.detail.find("BudgetExceeded") != std::string::npos;
  });
  return budget ? kExitBudget : kExitCheck;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::FaceBudgetExceeded:
    case ErrorCode::Timeout:
      return kExitBudget;
    case ErrorCode::CheckFailed:
    case ErrorCode::InvalidCertificate:
      return kExitCheck;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squarefree powers of squarefree monomial ideals"};
  app.require_subcommand(1);

  Common common;
  std::string source;
  int k = 1;
  std::string construct = "auto";
  bool cross_check = false;
  std::vector<int> only;
  int result = 0;

  auto* power = app.add_subcommand("power", "Squarefree power I^[k]");
  power->add_option("ideal", source, "Ideal file or shorthand")->required();
  power->add_option("-k", k, "Exponent")->required();
  add_common(power, common);
  power->callback([&] { result = cmd_power(source, k, common); });

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of S/I");
  betti->add_option("ideal", source)->required();
  add_common(betti, common);
  betti->callback([&] { result = cmd_betti(source, common); });

  auto* dep = app.add_subcommand("depth", "depth(S/I)");
  dep->add_option("ideal", source, "Ideal file, graph family or shorthand")->required();
  add_common(dep, common);
  dep->callback([&] { result = cmd_depth(source, common); });

  auto* prof = app.add_subcommand("profile", "Normalized depth function g_I(k)");
  prof->add_option("ideal", source)->required();
  prof->add_flag("--cross-check", cross_check, "Compare the linear quotients depth with homology");
  add_common(prof, common);
  prof->callback([&] { result = cmd_profile(source, cross_check, common); });

  auto* cover = app.add_subcommand("cover", "Well-ordered facet cover of I(G)^[k]");
  cover->add_option("graph", source)->required();
  cover->add_option("-k", k)->required();
  cover->add_option("--construct", construct, "disconnected, clique or auto (search)")
      ->check(CLI::IsMember({"disconnected", "clique", "auto"}));
  add_common(cover, common);
  cover->callback([&] { result = cmd_cover(source, k, construct, common); });

  auto* lq = app.add_subcommand("linquot", "Linear quotients certificate");
  lq->add_option("ideal", source)->required();
  add_common(lq, common);
  lq->callback([&] { result = cmd_linquot(source, common); });

  auto* sc = app.add_subcommand("scan", "Profile a corpus and check monotonicity of g");
  sc->add_option("corpus", source, "all:N, random:n,count,seed, whiskered-ones:a,b, a family, a file or a directory")
      ->required();
  add_common(sc, common);
  sc->callback([&] { result = cmd_scan(source, common); });

  auto* ver = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  ver->add_option("--only", only, "Criterion numbers to run");
  add_common(ver, common);
  ver->callback([&] { result = cmd_verify(only, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}
