#include "sqfpow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "sqfpow/depth_lab.hpp"
#include "sqfpow/error.hpp"
#include "sqfpow/facet_cover.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/io.hpp"
#include "sqfpow/linquot.hpp"

namespace sqfpow {

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

namespace {

class Checker {
 public:
  void expect(const std::string& label, long long actual, long long expected) {
    observations[label] = actual;
    ++checks_;
    if (actual != expected)
      fail(label + " = " + std::to_string(actual) + ", expected " + std::to_string(expected));
  }

  void require(const std::string& label, bool ok) {
    ++checks_;
    if (!ok) fail(label);
  }

  void fail(const std::string& message) {
    if (failures_.size() < 6) failures_.push_back(message);
    ++failed_;
  }

  void note(const std::string& text) { notes_.push_back(text); }

  bool ok() const { return failed_ == 0; }

  std::string summary() const {
    std::ostringstream out;
    if (ok()) {
      out << checks_ << " checks";
    } else {
      out << failed_ << " of " << checks_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? "; " : "") << failures_[i];
      if (failed_ > failures_.size()) out << "; ...";
    }
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

  Observations observations;

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

ProfileOptions homology_only(const HochsterOptions& h) {
  ProfileOptions o;
  o.hochster = h;
  o.use_linear_quotients = false;
  return o;
}

// Profiles and depths over one field, cached by label.
class Reference {
 public:
  Reference(Field field, HochsterOptions hochster) : field_(field), hochster_(hochster) {}

  const Field& field() const { return field_; }
  const HochsterOptions& hochster() const { return hochster_; }

  const DepthProfile& profile_of(const std::string& label, const SqfIdeal& ideal) {
    auto it = profiles_.find(label);
    if (it == profiles_.end())
      it = profiles_.emplace(label, profile(ideal, field_, homology_only(hochster_), label)).first;
    return it->second;
  }

  int depth_of(const SqfIdeal& ideal) const { return depth(ideal, field_, hochster_); }

 private:
  Field field_;
  HochsterOptions hochster_;
  std::map<std::string, DepthProfile> profiles_;
};

std::string whisker_label(std::span<const int> a) {
  std::string s = "whiskered(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

void expect_profile(Checker& c, const std::string& label, const DepthProfile& p, std::span<const int> g) {
  c.expect(label + " nu", static_cast<long long>(p.rows.size()), static_cast<long long>(g.size()));
  for (std::size_t k = 0; k < std::min(g.size(), p.rows.size()); ++k)
    c.expect(label + " g_" + std::to_string(k + 1), p.rows[k].g, g[k]);
}

// -- criteria 1 to 6 -----------------------------------------------------------

void criterion_counterexample(Reference& ref, Checker& c) {
  const SqfIdeal ideal = counterexample_ideal();
  c.expect("counterexample nu", nu(ideal), 3);
  const DepthProfile& p = ref.profile_of("counterexample", ideal);
  c.expect("counterexample rows", static_cast<long long>(p.rows.size()), 3);
  if (p.rows.size() < 3) return;
  c.expect("counterexample d_3", p.rows[2].min_degree, 9);
  c.expect("counterexample depth_3", p.rows[2].depth, 9);
  c.expect("counterexample g_3", p.rows[2].g, 1);
}

void criterion_whiskered_tables(Reference& ref, Checker& c) {
  const std::map<int, std::vector<int>> expected{{4, {3, 1, 0, 0}}, {5, {4, 2, 0, 0, 0}}, {6, {5, 3, 1, 0, 0, 0}}};
  for (const auto& [s, g] : expected) {
    const std::vector<int> ones(static_cast<std::size_t>(s), 1);
    const std::string label = whisker_label(ones);
    const DepthProfile& p = ref.profile_of(label, edge_ideal(family::whiskered(ones)));
    expect_profile(c, label, p, g);
    const auto tail = zero_tail_start(p.g_values());
    c.expect(label + " zero tail start", tail.value_or(-1), s / 2 + 1);
  }
}

void criterion_whiskered_triangle(Reference& ref, Checker& c) {
  const std::vector<int> twos{2, 2, 2};
  const DepthProfile& p = ref.profile_of(whisker_label(twos), edge_ideal(family::whiskered(twos)));
  c.require("whiskered(2,2,2) has nu >= 2", p.rows.size() >= 2);
  if (p.rows.size() < 2) return;
  c.expect("whiskered(2,2,2) depth_1", p.rows[0].depth, 5);
  c.expect("whiskered(2,2,2) depth_2", p.rows[1].depth, 3);
  const int s = 3;
  c.expect("whiskered(2,2,2) depth_1 vs s^2-2s+2", p.rows[0].depth, s * s - 2 * s + 2);
}

void criterion_path_complements(Reference& ref, Checker& c) {
  for (int n = 6; n <= 8; ++n) {
    const std::string label = "path_complement:" + std::to_string(n);
    const SqfIdeal ideal = edge_ideal(family::path_complement(n));
    c.require(label + " I^[2] == m^[4]", squarefree_power(ideal, 2) == squarefree_veronese(n, 4));
    const DepthProfile& p = ref.profile_of(label, ideal);
    c.expect(label + " nu", static_cast<long long>(p.rows.size()), n / 2);
    if (p.rows.empty()) continue;
    c.expect(label + " depth_1", p.rows[0].depth, 2);
    for (std::size_t k = 2; k <= p.rows.size(); ++k)
      c.expect(label + " depth_" + std::to_string(k), p.rows[k - 1].depth, 2 * static_cast<long long>(k) - 1);
  }
}

void criterion_veronese(Reference& ref, Checker& c) {
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= std::min(4, n); ++d) {
      const SqfIdeal ideal = squarefree_veronese(n, d);
      const std::string label = "veronese:" + std::to_string(n) + "," + std::to_string(d);
      const DepthProfile& p = ref.profile_of(label, ideal);
      c.expect(label + " nu", static_cast<long long>(p.rows.size()), n / d);
      for (int k = 1; d * k <= n; ++k) {
        c.require(label + " power " + std::to_string(k) + " == m^[dk]",
                  squarefree_power(ideal, k) == squarefree_veronese(n, d * k));
        if (static_cast<std::size_t>(k) <= p.rows.size())
          c.expect(label + " depth_" + std::to_string(k), p.rows[static_cast<std::size_t>(k) - 1].depth, d * k - 1);
      }
    }
}

void criterion_bipartite(Reference& ref, Checker& c) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const std::string label = "complete_bipartite:" + std::to_string(m) + "," + std::to_string(n);
      const DepthProfile& p = ref.profile_of(label, edge_ideal(family::complete_bipartite(m, n)));
      expect_profile(c, label, p, std::vector<int>(static_cast<std::size_t>(std::min(m, n)), 0));
    }
}

using ReferenceCriterion = void (*)(Reference&, Checker&);
constexpr ReferenceCriterion kReferenceCriteria[] = {criterion_counterexample,     criterion_whiskered_tables,
                                                     criterion_whiskered_triangle, criterion_path_complements,
                                                     criterion_veronese,           criterion_bipartite};

// Base ideals of criteria 1 to 6.
std::vector<std::pair<std::string, SqfIdeal>> reference_ideals() {
  std::vector<std::pair<std::string, SqfIdeal>> out;
  out.emplace_back("counterexample", counterexample_ideal());
  for (int s = 4; s <= 6; ++s) {
    const std::vector<int> ones(static_cast<std::size_t>(s), 1);
    out.emplace_back(whisker_label(ones), edge_ideal(family::whiskered(ones)));
  }
  const std::vector<int> twos{2, 2, 2};
  out.emplace_back(whisker_label(twos), edge_ideal(family::whiskered(twos)));
  for (int n = 6; n <= 8; ++n)
    out.emplace_back("path_complement:" + std::to_string(n), edge_ideal(family::path_complement(n)));
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= std::min(4, n); ++d)
      out.emplace_back("veronese:" + std::to_string(n) + "," + std::to_string(d), squarefree_veronese(n, d));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      out.emplace_back("complete_bipartite:" + std::to_string(m) + "," + std::to_string(n),
                       edge_ideal(family::complete_bipartite(m, n)));
  return out;
}

// -- the exhaustive corpus -------------------------------------------------------

struct CorpusGraph {
  Graph graph;
  std::string name;
  DepthProfile profile;
};

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options), ref_(options.field, options.hochster) {}

  CriterionResult run(int id);

 private:
  const std::vector<CorpusGraph>& corpus() {
    if (corpus_) return *corpus_;
    std::vector<CorpusEntry> entries;
    std::vector<Graph> graphs;
    for (int n = 2; n <= 6; ++n)
      for (Graph& g : graphs_without_isolated_vertices(n)) {
        entries.push_back({graph_name(g), edge_ideal(g)});
        graphs.push_back(std::move(g));
      }
    ScanReport report = scan(entries, ref_.field(), homology_only(ref_.hochster()), "graphs n<=6");
    if (!report.failures.empty())
      throw Error(ErrorCode::CheckFailed, report.failures.front().name + ": " + report.failures.front().error);
    std::map<std::string, DepthProfile> by_name;
    for (auto& p : report.profiles) by_name.emplace(p.descriptor, std::move(p));
    corpus_.emplace();
    for (Graph& g : graphs) {
      std::string name = graph_name(g);
      corpus_->push_back({std::move(g), name, std::move(by_name.at(name))});
    }
    return *corpus_;
  }

  void matroidal(Checker& c);
  void nice(Checker& c);
  void cor_nu(Checker& c);
  void covers(Checker& c);
  void terai(Checker& c);
  void linear_quotients(Checker& c);
  bool conjecture_scan(Checker& c);
  bool field_robustness(Checker& c);

  const VerifyOptions& options_;
  Reference ref_;
  std::optional<std::vector<CorpusGraph>> corpus_;
  std::optional<Observations> reference_obs_;
};

void Suite::matroidal(Checker& c) {
  std::vector<std::pair<std::string, SqfIdeal>> ideals;
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d <= std::min(4, n); ++d)
      ideals.emplace_back("veronese:" + std::to_string(n) + "," + std::to_string(d), squarefree_veronese(n, d));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      ideals.emplace_back("complete_bipartite:" + std::to_string(m) + "," + std::to_string(n),
                          edge_ideal(family::complete_bipartite(m, n)));
  for (const auto& [label, ideal] : ideals) {
    c.require(label + " is matroidal", is_matroidal(ideal));
    const DepthProfile& p = ref_.profile_of(label, ideal);
    for (const ProfileRow& row : p.rows) c.expect(label + " g_" + std::to_string(row.k), row.g, 0);
    if (ideal.ambient() > 6) continue;
    const MonomialIdeal mono = to_monomial_ideal(ideal);
    for (int k = 2; k <= 3; ++k) {
      const MonomialIdeal power = ordinary_power(mono, k);
      const auto report = squarefree_part_preserves(power, PreservedProperty::Matroidal);
      c.require(label + " squarefree part of I^" + std::to_string(k) + " is matroidal", report.output_verified);
      c.require(label + " squarefree part of I^" + std::to_string(k) + " == I^[k]",
                report.squarefree_part == squarefree_power(ideal, k));
    }
  }
}

void Suite::nice(Checker& c) {
  for (const CorpusGraph& cg : corpus()) {
    const bool disconnected = !is_connected(complement(cg.graph));
    const bool first_zero = top_betti_mindepth(cg.graph, 1, ref_.field(), ref_.hochster());
    const auto g = cg.profile.g_values();
    const bool all_zero = std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
    c.require(cg.name + ": complement disconnected <=> g(1)=0", disconnected == first_zero);
    c.require(cg.name + ": g(1)=0 <=> g identically 0", first_zero == all_zero);
    for (const ProfileRow& row : cg.profile.rows)
      c.require(cg.name + ": top Betti test at k=" + std::to_string(row.k),
                top_betti_mindepth(cg.graph, row.k, ref_.field(), ref_.hochster()) == (row.g == 0));
    for (const ProfileRow& row : cg.profile.rows)
      if (row.k >= 2 && dominating_clique(cg.graph, 2 * row.k - 1))
        c.expect(cg.name + ": dominating clique forces g_" + std::to_string(row.k) + "=0", row.g, 0);
  }
  c.note(std::to_string(corpus().size()) + " graphs");
}

void Suite::cor_nu(Checker& c) {
  std::size_t count = 0;
  for (const CorpusGraph& cg : corpus()) {
    if (cg.graph.order() > 5) continue;
    c.expect(cg.name + " g(nu)", cg.profile.rows.back().g, 0);
    ++count;
  }
  std::vector<CorpusEntry> top;
  std::uint64_t seed = options_.seed;
  for (int n : {7, 8})
    for (const Graph& g : random_graphs(n, 200, seed++)) {
      const SqfIdeal ideal = edge_ideal(g);
      top.push_back({graph_name(g), squarefree_power(ideal, nu(ideal))});
    }
  const ScanReport report = scan(top, ref_.field(), homology_only(ref_.hochster()), "random n=7,8 at k=nu");
  for (const auto& f : report.failures) c.fail(f.name + ": " + f.error);
  for (const DepthProfile& p : report.profiles) c.expect(p.descriptor + " g(nu)", p.rows.front().g, 0);
  c.note(std::to_string(count) + " exhaustive + " + std::to_string(top.size()) + " random graphs");
}

void Suite::covers(Checker& c) {
  std::size_t built = 0;
  for (const CorpusGraph& cg : corpus()) {
    const int n = cg.graph.order();
    for (const ProfileRow& row : cg.profile.rows) {
      const int k = row.k;
      if (k < 2) continue;
      std::vector<std::pair<std::string, FacetCover>> found;
      try {
        found.emplace_back("disconnected", construct_cover_disconnected(cg.graph, k));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated) throw;
      }
      try {
        found.emplace_back("clique", construct_cover_dominating_clique(cg.graph, k));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoDominatingClique) throw;
      }
      if (found.empty()) continue;
      const BettiTable betti = hochster_betti(squarefree_power(edge_ideal(cg.graph), k), ref_.field(), ref_.hochster());
      for (const auto& [how, cover] : found) {
        ++built;
        const std::string label = cg.name + " k=" + std::to_string(k) + " " + how;
        const CoverCheck check = check_well_ordered_cover(cover);
        c.require(label + " well-ordered (" + check.failure + ")", check.ok);
        c.expect(label + " cover size", static_cast<long long>(cover.sequence.size()), n - 2 * k + 1);
        c.require(label + " beta_{n-2k+1,n} != 0", betti.at(n - 2 * k + 1, n) != 0);
      }
    }
  }
  c.require("some construction applied", built > 0);
  c.note(std::to_string(built) + " covers built");
}

void Suite::terai(Checker& c) {
  std::mt19937_64 rng(options_.seed);
  std::vector<std::pair<std::string, SqfIdeal>> ideals;
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int s = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<VarSet> gens;
    while (static_cast<int>(gens.size()) < s) {
      const auto bits = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 1)(rng);
      gens.push_back(VarSet{bits});
    }
    ideals.emplace_back("random#" + std::to_string(i), SqfIdeal::minimalize(gens, n));
  }
  for (const auto& [label, ideal] : reference_ideals()) {
    SqfIdeal power = ideal;
    for (int k = 1; !power.is_zero(); ++k) {
      ideals.emplace_back(label + " power " + std::to_string(k), power);
      power = squarefree_product(ideal, power);
    }
  }
  for (const auto& [label, ideal] : ideals)
    c.expect(label + ": n - depth vs dual regularity certificate", ideal.ambient() - ref_.depth_of(ideal),
             projdim_via_dual(ideal, ref_.field(), ref_.hochster()));
  c.note(std::to_string(ideals.size()) + " ideals");
}

void Suite::linear_quotients(Checker& c) {
  std::size_t graphs = 0;
  for (const CorpusGraph& cg : corpus()) {
    if (!is_cochordal(cg.graph)) continue;
    ++graphs;
    for (const ProfileRow& row : cg.profile.rows) {
      const std::string label = cg.name + " k=" + std::to_string(row.k);
      const SqfIdeal power = squarefree_power(edge_ideal(cg.graph), row.k);
      const auto cert = find_linear_quotients(power);
      c.require(label + " has linear quotients", cert.has_value());
      if (!cert) continue;
      if (cert->ordering.size() >= 2)
        c.expect(label + " formula depth vs homology depth", depth_from_linear_quotients(*cert), row.depth);
      const bool witness = mindepth_criterion(cg.graph, row.k, *cert).has_value();
      c.require(label + " mindepth criterion <=> g=0", witness == (row.g == 0));
      if (row.g == 0)
        c.require(label + " g=0 forces a dominating k-matching", dominating_k_matching(cg.graph, row.k).has_value());
    }
  }
  c.note(std::to_string(graphs) + " cochordal graphs");
}

bool Suite::conjecture_scan(Checker& c) {
  std::vector<std::string> violations;
  std::size_t profiles = 0;
  const auto check = [&](const DepthProfile& p) {
    ++profiles;
    const auto g = p.g_values();
    if (!check_nonincreasing(g)) {
      std::string text = p.descriptor + " g=(";
      for (std::size_t i = 0; i < g.size(); ++i) text += (i ? "," : "") + std::to_string(g[i]);
      violations.push_back(text + ")");
    }
  };
  for (const CorpusGraph& cg : corpus()) check(cg.profile);
  for (const auto& [label, ideal] : reference_ideals()) check(ref_.profile_of(label, ideal));
  c.note(std::to_string(profiles) + " profiles scanned");
  if (!violations.empty()) {
    std::string text = "non-monotone g (needs review):";
    for (const auto& v : violations) text += " " + v;
    c.note(text);
  }
  return !violations.empty();
}

bool Suite::field_robustness(Checker& c) {
  const Field gf = Field::gf(kDefaultPrime);
  const Observations q = options_.field == Field::rational() && reference_obs_
                             ? *reference_obs_
                             : reference_observations(Field::rational(), options_.hochster);
  const Observations p = reference_observations(gf, options_.hochster);
  c.expect("observation count", static_cast<long long>(p.size()), static_cast<long long>(q.size()));
  for (const auto& [label, value] : q) {
    const auto it = p.find(label);
    c.expect(label + " over " + gf.name(), it == p.end() ? -1 : it->second, value);
  }
  bool finding = false;
  if (!(options_.field == Field::rational()) && !(options_.field == gf)) {
    const Observations own = reference_observations(options_.field, options_.hochster);
    std::size_t differ = 0;
    std::string first;
    for (const auto& [label, value] : q) {
      const auto it = own.find(label);
      if (it != own.end() && it->second != value && differ++ == 0)
        first = label + " is " + std::to_string(it->second) + " over " + options_.field.name() + ", " +
                std::to_string(value) + " over Q";
    }
    if (differ > 0) {
      c.note(std::to_string(differ) + " characteristic-dependent disagreements, e.g. " + first);
      finding = true;
    } else {
      c.note("no disagreements between " + options_.field.name() + " and Q");
    }
  }
  c.note(std::to_string(q.size()) + " observations compared");
  return finding;
}

const char* criterion_name(int id) {
  static const char* names[] = {"",
                                "counterexample ideal",
                                "whiskered tables",
                                "whiskered(2,2,2)",
                                "path complements",
                                "squarefree Veronese",
                                "complete bipartite",
                                "matroidal minimum depth",
                                "nice equivalence",
                                "g(nu) = 0",
                                "well-ordered cover soundness",
                                "Terai cross-check",
                                "linear quotients consistency",
                                "conjecture scan",
                                "field robustness"};
  return names[id];
}

CriterionResult Suite::run(int id) {
  CriterionResult result{id, criterion_name(id), false, false, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  try {
    if (id >= 1 && id <= 6) {
      kReferenceCriteria[id - 1](ref_, c);
      if (!reference_obs_) reference_obs_.emplace();
      reference_obs_->insert(c.observations.begin(), c.observations.end());
    } else if (id == 7) {
      matroidal(c);
    } else if (id == 8) {
      nice(c);
    } else if (id == 9) {
      cor_nu(c);
    } else if (id == 10) {
      covers(c);
    } else if (id == 11) {
      terai(c);
    } else if (id == 12) {
      linear_quotients(c);
    } else if (id == 13) {
      result.finding = conjecture_scan(c);
    } else if (id == 14) {
      result.finding = field_robustness(c);
    }
    result.passed = c.ok();
    result.detail = c.summary();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

Observations reference_observations(const Field& field, const HochsterOptions& hochster) {
  Reference ref(field, hochster);
  Checker c;
  for (ReferenceCriterion criterion : kReferenceCriteria) criterion(ref, c);
  return c.observations;
}

VerifyReport verify_paper(const VerifyOptions& options) {
  VerifyReport report{options.field, {}};
  Suite suite(options);
  for (int id = 1; id <= 14; ++id)
    if (options.only.empty() || options.only.contains(id)) report.results.push_back(suite.run(id));
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const CriterionResult& r : report.results) {
    const char* status = !r.passed ? "FAIL" : r.finding ? "PASS*" : "PASS";
    out << status << "  [" << r.id << "] " << r.name << "  (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s)  " << r.detail << "\n";
  }
  return out.str();
}

}  // namespace sqfpow
