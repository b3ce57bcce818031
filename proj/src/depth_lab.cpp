#include "sqfpow/depth_lab.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>

#include "sqfpow/error.hpp"
#include "sqfpow/io.hpp"

namespace sqfpow {

std::vector<int> DepthProfile::g_values() const {
  std::vector<int> out;
  for (const ProfileRow& r : rows) out.push_back(r.g);
  return out;
}

std::vector<int> DepthProfile::depths() const {
  std::vector<int> out;
  for (const ProfileRow& r : rows) out.push_back(r.depth);
  return out;
}

DepthProfile profile(const SqfIdeal& ideal, const Field& field, const ProfileOptions& options,
                     std::string descriptor) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "profile of the zero ideal");
  DepthProfile out{std::move(descriptor), ideal.ambient(), field, {}};
  SqfIdeal power = ideal;
  for (int k = 1; !power.is_zero(); ++k) {
    ProfileRow row{k, power.min_degree(), power.size(), 0, 0, DepthMethod::Homology};
    std::optional<int> fast;
    if (options.use_linear_quotients && power.size() >= 2) {
      try {
        if (const auto cert = find_linear_quotients(power, options.linquot_limits))
          fast = depth_from_linear_quotients(*cert);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Timeout) throw;
      }
    }
    if (fast) {
      row.depth = *fast;
      row.method = DepthMethod::LinearQuotients;
      if (options.cross_check) {
        const int slow = depth(power, field, options.hochster);
        if (slow != *fast)
          throw Error(ErrorCode::CheckFailed, "k=" + std::to_string(k) + ": linear quotients depth " +
                                                  std::to_string(*fast) + " vs homology depth " +
                                                  std::to_string(slow));
      }
    } else {
      row.depth = depth(power, field, options.hochster);
    }
    row.g = row.depth - (row.min_degree - 1);
    out.rows.push_back(row);
    power = squarefree_product(ideal, power);
  }
  return out;
}

bool check_nonincreasing(std::span<const int> g) {
  return std::adjacent_find(g.begin(), g.end(), [](int a, int b) { return b > a; }) == g.end();
}

std::optional<int> zero_tail_start(std::span<const int> g) {
  if (g.empty() || g.back() != 0) return std::nullopt;
  std::size_t t = g.size();
  while (t > 0 && g[t - 1] == 0) --t;
  return static_cast<int>(t) + 1;
}

// -- corpora ------------------------------------------------------------------

namespace {

// Cheap isomorphism invariant: sorted (degree, sorted neighbour degrees) per
// vertex plus the triangle count.
std::vector<int> signature(const Graph& g) {
  std::vector<std::vector<int>> per_vertex;
  int triangles = 0;
  for (int v = 1; v <= g.order(); ++v) {
    std::vector<int> row{g.degree(v)};
    g.neighbors(v).for_each([&](int w) {
      row.push_back(g.degree(w));
      if (w > v) triangles += (g.neighbors(v) & (g.neighbors(w) - VarSet::range(w))).size();
    });
    std::sort(row.begin() + 1, row.end());
    per_vertex.push_back(std::move(row));
  }
  std::sort(per_vertex.begin(), per_vertex.end());
  std::vector<int> out{g.order(), static_cast<int>(g.edge_count()), triangles};
  for (const auto& row : per_vertex) {
    out.push_back(-1);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

// Backtracking isomorphism test, vertices matched in order with degree pruning.
bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  VarSet used;
  auto place = [&](auto&& self, int v) -> bool {
    if (v > n) return true;
    bool found = false;
    (b.vertices() - used).for_each([&](int w) {
      if (found || a.degree(v) != b.degree(w)) return;
      for (int u = 1; u < v; ++u)
        if (a.adjacent(u, v) != b.adjacent(image[static_cast<std::size_t>(u)], w)) return;
      image[static_cast<std::size_t>(v)] = w;
      used = used.with(w);
      found = self(self, v + 1);
      used = used.without(w);
    });
    return found;
  };
  return place(place, 1);
}

}  // namespace

std::vector<Graph> graphs_without_isolated_vertices(int n, bool dedup) {
  if (n < 2 || n > 7) throw Error(ErrorCode::BudgetExceeded, "exhaustive graph corpus limited to 2 <= n <= 7");
  std::vector<Edge> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(slots[i].u, slots[i].v);
    if (!g.isolated_vertices().empty()) continue;
    if (dedup) {
      auto& bucket = buckets[signature(g)];
      if (std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return isomorphic(out[i], g); })) continue;
      bucket.push_back(out.size());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> random_graphs(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2 || n > kMaxVars) throw Error(ErrorCode::BadSpec, "random graphs need 2 <= n <= 64");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> out;
  while (out.size() < count) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.isolated_vertices().empty()) out.push_back(std::move(g));
  }
  return out;
}

std::string graph_name(const Graph& g) {
  std::string s = "n" + std::to_string(g.order()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return s;
}

ScanReport scan(std::span<const CorpusEntry> corpus, const Field& field, const ProfileOptions& options,
                std::string corpus_name) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.corpus = std::move(corpus_name);
  report.instances = corpus.size();
  std::vector<std::optional<DepthProfile>> results(corpus.size());
  std::vector<std::string> errors(corpus.size());
  const auto count = static_cast<long long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto& entry = corpus[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] = profile(entry.ideal, field, options, entry.name);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!results[i]) {
      report.failures.push_back({corpus[i].name, errors[i]});
      continue;
    }
    const auto g = results[i]->g_values();
    if (!check_nonincreasing(g)) report.violations.push_back({corpus[i].name, g, format_ideal(corpus[i].ideal)});
    if (const auto t = zero_tail_start(g); t && *t > 1) report.tail_zero.emplace_back(corpus[i].name, *t);
    report.profiles.push_back(std::move(*results[i]));
  }
  const auto by_name = [](const auto& a, const auto& b) { return a.name < b.name; };
  std::sort(report.violations.begin(), report.violations.end(), by_name);
  std::sort(report.failures.begin(), report.failures.end(), by_name);
  std::sort(report.tail_zero.begin(), report.tail_zero.end());
  std::sort(report.profiles.begin(), report.profiles.end(),
            [](const DepthProfile& a, const DepthProfile& b) { return a.descriptor < b.descriptor; });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sqfpow
