#include "sqfpow/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqfpow/error.hpp"

namespace sqfpow {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

int parse_int(std::string_view token, const std::string& where) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::Parse, where + ": '" + std::string(token) + "' is not an integer");
  return value;
}

// Splits the input into comment-free, nonblank token lines; the first must be `n <count>`.
std::pair<int, std::vector<std::vector<int>>> read_lines(std::istream& in, const char* what) {
  std::string line;
  int header = -1;
  std::vector<std::vector<int>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(strip_comment(line));
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = std::string(what) + " line " + std::to_string(lineno);
    if (header < 0) {
      if (words.size() != 2 || words[0] != "n") throw Error(ErrorCode::Parse, where + ": expected 'n <count>'");
      header = parse_int(words[1], where);
      if (header < 1 || header > kMaxVars) throw Error(ErrorCode::Parse, where + ": count must lie in 1..64");
      continue;
    }
    std::vector<int> row;
    for (const auto& w : words) row.push_back(parse_int(w, where));
    rows.push_back(std::move(row));
  }
  if (header < 0) throw Error(ErrorCode::Parse, std::string(what) + ": missing 'n <count>' header");
  return {header, std::move(rows)};
}

std::vector<int> parse_int_list(std::string_view args, const std::string& spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= args.size()) {
    const auto comma = args.find(',', start);
    const auto token = args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_int(token, spec));
    } catch (const Error&) {
      throw Error(ErrorCode::BadSpec, "bad argument list in '" + spec + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

SqfIdeal parse_ideal(std::istream& in) {
  auto [n, rows] = read_lines(in, "ideal");
  std::vector<VarSet> gens;
  for (const auto& row : rows) {
    VarSet g;
    for (int v : row) {
      if (v < 1 || v > n)
        throw Error(ErrorCode::AmbientMismatch, "variable " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (g.contains(v))
        throw Error(ErrorCode::NotSquarefree, "variable " + std::to_string(v) + " repeated in one generator");
      g = g.with(v);
    }
    gens.push_back(g);
  }
  return SqfIdeal::minimalize(gens, n);
}

SqfIdeal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in);
}

std::string format_ideal(const SqfIdeal& ideal) {
  std::string out = "n " + std::to_string(ideal.ambient()) + "\n";
  for (VarSet g : ideal.gens()) {
    bool first = true;
    g.for_each([&](int v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

Graph parse_graph(std::istream& in) {
  auto [n, rows] = read_lines(in, "graph");
  Graph g(n);
  for (const auto& row : rows) {
    if (row.size() != 2) throw Error(ErrorCode::Parse, "graph edge lines need exactly two vertices");
    g.add_edge(row[0], row[1]);
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

bool looks_like_family(std::string_view spec) {
  const auto colon = spec.find(':');
  return colon != std::string_view::npos && colon > 0 && !std::filesystem::exists(std::string(spec));
}

Graph parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::BadSpec, "family spec needs 'name:args'");
  const std::string name(spec.substr(0, colon));
  const std::string full(spec);
  const auto args = parse_int_list(spec.substr(colon + 1), full);
  const auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw Error(ErrorCode::BadSpec, "'" + name + "' takes " + std::to_string(want) + " argument(s)");
  };
  if (name == "complete") return arity(1), family::complete(args[0]);
  if (name == "complete_bipartite") return arity(2), family::complete_bipartite(args[0], args[1]);
  if (name == "path") return arity(1), family::path(args[0]);
  if (name == "cycle") return arity(1), family::cycle(args[0]);
  if (name == "path_complement") return arity(1), family::path_complement(args[0]);
  if (name == "whiskered") return family::whiskered(args);
  throw Error(ErrorCode::BadSpec, "unknown graph family '" + name + "'");
}

SqfIdeal counterexample_ideal() {
  const std::vector<VarSet> gens{VarSet::of({1, 3, 5}),  VarSet::of({2, 4, 6}),  VarSet::of({5, 7, 9}),
                                 VarSet::of({4, 6, 8}),  VarSet::of({4, 7, 10}), VarSet::of({9, 10, 11}),
                                 VarSet::of({5, 8, 11})};
  return SqfIdeal::minimalize(gens, 11);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SqfIdeal load_ideal(const std::string& source) {
  if (source == "counterexample") return counterexample_ideal();
  if (source.rfind("veronese:", 0) == 0) {
    const auto args = parse_int_list(std::string_view(source).substr(9), source);
    if (args.size() != 2) throw Error(ErrorCode::BadSpec, "'veronese' takes n,d");
    return squarefree_veronese(args[0], args[1]);
  }
  if (looks_like_family(source)) return edge_ideal(parse_family(source));
  return parse_ideal(read_file(source));
}

Graph load_graph(const std::string& source) {
  if (looks_like_family(source)) return parse_family(source);
  return parse_graph(read_file(source));
}

using nlohmann::json;

json to_json(const SqfIdeal& ideal) {
  json gens = json::array();
  for (VarSet g : ideal.gens()) gens.push_back(g.indices());
  return {{"ambient", ideal.ambient()}, {"generators", gens}};
}

json to_json(const BettiTable& table) {
  json rows = json::array();
  for (const auto& [key, value] : table.entries()) rows.push_back({key.first, key.second, value});
  return {{"betti", rows}, {"projdim", table.projdim()}, {"regularity", table.regularity()}};
}

json to_json(const LinearQuotientsCert& cert) {
  json order = json::array();
  for (VarSet u : cert.ordering) order.push_back(u.indices());
  json r = std::vector<int>(cert.r.begin() + (cert.r.empty() ? 0 : 1), cert.r.end());
  json out{{"ambient", cert.ambient}, {"ordering", order}, {"r", r}};
  if (cert.ordering.size() >= 2) out["depth"] = depth_from_linear_quotients(cert);
  return out;
}

LinearQuotientsCert cert_from_json(const json& j) {
  LinearQuotientsCert cert;
  cert.ambient = j.at("ambient").get<int>();
  for (const auto& u : j.at("ordering")) cert.ordering.push_back(VarSet::of(u.get<std::vector<int>>()));
  cert.r.push_back(0);
  for (const auto& r : j.at("r")) cert.r.push_back(r.get<int>());
  return cert;
}

json to_json(const FacetCover& cover, const CoverCheck& check) {
  json seq = json::array();
  for (VarSet f : cover.sequence) seq.push_back(f.indices());
  json transcript = json::array();
  for (const auto& step : check.transcript) transcript.push_back({{"facet", step.facet.indices()}, {"index", step.index}});
  json out{{"sequence", seq}, {"cardinality", cover.sequence.size()}, {"host_vertices", cover.host.vertices().indices()},
           {"host_facets", cover.host.facets().size()}, {"well_ordered", check.ok}, {"transcript", transcript}};
  if (!check.ok) out["failure"] = check.failure;
  return out;
}

json to_json(const DepthProfile& p) {
  json rows = json::array();
  for (const ProfileRow& r : p.rows)
    rows.push_back({{"k", r.k},
                    {"d_k", r.min_degree},
                    {"generators", r.generators},
                    {"depth", r.depth},
                    {"g", r.g},
                    {"method", r.method == DepthMethod::LinearQuotients ? "linear-quotients" : "homology"}});
  return {{"descriptor", p.descriptor}, {"ambient", p.ambient}, {"field", p.field.name()}, {"rows", rows}};
}

json to_json(const ScanReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"name", v.name}, {"g", v.g}, {"ideal", v.ideal_text}});
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"name", f.name}, {"error", f.error}});
  json tails = json::array();
  for (const auto& [name, t] : report.tail_zero) tails.push_back({{"name", name}, {"zero_from", t}});
  json profiles = json::array();
  for (const auto& p : report.profiles) profiles.push_back({{"name", p.descriptor}, {"g", p.g_values()}});
  return {{"corpus", report.corpus},     {"instances", report.instances}, {"violations", violations},
          {"failures", failures},        {"tail_zero", tails},            {"profiles", profiles},
          {"seconds", report.seconds}};
}

json to_json(const Matching& matching) {
  json out = json::array();
  for (const Edge& e : matching) out.push_back({e.u, e.v});
  return out;
}

}  // namespace sqfpow
