#include "sqfpow/linquot.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sqfpow/error.hpp"

namespace sqfpow {

std::vector<VarSet> colon_generators(std::span<const VarSet> prefix, VarSet u) {
  std::vector<VarSet> quotients;
  quotients.reserve(prefix.size());
  for (VarSet w : prefix) quotients.push_back(w - u);
  std::sort(quotients.begin(), quotients.end(), CanonicalLess{});
  quotients.erase(std::unique(quotients.begin(), quotients.end()), quotients.end());
  std::vector<VarSet> minimal;
  for (VarSet q : quotients)
    if (std::none_of(minimal.begin(), minimal.end(), [&](VarSet m) { return m.subset_of(q); })) minimal.push_back(q);
  return minimal;
}

namespace {

// Colon quotient u_j : u_i summarised by its support and total degree.
struct Quotient {
  VarSet support;
  int degree = 0;
};

// Variables generating (prefix) : u if that colon is generated by variables.
template <class QuotientOf>
std::optional<VarSet> linear_colon(std::span<const std::size_t> prefix, std::size_t u, QuotientOf&& quotient) {
  VarSet singles;
  for (std::size_t w : prefix) {
    const Quotient q = quotient(u, w);
    if (q.degree == 0) return std::nullopt;  // unit colon: u is not a minimal generator
    if (q.degree == 1) singles |= q.support;
  }
  for (std::size_t w : prefix)
    if (quotient(u, w).support.disjoint(singles)) return std::nullopt;
  return singles;
}

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words) h = (h ^ std::hash<VarSet>{}(VarSet{w})) * 0x100000001b3ULL;
    return h;
  }
};

class OrderSearch {
 public:
  OrderSearch(std::size_t size, std::vector<Quotient> table, const SearchLimits& limits)
      : size_(size), table_(std::move(table)), limits_(limits), placed_((size + 63) / 64, 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  Quotient quotient(std::size_t u, std::size_t w) const { return table_[u * size_ + w]; }
  bool is_placed(std::size_t i) const { return (placed_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { placed_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  void tick() {
    ++nodes_;
    if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes)
      throw Error(ErrorCode::Timeout, "linear quotients search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    if (limits_.deadline && (nodes_ & 255U) == 1 && std::chrono::steady_clock::now() > *limits_.deadline)
      throw Error(ErrorCode::Timeout, "linear quotients search ran past its deadline");
  }

  bool extend() {
    if (order_.size() == size_) return true;
    if (dead_.contains(placed_)) return false;
    tick();
    for (std::size_t c = 0; c < size_; ++c) {
      if (is_placed(c)) continue;
      if (!order_.empty() &&
          !linear_colon(order_, c, [this](std::size_t u, std::size_t w) { return quotient(u, w); }))
        continue;
      order_.push_back(c);
      flip(c);
      if (extend()) return true;
      flip(c);
      order_.pop_back();
    }
    dead_.insert(placed_);
    return false;
  }

  std::size_t size_;
  std::vector<Quotient> table_;
  const SearchLimits& limits_;
  std::vector<std::uint64_t> placed_;
  std::vector<std::size_t> order_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> dead_;
  std::size_t nodes_ = 0;
};

std::vector<Quotient> squarefree_table(const std::vector<VarSet>& gens) {
  const std::size_t s = gens.size();
  std::vector<Quotient> table(s * s);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t w = 0; w < s; ++w) {
      const VarSet q = gens[w] - gens[u];
      table[u * s + w] = {q, q.size()};
    }
  return table;
}

}  // namespace

std::optional<LinearQuotientsCert> certify_order(const SqfIdeal& ideal, std::span<const VarSet> order) {
  std::vector<VarSet> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  if (sorted != ideal.gens()) throw Error(ErrorCode::InvalidCertificate, "order is not a permutation of G(I)");
  LinearQuotientsCert cert{ideal.ambient(), {order.begin(), order.end()}, {0}};
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto colon = colon_generators(order.subspan(0, i), order[i]);
    if (std::any_of(colon.begin(), colon.end(), [](VarSet v) { return v.size() != 1; })) return std::nullopt;
    cert.r.push_back(static_cast<int>(colon.size()));
  }
  return cert;
}

std::optional<LinearQuotientsCert> find_linear_quotients(const SqfIdeal& ideal, const SearchLimits& limits) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "linear quotients of the zero ideal");
  const auto& gens = ideal.gens();
  OrderSearch search(gens.size(), squarefree_table(gens), limits);
  const auto order = search.run();
  if (!order) return std::nullopt;
  std::vector<VarSet> ordering;
  for (std::size_t i : *order) ordering.push_back(gens[i]);
  return certify_order(ideal, ordering);
}

std::vector<VarSet> lex_order(const SqfIdeal& ideal) {
  std::vector<VarSet> out = ideal.gens();
  std::sort(out.begin(), out.end(), [](VarSet a, VarSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    return diff != 0 && (a.bits() & (diff & (~diff + 1))) != 0;
  });
  return out;
}

int depth_from_linear_quotients(const LinearQuotientsCert& cert) {
  if (cert.ordering.size() < 2)
    throw Error(ErrorCode::SingleGenerator, "depth formula needs at least two generators");
  const int max_r = *std::max_element(cert.r.begin() + 1, cert.r.end());
  return cert.ambient - max_r - 1;
}

bool is_matroidal(const SqfIdeal& ideal) {
  if (!ideal.single_degree()) throw Error(ErrorCode::MixedDegrees, "matroidal check needs a single degree");
  const std::unordered_set<VarSet> gens(ideal.gens().begin(), ideal.gens().end());
  for (VarSet u : ideal.gens())
    for (VarSet v : ideal.gens()) {
      bool ok = true;
      (u - v).for_each([&](int drop) {
        if (!ok) return;
        bool exchanged = false;
        (v - u).for_each([&](int add) { exchanged = exchanged || gens.contains(u.without(drop).with(add)); });
        ok = exchanged;
      });
      if (!ok) return false;
    }
  return true;
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
  const auto degree = [](const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  for (const Exponents& g : ideal.gens)
    if (degree(g) != degree(ideal.gens.front()))
      throw Error(ErrorCode::MixedDegrees, "polymatroidal check needs a single degree");
  const std::set<Exponents> gens(ideal.gens.begin(), ideal.gens.end());
  for (const Exponents& u : ideal.gens)
    for (const Exponents& v : ideal.gens)
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < u.size() && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          Exponents w = u;
          --w[i];
          ++w[j];
          exchanged = gens.contains(w);
        }
        if (!exchanged) return false;
      }
  return true;
}

std::optional<std::vector<Exponents>> find_linear_quotients(const MonomialIdeal& ideal, const SearchLimits& limits) {
  if (ideal.gens.empty()) throw Error(ErrorCode::ZeroIdeal, "linear quotients of the zero ideal");
  if (ideal.ambient > kMaxVars) throw Error(ErrorCode::AmbientMismatch, "at most 64 variables");
  const std::size_t s = ideal.gens.size();
  std::vector<Quotient> table(s * s);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t w = 0; w < s; ++w) {
      Quotient q;
      for (std::size_t x = 0; x < ideal.gens[w].size(); ++x) {
        const int e = ideal.gens[w][x] - ideal.gens[u][x];
        if (e > 0) {
          q.support = q.support.with(static_cast<int>(x) + 1);
          q.degree += e;
        }
      }
      table[u * s + w] = q;
    }
  OrderSearch search(s, std::move(table), limits);
  const auto order = search.run();
  if (!order) return std::nullopt;
  std::vector<Exponents> out;
  for (std::size_t i : *order) out.push_back(ideal.gens[i]);
  return out;
}

PreservationReport squarefree_part_preserves(const MonomialIdeal& ideal, PreservedProperty property,
                                             const SearchLimits& limits) {
  PreservationReport report{property, squarefree_part(ideal), std::nullopt, std::nullopt, false};
  if (property == PreservedProperty::Matroidal) {
    bool holds = false;
    try {
      holds = is_polymatroidal(ideal);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MixedDegrees) throw;
    }
    if (!holds) throw Error(ErrorCode::PropertyNotVerified, "input is not polymatroidal");
    report.output_verified = is_matroidal(report.squarefree_part);
    return report;
  }

  report.input_order = find_linear_quotients(ideal, limits);
  if (!report.input_order) throw Error(ErrorCode::PropertyNotVerified, "input has no linear quotients order");
  if (report.squarefree_part.is_zero()) {
    report.output_verified = true;
    return report;
  }
  // The squarefree generators, kept in the input order, are tested directly.
  std::vector<VarSet> induced;
  for (const Exponents& e : *report.input_order) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x > 1; })) continue;
    VarSet s;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) s = s.with(static_cast<int>(i) + 1);
    induced.push_back(s);
  }
  report.output_cert = certify_order(report.squarefree_part, induced);
  report.output_verified = report.output_cert.has_value();
  return report;
}

std::optional<MindepthWitness> mindepth_criterion(const Graph& g, int k, const LinearQuotientsCert& cert) {
  const SqfIdeal power = squarefree_power(edge_ideal(g), k);
  if (power.is_zero()) throw Error(ErrorCode::OutOfRange, "k exceeds nu(G)");
  if (cert.ambient != g.order()) throw Error(ErrorCode::InvalidCertificate, "ambient differs from |V(G)|");
  const auto replay = certify_order(power, cert.ordering);
  if (!replay || replay->r != cert.r)
    throw Error(ErrorCode::InvalidCertificate, "ordering does not replay to the stated r-vector");

  const auto& order = cert.ordering;
  const std::size_t first = order.size() == 1 ? 0 : 1;
  for (std::size_t i = first; i < order.size(); ++i) {
    const VarSet ui = order[i];
    MindepthWitness witness;
    witness.index = static_cast<int>(i) + 1;
    witness.support = ui;
    bool ok = true;
    (g.vertices() - ui).for_each([&](int t) {
      if (!ok) return;
      const VarSet allowed = ui.with(t);
      std::size_t j = 0;
      while (j < i && !order[j].subset_of(allowed)) ++j;
      if (j == i) {
        ok = false;
        return;
      }
      witness.exchanges.push_back({t, static_cast<int>(j) + 1, perfect_matching_on(g, order[j]).value_or(Matching{})});
    });
    if (!ok) continue;
    witness.matching = perfect_matching_on(g, ui).value_or(Matching{});
    return witness;
  }
  return std::nullopt;
}

}  // namespace sqfpow
