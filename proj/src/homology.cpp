#include "sqfpow/homology.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "sqfpow/error.hpp"

namespace sqfpow {

bool HomologyVector::acyclic() const {
  return std::all_of(dims.begin(), dims.end(), [](std::uint64_t d) { return d == 0; });
}

namespace {

// Faces grouped by cardinality, each group sorted by bit pattern.
using FacesBySize = std::vector<std::vector<VarSet>>;

std::size_t face_index(const std::vector<VarSet>& sorted, VarSet face) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), face) - sorted.begin());
}

// Rank of the boundary from faces of size s to faces of size s-1.
std::size_t boundary_rank(const FacesBySize& faces, int s, const Field& field) {
  if (s < 1 || s >= static_cast<int>(faces.size())) return 0;
  const auto& rows_faces = faces[static_cast<std::size_t>(s)];
  const auto& cols_faces = faces[static_cast<std::size_t>(s - 1)];
  if (rows_faces.empty() || cols_faces.empty()) return 0;
  std::vector<SparseRow> rows;
  rows.reserve(rows_faces.size());
  for (VarSet f : rows_faces) {
    SparseRow row;
    int position = 0;
    f.for_each([&](int v) {
      const auto col = static_cast<std::uint32_t>(face_index(cols_faces, f.without(v)));
      row.push_back({col, (position % 2 == 0) ? 1 : -1});
      ++position;
    });
    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows), field);
}

// dim H~_r for r in [low, high]; `faces` must hold every face of size <= high + 2.
std::vector<std::uint64_t> homology_window(FacesBySize& faces, int low, int high, const Field& field) {
  for (auto& group : faces) std::sort(group.begin(), group.end());
  auto count = [&](int s) -> std::uint64_t {
    return s < 0 || s >= static_cast<int>(faces.size()) ? 0 : faces[static_cast<std::size_t>(s)].size();
  };
  std::vector<std::uint64_t> out;
  std::size_t next_rank = boundary_rank(faces, low + 1, field);
  for (int r = low; r <= high; ++r) {
    const std::size_t incoming = next_rank;  // rank of boundary out of size r+1
    next_rank = boundary_rank(faces, r + 2, field);
    out.push_back(count(r + 1) - incoming - next_rank);
  }
  return out;
}

struct InducedFaces {
  VarSet w;
  std::vector<std::vector<VarSet>> gens_with;  // generators inside W containing v
  int max_size;
  std::size_t budget;
  std::size_t total = 0;
  FacesBySize faces;

  void grow(VarSet face, int last) {
    faces[static_cast<std::size_t>(face.size())].push_back(face);
    if (++total > budget)
      throw Error(ErrorCode::FaceBudgetExceeded,
                  "induced subcomplex on " + w.to_string() + " exceeds " + std::to_string(budget) + " faces");
    if (face.size() == max_size) return;
    const VarSet candidates = w - VarSet::range(last);
    candidates.for_each([&](int v) {
      const VarSet next = face.with(v);
      for (VarSet g : gens_with[static_cast<std::size_t>(v)])
        if (g.subset_of(next)) return;
      grow(next, v);
    });
  }
};

// Nonzero homology of Delta_W requires W to be a union of generators:
// otherwise a vertex of W lies in no minimal nonface and Delta_W is a cone.
bool is_generator_union(const SqfIdeal& ideal, VarSet w) {
  VarSet covered;
  for (VarSet g : ideal.gens())
    if (g.subset_of(w)) covered |= g;
  return covered == w;
}

void check_budget(const SqfIdeal& ideal, const HochsterOptions& options) {
  if (ideal.ambient() > options.max_ambient)
    throw Error(ErrorCode::BudgetExceeded, "ambient " + std::to_string(ideal.ambient()) + " exceeds budget " +
                                               std::to_string(options.max_ambient) + " (raise with --budget)");
  if (ideal.ambient() > 40) throw Error(ErrorCode::BudgetExceeded, "subset enumeration limited to 40 variables");
}

// Adds the contribution of one W to `table`.
void accumulate(const SqfIdeal& ideal, VarSet w, const Field& field, std::size_t budget, BettiTable& table) {
  if (!is_generator_union(ideal, w)) return;
  const int j = w.size();
  const auto dims = induced_homology(ideal, w, -1, j - 1, field, budget);
  for (int r = -1; r <= j - 1; ++r)
    if (const auto d = dims[static_cast<std::size_t>(r + 1)]; d != 0) table.add(j - r - 1, j, d);
}

// Largest i = j - r - 1 with H~_r(Delta_W) != 0 that beats `floor`, or `floor`.
int best_index(const SqfIdeal& ideal, VarSet w, int floor, const Field& field, std::size_t budget) {
  if (!is_generator_union(ideal, w)) return floor;
  const int j = w.size();
  // beta_{i,j} = 0 for j < d_1 + i - 1 gives r >= d_1 - 2.
  const int low = std::max(-1, ideal.min_degree() - 2);
  const int high = j - floor - 2;
  if (high < low) return floor;
  const auto dims = induced_homology(ideal, w, low, high, field, budget);
  for (int r = low; r <= high; ++r)
    if (dims[static_cast<std::size_t>(r - low)] != 0) return j - r - 1;
  return floor;
}

std::vector<std::vector<VarSet>> subsets_by_size(int n) {
  std::vector<std::vector<VarSet>> out(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    out[static_cast<std::size_t>(std::popcount(bits))].emplace_back(bits);
  return out;
}

}  // namespace

std::vector<std::uint64_t> induced_homology(const SqfIdeal& ideal, VarSet w, int low, int high, const Field& field,
                                            std::size_t face_budget) {
  if (high < low) return {};
  InducedFaces walk{w, std::vector<std::vector<VarSet>>(kMaxVars + 1), std::min(high + 2, w.size()), face_budget, 0,
                    FacesBySize(static_cast<std::size_t>(std::max(high + 3, 1)))};
  for (VarSet g : ideal.gens())
    if (g.subset_of(w)) g.for_each([&](int v) { walk.gens_with[static_cast<std::size_t>(v)].push_back(g); });
  walk.grow(VarSet{}, 0);
  return homology_window(walk.faces, low, high, field);
}

HomologyVector reduced_homology(const SimplicialComplex& complex, const Field& field, std::size_t face_budget) {
  HomologyVector out{{}, field};
  if (complex.is_void()) return out;
  const int dim = complex.dimension();
  FacesBySize faces(static_cast<std::size_t>(dim) + 2);
  for (VarSet f : complex.faces(face_budget)) faces[static_cast<std::size_t>(f.size())].push_back(f);
  out.dims = homology_window(faces, -1, dim, field);
  return out;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value != 0) entries_[{i, j}] += value;
}

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projdim() const {
  int p = 0;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, value] : entries_)
    if (key.first >= 1) reg = std::max(reg, key.second - key.first);
  return reg;
}

BettiTable hochster_betti_serial(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  check_budget(ideal, options);
  BettiTable table;
  const std::uint64_t total = std::uint64_t{1} << ideal.ambient();
  for (std::uint64_t bits = 0; bits < total; ++bits) accumulate(ideal, VarSet{bits}, field, options.face_budget, table);
  return table;
}

BettiTable hochster_betti(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  check_budget(ideal, options);
  BettiTable table;
  const auto total = static_cast<long long>(std::uint64_t{1} << ideal.ambient());
  std::exception_ptr failure;
  std::mutex merge;
#pragma omp parallel
  {
    BettiTable local;
#pragma omp for schedule(dynamic, 64)
    for (long long bits = 0; bits < total; ++bits) {
      try {
        accumulate(ideal, VarSet{static_cast<std::uint64_t>(bits)}, field, options.face_budget, local);
      } catch (...) {
        const std::lock_guard lock(merge);
        if (!failure) failure = std::current_exception();
      }
    }
    // Integer sums: the merge order cannot change the table.
    const std::lock_guard lock(merge);
    for (const auto& [key, value] : local.entries()) table.add(key.first, key.second, value);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

namespace {

template <bool Parallel>
int depth_impl(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "depth of S/0 is not computed here");
  check_budget(ideal, options);
  const int n = ideal.ambient();
  const int d1 = ideal.min_degree();
  const auto levels = subsets_by_size(n);
  int projdim = 1;  // beta_{1,d} != 0 for every nonzero ideal
  for (int j = n; j >= 0; --j) {
    if (j - d1 + 1 <= projdim) break;
    const auto& level = levels[static_cast<std::size_t>(j)];
    const int floor = projdim;
    int best = floor;
    if constexpr (Parallel) {
      std::exception_ptr failure;
      std::mutex guard;
      const auto count = static_cast<long long>(level.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
      for (long long idx = 0; idx < count; ++idx) {
        try {
          best = std::max(best, best_index(ideal, level[static_cast<std::size_t>(idx)], floor, field,
                                           options.face_budget));
        } catch (...) {
          const std::lock_guard lock(guard);
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    } else {
      for (VarSet w : level) best = std::max(best, best_index(ideal, w, best, field, options.face_budget));
    }
    projdim = best;
  }
  return n - projdim;
}

}  // namespace

int depth(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  return depth_impl<true>(ideal, field, options);
}

int depth_serial(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  return depth_impl<false>(ideal, field, options);
}

bool top_betti_mindepth(const Graph& g, int k, const Field& field, const HochsterOptions& options) {
  const int top = matching_number(g);
  if (k < 1 || k > top)
    throw Error(ErrorCode::OutOfRange, "need 1 <= k <= nu(G) = " + std::to_string(top));
  if (!g.isolated_vertices().empty())
    throw Error(ErrorCode::PreconditionViolated, "graph has isolated vertices " + g.isolated_vertices().to_string());
  const SqfIdeal power = squarefree_power(edge_ideal(g), k);
  const auto dims = induced_homology(power, g.vertices(), 2 * k - 2, 2 * k - 2, field, options.face_budget);
  return dims.front() != 0;
}

SqfIdeal alexander_dual(const SqfIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "Alexander dual of the zero ideal");
  return SqfIdeal::minimalize(minimal_transversals(ideal.gens()), ideal.ambient());
}

int projdim_via_dual(const SqfIdeal& ideal, const Field& field, const HochsterOptions& options) {
  // Terai: projdim(S/I) = reg(I^vee), and reg(I^vee) = reg(S/I^vee) + 1.
  return hochster_betti(alexander_dual(ideal), field, options).regularity() + 1;
}

}  // namespace sqfpow
