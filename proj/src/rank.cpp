#include "sqfpow/rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "sqfpow/error.hpp"

namespace sqfpow {

Field Field::gf(std::uint32_t p) {
  if (p < 2 || p >= (std::uint32_t{1} << 31)) throw Error(ErrorCode::BadSpec, "prime must lie in 2..2^31-1");
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorCode::BadSpec, std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

std::string Field::name() const { return kind == Kind::Rational ? "Q" : "GF(" + std::to_string(prime) + ")"; }

namespace {

template <class T>
struct Entry {
  std::uint32_t col;
  T value;
};

template <class T>
using Row = std::vector<Entry<T>>;

// -- GF(p) -------------------------------------------------------------------

struct ModP {
  std::uint64_t p;

  std::uint64_t reduce(std::int64_t x) const {
    const std::int64_t m = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
};

std::size_t rank_mod_p(std::vector<SparseRow>& input, std::uint32_t prime, std::size_t columns) {
  const ModP f{prime};
  std::vector<Row<std::uint64_t>> pivots;
  std::vector<int> pivot_of(columns, -1);
  Row<std::uint64_t> scratch;
  for (const SparseRow& in : input) {
    Row<std::uint64_t> row;
    for (const SparseEntry& e : in)
      if (const std::uint64_t v = f.reduce(e.value); v != 0) row.push_back({e.col, v});
    while (!row.empty() && pivot_of[row.front().col] >= 0) {
      const Row<std::uint64_t>& piv = pivots[static_cast<std::size_t>(pivot_of[row.front().col])];
      const std::uint64_t factor = row.front().value;  // pivot rows are monic
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || piv[j].col < row[i].col) {
          scratch.push_back({piv[j].col, (f.p - factor * piv[j].value % f.p) % f.p});
          ++j;
        } else {
          const std::uint64_t v = (row[i].value + f.p - factor * piv[j].value % f.p) % f.p;
          if (v != 0) scratch.push_back({row[i].col, v});
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    const std::uint64_t inv = f.inverse(row.front().value);
    for (auto& e : row) e.value = e.value * inv % f.p;
    pivot_of[row.front().col] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
  }
  return pivots.size();
}

// -- Z (fraction free) ---------------------------------------------------------

struct Overflow {};

struct CheckedInt {
  static std::int64_t mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
    std::int64_t l, r, out;
    if (__builtin_mul_overflow(a, x, &l) || __builtin_mul_overflow(b, y, &r) || __builtin_sub_overflow(l, r, &out))
      throw Overflow{};
    return out;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t x) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, x, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static bool negative(std::int64_t a) { return a < 0; }
  static bool zero(std::int64_t a) { return a == 0; }
  static std::int64_t from(std::int64_t a) { return a; }
};

struct BigInt {
  static mpz_class mul_sub(const mpz_class& a, const mpz_class& x, const mpz_class& b, const mpz_class& y) {
    return a * x - b * y;
  }
  static mpz_class mul(const mpz_class& a, const mpz_class& x) { return a * x; }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool negative(const mpz_class& a) { return sgn(a) < 0; }
  static bool zero(const mpz_class& a) { return sgn(a) == 0; }
  static mpz_class from(std::int64_t a) { return mpz_class(static_cast<long>(a)); }
};

// Divides by the content and makes the leading entry positive.
template <class Ops, class T>
void normalize(Row<T>& row) {
  if (row.empty()) return;
  T g = row.front().value < 0 ? T(-row.front().value) : row.front().value;
  for (const auto& e : row) {
    g = Ops::gcd(g, e.value);
    if (g == 1) break;
  }
  const bool flip = Ops::negative(row.front().value);
  if (g == 1 && !flip) return;
  for (auto& e : row) {
    e.value /= g;
    if (flip) e.value = -e.value;
  }
}

template <class Ops, class T>
std::size_t rank_integer(const std::vector<SparseRow>& input, std::size_t columns) {
  std::vector<Row<T>> pivots;
  std::vector<int> pivot_of(columns, -1);
  Row<T> scratch;
  for (const SparseRow& in : input) {
    Row<T> row;
    for (const SparseEntry& e : in)
      if (e.value != 0) row.push_back({e.col, Ops::from(e.value)});
    normalize<Ops>(row);
    while (!row.empty() && pivot_of[row.front().col] >= 0) {
      const Row<T>& piv = pivots[static_cast<std::size_t>(pivot_of[row.front().col])];
      // row <- a*row - b*piv with a = lead(piv), b = lead(row)
      const T a = piv.front().value;
      const T b = row.front().value;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back({row[i].col, Ops::mul(a, row[i].value)});
          ++i;
        } else if (i == row.size() || piv[j].col < row[i].col) {
          scratch.push_back({piv[j].col, Ops::mul(T(-b), piv[j].value)});
          ++j;
        } else {
          T v = Ops::mul_sub(a, row[i].value, b, piv[j].value);
          if (!Ops::zero(v)) scratch.push_back({row[i].col, std::move(v)});
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      normalize<Ops>(row);
    }
    if (row.empty()) continue;
    pivot_of[row.front().col] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseRow> rows, const Field& field) {
  std::size_t columns = 0;
  for (const SparseRow& r : rows)
    if (!r.empty()) columns = std::max<std::size_t>(columns, r.back().col + 1);
  // Shortest rows first keeps fill-in low (a cheap Markowitz-style choice);
  // ties are broken by leading column so the result is deterministic.
  std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.empty()) return false;
    return a.front().col < b.front().col;
  });
  if (field.kind == Field::Kind::Prime) return rank_mod_p(rows, field.prime, columns);
  try {
    return rank_integer<CheckedInt, std::int64_t>(rows, columns);
  } catch (const Overflow&) {
    return rank_integer<BigInt, mpz_class>(rows, columns);
  }
}

}  // namespace sqfpow
