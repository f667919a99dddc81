#include "oafrac/ring.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "oafrac/errors.hpp"

namespace oafrac {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* p, int* m) {
  if (n < 2) return false;
  int base = n;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  int exp = 0;
  int rest = n;
  while (rest % base == 0) {
    rest /= base;
    exp += 1;
  }
  if (rest != 1) return false;
  if (p) *p = base;
  if (m) *m = exp;
  return true;
}

namespace {

// Default monic moduli, coefficients ascending by degree (Conway polynomials
// for these orders).
const std::map<int, std::vector<int>>& standard_moduli() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}},
      {25, {2, 4, 1}},
      {27, {1, 2, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {49, {3, 6, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {121, {2, 7, 1}},
      {125, {3, 3, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {169, {2, 12, 1}},
      {243, {1, 2, 0, 0, 0, 1}},
      {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
  };
  return table;
}

// Polynomials over GF(p): coefficient vectors ascending by degree, trailing
// zeros trimmed, the zero polynomial empty.
std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<int>(
          (out[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  return poly_trim(std::move(out));
}

// Remainder of a by the monic polynomial mod.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod,
                          int p) {
  a = poly_trim(std::move(a));
  const int md = static_cast<int>(mod.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= md) {
    const int shift = static_cast<int>(a.size()) - 1 - md;
    const long long factor = a.back();
    for (int i = 0; i <= md; ++i) {
      long long v = a[static_cast<size_t>(shift + i)] -
                    factor * mod[static_cast<size_t>(i)] % p;
      a[static_cast<size_t>(shift + i)] = static_cast<int>(((v % p) + p) % p);
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

bool poly_is_irreducible(const std::vector<int>& modulus, int p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m < 1) return false;
  if (modulus.back() == 0) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> divisor(static_cast<size_t>(d) + 1, 0);
      long long rest = code;
      for (int i = 0; i < d; ++i) {
        divisor[static_cast<size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      divisor[static_cast<size_t>(d)] = 1;
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> find_irreducible(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> candidate(static_cast<size_t>(m) + 1, 0);
    long long rest = code;
    for (int i = 0; i < m; ++i) {
      candidate[static_cast<size_t>(i)] = static_cast<int>(rest % p);
      rest /= p;
    }
    candidate[static_cast<size_t>(m)] = 1;
    if (poly_is_irreducible(candidate, p)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> decode_element(int e, int p, int m) {
  std::vector<int> coeffs(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    coeffs[static_cast<size_t>(i)] = e % p;
    e /= p;
  }
  return coeffs;
}

int encode_element(const std::vector<int>& coeffs, int p, int m) {
  int e = 0;
  for (int i = m - 1; i >= 0; --i) {
    const int c =
        i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(i)]
                                            : 0;
    e = e * p + c;
  }
  return e;
}

}  // namespace

Ring Ring::gf(int order) {
  int p = 0;
  int m = 0;
  if (!is_prime_power(order, &p, &m))
    throw DomainError("GF(" + std::to_string(order) +
                      ") requires a prime power order");
  if (m == 1) return gf(p, 1, {0, 1});
  const auto& table = standard_moduli();
  const auto it = table.find(order);
  return gf(p, m, it != table.end() ? it->second : find_irreducible(p, m));
}

Ring Ring::gf(int p, int m, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime");
  if (m < 1) throw DomainError("extension degree must be positive");
  if (static_cast<int>(modulus.size()) != m + 1)
    throw DomainError("modulus degree must equal the extension degree");
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  for (int c : modulus)
    if (c < 0 || c >= p) throw DomainError("modulus coefficient out of range");
  if (m > 1 && !poly_is_irreducible(modulus, p))
    throw DomainError("polynomial is not irreducible over GF(" +
                      std::to_string(p) + ")");
  long long order_ll = 1;
  for (int i = 0; i < m; ++i) {
    order_ll *= p;
    if (order_ll > 4096)
      throw ResourceLimitError("field order too large for table construction");
  }
  const int order = static_cast<int>(order_ll);

  Ring ring;
  ring.order_ = order;
  ring.field_ = true;
  ring.name_ = "GF(" + std::to_string(order) + ")";
  ring.add_.assign(static_cast<size_t>(order) * order, 0);
  ring.mul_.assign(static_cast<size_t>(order) * order, 0);
  ring.neg_.assign(static_cast<size_t>(order), 0);
  for (int a = 0; a < order; ++a) {
    const std::vector<int> ca = decode_element(a, p, m);
    std::vector<int> cneg(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      cneg[static_cast<size_t>(i)] = (p - ca[static_cast<size_t>(i)]) % p;
    ring.neg_[static_cast<size_t>(a)] = encode_element(cneg, p, m);
    for (int b = 0; b < order; ++b) {
      const std::vector<int> cb = decode_element(b, p, m);
      std::vector<int> csum(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i)
        csum[static_cast<size_t>(i)] =
            (ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p;
      ring.add_[static_cast<size_t>(a) * order + b] =
          encode_element(csum, p, m);
      const std::vector<int> prod =
          poly_mod(poly_mul(poly_trim(ca), poly_trim(cb), p), modulus, p);
      ring.mul_[static_cast<size_t>(a) * order + b] =
          encode_element(prod, p, m);
    }
  }
  ring.fill_inverses();
  return ring;
}

Ring Ring::zmod(int n) {
  if (n < 2) throw DomainError("modulus must be at least 2");
  if (n > 4096)
    throw ResourceLimitError("modulus too large for table construction");
  Ring ring;
  ring.order_ = n;
  ring.field_ = is_prime(n);
  ring.name_ = "Z/" + std::to_string(n);
  ring.add_.assign(static_cast<size_t>(n) * n, 0);
  ring.mul_.assign(static_cast<size_t>(n) * n, 0);
  ring.neg_.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    ring.neg_[static_cast<size_t>(a)] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      ring.add_[static_cast<size_t>(a) * n + b] = (a + b) % n;
      ring.mul_[static_cast<size_t>(a) * n + b] =
          static_cast<int>((static_cast<long long>(a) * b) % n);
    }
  }
  ring.fill_inverses();
  return ring;
}

void Ring::fill_inverses() {
  inv_.assign(static_cast<size_t>(order_), -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul_[static_cast<size_t>(a) * order_ + b] == 1) {
        inv_[static_cast<size_t>(a)] = b;
        break;
      }
    }
  }
  if (field_)
    for (int a = 1; a < order_; ++a)
      if (inv_[static_cast<size_t>(a)] < 0)
        throw std::logic_error("field element has no inverse");
}

int Ring::check(int a) const {
  if (a < 0 || a >= order_) throw DomainError("ring element out of range");
  return a;
}

int Ring::inv(int a) const {
  const int r = inv_[static_cast<size_t>(check(a))];
  if (r < 0)
    throw DomainError("element " + std::to_string(a) + " is not a unit in " +
                      name_);
  return r;
}

void LinearSystem::validate() const {
  if (coefficients.empty())
    throw InvalidDesignError("linear system needs at least one equation");
  if (coefficients.size() != rhs.size())
    throw InvalidDesignError(
        "linear system needs one right-hand side per equation");
  const size_t width = coefficients.front().size();
  if (width == 0)
    throw InvalidDesignError("linear system needs at least one unknown");
  for (const auto& row : coefficients) {
    if (row.size() != width)
      throw InvalidDesignError("linear system rows have uneven lengths");
    for (int c : row)
      if (c < 0 || c >= ring.order())
        throw InvalidDesignError("coefficient out of range for " + ring.name());
  }
  for (int r : rhs)
    if (r < 0 || r >= ring.order())
      throw InvalidDesignError("right-hand side out of range for " +
                               ring.name());
}

Fraction solution_set(const LinearSystem& sys) {
  sys.validate();
  const int k = sys.unknowns();
  const int s = sys.ring.order();
  FullFactorial f(std::vector<int>(static_cast<size_t>(k), s));
  std::vector<long long> runs;
  for (long long c = 0; c < f.cell_count(); ++c) {
    const std::vector<int> x = f.cell(c);
    bool ok = true;
    for (size_t e = 0; e < sys.coefficients.size() && ok; ++e) {
      int acc = 0;
      for (int j = 0; j < k; ++j)
        acc = sys.ring.add(
            acc, sys.ring.mul(sys.coefficients[e][static_cast<size_t>(j)],
                              x[static_cast<size_t>(j)]));
      ok = (acc == sys.rhs[e]);
    }
    if (ok) runs.push_back(c);
  }
  if (runs.empty())
    throw InvalidDesignError("inconsistent system (empty solution set)");
  return Fraction(std::move(f), std::move(runs));
}

namespace {

// Reduced row echelon form over a field, zero rows dropped.
std::vector<std::vector<int>> gf_rref(const Ring& field,
                                      std::vector<std::vector<int>> rows) {
  if (!field.is_field()) throw DomainError("row reduction requires a field");
  if (rows.empty()) return rows;
  const int n = static_cast<int>(rows.front().size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("rows have uneven lengths");
  int pivot_rows = 0;
  for (int c = 0; c < n && pivot_rows < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = pivot_rows; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(pivot_rows)],
              rows[static_cast<size_t>(pivot)]);
    auto& prow = rows[static_cast<size_t>(pivot_rows)];
    const int inv = field.inv(prow[static_cast<size_t>(c)]);
    for (int cc = 0; cc < n; ++cc)
      prow[static_cast<size_t>(cc)] =
          field.mul(inv, prow[static_cast<size_t>(cc)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivot_rows) continue;
      auto& row = rows[static_cast<size_t>(r)];
      const int factor = row[static_cast<size_t>(c)];
      if (factor == 0) continue;
      for (int cc = 0; cc < n; ++cc)
        row[static_cast<size_t>(cc)] =
            field.sub(row[static_cast<size_t>(cc)],
                      field.mul(factor, prow[static_cast<size_t>(cc)]));
    }
    pivot_rows += 1;
  }
  rows.resize(static_cast<size_t>(pivot_rows));
  return rows;
}

}  // namespace

std::vector<std::vector<int>> gf_row_basis(const Ring& field,
                                           std::vector<std::vector<int>> rows) {
  return gf_rref(field, std::move(rows));
}

int gf_rank(const Ring& field, std::vector<std::vector<int>> rows) {
  return static_cast<int>(gf_rref(field, std::move(rows)).size());
}

std::vector<std::vector<int>> gf_nullspace(
    const Ring& field, const std::vector<std::vector<int>>& rows,
    int unknowns) {
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != unknowns)
      throw DomainError("rows have uneven lengths");
  const std::vector<std::vector<int>> red = gf_rref(field, rows);
  std::vector<int> pivot_col(red.size());
  std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
  for (size_t i = 0; i < red.size(); ++i) {
    int c = 0;
    while (c < unknowns && red[i][static_cast<size_t>(c)] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[static_cast<size_t>(c)] = true;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<int> v(static_cast<size_t>(unknowns), 0);
    v[static_cast<size_t>(free)] = 1;
    for (size_t i = 0; i < red.size(); ++i)
      v[static_cast<size_t>(pivot_col[i])] =
          field.neg(red[i][static_cast<size_t>(free)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSystem> detect_regular(const Fraction& f) {
  const FullFactorial& parent = f.parent();
  if (!parent.symmetric()) return std::nullopt;
  const int s = parent.level_count(1);
  const int k = parent.factor_count();
  if (!is_prime_power(s)) return std::nullopt;

  // The run count of a coset of a GF(s)-subspace is a power of s.
  long long n = f.run_count();
  int log_n = 0;
  while (n % s == 0) {
    n /= s;
    log_n += 1;
  }
  if (n != 1) return std::nullopt;

  const Ring field = Ring::gf(s);
  const std::vector<int> x0 = f.run_levels(0);

  // Translate so the fraction contains the origin; regularity means the
  // translate is a GF(s)-subspace of the right size containing every run.
  std::vector<std::vector<int>> translated;
  translated.reserve(static_cast<size_t>(f.run_count()));
  for (long long i = 0; i < f.run_count(); ++i) {
    const std::vector<int> x = f.run_levels(i);
    std::vector<int> d(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
      d[static_cast<size_t>(j)] =
          field.sub(x[static_cast<size_t>(j)], x0[static_cast<size_t>(j)]);
    translated.push_back(std::move(d));
  }
  const std::vector<std::vector<int>> basis = gf_row_basis(field, translated);
  if (static_cast<int>(basis.size()) != log_n) return std::nullopt;
  {
    std::vector<std::vector<int>> stacked = basis;
    for (const auto& d : translated) {
      stacked.push_back(d);
      if (gf_rank(field, stacked) != static_cast<int>(basis.size()))
        return std::nullopt;
      stacked.pop_back();
    }
  }

  LinearSystem sys{field, {}, {}};
  if (static_cast<int>(basis.size()) == k) {
    // Full factorial: the single trivial equation 0 = 0.
    sys.coefficients.push_back(std::vector<int>(static_cast<size_t>(k), 0));
    sys.rhs.push_back(0);
  } else {
    sys.coefficients = gf_nullspace(field, basis, k);
    for (const auto& row : sys.coefficients) {
      int acc = 0;
      for (int j = 0; j < k; ++j)
        acc = field.add(acc, field.mul(row[static_cast<size_t>(j)],
                                       x0[static_cast<size_t>(j)]));
      sys.rhs.push_back(acc);
    }
  }
  if (!(solution_set(sys) == f))
    throw std::logic_error("recovered defining equations disagree with runs");
  return sys;
}

}  // namespace oafrac
