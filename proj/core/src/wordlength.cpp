#include "oafrac/wordlength.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "oafrac/errors.hpp"
#include "oafrac/ring.hpp"

namespace oafrac {

GwlpVector gwlp_characters(const Fraction& f, double tol,
                           double* max_residual) {
  const FullFactorial& parent = f.parent();
  const int k = parent.factor_count();
  const long long n = f.run_count();

  // Root-of-unity tables, one cyclic group per factor.
  std::vector<std::vector<std::complex<double>>> omega(
      static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    const int s = parent.level_count(j + 1);
    omega[static_cast<size_t>(j)].resize(static_cast<size_t>(s));
    for (int r = 0; r < s; ++r)
      omega[static_cast<size_t>(j)][static_cast<size_t>(r)] =
          std::polar(1.0, 2.0 * std::numbers::pi * r / s);
  }

  std::vector<std::vector<int>> runs;
  runs.reserve(static_cast<size_t>(n));
  for (long long r = 0; r < n; ++r) runs.push_back(f.run_levels(r));

  // One character sum per cell of the parent, accumulated by weight class.
  std::vector<std::complex<double>> acc(static_cast<size_t>(k) + 1,
                                        {0.0, 0.0});
  for (long long uc = 0; uc < parent.cell_count(); ++uc) {
    const std::vector<int> u = parent.cell(uc);
    int weight = 0;
    for (int uj : u)
      if (uj != 0) weight += 1;
    std::complex<double> sum{0.0, 0.0};
    for (const std::vector<int>& x : runs) {
      std::complex<double> prod{1.0, 0.0};
      for (int j = 0; j < k; ++j) {
        const int s = parent.level_count(j + 1);
        const int e = (u[static_cast<size_t>(j)] * x[static_cast<size_t>(j)]) %
                      s;
        prod *= omega[static_cast<size_t>(j)][static_cast<size_t>(e)];
      }
      sum += prod;
    }
    acc[static_cast<size_t>(weight)] += sum * std::conj(sum);
  }

  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const long long n2_ll = n * n;
  double worst = 0.0;
  GwlpVector g;
  g.a.resize(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    const std::complex<double>& total = acc[static_cast<size_t>(i)];
    const double value = total.real() / n2;
    if (std::abs(total.imag() / n2) > tol)
      throw NumericError("character sums left an imaginary residue at weight " +
                         std::to_string(i));
    if (value < -tol)
      throw NumericError("character sums went negative at weight " +
                         std::to_string(i));
    const Rational r = reconstruct_rational(value, n2_ll, tol);
    if (r < 0)
      throw NumericError("wordlength entry reconstructed negative at weight " +
                         std::to_string(i));
    const double residual = std::fabs(value - r.get_d());
    if (residual > worst) worst = residual;
    g.a[static_cast<size_t>(i)] = r;
  }
  if (max_residual) *max_residual = worst;
  if (g.a[0] != 1)
    throw std::logic_error("weight-zero wordlength entry is not 1");
  return g;
}

DistanceDistribution distance_distribution(const Fraction& f) {
  const FullFactorial& parent = f.parent();
  if (!parent.symmetric())
    throw DomainError("distance distribution requires a symmetric design");
  const int k = parent.factor_count();
  const long long n = f.run_count();
  std::vector<std::vector<int>> runs;
  runs.reserve(static_cast<size_t>(n));
  for (long long r = 0; r < n; ++r) runs.push_back(f.run_levels(r));
  std::vector<long long> counts(static_cast<size_t>(k) + 1, 0);
  for (const std::vector<int>& x : runs)
    for (const std::vector<int>& y : runs) {
      int d = 0;
      for (int j = 0; j < k; ++j)
        if (x[static_cast<size_t>(j)] != y[static_cast<size_t>(j)]) d += 1;
      counts[static_cast<size_t>(d)] += 1;
    }
  DistanceDistribution dd;
  dd.b.resize(static_cast<size_t>(k) + 1);
  for (int d = 0; d <= k; ++d)
    dd.b[static_cast<size_t>(d)] =
        make_rational(counts[static_cast<size_t>(d)], n);
  return dd;
}

Rational krawtchouk(int i, int d, int k, int s) {
  if (k < 1 || i < 0 || i > k || d < 0 || d > k)
    throw DomainError("krawtchouk arguments out of range");
  if (s < 2) throw DomainError("level count must be at least 2");
  mpz_class sum = 0;
  for (int r = 0; r <= i; ++r) {
    if (r > d || i - r > k - d) continue;
    mpz_class term, second, power;
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(r));
    mpz_bin_uiui(second.get_mpz_t(), static_cast<unsigned long>(k - d),
                 static_cast<unsigned long>(i - r));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(s - 1),
                  static_cast<unsigned long>(i - r));
    term *= second;
    term *= power;
    if (r % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return Rational(sum);
}

GwlpVector gwlp_krawtchouk(const Fraction& f) {
  const DistanceDistribution dd = distance_distribution(f);
  const int k = f.parent().factor_count();
  const int s = f.parent().level_count(1);
  const long long n = f.run_count();
  GwlpVector g;
  g.a.resize(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Rational sum = 0;
    for (int d = 0; d <= k; ++d)
      sum += krawtchouk(i, d, k, s) * dd.b[static_cast<size_t>(d)];
    g.a[static_cast<size_t>(i)] = sum / make_rational(n);
  }
  return g;
}

GwlpVector regular_wlp(const Fraction& f) {
  const std::optional<LinearSystem> sys = detect_regular(f);
  if (!sys)
    throw DomainError(
        "the classical wordlength pattern requires a regular fraction");
  const Ring& field = sys->ring;
  const int k = f.parent().factor_count();
  const int s = field.order();
  const std::vector<std::vector<int>> basis =
      gf_row_basis(field, sys->coefficients);
  const int q = static_cast<int>(basis.size());
  long long count = 1;
  for (int i = 0; i < q; ++i) count *= s;
  GwlpVector g;
  g.a.assign(static_cast<size_t>(k) + 1, Rational(0));
  g.a[0] = 1;
  for (long long code = 1; code < count; ++code) {
    std::vector<int> word(static_cast<size_t>(k), 0);
    long long rest = code;
    for (int i = 0; i < q; ++i) {
      const int coeff = static_cast<int>(rest % s);
      rest /= s;
      if (coeff == 0) continue;
      for (int j = 0; j < k; ++j)
        word[static_cast<size_t>(j)] = field.add(
            word[static_cast<size_t>(j)],
            field.mul(coeff, basis[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
    int weight = 0;
    for (int w : word)
      if (w != 0) weight += 1;
    g.a[static_cast<size_t>(weight)] += 1;
  }
  return g;
}

int min_positive_index(const GwlpVector& g) {
  for (int i = 1; i <= g.k(); ++i)
    if (g.a[static_cast<size_t>(i)] > 0) return i;
  return g.k() + 1;
}

}  // namespace oafrac
