#include "oafrac/verify.hpp"

#include <stdexcept>
#include <vector>

#include "oafrac/errors.hpp"
#include "oafrac/linalg.hpp"
#include "oafrac/partition.hpp"

namespace oafrac {

namespace {

// Orthogonal projection of x onto the subspace, via the Gram system of the
// basis.
std::vector<Rational> project_onto(const Subspace& space,
                                   const std::vector<Rational>& x) {
  std::vector<Rational> out(static_cast<size_t>(space.ambient_dim()),
                            Rational(0));
  if (space.dim() == 0) return out;
  RationalMatrix gram(space.dim(), space.dim());
  std::vector<Rational> rhs(static_cast<size_t>(space.dim()));
  const std::span<const Rational> xs{x.data(), x.size()};
  for (int a = 0; a < space.dim(); ++a) {
    for (int b = 0; b < space.dim(); ++b)
      gram.at(a, b) = inner(space.basis_vector(a), space.basis_vector(b));
    rhs[static_cast<size_t>(a)] = inner(space.basis_vector(a), xs);
  }
  const std::vector<Rational> coeffs = solve_linear(gram, rhs);
  for (int a = 0; a < space.dim(); ++a) {
    if (coeffs[static_cast<size_t>(a)] == 0) continue;
    const auto bv = space.basis_vector(a);
    for (int c = 0; c < space.ambient_dim(); ++c)
      out[static_cast<size_t>(c)] +=
          coeffs[static_cast<size_t>(a)] * bv[static_cast<size_t>(c)];
  }
  return out;
}

}  // namespace

AliasWitness alias_witness(const Fraction& f, bool deep) {
  const StrengthReport strength = strength_by_independence(f);
  if (!strength.witness)
    throw DomainError("a full factorial admits no aliasing witness");
  const FullFactorial& parent = f.parent();
  const long long total = parent.cell_count();
  const long long n = f.run_count();

  AliasWitness w;
  w.K = strength.witness->factors;
  w.block_levels = strength.witness->block_levels;
  w.I = {w.K.front()};
  w.J = std::vector<int>(w.K.begin() + 1, w.K.end());

  // Membership of every cell in the two blocks through the failing block B:
  // B' fixes the first factor of K, B'' the rest (all of T when J is empty).
  std::vector<char> in_bp(static_cast<size_t>(total), 0);
  std::vector<char> in_bpp(static_cast<size_t>(total), 0);
  long long size_b = 0, size_bp = 0, size_bpp = 0, size_b_in_s = 0;
  for (long long c = 0; c < total; ++c) {
    const std::vector<int> cell = parent.cell(c);
    const bool bp =
        cell[static_cast<size_t>(w.K.front() - 1)] == w.block_levels.front();
    bool bpp = true;
    for (size_t j = 1; j < w.K.size() && bpp; ++j)
      bpp = cell[static_cast<size_t>(w.K[j] - 1)] == w.block_levels[j];
    in_bp[static_cast<size_t>(c)] = bp ? 1 : 0;
    in_bpp[static_cast<size_t>(c)] = bpp ? 1 : 0;
    size_bp += bp ? 1 : 0;
    size_bpp += bpp ? 1 : 0;
    if (bp && bpp) {
      size_b += 1;
      if (f.contains(c)) size_b_in_s += 1;
    }
  }

  const Rational pi_bp = make_rational(size_bp, total);
  const Rational pi_bpp = make_rational(size_bpp, total);

  Rational direct = 0;
  for (long long r : f.runs()) {
    const Rational uval =
        Rational(in_bp[static_cast<size_t>(r)] ? 1 : 0) - pi_bp;
    const Rational vval =
        w.J.empty()
            ? Rational(1)
            : Rational(in_bpp[static_cast<size_t>(r)] ? 1 : 0) - pi_bpp;
    direct += uval * vval;
  }
  // |T| (pi(B ∩ S) - pi(B) pi(S)) = |B ∩ S| - |B| N / |T|.
  const Rational closed =
      make_rational(size_b_in_s) - make_rational(size_b * n, total);
  if (direct != closed)
    throw std::logic_error("witness inner product disagrees with its closed form");
  if (direct == 0)
    throw std::logic_error("witness inner product vanished");
  w.value = direct;

  if (deep) {
    EffectLattice lattice(parent);
    const Subspace& ui = lattice.space_for(w.I);
    const Subspace& uj = lattice.space_for(w.J);
    std::vector<Rational> u(static_cast<size_t>(total));
    std::vector<Rational> v(static_cast<size_t>(total));
    for (long long c = 0; c < total; ++c) {
      u[static_cast<size_t>(c)] =
          Rational(in_bp[static_cast<size_t>(c)] ? 1 : 0) - pi_bp;
      v[static_cast<size_t>(c)] =
          w.J.empty()
              ? Rational(1)
              : Rational(in_bpp[static_cast<size_t>(c)] ? 1 : 0) - pi_bpp;
    }
    const std::vector<Rational> uhat = project_onto(ui, u);
    const std::vector<Rational> vhat = project_onto(uj, v);
    Rational projected = 0;
    for (long long r : f.runs())
      projected +=
          uhat[static_cast<size_t>(r)] * vhat[static_cast<size_t>(r)];
    if (projected != direct)
      throw std::logic_error(
          "projected witness inner product disagrees with the direct value");
  }
  return w;
}

VerificationReport verify_identities(const Fraction& f, ResourceGuard guard) {
  guard.check(f.parent());
  VerificationReport report;
  report.strength = strength_by_independence(f);
  report.t_max = report.strength.t_max;
  AliasAnalyzer analyzer(f, guard);
  report.r_max = analyzer.resolution_max();
  report.gwlp = gwlp_characters(f);
  report.min_gwlp_index = min_positive_index(report.gwlp);
  report.identity_holds = report.r_max == report.t_max + 1 &&
                          report.min_gwlp_index == report.t_max + 1;
  if (report.t_max < f.parent().factor_count()) report.witness = alias_witness(f);
  return report;
}

}  // namespace oafrac
