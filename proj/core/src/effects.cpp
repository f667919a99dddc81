#include "oafrac/effects.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "oafrac/errors.hpp"

namespace oafrac {

namespace {

std::vector<int> normalize_factors(const FullFactorial& f, std::vector<int> I,
                                   bool allow_empty) {
  if (I.empty()) {
    if (!allow_empty) throw DomainError("factor subset must be nonempty");
    return I;
  }
  std::sort(I.begin(), I.end());
  for (size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 1 || I[i] > f.factor_count())
      throw DomainError("factor index out of range");
    if (i > 0 && I[i] == I[i - 1])
      throw DomainError("factor subset has a repeated index");
  }
  return I;
}

}  // namespace

Subspace contrast_space(const Partition& p) {
  const int n = static_cast<int>(p.parent().cell_count());
  RationalMatrix rows(0, n);
  for (int b = 1; b < p.block_count(); ++b) {
    const Rational mass = make_rational(p.block_size(b), n);
    std::vector<Rational> v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      v[static_cast<size_t>(c)] = Rational(p.block_of(c) == b ? 1 : 0) - mass;
    rows.append_row(v);
  }
  return Subspace::span_of(n, std::move(rows));
}

EffectLattice::EffectLattice(FullFactorial f) : fact_(std::move(f)) {}

const Subspace& EffectLattice::space_for(const std::vector<int>& factors) {
  std::vector<int> I = normalize_factors(fact_, factors, true);
  if (auto it = cache_.find(I); it != cache_.end()) return it->second;
  const int n = static_cast<int>(fact_.cell_count());
  if (I.empty()) {
    RationalMatrix ones(1, n);
    for (int c = 0; c < n; ++c) ones.at(0, c) = 1;
    return cache_.emplace(std::move(I), Subspace::span_of(n, std::move(ones)))
        .first->second;
  }
  const Subspace amb = contrast_space(blocking_for(fact_, I));
  RationalMatrix lower(0, n);
  const int m = static_cast<int>(I.size());
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> J;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) J.push_back(I[static_cast<size_t>(b)]);
    const Subspace& uj = space_for(J);
    for (int r = 0; r < uj.dim(); ++r) lower.append_row(uj.basis_vector(r));
  }
  Subspace ui = complement_within(amb, Subspace::span_of(n, std::move(lower)));
  long long expected = 1;
  for (int i : I) expected *= fact_.level_count(i) - 1;
  if (ui.dim() != expected)
    throw std::logic_error("interaction space has unexpected dimension");
  return cache_.emplace(std::move(I), std::move(ui)).first->second;
}

Subspace interaction_space(const FullFactorial& f,
                           const std::vector<int>& factors) {
  EffectLattice lattice(f);
  return lattice.space_for(factors);
}

Subspace restrict_space(const Subspace& space, const Fraction& f) {
  if (space.ambient_dim() != f.parent().cell_count())
    throw DomainError("space is not over the fraction's full factorial");
  const int n = static_cast<int>(f.run_count());
  RationalMatrix rows(0, n);
  for (int r = 0; r < space.dim(); ++r) {
    const auto bv = space.basis_vector(r);
    std::vector<Rational> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] =
          bv[static_cast<size_t>(f.runs()[static_cast<size_t>(i)])];
    rows.append_row(v);
  }
  return Subspace::span_of(n, std::move(rows));
}

Aliasing classify_alias(const Subspace& restricted_a,
                        const Subspace& restricted_b) {
  switch (relate(restricted_a, restricted_b).relation) {
    case SpaceRelation::Equal:
      return Aliasing::Complete;
    case SpaceRelation::Orthogonal:
      return Aliasing::Unaliased;
    case SpaceRelation::Neither:
      return Aliasing::Partial;
  }
  throw std::logic_error("unhandled space relation");
}

AliasAnalyzer::AliasAnalyzer(Fraction f, ResourceGuard guard)
    : frac_(std::move(f)), lattice_(frac_.parent()) {
  guard.check(frac_.parent());
}

const Subspace& AliasAnalyzer::restricted(const std::vector<int>& factors) {
  std::vector<int> I = normalize_factors(frac_.parent(), factors, true);
  if (auto it = restricted_.find(I); it != restricted_.end()) return it->second;
  const Subspace& full = lattice_.space_for(I);
  return restricted_.emplace(std::move(I), restrict_space(full, frac_))
      .first->second;
}

Aliasing AliasAnalyzer::classify(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  return classify_alias(restricted(a), restricted(b));
}

int AliasAnalyzer::resolution_max() {
  const int k = frac_.parent().factor_count();
  if (frac_.is_full()) return k + 1;
  // Ascending |I| + |J| over unordered distinct pairs, the empty subset
  // included, so the first hit is the minimum.
  for (int total = 1; total <= 2 * k; ++total) {
    for (int pa = 0; pa <= total / 2; ++pa) {
      const int qa = total - pa;
      if (qa > k) continue;
      for (const std::vector<int>& I : subsets_of_size(k, pa)) {
        for (const std::vector<int>& J : subsets_of_size(k, qa)) {
          if (pa == qa && !(I < J)) continue;
          if (classify(I, J) != Aliasing::Unaliased) return total;
        }
      }
    }
  }
  throw std::logic_error("proper fraction with no aliased pair");
}

AliasReport AliasAnalyzer::alias_table(int max_order) {
  if (max_order < 0) throw DomainError("max order must be nonnegative");
  const int k = frac_.parent().factor_count();
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size <= std::min(max_order, k); ++size)
    for (std::vector<int>& I : subsets_of_size(k, size))
      subsets.push_back(std::move(I));
  AliasReport report;
  report.max_order = max_order;
  for (size_t i = 0; i < subsets.size(); ++i)
    for (size_t j = i + 1; j < subsets.size(); ++j)
      report.pairs.push_back(
          {subsets[i], subsets[j], classify(subsets[i], subsets[j])});
  report.r_max = resolution_max();
  return report;
}

int resolution_max(const Fraction& f, ResourceGuard guard) {
  AliasAnalyzer analyzer(f, guard);
  return analyzer.resolution_max();
}

AliasReport alias_table(const Fraction& f, int max_order, ResourceGuard guard) {
  AliasAnalyzer analyzer(f, guard);
  return analyzer.alias_table(max_order);
}

int Pencil::weight() const {
  int w = 0;
  for (int c : coefficients)
    if (c != 0) w += 1;
  return w;
}

std::string Pencil::label() const {
  const int k = static_cast<int>(coefficients.size());
  std::string out;
  for (int j = 0; j < k; ++j) {
    const int c = coefficients[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (k <= 26) {
      out += static_cast<char>('A' + j);
    } else {
      if (!out.empty()) out += '*';
      out += "x" + std::to_string(j + 1);
    }
    if (c >= 2) out += "^" + std::to_string(c);
  }
  return out;
}

std::vector<Pencil> enumerate_pencils(const Ring& field, int k) {
  if (!field.is_field()) throw DomainError("pencils are defined over a field");
  if (k < 1) throw DomainError("pencils need at least one factor");
  const int s = field.order();
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= s;
    if (count > (1LL << 31))
      throw ResourceLimitError("too many coefficient vectors to enumerate");
  }
  std::vector<Pencil> pencils;
  for (long long code = 1; code < count; ++code) {
    std::vector<int> c(static_cast<size_t>(k));
    long long rest = code;
    for (int j = k - 1; j >= 0; --j) {
      c[static_cast<size_t>(j)] = static_cast<int>(rest % s);
      rest /= s;
    }
    size_t first = 0;
    while (c[first] == 0) ++first;
    if (c[first] != 1) continue;
    pencils.push_back(Pencil{std::move(c)});
  }
  return pencils;
}

Partition pencil_blocking(const FullFactorial& f, const Ring& field,
                          const Pencil& p) {
  if (!field.is_field()) throw DomainError("pencil blocking requires a field");
  const int k = f.factor_count();
  if (static_cast<int>(p.coefficients.size()) != k)
    throw DomainError("pencil length does not match the factor count");
  for (int i = 1; i <= k; ++i)
    if (f.level_count(i) != field.order())
      throw DomainError("every factor must run at the field order");
  if (p.weight() == 0) throw DomainError("pencil must be nonzero");
  std::vector<int> labels(static_cast<size_t>(f.cell_count()));
  for (long long c = 0; c < f.cell_count(); ++c) {
    const std::vector<int> cell = f.cell(c);
    int acc = 0;
    for (int j = 0; j < k; ++j)
      acc = field.add(acc, field.mul(p.coefficients[static_cast<size_t>(j)],
                                     cell[static_cast<size_t>(j)]));
    labels[static_cast<size_t>(c)] = acc;
  }
  return Partition(f, labels);
}

std::vector<std::pair<Pencil, Subspace>> pencil_spaces(const Fraction& f) {
  const std::optional<LinearSystem> sys = detect_regular(f);
  if (!sys) throw DomainError("pencil analysis requires a regular fraction");
  const Ring& field = sys->ring;
  const int k = f.parent().factor_count();
  std::vector<std::pair<Pencil, Subspace>> out;
  for (Pencil& p : enumerate_pencils(field, k)) {
    Subspace space = contrast_space(pencil_blocking(f.parent(), field, p));
    out.emplace_back(std::move(p), std::move(space));
  }
  return out;
}

PencilClasses pencil_alias_classes(const Fraction& f) {
  std::vector<std::pair<Pencil, Subspace>> spaces = pencil_spaces(f);
  const int s = f.parent().level_count(1);
  const int n = static_cast<int>(f.run_count());
  RationalMatrix ones(1, n);
  for (int c = 0; c < n; ++c) ones.at(0, c) = 1;
  const Subspace ones_space = Subspace::span_of(n, std::move(ones));

  PencilClasses result;
  std::vector<Subspace> reps;
  for (auto& [pencil, space] : spaces) {
    Subspace restricted = restrict_space(space, f);
    const SpaceRelation to_ones = relate(restricted, ones_space).relation;
    if (restricted.dim() == 0 || to_ones == SpaceRelation::Equal) {
      result.defining.push_back(pencil);
      continue;
    }
    if (to_ones == SpaceRelation::Neither)
      throw std::logic_error(
          "pencil space neither equals nor avoids the mean direction");
    bool placed = false;
    for (size_t g = 0; g < reps.size() && !placed; ++g) {
      switch (relate(restricted, reps[g]).relation) {
        case SpaceRelation::Equal:
          result.classes[g].push_back(pencil);
          placed = true;
          break;
        case SpaceRelation::Orthogonal:
          break;
        case SpaceRelation::Neither:
          throw std::logic_error(
              "pencil spaces of a regular fraction must be equal or "
              "orthogonal");
      }
    }
    if (!placed) {
      result.classes.push_back({pencil});
      reps.push_back(std::move(restricted));
    }
  }

  const auto code_of = [s](const Pencil& p) {
    long long code = 0;
    for (int c : p.coefficients) code = code * s + c;
    return code;
  };
  const auto pencil_key = [&code_of](const Pencil& p) {
    return std::make_pair(p.weight(), code_of(p));
  };
  const auto by_key = [&pencil_key](const Pencil& a, const Pencil& b) {
    return pencil_key(a) < pencil_key(b);
  };
  for (std::vector<Pencil>& group : result.classes)
    std::sort(group.begin(), group.end(), by_key);
  std::sort(result.classes.begin(), result.classes.end(),
            [&by_key](const std::vector<Pencil>& a,
                      const std::vector<Pencil>& b) {
              return by_key(a.front(), b.front());
            });
  std::sort(result.defining.begin(), result.defining.end(), by_key);
  return result;
}

}  // namespace oafrac
