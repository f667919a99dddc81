#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace oafrac::cli {

std::string subset_label(const std::vector<int>& factors) {
  if (factors.empty()) return "mean";
  std::string out = "{";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(factors[i]);
  }
  out += "}";
  return out;
}

std::string levels_label(const std::vector<int>& levels) {
  std::string out = "(";
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(levels[i]);
  }
  out += ")";
  return out;
}

std::string gwlp_line(const GwlpVector& g) {
  std::string out = "A = [";
  for (int i = 1; i <= g.k(); ++i) {
    if (i > 1) out += ", ";
    out += to_string(g.a[static_cast<size_t>(i)]);
  }
  out += "]";
  return out;
}

std::string aliasing_name(Aliasing a) {
  switch (a) {
    case Aliasing::Complete:
      return "complete";
    case Aliasing::Unaliased:
      return "unaliased";
    case Aliasing::Partial:
      return "partial";
  }
  return "unknown";
}

std::string defining_relation(const PencilClasses& classes) {
  std::string out = "I";
  for (const Pencil& p : classes.defining) out += " = " + p.label();
  return out;
}

void print_design(const Fraction& f, bool regular, std::ostream& out) {
  const FullFactorial& parent = f.parent();
  out << "design: " << parent.factor_count() << " factors, levels";
  for (int s : parent.level_counts()) out << ' ' << s;
  out << ", " << f.run_count() << " runs\n";
  out << "regular: " << (regular ? "yes" : "no") << "\n";
}

namespace {

Rational uniform_share(const Fraction& f, const std::vector<int>& factors) {
  long long prod = 1;
  for (int i : factors) prod *= f.parent().level_count(i);
  return make_rational(f.run_count(), prod);
}

}  // namespace

void print_strength(const StrengthReport& r, const Fraction& f,
                    bool per_subset, std::ostream& out) {
  out << "t_max = " << r.t_max;
  if (r.index) out << " (index λ = " << *r.index << ")";
  out << "\n";
  if (per_subset && !r.index_by_subset.empty()) {
    std::vector<std::pair<std::vector<int>, long long>> rows(
        r.index_by_subset.begin(), r.index_by_subset.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) {
                       return a.first.size() < b.first.size();
                     });
    out << "index by subset:\n";
    for (const auto& [factors, index] : rows)
      out << "  λ_" << subset_label(factors) << " = " << index << "\n";
  }
  if (r.witness) {
    out << "strength " << r.t_max + 1 << " fails at factors "
        << subset_label(r.witness->factors) << ", levels "
        << levels_label(r.witness->block_levels) << ": hit "
        << r.witness->hits << " times, uniform share "
        << to_string(uniform_share(f, r.witness->factors)) << "\n";
  }
}

void print_alias_report(const AliasReport& r, int factor_count,
                        std::ostream& out) {
  long long aliased = 0;
  for (const AliasPair& p : r.pairs)
    if (p.aliasing != Aliasing::Unaliased) aliased += 1;
  if (aliased == 0) {
    out << "no aliasing; R_max = " << r.r_max << "\n";
    return;
  }
  out << "R_max = " << r.r_max << "\n";
  out << "aliased pairs (orders up to "
      << std::min(r.max_order, factor_count) << "):\n";
  for (const AliasPair& p : r.pairs) {
    if (p.aliasing == Aliasing::Unaliased) continue;
    out << "  " << subset_label(p.first) << " vs " << subset_label(p.second)
        << ": " << aliasing_name(p.aliasing) << "\n";
  }
  out << "unaliased pairs: " << (r.pairs.size() - aliased) << "\n";
}

void print_pencil_classes(const PencilClasses& c, std::ostream& out) {
  out << "pencil alias classes:\n";
  for (const std::vector<Pencil>& group : c.classes) {
    out << "  ";
    for (size_t i = 0; i < group.size(); ++i) {
      if (i > 0) out << " = ";
      out << group[i].label();
    }
    out << "\n";
  }
  out << "defining relation: " << defining_relation(c) << "\n";
}

void print_witness(const AliasWitness& w, std::ostream& out) {
  out << "witness: " << subset_label(w.I) << " vs " << subset_label(w.J)
      << " at levels " << levels_label(w.block_levels)
      << ", inner product = " << to_string(w.value) << "\n";
}

void print_identity_summary(const VerificationReport& r, std::ostream& out) {
  out << "R_max = " << r.r_max << "\n";
  out << gwlp_line(r.gwlp) << "\n";
  out << "min positive GWLP index = " << r.min_gwlp_index << "\n";
  if (r.witness)
    print_witness(*r.witness, out);
  else
    out << "no aliasing; R_max = " << r.r_max << "\n";
  if (r.identity_holds) {
    out << "identity: R_max = " << r.r_max
        << " = t_max + 1 = min GWLP index\n";
  } else {
    out << "identity FAILED: R_max = " << r.r_max << ", t_max + 1 = "
        << r.t_max + 1 << ", min GWLP index = " << r.min_gwlp_index << "\n";
  }
}

void print_verification(const VerificationReport& r, std::ostream& out) {
  out << "t_max = " << r.t_max << "\n";
  print_identity_summary(r, out);
}

void print_projection(const Projection& p, std::ostream& out) {
  out << "projection onto " << subset_label(p.factors) << ": "
      << p.counts.size() << " level combinations, " << p.total() << " runs\n";
  for (const auto& [levels, count] : p.counts)
    out << "  " << levels_label(levels) << ": " << count << "\n";
}

nlohmann::json design_json(const Fraction& f, bool regular) {
  return {{"k", f.parent().factor_count()},
          {"levels", f.parent().level_counts()},
          {"runs", f.run_count()},
          {"regular", regular}};
}

nlohmann::json strength_json(const StrengthReport& r, const Fraction& f) {
  nlohmann::json out{{"t_max", r.t_max}};
  if (r.index)
    out["index"] = *r.index;
  else
    out["index"] = nullptr;
  nlohmann::json by_subset = nlohmann::json::array();
  std::vector<std::pair<std::vector<int>, long long>> rows(
      r.index_by_subset.begin(), r.index_by_subset.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.first.size() < b.first.size();
  });
  for (const auto& [factors, index] : rows)
    by_subset.push_back({{"factors", factors}, {"index", index}});
  out["index_by_subset"] = std::move(by_subset);
  if (r.witness) {
    out["witness"] = {
        {"factors", r.witness->factors},
        {"levels", r.witness->block_levels},
        {"hits", r.witness->hits},
        {"uniform_share", to_string(uniform_share(f, r.witness->factors))}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

nlohmann::json gwlp_json(const GwlpVector& g) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 1; i <= g.k(); ++i)
    out.push_back(to_string(g.a[static_cast<size_t>(i)]));
  return out;
}

nlohmann::json alias_report_json(const AliasReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const AliasPair& p : r.pairs)
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"aliasing", aliasing_name(p.aliasing)}});
  return {{"max_order", r.max_order},
          {"r_max", r.r_max},
          {"alias_pairs", std::move(pairs)}};
}

nlohmann::json pencil_classes_json(const PencilClasses& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const std::vector<Pencil>& group : c.classes) {
    nlohmann::json labels = nlohmann::json::array();
    for (const Pencil& p : group) labels.push_back(p.label());
    classes.push_back(std::move(labels));
  }
  nlohmann::json defining = nlohmann::json::array();
  for (const Pencil& p : c.defining) defining.push_back(p.label());
  return {{"classes", std::move(classes)},
          {"defining", std::move(defining)},
          {"defining_relation", defining_relation(c)}};
}

nlohmann::json witness_json(const AliasWitness& w) {
  return {{"K", w.K},
          {"I", w.I},
          {"J", w.J},
          {"levels", w.block_levels},
          {"value", to_string(w.value)}};
}

nlohmann::json verification_json(const VerificationReport& r) {
  nlohmann::json out{{"t_max", r.t_max},
                     {"r_max", r.r_max},
                     {"min_gwlp_index", r.min_gwlp_index},
                     {"identity_holds", r.identity_holds},
                     {"gwlp", gwlp_json(r.gwlp)}};
  if (r.witness)
    out["witness"] = witness_json(*r.witness);
  else
    out["witness"] = nullptr;
  return out;
}

nlohmann::json projection_json(const Projection& p) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [levels, count] : p.counts)
    counts.push_back({{"levels", levels}, {"count", count}});
  return {{"factors", p.factors},
          {"total", p.total()},
          {"counts", std::move(counts)}};
}

}  // namespace oafrac::cli
