#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oafrac/construct.hpp"
#include "oafrac/effects.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/guard.hpp"
#include "oafrac/ring.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/verify.hpp"
#include "oafrac/wordlength.hpp"
#include "report.hpp"

namespace oafrac::cli {
namespace {

Fraction load(const std::string& path) {
  if (path == "-") return read_design(std::cin);
  return read_design_file(path);
}

void store(const Fraction& f, const std::string& path, std::ostream& out) {
  if (path == "-")
    write_design(f, out);
  else
    write_design_file(f, path);
}

int parse_int(const std::string& token, const std::string& where) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != token.size() || token.empty())
    throw InvalidDesignError("bad integer '" + token + "' in " + where);
  return value;
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& where) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(parse_int(token, where));
  if (out.empty()) throw InvalidDesignError("empty list in " + where);
  return out;
}

struct Equation {
  std::vector<int> coeffs;
  int rhs = 0;
};

// "--eq 1,2,2=1" is the equation x + 2y + 2z = 1.
Equation parse_eq(const std::string& text) {
  auto pos = text.find('=');
  if (pos == std::string::npos)
    throw InvalidDesignError("equation '" + text +
                             "' must look like c1,...,ck=r");
  Equation e;
  e.coeffs = parse_int_list(text.substr(0, pos), "equation '" + text + "'");
  e.rhs = parse_int(text.substr(pos + 1), "equation '" + text + "'");
  return e;
}

std::string format_residual(double r) {
  std::ostringstream s;
  s << std::setprecision(12) << r;
  return s.str();
}

void print_json(const nlohmann::json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
}

struct GenSpec {
  int modulus = 0;  // field order or ring modulus
  int k = 0;
  std::string coeffs;
  int rhs = 0;
  std::vector<std::string> eqs;
  std::string out_path = "-";
};

LinearSystem build_system(const GenSpec& g, const Ring& ring) {
  std::vector<Equation> eqs;
  if (!g.coeffs.empty()) {
    if (!g.eqs.empty())
      throw InvalidDesignError(
          "give either --coeffs/--rhs or --eq, not both");
    eqs.push_back({parse_int_list(g.coeffs, "--coeffs"), g.rhs});
  } else {
    if (g.eqs.empty())
      throw InvalidDesignError("gen needs --coeffs or at least one --eq");
    for (const std::string& text : g.eqs) eqs.push_back(parse_eq(text));
  }
  LinearSystem sys{ring, {}, {}};
  for (const Equation& e : eqs) {
    if (static_cast<int>(e.coeffs.size()) != g.k)
      throw InvalidDesignError("equation has " +
                               std::to_string(e.coeffs.size()) +
                               " coefficients, expected " +
                               std::to_string(g.k));
    sys.coefficients.push_back(e.coeffs);
    sys.rhs.push_back(e.rhs);
  }
  sys.validate();
  return sys;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact strength, aliasing and wordlength analysis of "
               "fractional factorial designs"};
  app.name("oafrac");
  app.require_subcommand(1);

  bool json = false;
  ResourceGuard guard;
  app.add_flag("--json", json, "emit machine-readable JSON reports");
  app.add_option("--max-factors", guard.max_factors,
                 "resource guard: largest factor count analyzed")
      ->capture_default_str();
  app.add_option("--max-cells", guard.max_cells,
                 "resource guard: largest full factorial analyzed")
      ->capture_default_str();

  std::string analyze_file = "-";
  auto* analyze = app.add_subcommand(
      "analyze", "strength, resolution, GWLP and alias summary");
  analyze->fallthrough();
  analyze->add_option("FILE", analyze_file, "design file, - for stdin");

  std::string strength_file = "-";
  auto* strength = app.add_subcommand(
      "strength", "maximum strength with per-subset indices");
  strength->fallthrough();
  strength->add_option("FILE", strength_file, "design file, - for stdin");

  std::string aliases_file = "-";
  bool pencils = false;
  int max_order = -1;
  auto* aliases = app.add_subcommand(
      "aliases", "pairwise aliasing of interaction spaces");
  aliases->fallthrough();
  aliases->add_option("FILE", aliases_file, "design file, - for stdin");
  aliases->add_flag("--pencils", pencils,
                    "alias classes of pencils (regular fractions only)");
  aliases->add_option("--max-order", max_order,
                      "largest subset size tabulated (default: all)");

  std::string gwlp_file = "-";
  auto* gwlp_cmd = app.add_subcommand(
      "gwlp", "generalized wordlength pattern with cross-checks");
  gwlp_cmd->fallthrough();
  gwlp_cmd->add_option("FILE", gwlp_file, "design file, - for stdin");

  std::string verify_file = "-";
  bool deep = false;
  auto* verify = app.add_subcommand(
      "verify", "check R_max = t_max + 1 = min positive GWLP index");
  verify->fallthrough();
  verify->add_option("FILE", verify_file, "design file, - for stdin");
  verify->add_flag("--deep", deep,
                   "also project the witness onto interaction spaces");

  auto* gen = app.add_subcommand("gen", "construct a fraction and emit it");
  gen->fallthrough();
  gen->require_subcommand(1);
  GenSpec greg, gmod;
  auto* gen_regular = gen->add_subcommand(
      "regular", "solution set of linear equations over GF(s)");
  gen_regular->fallthrough();
  gen_regular->add_option("--s", greg.modulus, "field order (prime power)")
      ->required();
  gen_regular->add_option("--k", greg.k, "number of factors")->required();
  gen_regular->add_option("--coeffs", greg.coeffs,
                          "single equation coefficients c1,...,ck");
  gen_regular->add_option("--rhs", greg.rhs, "right-hand side for --coeffs");
  gen_regular->add_option("--eq", greg.eqs,
                          "equation c1,...,ck=r (repeatable)");
  gen_regular->add_option("-o,--output", greg.out_path,
                          "output file, - for stdout");
  auto* gen_modular = gen->add_subcommand(
      "modular", "solution set of linear congruences over Z/n");
  gen_modular->fallthrough();
  gen_modular->add_option("--n", gmod.modulus, "modulus")->required();
  gen_modular->add_option("--k", gmod.k, "number of factors")->required();
  gen_modular->add_option("--coeffs", gmod.coeffs,
                          "single congruence coefficients c1,...,ck");
  gen_modular->add_option("--rhs", gmod.rhs, "right-hand side for --coeffs");
  gen_modular->add_option("--eq", gmod.eqs,
                          "congruence c1,...,ck=r (repeatable)");
  gen_modular->add_option("-o,--output", gmod.out_path,
                          "output file, - for stdout");

  std::string jux_a, jux_b, jux_out = "-";
  auto* jux = app.add_subcommand(
      "juxtapose", "disjoint union of two fractions of one full factorial");
  jux->fallthrough();
  jux->add_option("FIRST", jux_a, "first design file")->required();
  jux->add_option("SECOND", jux_b, "second design file")->required();
  jux->add_option("-o,--output", jux_out, "output file, - for stdout");

  std::string proj_file = "-";
  std::string proj_factors;
  auto* proj = app.add_subcommand(
      "project", "projection onto a factor subset, with multiplicities");
  proj->fallthrough();
  proj->add_option("FILE", proj_file, "design file, - for stdin");
  proj->add_option("--factors", proj_factors, "factor list, e.g. 1,2,3")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oafrac");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      Fraction f = load(analyze_file);
      bool regular = detect_regular(f).has_value();
      VerificationReport r = verify_identities(f, guard);
      if (json) {
        nlohmann::json j = verification_json(r);
        j["design"] = design_json(f, regular);
        j["strength"] = strength_json(r.strength, f);
        print_json(j, out);
      } else {
        print_design(f, regular, out);
        print_strength(r.strength, f, false, out);
        print_identity_summary(r, out);
      }
      return 0;
    }
    if (*strength) {
      Fraction f = load(strength_file);
      guard.check(f.parent());
      if (!cross_check_strength(f))
        throw std::logic_error("strength routes disagree");
      StrengthReport r = strength_by_projection(f);
      if (json)
        print_json(strength_json(r, f), out);
      else
        print_strength(r, f, true, out);
      return 0;
    }
    if (*aliases) {
      Fraction f = load(aliases_file);
      int k = f.parent().factor_count();
      int order = max_order < 0 ? k : std::min(max_order, k);
      AliasAnalyzer analyzer(f, guard);
      AliasReport r = analyzer.alias_table(order);
      std::optional<PencilClasses> classes;
      if (pencils) classes = pencil_alias_classes(f);
      if (json) {
        nlohmann::json j = alias_report_json(r);
        if (classes) j["pencils"] = pencil_classes_json(*classes);
        print_json(j, out);
      } else {
        print_alias_report(r, k, out);
        if (classes) print_pencil_classes(*classes, out);
      }
      return 0;
    }
    if (*gwlp_cmd) {
      Fraction f = load(gwlp_file);
      guard.check(f.parent());
      double residual = 0.0;
      GwlpVector g = gwlp_characters(f, 1e-9, &residual);
      bool symmetric = f.parent().symmetric();
      if (symmetric && gwlp_krawtchouk(f) != g)
        throw std::logic_error(
            "character and Krawtchouk wordlength patterns disagree");
      bool regular = detect_regular(f).has_value();
      if (regular && regular_wlp(f) != g)
        throw std::logic_error(
            "regular wordlength pattern disagrees with the GWLP");
      if (json) {
        nlohmann::json j{{"gwlp", gwlp_json(g)},
                         {"max_residual", residual},
                         {"krawtchouk_checked", symmetric},
                         {"regular_checked", regular}};
        print_json(j, out);
      } else {
        out << gwlp_line(g) << "\n";
        out << "max rounding residual = " << format_residual(residual)
            << "\n";
        if (symmetric) out << "Krawtchouk cross-check: ok\n";
        if (regular) out << "regular wordlength cross-check: ok\n";
      }
      return 0;
    }
    if (*verify) {
      Fraction f = load(verify_file);
      VerificationReport r = verify_identities(f, guard);
      if (deep && r.witness) r.witness = alias_witness(f, true);
      if (json)
        print_json(verification_json(r), out);
      else
        print_verification(r, out);
      return r.identity_holds ? 0 : 1;
    }
    if (*gen) {
      const GenSpec& g = *gen_regular ? greg : gmod;
      Ring ring = *gen_regular ? Ring::gf(g.modulus) : Ring::zmod(g.modulus);
      if (g.k <= 0) throw InvalidDesignError("--k must be positive");
      LinearSystem sys = build_system(g, ring);
      guard.check(
          FullFactorial(std::vector<int>(g.k, ring.order())));
      Fraction f = *gen_regular ? regular_fraction(g.modulus, g.k, sys)
                                : modular_fraction(g.modulus, g.k, sys);
      store(f, g.out_path, out);
      return 0;
    }
    if (*jux) {
      Fraction f = juxtapose(load(jux_a), load(jux_b));
      store(f, jux_out, out);
      return 0;
    }
    if (*proj) {
      Fraction f = load(proj_file);
      Projection p = project(f, parse_int_list(proj_factors, "--factors"));
      if (json)
        print_json(projection_json(p), out);
      else
        print_projection(p, out);
      return 0;
    }
    throw std::logic_error("no subcommand dispatched");
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidDesignError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace oafrac::cli
