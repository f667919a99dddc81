#include "oafrac/construct.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "oafrac/errors.hpp"

namespace oafrac {

Fraction regular_fraction(int s, int k, const LinearSystem& sys) {
  if (!sys.ring.is_field())
    throw DomainError("regular fractions are defined over a field");
  if (sys.ring.order() != s)
    throw DomainError("system ring order does not match the level count");
  sys.validate();
  if (sys.unknowns() != k)
    throw DomainError("system unknowns do not match the factor count");
  return solution_set(sys);
}

Fraction modular_fraction(int n, int k, const LinearSystem& sys) {
  if (sys.ring.order() != n)
    throw DomainError("system modulus does not match the level count");
  sys.validate();
  if (sys.unknowns() != k)
    throw DomainError("system unknowns do not match the factor count");
  return solution_set(sys);
}

Fraction juxtapose(const Fraction& a, const Fraction& b) {
  if (!(a.parent() == b.parent()))
    throw DomainError("juxtaposition requires fractions of the same factorial");
  std::vector<long long> merged;
  merged.reserve(static_cast<size_t>(a.run_count() + b.run_count()));
  std::merge(a.runs().begin(), a.runs().end(), b.runs().begin(),
             b.runs().end(), std::back_inserter(merged));
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
    throw InvalidDesignError(
        "overlapping runs would make a non-simple design");
  return Fraction(a.parent(), std::move(merged));
}

long long Projection::total() const {
  long long sum = 0;
  for (const auto& [levels, count] : counts) sum += count;
  return sum;
}

Projection project(const Fraction& f, const std::vector<int>& factors) {
  if (factors.empty()) throw DomainError("projection subset must be nonempty");
  std::vector<int> I = factors;
  std::sort(I.begin(), I.end());
  for (size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 1 || I[i] > f.parent().factor_count())
      throw DomainError("factor index out of range");
    if (i > 0 && I[i] == I[i - 1])
      throw DomainError("factor subset has a repeated index");
  }
  Projection result;
  result.factors = I;
  for (long long r = 0; r < f.run_count(); ++r) {
    const std::vector<int> x = f.run_levels(r);
    std::vector<int> img;
    img.reserve(I.size());
    for (int i : I) img.push_back(x[static_cast<size_t>(i - 1)]);
    result.counts[img] += 1;
  }
  return result;
}

namespace {

[[noreturn]] void malformed(int line_no, const std::string& detail) {
  throw InvalidDesignError("line " + std::to_string(line_no) + ": " + detail);
}

}  // namespace

Fraction read_design(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int k = 0;
  std::vector<int> levels;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    line_no += 1;
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> k)) malformed(line_no, "expected the factor count");
      if (k < 1) malformed(line_no, "factor count must be at least 1");
      levels.resize(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) {
        if (!(fields >> levels[static_cast<size_t>(i)]))
          malformed(line_no, "expected " + std::to_string(k) +
                                 " level counts after the factor count");
        if (levels[static_cast<size_t>(i)] < 2)
          malformed(line_no, "factor " + std::to_string(i + 1) +
                                 " needs at least 2 levels");
      }
      int trailing = 0;
      if (fields >> trailing)
        malformed(line_no, "unexpected extra field in the header");
      have_header = true;
      continue;
    }
    std::vector<int> row(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      if (!(fields >> row[static_cast<size_t>(i)]))
        malformed(line_no,
                  "expected " + std::to_string(k) + " levels in the run");
      if (row[static_cast<size_t>(i)] < 0 ||
          row[static_cast<size_t>(i)] >= levels[static_cast<size_t>(i)])
        malformed(line_no, "level " + std::to_string(row[static_cast<size_t>(i)]) +
                               " out of range for factor " +
                               std::to_string(i + 1) + " (0.." +
                               std::to_string(levels[static_cast<size_t>(i)] - 1) +
                               ")");
    }
    int trailing = 0;
    if (fields >> trailing)
      malformed(line_no, "unexpected extra field in the run");
    rows.push_back(std::move(row));
  }
  if (!have_header)
    throw InvalidDesignError("design file has no header line");
  if (rows.empty()) throw InvalidDesignError("design file has no runs");
  return Fraction::from_rows(FullFactorial(std::move(levels)), rows);
}

Fraction read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDesignError("cannot open " + path);
  return read_design(in);
}

void write_design(const Fraction& f, std::ostream& out) {
  const FullFactorial& parent = f.parent();
  out << "# " << parent.factor_count() << " factors, levels";
  for (int s : parent.level_counts()) out << ' ' << s;
  out << ", " << f.run_count() << " runs\n";
  out << parent.factor_count();
  for (int s : parent.level_counts()) out << ' ' << s;
  out << '\n';
  for (long long r = 0; r < f.run_count(); ++r) {
    const std::vector<int> x = f.run_levels(r);
    for (size_t i = 0; i < x.size(); ++i) {
      if (i > 0) out << ' ';
      out << x[i];
    }
    out << '\n';
  }
}

void write_design_file(const Fraction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidDesignError("cannot open " + path + " for writing");
  write_design(f, out);
}

}  // namespace oafrac
