#include "frs/foset.hpp"

#include <algorithm>

namespace frs {

FuzzyOrderMatrix::FuzzyOrderMatrix(int carrier_size, int size_limit) : size(carrier_size) {
  if (carrier_size < 1) {
    throw InputError("foset carrier must have at least one element");
  }
  if (carrier_size > size_limit) {
    throw InputError("foset carrier size " + std::to_string(carrier_size) +
                     " exceeds the limit " + std::to_string(size_limit));
  }
  grades.assign(static_cast<std::size_t>(carrier_size),
                std::vector<Rational>(static_cast<std::size_t>(carrier_size)));
}

std::string FuzzyOrderMatrix::label(int i) const {
  if (static_cast<std::size_t>(i) < labels.size()) return labels[static_cast<std::size_t>(i)];
  return "#" + std::to_string(i);
}

void FuzzyOrderMatrix::check_well_formed() const {
  if (size < 1 || static_cast<int>(grades.size()) != size) {
    throw InputError("foset grade table does not match the declared size");
  }
  for (int x = 0; x < size; ++x) {
    if (static_cast<int>(grades[static_cast<std::size_t>(x)].size()) != size) {
      throw InputError("foset grade table row " + std::to_string(x) + " has the wrong length");
    }
    for (int y = 0; y < size; ++y) {
      if (!in_unit_interval(at(x, y))) {
        throw InputError("foset grade (" + std::to_string(x) + "," + std::to_string(y) +
                         ") = " + format_rational(at(x, y)) + " lies outside [0,1]");
      }
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    throw InputError("foset label list does not match the carrier size");
  }
}

const char* axiom_name(FosetAxiom axiom) {
  switch (axiom) {
    case FosetAxiom::Reflexivity: return "reflexivity";
    case FosetAxiom::Antisymmetry: return "antisymmetry";
    case FosetAxiom::Transitivity: return "transitivity";
  }
  return "?";
}

AxiomReport validate_fuzzy_order(const FuzzyOrderMatrix& m) {
  m.check_well_formed();
  AxiomReport report;

  report.reflexive = true;
  for (int x = 0; x < m.size; ++x) {
    if (m.at(x, x) != 1) {
      report.reflexive = false;
      report.violations.push_back({FosetAxiom::Reflexivity, x, x, x});
      break;
    }
  }

  report.antisymmetric = true;
  for (int x = 0; x < m.size && report.antisymmetric; ++x) {
    for (int y = 0; y < m.size; ++y) {
      if (x == y) continue;
      if (m.at(x, y) + m.at(y, x) > 1) {
        report.antisymmetric = false;
        report.violations.push_back({FosetAxiom::Antisymmetry, x, y, y});
        break;
      }
    }
  }

  // grade(x, z) must dominate the sup-min composition over every middle y.
  report.transitive = true;
  for (int x = 0; x < m.size && report.transitive; ++x) {
    for (int z = 0; z < m.size && report.transitive; ++z) {
      for (int y = 0; y < m.size; ++y) {
        const Rational through = std::min(m.at(x, y), m.at(y, z));
        if (m.at(x, z) < through) {
          report.transitive = false;
          report.violations.push_back({FosetAxiom::Transitivity, x, y, z});
          break;
        }
      }
    }
  }

  return report;
}

FuzzySubset up_down_set(const FuzzyOrderMatrix& m, int x, Direction direction) {
  if (x < 0 || x >= m.size) {
    throw InputError("carrier index " + std::to_string(x) + " out of range");
  }
  FuzzySubset out;
  out.membership.resize(static_cast<std::size_t>(m.size));
  for (int y = 0; y < m.size; ++y) {
    out[y] = direction == Direction::Down ? m.at(y, x) : m.at(x, y);
  }
  return out;
}

BoundsResult bounds(const FuzzyOrderMatrix& m, const std::vector<int>& subset) {
  if (subset.empty()) {
    throw InputError("bounds of the empty subset are undefined");
  }
  for (int x : subset) {
    if (x < 0 || x >= m.size) {
      throw InputError("subset index " + std::to_string(x) + " out of range");
    }
  }

  BoundsResult out;
  out.upper.membership.assign(static_cast<std::size_t>(m.size), Rational(0));
  out.lower.membership.assign(static_cast<std::size_t>(m.size), Rational(0));
  for (int y = 0; y < m.size; ++y) {
    Rational up_min(1), down_min(1);
    bool up_zero = false, down_zero = false;
    for (int x : subset) {
      if (m.at(x, y) <= half()) up_zero = true;
      if (m.at(y, x) <= half()) down_zero = true;
      up_min = std::min(up_min, m.at(x, y));
      down_min = std::min(down_min, m.at(y, x));
    }
    out.upper[y] = up_zero ? Rational(0) : up_min;
    out.lower[y] = down_zero ? Rational(0) : down_min;
  }
  return out;
}

std::optional<int> sup_inf(const FuzzyOrderMatrix& m, const std::vector<int>& subset,
                           ExtremumMode mode) {
  const BoundsResult bnd = bounds(m, subset);
  const FuzzySubset& candidates = mode == ExtremumMode::Sup ? bnd.upper : bnd.lower;

  for (int z = 0; z < m.size; ++z) {
    if (!candidates.contains(z)) continue;
    bool extremal = true;
    for (int y = 0; y < m.size; ++y) {
      if (!candidates.contains(y)) continue;
      // y must lie in the one-element bound set of z.
      const Rational& g = mode == ExtremumMode::Sup ? m.at(z, y) : m.at(y, z);
      if (g <= half()) {
        extremal = false;
        break;
      }
    }
    if (extremal) return z;
  }
  return std::nullopt;
}

}  // namespace frs
