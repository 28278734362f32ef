#include "frs/io.hpp"

#include <fstream>

namespace frs {

namespace {

const Json& expect(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int expect_int(const Json& j, const char* key) {
  const Json& field = expect(j, key);
  if (!field.is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return field.get<int>();
}

}  // namespace

Json to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("rationals must be \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vectors must be arrays of rationals");
  Vec v;
  v.coords.reserve(j.size());
  for (const Json& entry : j) v.coords.push_back(rational_from_json(entry));
  return v;
}

Json to_json(const FuzzyOrderMatrix& m) {
  Json grades = Json::array();
  for (int x = 0; x < m.size; ++x) {
    Json row = Json::array();
    for (int y = 0; y < m.size; ++y) row.push_back(to_json(m.at(x, y)));
    grades.push_back(std::move(row));
  }
  Json out = {{"size", m.size}, {"grades", std::move(grades)}};
  if (!m.labels.empty()) out["labels"] = m.labels;
  return out;
}

FuzzyOrderMatrix foset_from_json(const Json& j) {
  const int size = expect_int(j, "size");
  FuzzyOrderMatrix m(size);
  const Json& grades = expect(j, "grades");
  if (!grades.is_array() || static_cast<int>(grades.size()) != size) {
    throw InputError("grades must be a size x size table");
  }
  for (int x = 0; x < size; ++x) {
    const Json& row = grades[static_cast<std::size_t>(x)];
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      throw InputError("grades must be a size x size table");
    }
    for (int y = 0; y < size; ++y) {
      m.at(x, y) = rational_from_json(row[static_cast<std::size_t>(y)]);
    }
  }
  if (const auto it = j.find("labels"); it != j.end()) {
    m.labels = it->get<std::vector<std::string>>();
  }
  m.check_well_formed();
  return m;
}

Json to_json(const GradedSpace& s) {
  return {{"dim", s.dim}, {"alpha", to_json(s.alpha)}};
}

GradedSpace space_from_json(const Json& j) {
  const int dim = expect_int(j, "dim");
  if (dim < 1) throw InputError("space dimension must be a positive integer");
  Rational alpha(2, 3);
  if (const auto it = j.find("alpha"); it != j.end()) alpha = rational_from_json(*it);
  return GradedSpace(dim, alpha);
}

Json to_json(const CoordinateIdeal& ideal) {
  Json coords = Json::array();
  for (int c : ideal.coords) coords.push_back(c + 1);
  return {{"coords", std::move(coords)}};
}

CoordinateIdeal ideal_from_json(const Json& j, const GradedSpace& ambient) {
  const Json& coords = expect(j, "coords");
  if (!coords.is_array()) throw InputError("ideal coords must be an array");
  std::vector<int> zero_based;
  for (const Json& c : coords) {
    if (!c.is_number_integer()) throw InputError("ideal coords must be integers");
    zero_based.push_back(c.get<int>() - 1);
  }
  return CoordinateIdeal(ambient, std::move(zero_based));
}

Json to_json(const SubspaceSpec& spec) {
  Json basis = Json::array();
  for (const Vec& v : spec.basis) basis.push_back(to_json(v));
  return {{"basis", std::move(basis)}};
}

SubspaceSpec subspace_from_json(const Json& j, const GradedSpace& ambient) {
  const Json& basis = expect(j, "basis");
  if (!basis.is_array()) throw InputError("subspace basis must be an array of vectors");
  SubspaceSpec spec{ambient, {}};
  for (const Json& entry : basis) {
    Vec v = vec_from_json(entry);
    if (v.dim() != ambient.dim) throw InputError("subspace basis vector has the wrong dimension");
    spec.basis.push_back(std::move(v));
  }
  return spec;
}

Json to_json(const RationalOperator& op) {
  Json entries = Json::array();
  for (int r = 0; r < op.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < op.cols(); ++c) row.push_back(to_json(op.at(r, c)));
    entries.push_back(std::move(row));
  }
  Json out = {{"rows", op.rows()}, {"cols", op.cols()}, {"entries", std::move(entries)}};
  if (op.domain.alpha != Rational(2, 3)) out["domain_alpha"] = to_json(op.domain.alpha);
  if (op.codomain.alpha != Rational(2, 3)) out["codomain_alpha"] = to_json(op.codomain.alpha);
  return out;
}

RationalOperator operator_from_json(const Json& j) {
  const int rows = expect_int(j, "rows");
  const int cols = expect_int(j, "cols");
  if (rows < 1 || cols < 1) throw InputError("operator shape must be positive");
  Rational domain_alpha(2, 3), codomain_alpha(2, 3);
  if (const auto it = j.find("domain_alpha"); it != j.end()) {
    domain_alpha = rational_from_json(*it);
  }
  if (const auto it = j.find("codomain_alpha"); it != j.end()) {
    codomain_alpha = rational_from_json(*it);
  }
  RationalOperator op(GradedSpace(cols, domain_alpha), GradedSpace(rows, codomain_alpha));
  const Json& entries = expect(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
    throw InputError("operator entries must be a rows x cols table");
  }
  for (int r = 0; r < rows; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw InputError("operator entries must be a rows x cols table");
    }
    for (int c = 0; c < cols; ++c) {
      op.at(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return op;
}

Json to_json(const GeomSequence& seq) {
  return {{"base", to_json(seq.base)},
          {"drift", to_json(seq.drift)},
          {"ratio", to_json(seq.ratio)}};
}

GeomSequence sequence_from_json(const Json& j) {
  return GeomSequence(vec_from_json(expect(j, "base")), vec_from_json(expect(j, "drift")),
                      rational_from_json(expect(j, "ratio")));
}

Json to_json(const SeqTerm& term) {
  Json patch = Json::object();
  for (const auto& [n, v] : term.patch) patch[std::to_string(n)] = to_json(v);
  return {{"c0", to_json(term.c0)},
          {"c1", to_json(term.c1)},
          {"c2", to_json(term.c2)},
          {"patch", std::move(patch)}};
}

SeqTerm seqterm_from_json(const Json& j) {
  std::map<long, Rational> patch;
  if (const auto it = j.find("patch"); it != j.end()) {
    if (!it->is_object()) throw InputError("patch must map positions to rationals");
    for (const auto& [key, value] : it->items()) {
      long n = 0;
      std::size_t used = 0;
      try {
        n = std::stol(key, &used);
      } catch (const std::exception&) {
        throw InputError("patch position \"" + key + "\" is not a positive integer");
      }
      if (used != key.size() || n < 1) {
        throw InputError("patch position \"" + key + "\" is not a positive integer");
      }
      patch.emplace(n, rational_from_json(value));
    }
  }
  return SeqTerm(rational_from_json(expect(j, "c0")), rational_from_json(expect(j, "c1")),
                 rational_from_json(expect(j, "c2")), std::move(patch));
}

Json to_json(const QuotientSpace& q) {
  return {{"space", to_json(q.ambient)}, {"ideal", to_json(q.ideal)}};
}

QuotientSpace quotient_from_json(const Json& j) {
  const GradedSpace space = space_from_json(expect(j, "space"));
  return QuotientSpace(space, ideal_from_json(expect(j, "ideal"), space));
}

ThetaInstance theta_instance_from_json(const Json& j) {
  ThetaInstance out;
  out.space = space_from_json(expect(j, "space"));
  const Json& basis = expect(j, "basis");
  if (!basis.is_array()) throw InputError("basis must be an array of vectors");
  for (const Json& b : basis) out.basis.push_back(vec_from_json(b));
  out.op = operator_from_json(expect(j, "T"));
  out.x = vec_from_json(expect(j, "x"));
  return out;
}

FactorizationInstance factorization_from_json(const Json& j) {
  return {operator_from_json(expect(j, "Q")), operator_from_json(expect(j, "S")),
          operator_from_json(expect(j, "T"))};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace frs
