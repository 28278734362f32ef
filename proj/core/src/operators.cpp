#include "frs/operators.hpp"

#include <algorithm>
#include <set>

namespace frs {

RationalOperator::RationalOperator(GradedSpace dom, GradedSpace cod)
    : domain(std::move(dom)), codomain(std::move(cod)),
      entries(static_cast<std::size_t>(codomain.dim),
              std::vector<Rational>(static_cast<std::size_t>(domain.dim))) {}

RationalOperator::RationalOperator(GradedSpace dom, GradedSpace cod,
                                   std::vector<std::vector<Rational>> m)
    : domain(std::move(dom)), codomain(std::move(cod)), entries(std::move(m)) {
  if (static_cast<int>(entries.size()) != codomain.dim) {
    throw InputError("operator row count does not match the codomain dimension");
  }
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != domain.dim) {
      throw InputError("operator column count does not match the domain dimension");
    }
  }
}

Vec RationalOperator::apply(const Vec& x) const {
  if (x.dim() != cols()) throw InputError("operator applied to a vector of the wrong dimension");
  Vec out = Vec::zero(rows());
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) out[r] += at(r, c) * x[c];
  }
  return out;
}

bool RationalOperator::column_is_zero(int c) const {
  for (int r = 0; r < rows(); ++r) {
    if (at(r, c) != 0) return false;
  }
  return true;
}

RationalOperator RationalOperator::identity(const GradedSpace& space) {
  RationalOperator op(space, space);
  for (int i = 0; i < space.dim; ++i) op.at(i, i) = 1;
  return op;
}

RationalOperator RationalOperator::compose(const RationalOperator& inner) const {
  if (inner.codomain.dim != domain.dim) {
    throw InputError("compose: inner codomain does not match outer domain");
  }
  RationalOperator out(inner.domain, codomain);
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < inner.cols(); ++c) {
      Rational sum(0);
      for (int k = 0; k < cols(); ++k) sum += at(r, k) * inner.at(k, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

std::optional<HomStructure> hom_structure(const RationalOperator& op) {
  HomStructure hs;
  hs.rows.resize(static_cast<std::size_t>(op.rows()));
  std::set<int> active;
  for (int r = 0; r < op.rows(); ++r) {
    int support = -1;
    for (int c = 0; c < op.cols(); ++c) {
      const Rational& e = op.at(r, c);
      if (e == 0) continue;
      if (e < 0 || support >= 0) return std::nullopt;
      support = c;
    }
    if (support >= 0) {
      hs.rows[static_cast<std::size_t>(r)] = {support, op.at(r, support)};
      active.insert(support);
      hs.rows_of_col[support].push_back(r);
    }
  }
  hs.active_cols.assign(active.begin(), active.end());
  return hs;
}

namespace {

bool join_preserved(const RationalOperator& op, const Vec& x, const Vec& y) {
  return op.apply(cwise_max(x, y)) == cwise_max(op.apply(x), op.apply(y));
}

/// Semantic homomorphism oracle: the join equation on every signed basis
/// pair, then on random pairs. Complete for this model: a row with two
/// nonzero entries fails on a plain basis pair and a negative entry fails
/// on (e_i, -e_i).
bool semantic_hom_oracle(const RationalOperator& op, long trials, Rng& rng,
                         std::optional<std::pair<Vec, Vec>>* counterexample) {
  const int n = op.cols();
  std::vector<Vec> signed_basis;
  for (int i = 0; i < n; ++i) {
    signed_basis.push_back(Vec::unit(n, i));
    signed_basis.push_back(-Vec::unit(n, i));
  }
  for (const Vec& x : signed_basis) {
    for (const Vec& y : signed_basis) {
      if (!join_preserved(op, x, y)) {
        if (counterexample) *counterexample = std::make_pair(x, y);
        return false;
      }
    }
  }
  for (long t = 0; t < trials; ++t) {
    const Vec x = random_vec(rng, n);
    const Vec y = random_vec(rng, n);
    if (!join_preserved(op, x, y)) {
      if (counterexample) *counterexample = std::make_pair(x, y);
      return false;
    }
  }
  return true;
}

/// The order interval [-u, u] must map into [-|T|u, |T|u].
bool order_bounded_witness(const RationalOperator& op, Rng& rng, long trials) {
  Vec u = Vec::zero(op.cols());
  for (int i = 0; i < op.cols(); ++i) u[i] = Rational(1) + rng.next_nonneg_rational(10, 5);
  Vec bound = Vec::zero(op.rows());
  for (int r = 0; r < op.rows(); ++r) {
    for (int c = 0; c < op.cols(); ++c) bound[r] += abs(op.at(r, c)) * u[c];
  }
  for (long t = 0; t < trials; ++t) {
    Vec x = Vec::zero(op.cols());
    for (int i = 0; i < op.cols(); ++i) {
      // random point of [-u, u]
      x[i] = u[i] * Rational(rng.next_int(-20, 20), 20);
    }
    if (!cwise_leq(abs_vec(op.apply(x)), bound)) return false;
  }
  return true;
}

/// Kernel sigma-ideal spot check: monotone increasing geometric sequences
/// inside the kernel converge (in order) to their base, which must stay in
/// the kernel.
bool kernel_sigma_check(const RationalOperator& op, const CoordinateIdeal& kernel, Rng& rng) {
  const int n = op.cols();
  for (int t = 0; t < 16; ++t) {
    Vec base = Vec::zero(n);
    Vec drift = Vec::zero(n);
    for (int j : kernel.coords) {
      base[j] = rng.next_nonneg_rational(20, 5);
      drift[j] = -rng.next_nonneg_rational(10, 5);
      if (base[j] + drift[j] < 0) drift[j] = -base[j];  // keep terms nonnegative
    }
    const GeomSequence seq(base, drift, Rational(1, 2));
    for (long k = 0; k < 6; ++k) {
      if (!kernel.contains(seq.term(k))) return false;
    }
    if (!kernel.contains(base)) return false;  // the monotone limit
  }
  return true;
}

}  // namespace

ClassifyReport classify_operator(const RationalOperator& op, long trials, std::uint64_t seed) {
  ClassifyReport report;
  Rng rng(seed);

  report.positive = true;
  for (int r = 0; r < op.rows() && report.positive; ++r) {
    for (int c = 0; c < op.cols(); ++c) {
      if (op.at(r, c) < 0) {
        report.positive = false;
        report.negative_entry = std::make_pair(r, c);
        break;
      }
    }
  }

  report.order_bounded = order_bounded_witness(op, rng, std::min<long>(trials, 64));

  const auto structure = hom_structure(op);
  report.structural_hom = structure.has_value();
  if (!structure) {
    for (int r = 0; r < op.rows(); ++r) {
      int nonzero = 0;
      for (int c = 0; c < op.cols(); ++c) nonzero += op.at(r, c) != 0 ? 1 : 0;
      if (nonzero > 1) {
        report.overloaded_row = r;
        break;
      }
    }
  }

  report.semantic_trials = trials;
  report.semantic_hom = semantic_hom_oracle(op, trials, rng, &report.join_counterexample);

  if (report.structural_hom != report.semantic_hom) {
    throw std::logic_error("homomorphism oracles disagree on " +
                           std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                           " operator");
  }
  report.riesz_hom = report.structural_hom;

  if (report.riesz_hom && !report.positive) {
    throw std::logic_error("classified homomorphism is not positive");
  }

  if (report.riesz_hom) {
    const CoordinateIdeal kernel = kernel_ideal(op);
    report.kernel_sigma_checked = kernel_sigma_check(op, kernel, rng);
    report.sigma_hom = report.kernel_sigma_checked;
    if (!report.sigma_hom) {
      throw std::logic_error("kernel of a homomorphism failed the sigma-ideal check");
    }
  } else {
    report.sigma_hom = false;
  }

  return report;
}

CoordinateIdeal kernel_ideal(const RationalOperator& op) {
  if (!hom_structure(op)) {
    throw PreconditionError("kernel_ideal requires a Riesz homomorphism");
  }
  std::vector<int> zero_cols;
  for (int c = 0; c < op.cols(); ++c) {
    if (op.column_is_zero(c)) zero_cols.push_back(c);
  }
  return CoordinateIdeal(op.domain, std::move(zero_cols));
}

Vec hom_witness_z(const RationalOperator& op, const Vec& x) {
  if (!hom_structure(op)) {
    throw PreconditionError("hom_witness_z requires a Riesz homomorphism");
  }
  const Vec tx = op.apply(x);
  if (!cwise_leq(Vec::zero(tx.dim()), tx)) {
    throw PreconditionError("hom_witness_z requires Tx >= 0");
  }

  const Vec z = negative_part(x);

  if (!cwise_leq(Vec::zero(z.dim()), z)) {
    throw std::logic_error("hom_witness_z: witness is not nonnegative");
  }
  if (!op.apply(z).is_zero()) {
    throw std::logic_error("hom_witness_z: witness is not in the kernel");
  }
  if (!cwise_leq(Vec::zero(x.dim()), x + z)) {
    throw std::logic_error("hom_witness_z: x + z is not nonnegative");
  }
  return z;
}

Vec hom_witness_w(const RationalOperator& op, const Vec& x, const Vec& y) {
  require_same_dim(x, y, "hom_witness_w");
  if (!hom_structure(op)) {
    throw PreconditionError("hom_witness_w requires a Riesz homomorphism");
  }
  if (!cwise_leq(op.apply(y), op.apply(x))) {
    throw PreconditionError("hom_witness_w requires Ty <= Tx");
  }

  const Vec w = x + hom_witness_z(op, x - y);

  if (!cwise_leq(x, w) || !cwise_leq(y, w)) {
    throw std::logic_error("hom_witness_w: w does not dominate x and y");
  }
  if (op.apply(w) != op.apply(x)) {
    throw std::logic_error("hom_witness_w: Tw differs from Tx");
  }
  return w;
}

bool ImageTheoremReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

const ImageTheoremReport::Item* ImageTheoremReport::find(const std::string& tag) const {
  for (const Item& i : items) {
    if (i.tag == tag) return &i;
  }
  return nullptr;
}

namespace {

/// Preimage of a range element: solves T x = y for a row-structured T.
/// Returns nullopt when y is outside the range (a zero row is hit, or two
/// rows sharing a support column disagree).
std::optional<Vec> range_preimage(const RationalOperator& op, const HomStructure& hs,
                                  const Vec& y) {
  Vec x = Vec::zero(op.cols());
  std::vector<bool> fixed(static_cast<std::size_t>(op.cols()), false);
  for (int r = 0; r < op.rows(); ++r) {
    const auto& row = hs.rows[static_cast<std::size_t>(r)];
    if (row.col < 0) {
      if (y[r] != 0) return std::nullopt;
      continue;
    }
    const Rational t = y[r] / row.coeff;
    if (fixed[static_cast<std::size_t>(row.col)]) {
      if (x[row.col] != t) return std::nullopt;
    } else {
      x[row.col] = t;
      fixed[static_cast<std::size_t>(row.col)] = true;
    }
  }
  return x;
}

Vec random_vec_in_ideal(Rng& rng, const CoordinateIdeal& ideal, bool nonneg) {
  Vec v = Vec::zero(ideal.ambient.dim);
  for (int j : ideal.coords) v[j] = nonneg ? rng.next_nonneg_rational() : rng.next_rational();
  return v;
}

}  // namespace

ImageTheoremReport verify_image_theorems(const RationalOperator& op, const CoordinateIdeal& ideal,
                                         long samples, std::uint64_t seed) {
  const auto structure = hom_structure(op);
  if (!structure) {
    throw PreconditionError("verify_image_theorems requires a Riesz homomorphism");
  }
  if (ideal.ambient.dim != op.domain.dim) {
    throw PreconditionError("verify_image_theorems: ideal lives in the wrong space");
  }
  const HomStructure& hs = *structure;
  Rng rng(seed);
  ImageTheoremReport report;

  const auto add = [&](const std::string& tag, bool pass, std::string detail) {
    report.items.push_back({tag, pass, std::move(detail)});
  };

  // Images of the lattice structure stay in the range: T x v T y has an
  // explicit preimage.
  {
    bool pass = true;
    std::string detail;
    for (long t = 0; t < samples && pass; ++t) {
      const Vec x = random_vec(rng, op.cols());
      const Vec y = random_vec(rng, op.cols());
      const Vec joined = cwise_max(op.apply(x), op.apply(y));
      const auto pre = range_preimage(op, hs, joined);
      if (!pre || op.apply(*pre) != joined || joined != op.apply(cwise_max(x, y))) {
        pass = false;
        detail = "join of images escaped the range at x=" + x.to_string() + " y=" + y.to_string();
      }
    }
    add("2.2", pass, pass ? "image closed under join" : detail);
  }

  // T(B) is an ideal in T(E): every positive range element under T(x),
  // x in B, has a preimage in B.
  {
    bool pass = true;
    std::string detail;
    for (long t = 0; t < samples && pass; ++t) {
      const Vec x = random_vec_in_ideal(rng, ideal, /*nonneg=*/true);
      const Vec tx = op.apply(x);
      // z in the range with 0 <= z <= Tx, sampled through the range
      // coordinates.
      Vec w = Vec::zero(op.cols());
      for (int j : hs.active_cols) {
        if (!ideal.contains_coord(j)) continue;
        w[j] = x[j] * Rational(rng.next_int(0, 8), 8);
      }
      const Vec z = op.apply(w);
      if (!cwise_leq(Vec::zero(z.dim()), z) || !cwise_leq(z, tx)) {
        pass = false;
        detail = "sampled range element violated 0 <= z <= Tx";
        break;
      }
      if (!ideal.contains(w)) {
        pass = false;
        detail = "preimage escaped the ideal";
      }
    }
    add("2.3", pass, pass ? "image of ideal is an ideal in the range" : detail);
  }

  // T(B1 /\ B2) = T(B1) /\ T(B2): an element of both images, built as
  // Tx1 /\ Tx2, must come from a single element of the intersection; the
  // meet x1 /\ x2 supplies it.
  {
    bool pass = true;
    std::string detail;
    for (long t = 0; t < std::min<long>(samples, 128) && pass; ++t) {
      std::vector<int> c1, c2;
      for (int j = 0; j < op.cols(); ++j) {
        if (rng.next_bool()) c1.push_back(j);
        if (rng.next_bool()) c2.push_back(j);
      }
      const CoordinateIdeal b1(op.domain, c1), b2(op.domain, c2);
      const Vec x1 = random_vec_in_ideal(rng, b1, /*nonneg=*/true);
      const Vec x2 = random_vec_in_ideal(rng, b2, /*nonneg=*/true);
      const Vec f = cwise_min(op.apply(x1), op.apply(x2));
      const Vec meet = cwise_min(x1, x2);
      if (!(b1.contains(meet) && b2.contains(meet)) || op.apply(meet) != f) {
        pass = false;
        detail = "meet witness failed at x1=" + x1.to_string() + " x2=" + x2.to_string();
      }
    }
    add("2.3b", pass, pass ? "image commutes with ideal intersection" : detail);
  }

  // Preimage of an ideal of the codomain is a coordinate ideal of the domain.
  {
    bool pass = true;
    std::string detail;
    for (long t = 0; t < std::min<long>(samples, 64) && pass; ++t) {
      std::vector<int> rows_subset;
      for (int r = 0; r < op.rows(); ++r) {
        if (rng.next_bool()) rows_subset.push_back(r);
      }
      const CoordinateIdeal target(op.codomain, rows_subset);
      // Preimage coordinates: column j survives iff every row it feeds lies
      // in the target ideal.
      std::vector<int> pre_coords;
      for (int j = 0; j < op.cols(); ++j) {
        bool inside = true;
        if (hs.col_active(j)) {
          for (int r : hs.rows_of_col.at(j)) {
            if (!target.contains_coord(r)) {
              inside = false;
              break;
            }
          }
        }
        if (inside) pre_coords.push_back(j);
      }
      const CoordinateIdeal preimage(op.domain, pre_coords);
      // Semantic: membership in the coordinate preimage must coincide with
      // T x landing in the target. Rows carry a single support column, so
      // no cancellation can blur the equivalence.
      for (int t2 = 0; t2 < 8; ++t2) {
        const Vec x = rng.next_bool() ? random_vec(rng, op.cols())
                                      : random_vec_in_ideal(rng, preimage, /*nonneg=*/false);
        if (preimage.contains(x) != target.contains(op.apply(x))) {
          pass = false;
          detail = "coordinate preimage is not the full preimage at x=" + x.to_string();
          break;
        }
      }
    }
    add("2.4", pass, pass ? "preimage of ideal is an ideal" : detail);
  }

  // Principal ideals: T(I_z) = I_{Tz} inside the range, witnessed by the
  // domination multiplier.
  {
    bool pass = true;
    std::string detail;
    for (long t = 0; t < samples && pass; ++t) {
      const Vec z = random_nonneg_vec(rng, op.cols());
      const CoordinateIdeal iz = ideal_generated_by(op.domain, {z});
      // Both sides as active-column sets.
      std::set<int> image_side, principal_side;
      for (int j : hs.active_cols) {
        if (iz.contains_coord(j)) image_side.insert(j);
        if (z[j] != 0) principal_side.insert(j);
      }
      if (image_side != principal_side) {
        pass = false;
        detail = "image of principal ideal mismatched at z=" + z.to_string();
        break;
      }
      // lambda-domination transports through T.
      const Vec x = random_vec_in_ideal(rng, iz, /*nonneg=*/false);
      const auto lambda = principal_ideal_lambda(z, x);
      if (!lambda) {
        pass = false;
        detail = "missing domination multiplier";
        break;
      }
      if (!cwise_leq(abs_vec(op.apply(x)), *lambda * op.apply(z))) {
        pass = false;
        detail = "|Tx| escaped lambda * Tz";
      }
    }
    add("2.5", pass, pass ? "image of principal ideal is principal" : detail);
  }

  // T(B^d) lies inside (T(B))^d; the containment is strict exactly when a
  // codomain coordinate outside the image of B is unreachable.
  {
    const CoordinateIdeal complement = disjoint_complement(ideal);
    std::set<int> image_rows_b, image_rows_bd;
    for (int j : hs.active_cols) {
      for (int r : hs.rows_of_col.at(j)) {
        (ideal.contains_coord(j) ? image_rows_b : image_rows_bd).insert(r);
      }
    }
    std::vector<int> tb_rows(image_rows_b.begin(), image_rows_b.end());
    const CoordinateIdeal tb(op.codomain, tb_rows);
    const CoordinateIdeal tb_complement = disjoint_complement(tb);

    bool contained = true;
    for (int r : image_rows_bd) {
      if (!tb_complement.contains_coord(r)) contained = false;
    }
    // Strict when some row of the complement band is not reachable from B^d.
    bool strict = false;
    int witness_row = -1;
    for (int r : tb_complement.coords) {
      Vec basis_row = Vec::unit(op.rows(), r);
      const auto pre = range_preimage(op, hs, basis_row);
      if (!pre || !complement.contains(*pre)) {
        strict = true;
        witness_row = r;
        break;
      }
    }
    std::string detail = contained ? (strict ? "containment strict at codomain coordinate " +
                                                   std::to_string(witness_row + 1)
                                             : "containment is equality")
                                   : "containment failed";
    add("2.6", contained, std::move(detail));
  }

  // Images of projection-band decompositions: Tx = Tx1 + Tx2 with the two
  // parts disjoint, and the image decomposition is the row restriction.
  {
    bool pass = true;
    std::string detail;
    const CoordinateIdeal complement = disjoint_complement(ideal);
    std::set<int> image_rows_b;
    for (int j : hs.active_cols) {
      if (!ideal.contains_coord(j)) continue;
      for (int r : hs.rows_of_col.at(j)) image_rows_b.insert(r);
    }
    for (long t = 0; t < samples && pass; ++t) {
      const Vec x = random_vec(rng, op.cols());
      const auto [x1, x2] = band_projection(ideal, x);
      const Vec tx = op.apply(x);
      const Vec tx1 = op.apply(x1);
      const Vec tx2 = op.apply(x2);
      if (tx1 + tx2 != tx) {
        pass = false;
        detail = "image decomposition does not reassemble";
        break;
      }
      if (!cwise_min(abs_vec(tx1), abs_vec(tx2)).is_zero()) {
        pass = false;
        detail = "image parts are not disjoint";
        break;
      }
      // Row restriction realizes the image band projection.
      Vec restricted = Vec::zero(op.rows());
      for (int r : image_rows_b) restricted[r] = tx[r];
      if (restricted != tx1) {
        pass = false;
        detail = "image projection is not the row restriction";
      }
    }
    add("2.7", pass, pass ? "image of projection band decomposition verified" : detail);
  }

  return report;
}

GeomSequence::GeomSequence(Vec a, Vec b, Rational r)
    : base(std::move(a)), drift(std::move(b)), ratio(std::move(r)) {
  require_same_dim(base, drift, "GeomSequence");
  if (!(ratio > 0 && ratio < 1)) {
    throw InputError("geometric ratio must satisfy 0 < r < 1");
  }
}

Vec GeomSequence::term(long k) const {
  return base + rational_pow(ratio, static_cast<unsigned long>(k)) * drift;
}

std::vector<Rational> default_eps_list() {
  return {Rational(1), Rational(1, 2), Rational(1, 8), Rational(1, 64)};
}

CauchyReport uniform_cauchy(const GeomSequence& seq, const Vec& w,
                            const std::vector<Rational>& eps_list) {
  require_same_dim(seq.base, w, "uniform_cauchy");
  if (!cwise_leq(Vec::zero(w.dim()), w)) {
    throw PreconditionError("uniform_cauchy requires a nonnegative regulator");
  }

  CauchyReport report;
  report.limit = seq.base;

  for (int i = 0; i < w.dim(); ++i) {
    if (seq.drift[i] != 0 && w[i] == 0) {
      report.cauchy = false;
      report.undominated_coord = i;
      return report;
    }
  }
  report.cauchy = true;

  for (const Rational& eps : eps_list) {
    if (!(eps > 0)) throw InputError("epsilon must be positive");
    // Exact tail bound: sup over m,n > N of |x_m - x_n| approaches
    // |drift| * r^{N+1}, so the least admissible N is the least one with
    // |drift_i| * r^{N+1} <= eps * w_i for every coordinate.
    long n_eps = 0;
    for (int i = 0; i < w.dim(); ++i) {
      const Rational need = abs(seq.drift[i]);
      if (need == 0) continue;
      long n = 0;
      Rational tail = seq.ratio;  // r^{n+1}
      while (need * tail > eps * w[i]) {
        ++n;
        tail *= seq.ratio;
      }
      n_eps = std::max(n_eps, n);
    }
    // Cross-check over the scan window.
    for (long m = n_eps + 1; m <= n_eps + 20; ++m) {
      for (long n = m + 1; n <= n_eps + 20; ++n) {
        if (!cwise_leq(abs_vec(seq.term(m) - seq.term(n)), eps * w)) {
          throw std::logic_error("uniform_cauchy: closed-form index failed the direct scan");
        }
      }
    }
    report.index.emplace_back(eps, n_eps);
  }
  return report;
}

HomCauchyReport verify_hom_preserves_cauchy(const RationalOperator& op, const GeomSequence& seq,
                                            const Vec& w, const std::vector<Rational>& eps_list) {
  HomCauchyReport report;
  const ClassifyReport cls = classify_operator(op, 64, 7);
  if (!cls.positive) {
    throw PreconditionError("verify_hom_preserves_cauchy requires a positive operator");
  }
  report.hom = cls.riesz_hom;

  report.source = uniform_cauchy(seq, w, eps_list);
  if (!report.source.cauchy) {
    throw PreconditionError("verify_hom_preserves_cauchy requires a Cauchy source sequence");
  }

  const GeomSequence image(op.apply(seq.base), op.apply(seq.drift), seq.ratio);
  report.image = uniform_cauchy(image, op.apply(w), eps_list);

  report.pass = report.image.cauchy;
  if (report.pass) {
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      if (report.image.index[i].second > report.source.index[i].second) {
        report.pass = false;
        break;
      }
    }
  }
  return report;
}

RationalOperator random_hom(Rng& rng, int rows, int cols) {
  RationalOperator op(GradedSpace::with_default_grade(cols), GradedSpace::with_default_grade(rows));
  for (int r = 0; r < rows; ++r) {
    if (rng.next_int(0, 5) == 0) continue;  // occasional zero row
    const int col = static_cast<int>(rng.next_int(0, cols - 1));
    op.at(r, col) = Rational(rng.next_int(1, 40), rng.next_int(1, 10));
  }
  return op;
}

RationalOperator random_operator(Rng& rng, int rows, int cols, std::int64_t num_abs_max,
                                 std::int64_t den_max) {
  RationalOperator op(GradedSpace::with_default_grade(cols), GradedSpace::with_default_grade(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) op.at(r, c) = rng.next_rational(num_abs_max, den_max);
  }
  return op;
}

}  // namespace frs
