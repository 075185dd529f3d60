#include "nilgraded/cohomology.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "nilgraded/errors.hpp"

namespace nilgraded {

namespace {

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::string wedge_label(std::size_t a, std::size_t b) {
  return "w" + std::to_string(a + 1) + "^w" + std::to_string(b + 1);
}

// Adds coef * phi(X_l, X_k) to the row, expressed on pair columns.
void add_phi(Mat& m, std::size_t row, std::size_t n, std::size_t l, std::size_t k, const Scalar& coef) {
  if (l == k) return;
  if (l < k) {
    m(row, pair_index(n, l, k)) += coef;
  } else {
    m(row, pair_index(n, k, l)) -= coef;
  }
}

}  // namespace

TwoCochain TwoCochain::wedge(std::size_t a, std::size_t b, const Scalar& c) {
  TwoCochain t;
  t.add(a, b, c);
  return t;
}

void TwoCochain::add(std::size_t a, std::size_t b, const Scalar& c) {
  if (a == b) throw InputError("w_a ^ w_a vanishes");
  if (sgn(c) == 0) return;
  const Scalar value = a < b ? c : Scalar(-c);
  const auto key = std::minmax(a, b);
  auto [it, inserted] = coeffs_.try_emplace({key.first, key.second}, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

Scalar TwoCochain::operator()(std::size_t a, std::size_t b) const {
  if (a == b) return 0;
  if (a > b) return -(*this)(b, a);
  const auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

Vec TwoCochain::to_vec(std::size_t n) const {
  Vec v = zero_vec(pair_count(n));
  for (const auto& [ab, c] : coeffs_) {
    if (ab.second >= n) throw InputError("cochain index exceeds the dimension");
    v[pair_index(n, ab.first, ab.second)] = c;
  }
  return v;
}

TwoCochain TwoCochain::from_vec(std::size_t n, const Vec& v) {
  if (v.size() != pair_count(n)) throw InputError("cochain coordinate length mismatch");
  TwoCochain t;
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, ++idx) t.add(a, b, v[idx]);
  return t;
}

std::string TwoCochain::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ab, c] : coeffs_) {
    const Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) out << nilgraded::to_string(mag) << ' ';
    out << wedge_label(ab.first, ab.second);
    first = false;
  }
  return out.str();
}

std::size_t pair_count(std::size_t n) { return n * (n > 0 ? n - 1 : 0) / 2; }

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(pair_count(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

Mat cocycle_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  Mat m(triples, pair_count(n));
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++row) {
        for (const auto& [l, c] : g.basis_bracket(i, j)) add_phi(m, row, n, l, k, c);
        for (const auto& [l, c] : g.basis_bracket(j, k)) add_phi(m, row, n, l, i, c);
        for (const auto& [l, c] : g.basis_bracket(k, i)) add_phi(m, row, n, l, j, c);
      }
  return m;
}

TwoCochain coboundary_of(const LieAlgebra& g, std::size_t k) {
  TwoCochain t;
  for (const auto& [idx, c] : g.tensor().entries())
    if (idx.k == k) t.add(idx.i, idx.j, -c);
  return t;
}

std::optional<std::array<std::size_t, 3>> cocycle_violation(const LieAlgebra& g, const TwoCochain& c) {
  const std::size_t n = g.dim();
  auto phi_of_bracket = [&](std::size_t a, std::size_t b, std::size_t other) {
    Scalar s = 0;
    for (const auto& [l, coef] : g.basis_bracket(a, b)) s += coef * c(l, other);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Scalar s = phi_of_bracket(i, j, k) + phi_of_bracket(j, k, i) + phi_of_bracket(k, i, j);
        if (sgn(s) != 0) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

CocycleSpaces cocycle_spaces(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Mat m = cocycle_matrix(g);
  CocycleSpaces s;
  for (const auto& v : kernel_basis(m)) s.z2_basis.push_back(TwoCochain::from_vec(n, v));

  std::vector<Vec> coboundaries;
  for (std::size_t k = 0; k < n; ++k) {
    const TwoCochain b = coboundary_of(g, k);
    if (!b.is_zero()) coboundaries.push_back(b.to_vec(n));
  }
  for (const auto& v : span_basis(pair_count(n), coboundaries)) {
    if (!is_zero(m.apply(v))) throw InvariantViolation("coboundary fails the cocycle condition");
    s.b2_basis.push_back(TwoCochain::from_vec(n, v));
  }
  if (s.b2_basis.size() > s.z2_basis.size()) throw InvariantViolation("dim B^2 exceeds dim Z^2");
  s.h2_dim = s.z2_basis.size() - s.b2_basis.size();
  return s;
}

LieAlgebra central_extension(const LieAlgebra& g, const TwoCochain& c, std::optional<int> new_weight) {
  const std::size_t n = g.dim();
  if (!c.is_zero() && c.coefficients().rbegin()->first.second >= n)
    throw InputError("cochain index exceeds the dimension");
  if (const auto bad = cocycle_violation(g, c)) {
    throw PreconditionError("cochain " + c.to_string() + " is not a cocycle: condition fails on (X" +
                            std::to_string((*bad)[0] + 1) + ",X" + std::to_string((*bad)[1] + 1) + ",X" +
                            std::to_string((*bad)[2] + 1) + ")");
  }
  StructureTensor t(n + 1);
  for (const auto& [idx, coef] : g.tensor().entries()) t.add(idx.i, idx.j, idx.k, coef);
  for (const auto& [ab, coef] : c.coefficients()) t.add(ab.first, ab.second, n, coef);
  std::vector<std::string> labels = g.labels();
  const std::string fresh = "X" + std::to_string(n + 1);
  if (std::find(labels.begin(), labels.end(), fresh) == labels.end()) {
    labels.push_back(fresh);
  } else {
    labels.clear();
  }
  std::optional<std::vector<int>> weights;
  if (g.weights() && new_weight) {
    weights = *g.weights();
    weights->push_back(*new_weight);
  }
  LieAlgebra ext(std::move(t), std::move(labels), std::move(weights));
  if (!jacobi_defects(ext).empty()) throw InvariantViolation("central extension by a cocycle violates Jacobi");
  return ext;
}

HomogeneousSlices homogeneous_cocycles(const LieAlgebra& g, const std::vector<int>& weights, int w) {
  if (const auto cert = check_graded(g, weights); !cert.ok)
    throw PreconditionError("grading certificate fails: " + cert.reason);
  const std::size_t n = g.dim();
  const auto pairs = ordered_pairs(n);
  std::vector<std::size_t> columns;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (weights[pairs[p].first] + weights[pairs[p].second] == w) columns.push_back(p);

  HomogeneousSlices slices;
  if (columns.empty()) return slices;

  const Mat full = cocycle_matrix(g);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    Vec row(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) row[c] = full(r, columns[c]);
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  const Mat restricted = rows.empty() ? Mat(0, columns.size()) : Mat::from_rows(columns.size(), rows);
  for (const auto& k : kernel_basis(restricted)) {
    Vec v = zero_vec(pairs.size());
    for (std::size_t c = 0; c < columns.size(); ++c) v[columns[c]] = k[c];
    slices.z_basis.push_back(TwoCochain::from_vec(n, v));
  }

  std::vector<Vec> coboundaries;
  for (std::size_t k = 0; k < n; ++k) {
    if (weights[k] != w) continue;
    const TwoCochain b = coboundary_of(g, k);
    if (!b.is_zero()) coboundaries.push_back(b.to_vec(n));
  }
  for (const auto& v : span_basis(pairs.size(), coboundaries))
    slices.b_basis.push_back(TwoCochain::from_vec(n, v));
  return slices;
}

ExtensionSearch search_graded_linear_extensions(const LieAlgebra& g, const std::vector<int>& weights,
                                                const ExtensionSearchOptions& options) {
  if (const auto cert = check_graded(g, weights); !cert.ok)
    throw PreconditionError("grading certificate fails: " + cert.reason);
  const std::size_t n = g.dim();
  const std::size_t m = pair_count(n);
  const std::size_t base_nilindex = nilindex(g);
  const int top = options.max_weight.value_or(static_cast<int>(base_nilindex) + 1);

  ExtensionSearch result;
  std::set<ExtensionProfile> seen;
  std::mt19937_64 gen(options.seed);
  auto sample = [&gen] {
    const auto num = static_cast<long>(gen() % 9) - 4;
    const auto den = static_cast<long>(gen() % 3) + 1;
    Scalar q(num, den);
    q.canonicalize();
    return q;
  };

  for (int w = 2; w <= top; ++w) {
    ++result.weights_searched;
    const HomogeneousSlices slices = homogeneous_cocycles(g, weights, w);
    if (slices.z_basis.empty()) continue;

    std::vector<Vec> z, b;
    for (const auto& c : slices.z_basis) z.push_back(c.to_vec(n));
    for (const auto& c : slices.b_basis) b.push_back(c.to_vec(n));

    std::vector<Vec> trials;
    std::vector<Vec> span = b;
    std::size_t r = span_rank(m, span);
    for (const auto& v : z) {
      span.push_back(v);
      const std::size_t r2 = span_rank(m, span);
      if (r2 > r) {
        trials.push_back(v);
        r = r2;
      } else {
        span.pop_back();
      }
    }
    for (std::size_t s = 0; s < options.random_per_weight; ++s) {
      Vec v = zero_vec(m);
      for (const auto& basis_vec : z) {
        const Scalar c = sample();
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < m; ++i)
          if (sgn(basis_vec[i]) != 0) v[i] += c * basis_vec[i];
      }
      trials.push_back(std::move(v));
    }

    std::vector<int> ext_weights = weights;
    ext_weights.push_back(w);
    for (const auto& v : trials) {
      if (is_zero(v)) continue;
      ++result.cocycles_tried;
      const TwoCochain cocycle = TwoCochain::from_vec(n, v);
      ExtensionCandidate cand{cocycle, w, central_extension(g, cocycle, w), false, false, false, false, {}};
      cand.graded = graded_certificate(cand.extension, ext_weights);
      if (!cand.graded) continue;
      const Filtration series = lower_central_series(cand.extension);
      cand.nilindex_preserved = series.stages.size() - 1 == base_nilindex;
      if (!cand.nilindex_preserved) continue;
      cand.nonsplit = !has_abelian_direct_factor(cand.extension);
      if (!cand.nonsplit) continue;
      const auto cs = characteristic_sequence(cand.extension, options.seed);
      cand.linear_sequence = is_linear(cs.sequence);
      if (!cand.linear_sequence) continue;
      cand.profile = ExtensionProfile{cand.extension.dim(), cs.sequence, series.dims(),
                                      cocycle_spaces(cand.extension).h2_dim};
      if (seen.insert(cand.profile).second) result.candidates.push_back(std::move(cand));
    }
  }
  return result;
}

std::vector<ExtensionCandidate> enumerate_graded_linear_extensions(const LieAlgebra& g,
                                                                   const std::vector<int>& weights) {
  return search_graded_linear_extensions(g, weights).candidates;
}

}  // namespace nilgraded
