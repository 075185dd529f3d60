#include "nilgraded/liecore.hpp"

#include <algorithm>

#include "json.hpp"
#include "nilgraded/errors.hpp"

namespace nilgraded {

StructureTensor::StructureTensor(std::size_t dim) : dim_(dim) {}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InputError("structure constant index out of range");
  if (i == j) throw InputError("bracket of a basis element with itself must vanish");
  if (sgn(c) == 0) return;
  const bool swap = i > j;
  const BracketIndex key{swap ? j : i, swap ? i : j, k};
  Scalar value = swap ? Scalar(-c) : c;
  value.canonicalize();
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

Scalar StructureTensor::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  if (i > j) return -coeff(j, i, k);
  const auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Scalar(0) : it->second;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  return labels;
}

LieAlgebra::LieAlgebra(StructureTensor tensor, std::vector<std::string> labels,
                       std::optional<std::vector<int>> weights)
    : tensor_(std::move(tensor)),
      labels_(labels.empty() ? default_labels(tensor_.dim()) : std::move(labels)),
      weights_(std::move(weights)) {
  const std::size_t n = tensor_.dim();
  if (labels_.size() != n) throw InputError("label count does not match the dimension");
  if (weights_ && weights_->size() != n) throw InputError("weight count does not match the dimension");
  table_.assign(n * n, SparseVec{});
  for (const auto& [idx, c] : tensor_.entries()) {
    table_[idx.i * n + idx.j].emplace_back(idx.k, c);
    table_[idx.j * n + idx.i].emplace_back(idx.k, -c);
  }
}

LieAlgebra LieAlgebra::with_weights(std::optional<std::vector<int>> weights) const {
  return LieAlgebra(tensor_, labels_, std::move(weights));
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(StructureTensor(n)); }

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw InputError("bracket: coordinate length mismatch");
  Vec out = zero_vec(n);
  for (const auto& [idx, c] : g.tensor().entries()) {
    const Scalar w = x[idx.i] * y[idx.j] - x[idx.j] * y[idx.i];
    if (sgn(w) != 0) out[idx.k] += c * w;
  }
  return out;
}

Mat ad_matrix(const LieAlgebra& g, const Vec& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw InputError("ad_matrix: coordinate length mismatch");
  Mat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t col = 0; col < n; ++col)
      for (const auto& [k, c] : g.basis_bracket(i, col)) a(k, col) += x[i] * c;
  }
  return a;
}

namespace {

// Accumulates [[Xa,Xb],Xc] into acc.
void add_double_bracket(const LieAlgebra& g, std::size_t a, std::size_t b, std::size_t c,
                        Vec& acc) {
  for (const auto& [l, coef] : g.basis_bracket(a, b))
    for (const auto& [m, inner] : g.basis_bracket(l, c)) acc[m] += coef * inner;
}

}  // namespace

std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<JacobiDefect> defects;
  Vec acc = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (g.basis_bracket(i, j).empty() && g.basis_bracket(j, k).empty() &&
            g.basis_bracket(k, i).empty())
          continue;
        std::fill(acc.begin(), acc.end(), Scalar(0));
        add_double_bracket(g, i, j, k, acc);
        add_double_bracket(g, j, k, i, acc);
        add_double_bracket(g, k, i, j, acc);
        if (!is_zero(acc)) defects.push_back({i, j, k, acc});
      }
  return defects;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const std::size_t n1 = g1.dim();
  StructureTensor t(n1 + g2.dim());
  for (const auto& [idx, c] : g1.tensor().entries()) t.add(idx.i, idx.j, idx.k, c);
  for (const auto& [idx, c] : g2.tensor().entries()) t.add(idx.i + n1, idx.j + n1, idx.k + n1, c);
  std::vector<std::string> labels = g1.labels();
  for (const auto& l : g2.labels()) labels.push_back(l + "'");
  std::optional<std::vector<int>> weights;
  if (g1.weights() && g2.weights()) {
    weights = *g1.weights();
    weights->insert(weights->end(), g2.weights()->begin(), g2.weights()->end());
  }
  // Labels may collide after concatenation; fall back to the defaults then.
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) labels.clear();
  return LieAlgebra(std::move(t), std::move(labels), std::move(weights));
}

LieAlgebra central_quotient(const LieAlgebra& g, const Vec& z) {
  const std::size_t n = g.dim();
  if (z.size() != n) throw InputError("central_quotient: coordinate length mismatch");
  if (is_zero(z)) throw InputError("central_quotient: quotient element is zero");
  if (!ad_matrix(g, z).is_zero()) throw PreconditionError("central_quotient: element is not central");

  std::size_t pivot = 0;
  while (sgn(z[pivot]) == 0) ++pivot;
  const bool basis_multiple =
      std::count_if(z.begin(), z.end(), [](const Scalar& s) { return sgn(s) != 0; }) == 1;

  // X_pivot == -(1/z_pivot) * sum_{i != pivot} z_i X_i modulo z.
  auto new_index = [pivot](std::size_t k) { return k < pivot ? k : k - 1; };
  StructureTensor t(n - 1);
  for (const auto& [idx, c] : g.tensor().entries()) {
    if (idx.i == pivot || idx.j == pivot) continue;  // X_pivot is not part of the quotient basis
    if (idx.k != pivot) {
      t.add(new_index(idx.i), new_index(idx.j), new_index(idx.k), c);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pivot || sgn(z[k]) == 0) continue;
      t.add(new_index(idx.i), new_index(idx.j), new_index(k), -c * z[k] / z[pivot]);
    }
  }
  std::vector<std::string> labels = g.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pivot));
  std::optional<std::vector<int>> weights;
  if (basis_multiple && g.weights()) {
    weights = *g.weights();
    weights->erase(weights->begin() + static_cast<std::ptrdiff_t>(pivot));
  }
  return LieAlgebra(std::move(t), std::move(labels), std::move(weights));
}

LieAlgebra change_of_basis(const LieAlgebra& g, const Mat& p) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("change_of_basis: matrix has the wrong shape");
  const Mat inv = inverse(p);
  std::vector<Vec> cols(n);
  for (std::size_t a = 0; a < n; ++a) cols[a] = p.column(a);
  StructureTensor t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec img = inv.apply(bracket(g, cols[a], cols[b]));
      for (std::size_t k = 0; k < n; ++k) t.add(a, b, k, img[k]);
    }
  return LieAlgebra(std::move(t));
}

LieAlgebra relabel(const LieAlgebra& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.dim();
  if (order.size() != n) throw InputError("relabel: permutation has the wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (order[r] >= n || position[order[r]] != n) throw InputError("relabel: not a permutation");
    position[order[r]] = r;
  }
  StructureTensor t(n);
  for (const auto& [idx, c] : g.tensor().entries())
    t.add(position[idx.i], position[idx.j], position[idx.k], c);
  std::vector<std::string> labels(n);
  for (std::size_t r = 0; r < n; ++r) labels[r] = g.labels()[order[r]];
  std::optional<std::vector<int>> weights;
  if (g.weights()) {
    weights.emplace(n);
    for (std::size_t r = 0; r < n; ++r) (*weights)[r] = (*g.weights())[order[r]];
  }
  return LieAlgebra(std::move(t), std::move(labels), std::move(weights));
}

std::string to_json(const LieAlgebra& g) {
  nlohmann::ordered_json doc;
  doc["dim"] = g.dim();
  doc["labels"] = g.labels();
  auto brackets = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : g.tensor().entries()) {
    nlohmann::ordered_json b;
    b["i"] = idx.i + 1;
    b["j"] = idx.j + 1;
    b["k"] = idx.k + 1;
    b["c"] = to_string(c);
    brackets.push_back(std::move(b));
  }
  doc["brackets"] = std::move(brackets);
  if (g.weights()) doc["weights"] = *g.weights();
  return doc.dump(2);
}

LieAlgebra from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("dim").get<long long>();
    if (n < 0) throw InputError("dim must be non-negative");
    const auto dim = static_cast<std::size_t>(n);
    StructureTensor t(dim);
    std::map<BracketIndex, bool> seen;
    for (const auto& b : doc.value("brackets", nlohmann::json::array())) {
      const auto i = b.at("i").get<long long>();
      const auto j = b.at("j").get<long long>();
      const auto k = b.at("k").get<long long>();
      if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
        throw InputError("bracket index out of 1.." + std::to_string(n));
      if (i >= j) throw InputError("brackets must be listed with i < j");
      const BracketIndex key{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                             static_cast<std::size_t>(k - 1)};
      if (seen[key]) throw InputError("duplicate bracket entry");
      seen[key] = true;
      const auto& c = b.at("c");
      const Scalar value = c.is_string() ? parse_scalar(c.get<std::string>())
                                         : Scalar(mpz_class(std::to_string(c.get<long long>())));
      t.add(key.i, key.j, key.k, value);
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    std::optional<std::vector<int>> weights;
    if (doc.contains("weights") && !doc.at("weights").is_null()) {
      weights = doc.at("weights").get<std::vector<int>>();
      if (std::any_of(weights->begin(), weights->end(), [](int w) { return w <= 0; }))
        throw InputError("weights must be positive");
    }
    return LieAlgebra(std::move(t), std::move(labels), std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra JSON: ") + e.what());
  }
}

}  // namespace nilgraded
