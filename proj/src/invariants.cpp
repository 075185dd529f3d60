#include "nilgraded/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nilgraded/errors.hpp"

namespace nilgraded {

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> d;
  d.reserve(stages.size());
  for (const auto& s : stages) d.push_back(s.size());
  return d;
}

namespace {

// [X_a, v] for a basis index a.
Vec bracket_basis_with(const LieAlgebra& g, std::size_t a, const Vec& v) {
  Vec out = zero_vec(g.dim());
  for (std::size_t b = 0; b < g.dim(); ++b) {
    if (sgn(v[b]) == 0) continue;
    for (const auto& [k, c] : g.basis_bracket(a, b)) out[k] += c * v[b];
  }
  return out;
}

std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i));
  return basis;
}

std::vector<Vec> derived_algebra(const LieAlgebra& g) {
  std::vector<Vec> images;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      const auto& br = g.basis_bracket(a, b);
      if (br.empty()) continue;
      Vec v = zero_vec(g.dim());
      for (const auto& [k, c] : br) v[k] = c;
      images.push_back(std::move(v));
    }
  return span_basis(g.dim(), images);
}

// Greedy complement: members of `candidates`, in order, independent of
// `base` and of each other.
std::vector<Vec> greedy_complement(std::size_t n, const std::vector<Vec>& base,
                                   const std::vector<Vec>& candidates) {
  std::vector<Vec> span = base;
  std::size_t r = span_rank(n, span);
  std::vector<Vec> chosen;
  for (const auto& v : candidates) {
    span.push_back(v);
    const std::size_t r2 = span_rank(n, span);
    if (r2 > r) {
      chosen.push_back(v);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  return chosen;
}

// Reproducible small rationals, independent of the standard library's
// distribution implementations.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

  Scalar next() {
    const auto num = static_cast<long>(gen_() % 7) + 1;
    const auto den = static_cast<long>(gen_() % 3) + 1;
    Scalar q(gen_() % 2 == 0 ? num : -num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

Filtration lower_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Filtration f;
  f.stages.push_back(standard_basis(n));
  while (!f.stages.back().empty()) {
    std::vector<Vec> images;
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& v : f.stages.back()) {
        Vec w = bracket_basis_with(g, a, v);
        if (!is_zero(w)) images.push_back(std::move(w));
      }
    auto next = span_basis(n, images);
    if (next.size() == f.stages.back().size())
      throw NotNilpotentError("lower central series stabilises at dimension " +
                              std::to_string(next.size()));
    f.stages.push_back(std::move(next));
  }
  return f;
}

std::size_t nilindex(const LieAlgebra& g) { return lower_central_series(g).stages.size() - 1; }

std::vector<Vec> center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Mat stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : g.basis_bracket(i, j)) stacked(j * n + k, i) = c;
  return kernel_basis(stacked);
}

std::size_t CharacteristicSequence::total() const {
  std::size_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::string CharacteristicSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ')';
  return out.str();
}

CharacteristicSequence jordan_type(const Mat& a) {
  const std::size_t n = a.rows();
  // ranks[k] = rank(A^k), computed as dim A(A^{k-1} V).
  std::vector<std::size_t> ranks{n};
  std::vector<Vec> image = standard_basis(n);
  while (ranks.back() > 0) {
    std::vector<Vec> next;
    next.reserve(image.size());
    for (const auto& v : image) next.push_back(a.apply(v));
    image = span_basis(n, next);
    if (image.size() == ranks.back()) throw NotNilpotentError("operator is not nilpotent");
    ranks.push_back(image.size());
  }
  CharacteristicSequence cs;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    cs.parts.insert(cs.parts.end(), at_least_k - at_least_k1, k);
  }
  return cs;
}

CharacteristicSequence char_seq_of(const LieAlgebra& g, const Vec& x) {
  return jordan_type(ad_matrix(g, x));
}

std::vector<Vec> degree_one_generators(const LieAlgebra& g) {
  return greedy_complement(g.dim(), derived_algebra(g), standard_basis(g.dim()));
}

CharacteristicResult characteristic_sequence(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  if (n == 0) throw InputError("characteristic sequence of the zero algebra");
  const auto derived = derived_algebra(g);
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    if (!in_span(n, derived, e)) candidates.push_back(std::move(e));
  }
  const auto generators = greedy_complement(n, derived, standard_basis(n));
  RationalSampler sampler(seed);
  for (std::size_t s = 0; s < kCharacteristicSamples && !generators.empty(); ++s) {
    Vec x = zero_vec(n);
    for (const auto& gen : generators) {
      const Scalar c = sampler.next();
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(gen[i]) != 0) x[i] += c * gen[i];
    }
    candidates.push_back(std::move(x));
  }
  CharacteristicResult best;
  for (const auto& x : candidates) {
    auto cs = char_seq_of(g, x);
    ++best.candidates_examined;
    if (best.witness.empty() || cs > best.sequence) {
      best.sequence = std::move(cs);
      best.witness = x;
    }
  }
  return best;
}

bool is_linear(const CharacteristicSequence& cs) {
  if (cs.parts.empty() || cs.parts.front() < 2) return false;
  return std::all_of(cs.parts.begin() + 1, cs.parts.end(), [](std::size_t p) { return p == 1; });
}

GradedAlgebra associated_graded(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Filtration f = lower_central_series(g);
  std::vector<Vec> basis;
  std::vector<int> weights;
  for (std::size_t i = 1; i < f.stages.size(); ++i) {
    for (auto& v : greedy_complement(n, f.stages[i], f.stages[i - 1])) {
      basis.push_back(std::move(v));
      weights.push_back(static_cast<int>(i));
    }
  }
  if (basis.size() != n) throw InvariantViolation("adapted basis has the wrong size");
  const Mat to_adapted = inverse(Mat::from_columns(n, basis));
  StructureTensor t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec coords = to_adapted.apply(bracket(g, basis[a], basis[b]));
      for (std::size_t k = 0; k < n; ++k)
        if (weights[k] == weights[a] + weights[b]) t.add(a, b, k, coords[k]);
    }
  return GradedAlgebra{LieAlgebra(std::move(t), {}, weights), weights, std::move(basis)};
}

CertificateResult check_graded(const LieAlgebra& g, const std::vector<int>& weights) {
  const std::size_t n = g.dim();
  if (weights.size() != n)
    return {false, "expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size())};
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] <= 0) return {false, "weight of X" + std::to_string(i + 1) + " is not positive"};
  for (const auto& [idx, c] : g.tensor().entries()) {
    if (weights[idx.k] != weights[idx.i] + weights[idx.j]) {
      return {false, "[X" + std::to_string(idx.i + 1) + ",X" + std::to_string(idx.j + 1) + "] has a X" +
                         std::to_string(idx.k + 1) + " component but " + std::to_string(weights[idx.i]) +
                         "+" + std::to_string(weights[idx.j]) + " != " + std::to_string(weights[idx.k])};
    }
  }
  std::vector<std::size_t> dims;
  try {
    dims = lower_central_series(g).dims();
  } catch (const NotNilpotentError&) {
    return {false, "algebra is not nilpotent"};
  }
  const int top = std::max(*std::max_element(weights.begin(), weights.end()),
                           static_cast<int>(dims.size()) - 1);
  for (int w = 1; w <= top; ++w) {
    const auto slice = static_cast<std::size_t>(std::count(weights.begin(), weights.end(), w));
    const std::size_t upper = static_cast<std::size_t>(w - 1) < dims.size() ? dims[w - 1] : 0;
    const std::size_t lower = static_cast<std::size_t>(w) < dims.size() ? dims[w] : 0;
    if (slice != upper - lower) {
      return {false, "weight " + std::to_string(w) + " has " + std::to_string(slice) +
                         " basis elements but dim C^" + std::to_string(w - 1) + "/C^" +
                         std::to_string(w) + " = " + std::to_string(upper - lower)};
    }
  }
  return {true, {}};
}

bool graded_certificate(const LieAlgebra& g, const std::vector<int>& weights) {
  return check_graded(g, weights).ok;
}

bool has_abelian_direct_factor(const LieAlgebra& g) {
  const auto derived = derived_algebra(g);
  for (const auto& z : center(g))
    if (!in_span(g.dim(), derived, z)) return true;
  return false;
}

}  // namespace nilgraded
