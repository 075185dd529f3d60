#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "nilgraded/errors.hpp"
#include "nilgraded/invariants.hpp"
#include "nilgraded/mcdsl.hpp"

using namespace nilgraded;
using namespace testutil;

namespace {

using Parts = std::vector<std::size_t>;

Vec e(std::size_t n, std::size_t one_based) { return unit_vec(n, one_based - 1); }

std::vector<std::size_t> by_weight(const std::vector<int>& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  return order;
}

}  // namespace

TEST_CASE("lower central series") {
  CHECK(lower_central_series(chain(4)).dims() == Parts{4, 2, 1, 0});
  CHECK(lower_central_series(abelian(5)).dims() == Parts{5, 0});
  // X8 = [X2,X3] lies in C^2 but not in C^3.
  CHECK(lower_central_series(model("L(7;1)")).dims() == Parts{8, 6, 5, 3, 2, 1, 0});
  CHECK_THROWS_AS(lower_central_series(from_brackets(2, {{1, 2, 2, 1}})), NotNilpotentError);

  const Filtration f = lower_central_series(model("Q(4;1,3)"));
  for (std::size_t i = 1; i < f.stages.size(); ++i)
    for (const auto& v : f.stages[i]) CHECK(in_span(10, f.stages[i - 1], v));
}

TEST_CASE("nilindex") {
  CHECK(nilindex(abelian(3)) == 1);
  for (int n = 3; n <= 10; ++n) CHECK(nilindex(chain(n)) == static_cast<std::size_t>(n - 1));
  CHECK(nilindex(model("VQ(3)")) == 5);
}

TEST_CASE("center") {
  CHECK(center(abelian(3)).size() == 3);
  const auto z4 = center(chain(4));
  REQUIRE(z4.size() == 1);
  CHECK(in_span(4, z4, e(4, 4)));
  const auto z = center(model("L(7;1)"));
  CHECK(z.size() == 2);
  CHECK(in_span(8, z, e(8, 7)));
  CHECK(in_span(8, z, e(8, 8)));
}

TEST_CASE("char_seq_of") {
  const LieAlgebra l4 = chain(4);
  CHECK(char_seq_of(l4, e(4, 4)).parts == Parts{1, 1, 1, 1});
  CHECK(char_seq_of(l4, e(4, 1)).parts == Parts{3, 1});
  CHECK(char_seq_of(l4, e(4, 3)).parts == Parts{2, 1, 1});
  CHECK_THROWS_AS(char_seq_of(from_brackets(2, {{1, 2, 2, 1}}), e(2, 1)), NotNilpotentError);
  CHECK(char_seq_of(l4, e(4, 1)).to_string() == "(3,1)");
}

TEST_CASE("characteristic sequence") {
  const auto ab = characteristic_sequence(abelian(3));
  CHECK(ab.sequence.parts == Parts{1, 1, 1});
  CHECK(ab.witness.size() == 3);
  CHECK(characteristic_sequence(model("L(7;1)")).sequence.parts == Parts{6, 1, 1});
  CHECK(characteristic_sequence(model("D(4;)")).sequence.parts == Parts{6, 1, 1});

  const LieAlgebra g = model("E(5;1,2)");
  const auto a = characteristic_sequence(g, 1), b = characteristic_sequence(g, 1);
  CHECK(a.witness == b.witness);
  CHECK(char_seq_of(g, a.witness) == a.sequence);
  CHECK(a.candidates_examined >= kCharacteristicSamples);
}

TEST_CASE("is_linear") {
  CHECK(is_linear({{3, 1}}));
  CHECK(is_linear({{5, 1, 1}}));
  CHECK_FALSE(is_linear({{4, 2, 1}}));
  CHECK_FALSE(is_linear({{1, 1}}));
  CHECK_FALSE(is_linear({}));
}

TEST_CASE("Jordan type matches rank differences") {
  std::mt19937_64 gen(29);
  for (const char* id : {"L(8;1,3)", "Q(4;2)", "D(5;2)", "E(4;1)", "VQ(4)"}) {
    const LieAlgebra g = model(id);
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(g.dim(), gen);
      const Mat a = ad_matrix(g, x);
      const auto cs = jordan_type(a);
      CHECK(cs.total() == g.dim());
      CHECK(std::is_sorted(cs.parts.rbegin(), cs.parts.rend()));
      std::vector<std::size_t> ranks{g.dim()};
      Mat power = Mat::identity(g.dim());
      for (std::size_t k = 1; k <= g.dim() + 1; ++k) {
        power = power * a;
        ranks.push_back(rank(power));
      }
      for (std::size_t k = 1; k <= g.dim(); ++k) {
        const auto at_least = static_cast<std::size_t>(
            std::count_if(cs.parts.begin(), cs.parts.end(), [&](std::size_t p) { return p >= k; }));
        CHECK(at_least == ranks[k - 1] - ranks[k]);
      }
    }
  }
}

TEST_CASE("characteristic sequence is invariant under change of basis") {
  std::mt19937_64 gen(31);
  for (const char* id : {"L(7;1)", "Q(3;1)", "D(4;)", "E(4;)", "L(9;2,3)"}) {
    const LieAlgebra g = model(id);
    const auto cs = characteristic_sequence(g).sequence;
    for (int trial = 0; trial < 3; ++trial)
      CHECK(characteristic_sequence(change_of_basis(g, random_invertible(g.dim(), gen))).sequence == cs);
  }
}

TEST_CASE("associated graded algebra") {
  const LieAlgebra l4 = chain(4);
  const GradedAlgebra gr = associated_graded(l4);
  CHECK(gr.algebra == l4);
  CHECK(gr.weights == std::vector<int>{1, 1, 2, 3});

  // [X2,X3] = X5 has filtration weight 3 but X5 sits at weight 4.
  const LieAlgebra bent = from_brackets(5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}});
  REQUIRE(jacobi_defects(bent).empty());
  const GradedAlgebra gb = associated_graded(bent);
  CHECK(gb.algebra == chain(5));
  CHECK(lower_central_series(gb.algebra).dims() == lower_central_series(bent).dims());
  CHECK_FALSE(graded_certificate(bent, {1, 1, 2, 3, 4}));
}

TEST_CASE("graded certificate") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<int> w{1};
    for (int i = 1; i < n; ++i) w.push_back(i);
    CHECK(graded_certificate(chain(n), w));
  }
  CHECK(graded_certificate(model("L(7;1)"), {1, 1, 2, 3, 4, 5, 6, 3}));
  CHECK_FALSE(graded_certificate(chain(5), {1, 1, 1, 1, 1}));
  const auto r = check_graded(chain(5), {1, 1, 1, 1, 1});
  CHECK(r.reason.find("[X1,X2]") != std::string::npos);
  CHECK_FALSE(graded_certificate(chain(4), {1, 1, 2}));
  CHECK_FALSE(graded_certificate(chain(4), {1, 0, 1, 1}));
  // Weight additive but the slices disagree with the series.
  CHECK_FALSE(graded_certificate(abelian(2), {1, 2}));
}

TEST_CASE("certificate implies equality with the associated graded algebra") {
  for (const char* id : {"L(7;1)", "L(10;1,2,4)", "Q(4;1,3)", "D(5;1,2)", "E(5;2)", "VQ(4)"}) {
    const LieAlgebra g = model(id);
    REQUIRE(graded_certificate(g, *g.weights()));
    CHECK(associated_graded(g).algebra == relabel(g, by_weight(*g.weights())));
  }
}

TEST_CASE("split detection") {
  CHECK(has_abelian_direct_factor(direct_sum(chain(3), abelian(1))));
  CHECK(has_abelian_direct_factor(abelian(1)));
  CHECK(has_abelian_direct_factor(abelian(4)));
  CHECK_FALSE(has_abelian_direct_factor(model("L(7;1)")));
  CHECK_FALSE(has_abelian_direct_factor(chain(3)));
}

TEST_CASE("first part equals nilindex across the small grid") {
  for (const auto& id : model_grid(11)) {
    CAPTURE(id.to_string());
    const LieAlgebra g = build_model(id);
    CHECK(characteristic_sequence(g).sequence.parts.front() == nilindex(g));
  }
}
