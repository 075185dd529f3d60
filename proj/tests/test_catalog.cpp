#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nilgraded/errors.hpp"
#include "nilgraded/invariants.hpp"
#include "nilgraded/mcdsl.hpp"

using namespace nilgraded;
using namespace testutil;

namespace {

using Parts = std::vector<std::size_t>;

std::string param_error(const char* id) {
  try {
    build_model(parse_model_id(id));
  } catch (const ParameterError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> ids(const std::vector<ModelId>& v) {
  std::vector<std::string> out;
  for (const auto& id : v) out.push_back(id.to_string());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("model ids") {
  for (const char* text : {"L(7;1,3)", "Q(4;)", "D(5;1,2)", "E(4;1)", "VL(9)", "VQ(5)"})
    CHECK(parse_model_id(text).to_string() == text);
  CHECK(parse_model_id(" L( 7 ; 1 , 3 ) ").to_string() == "L(7;1,3)");
  CHECK(parse_model_id("L(7)").to_string() == "L(7;)");
  for (const char* bad : {"", "L", "X(7;1)", "L(7;1,)", "L(;1)", "VL(9;1)", "L(7;a)", "L(7;1", "L(-7;)"})
    CHECK_THROWS_AS(parse_model_id(bad), InputError);
}

TEST_CASE("build examples") {
  const LieAlgebra l71 = model("L(7;1)");
  CHECK(l71.dim() == 8);
  CHECK(l71.tensor().coeff(1, 2, 7) != 0);
  for (std::size_t i = 2; i < 7; ++i) CHECK(l71.tensor().coeff(0, i - 1, i) != 0);
  CHECK(*l71.weights() == std::vector<int>{1, 1, 2, 3, 4, 5, 6, 3});

  const LieAlgebra q6 = model("VQ(3)");
  CHECK(q6.dim() == 6);
  CHECK(characteristic_sequence(q6).sequence.parts == Parts{5, 1});

  CHECK(param_error("L(6;1)").find("n >= 7") != std::string::npos);
}

TEST_CASE("parameter bounds") {
  CHECK(param_error("L(7;2,1)").find("strictly increasing") != std::string::npos);
  CHECK(param_error("L(7;1,1)").find("strictly increasing") != std::string::npos);
  CHECK(param_error("L(8;0)").find("t_1 >= 1") != std::string::npos);
  CHECK(param_error("L(7;3)").find("t_p <= 2") != std::string::npos);
  CHECK(param_error("L(8;3)").empty());
  CHECK(param_error("Q(2;)").find("m >= 3") != std::string::npos);
  CHECK(param_error("Q(4;3)").empty());
  CHECK(param_error("Q(4;4)").find("t_p <= 3") != std::string::npos);
  CHECK(param_error("D(3;)").find("m >= 4") != std::string::npos);
  CHECK(param_error("D(4;1)").empty());
  CHECK(param_error("D(4;2)").find("t_p <= 1") != std::string::npos);
  CHECK(param_error("E(5;3)").find("t_p <= 2") != std::string::npos);
  CHECK(param_error("VL(2)").find("n >= 3") != std::string::npos);
  CHECK(param_error("VQ(2)").find("m >= 3") != std::string::npos);
  CHECK_NOTHROW(validate(parse_model_id("L(7;3)"), {Correction::LTupleBound}));
}

TEST_CASE("structure equations expanded by hand") {
  CHECK(render_mc(model("D(4;)")) ==
        "n=8; d w3 = 1 w1^w2; d w4 = 1 w1^w3; d w5 = 1 w1^w4; d w6 = 1 w1^w5 + 1 w2^w5 - 1 w3^w4; "
        "d w7 = 1 w1^w6 + 2 w2^w6 - 2 w2^w8 - 1 w3^w5; d w8 = 1 w2^w5 - 1 w3^w4");
  CHECK(render_mc(model("E(4;)")) ==
        "n=9; d w3 = 1 w1^w2; d w4 = 1 w1^w3; d w5 = 1 w1^w4; d w6 = 1 w1^w5 + 1 w2^w5 - 1 w3^w4; "
        "d w7 = 1 w1^w6 + 2 w2^w6 - 2 w2^w9 - 1 w3^w5; d w8 = 1 w1^w7 + 2 w3^w6 - 2 w3^w9 - 3 w4^w5; "
        "d w9 = 1 w2^w5 - 1 w3^w4");
  CHECK(render_mc(model("Q(3;1)")) ==
        "n=7; d w3 = 1 w1^w2; d w4 = 1 w1^w3; d w5 = 1 w1^w4; d w6 = 1 w1^w5 + 1 w2^w5 - 1 w3^w4; "
        "d w7 = 1 w2^w3");
  CHECK(render_mc(model("L(8;3)")) ==
        "n=9; d w3 = 1 w1^w2; d w4 = 1 w1^w3; d w5 = 1 w1^w4; d w6 = 1 w1^w5; d w7 = 1 w1^w6; d w8 = 1 w1^w7; "
        "d w9 = 1 w2^w7 - 1 w3^w6 + 1 w4^w5");
  CHECK(render_mc(model("VL(4)")) == "n=4; d w3 = -1 w1^w2; d w4 = -1 w1^w3");
}

TEST_CASE("canonical weights") {
  CHECK(*model("D(4;)").weights() == std::vector<int>{1, 1, 2, 3, 4, 5, 6, 5});
  CHECK(*model("E(4;)").weights() == std::vector<int>{1, 1, 2, 3, 4, 5, 6, 7, 5});
  CHECK(*model("Q(4;1,3)").weights() == std::vector<int>{1, 1, 2, 3, 4, 5, 6, 7, 3, 7});
  std::string reason;
  CHECK_FALSE(derive_weights(parse_mc_system("n=4; d w3 = w1^w2; d w4 = w1^w3 + w1^w2"), &reason));
  CHECK(reason.find("dw4 mixes") != std::string::npos);
  CHECK_FALSE(derive_weights(parse_mc_system("n=3; d w2 = w1^w3; d w3 = w1^w2"), &reason));
  CHECK(reason.find("not determined") != std::string::npos);
}

TEST_CASE("expected invariants") {
  auto row = [](const char* id) {
    const auto e = expected_invariants(parse_model_id(id));
    return std::make_pair(e.dim, e.sequence.parts);
  };
  CHECK(row("L(7;1)") == std::make_pair(std::size_t{8}, Parts{6, 1, 1}));
  CHECK(row("Q(3;1)") == std::make_pair(std::size_t{7}, Parts{5, 1, 1}));
  CHECK(row("D(4;)") == std::make_pair(std::size_t{8}, Parts{6, 1, 1}));
  CHECK(row("E(4;1)") == std::make_pair(std::size_t{10}, Parts{7, 1, 1, 1}));
  CHECK(row("VL(9)") == std::make_pair(std::size_t{9}, Parts{8, 1}));
  CHECK(row("VQ(5)") == std::make_pair(std::size_t{10}, Parts{9, 1}));
  CHECK_THROWS_AS(expected_invariants(parse_model_id("L(7;3)")), ParameterError);
}

TEST_CASE("models match their table rows on the small grid") {
  for (const auto& id : model_grid(12)) {
    CAPTURE(id.to_string());
    const LieAlgebra g = build_model(id);
    const auto e = expected_invariants(id);
    CHECK(g.dim() == e.dim);
    CHECK(model_dimension(id) == e.dim);
    CHECK(characteristic_sequence(g).sequence == e.sequence);
    CHECK(dense_law(g).jacobi_failures().empty());
  }
}

TEST_CASE("enumeration") {
  const auto eight = ids(enumerate_models(8));
  for (const char* id : {"L(7;1)", "L(7;2)", "Q(3;1,2)", "VQ(4)", "VL(8)", "D(4;)", "L(8;)", "Q(4;)"})
    CHECK(contains(eight, id));
  CHECK_FALSE(contains(eight, "L(7;3)"));
  CHECK(eight.size() == 8);
  CHECK(ids(enumerate_models(3)) == std::vector<std::string>{"VL(3)"});

  for (int d = 3; d <= 24; ++d) {
    CAPTURE(d);
    const auto models = enumerate_models(static_cast<std::size_t>(d));
    CHECK(models.size() == oracle::census(d));
    CHECK(models.size() == oracle::kCensus3to24[static_cast<std::size_t>(d - 3)]);
    CHECK(std::is_sorted(models.begin(), models.end()));
    CHECK(std::set<ModelId>(models.begin(), models.end()).size() == models.size());
    for (const auto& id : models) {
      CHECK(model_dimension(id) == static_cast<std::size_t>(d));
      CHECK_NOTHROW(validate(id));
    }
    CHECK(ids(enumerate_models(static_cast<std::size_t>(d))) == ids(models));
  }
  CHECK(model_grid(16).size() == 286);
}

TEST_CASE("filiform tags and tuple helpers") {
  CHECK(is_filiform(parse_model_id("VL(9)")));
  CHECK(is_filiform(parse_model_id("L(9;)")));
  CHECK(is_filiform(parse_model_id("Q(4;)")));
  CHECK_FALSE(is_filiform(parse_model_id("D(4;)")));
  CHECK_FALSE(is_filiform(parse_model_id("L(9;1)")));
  CHECK(last_extension_generator(parse_model_id("L(9;1,3)")) == std::optional<std::size_t>{10});
  CHECK(last_extension_generator(parse_model_id("E(5;1)")) == std::optional<std::size_t>{11});
  CHECK_FALSE(last_extension_generator(parse_model_id("E(5;)")).has_value());
  CHECK(without_last_parameter(parse_model_id("D(6;1,3)")).to_string() == "D(6;1)");
  CHECK_THROWS_AS(without_last_parameter(parse_model_id("D(6;)")), ParameterError);

  // The filiform L(n;) and VL(n) coincide up to the sign of X1.
  const LieAlgebra a = model("L(9;)"), b = model("VL(9)");
  Mat flip = Mat::identity(9);
  flip(0, 0) = -1;
  CHECK(change_of_basis(a, flip) == b);
}

TEST_CASE("every correction is backed by a reproducible failure") {
  const auto& list = corrections();
  CHECK(list.size() == 9);
  std::set<std::string> keys;
  for (const auto& c : list) {
    keys.insert(c.key);
    const auto ev = correction_evidence(c);
    CAPTURE(c.key);
    if (!c.revertible) {
      CHECK_FALSE(ev.computable);
      continue;
    }
    REQUIRE(c.witness.has_value());
    CHECK(ev.summary().find("no defect detected") == std::string::npos);
    // The adopted form of the witness, where admissible, is clean.
    if (c.id != Correction::LTupleBound) CHECK(jacobi_defects(build_model(*c.witness)).empty());
  }
  CHECK(keys.size() == list.size());
}

TEST_CASE("correction evidence details") {
  auto evidence = [](Correction id) {
    for (const auto& c : corrections())
      if (c.id == id) return correction_evidence(c);
    FAIL("missing correction");
    return CorrectionEvidence{};
  };
  const auto e = evidence(Correction::ETopSigns);
  CHECK(e.jacobi_defects == 3);
  CHECK(e.first_defect == "(X1,X2,X6)");

  const auto l = evidence(Correction::LTupleBound);
  CHECK(l.jacobi_defects == 0);
  CHECK(l.sequence == "dim 8, (7,1)");
  CHECK(l.expected == "dim 8, (6,1,1)");

  CHECK_FALSE(evidence(Correction::VergneQPairRange).nilpotent);
  CHECK_FALSE(evidence(Correction::DSecondIndices).homogeneous);
  CHECK(evidence(Correction::DExtensionSum).split);
  CHECK(evidence(Correction::QExtensionSum).jacobi_defects > 0);
  CHECK_FALSE(evidence(Correction::QExtensionTarget).issues.empty());
  CHECK(evidence(Correction::VergneLChainRange).issues.front().find("repeats") != std::string::npos);
}

TEST_CASE("drafts with reverted corrections") {
  const ModelDraft d = draft_model(parse_model_id("VL(5)"), {Correction::VergneLChainRange});
  CHECK(d.system.dim == 6);
  CHECK(d.issues.size() == 1);
  CHECK(draft_model(parse_model_id("VL(5)")).issues.empty());
  CHECK(draft_model(parse_model_id("Q(3;1)"), {Correction::QExtensionTarget}).issues.size() == 1);
}

TEST_CASE("E modulo X2m is D") {
  for (int m = 4; m <= 7; ++m) {
    for (const std::vector<int>& t : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{1, 2}}) {
      if (!t.empty() && t.back() > m - 3) continue;
      const ModelId e{Family::E, m, t}, d{Family::D, m, t};
      CAPTURE(e.to_string());
      const LieAlgebra g = build_model(e);
      const auto k = static_cast<std::size_t>(2 * m);
      CHECK(central_quotient(g, unit_vec(g.dim(), k - 1)) == build_model(d));
    }
  }
}
