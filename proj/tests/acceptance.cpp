// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "nilgraded/cohomology.hpp"
#include "nilgraded/invariants.hpp"
#include "nilgraded/mcdsl.hpp"
#include "random_systems.hpp"

using namespace nilgraded;
using namespace testutil;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) failure = what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// Summary-table rows: leading part, then a run of ones.
ExpectedInvariants table_row(const ModelId& id) {
  const auto p = id.tuple.size();
  const auto m = static_cast<std::size_t>(id.size);
  std::size_t dim = 0, lead = 0, ones = 0;
  switch (id.family) {
    case Family::L: dim = m + p, lead = m - 1, ones = p + 1; break;
    case Family::Q: dim = 2 * m + p, lead = 2 * m - 1, ones = p + 1; break;
    case Family::D: dim = 2 * m + p, lead = 2 * m - 2, ones = p + 2; break;
    case Family::E: dim = 2 * m + 1 + p, lead = 2 * m - 1, ones = p + 2; break;
    case Family::VergneL: dim = m, lead = m - 1, ones = 1; break;
    case Family::VergneQ: dim = 2 * m, lead = 2 * m - 1, ones = 1; break;
  }
  ExpectedInvariants e;
  e.dim = dim;
  e.sequence.parts.assign(ones + 1, 1);
  e.sequence.parts.front() = lead;
  return e;
}

std::vector<std::size_t> by_weight(const std::vector<int>& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  return order;
}

Outcome jacobi_validity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = model_grid(24);
  for (const auto& id : grid) o.require(jacobi_defects(build_model(id)).empty(), id.to_string());
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + fmt(t));
  std::size_t recorded = 0;
  for (const auto& c : corrections()) {
    const auto ev = correction_evidence(c);
    if (!ev.computable) continue;
    ++recorded;
    const bool fails = !ev.issues.empty() || ev.jacobi_defects > 0 || !ev.homogeneous || !ev.nilpotent || ev.split ||
                       ev.sequence != ev.expected;
    o.require(fails, "correction " + c.key + " has no reproducible failure");
  }
  o.detail = std::to_string(grid.size()) + " models up to dim 24 in " + fmt(t) + ", " +
             std::to_string(corrections().size()) + " corrections (" + std::to_string(recorded) + " reproduced)";
  return o;
}

struct GridOutcomes {
  Outcome table, graded, nonsplit, quotient, round_trip;
};

GridOutcomes model_checks() {
  GridOutcomes r;
  const auto grid = model_grid(16);
  std::size_t with_tuple = 0;
  for (const auto& id : grid) {
    const std::string name = id.to_string();
    const LieAlgebra g = build_model(id);
    const auto cs = characteristic_sequence(g).sequence;
    const auto row = table_row(id);
    r.table.require(g.dim() == row.dim && cs == row.sequence, name);
    r.table.require(expected_invariants(id).dim == row.dim && expected_invariants(id).sequence == row.sequence,
                    name + " table");

    const auto& w = *g.weights();
    r.graded.require(graded_certificate(g, w), name);
    r.graded.require(associated_graded(g).algebra == relabel(g, by_weight(w)), name + " gr");

    r.nonsplit.require(!has_abelian_direct_factor(g), name);
    r.nonsplit.require(is_linear(cs), name + " linear");
    r.nonsplit.require(cs.parts.front() == nilindex(g), name + " nilindex");

    if (const auto last = last_extension_generator(id)) {
      ++with_tuple;
      const LieAlgebra q = central_quotient(g, unit_vec(g.dim(), *last));
      r.quotient.require(q == build_model(without_last_parameter(id)), name);
      r.quotient.require(nilindex(q) == nilindex(g), name + " nilindex");
      r.quotient.require(is_linear(characteristic_sequence(q).sequence), name + " linear");
    }

    r.round_trip.require(parse_mc(render_mc(g)) == g, name);
  }
  const std::string n = std::to_string(grid.size()) + " models up to dim 16";
  r.table.detail = n;
  r.graded.detail = n;
  r.nonsplit.detail = n;
  r.quotient.detail = std::to_string(with_tuple) + " models with p >= 1 up to dim 16";
  r.round_trip.detail = n;
  return r;
}

Outcome split_extensions() {
  Outcome o;
  std::size_t tried = 0;
  const auto grid = model_grid(10);
  for (const auto& id : grid) {
    const LieAlgebra split = direct_sum(build_model(id), abelian(1).with_weights(std::vector<int>{1}));
    const auto search = search_graded_linear_extensions(split, *split.weights());
    tried += search.cocycles_tried;
    o.require(search.candidates.empty(), id.to_string());
  }
  o.detail = std::to_string(grid.size()) + " models up to dim 10, " + std::to_string(tried) +
             " cocycles tried, seed " + std::to_string(kDefaultSeed);
  return o;
}

// Cochain coordinates over (12,13,23) and (12,13,14,23,24,34), expanded by
// hand for [X1,X2] = X3 (and [X1,X3] = X4).
std::size_t hand_h2(const oracle::Dense& conditions, const oracle::Dense& coboundaries, std::size_t pairs) {
  return pairs - oracle::rank_by_minors(conditions) - oracle::rank_by_minors(coboundaries);
}

Outcome cohomology() {
  Outcome o;
  const auto grid = model_grid(10);
  std::size_t extensions = 0;
  for (const auto& id : grid) {
    const std::string name = id.to_string();
    const LieAlgebra g = build_model(id);
    const std::size_t n = g.dim();
    const auto s = cocycle_spaces(g);
    std::vector<Vec> z;
    for (const auto& c : s.z2_basis) z.push_back(c.to_vec(n));
    for (const auto& b : s.b2_basis)
      o.require(!cocycle_violation(g, b) && in_span(pair_count(n), z, b.to_vec(n)), name + " B2 in Z2");
    o.require(s.h2_dim == s.z2_basis.size() - s.b2_basis.size(), name + " h2");
    for (const auto& c : s.z2_basis) {
      ++extensions;
      const LieAlgebra e = central_extension(g, c);
      o.require(jacobi_defects(e).empty(), name + " extension");
      o.require(central_quotient(e, unit_vec(n + 1, n)) == g, name + " quotient");
    }
  }
  const std::size_t h3 = hand_h2({{0, 0, 0}}, {{-1, 0, 0}}, 3);
  const std::size_t h4 = hand_h2({{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
                                 {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}}, 6);
  o.require(h3 == 2 && cocycle_spaces(chain(3)).h2_dim == h3, "h2(L3)");
  o.require(h4 == 2 && cocycle_spaces(chain(4)).h2_dim == h4, "h2(L4)");
  o.detail = std::to_string(grid.size()) + " models up to dim 10, " + std::to_string(extensions) +
             " extensions, h2(L3) = " + std::to_string(h3) + ", h2(L4) = " + std::to_string(h4);
  return o;
}

std::string listing(std::size_t d) {
  std::ostringstream out;
  for (const auto& id : enumerate_models(d)) out << id.to_string() << '\n';
  return out.str();
}

Outcome finiteness() {
  Outcome o;
  std::ostringstream counts;
  for (int d = 7; d <= 14; ++d) {
    const auto n = enumerate_models(static_cast<std::size_t>(d)).size();
    o.require(n == oracle::census(d), "dim " + std::to_string(d));
    o.require(listing(static_cast<std::size_t>(d)) == listing(static_cast<std::size_t>(d)), "stability");
    counts << (d > 7 ? "," : "") << n;
  }
  o.detail = "counts for dims 7..14: " + counts.str();
  return o;
}

void closure_agreement(Outcome& o) {
  std::mt19937_64 gen(kRandomSystemSeed);
  int lie = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const MCSystem s = random_system(gen, 6);
    const bool closed = closure_defects(s).empty();
    o.require(closed == jacobi_defects(to_algebra(s)).empty(), "random system " + std::to_string(trial));
    lie += closed;
  }
  o.detail += ", 100 random systems (" + std::to_string(lie) + " Lie, seed " + std::to_string(kRandomSystemSeed) + ")";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  GridOutcomes grid;
  bool grid_done = false;
  auto from_grid = [&](Outcome GridOutcomes::*member) {
    return [&, member] {
      if (!grid_done) grid = model_checks(), grid_done = true;
      return grid.*member;
    };
  };
  criteria.emplace_back("jacobi validity", jacobi_validity);
  criteria.emplace_back("table reproduction", from_grid(&GridOutcomes::table));
  criteria.emplace_back("natural grading", from_grid(&GridOutcomes::graded));
  criteria.emplace_back("nonsplit and linear", from_grid(&GridOutcomes::nonsplit));
  criteria.emplace_back("quotient coherence", from_grid(&GridOutcomes::quotient));
  criteria.emplace_back("split extensions", split_extensions);
  criteria.emplace_back("cohomology", cohomology);
  criteria.emplace_back("finiteness", finiteness);
  criteria.emplace_back("round trip", [&] {
    Outcome o = from_grid(&GridOutcomes::round_trip)();
    closure_agreement(o);
    return o;
  });

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failure = e.what();
    }
    all = all && o.ok;
    std::printf("%s %zu %s: %s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                o.ok ? "" : (" [first failure: " + o.failure + "]").c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
