#include "nilgraded/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nilgraded/errors.hpp"

namespace nilgraded {

namespace {

int sign_pow(int j) { return j % 2 == 0 ? 1 : -1; }

const char* family_tag(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::Q: return "Q";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::VergneL: return "VL";
    case Family::VergneQ: return "VQ";
  }
  return "?";
}

bool is_vergne(Family f) { return f == Family::VergneL || f == Family::VergneQ; }

// Transcribes 1-based terms, recording instead of rejecting anything that a
// well-formed system could not contain.
class Draft {
 public:
  explicit Draft(std::size_t dim) : result_{MCSystem(dim), {}} {}

  void term(int k, int a, int b, const Scalar& c) {
    const int n = static_cast<int>(result_.system.dim);
    const std::string where = "w" + std::to_string(a) + "^w" + std::to_string(b) + " in dw" + std::to_string(k);
    if (k < 1 || k > n || a < 1 || a > n || b < 1 || b > n) {
      result_.issues.push_back(where + " refers to an index outside 1.." + std::to_string(n));
      return;
    }
    if (a == b) {
      result_.issues.push_back(where + " repeats a form (antisymmetry forces it to vanish)");
      return;
    }
    if (a > b) result_.issues.push_back(where + " has descending indices");
    result_.system.add(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(a - 1),
                       static_cast<std::size_t>(b - 1), c);
  }

  // [X_a, X_b] = c X_k under the fixed form convention.
  void bracket(int a, int b, int k, const Scalar& c) { term(k, a, b, -c); }

  void chain(int from, int to) {
    for (int j = from; j <= to; ++j) term(j, 1, j - 1, 1);
  }

  // sum_{j=2}^{upper} sign(j) w_j ^ w_{2t+3-j} into dw_k.
  void extension_form(int k, int t, int upper, bool sign_by_summation, int fixed_sign_index) {
    for (int j = 2; j <= upper; ++j)
      term(k, j, 2 * t + 3 - j, sign_by_summation ? sign_pow(j) : sign_pow(fixed_sign_index));
  }

  ModelDraft take() { return std::move(result_); }

 private:
  ModelDraft result_;
};

bool reverted_has(const CorrectionSet& r, Correction c) { return r.count(c) != 0; }

int l_tuple_bound(int n, const CorrectionSet& reverted) {
  return reverted_has(reverted, Correction::LTupleBound) ? (n - 1) / 2 : (n - 2) / 2;
}

std::vector<std::vector<int>> increasing_tuples(int max_entry, int length) {
  std::vector<std::vector<int>> out;
  if (length < 0 || length > std::max(max_entry, 0)) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= max_entry - (length - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::string ModelId::to_string() const {
  std::ostringstream out;
  out << family_tag(family) << '(' << size;
  if (!is_vergne(family)) {
    out << ';';
    for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
  }
  out << ')';
  return out.str();
}

ModelId parse_model_id(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto open = s.find('(');
  if (open == std::string::npos || s.empty() || s.back() != ')')
    throw InputError("model id must look like L(7;1,3) or VL(9): '" + std::string(text) + "'");
  const std::string tag = s.substr(0, open);
  ModelId id;
  if (tag == "L") id.family = Family::L;
  else if (tag == "Q") id.family = Family::Q;
  else if (tag == "D") id.family = Family::D;
  else if (tag == "E") id.family = Family::E;
  else if (tag == "VL") id.family = Family::VergneL;
  else if (tag == "VQ") id.family = Family::VergneQ;
  else throw InputError("unknown model family '" + tag + "'");

  const std::string body = s.substr(open + 1, s.size() - open - 2);
  const auto semi = body.find(';');
  auto parse_int = [&](const std::string& v) {
    if (v.empty() || v.size() > 6 || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InputError("expected a positive integer in model id, got '" + v + "'");
    return std::stoi(v);
  };
  id.size = parse_int(body.substr(0, semi));
  if (semi != std::string::npos) {
    if (is_vergne(id.family)) throw InputError("Vergne models take no parameter tuple");
    std::stringstream rest(body.substr(semi + 1));
    std::string item;
    while (std::getline(rest, item, ',')) id.tuple.push_back(parse_int(item));
    if (!body.empty() && body.back() == ',') throw InputError("trailing comma in model id");
  }
  return id;
}

const std::vector<CorrectionInfo>& corrections() {
  static const std::vector<CorrectionInfo> list = {
      {Correction::VergneLChainRange, "vergne-l-range", "VL",
       "[X1,Xi] = X(i+1) for 1 <= i <= n over the basis X1..X(n+1)",
       "[X1,Xi] = X(i+1) for 2 <= i <= n-1 over X1..Xn (i = 1 is [X1,X1] and the basis is one too long)",
       true, parse_model_id("VL(5)")},
      {Correction::VergneQPairRange, "vergne-q-range", "VQ",
       "[X1,Xi] = X(i+1) for 1 <= i <= 2m-1; [Xj,X(2m+1-j)] = (-1)^j X2m for 1 <= j <= m",
       "i from 2 and j from 2 (j = 1 gives [X1,X2m] = -X2m, an eigenvector of ad X1)", true,
       parse_model_id("VQ(3)")},
      {Correction::LChainIndex, "l-chain-index", "L", "dw_j = w1 ^ w_{j-.1}", "dw_j = w1 ^ w_{j-1}",
       false, std::nullopt},
      {Correction::LTupleBound, "l-tuple-bound", "L", "t_p <= [(n-1)/2]",
       "t_p <= [(n-2)/2]; at odd n, t = (n-1)/2 puts the new generator above the nilindex and the "
       "algebra becomes filiform",
       true, parse_model_id("L(7;3)")},
      {Correction::QExtensionTarget, "q-extension-target", "Q", "dw_{2m+1+j} for 1 <= j <= p",
       "dw_{2m+j} for 1 <= j <= p (the algebra has dimension 2m+p)", true, parse_model_id("Q(3;1)")},
      {Correction::QExtensionSum, "q-extension-sum", "Q",
       "sum_{i=2}^{t_j} (-1)^j w_i ^ w_{2t_j+3-i}",
       "sum_{i=2}^{t_j+1} (-1)^i w_i ^ w_{2t_j+3-i}, the same closed form as the L family", true,
       parse_model_id("Q(4;2)")},
      {Correction::DSecondIndices, "d-second-indices", "D",
       "dw_{2m-2}, dw_{2m} use w_j ^ w_{2m-3-j}; dw_{2m-1} uses w_j ^ w_{2m-2-j}",
       "w_j ^ w_{2m-1-j} and w_j ^ w_{2m-j} respectively (weight homogeneity); the (2-m) w2 ^ w2m "
       "coefficient is kept",
       true, parse_model_id("D(4;)")},
      {Correction::DExtensionSum, "d-extension-sum", "D", "dw_{2m+i} = sum_{j=2}^{t_i-1} (-1)^j w_j ^ w_{2t_i+3-j}",
       "upper limit t_i+1 (for t_i <= 2 the sum is empty and the generator splits off)", true,
       parse_model_id("D(5;1)")},
      {Correction::ETopSigns, "e-top-signs", "E",
       "(m-2) w2 ^ w_{2m+1} in dw_{2m-1}; dw_{2m} = w1 ^ w_{2m-1} + sum_{j=3}^{m} (-1)^j (j-2)(2m-1-j)/2 "
       "w_j ^ w_{2m+1-j} + (m-2) w3 ^ w_{2m+1}",
       "(2-m) w2 ^ w_{2m+1}; sum sign (-1)^(j+1); (2-m) w3 ^ w_{2m+1}. This is the unique closed dw_{2m} "
       "with leading term w1 ^ w_{2m-1} (m >= 5), and E/<X2m> is then exactly D",
       true, parse_model_id("E(4;)")},
  };
  return list;
}

void validate(const ModelId& id, const CorrectionSet& reverted) {
  const std::string name = id.to_string();
  auto fail = [&](const std::string& what) { throw ParameterError(name + ": " + what + " violated"); };
  for (std::size_t i = 0; i < id.tuple.size(); ++i) {
    if (id.tuple[i] < 1) fail("t_1 >= 1");
    if (i > 0 && id.tuple[i] <= id.tuple[i - 1]) fail("strictly increasing tuple");
  }
  const int top = id.tuple.empty() ? 0 : id.tuple.back();
  switch (id.family) {
    case Family::L: {
      if (id.size < 7) fail("n >= 7");
      const int bound = l_tuple_bound(id.size, reverted);
      if (top > bound) fail("t_p <= " + std::to_string(bound));
      break;
    }
    case Family::Q:
      if (id.size < 3) fail("m >= 3");
      if (top > id.size - 1) fail("t_p <= " + std::to_string(id.size - 1));
      break;
    case Family::D:
    case Family::E:
      if (id.size < 4) fail("m >= 4");
      if (top > id.size - 3) fail("t_p <= " + std::to_string(id.size - 3));
      break;
    case Family::VergneL:
      if (id.size < 3) fail("n >= 3");
      if (!id.tuple.empty()) fail("empty tuple");
      break;
    case Family::VergneQ:
      if (id.size < 3) fail("m >= 3");
      if (!id.tuple.empty()) fail("empty tuple");
      break;
  }
}

std::size_t model_dimension(const ModelId& id) {
  const auto p = static_cast<int>(id.tuple.size());
  switch (id.family) {
    case Family::L: return static_cast<std::size_t>(id.size + p);
    case Family::Q:
    case Family::D: return static_cast<std::size_t>(2 * id.size + p);
    case Family::E: return static_cast<std::size_t>(2 * id.size + 1 + p);
    case Family::VergneL: return static_cast<std::size_t>(id.size);
    case Family::VergneQ: return static_cast<std::size_t>(2 * id.size);
  }
  return 0;
}

ModelDraft draft_model(const ModelId& id, const CorrectionSet& reverted) {
  validate(id, reverted);
  const int p = static_cast<int>(id.tuple.size());
  const auto& ts = id.tuple;
  auto has = [&](Correction c) { return reverted_has(reverted, c); };

  switch (id.family) {
    case Family::VergneL: {
      const int n = id.size;
      if (has(Correction::VergneLChainRange)) {
        Draft d(static_cast<std::size_t>(n + 1));
        for (int i = 1; i <= n; ++i) d.bracket(1, i, i + 1, 1);
        return d.take();
      }
      Draft d(static_cast<std::size_t>(n));
      for (int i = 2; i <= n - 1; ++i) d.bracket(1, i, i + 1, 1);
      return d.take();
    }
    case Family::VergneQ: {
      const int m = id.size;
      const int first = has(Correction::VergneQPairRange) ? 1 : 2;
      Draft d(static_cast<std::size_t>(2 * m));
      for (int i = first; i <= 2 * m - 1; ++i) d.bracket(1, i, i + 1, 1);
      for (int j = first; j <= m; ++j) d.bracket(j, 2 * m + 1 - j, 2 * m, sign_pow(j));
      return d.take();
    }
    case Family::L: {
      const int n = id.size;
      Draft d(static_cast<std::size_t>(n + p));
      d.chain(3, n);
      for (int i = 1; i <= p; ++i) d.extension_form(n + i, ts[i - 1], ts[i - 1] + 1, true, 0);
      return d.take();
    }
    case Family::Q: {
      const int m = id.size;
      Draft d(static_cast<std::size_t>(2 * m + p));
      d.chain(3, 2 * m - 1);
      d.term(2 * m, 1, 2 * m - 1, 1);
      for (int j = 2; j <= m; ++j) d.term(2 * m, j, 2 * m + 1 - j, sign_pow(j));
      const bool printed_target = has(Correction::QExtensionTarget);
      const bool printed_sum = has(Correction::QExtensionSum);
      for (int i = 1; i <= p; ++i) {
        const int t = ts[i - 1];
        const int target = printed_target ? 2 * m + 1 + i : 2 * m + i;
        d.extension_form(target, t, printed_sum ? t : t + 1, !printed_sum, i);
      }
      return d.take();
    }
    case Family::D: {
      const int m = id.size;
      const bool printed = has(Correction::DSecondIndices);
      const int shift = printed ? 2 : 0;
      Draft d(static_cast<std::size_t>(2 * m + p));
      d.chain(3, 2 * m - 3);
      d.term(2 * m - 2, 1, 2 * m - 3, 1);
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m - 2, j, 2 * m - 1 - j - shift, sign_pow(j));
      d.term(2 * m - 1, 1, 2 * m - 2, 1);
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m - 1, j, 2 * m - j - shift, sign_pow(j) * (m - j));
      d.term(2 * m - 1, 2, 2 * m, 2 - m);
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m, j, 2 * m - 1 - j - shift, sign_pow(j));
      const bool printed_sum = has(Correction::DExtensionSum);
      for (int i = 1; i <= p; ++i) {
        const int t = ts[i - 1];
        d.extension_form(2 * m + i, t, printed_sum ? t - 1 : t + 1, true, 0);
      }
      return d.take();
    }
    case Family::E: {
      const int m = id.size;
      const int s = has(Correction::ETopSigns) ? 1 : -1;
      Draft d(static_cast<std::size_t>(2 * m + 1 + p));
      d.chain(3, 2 * m - 3);
      d.term(2 * m - 2, 1, 2 * m - 3, 1);
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m - 2, j, 2 * m - 1 - j, sign_pow(j));
      d.term(2 * m - 1, 1, 2 * m - 2, 1);
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m - 1, j, 2 * m - j, sign_pow(j) * (m - j));
      d.term(2 * m - 1, 2, 2 * m + 1, s * (m - 2));
      d.term(2 * m, 1, 2 * m - 1, 1);
      for (int j = 3; j <= m; ++j)
        d.term(2 * m, j, 2 * m + 1 - j, Scalar(s * sign_pow(j) * (j - 2) * (2 * m - 1 - j), 2));
      d.term(2 * m, 3, 2 * m + 1, s * (m - 2));
      for (int j = 2; j <= m - 1; ++j) d.term(2 * m + 1, j, 2 * m - 1 - j, sign_pow(j));
      for (int i = 1; i <= p; ++i) d.extension_form(2 * m + 1 + i, ts[i - 1], ts[i - 1] + 1, true, 0);
      return d.take();
    }
  }
  throw InvariantViolation("unhandled model family");
}

std::optional<std::vector<int>> derive_weights(const MCSystem& system, std::string* reason) {
  const std::size_t n = system.dim;
  std::vector<int> w(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if (system.forms[k].empty()) w[k] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k] != 0) continue;
      const auto& terms = system.forms[k];
      if (std::any_of(terms.begin(), terms.end(), [&](const WedgeTerm& t) { return w[t.a] == 0 || w[t.b] == 0; }))
        continue;
      const int first = w[terms.front().a] + w[terms.front().b];
      for (const auto& t : terms) {
        if (w[t.a] + w[t.b] != first) {
          if (reason)
            *reason = "dw" + std::to_string(k + 1) + " mixes weight " + std::to_string(first) + " (w" +
                      std::to_string(terms.front().a + 1) + "^w" + std::to_string(terms.front().b + 1) +
                      ") with weight " + std::to_string(w[t.a] + w[t.b]) + " (w" + std::to_string(t.a + 1) +
                      "^w" + std::to_string(t.b + 1) + ")";
          return std::nullopt;
        }
      }
      w[k] = first;
      progress = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] == 0) {
      if (reason) *reason = "weight of w" + std::to_string(k + 1) + " is not determined (cyclic dependency)";
      return std::nullopt;
    }
  }
  return w;
}

LieAlgebra build_model(const ModelId& id) {
  ModelDraft draft = draft_model(id);
  if (!draft.issues.empty())
    throw InvariantViolation(id.to_string() + ": corrected equations are malformed: " + draft.issues.front());
  std::string reason;
  auto weights = derive_weights(draft.system, &reason);
  if (!weights) throw InvariantViolation(id.to_string() + ": " + reason);
  return to_algebra(draft.system).with_weights(std::move(weights));
}

namespace {

ExpectedInvariants table_row(const ModelId& id) {
  const auto p = id.tuple.size();
  const auto sz = static_cast<std::size_t>(id.size);
  auto seq = [](std::size_t head, std::size_t ones) {
    CharacteristicSequence cs;
    cs.parts.push_back(head);
    cs.parts.insert(cs.parts.end(), ones, 1);
    return cs;
  };
  switch (id.family) {
    case Family::L: return {sz + p, seq(sz - 1, p + 1)};
    case Family::Q: return {2 * sz + p, seq(2 * sz - 1, p + 1)};
    case Family::D: return {2 * sz + p, seq(2 * sz - 2, p + 2)};
    case Family::E: return {2 * sz + 1 + p, seq(2 * sz - 1, p + 2)};
    case Family::VergneL: return {sz, seq(sz - 1, 1)};
    case Family::VergneQ: return {2 * sz, seq(2 * sz - 1, 1)};
  }
  throw InvariantViolation("unhandled model family");
}

}  // namespace

ExpectedInvariants expected_invariants(const ModelId& id) {
  validate(id);
  return table_row(id);
}

bool is_filiform(const ModelId& id) {
  return is_vergne(id.family) || ((id.family == Family::L || id.family == Family::Q) && id.tuple.empty());
}

std::optional<std::size_t> last_extension_generator(const ModelId& id) {
  if (is_vergne(id.family) || id.tuple.empty()) return std::nullopt;
  return model_dimension(id) - 1;
}

ModelId without_last_parameter(const ModelId& id) {
  if (id.tuple.empty()) throw ParameterError(id.to_string() + " has no parameter to drop");
  ModelId out = id;
  out.tuple.pop_back();
  return out;
}

std::vector<ModelId> enumerate_models(std::size_t dim) {
  std::vector<ModelId> out;
  const int d = static_cast<int>(dim);
  auto add_family = [&](Family f, int size, int p, int max_entry) {
    for (auto& t : increasing_tuples(max_entry, p)) out.push_back(ModelId{f, size, std::move(t)});
  };
  for (int n = 7; n <= d; ++n) add_family(Family::L, n, d - n, l_tuple_bound(n, {}));
  for (int m = 3; 2 * m <= d; ++m) add_family(Family::Q, m, d - 2 * m, m - 1);
  for (int m = 4; 2 * m <= d; ++m) add_family(Family::D, m, d - 2 * m, m - 3);
  for (int m = 4; 2 * m + 1 <= d; ++m) add_family(Family::E, m, d - 2 * m - 1, m - 3);
  if (d >= 3) out.push_back(ModelId{Family::VergneL, d, {}});
  if (d >= 6 && d % 2 == 0) out.push_back(ModelId{Family::VergneQ, d / 2, {}});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModelId> model_grid(std::size_t max_dim) {
  std::vector<ModelId> out;
  for (std::size_t d = 3; d <= max_dim; ++d) {
    auto level = enumerate_models(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string CorrectionEvidence::summary() const {
  if (!computable) return model + ": typographical, no computable variant";
  std::vector<std::string> parts;
  if (!issues.empty()) parts.push_back(issues.front() + (issues.size() > 1 ? " (+" + std::to_string(issues.size() - 1) + " more)" : ""));
  if (jacobi_defects > 0) parts.push_back(std::to_string(jacobi_defects) + " Jacobi defect(s), first at " + first_defect);
  if (!homogeneous) parts.push_back("not weight-homogeneous: " + inhomogeneity);
  if (!nilpotent) parts.push_back("not nilpotent");
  if (split) parts.push_back("has an abelian direct factor");
  if (!sequence.empty() && sequence != expected)
    parts.push_back("characteristic data " + sequence + " instead of " + expected);
  if (parts.empty()) return model + ": no defect detected";
  std::string s = model + " with the published form: ";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
  return s;
}

CorrectionEvidence correction_evidence(const CorrectionInfo& info) {
  CorrectionEvidence ev;
  if (!info.witness || !info.revertible) {
    ev.computable = false;
    ev.model = info.family;
    return ev;
  }
  const ModelId& id = *info.witness;
  ev.model = id.to_string();
  const ModelDraft draft = draft_model(id, {info.id});
  ev.issues = draft.issues;
  const LieAlgebra g = to_algebra(draft.system);
  const auto defects = jacobi_defects(g);
  ev.jacobi_defects = defects.size();
  if (!defects.empty()) {
    const auto& f = defects.front();
    ev.first_defect = "(X" + std::to_string(f.i + 1) + ",X" + std::to_string(f.j + 1) + ",X" + std::to_string(f.k + 1) + ")";
  }
  std::string reason;
  ev.homogeneous = derive_weights(draft.system, &reason).has_value();
  ev.inhomogeneity = reason;
  try {
    lower_central_series(g);
  } catch (const NotNilpotentError&) {
    ev.nilpotent = false;
  }
  if (ev.nilpotent && defects.empty()) {
    ev.split = has_abelian_direct_factor(g);
    const auto cs = characteristic_sequence(g);
    ev.sequence = "dim " + std::to_string(g.dim()) + ", " + cs.sequence.to_string();
    const auto expected = table_row(id);
    ev.expected = "dim " + std::to_string(expected.dim) + ", " + expected.sequence.to_string();
  }
  return ev;
}

}  // namespace nilgraded
