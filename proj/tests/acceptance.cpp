// Acceptance criteria 1-8: one PASS/FAIL line each, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gradus/artinian.hpp"
#include "gradus/harness.hpp"
#include "gradus/koszul.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace gradus;
using namespace gradus::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

const Table* find_table(const VerificationReport& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name == name) return &t;
  return nullptr;
}

bool squares_equal(const VerificationReport& r) {
  for (const auto& s : r.squares)
    if (!s.equal()) return false;
  return true;
}

void require_verified(Outcome& o, const VerificationReport& r) {
  o.require(r.verdict == Verdict::kVerified, r.statement + " on " + r.fixture + ": " + to_string(r.verdict));
}

Outcome criterion1() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const ArtinianDual k = inverse_polynomial_module(n);
    const int w = width(k).value;
    const int d = ndim(k).value;
    const auto socle = finite_length(annihilator_submodule(k, variables_of(k.ring())));
    o.require(w == n && d == n, "n=" + std::to_string(n) + ": width " + std::to_string(w) + ", N.dim " +
                                    std::to_string(d));
    o.require(socle == std::optional<std::size_t>(1), "n=" + std::to_string(n) + ": socle length not 1");
  }
  if (o.pass) o.detail = "width = N.dim = n and length 0:_K(m) = 1 for n = 1, 2, 3";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto r2 = fixture("R2.mod");
  HarnessConfig cfg;
  cfg.n_max = 4;
  const auto rep = verify_cor22(r2, variables_of(r2.ring()), cfg);
  require_verified(o, rep);
  const Table* t = find_table(rep, "levels");
  o.require(t && t->rows.size() == 4, "level table missing");
  if (t)
    for (const auto& row : t->rows)
      o.require(row[2] == row[0] * row[0] && row[3] == row[0] * row[0],
                "n=" + std::to_string(row[0]) + ": dims " + std::to_string(row[2]) + ", " + std::to_string(row[3]));
  o.require(!rep.squares.empty() && squares_equal(rep), "commuting-square image check failed");
  if (o.pass) o.detail = "dims 1, 4, 9, 16 on both sides; " + std::to_string(rep.squares.size()) + " squares equal";
  return o;
}

std::vector<VerificationReport> criterion3_reports() {
  const auto r2 = fixture("R2.mod");
  const auto conic = fixture("conic.mod");
  return {verify_thm31(r2, variables_of(r2.ring())), verify_thm31(conic, seq(conic.ring(), "x"))};
}

Outcome criterion3() {
  Outcome o;
  const auto reps = criterion3_reports();
  for (const auto& rep : reps) require_verified(o, rep);
  const VerificationReport& rep = reps[0];
  const Table* v = find_table(rep, "vanishing");
  o.require(v && v->rows.size() == 8, "vanishing table incomplete");
  if (v)
    for (const auto& row : v->rows)
      o.require(row[2] == 0 && row[3] == 1, "H_" + std::to_string(row[0]) + "(H^" + std::to_string(row[1]) + ") != 0");
  const Table* l = find_table(rep, "limit");
  o.require(l && !l->rows.empty(), "limit table missing");
  std::string dims;
  if (l)
    for (const auto& row : l->rows) {
      o.require(row[1] == row[0] + 1 && row[2] == row[1], "degree " + std::to_string(row[0]) + " differs from R");
      o.require(row[3] >= 1 && row[3] <= 4, "degree " + std::to_string(row[0]) + " stabilized at level " +
                                                 std::to_string(row[3]));
      dims += (dims.empty() ? "" : ",") + std::to_string(row[1]);
    }
  if (o.pass) o.detail = "H_i(H^j) = 0 off (2,2); H_2(H^2) dims " + dims + " stable by level 4; conic verified";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"R2.mod", "xy.mod", "R3.mod", "k.mod"}) {
    const auto m = fixture(name);
    const auto ideal = variables_of(m.ring());
    require_verified(o, verify_prop23(m, ideal));
    require_verified(o, verify_prop24(m, ideal));
    const auto cocm = verify_cocm(m, ideal);
    require_verified(o, cocm);
    bool prop26 = false;
    for (const auto& c : cocm.checks) prop26 = prop26 || (c.name == "N.dim == d" && c.passed);
    o.require(prop26, std::string(name) + ": N.dim == d not checked");
  }
  if (o.pass) o.detail = "N.dim <= d, width >= min{2,d}, co-CM of N.dim d on R2, xy, R3, k";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const ArtinianDual k2 = inverse_polynomial_module(2);
  const ArtinianDual lines = graded_dual(fixture("xy.mod"));
  HarnessConfig cfg;
  cfg.n_max = 3;
  const auto a = verify_lemma33_thm34(k2, variables_of(k2.ring()), cfg);
  const auto b = verify_lemma33_thm34(lines, seq(lines.ring(), "x + y"), cfg);
  for (const auto* rep : {&a, &b}) {
    require_verified(o, *rep);
    const Table* t = find_table(*rep, "levels");
    o.require(t && t->rows.size() == 3, "Lemma 3.3 level table incomplete");
    if (t)
      for (const auto& row : t->rows) o.require(row[2] == row[3] && row[2] > 0, "Lemma 3.3 level mismatch");
    const Table* rt = find_table(*rep, "round trip");
    o.require(rt != nullptr, "round trip table missing");
    if (rt)
      for (const auto& row : rt->rows) o.require(row[1] == row[2], "round trip differs");
  }
  if (o.pass) o.detail = "round trip equals X for K and D(R/(xy)); levels n = 1..3 match";
  return o;
}

Outcome criterion6() {
  Outcome o;
  HarnessConfig cfg;
  cfg.ann_degree = 3;
  for (const char* name : {"R2.mod", "principal.mod", "k.mod"}) require_verified(o, verify_cor32(fixture(name), cfg));
  if (o.pass) o.detail = "ann pieces equal in degrees 0..3 for R, R/(x^2+xy), k";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto report = [&](const char* label, const PropertyOutcome& p, int expected) {
    o.require(p.cases >= expected, std::string(label) + ": only " + std::to_string(p.cases) + " cases");
    o.require(p.failures == 0, std::string(label) + ": " + p.first_failure);
  };
  report("(a) Koszul", koszul_complex_properties(50, 3), 50);
  report("(b) matrices", matrix_properties(200, 17), 200);
  report("(c) Artinian", artinian_properties(), 10);
  report("(d) H_0/H_top", koszul_extreme_properties(20, 11), 20);
  const auto bad = fixture("noncm.mod");
  const auto vars = variables_of(bad.ring());
  const auto y = seq(bad.ring(), "y");
  for (const auto& rep : {verify_prop21(bad, vars), verify_cor22(bad, y), verify_thm31(bad, y)})
    o.require(rep.verdict == Verdict::kInconclusiveHypothesis, "(e) " + rep.statement + " " + to_string(rep.verdict));
  o.require(!is_co_cohen_macaulay(graded_dual(bad)), "(e) dual of the non-CM fixture is co-CM");
  if (o.pass) o.detail = "50 Koszul, 200 matrix, Artinian fixtures, 20 modules, negative control";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::string a = emit_report(criterion3_reports(), Format::kJson);
  const std::string b = emit_report(criterion3_reports(), Format::kJson);
  o.require(a == b, "JSON differs between runs");
  if (o.pass) o.detail = "two runs byte-identical (" + std::to_string(a.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {{1, 5, criterion1},   {2, 30, criterion2},  {3, 120, criterion3},
                                           {4, 120, criterion4}, {5, 120, criterion5}, {6, 30, criterion6},
                                           {7, 180, criterion7}, {8, 240, criterion8}};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = "too slow";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)\n", c.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
