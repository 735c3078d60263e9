// Acceptance gate: one PASS/FAIL line per criterion, with its runtime limit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "refine/formats.hpp"
#include "refine/harness.hpp"

using namespace refine;

namespace {

const std::filesystem::path kFixtures = REFINE_FIXTURE_DIR;
constexpr std::uint64_t kSeed = 20240611;

Lts fixture(const std::string& name) {
  auto path = kFixtures / name;
  return parse_lts(read_text_file(path), path.string());
}

PropertySpec fixture_property(const std::string& name, const Alphabet& ambient) {
  auto path = kFixtures / name;
  RawProperty raw = parse_property(read_text_file(path), path.string(),
                                   [](const std::string& rel) { return read_text_file(kFixtures / rel); });
  return raw.bind(ambient);
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

void absorb(Outcome& o, const SuiteReport& r) {
  if (!r.ok()) fail(o, r.format());
}

std::string summary(const SuiteReport& r) {
  return r.name + " " + std::to_string(r.cases) + " cases (" + std::to_string(r.interesting) + " non-vacuous)";
}

Outcome idle_loop() {
  Outcome o;
  Lts l1 = fixture("L1.aut"), r1 = fixture("R1.aut");
  const Alphabet& a = l1.alphabet();
  if (!equivalent(l1, r1, PreorderKind::liveness).holds) fail(o, "L1, R1 not liveness-equivalent");
  Verdict cond = equivalent(l1, r1, PreorderKind::cond_liveness);
  if (cond.holds || !cond.witness) {
    fail(o, "L1, R1 cond-liveness-equivalent");
  } else {
    // Replay: the witness is a d-flooded behaviour of the right-hand side
    // missing from the left-hand side of the failing direction.
    const Lts& lhs = cond.converse ? r1 : l1;
    const Lts& rhs = cond.converse ? l1 : r1;
    const Witness& w = *cond.witness;
    auto dl = denote(lhs, FloodMode::d), dr = denote(rhs, FloodMode::d);
    bool replays = w.kind == Witness::Kind::failure
                       ? query_failure(dr, {w.trace, w.refusal}) && !query_failure(dl, {w.trace, w.refusal})
                       : query_divergence(dr, w.trace) && !query_divergence(dl, w.trace);
    if (!replays) fail(o, "witness " + w.describe(a) + " does not replay");
    o.detail = "witness " + w.describe(a);
  }
  PropertySpec spec = fixture_property("canon-cond-liveness.prop", a);
  if (!satisfies(l1, spec).holds) fail(o, "L1 violates liveness_c(g)");
  if (satisfies(r1, spec).holds) fail(o, "R1 satisfies liveness_c(g)");
  return o;
}

Outcome puhakka() {
  Outcome o;
  Lts pl = fixture("PuhakkaL.aut"), pr = fixture("PuhakkaR.aut");
  Verdict v = equivalent(pl, pr, PreorderKind::liveness);
  if (v.holds) fail(o, "Puhakka pair liveness-equivalent");
  else if (v.component != "failures" || !v.witness) fail(o, "refuted in component " + v.component);
  else o.detail = "witness " + v.witness->describe(pl.alphabet());
  for (std::size_t depth = 0; depth <= 6; ++depth) {
    if (enumerate_bounded(pl, depth).partial != enumerate_bounded(pr, depth).partial) {
      fail(o, "ptr differs at depth " + std::to_string(depth));
    }
  }
  return o;
}

Outcome safety_characterisation() {
  Outcome o;
  auto r = safety_characterisation_suite(500, 5, kSeed);
  absorb(o, r);
  if (r.cases != 500) fail(o, "expected 500 pairs");
  if (o.ok) o.detail = summary(r) + ", " + std::to_string(r.decided) + " decided";
  return o;
}

Outcome equations() {
  Outcome o;
  auto reports = check_compositional_equations(500, 4, kSeed);
  std::size_t cases = 0;
  for (const auto& r : reports) {
    absorb(o, r);
    if (r.cases != 500) fail(o, r.name + " ran " + std::to_string(r.cases) + " instances");
    cases += r.cases;
  }
  if (o.ok) o.detail = std::to_string(reports.size()) + " operator/mode suites, " + std::to_string(cases) + " checks";
  return o;
}

// Pairs shared by criteria 5 and 7.
const std::vector<SampledPair>& chain_pairs() {
  static const std::vector<SampledPair> pairs = sample_pairs(500, kSeed);
  return pairs;
}

Outcome chain() {
  Outcome o;
  auto r = preorder_chain_suite(chain_pairs());
  absorb(o, r);
  if (o.ok) o.detail = summary(r);
  return o;
}

Outcome respects() {
  Outcome o;
  std::size_t checks = 0, premises = 0;
  for (PreorderKind kind : {PreorderKind::safety, PreorderKind::liveness, PreorderKind::cond_liveness}) {
    auto r = respects_suite(kind, 200, 20, kSeed);
    absorb(o, r);
    if (r.cases != 200 * 20) fail(o, r.name + " ran " + std::to_string(r.cases) + " checks");
    checks += r.cases;
    premises += r.interesting;
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks, " + std::to_string(premises) + " with a true premise";
  return o;
}

Outcome gadgets() {
  Outcome o;
  auto r = gadget_separation_suite(chain_pairs());
  absorb(o, r);
  if (r.cases == 0) fail(o, "no refuted pairs with finite witnesses");
  if (o.ok) o.detail = std::to_string(r.cases) + " separations";
  auto w = witness_soundness_suite(chain_pairs());
  absorb(o, w);
  return o;
}

Outcome reductions() {
  Outcome o;
  auto r = canonical_reduction_suite(200, 4, kSeed);
  absorb(o, r);
  if (o.ok) o.detail = summary(r);
  return o;
}

Outcome identities() {
  Outcome o;
  auto r = identity_suite(500, 4, kSeed);
  absorb(o, r);
  if (o.ok) o.detail = summary(r);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "idle loop: liveness vs conditional liveness", 1, idle_loop},
      {2, "puhakka liveness separation", 1, puhakka},
      {3, "safety characterisation", 30, safety_characterisation},
      {4, "compositional equations", 120, equations},
      {5, "preorder chain", 60, chain},
      {6, "respect suites", 120, respects},
      {7, "gadget separation", 60, gadgets},
      {8, "canonical reductions", 60, reductions},
      {9, "trace identities", 30, identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) fail(o, "runtime limit exceeded");
    if (!o.ok) ++failures;
    std::printf("%s [%d] %s (%.2fs / limit %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
