// Acceptance runner: one PASS/FAIL line per criterion, plus indented
// detail and informational lines. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "schurlat/building.hpp"
#include "schurlat/engine.hpp"
#include "schurlat/gaussian.hpp"
#include "schurlat/order.hpp"
#include "support.hpp"

using namespace schurlat;
namespace st = schurlat::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string join(const std::vector<Val>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double secs) {
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " (" << fmt_time(secs)
            << ")\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
  if (!o.pass) ++failures;
}

const std::vector<std::vector<Val>> kTwoPointM{{0, 1, 0}, {0, 0, 0}, {0, 1, 0}};

template <class F>
OrderResult<F> order_for(const F& field, int n, const Partition& lambda, std::uint64_t seed = 1,
                         Model model = Model::kWeyl) {
  SchurModule module(n, lambda, model);
  return compute_order(module, field, 1, 64, seed);
}

// Same canonical basis for seeds 1, 2 and 3.
template <class F>
bool seed_independent(const F& field, int n, const Partition& lambda, Model model = Model::kWeyl) {
  const auto ref = order_for(field, n, lambda, 1, model).order.basis();
  for (std::uint64_t seed : {2u, 3u}) {
    if (order_for(field, n, lambda, seed, model).order.basis() != ref) return false;
  }
  return true;
}

struct CoreCase {
  std::uint64_t p;
  int n;
  Partition lambda;
  OrderResult<PadicField> result;
  std::size_t fix_size = 0;
};

std::string describe(std::uint64_t p, int n, const Partition& lambda) {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " λ=(" + lambda.to_string() + ")";
}

std::vector<CoreCase> core_cases;

// Modules refer to their field, so fields shared across criteria live here.
const PadicField& padic(std::uint64_t p) {
  static std::map<std::uint64_t, PadicField> fields;
  return fields.try_emplace(p, p).first->second;
}
std::vector<std::function<bool()>> fixset_checks;  // convexity and ball bound on every computed set
std::size_t fixsets_seen = 0;

template <class F>
void record_fixset(const FixSet<F>& s, const MatrixModule<F>& h, bool check_ball) {
  ++fixsets_seen;
  const bool convex = convexity_check(s);
  bool ball = true;
  if (check_ball) {
    const int level = congruence_level(h);
    const auto origin = Lattice<F>::standard(h.field(), h.n());
    for (const auto& l : s.classes) ball = ball && class_distance(origin, l) <= level;
  }
  fixset_checks.push_back([convex, ball] { return convex && ball; });
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto t0 = Clock::now();
  Outcome o;
  UnramifiedField k(2, 2);
  const auto res = order_for(k, 2, Partition({2}));
  const auto expected = st::expected_graduated(k, kTwoPointM);
  const double secs = seconds_since(t0);
  o.require(st::same_module(res.order, expected), "order equals {X : X12, X32 in 2R}");
  o.require(res.order.rank() == 9, "rank 9");
  o.require(res.order.divisors() == std::vector<Val>{0, 0, 0, 0, 0, 0, 0, 1, 1}, "divisors {0^7, 1^2}");
  o.require(secs < 10.0, "under 10 s");
  o.note("field " + k.spec().describe() + ", rank " + std::to_string(res.order.rank()) + ", divisors " +
         join(res.order.divisors()));

  PadicField q2(2);
  const auto base = order_for(q2, 2, Partition({2}));
  const auto base_expected = st::expected_graduated(q2, kTwoPointM);
  o.note("info: over Q_2 the order has divisors " + join(base.order.divisors()) + " and " +
         (st::same_module(base.order, base_expected) ? "equals" : "differs from") +
         " the graduated order; GL_2(F_2) is too small to span it mod 2");
  report(1, "order for n=2, λ=(2), residue characteristic 2", o, secs);
}

void criterion2() {
  const auto t0 = Clock::now();
  Outcome o;
  UnramifiedField k(2, 2);
  const auto res = order_for(k, 2, Partition({2}));
  const auto m = detect_graduated(res.order);
  o.require(m.has_value() && *m == ExponentMatrix::from_rows(kTwoPointM), "M = [[0,1,0],[0,0,0],[0,1,0]]");
  if (m) {
    const auto poly = fix_polytrope(k, *m, 8);
    const auto bfs = fix_bfs(res.order, res.rep_generators);
    record_fixset(poly, res.order, true);
    record_fixset(bfs, res.order, true);
    o.require(poly.points == std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, 1}}, "polytrope points (0,0,0), (1,0,1)");
    o.require(poly.keys() == bfs.keys(), "search agrees with the polytrope");
    o.note("M = " + m->to_string() + ", polytrope " + std::to_string(poly.classes.size()) + " classes, search " +
           std::to_string(bfs.classes.size()) + " classes");
  }
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "under 10 s");
  report(2, "graduated order and its two fixed classes", o, secs);
}

void criterion3() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t cases = 0;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const PadicField& field = padic(p);
    for (int n : {2, 3}) {
      for (int d = 1; d <= 4; ++d) {
        for (const auto& lambda : Partition::all_of(d)) {
          if (lambda.rows() > n || !is_core(lambda, static_cast<int>(p))) continue;
          ++cases;
          CoreCase c{p, n, lambda, order_for(field, n, lambda)};
          const auto bfs = fix_bfs(c.result.order, c.result.rep_generators);
          record_fixset(bfs, c.result.order, true);
          c.fix_size = bfs.classes.size();
          const bool unique = bfs.classes.size() == 1 &&
                              bfs.classes[0] == Lattice<PadicField>::standard(field, c.result.order.n());
          o.require(unique, describe(p, n, lambda) + " has " + std::to_string(bfs.classes.size()) + " classes");
          core_cases.push_back(std::move(c));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1800.0, "under 30 min");
  o.note(std::to_string(cases) + " core cases, each with the standard class only");
  report(3, "unique invariant class for cores, d <= 4, n in {2,3}, p in {2,3,5}", o, secs);
}

void criterion4() {
  const auto t0 = Clock::now();
  Outcome o;
  LaurentField f(2);
  const auto res = order_for(f, 2, Partition({2}), 1, Model::kQuotient);
  for (int m = 0; m <= 5; ++m) {
    o.require(is_invariant(res.order, Lattice<LaurentField>::diagonal(f, {0, m, 0})),
              "L_" + std::to_string(m) + " = diag(1, t^" + std::to_string(m) + ", 1) invariant");
  }
  const auto poly = fix_polytrope(f, exponent_profile(res.order), 8);
  o.require(!poly.bounded, "polytrope unbounded");
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "under 10 s");
  o.note("F_2(t), quotient model: rank " + std::to_string(res.order.rank()) + ", profile " +
         exponent_profile(res.order).to_string() + ", certificate " + res.certificate.label());
  report(4, "equal characteristic n=2, λ=(2): L_0..L_5 invariant, unbounded", o, secs);
}

template <class F>
bool spans_matches_subspaces(const OrderResult<F>& res, bool* spans) {
  *spans = spans_end_residue(res.order);
  const auto origin = Lattice<F>::standard(res.order.field(), res.order.n());
  return *spans == invariant_subspaces(residue_rep_on(res.rep_generators, origin)).empty();
}

void criterion5() {
  const auto t0 = Clock::now();
  Outcome o;
  for (const auto& c : core_cases) {
    bool spans = false;
    o.require(spans_matches_subspaces(c.result, &spans), describe(c.p, c.n, c.lambda) + " subspace consistency");
    o.require(spans == is_core(c.lambda, static_cast<int>(c.p)), describe(c.p, c.n, c.lambda) + " spans iff core");
  }
  PadicField q2(2);
  const auto neg = order_for(q2, 2, Partition({2}));
  bool spans = true;
  o.require(spans_matches_subspaces(neg, &spans), "p=2 λ=(2) subspace consistency");
  o.require(!spans && !is_core(Partition({2}), 2), "p=2 λ=(2) does not span and is not a core");
  o.note(std::to_string(core_cases.size()) + " core cases span, negative case does not");

  // Non-core members of the same sweep, for information only.
  std::size_t non_core = 0, spanning = 0;
  std::vector<std::string> spanning_cases;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const PadicField& field = padic(p);
    for (int n : {2, 3}) {
      for (int d = 1; d <= 4; ++d) {
        for (const auto& lambda : Partition::all_of(d)) {
          if (lambda.rows() > n || is_core(lambda, static_cast<int>(p))) continue;
          ++non_core;
          if (spans_end_residue(order_for(field, n, lambda).order)) {
            ++spanning;
            spanning_cases.push_back(describe(p, n, lambda));
          }
        }
      }
    }
  }
  std::string list;
  for (const auto& s : spanning_cases) list += (list.empty() ? "" : "; ") + s;
  o.note("info: " + std::to_string(non_core) + " non-core cases, " + std::to_string(spanning) +
         " still span: " + list);
  report(5, "residue span iff core, and iff no invariant subspaces", o, seconds_since(t0));
}

void criterion6() {
  const auto t0 = Clock::now();
  Outcome o;
  Rng rng(606);

  // Homomorphism, 50 pairs per case.
  PadicField f(3);
  std::size_t pairs = 0;
  for (auto model : {Model::kWeyl, Model::kQuotient}) {
    for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {2, {3}}, {3, {2, 1}}, {3, {2}}}) {
      SchurModule m(n, Partition(parts), model);
      for (int i = 0; i < 50; ++i, ++pairs) {
        const auto g = st::random_rational_gl(f, static_cast<std::size_t>(n), rng);
        const auto h = st::random_rational_gl(f, static_cast<std::size_t>(n), rng);
        if (rho(m, f, g * h) != rho(m, f, h) * rho(m, f, g)) {
          o.require(false, "homomorphism for " + m.shape().to_string());
          break;
        }
      }
    }
  }
  o.note(std::to_string(pairs) + " homomorphism pairs");

  // Trace equals the Schur polynomial, 50 diagonals per case.
  std::uniform_int_distribution<int> pick(-9, 9);
  std::size_t diagonals = 0;
  for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {2, 1}}, {3, {3}}, {4, {2, 1, 1}}}) {
    const Partition lambda(parts);
    SchurModule m(n, lambda);
    for (int i = 0; i < 50; ++i, ++diagonals) {
      std::vector<mpq_class> z;
      while (z.size() < static_cast<std::size_t>(n)) {
        mpq_class v = pick(rng);
        if (v != 0 && std::find(z.begin(), z.end(), v) == z.end()) z.push_back(v);
      }
      Matrix<mpq_class> g(z.size(), z.size());
      for (std::size_t k = 0; k < z.size(); ++k) g(k, k) = z[k];
      const auto r = rho(m, f, g);
      mpq_class trace = 0;
      for (std::size_t k = 0; k < r.rows(); ++k) trace += r(k, k);
      if (trace != st::schur_bialternant(f, lambda, z)) {
        o.require(false, "trace for " + lambda.to_string());
        break;
      }
    }
  }
  o.note(std::to_string(diagonals) + " diagonal traces");

  // Hook-content dimension.
  SchurCaps big;
  big.max_dim = 1024;
  std::size_t shapes = 0;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& lambda : Partition::all_of(d)) {
      for (int n = 1; n <= 4; ++n, ++shapes) {
        const auto dim = hook_content_dimension(lambda, n);
        const bool ok = dim == st::weyl_dimension(lambda, n) && dim == ssyt_enumerate(lambda, n).size() &&
                        (dim == 0 || dim == SchurModule(n, lambda, Model::kWeyl, big).dim());
        o.require(ok, "hook content for " + lambda.to_string() + " n=" + std::to_string(n));
      }
    }
  }
  o.note(std::to_string(shapes) + " (λ, n) dimension checks");

  // hnf_dvr idempotence and span preservation.
  PadicField f2(2);
  std::uniform_int_distribution<int> entry(-6, 6), count(1, 6), dim(1, 5), den(0, 2);
  bool hnf_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<mpq_class>> gens;
    for (int i = count(rng); i > 0; --i) {
      std::vector<mpq_class> v(m);
      for (auto& x : v) {
        x = mpq_class(entry(rng), 1L << den(rng));
        x.canonicalize();
      }
      gens.push_back(std::move(v));
    }
    const auto h = hnf_dvr(f2, gens, m);
    hnf_ok = hnf_ok && hnf_dvr(f2, h.basis, m).basis == h.basis;
    Echelon<PadicField> span(f2, m), original(f2, m);
    for (const auto& v : h.basis) span.insert(v);
    for (const auto& v : gens) original.insert(v);
    for (const auto& v : gens) hnf_ok = hnf_ok && span.contains(v);
    for (const auto& v : h.basis) hnf_ok = hnf_ok && original.contains(v);
  }
  o.require(hnf_ok, "hnf idempotence and span preservation");
  o.note("100 hnf inputs");

  // Extra non-graduated fixed sets, then every recorded set.
  for (const auto& [p, n, parts] :
       std::vector<std::tuple<std::uint64_t, int, std::vector<int>>>{{2, 2, {2}}, {2, 2, {3}}, {3, 3, {2, 1}}, {2, 2, {4}}}) {
    const PadicField& field = padic(p);
    const auto res = order_for(field, n, Partition(parts));
    record_fixset(fix_bfs(res.order, res.rep_generators), res.order, true);
    record_fixset(fix_polytrope(field, exponent_profile(res.order), 8), res.order, true);
  }
  bool sets_ok = true;
  for (const auto& check : fixset_checks) sets_ok = sets_ok && check();
  o.require(sets_ok, "convexity and ball bound on every fixed set");
  o.note(std::to_string(fixsets_seen) + " fixed sets convex and within the congruence ball");
  report(6, "property suites", o, seconds_since(t0));
}

void criterion7() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t graduated = 0;
  UnramifiedField k(2, 2);
  {
    const auto res = order_for(k, 2, Partition({2}));
    const auto m = detect_graduated(res.order);
    o.require(m.has_value(), "two-point case is graduated");
    if (m) {
      ++graduated;
      o.require(fix_polytrope(k, *m, 8).keys() == fix_bfs(res.order, res.rep_generators).keys(),
                "polytrope equals search on the two-point case");
    }
    o.require(seed_independent(k, 2, Partition({2})), "seed independence over " + k.spec().describe());
  }
  for (const auto& c : core_cases) {
    const PadicField& field = padic(c.p);
    const auto m = detect_graduated(c.result.order);
    if (m) {
      ++graduated;
      const auto poly = fix_polytrope(field, *m, 8);
      o.require(poly.classes.size() == c.fix_size &&
                    poly.keys() == fix_bfs(c.result.order, c.result.rep_generators).keys(),
                describe(c.p, c.n, c.lambda) + " polytrope equals search");
    }
    o.require(seed_independent(field, c.n, c.lambda), describe(c.p, c.n, c.lambda) + " seed independence");
  }
  LaurentField f(2);
  o.require(seed_independent(f, 2, Partition({2}), Model::kQuotient), "seed independence over F_2(t)");
  PadicField q2(2);
  o.require(seed_independent(q2, 2, Partition({2})), "seed independence over Q_2");
  o.note(std::to_string(graduated) + " graduated cases agree; " + std::to_string(core_cases.size() + 3) +
         " cases seed independent over seeds 1, 2, 3");
  report(7, "polytrope/search equivalence and seed independence", o, seconds_since(t0));
}

void criterion8() {
  const auto t0 = Clock::now();
  Outcome o;
  std::ifstream in(SCHURLAT_CONFIG_DIR "/graduated_scan.json");
  const json config = json::parse(in);
  const json result = cmd_scan(config, 1);
  const int code = scan_exit_code(result);
  o.require(code != 4, "no internal invariant failures");
  std::size_t verdicts = 0, yes = 0;
  for (const auto& row : result.at("table")) {
    const bool ok = row.at("status") == "ok" && row.at("graduated").is_boolean();
    o.require(ok, "verdict for " + row.at("case").dump());
    if (ok) {
      ++verdicts;
      if (row.at("graduated").get<bool>()) ++yes;
    }
  }
  o.require(verdicts == result.at("table").size() && verdicts > 0, "every case has a verdict");
  o.note(std::to_string(verdicts) + " cases, " + std::to_string(yes) + " graduated, " +
         std::to_string(verdicts - yes) + " not graduated, scan exit code " + std::to_string(code));
  report(8, "graduated scan d <= 3, n <= 3, p in {2,3}", o, seconds_since(t0));
}

void criterion9() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t retried = 0, words = 0;
  for (const auto& c : core_cases) {
    const PadicField& field = padic(c.p);
    LatticeGaussian<PadicField> gauss(Lattice<PadicField>::standard(field, c.result.order.n()), 1, 1000 + c.p);
    const auto rep = invariance_report(gauss, c.result.order, c.result.rep_generators, 4, 10000, 1e-3);
    o.require(rep.exact_invariant, describe(c.p, c.n, c.lambda) + " exact invariance");
    o.require(rep.statistics_pass(), describe(c.p, c.n, c.lambda) + " digit uniformity");
    retried += rep.sample_digits_retried ? 1 : 0;
    for (const auto& w : rep.words) {
      ++words;
      retried += w.retried ? 1 : 0;
    }
  }
  o.note(std::to_string(core_cases.size()) + " core cases, " + std::to_string(words) +
         " pushed-forward tests at alpha 0.001 over 10^4 samples, " + std::to_string(retried) + " retried");
  report(9, "Gaussian invariance for the core cases", o, seconds_since(t0));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<std::function<void()>> steps{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i]();
    } catch (const std::exception& e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      report(static_cast<int>(i + 1), "aborted", o, 0.0);
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << fmt_time(seconds_since(t0)) << "\n";
  return failures == 0 ? 0 : 1;
}
