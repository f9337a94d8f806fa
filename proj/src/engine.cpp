#include "schurlat/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "schurlat/building.hpp"
#include "schurlat/error.hpp"
#include "schurlat/gaussian.hpp"
#include "schurlat/order.hpp"

namespace schurlat {

namespace {

template <class Fn>
json with_field(const FieldSpec& spec, Fn&& fn) {
  switch (spec.backend) {
    case Backend::kPadic: {
      PadicField field(spec.p);
      return fn(field);
    }
    case Backend::kLaurent: {
      LaurentField field(spec.q);
      return fn(field);
    }
    case Backend::kUnramified: {
      UnramifiedField field(spec.p, spec.degree);
      return fn(field);
    }
  }
  fail(ErrorCode::kInvalidInput, "unknown field backend");
}

const char* method_name(MethodSelection m) {
  switch (m) {
    case MethodSelection::kPolytrope:
      return "polytrope";
    case MethodSelection::kBfs:
      return "bfs";
    case MethodSelection::kBoth:
      break;
  }
  return "both";
}

MethodSelection parse_method(const std::string& s) {
  if (s == "polytrope") return MethodSelection::kPolytrope;
  if (s == "bfs") return MethodSelection::kBfs;
  if (s == "both") return MethodSelection::kBoth;
  fail(ErrorCode::kInvalidInput, "unknown method '" + s + "' (polytrope, bfs or both)");
}

Partition parse_partition(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  if (!j.is_array()) fail(ErrorCode::kInvalidInput, "lambda must be a list of parts or a \"2,1\" string");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::kInvalidInput, "partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

template <class T>
T get_int(const json& obj, const char* key, T fallback, long long lo, long long hi) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(ErrorCode::kInvalidInput, std::string(key) + " must be an integer");
  long long x = v.get<long long>();
  if (x < lo || x > hi) {
    fail(ErrorCode::kInvalidInput, std::string(key) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<T>(x);
}

json val_json(Val v) { return v == kInfiniteVal ? json(nullptr) : json(v); }

json exponent_json(const ExponentMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json r = json::array();
    for (Val v : row) r.push_back(val_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class F>
json matrix_json(const F& field, const Matrix<typename F::Elem>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(field.to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class F>
json vectors_json(const F& field, const std::vector<std::vector<typename F::Elem>>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json r = json::array();
    for (const auto& x : v) r.push_back(field.to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

json error_json(const Error& e) {
  return {{"code", error_code_name(e.code())}, {"message", e.what()}, {"exit_code", exit_code_for(e.code())}};
}

json header(const CaseSpec& c) {
  return {{"artifact", {{"name", "schurlat"}, {"version", kVersion}}}, {"case", case_to_json(c)}};
}

json hooks_json(const Partition& lambda, std::uint64_t p) {
  return {{"lambda", lambda.parts()},
          {"hooks", hook_lengths(lambda)},
          {"modulus", p},
          {"core", is_core(lambda, static_cast<int>(p))}};
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void lap(json& out, const char* key) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    out[key] = std::chrono::duration<double>(now - start_).count();
    start_ = now;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

template <class F>
json certificate_json(const OrderCertificate& cert) {
  return {{"label", cert.label()},
          {"proven", cert.proven},
          {"level", cert.level},
          {"trials_requested", cert.trials_requested},
          {"trials_passed", cert.trials_passed},
          {"absorbed", cert.absorbed},
          {"seed", cert.seed}};
}

template <class F>
json order_summary(const OrderResult<F>& res) {
  const auto& h = res.order;
  json out = {{"rank", h.rank()},
              {"full_rank", h.full_rank()},
              {"divisors", h.divisors()},
              {"certificate", certificate_json<F>(res.certificate)},
              {"profile", exponent_json(exponent_profile(h))}};
  if (h.full_rank()) {
    auto m = detect_graduated(h);
    out["graduated"] = m.has_value();
    out["M"] = m ? exponent_json(*m) : json(nullptr);
    out["congruence_level"] = congruence_level(h);
  } else {
    out["graduated"] = nullptr;
    out["M"] = nullptr;
    out["congruence_level"] = nullptr;
  }
  return out;
}

template <class F>
json fixset_json(const F& field, const FixSet<F>& s) {
  json out = {{"method", fix_method_name(s.method)}, {"classes", s.classes.size()}, {"bounded", s.bounded}};
  if (s.method == FixMethod::kPolytrope) out["points"] = s.points;
  json bases = json::array();
  for (const auto& l : s.classes) bases.push_back(vectors_json(field, l.vectors()));
  out["bases"] = std::move(bases);
  return out;
}

void violation(const std::string& what) { fail(ErrorCode::kInvariantViolation, "cross-check failed: " + what); }

// H == ∩ End(L) over the classes, tested inside K^{N^2}.
template <class F>
bool is_stabilizer_order(const MatrixModule<F>& h, const std::vector<Lattice<F>>& classes) {
  const F& field = h.field();
  const std::size_t n = h.n();
  std::optional<Lattice<F>> meet;
  for (const auto& l : classes) {
    const auto b = l.basis();
    const auto b_inv = inverse(field, b);
    std::vector<std::vector<typename F::Elem>> gens;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<typename F::Elem> unit(n, n, field.zero());
        unit(i, j) = field.one();
        gens.push_back((b * unit * b_inv).data());
      }
    }
    auto end_l = Lattice<F>::from_generators(field, n * n, gens);
    meet = meet ? lattice_intersection(*meet, end_l) : end_l;
  }
  if (!meet) return false;
  for (const auto& v : meet->vectors()) {
    if (!h.contains(Matrix<typename F::Elem>::from_data(n, n, v))) return false;
  }
  return true;
}

constexpr std::size_t kStabilizerCheckMaxN = 10;

template <class F>
json run_fix(const F& field, const CaseSpec& c) {
  json report = header(c);
  Stopwatch clock(c.timings);
  json timings = json::object();
  SchurModule module(c.n, c.lambda, c.model, c.caps);
  report["hooks"] = hooks_json(c.lambda, c.field.residue_characteristic());
  report["N"] = module.dim();
  clock.lap(timings, "module");

  auto res = compute_order(module, field, c.level, c.trials, c.seed);
  const auto& h = res.order;
  report["order"] = order_summary(res);
  clock.lap(timings, "order");

  const bool want_poly = c.method != MethodSelection::kBfs;
  const bool want_bfs = c.method != MethodSelection::kPolytrope;
  const ExponentMatrix profile = exponent_profile(h);
  const Lattice<F> origin = Lattice<F>::standard(field, module.dim());
  json fix = json::object();
  json checks = json::object();

  std::optional<FixSet<F>> poly;
  if (want_poly) {
    poly = fix_polytrope(field, profile, c.radius_cap);
    json pj = fixset_json(field, *poly);
    pj["scope"] = h.full_rank() && report["order"]["graduated"].get<bool>() ? "all" : "standard apartment";
    pj["radius_cap"] = c.radius_cap;
    fix["polytrope"] = std::move(pj);
    if (!poly->contains_class(origin)) violation("standard class missing from the polytrope");
    for (const auto& l : poly->classes) {
      if (!is_invariant(h, l)) violation("polytrope class is not invariant");
    }
    checks["polytrope_invariant"] = true;
    const bool convex = convexity_check(*poly);
    if (!convex) violation("polytrope set is not convex");
    checks["polytrope_convex"] = true;
  }
  clock.lap(timings, "polytrope");

  if (!h.full_rank()) {
    report["status"] = "not-full-rank";
    fix["bfs"] = nullptr;
    fix["note"] = "order is not full rank; the fixed set is unbounded and only its standard-apartment part is listed";
    report["irreducibility"] = nullptr;
    report["fix"] = std::move(fix);
    report["checks"] = std::move(checks);
    if (c.timings) report["timings"] = std::move(timings);
    return report;
  }

  const int level = congruence_level(h);
  const bool graduated = report["order"]["graduated"].get<bool>();
  std::optional<FixSet<F>> bfs;
  if (want_bfs) {
    BfsLimits limits;
    limits.radius_cap = std::max(c.radius_cap, level);
    limits.max_vectors = c.max_vectors;
    bfs = fix_bfs(h, res.rep_generators, limits);
    fix["bfs"] = fixset_json(field, *bfs);
    if (!bfs->contains_class(origin)) violation("standard class missing from the search result");
    int radius = 0;
    for (const auto& l : bfs->classes) {
      if (!is_invariant(h, l)) violation("search produced a non-invariant class");
      radius = std::max(radius, class_distance(origin, l));
    }
    if (radius > level) violation("fixed class beyond the congruence-level ball");
    fix["bfs"]["radius"] = radius;
    checks["bfs_invariant"] = true;
    checks["ball_bound"] = true;
    if (!convexity_check(*bfs)) violation("search result is not convex");
    checks["bfs_convex"] = true;
    if (bfs->classes.size() > 1 && module.dim() <= kStabilizerCheckMaxN) {
      report["order"]["stabilizer_order"] = graduated || is_stabilizer_order(h, bfs->classes);
    } else if (bfs->classes.size() == 1) {
      report["order"]["stabilizer_order"] = h.is_standard();
    } else {
      report["order"]["stabilizer_order"] = nullptr;
    }
  }
  clock.lap(timings, "bfs");

  if (poly && bfs) {
    const auto pk = poly->keys();
    const auto bk = bfs->keys();
    if (graduated) {
      if (pk != bk) violation("polytrope and search disagree on a graduated order");
      fix["agreement"] = true;
    } else {
      const bool subset = std::includes(bk.begin(), bk.end(), pk.begin(), pk.end());
      if (!subset) violation("standard-apartment classes missing from the search result");
      fix["agreement"] = pk == bk;
    }
  } else {
    fix["agreement"] = nullptr;
  }
  if (bfs) fix["bounded"] = true;
  else fix["bounded"] = poly->bounded;

  const bool spans = spans_end_residue(h);
  const ResidueRep rep = residue_rep_on(res.rep_generators, origin);
  const auto subs = invariant_subspaces(rep, c.max_vectors);
  if (spans != subs.empty()) violation("residue span test disagrees with the invariant subspaces");
  report["irreducibility"] = {{"spans_end_residue", spans},
                              {"invariant_subspaces", subs.size()},
                              {"core", is_core(c.lambda, static_cast<int>(c.field.residue_characteristic()))}};
  checks["irreducibility_consistent"] = true;
  clock.lap(timings, "irreducibility");

  report["status"] = "ok";
  report["fix"] = std::move(fix);
  report["checks"] = std::move(checks);
  if (c.timings) report["timings"] = std::move(timings);
  return report;
}

template <class F>
json run_order(const F& field, const CaseSpec& c, bool with_basis) {
  json report = header(c);
  SchurModule module(c.n, c.lambda, c.model, c.caps);
  report["N"] = module.dim();
  auto res = compute_order(module, field, c.level, c.trials, c.seed);
  report["order"] = order_summary(res);
  if (with_basis) {
    json basis = json::array();
    for (const auto& x : res.order.basis()) basis.push_back(matrix_json(field, x));
    report["order"]["basis"] = std::move(basis);
  }
  return report;
}

template <class F>
json run_irreducible(const F& field, const CaseSpec& c) {
  json report = header(c);
  SchurModule module(c.n, c.lambda, c.model, c.caps);
  report["N"] = module.dim();
  auto res = compute_order(module, field, c.level, c.trials, c.seed);
  const auto origin = Lattice<F>::standard(field, module.dim());
  const auto subs = invariant_subspaces(residue_rep_on(res.rep_generators, origin), c.max_vectors);
  json list = json::array();
  for (const auto& w : subs) {
    json rows = json::array();
    for (const auto& r : w.rows()) {
      json row = json::array();
      for (auto x : r) row.push_back(field.residue_field().to_string(x));
      rows.push_back(std::move(row));
    }
    list.push_back({{"dim", w.dim()}, {"basis", std::move(rows)}});
  }
  const bool core = is_core(c.lambda, static_cast<int>(c.field.residue_characteristic()));
  report["core"] = core;
  report["invariant_subspaces"] = std::move(list);
  if (res.order.full_rank()) {
    const bool spans = spans_end_residue(res.order);
    if (spans != subs.empty()) violation("residue span test disagrees with the invariant subspaces");
    report["spans_end_residue"] = spans;
  } else {
    report["spans_end_residue"] = false;
  }
  report["irreducible"] = subs.empty();
  return report;
}

template <class F>
json run_sample(const F& field, const CaseSpec& c, int precision, std::size_t count, int trials, std::size_t emit) {
  if (precision < 1) fail(ErrorCode::kInvalidInput, "precision must be >= 1");
  json report = header(c);
  SchurModule module(c.n, c.lambda, c.model, c.caps);
  report["N"] = module.dim();
  auto res = compute_order(module, field, c.level, c.trials, c.seed);
  LatticeGaussian<F> gauss(Lattice<F>::standard(field, module.dim()), precision, c.seed);
  const auto inv = invariance_report(gauss, res.order, res.rep_generators, trials, count);

  const auto samples = gauss.sample(std::min(count, emit));
  report["lattice"] = "standard";
  report["samples"] = vectors_json(field, samples);
  report["samples_total"] = count;
  report["precision"] = precision;
  report["seed"] = c.seed;
  bool support_ok = true;
  for (const auto& s : samples) support_ok = support_ok && gauss.support().contains(s);
  if (!support_ok) violation("a sample left its support lattice");

  json words = json::array();
  for (const auto& w : inv.words) {
    words.push_back({{"word", w.word},
                     {"chi2", w.chi.statistic},
                     {"dof", w.chi.dof},
                     {"p_value", w.chi.p_value},
                     {"escaped", w.escaped},
                     {"retried", w.retried},
                     {"pass", w.pass}});
  }
  report["invariance"] = {{"exact_invariant", inv.exact_invariant},
                          {"alpha", inv.alpha},
                          {"sample_digits", {{"chi2", inv.sample_digits.statistic},
                                             {"dof", inv.sample_digits.dof},
                                             {"p_value", inv.sample_digits.p_value},
                                             {"retried", inv.sample_digits_retried},
                                             {"pass", inv.sample_digits_pass}}},
                          {"words", std::move(words)},
                          {"statistics_pass", inv.statistics_pass()},
                          {"degenerate_excluded", true}};
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------

FieldSpec parse_field(const json& f) {
  if (!f.is_object()) fail(ErrorCode::kInvalidInput, "field must be an object");
  const std::string backend = f.value("backend", std::string("p-adic"));
  if (backend == "p-adic" || backend == "padic") {
    auto p = get_int<std::uint64_t>(f, "p", 2, 2, (1LL << 31) - 1);
    if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "p = " + std::to_string(p) + " is not prime");
    return FieldSpec::padic(p);
  }
  if (backend == "laurent") {
    auto q = get_int<std::uint64_t>(f, "q", 2, 2, 1 << 16);
    if (prime_power(q).first == 0) fail(ErrorCode::kInvalidInput, "q = " + std::to_string(q) + " is not a prime power");
    return FieldSpec::laurent(q);
  }
  if (backend == "unramified") {
    auto p = get_int<std::uint64_t>(f, "p", 2, 2, 1 << 16);
    auto d = get_int<unsigned>(f, "degree", 2, 2, 16);
    if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "p = " + std::to_string(p) + " is not prime");
    return FieldSpec::unramified(p, d);
  }
  fail(ErrorCode::kInvalidInput, "unknown field backend '" + backend + "' (p-adic, laurent or unramified)");
}

json field_to_json(const FieldSpec& spec) {
  switch (spec.backend) {
    case Backend::kPadic:
      return {{"backend", "p-adic"}, {"p", spec.p}, {"description", spec.describe()}};
    case Backend::kLaurent:
      return {{"backend", "laurent"}, {"q", spec.q}, {"description", spec.describe()}};
    case Backend::kUnramified:
      break;
  }
  return {{"backend", "unramified"}, {"p", spec.p}, {"degree", spec.degree}, {"description", spec.describe()}};
}

CaseSpec parse_case(const json& r, const CaseSpec& base) {
  if (!r.is_object()) fail(ErrorCode::kInvalidInput, "request must be a JSON object");
  CaseSpec c = base;
  c.n = get_int<int>(r, "n", c.n, 1, 64);
  if (r.contains("lambda")) c.lambda = parse_partition(r.at("lambda"));
  if (r.contains("field")) c.field = parse_field(r.at("field"));
  if (r.contains("model")) c.model = parse_model(r.at("model").get<std::string>());
  if (r.contains("method")) c.method = parse_method(r.at("method").get<std::string>());
  c.level = get_int<int>(r, "level", c.level, 1, 64);
  c.trials = get_int<int>(r, "trials", c.trials, 0, 1 << 20);
  c.seed = get_int<std::uint64_t>(r, "seed", c.seed, 0, std::numeric_limits<long long>::max());
  c.radius_cap = get_int<int>(r, "radius_cap", c.radius_cap, 0, 1 << 10);
  c.max_vectors = get_int<std::uint64_t>(r, "max_vectors", c.max_vectors, 1, 1LL << 24);
  if (r.contains("timings")) c.timings = r.at("timings").get<bool>();
  if (r.contains("caps")) {
    const json& caps = r.at("caps");
    c.caps.max_dim = get_int<std::size_t>(caps, "N", c.caps.max_dim, 1, 4096);
    c.caps.max_d = get_int<int>(caps, "d", c.caps.max_d, 1, 64);
    c.caps.max_n = get_int<int>(caps, "n", c.caps.max_n, 1, 64);
    c.max_vectors = get_int<std::uint64_t>(caps, "q_pow_N", c.max_vectors, 1, 1LL << 24);
  }
  return c;
}

json case_to_json(const CaseSpec& c) {
  return {{"n", c.n},
          {"lambda", c.lambda.parts()},
          {"field", field_to_json(c.field)},
          {"model", model_name(c.model)},
          {"method", method_name(c.method)},
          {"level", c.level},
          {"trials", c.trials},
          {"seed", c.seed},
          {"radius_cap", c.radius_cap}};
}

json cmd_hooks(const Partition& lambda, std::uint64_t p) {
  json out = hooks_json(lambda, p);
  out["artifact"] = {{"name", "schurlat"}, {"version", kVersion}};
  return out;
}

json cmd_dim(int n, const Partition& lambda) {
  if (n < 1) fail(ErrorCode::kInvalidInput, "n must be >= 1");
  return {{"artifact", {{"name", "schurlat"}, {"version", kVersion}}},
          {"n", n},
          {"lambda", lambda.parts()},
          {"dim", hook_content_dimension(lambda, n)},
          {"ssyt_count", ssyt_enumerate(lambda, n).size()}};
}

json cmd_rho(const CaseSpec& c, const json& g) {
  return with_field(c.field, [&](const auto& field) -> json {
    using F = std::decay_t<decltype(field)>;
    if (!g.is_array() || g.size() != static_cast<std::size_t>(c.n)) {
      fail(ErrorCode::kInvalidInput, "g must be a list of n rows");
    }
    const auto nn = static_cast<std::size_t>(c.n);
    Matrix<typename F::Elem> m(nn, nn, field.zero());
    for (std::size_t i = 0; i < nn; ++i) {
      if (!g[i].is_array() || g[i].size() != nn) fail(ErrorCode::kInvalidInput, "each row of g needs n entries");
      for (std::size_t j = 0; j < nn; ++j) {
        const json& e = g[i][j];
        std::string text = e.is_string() ? e.get<std::string>() : e.dump();
        m(i, j) = field.parse(text);
      }
    }
    SchurModule module(c.n, c.lambda, c.model, c.caps);
    json out = header(c);
    out["N"] = module.dim();
    out["rho"] = matrix_json(field, rho(module, field, m));
    return out;
  });
}

json cmd_order(const CaseSpec& c, bool with_basis) {
  return with_field(c.field, [&](const auto& field) { return run_order(field, c, with_basis); });
}

json cmd_fix(const CaseSpec& c) {
  return with_field(c.field, [&](const auto& field) { return run_fix(field, c); });
}

json cmd_irreducible(const CaseSpec& c) {
  return with_field(c.field, [&](const auto& field) { return run_irreducible(field, c); });
}

json cmd_sample(const CaseSpec& c, int precision, std::size_t count, int trials, std::size_t emit) {
  return with_field(c.field, [&](const auto& field) { return run_sample(field, c, precision, count, trials, emit); });
}

namespace {

std::vector<json> expand_scan(const json& config) {
  std::vector<json> cases;
  if (config.contains("cases")) {
    if (!config.at("cases").is_array()) fail(ErrorCode::kInvalidInput, "cases must be a list");
    for (const auto& c : config.at("cases")) cases.push_back(c);
  }
  if (config.contains("sweep")) {
    const json& s = config.at("sweep");
    const int max_d = get_int<int>(s, "max_degree", 3, 1, 12);
    std::vector<int> ns = s.value("n", std::vector<int>{2, 3});
    if (!s.contains("fields") || !s.at("fields").is_array()) fail(ErrorCode::kInvalidInput, "sweep needs a fields list");
    for (const auto& f : s.at("fields")) {
      for (int n : ns) {
        for (int d = 1; d <= max_d; ++d) {
          for (const auto& lambda : Partition::all_of(d)) {
            if (lambda.rows() > n) continue;
            json c = {{"n", n}, {"lambda", lambda.parts()}, {"field", f}};
            if (s.contains("model")) c["model"] = s.at("model");
            cases.push_back(std::move(c));
          }
        }
      }
    }
  }
  return cases;
}

}  // namespace

json cmd_scan(const json& config, unsigned workers, const Progress& progress) {
  if (!config.is_object()) fail(ErrorCode::kInvalidInput, "scan config must be a JSON object");
  CaseSpec defaults;
  if (config.contains("defaults")) defaults = parse_case(config.at("defaults"));
  if (config.contains("caps")) defaults = parse_case(json{{"caps", config.at("caps")}}, defaults);
  const std::vector<json> requests = expand_scan(config);

  std::vector<json> reports(requests.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      json entry;
      try {
        const CaseSpec c = parse_case(requests[i], defaults);
        entry = cmd_fix(c);
      } catch (const Error& e) {
        entry = {{"case", requests[i]}, {"status", "error"}, {"error", error_json(e)}};
      } catch (const std::exception& e) {
        entry = {{"case", requests[i]},
                 {"status", "error"},
                 {"error", {{"code", "InvalidInput"}, {"message", e.what()}, {"exit_code", 2}}}};
      }
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress("case " + std::to_string(i + 1) + "/" + std::to_string(requests.size()) + ": " +
                 entry.value("status", std::string("?")));
      }
      reports[i] = std::move(entry);
    }
  };
  const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(requests.size(), 1))));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < pool; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  json table = json::array();
  std::size_t ok = 0, graduated = 0, not_graduated = 0;
  json errors = json::object();
  for (const auto& r : reports) {
    json row = {{"case", r.at("case")}, {"status", r.at("status")}};
    if (r.at("status") == "error") {
      const std::string code = r.at("error").at("code");
      errors[code] = errors.value(code, 0) + 1;
      row["error"] = r.at("error").at("code");
    } else {
      ++ok;
      const json& g = r.at("order").at("graduated");
      row["graduated"] = g;
      if (g.is_boolean()) (g.get<bool>() ? graduated : not_graduated)++;
      const json& fix = r.at("fix");
      row["fix_size"] = fix.contains("bfs") && !fix.at("bfs").is_null() ? fix.at("bfs").at("classes") : json(nullptr);
      row["spans_end_residue"] = r.at("irreducibility").is_null() ? json(nullptr) : r.at("irreducibility").at("spans_end_residue");
    }
    table.push_back(std::move(row));
  }
  return {{"artifact", {{"name", "schurlat"}, {"version", kVersion}}},
          {"reports", reports},
          {"table", std::move(table)},
          {"summary",
           {{"cases", reports.size()},
            {"ok", ok},
            {"graduated", graduated},
            {"not_graduated", not_graduated},
            {"errors", std::move(errors)}}}};
}

int scan_exit_code(const json& scan_result) {
  const json& errors = scan_result.at("summary").at("errors");
  return errors.contains("InvariantViolation") ? 4 : 0;
}

json run_command(const std::string& command, const json& request, const Progress& progress) {
  if (command == "scan") {
    const unsigned workers = get_int<unsigned>(request, "workers", 1, 1, 256);
    const json config = request.contains("config") ? request.at("config") : request;
    return cmd_scan(config, workers, progress);
  }
  if (command == "hooks") {
    if (!request.contains("lambda")) fail(ErrorCode::kInvalidInput, "hooks needs lambda");
    const auto p = get_int<std::uint64_t>(request, "p", 0, 0, 1LL << 31);
    return cmd_hooks(parse_partition(request.at("lambda")), p);
  }
  const CaseSpec c = parse_case(request);
  if (command == "dim") return cmd_dim(c.n, c.lambda);
  if (command == "rho") {
    if (!request.contains("g")) fail(ErrorCode::kInvalidInput, "rho needs g");
    return cmd_rho(c, request.at("g"));
  }
  if (command == "order") return cmd_order(c, request.value("basis", true));
  if (command == "fix") return cmd_fix(c);
  if (command == "irreducible") return cmd_irreducible(c);
  if (command == "sample") {
    const int precision = get_int<int>(request, "precision", 1, -1000, 64);
    const auto count = get_int<std::size_t>(request, "count", 10000, 1, 1 << 24);
    const int words = get_int<int>(request, "words", 4, 0, 1024);
    const auto emit = get_int<std::size_t>(request, "emit", 8, 0, 1 << 24);
    return cmd_sample(c, precision, count, words, emit);
  }
  fail(ErrorCode::kInvalidInput, "unknown command '" + command + "'");
}

}  // namespace schurlat
