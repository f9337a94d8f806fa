#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "schurlat/partition.hpp"
#include "schurlat/schur_module.hpp"
#include "schurlat/valued_field.hpp"

namespace schurlat {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum class MethodSelection { kPolytrope, kBfs, kBoth };

/// One (n, λ, field, model) case with its pipeline settings.
struct CaseSpec {
  int n = 2;
  Partition lambda{std::vector<int>{1}};
  FieldSpec field = FieldSpec::padic(2);
  Model model = Model::kWeyl;
  MethodSelection method = MethodSelection::kBoth;
  int level = 1;
  int trials = 64;
  std::uint64_t seed = 1;
  int radius_cap = 8;
  std::uint64_t max_vectors = std::uint64_t{1} << 16;
  bool timings = false;
  SchurCaps caps;
};

/// Reads a case from a request object. Missing keys take the defaults of
/// `base`. Throws InvalidInput on malformed values.
CaseSpec parse_case(const json& request, const CaseSpec& base = {});
FieldSpec parse_field(const json& field);
json field_to_json(const FieldSpec& spec);
json case_to_json(const CaseSpec& c);

using Progress = std::function<void(const std::string&)>;

json cmd_hooks(const Partition& lambda, std::uint64_t p);
json cmd_dim(int n, const Partition& lambda);
/// rho(g) for g given as rows of exact scalars in the request under "g".
json cmd_rho(const CaseSpec& c, const json& g);
json cmd_order(const CaseSpec& c, bool with_basis = true);
/// Full pipeline: order, graduated detection, fixed points, cross-checks.
/// Throws InvariantViolation when a cross-check fails.
json cmd_fix(const CaseSpec& c);
json cmd_irreducible(const CaseSpec& c);
json cmd_sample(const CaseSpec& c, int precision, std::size_t count, int trials, std::size_t emit);
/// Runs cmd_fix over the cases of a scan configuration. Per-case errors are
/// recorded and the scan continues.
json cmd_scan(const json& config, unsigned workers, const Progress& progress = {});

/// Dispatches a named command on a JSON request (used by the C API).
json run_command(const std::string& command, const json& request, const Progress& progress = {});

/// Exit code recorded in a scan result: the most severe per-case error.
int scan_exit_code(const json& scan_result);

}  // namespace schurlat
