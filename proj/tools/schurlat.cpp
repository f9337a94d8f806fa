// Command-line front end over the C API.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "schurlat.h"

namespace {

using json = nlohmann::json;

struct Options {
  int n = 2;
  std::string lambda = "1";
  std::string field = "p-adic";
  unsigned long p = 2;
  unsigned long q = 2;
  unsigned degree = 2;
  std::string model = "weyl";
  std::string method = "both";
  int level = 1;
  int trials = 64;
  unsigned long long seed = 1;
  int precision = 1;
  long long count = 10000;
  int words = 4;
  long long emit = 8;
  int radius = 8;
  long long cap_n = 64;
  unsigned workers = 1;
  bool as_json = false;
  bool timings = false;
  bool no_basis = false;
  std::string g;
  std::string config;
};

json lambda_json(const std::string& text) {
  json parts = json::array();
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      return json(text);  // let the library report the parse error
    }
  }
  return parts;
}

json field_json(const Options& o) {
  if (o.field == "laurent") return {{"backend", "laurent"}, {"q", o.q}};
  if (o.field == "unramified") return {{"backend", "unramified"}, {"p", o.p}, {"degree", o.degree}};
  return {{"backend", "p-adic"}, {"p", o.p}};
}

json case_json(const Options& o) {
  return {{"n", o.n},
          {"lambda", lambda_json(o.lambda)},
          {"field", field_json(o)},
          {"model", o.model},
          {"method", o.method},
          {"level", o.level},
          {"trials", o.trials},
          {"seed", o.seed},
          {"radius_cap", o.radius},
          {"timings", o.timings},
          {"caps", {{"N", o.cap_n}}}};
}

// "1,2;0,1" -> [["1","2"],["0","1"]]
json matrix_json(const std::string& text) {
  json rows = json::array();
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    json r = json::array();
    std::stringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ',')) r.push_back(entry);
    rows.push_back(std::move(r));
  }
  return rows;
}

void progress_to_stderr(const char* message, void*) { std::cerr << "[schurlat] " << message << std::endl; }

std::string yes_no(const json& v) {
  if (v.is_null()) return "n/a";
  return v.get<bool>() ? "yes" : "no";
}

void print_text(const std::string& command, const json& r) {
  if (command == "hooks") {
    std::cout << "lambda " << r["lambda"].dump() << " hooks " << r["hooks"].dump() << "\n"
              << r["modulus"] << "-core: " << yes_no(r["core"]) << "\n";
  } else if (command == "dim") {
    std::cout << "dim S_" << r["lambda"].dump() << "(K^" << r["n"] << ") = " << r["dim"] << "\n";
  } else if (command == "rho") {
    for (const auto& row : r["rho"]) {
      for (const auto& e : row) std::cout << e.get<std::string>() << "\t";
      std::cout << "\n";
    }
  } else if (command == "order" || command == "fix") {
    const auto& o = r["order"];
    std::cout << "N = " << r["N"] << ", rank " << o["rank"] << ", divisors " << o["divisors"].dump() << "\n"
              << "certificate: " << o["certificate"]["label"].get<std::string>() << "\n"
              << "graduated: " << yes_no(o["graduated"]);
    if (!o["M"].is_null()) std::cout << ", M = " << o["M"].dump();
    std::cout << "\n";
    if (command == "fix") {
      const auto& f = r["fix"];
      if (f.contains("polytrope")) {
        std::cout << "polytrope (" << f["polytrope"]["scope"].get<std::string>() << "): " << f["polytrope"]["classes"]
                  << " classes, bounded " << yes_no(f["polytrope"]["bounded"]) << ", points "
                  << f["polytrope"]["points"].dump() << "\n";
      }
      if (f.contains("bfs") && !f["bfs"].is_null()) std::cout << "bfs: " << f["bfs"]["classes"] << " classes\n";
      if (f.contains("agreement")) std::cout << "agreement: " << yes_no(f["agreement"]) << "\n";
      if (!r["irreducibility"].is_null()) {
        std::cout << "residue algebra is everything: " << yes_no(r["irreducibility"]["spans_end_residue"]) << "\n";
      }
      std::cout << "status: " << r["status"].get<std::string>() << "\n";
    }
  } else if (command == "irreducible") {
    std::cout << "irreducible: " << yes_no(r["irreducible"]) << ", invariant subspaces "
              << r["invariant_subspaces"].size() << ", core " << yes_no(r["core"]) << "\n";
  } else if (command == "sample") {
    const auto& inv = r["invariance"];
    std::cout << "exact invariance: " << yes_no(inv["exact_invariant"]) << "\n"
              << "digit statistics pass: " << yes_no(inv["statistics_pass"]) << "\n";
  } else if (command == "scan") {
    for (const auto& row : r["table"]) {
      std::cout << row["case"].dump() << "  " << row["status"].get<std::string>();
      if (row.contains("graduated")) std::cout << "  graduated=" << yes_no(row["graduated"]);
      if (row.contains("fix_size") && !row["fix_size"].is_null()) std::cout << "  fix=" << row["fix_size"];
      if (row.contains("error")) std::cout << "  " << row["error"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << r["summary"].dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Invariant lattices of Schur modules over discretely valued fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(schurlat_version()));

  auto add_case = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Rank n of GL(n)")->check(CLI::Range(1, 64));
    sub->add_option("--lambda", o.lambda, "Partition as a comma list, e.g. 2,1")->required();
    sub->add_option("--field", o.field, "p-adic (alias padic), laurent or unramified")
        ->check(CLI::IsMember({"p-adic", "padic", "laurent", "unramified"}));
    sub->add_option("--p", o.p, "Prime for p-adic and unramified fields");
    sub->add_option("--q", o.q, "Residue field size for laurent fields");
    sub->add_option("--degree", o.degree, "Degree of the unramified extension");
    sub->add_option("--model", o.model, "Coordinate model: weyl or quotient")->check(CLI::IsMember({"weyl", "quotient"}));
    sub->add_option("--level", o.level, "Unit sample level");
    sub->add_option("--trials", o.trials, "Randomized enlargement trials");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--cap-N", o.cap_n, "Largest module dimension accepted");
    sub->add_flag("--json", o.as_json, "Print the JSON report");
  };

  auto* hooks = app.add_subcommand("hooks", "Hook lengths and core test");
  hooks->add_option("--lambda", o.lambda, "Partition")->required();
  hooks->add_option("--p", o.p, "Modulus (0 allowed)");
  hooks->add_flag("--json", o.as_json, "Print JSON");

  auto* dim = app.add_subcommand("dim", "Dimension of S_lambda(K^n)");
  dim->add_option("--n", o.n, "n")->required();
  dim->add_option("--lambda", o.lambda, "Partition")->required();
  dim->add_flag("--json", o.as_json, "Print JSON");

  auto* rho = app.add_subcommand("rho", "Matrix of rho(g)");
  add_case(rho);
  rho->add_option("--g", o.g, "Matrix rows separated by ';', entries by ','")->required();

  auto* order = app.add_subcommand("order", "Order spanned by rho(GL(n,R))");
  add_case(order);
  order->add_flag("--no-basis", o.no_basis, "Omit the basis matrices");

  auto* fix = app.add_subcommand("fix", "Fixed lattice classes with cross-checks");
  add_case(fix);
  fix->add_option("--method", o.method, "polytrope, bfs or both")->check(CLI::IsMember({"polytrope", "bfs", "both"}));
  fix->add_option("--radius", o.radius, "Enumeration radius for unbounded polytropes");
  fix->add_flag("--timings", o.timings, "Include timings in the report");

  auto* irreducible = app.add_subcommand("irreducible", "Residue irreducibility");
  add_case(irreducible);

  auto* sample = app.add_subcommand("sample", "Gaussian samples on the standard lattice");
  add_case(sample);
  sample->add_option("--precision", o.precision, "Residue digits per coordinate");
  sample->add_option("--count", o.count, "Number of samples");
  sample->add_option("--words", o.words, "Random generator words for the pushforward test");
  sample->add_option("--emit", o.emit, "Samples to include in the report");

  auto* scan = app.add_subcommand("scan", "Run the pipeline over a JSON scan configuration");
  scan->add_option("config", o.config, "Configuration file")->required()->check(CLI::ExistingFile);
  scan->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  scan->add_flag("--json", o.as_json, "Print JSON");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  json request;
  if (command == "hooks") {
    request = {{"lambda", lambda_json(o.lambda)}, {"p", o.p}};
  } else if (command == "dim") {
    request = {{"n", o.n}, {"lambda", lambda_json(o.lambda)}};
  } else if (command == "scan") {
    std::ifstream in(o.config);
    json config;
    try {
      config = json::parse(in);
    } catch (const json::exception& e) {
      std::cerr << "error: cannot parse " << o.config << ": " << e.what() << "\n";
      return SCHURLAT_INVALID_INPUT;
    }
    request = {{"config", config}, {"workers", o.workers}};
  } else {
    request = case_json(o);
    if (command == "rho") request["g"] = matrix_json(o.g);
    if (command == "order") request["basis"] = !o.no_basis;
    if (command == "sample") {
      request["precision"] = o.precision;
      request["count"] = o.count;
      request["words"] = o.words;
      request["emit"] = o.emit;
    }
  }

  schurlat_context* ctx = nullptr;
  if (schurlat_context_create(&ctx) != SCHURLAT_OK) return SCHURLAT_INTERNAL_ERROR;
  schurlat_set_progress(ctx, progress_to_stderr, nullptr);
  char* response = nullptr;
  const schurlat_status status = schurlat_run(ctx, command.c_str(), request.dump().c_str(), &response);
  if (response) {
    const json result = json::parse(response);
    schurlat_string_free(response);
    if (o.as_json) {
      std::cout << result.dump(2) << "\n";
    } else {
      print_text(command, result);
    }
  }
  if (status != SCHURLAT_OK) std::cerr << "error: " << schurlat_last_error(ctx) << "\n";
  schurlat_context_destroy(ctx);
  return status;
}
