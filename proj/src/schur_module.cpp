#include "schurlat/schur_module.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "schurlat/error.hpp"

namespace schurlat {

const char* model_name(Model m) { return m == Model::kWeyl ? "weyl" : "quotient"; }

Model parse_model(const std::string& text) {
  if (text == "weyl") return Model::kWeyl;
  if (text == "quotient") return Model::kQuotient;
  fail(ErrorCode::kInvalidInput, "unknown model '" + text + "' (expected weyl|quotient)");
}

namespace {

using Columns = std::vector<std::vector<std::uint8_t>>;

std::string encode(const Columns& cols) {
  std::string key;
  for (const auto& c : cols) {
    key.append(reinterpret_cast<const char*>(c.data()), c.size());
    key.push_back('|');
  }
  return key;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kCapExceeded, "straightening coefficient overflow");
  return r;
}

/// Garnir straightening with memoization on column-sorted fillings.
class Straightener {
 public:
  explicit Straightener(const std::unordered_map<std::string, std::uint32_t>& basis_index)
      : basis_index_(basis_index) {}

  IntExpansion expand(Columns cols) {
    // Alternation within columns.
    int sign = 1;
    for (auto& col : cols) {
      for (std::size_t a = 0; a < col.size(); ++a) {
        for (std::size_t b = 0; b + 1 < col.size() - a; ++b) {
          if (col[b] > col[b + 1]) {
            std::swap(col[b], col[b + 1]);
            sign = -sign;
          }
        }
      }
      for (std::size_t a = 1; a < col.size(); ++a) {
        if (col[a] == col[a - 1]) return {};
      }
    }
    std::string key = encode(cols);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, expand_sorted(cols, key)).first;
    IntExpansion out = it->second;
    if (sign < 0) {
      for (auto& term : out) term.second = -term.second;
    }
    return out;
  }

 private:
  IntExpansion expand_sorted(const Columns& cols, const std::string& key) {
    // Leftmost column pair, topmost row with a strict descent.
    for (std::size_t j = 0; j + 1 < cols.size(); ++j) {
      for (std::size_t i = 0; i < cols[j + 1].size(); ++i) {
        if (cols[j][i] > cols[j + 1][i]) return garnir(cols, j, i);
      }
    }
    auto it = basis_index_.find(key);
    if (it == basis_index_.end()) fail(ErrorCode::kInvariantViolation, "straightening reached a non-basis filling");
    return {{it->second, 1}};
  }

  // Garnir relation on A = column j rows i.., B = column j+1 rows ..i:
  // the alternating sum over distributions of A ∪ B into the A and B slots
  // vanishes, so T = -Σ_{σ ≠ id} sgn(σ) T_σ. Every T_σ has a strictly
  // smaller column-j multiset, which bounds the recursion.
  IntExpansion garnir(const Columns& cols, std::size_t j, std::size_t i) {
    std::vector<std::uint8_t> pool(cols[j].begin() + static_cast<long>(i), cols[j].end());
    const std::size_t a = pool.size();
    pool.insert(pool.end(), cols[j + 1].begin(), cols[j + 1].begin() + static_cast<long>(i) + 1);
    const std::size_t b = i + 1;
    const std::size_t total = a + b;
    const std::uint32_t identity_mask = ((1u << b) - 1u) << a;

    std::map<std::uint32_t, std::int64_t> acc;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != b || mask == identity_mask) continue;
      Columns next = cols;
      std::size_t ai = i, bi = 0;
      int inversions = 0;
      for (std::size_t k = 0; k < total; ++k) {
        if (mask & (1u << k)) {
          next[j + 1][bi++] = pool[k];
        } else {
          next[j][ai++] = pool[k];
          // complement element k precedes every J element; count J elements < k
          inversions += __builtin_popcount(mask & ((1u << k) - 1u));
        }
      }
      const std::int64_t coeff = (inversions % 2 == 0) ? -1 : 1;
      for (const auto& [idx, c] : expand(std::move(next))) {
        acc[idx] = checked_add(acc[idx], coeff * c);
      }
    }
    IntExpansion out;
    for (const auto& [idx, c] : acc) {
      if (c != 0) out.emplace_back(idx, c);
    }
    return out;
  }

  const std::unordered_map<std::string, std::uint32_t>& basis_index_;
  std::unordered_map<std::string, IntExpansion> memo_;
};

}  // namespace

SchurModule::SchurModule(int n, Partition lambda, Model model, const SchurCaps& caps)
    : n_(n), lambda_(std::move(lambda)), model_(model) {
  if (n < 1) fail(ErrorCode::kInvalidInput, "n must be positive");
  if (lambda_.rows() > n) {
    fail(ErrorCode::kInvalidInput,
         "partition " + lambda_.to_string() + " has more than n = " + std::to_string(n) + " rows; S_λ(K^n) = 0");
  }
  if (n > caps.max_n) fail(ErrorCode::kCapExceeded, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_n));
  if (lambda_.size() > caps.max_d) {
    fail(ErrorCode::kCapExceeded, "d = " + std::to_string(lambda_.size()) + " exceeds cap " + std::to_string(caps.max_d));
  }
  std::uint64_t dim = hook_content_dimension(lambda_, n);
  if (dim > caps.max_dim) {
    fail(ErrorCode::kCapExceeded, "N = " + std::to_string(dim) + " exceeds cap " + std::to_string(caps.max_dim));
  }
  long double fillings = 1;
  for (int i = 0; i < lambda_.size(); ++i) fillings *= n;
  if (fillings > static_cast<long double>(caps.max_fillings)) {
    fail(ErrorCode::kCapExceeded, "n^d fillings exceed cap " + std::to_string(caps.max_fillings));
  }

  basis_ = ssyt_enumerate(lambda_, n);
  const auto col_lengths = lambda_.column_lengths();
  for (std::size_t j = 0; j < col_lengths.size(); ++j) {
    for (int i = 0; i < col_lengths[j]; ++i) boxes_.emplace_back(i, static_cast<int>(j));
  }
  for (const auto& t : basis_) {
    std::vector<int> letters;
    for (auto [i, j] : boxes_) {
      letters.push_back(t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - 1);
    }
    basis_letters_.push_back(std::move(letters));
  }

  std::string cache_path;
  if (const char* dir = std::getenv("SCHUR_LATTICE_CACHE"); dir && *dir) {
    std::string name = "straighten-n" + std::to_string(n) + "-l";
    for (int part : lambda_.parts()) name += std::to_string(part) + "_";
    cache_path = (std::filesystem::path(dir) / (name + ".json")).string();
    if (load_cache(cache_path)) {
      from_cache_ = true;
      return;
    }
  }
  build_table();
  if (!cache_path.empty()) store_cache(cache_path);
}

void SchurModule::build_table() {
  const auto col_lengths = lambda_.column_lengths();
  std::unordered_map<std::string, std::uint32_t> basis_index;
  for (std::size_t t = 0; t < basis_letters_.size(); ++t) {
    Columns cols(col_lengths.size());
    for (std::size_t b = 0; b < boxes_.size(); ++b) {
      cols[static_cast<std::size_t>(boxes_[b].second)].push_back(static_cast<std::uint8_t>(basis_letters_[t][b] + 1));
    }
    basis_index.emplace(encode(cols), static_cast<std::uint32_t>(t));
  }
  Straightener straightener(basis_index);
  const std::size_t d = boxes_.size();
  std::uint64_t count = 1;
  for (std::size_t b = 0; b < d; ++b) count *= static_cast<std::uint64_t>(n_);
  table_.assign(count, {});
  for (std::uint64_t code = 0; code < count; ++code) {
    Columns cols(col_lengths.size());
    std::uint64_t rest = code;
    for (std::size_t b = 0; b < d; ++b) {
      cols[static_cast<std::size_t>(boxes_[b].second)].push_back(static_cast<std::uint8_t>(rest % n_ + 1));
      rest /= static_cast<std::uint64_t>(n_);
    }
    table_[code] = straightener.expand(std::move(cols));
  }
}

bool SchurModule::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format").get<int>() != 1 || j.at("n").get<int>() != n_ ||
        j.at("lambda").get<std::vector<int>>() != lambda_.parts() || j.at("dim").get<std::size_t>() != dim()) {
      return false;
    }
    std::vector<IntExpansion> table;
    for (const auto& entry : j.at("expansions")) {
      IntExpansion e;
      for (const auto& term : entry) {
        auto idx = term.at(0).get<std::uint32_t>();
        if (idx >= dim()) return false;
        e.emplace_back(idx, term.at(1).get<std::int64_t>());
      }
      table.push_back(std::move(e));
    }
    std::uint64_t expected = 1;
    for (std::size_t b = 0; b < boxes_.size(); ++b) expected *= static_cast<std::uint64_t>(n_);
    if (table.size() != expected) return false;
    table_ = std::move(table);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void SchurModule::store_cache(const std::string& path) const {
  nlohmann::json j;
  j["format"] = 1;
  j["n"] = n_;
  j["lambda"] = lambda_.parts();
  j["dim"] = dim();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : table_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& [idx, c] : e) row.push_back({idx, c});
    rows.push_back(std::move(row));
  }
  j["expansions"] = std::move(rows);
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::string tmp = path + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(this));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::optional<std::size_t> SchurModule::index_of(const Tableau& t) const {
  auto it = std::find(basis_.begin(), basis_.end(), t);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

IntExpansion SchurModule::straighten(const Tableau& filling) const {
  if (filling.entries.size() != static_cast<std::size_t>(lambda_.rows())) {
    fail(ErrorCode::kShapeMismatch, "filling does not have shape " + lambda_.to_string());
  }
  for (int i = 0; i < lambda_.rows(); ++i) {
    if (filling.entries[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(lambda_.row_length(i))) {
      fail(ErrorCode::kShapeMismatch, "filling does not have shape " + lambda_.to_string());
    }
  }
  std::uint64_t code = 0, weight = 1;
  for (auto [i, j] : boxes_) {
    int letter = filling.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (letter < 1 || letter > n_) fail(ErrorCode::kShapeMismatch, "filling letter out of range 1..n");
    code += static_cast<std::uint64_t>(letter - 1) * weight;
    weight *= static_cast<std::uint64_t>(n_);
  }
  return table_[code];
}

Matrix<FiniteField::Elem> residue_rep(const SchurModule& module, const FiniteField& k,
                                      const Matrix<FiniteField::Elem>& g) {
  if (g.rows() != static_cast<std::size_t>(module.n()) || !g.square()) {
    fail(ErrorCode::kShapeMismatch, "residue_rep: g must be n×n");
  }
  // Invertibility over k via elimination.
  {
    Matrix<FiniteField::Elem> work = g;
    const std::size_t n = g.rows();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = n;
      for (std::size_t r = c; r < n; ++r) {
        if (work(r, c) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == n) fail(ErrorCode::kSingular, "residue_rep: g is singular over the residue field");
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(c, j));
      auto inv = k.inv(work(c, c));
      for (std::size_t r = c + 1; r < n; ++r) {
        auto f = k.mul(work(r, c), inv);
        for (std::size_t j = c; j < n; ++j) work(r, j) = k.sub(work(r, j), k.mul(f, work(c, j)));
      }
    }
  }
  detail::ResidueOps ops{k};
  if (module.model() == Model::kQuotient) return detail::substitution_matrix(module, ops, g);
  return transpose(detail::substitution_matrix(module, ops, transpose(g)));
}

}  // namespace schurlat
