#include "schurlat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "schurlat/error.hpp"

namespace schurlat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorCode::kInvalidInput, "partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) fail(ErrorCode::kInvalidInput, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      fail(ErrorCode::kInvalidInput, "partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) fail(ErrorCode::kInvalidInput, "malformed partition '" + std::string(text) + "'");
    if (!std::all_of(token.begin(), token.end(), ::isdigit) || token.size() > 6) {
      fail(ErrorCode::kInvalidInput, "malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Partition(std::move(parts));
}

std::vector<Partition> Partition::all_of(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (d >= 1) rec(d, d);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int row : parts_) {
    for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

HookProfile hook_lengths(const Partition& lambda) {
  const auto cols = lambda.column_lengths();
  HookProfile hooks;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda.row_length(i); ++j) {
      int arm = lambda.row_length(i) - j - 1;
      int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      row.push_back(arm + leg + 1);
    }
    hooks.push_back(std::move(row));
  }
  return hooks;
}

bool is_core(const Partition& lambda, int m) {
  if (m < 0) fail(ErrorCode::kInvalidInput, "core modulus must be nonnegative");
  if (m == 0) return true;
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) {
      if (h % m == 0) return false;
    }
  }
  return true;
}

std::uint64_t hook_content_dimension(const Partition& lambda, int n) {
  if (lambda.rows() > n) return 0;
  // Accumulate as an exact rational in 128-bit integers.
  unsigned __int128 num = 1, den = 1;
  const auto hooks = hook_lengths(lambda);
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.row_length(i); ++j) {
      num *= static_cast<unsigned>(n + j - i);
      den *= static_cast<unsigned>(hooks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      unsigned __int128 a = num, b = den;
      while (b) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
      }
      num /= a;
      den /= a;
    }
  }
  if (den != 1) fail(ErrorCode::kInvariantViolation, "hook content formula is not integral");
  return static_cast<std::uint64_t>(num);
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (j > 0 && entries[i][j] < entries[i][j - 1]) return false;
      if (i > 0 && entries[i][j] <= entries[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> out;
  for (const auto& row : entries) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<Tableau> ssyt_enumerate(const Partition& lambda, int n) {
  std::vector<Tableau> out;
  if (n < 1 || lambda.rows() > n) return out;
  Tableau t;
  for (int i = 0; i < lambda.rows(); ++i) t.entries.emplace_back(static_cast<std::size_t>(lambda.row_length(i)), 0);
  // Fill in row-reading order, trying letters in increasing order, so the
  // output is already lexicographic in the row word.
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    for (std::size_t j = 0; j < t.entries[i].size(); ++j) boxes.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = boxes[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.entries[i][j - 1]);
    if (i > 0) lo = std::max(lo, t.entries[i - 1][j] + 1);
    for (int letter = lo; letter <= n; ++letter) {
      t.entries[i][j] = letter;
      rec(k + 1);
    }
    t.entries[i][j] = 0;
  };
  rec(0);
  return out;
}

}  // namespace schurlat
