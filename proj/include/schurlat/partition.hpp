#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schurlat {

/// Integer partition λ ⊢ d with parts in weakly decreasing order.
class Partition {
 public:
  /// Throws InvalidInput unless parts is nonempty, weakly decreasing and
  /// positive.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1" style text.
  static Partition parse(std::string_view text);

  /// All partitions of d, in decreasing lexicographic order.
  static std::vector<Partition> all_of(int d);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // d
  int rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  Partition conjugate() const;
  /// Column lengths, i.e. the parts of the conjugate.
  std::vector<int> column_lengths() const { return conjugate().parts_; }

  std::string to_string() const;  // "2,1"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// hooks[i][j] is the hook length of box (i, j), 0-indexed.
using HookProfile = std::vector<std::vector<int>>;

HookProfile hook_lengths(const Partition& lambda);

/// True iff m == 0 or no hook length of λ is divisible by m.
bool is_core(const Partition& lambda, int m);

/// dim S_λ(K^n) = ∏ (n + j - i) / hook(i, j); zero when λ has more than n rows.
std::uint64_t hook_content_dimension(const Partition& lambda, int n);

/// A filling of the Young diagram; entries[i][j] is the letter in row i,
/// column j (letters are 1-based).
struct Tableau {
  std::vector<std::vector<int>> entries;

  bool is_semistandard() const;
  /// Row-reading word: rows top to bottom, each left to right.
  std::vector<int> row_word() const;
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.entries == b.entries; }
};

/// Every semistandard tableau of shape λ with entries in {1..n}, ordered
/// lexicographically by row-reading word. This order fixes the coordinate
/// system of every Schur-module matrix.
std::vector<Tableau> ssyt_enumerate(const Partition& lambda, int n);

}  // namespace schurlat
