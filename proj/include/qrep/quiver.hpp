#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

/// Vertices are indexed 0..n-1 in code and printed 1..n.
struct Arrow {
  std::string label;
  std::size_t tail;
  std::size_t head;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver without loops.
class Quiver {
 public:
  /// Throws ShapeError on loops, duplicate labels or out-of-range vertices.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  /// Throws ShapeError if no arrow carries the label.
  std::size_t arrow_index(const std::string& label) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

/// Integer vector indexed by vertices. Entries may go negative while
/// reflecting.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  DimVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  /// The coordinate vector e_i.
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  std::int64_t sum() const;
  bool is_nonnegative() const;
  /// a > 0: nonnegative and nonzero.
  bool is_positive() const;
  /// If this is some e_i, its index.
  std::optional<std::size_t> simple_index() const;

  DimVector& operator+=(const DimVector& other);
  DimVector& operator-=(const DimVector& other);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(std::int64_t k, DimVector a);
  friend DimVector operator-(DimVector a);

  friend bool operator==(const DimVector&, const DimVector&) = default;
  /// Lexicographic; used for sorting only. The root order is dominates().
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  /// "1,1,1,8,12,2,7,7"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// a >= b componentwise.
bool dominates(const DimVector& a, const DimVector& b);
/// a > b: a >= b and a != b.
bool strictly_dominates(const DimVector& a, const DimVector& b);

/// Letters are vertex indices; the rightmost letter acts first.
class ReflectionWord {
 public:
  ReflectionWord() = default;
  explicit ReflectionWord(std::vector<std::size_t> letters) : letters_(std::move(letters)) {}
  ReflectionWord(std::initializer_list<std::size_t> letters) : letters_(letters) {}

  const std::vector<std::size_t>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  ReflectionWord reversed() const;

  friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;

  /// "s8 s7 s5 ..." with 1-based vertex names.
  std::string to_string() const;

 private:
  std::vector<std::size_t> letters_;
};

/// The Ringel form <a,b> = sum_i a_i b_i - sum_arrows a_tail b_head.
std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
/// (a,b) = <a,b> + <b,a>.
std::int64_t sym_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// s_i(a) = a - (a, e_i) e_i.
DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& a);
DimVector apply_word(const Quiver& q, const ReflectionWord& w, const DimVector& a);

/// Reflection descent: repeatedly apply the smallest s_i with (a, e_i) > 0
/// until a simple root is reached (real), no such i exists (a is in the
/// fundamental region, imaginary) or a coordinate goes negative.
bool is_positive_real_root(const Quiver& q, const DimVector& a);

/// A word for the reflection s_a attached to the positive real root a, built
/// by s_a = s_i s_{a'} s_i with a' = s_i(a) < a for the smallest such i.
/// Throws PreconditionError if a is not a positive real root.
ReflectionWord reflection_word_for_root(const Quiver& q, const DimVector& a);

/// Real roots b with 0 < b < a and <a,b> >= 0, <b,a> >= 0. These are the
/// filtered word-suffix roots of s_a (the b with (a,b) > 0) together with
/// the real roots in the box [0,a] orthogonal to a under both pairings, which
/// s_a fixes and the word cannot see. Deduplicated, sorted lexicographically.
/// Throws PreconditionError if a is not a positive real root and
/// BudgetExceeded if the box has more than box_budget points.
std::vector<DimVector> reflection_candidates(const Quiver& q, const DimVector& a,
                                             std::uint64_t box_budget = std::uint64_t{1} << 32U);

/// With s_a = s_{i_1} ... s_{i_n}, the roots s_{i_n} ... s_{i_{m+1}}(e_{i_m})
/// that are positive, below a, and pair nonnegatively with a both ways.
std::vector<DimVector> inversion_candidates(const Quiver& q, const DimVector& a);

/// Positive real roots b < a with <a,b> = <b,a> = 0, by enumerating [0,a].
std::vector<DimVector> orthogonal_candidates(const Quiver& q, const DimVector& a,
                                             std::uint64_t box_budget = std::uint64_t{1} << 32U);

/// All word-suffix roots before filtering, in order m = 1..n.
std::vector<DimVector> word_suffix_roots(const Quiver& q, const ReflectionWord& w);

}  // namespace qrep
