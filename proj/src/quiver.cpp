#include "qrep/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qrep/error.hpp"

namespace qrep {

namespace {

void require_length(const Quiver& q, const DimVector& a) {
  if (a.size() != q.vertex_count()) {
    throw ShapeError("vector of length " + std::to_string(a.size()) + " on a quiver with " +
                     std::to_string(q.vertex_count()) + " vertices");
  }
}

void require_vertex(const Quiver& q, std::size_t i) {
  if (i >= q.vertex_count()) {
    throw ShapeError("vertex " + std::to_string(i + 1) + " out of range 1.." + std::to_string(q.vertex_count()));
  }
}

// Smallest i with (a, e_i) > 0, i.e. s_i(a) < a.
std::optional<std::size_t> descent_vertex(const Quiver& q, const DimVector& a) {
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (sym_form(q, a, DimVector::unit(q.vertex_count(), i)) > 0) return i;
  }
  return std::nullopt;
}

}  // namespace

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ == 0) throw ShapeError("a quiver needs at least one vertex");
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw ShapeError("arrow " + a.label + " has an endpoint outside 1.." + std::to_string(vertex_count_));
    }
    if (a.tail == a.head) throw ShapeError("arrow " + a.label + " is a loop");
    if (!labels.insert(a.label).second) throw ShapeError("duplicate arrow label " + a.label);
  }
}

std::size_t Quiver::arrow_index(const std::string& label) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    if (arrows_[k].label == label) return k;
  }
  throw ShapeError("no arrow labelled " + label);
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector e = zero(n);
  e[i] = 1;
  return e;
}

std::int64_t DimVector::sum() const {
  std::int64_t s = 0;
  for (auto c : coords_) s += c;
  return s;
}

bool DimVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool DimVector::is_positive() const {
  return is_nonnegative() && std::any_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c != 0; });
}

std::optional<std::size_t> DimVector::simple_index() const {
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (coords_[i] != 1 || index) return std::nullopt;
    index = i;
  }
  return index;
}

DimVector& DimVector::operator+=(const DimVector& other) {
  if (size() != other.size()) throw ShapeError("adding vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& other) {
  if (size() != other.size()) throw ShapeError("subtracting vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DimVector operator*(std::int64_t k, DimVector a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

DimVector operator-(DimVector a) { return -1 * std::move(a); }

std::string DimVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  return os.str();
}

bool dominates(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw ShapeError("comparing vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool strictly_dominates(const DimVector& a, const DimVector& b) { return dominates(a, b) && a != b; }

ReflectionWord ReflectionWord::reversed() const {
  return ReflectionWord(std::vector<std::size_t>(letters_.rbegin(), letters_.rend()));
}

std::string ReflectionWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? " s" : "s") << letters_[k] + 1;
  return os.str();
}

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_length(q, a);
  require_length(q, b);
  std::int64_t value = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) value += a[i] * b[i];
  for (const auto& arrow : q.arrows()) value -= a[arrow.tail] * b[arrow.head];
  return value;
}

std::int64_t sym_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& a) {
  require_vertex(q, i);
  require_length(q, a);
  DimVector out = a;
  out[i] -= sym_form(q, a, DimVector::unit(q.vertex_count(), i));
  return out;
}

DimVector apply_word(const Quiver& q, const ReflectionWord& w, const DimVector& a) {
  DimVector out = a;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = simple_reflection(q, *it, out);
  return out;
}

bool is_positive_real_root(const Quiver& q, const DimVector& a) {
  require_length(q, a);
  if (!a.is_positive()) return false;
  DimVector current = a;
  while (!current.simple_index()) {
    const auto i = descent_vertex(q, current);
    if (!i) return false;
    current = simple_reflection(q, *i, current);
    if (!current.is_nonnegative()) return false;
  }
  return true;
}

ReflectionWord reflection_word_for_root(const Quiver& q, const DimVector& a) {
  if (!is_positive_real_root(q, a)) {
    throw PreconditionError("(" + a.to_string() + ") is not a positive real root");
  }
  std::vector<std::size_t> descent;
  DimVector current = a;
  while (!current.simple_index()) {
    const std::size_t i = *descent_vertex(q, current);
    descent.push_back(i);
    current = simple_reflection(q, i, current);
  }
  std::vector<std::size_t> letters = descent;
  letters.push_back(*current.simple_index());
  letters.insert(letters.end(), descent.rbegin(), descent.rend());
  return ReflectionWord(std::move(letters));
}

std::vector<DimVector> word_suffix_roots(const Quiver& q, const ReflectionWord& w) {
  const auto& letters = w.letters();
  const std::size_t n = q.vertex_count();
  std::vector<DimVector> roots;
  roots.reserve(letters.size());
  for (std::size_t m = 0; m < letters.size(); ++m) {
    DimVector beta = DimVector::unit(n, letters[m]);
    for (std::size_t k = m + 1; k < letters.size(); ++k) beta = simple_reflection(q, letters[k], beta);
    roots.push_back(std::move(beta));
  }
  return roots;
}

std::vector<DimVector> inversion_candidates(const Quiver& q, const DimVector& a) {
  const auto word = reflection_word_for_root(q, a);
  std::set<DimVector> kept;
  for (auto& beta : word_suffix_roots(q, word)) {
    if (!beta.is_positive() || !strictly_dominates(a, beta)) continue;
    if (euler_form(q, a, beta) < 0 || euler_form(q, beta, a) < 0) continue;
    kept.insert(std::move(beta));
  }
  return {kept.begin(), kept.end()};
}

std::vector<DimVector> orthogonal_candidates(const Quiver& q, const DimVector& a, std::uint64_t box_budget) {
  if (!is_positive_real_root(q, a)) {
    throw PreconditionError("(" + a.to_string() + ") is not a positive real root");
  }
  const std::size_t n = q.vertex_count();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (points > box_budget / static_cast<std::uint64_t>(a[i] + 1)) {
      throw BudgetExceeded("box below (" + a.to_string() + ") exceeds " + std::to_string(box_budget) + " points");
    }
    points *= static_cast<std::uint64_t>(a[i] + 1);
  }

  // Both pairings are linear in b.
  std::vector<std::int64_t> left(n);
  std::vector<std::int64_t> right(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = DimVector::unit(n, i);
    left[i] = euler_form(q, a, e);
    right[i] = euler_form(q, e, a);
  }

  std::set<DimVector> kept;
  DimVector b = DimVector::zero(n);
  std::int64_t pair_left = 0;
  std::int64_t pair_right = 0;
  while (true) {
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (b[i] < a[i]) {
        ++b[i];
        pair_left += left[i];
        pair_right += right[i];
        break;
      }
      pair_left -= left[i] * b[i];
      pair_right -= right[i] * b[i];
      b[i] = 0;
    }
    if (i == n || b == a) break;
    if (pair_left != 0 || pair_right != 0) continue;
    if (euler_form(q, b, b) == 1 && is_positive_real_root(q, b)) kept.insert(b);
  }
  return {kept.begin(), kept.end()};
}

std::vector<DimVector> reflection_candidates(const Quiver& q, const DimVector& a, std::uint64_t box_budget) {
  std::set<DimVector> kept;
  for (auto& beta : inversion_candidates(q, a)) kept.insert(std::move(beta));
  for (auto& beta : orthogonal_candidates(q, a, box_budget)) kept.insert(std::move(beta));
  return {kept.begin(), kept.end()};
}

}  // namespace qrep
