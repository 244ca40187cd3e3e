#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// A representation of a quiver: a space k^{dims[i]} at every vertex and a
/// matrix X_a : k^{dims[tail]} -> k^{dims[head]} (acting on columns) on every
/// arrow, so X_a has dims[head] rows and dims[tail] columns.
class Representation {
 public:
  /// Throws ShapeError if a matrix has the wrong shape or field, or a
  /// dimension is negative.
  Representation(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims, std::vector<Matrix> maps);

  /// All spaces zero.
  static Representation zero(std::shared_ptr<const Quiver> quiver, Field field);
  /// One-dimensional at vertex i, zero elsewhere.
  static Representation simple(std::shared_ptr<const Quiver> quiver, Field field, std::size_t i);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
  Field field() const noexcept { return field_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t vertex) const { return static_cast<std::size_t>(dims_[vertex]); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  std::size_t total_dim() const { return static_cast<std::size_t>(dims_.sum()); }

  Representation change_field(Field target) const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  std::shared_ptr<const Quiver> quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

/// One matrix per vertex; a homomorphism when every square commutes.
using VertexMaps = std::vector<Matrix>;
/// One matrix per arrow; an Ext^1 cocycle.
using ArrowMaps = std::vector<Matrix>;

/// phi_head X_a == Y_a phi_tail for every arrow.
bool is_homomorphism(const Representation& x, const Representation& y, const VertexMaps& phi);

/// Vertexwise composition g o f.
VertexMaps compose(const VertexMaps& g, const VertexMaps& f);

struct HomBasis {
  Representation source;
  Representation target;
  /// Linearly independent, echelonized in the flattened coordinates (vertex
  /// order, each block row-major).
  std::vector<VertexMaps> elements;

  std::size_t dim() const noexcept { return elements.size(); }
};

struct ExtCocycleBasis {
  Representation source;
  Representation target;
  /// f_a : source_{tail(a)} -> target_{head(a)}. The unit vectors of the
  /// coordinates not reached by the pivots of im(d).
  std::vector<ArrowMaps> cocycles;

  std::size_t dim() const noexcept { return cocycles.size(); }
};

/// Solution space of phi_head X_a - Y_a phi_tail = 0 over all arrows.
HomBasis hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);
std::size_t end_dim(const Representation& x);

/// dim Hom(x,y) - <dim x, dim y>. Throws ConsistencyError if negative.
std::size_t ext_dim_formula(const Representation& x, const Representation& y);

/// The matrix of d : (+)_i Hom(s_i, x_i) -> (+)_a Hom(s_tail, x_head),
/// d(phi)_a = phi_head S_a - X_a phi_tail, in flattened coordinates.
Matrix ext_differential(const Representation& s, const Representation& x);

/// Coset representatives of coker d. Throws ConsistencyError when the count
/// disagrees with ext_dim_formula.
ExtCocycleBasis ext_cocycle_basis(const Representation& s, const Representation& x);

/// Block diagonal on every arrow.
Representation direct_sum(const Representation& x, const Representation& y);
/// x (+) ... (+) x, `copies` times; zero representation for copies == 0.
Representation direct_power(const Representation& x, std::size_t copies);

enum class SubQuotientKind { Subrepresentation, Quotient };

struct SubQuotient {
  SubQuotientKind kind;
  Representation ambient;
  Representation induced;
  /// Subrepresentation: inclusions induced -> ambient (full column rank).
  /// Quotient: projections ambient -> induced (full row rank).
  VertexMaps maps;
};

/// The common kernel of all homomorphisms x -> s.
SubQuotient kernel_intersection(const Representation& x, const Representation& s);
/// y / y', y' the sum of the images of all homomorphisms s -> y. Quotient
/// coordinates are the non-pivot coordinates of the echelonized y'.
SubQuotient image_sum_quotient(const Representation& s, const Representation& y);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 20U;

/// Over F_p, enumerates all p^{dim End} endomorphisms and checks that 0 and
/// the identity are the only idempotents. Throws BudgetExceeded when
/// p^{dim End} > budget and ShapeError over the rationals.
bool is_indecomposable_fp(const Representation& x, std::uint64_t budget = kDefaultSearchBudget);

/// Some isomorphism x -> y from the span of Hom(x,y), or nullopt. Exhaustive
/// over F_p within budget (BudgetExceeded beyond it); over the rationals a
/// deterministic sequence of integer combinations is tried, which finds one
/// whenever it exists except with negligible probability.
std::optional<VertexMaps> find_isomorphism(const Representation& x, const Representation& y,
                                           std::uint64_t budget = kDefaultSearchBudget);

}  // namespace qrep
