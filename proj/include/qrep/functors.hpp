#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qrep/representation.hpp"

namespace qrep {

/// Hom and Ext dimensions between a fixed S and a representation X, with
/// the vanishing flags cutting out the categories M^{-S}, M_{-S} and the
/// Ext parts of M^S, M_S. The direct-summand clauses of M^S and M_S are not
/// decided.
struct MembershipReport {
  std::size_t hom_xs_dim = 0;
  std::size_t hom_sx_dim = 0;
  std::size_t ext_sx_dim = 0;
  std::size_t ext_xs_dim = 0;

  /// Hom(X,S) = 0
  bool hom_xs_vanishes() const noexcept { return hom_xs_dim == 0; }
  /// Hom(S,X) = 0
  bool hom_sx_vanishes() const noexcept { return hom_sx_dim == 0; }
  /// Ext^1(S,X) = 0
  bool ext_sx_vanishes() const noexcept { return ext_sx_dim == 0; }
  /// Ext^1(X,S) = 0
  bool ext_xs_vanishes() const noexcept { return ext_xs_dim == 0; }
  static constexpr bool summand_clauses_decided = false;
};

MembershipReport membership(const Representation& s, const Representation& x);

/// End(S) = k and Ext^1(S,S) = 0.
bool is_exceptional(const Representation& s);

/// 0 -> left -> middle -> right -> 0 with vertexwise maps.
struct ExactSequence {
  Representation left;
  Representation middle;
  Representation right;
  VertexMaps inclusion;   // left -> middle
  VertexMaps projection;  // middle -> right

  /// Both maps are homomorphisms, compose to zero, the inclusion is injective,
  /// the projection surjective, and dims add up at every vertex.
  bool is_exact() const;
};

struct FunctorResult {
  Representation output;
  /// Copies of S added (forward) or split off (inverse), summed over stages.
  std::size_t multiplicity = 0;
  /// One witness per construction stage, in the order applied.
  std::vector<ExactSequence> witnesses;
};

/// dim X - (dim X, dim S) dim S.
DimVector reflected_dim(const Quiver& q, const DimVector& x_dim, const DimVector& s_dim);

enum class Direction { Forward, Inverse };

/// end_x + <x,s><s,x> (forward) or end_x - <x,s><s,x> (inverse).
std::int64_t predicted_end_dim(const Quiver& q, const DimVector& x_dim, const DimVector& s_dim, std::int64_t end_x,
                               Direction direction);

// All functors require S exceptional and throw PreconditionError otherwise.

/// Universal extension 0 -> X -> Z -> S^r -> 0 built from a basis of
/// Ext^1(S,X): Z_a = [[X_a, F_a], [0, S_a^r]]. Requires Hom(X,S) = 0.
FunctorResult sigma_bar(const Representation& s, const Representation& x);
/// Dual: 0 -> S^m -> U -> Y -> 0 from a basis of Ext^1(Y,S):
/// U_a = [[S_a^m, G_a], [0, Y_a]]. Requires Hom(S,Y) = 0.
FunctorResult sigma_under(const Representation& s, const Representation& y);
/// sigma_under(s, sigma_bar(s, x)). Requires Hom(X,S) = 0 = Hom(S,X).
FunctorResult sigma(const Representation& s, const Representation& x);

/// X^{-S}, the common kernel of all maps X -> S. Requires Ext^1(S,X) = 0.
/// The witness 0 -> X^{-S} -> X -> S^r -> 0 is exact iff the maps X -> S
/// are jointly surjective; FunctorResult records it either way.
FunctorResult sigma_bar_inv(const Representation& s, const Representation& x);
/// Y / Y'. Requires Ext^1(Y,S) = 0.
FunctorResult sigma_under_inv(const Representation& s, const Representation& y);
/// sigma_bar_inv(s, sigma_under_inv(s, x)). Requires both Ext groups to vanish.
FunctorResult sigma_inv(const Representation& s, const Representation& x);

}  // namespace qrep
