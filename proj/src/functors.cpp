#include "qrep/functors.hpp"

#include "qrep/error.hpp"

namespace qrep {

namespace {

void require_exceptional(const Representation& s) {
  if (!is_exceptional(s)) {
    throw PreconditionError("S with dimension vector (" + s.dims().to_string() +
                            ") is not exceptional: End(S) != k or Ext^1(S,S) != 0");
  }
}

// [I; 0] : k^top -> k^{top + bottom}
Matrix top_inclusion(Field field, std::size_t top, std::size_t bottom) {
  return vstack(Matrix::identity(field, top), Matrix(field, bottom, top));
}

// [0 | I] : k^{top + bottom} -> k^bottom
Matrix bottom_projection(Field field, std::size_t top, std::size_t bottom) {
  return hstack(Matrix(field, bottom, top), Matrix::identity(field, bottom));
}

FunctorResult kernel_construction(const Representation& s, const Representation& x) {
  const auto homs = hom_basis(x, s);
  const std::size_t r = homs.dim();
  auto sub = kernel_intersection(x, s);
  VertexMaps projection;
  for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) {
    Matrix stacked(x.field(), 0, x.dim(i));
    for (const auto& phi : homs.elements) stacked = vstack(stacked, phi[i]);
    projection.push_back(std::move(stacked));
  }
  ExactSequence witness{sub.induced, x, direct_power(s, r), std::move(sub.maps), std::move(projection)};
  return {sub.induced, r, {std::move(witness)}};
}

FunctorResult quotient_construction(const Representation& s, const Representation& y) {
  const auto homs = hom_basis(s, y);
  const std::size_t m = homs.dim();
  auto quotient = image_sum_quotient(s, y);
  VertexMaps inclusion;
  for (std::size_t i = 0; i < y.quiver().vertex_count(); ++i) {
    Matrix joined(y.field(), y.dim(i), 0);
    for (const auto& psi : homs.elements) joined = hstack(joined, psi[i]);
    inclusion.push_back(std::move(joined));
  }
  ExactSequence witness{direct_power(s, m), y, quotient.induced, std::move(inclusion), std::move(quotient.maps)};
  return {quotient.induced, m, {std::move(witness)}};
}

void append(FunctorResult& into, FunctorResult&& stage) {
  into.output = std::move(stage.output);
  into.multiplicity += stage.multiplicity;
  for (auto& w : stage.witnesses) into.witnesses.push_back(std::move(w));
}

}  // namespace

MembershipReport membership(const Representation& s, const Representation& x) {
  MembershipReport report;
  report.hom_xs_dim = hom_dim(x, s);
  report.hom_sx_dim = hom_dim(s, x);
  report.ext_sx_dim = ext_cocycle_basis(s, x).dim();
  report.ext_xs_dim = ext_cocycle_basis(x, s).dim();
  return report;
}

bool is_exceptional(const Representation& s) { return end_dim(s) == 1 && ext_dim_formula(s, s) == 0; }

bool ExactSequence::is_exact() const {
  if (!is_homomorphism(left, middle, inclusion) || !is_homomorphism(middle, right, projection)) return false;
  for (std::size_t i = 0; i < middle.quiver().vertex_count(); ++i) {
    if (middle.dim(i) != left.dim(i) + right.dim(i)) return false;
    if (!(projection[i] * inclusion[i]).is_zero()) return false;
    if (rank(inclusion[i]) != left.dim(i) || rank(projection[i]) != right.dim(i)) return false;
  }
  return true;
}

DimVector reflected_dim(const Quiver& q, const DimVector& x_dim, const DimVector& s_dim) {
  return x_dim - sym_form(q, x_dim, s_dim) * s_dim;
}

std::int64_t predicted_end_dim(const Quiver& q, const DimVector& x_dim, const DimVector& s_dim, std::int64_t end_x,
                               Direction direction) {
  const std::int64_t correction = euler_form(q, x_dim, s_dim) * euler_form(q, s_dim, x_dim);
  return direction == Direction::Forward ? end_x + correction : end_x - correction;
}

FunctorResult sigma_bar(const Representation& s, const Representation& x) {
  require_exceptional(s);
  if (hom_dim(x, s) != 0) throw PreconditionError("sigma_bar: Hom(X,S) != 0");

  const auto ext = ext_cocycle_basis(s, x);
  const std::size_t r = ext.dim();
  const Field field = x.field();
  const auto& arrows = x.quiver().arrows();
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    Matrix f(field, x.dim(arrows[k].head), 0);
    for (const auto& cocycle : ext.cocycles) f = hstack(f, cocycle[k]);
    const Matrix bottom = hstack(Matrix(field, r * s.dim(arrows[k].head), x.dim(arrows[k].tail)),
                                 repeat_diagonal(s.map(k), r));
    maps.push_back(vstack(hstack(x.map(k), f), bottom));
  }
  const DimVector dims = x.dims() + static_cast<std::int64_t>(r) * s.dims();
  Representation z(x.quiver_ptr(), field, dims, std::move(maps));

  VertexMaps inclusion;
  VertexMaps projection;
  for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) {
    inclusion.push_back(top_inclusion(field, x.dim(i), r * s.dim(i)));
    projection.push_back(bottom_projection(field, x.dim(i), r * s.dim(i)));
  }
  ExactSequence witness{x, z, direct_power(s, r), std::move(inclusion), std::move(projection)};
  if (!witness.is_exact()) throw ConsistencyError("sigma_bar: extension sequence is not exact");
  if (ext_cocycle_basis(s, z).dim() != 0) throw ConsistencyError("sigma_bar: Ext^1(S, Z) != 0");
  return {std::move(z), r, {std::move(witness)}};
}

FunctorResult sigma_under(const Representation& s, const Representation& y) {
  require_exceptional(s);
  if (hom_dim(s, y) != 0) throw PreconditionError("sigma_under: Hom(S,Y) != 0");

  const auto ext = ext_cocycle_basis(y, s);
  const std::size_t m = ext.dim();
  const Field field = y.field();
  const auto& arrows = y.quiver().arrows();
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    Matrix g(field, 0, y.dim(arrows[k].tail));
    for (const auto& cocycle : ext.cocycles) g = vstack(g, cocycle[k]);
    const Matrix top = hstack(repeat_diagonal(s.map(k), m), g);
    const Matrix bottom = hstack(Matrix(field, y.dim(arrows[k].head), m * s.dim(arrows[k].tail)), y.map(k));
    maps.push_back(vstack(top, bottom));
  }
  const DimVector dims = static_cast<std::int64_t>(m) * s.dims() + y.dims();
  Representation u(y.quiver_ptr(), field, dims, std::move(maps));

  VertexMaps inclusion;
  VertexMaps projection;
  for (std::size_t i = 0; i < y.quiver().vertex_count(); ++i) {
    inclusion.push_back(top_inclusion(field, m * s.dim(i), y.dim(i)));
    projection.push_back(bottom_projection(field, m * s.dim(i), y.dim(i)));
  }
  ExactSequence witness{direct_power(s, m), u, y, std::move(inclusion), std::move(projection)};
  if (!witness.is_exact()) throw ConsistencyError("sigma_under: extension sequence is not exact");
  if (ext_cocycle_basis(u, s).dim() != 0) throw ConsistencyError("sigma_under: Ext^1(U, S) != 0");
  return {std::move(u), m, {std::move(witness)}};
}

FunctorResult sigma(const Representation& s, const Representation& x) {
  require_exceptional(s);
  if (hom_dim(x, s) != 0) throw PreconditionError("sigma: Hom(X,S) != 0");
  if (hom_dim(s, x) != 0) throw PreconditionError("sigma: Hom(S,X) != 0");

  FunctorResult result = sigma_bar(s, x);
  if (hom_dim(s, result.output) != 0) throw ConsistencyError("sigma: Hom(S, sigma_bar(X)) != 0");
  append(result, sigma_under(s, result.output));

  const Quiver& q = x.quiver();
  if (result.output.dims() != reflected_dim(q, x.dims(), s.dims())) {
    throw ConsistencyError("sigma: output dimension (" + result.output.dims().to_string() +
                           ") differs from the reflected dimension");
  }
  const auto predicted =
      predicted_end_dim(q, x.dims(), s.dims(), static_cast<std::int64_t>(end_dim(x)), Direction::Forward);
  const auto measured = static_cast<std::int64_t>(end_dim(result.output));
  if (measured != predicted) {
    throw ConsistencyError("sigma: dim End of the output is " + std::to_string(measured) + ", predicted " +
                           std::to_string(predicted));
  }
  return result;
}

FunctorResult sigma_bar_inv(const Representation& s, const Representation& x) {
  require_exceptional(s);
  if (ext_cocycle_basis(s, x).dim() != 0) throw PreconditionError("sigma_bar_inv: Ext^1(S,X) != 0");
  return kernel_construction(s, x);
}

FunctorResult sigma_under_inv(const Representation& s, const Representation& y) {
  require_exceptional(s);
  if (ext_cocycle_basis(y, s).dim() != 0) throw PreconditionError("sigma_under_inv: Ext^1(Y,S) != 0");
  return quotient_construction(s, y);
}

FunctorResult sigma_inv(const Representation& s, const Representation& x) {
  require_exceptional(s);
  if (ext_cocycle_basis(s, x).dim() != 0) throw PreconditionError("sigma_inv: Ext^1(S,X) != 0");
  if (ext_cocycle_basis(x, s).dim() != 0) throw PreconditionError("sigma_inv: Ext^1(X,S) != 0");
  // The intermediate quotient is only guaranteed to satisfy the kernel step's
  // precondition for genuine members of M^S_S, so it is not re-checked.
  FunctorResult result = quotient_construction(s, x);
  append(result, kernel_construction(s, result.output));
  return result;
}

}  // namespace qrep
