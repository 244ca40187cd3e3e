#include "qrep/representation.hpp"

#include <algorithm>
#include <string>

#include "qrep/error.hpp"

namespace qrep {

namespace {

void require_compatible(const Representation& x, const Representation& y, const char* what) {
  if (!(x.quiver() == y.quiver())) throw ShapeError(std::string(what) + ": representations of different quivers");
  if (x.field() != y.field()) {
    throw ShapeError(std::string(what) + ": representations over " + x.field().name() + " and " + y.field().name());
  }
}

// Column offsets of the per-vertex blocks Hom(x_i, y_i), each y_i x x_i,
// flattened row-major.
std::vector<std::size_t> vertex_offsets(const Representation& x, const Representation& y) {
  std::vector<std::size_t> offsets(x.quiver().vertex_count() + 1, 0);
  for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) offsets[i + 1] = offsets[i] + y.dim(i) * x.dim(i);
  return offsets;
}

// Row offsets of the per-arrow blocks Hom(x_tail, y_head).
std::vector<std::size_t> arrow_offsets(const Representation& x, const Representation& y) {
  const auto& arrows = x.quiver().arrows();
  std::vector<std::size_t> offsets(arrows.size() + 1, 0);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    offsets[k + 1] = offsets[k] + y.dim(arrows[k].head) * x.dim(arrows[k].tail);
  }
  return offsets;
}

// Rows: arrow coordinates; columns: vertex coordinates. Row block of arrow a
// is phi_head X_a - Y_a phi_tail.
Matrix commuting_square_system(const Representation& x, const Representation& y) {
  const Field field = x.field();
  const auto vo = vertex_offsets(x, y);
  const auto ao = arrow_offsets(x, y);
  Matrix system(field, ao.back(), vo.back());
  const auto& arrows = x.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t t = arrows[k].tail;
    const std::size_t h = arrows[k].head;
    const Matrix& xa = x.map(k);
    const Matrix& ya = y.map(k);
    const std::size_t cols_t = x.dim(t);
    for (std::size_t r = 0; r < y.dim(h); ++r) {
      for (std::size_t c = 0; c < cols_t; ++c) {
        const std::size_t row = ao[k] + r * cols_t + c;
        // phi_h[r, m] * X_a[m, c]
        for (std::size_t m = 0; m < x.dim(h); ++m) {
          if (!xa(m, c).is_zero()) system(row, vo[h] + r * x.dim(h) + m) += xa(m, c);
        }
        // - Y_a[r, m] * phi_t[m, c]
        for (std::size_t m = 0; m < y.dim(t); ++m) {
          if (!ya(r, m).is_zero()) system(row, vo[t] + m * cols_t + c) -= ya(r, m);
        }
      }
    }
  }
  return system;
}

VertexMaps unflatten_vertex_maps(const Representation& x, const Representation& y, const Matrix& v) {
  const auto vo = vertex_offsets(x, y);
  VertexMaps maps;
  for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) {
    Matrix phi(x.field(), y.dim(i), x.dim(i));
    for (std::size_t r = 0; r < y.dim(i); ++r) {
      for (std::size_t c = 0; c < x.dim(i); ++c) phi(r, c) = v(vo[i] + r * x.dim(i) + c, 0);
    }
    maps.push_back(std::move(phi));
  }
  return maps;
}

// The X with a X = b; a must have full column rank and the system must be
// consistent.
Matrix solve_exact(const Matrix& a, const Matrix& b) {
  const auto [reduced, pivots] = rref(hstack(a, b));
  if (pivots.size() != a.cols() || (!pivots.empty() && pivots.back() >= a.cols())) {
    throw ConsistencyError("induced map does not exist");
  }
  Matrix out(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = reduced(r, a.cols() + c);
  }
  return out;
}

// Dense residue arithmetic for the exhaustive searches over F_p.
struct ResidueBlocks {
  std::uint64_t p;
  std::vector<std::size_t> sizes;  // block side length per vertex
  std::vector<std::size_t> offsets;
  std::size_t total = 0;

  ResidueBlocks(std::uint64_t modulus, const Representation& x, const Representation& y) : p(modulus) {
    for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) {
      sizes.push_back(x.dim(i));
      offsets.push_back(total);
      total += y.dim(i) * x.dim(i);
    }
  }

  std::vector<std::uint64_t> flatten(const VertexMaps& maps) const {
    std::vector<std::uint64_t> flat;
    flat.reserve(total);
    for (const auto& m : maps) {
      for (const auto& s : m.entries()) flat.push_back(s.residue());
    }
    return flat;
  }

  // For square blocks: does e o e == e hold at every vertex?
  bool is_idempotent(const std::vector<std::uint64_t>& e) const {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const std::size_t n = sizes[i];
      const std::uint64_t* block = e.data() + offsets[i];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < n; ++k) acc += block[r * n + k] * block[k * n + c] % p;
          if (acc % p != block[r * n + c]) return false;
        }
      }
    }
    return true;
  }

  bool is_invertible(const std::vector<std::uint64_t>& e) const {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const std::size_t n = sizes[i];
      std::vector<std::uint64_t> a(e.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                                   e.begin() + static_cast<std::ptrdiff_t>(offsets[i] + n * n));
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a[r * n + c] == 0) ++r;
        if (r == n) return false;
        for (std::size_t k = 0; k < n; ++k) std::swap(a[r * n + k], a[c * n + k]);
        std::uint64_t inv = 1;
        for (std::uint64_t b = a[c * n + c], ex = p - 2; ex > 0; ex >>= 1U, b = b * b % p) {
          if (ex & 1U) inv = inv * b % p;
        }
        for (std::size_t rr = c + 1; rr < n; ++rr) {
          const std::uint64_t f = a[rr * n + c] * inv % p;
          if (f == 0) continue;
          for (std::size_t k = c; k < n; ++k) a[rr * n + k] = (a[rr * n + k] + p - f * a[c * n + k] % p) % p;
        }
      }
    }
    return true;
  }
};

std::uint64_t search_size(std::uint64_t p, std::size_t dim, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (count > budget / p) {
      throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(dim) + " combinations exceed the budget of " +
                           std::to_string(budget));
    }
    count *= p;
  }
  return count;
}

// Visits every F_p-combination of the basis, passing the running sum; stops
// early when visit returns true. The digit odometer only ever adds a basis
// vector, since wrapping a digit from p-1 to 0 is also +1 mod p.
template <typename Visit>
bool for_each_combination(const std::vector<std::vector<std::uint64_t>>& basis, std::uint64_t p, std::size_t total,
                          Visit&& visit) {
  std::vector<std::uint64_t> digits(basis.size(), 0);
  std::vector<std::uint64_t> current(total, 0);
  while (true) {
    if (visit(current)) return true;
    std::size_t j = 0;
    for (; j < basis.size(); ++j) {
      for (std::size_t k = 0; k < total; ++k) current[k] = (current[k] + basis[j][k]) % p;
      if (++digits[j] < p) break;
      digits[j] = 0;
    }
    if (j == basis.size()) return false;
  }
}

}  // namespace

Representation::Representation(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims,
                               std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw ShapeError("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) {
    throw ShapeError("dimension vector has " + std::to_string(dims_.size()) + " entries, quiver has " +
                     std::to_string(quiver_->vertex_count()) + " vertices");
  }
  if (!dims_.is_nonnegative()) throw ShapeError("negative dimension in (" + dims_.to_string() + ")");
  if (maps_.size() != quiver_->arrow_count()) {
    throw ShapeError("expected " + std::to_string(quiver_->arrow_count()) + " arrow maps, got " +
                     std::to_string(maps_.size()));
  }
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& arrow = quiver_->arrows()[k];
    const Matrix& m = maps_[k];
    if (m.rows() != dim(arrow.head) || m.cols() != dim(arrow.tail)) {
      throw ShapeError("map " + arrow.label + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(dim(arrow.head)) + "x" + std::to_string(dim(arrow.tail)));
    }
    if (m.field() != field_) throw ShapeError("map " + arrow.label + " is over " + m.field().name());
  }
}

Representation Representation::zero(std::shared_ptr<const Quiver> quiver, Field field) {
  const std::size_t n = quiver->vertex_count();
  std::vector<Matrix> maps(quiver->arrow_count(), Matrix(field, 0, 0));
  return Representation(std::move(quiver), field, DimVector::zero(n), std::move(maps));
}

Representation Representation::simple(std::shared_ptr<const Quiver> quiver, Field field, std::size_t i) {
  const std::size_t n = quiver->vertex_count();
  if (i >= n) throw ShapeError("vertex " + std::to_string(i + 1) + " out of range");
  DimVector dims = DimVector::unit(n, i);
  std::vector<Matrix> maps;
  for (const auto& a : quiver->arrows()) {
    maps.emplace_back(field, static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
  }
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

Representation Representation::change_field(Field target) const {
  std::vector<Matrix> maps;
  for (const auto& m : maps_) maps.push_back(m.change_field(target));
  return Representation(quiver_, target, dims_, std::move(maps));
}

bool operator==(const Representation& a, const Representation& b) {
  return a.quiver() == b.quiver() && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

bool is_homomorphism(const Representation& x, const Representation& y, const VertexMaps& phi) {
  require_compatible(x, y, "is_homomorphism");
  const auto& arrows = x.quiver().arrows();
  if (phi.size() != x.quiver().vertex_count()) return false;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i].rows() != y.dim(i) || phi[i].cols() != x.dim(i)) return false;
  }
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (!(phi[arrows[k].head] * x.map(k) == y.map(k) * phi[arrows[k].tail])) return false;
  }
  return true;
}

VertexMaps compose(const VertexMaps& g, const VertexMaps& f) {
  if (g.size() != f.size()) throw ShapeError("composing maps on different vertex sets");
  VertexMaps out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(g[i] * f[i]);
  return out;
}

HomBasis hom_basis(const Representation& x, const Representation& y) {
  require_compatible(x, y, "hom_basis");
  HomBasis basis{x, y, {}};
  for (const auto& v : kernel_basis(commuting_square_system(x, y))) {
    auto phi = unflatten_vertex_maps(x, y, v);
    if (!is_homomorphism(x, y, phi)) throw ConsistencyError("hom basis element violates a commuting square");
    basis.elements.push_back(std::move(phi));
  }
  return basis;
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).dim(); }

std::size_t end_dim(const Representation& x) { return hom_dim(x, x); }

std::size_t ext_dim_formula(const Representation& x, const Representation& y) {
  const auto hom = static_cast<std::int64_t>(hom_dim(x, y));
  const auto ext = hom - euler_form(x.quiver(), x.dims(), y.dims());
  if (ext < 0) {
    throw ConsistencyError("dim Hom - <dim x, dim y> = " + std::to_string(ext) + " is negative");
  }
  return static_cast<std::size_t>(ext);
}

Matrix ext_differential(const Representation& s, const Representation& x) {
  require_compatible(s, x, "ext_differential");
  return commuting_square_system(s, x);
}

ExtCocycleBasis ext_cocycle_basis(const Representation& s, const Representation& x) {
  const Matrix d = ext_differential(s, x);
  const auto pivots = rref(d.transpose()).pivots;
  std::vector<bool> in_image(d.rows(), false);
  for (auto p : pivots) in_image[p] = true;

  const auto ao = arrow_offsets(s, x);
  const auto& arrows = s.quiver().arrows();
  ExtCocycleBasis basis{s, x, {}};
  for (std::size_t coord = 0; coord < d.rows(); ++coord) {
    if (in_image[coord]) continue;
    ArrowMaps f;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      Matrix fa(s.field(), x.dim(arrows[k].head), s.dim(arrows[k].tail));
      if (coord >= ao[k] && coord < ao[k + 1]) {
        const std::size_t local = coord - ao[k];
        fa(local / fa.cols(), local % fa.cols()) = Scalar::one(s.field());
      }
      f.push_back(std::move(fa));
    }
    basis.cocycles.push_back(std::move(f));
  }

  const std::size_t formula = ext_dim_formula(s, x);
  if (basis.dim() != formula) {
    throw ConsistencyError("formula/cokernel disagreement: cokernel has dimension " + std::to_string(basis.dim()) +
                           ", dim Hom - <,> gives " + std::to_string(formula));
  }
  return basis;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  require_compatible(x, y, "direct_sum");
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < x.maps().size(); ++k) maps.push_back(block_diagonal(x.map(k), y.map(k)));
  return Representation(x.quiver_ptr(), x.field(), x.dims() + y.dims(), std::move(maps));
}

Representation direct_power(const Representation& x, std::size_t copies) {
  std::vector<Matrix> maps;
  for (const auto& m : x.maps()) maps.push_back(repeat_diagonal(m, copies));
  return Representation(x.quiver_ptr(), x.field(), static_cast<std::int64_t>(copies) * x.dims(), std::move(maps));
}

SubQuotient kernel_intersection(const Representation& x, const Representation& s) {
  const auto homs = hom_basis(x, s);
  const std::size_t n = x.quiver().vertex_count();
  VertexMaps inclusions;
  std::vector<std::int64_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix stacked(x.field(), 0, x.dim(i));
    for (const auto& phi : homs.elements) stacked = vstack(stacked, phi[i]);
    inclusions.push_back(kernel_matrix(stacked));
    dims[i] = static_cast<std::int64_t>(inclusions.back().cols());
  }

  std::vector<Matrix> maps;
  const auto& arrows = x.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Matrix& into_head = inclusions[arrows[k].head];
    maps.push_back(solve_exact(into_head, x.map(k) * inclusions[arrows[k].tail]));
  }
  Representation induced(x.quiver_ptr(), x.field(), DimVector(std::move(dims)), std::move(maps));
  if (!is_homomorphism(induced, x, inclusions)) throw ConsistencyError("kernel inclusion does not intertwine");
  return {SubQuotientKind::Subrepresentation, x, std::move(induced), std::move(inclusions)};
}

SubQuotient image_sum_quotient(const Representation& s, const Representation& y) {
  const auto homs = hom_basis(s, y);
  const std::size_t n = y.quiver().vertex_count();
  const Field field = y.field();
  VertexMaps projections;
  VertexMaps lifts;
  std::vector<std::int64_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix spanning(field, y.dim(i), 0);
    for (const auto& psi : homs.elements) spanning = hstack(spanning, psi[i]);
    const auto [basis, pivots] = rref(spanning.transpose());
    std::vector<bool> is_pivot(y.dim(i), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < y.dim(i); ++c) {
      if (!is_pivot[c]) free.push_back(c);
    }

    // v |-> (v - sum_k v[pivot_k] basis_k) restricted to the free coordinates.
    Matrix projection(field, free.size(), y.dim(i));
    Matrix lift(field, y.dim(i), free.size());
    for (std::size_t q = 0; q < free.size(); ++q) {
      projection(q, free[q]) = Scalar::one(field);
      lift(free[q], q) = Scalar::one(field);
      for (std::size_t k = 0; k < pivots.size(); ++k) projection(q, pivots[k]) = -basis(k, free[q]);
    }
    projections.push_back(std::move(projection));
    lifts.push_back(std::move(lift));
    dims[i] = static_cast<std::int64_t>(free.size());
  }

  std::vector<Matrix> maps;
  const auto& arrows = y.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    maps.push_back(projections[arrows[k].head] * y.map(k) * lifts[arrows[k].tail]);
  }
  Representation induced(y.quiver_ptr(), field, DimVector(std::move(dims)), std::move(maps));
  if (!is_homomorphism(y, induced, projections)) throw ConsistencyError("quotient projection does not intertwine");
  return {SubQuotientKind::Quotient, y, std::move(induced), std::move(projections)};
}

bool is_indecomposable_fp(const Representation& x, std::uint64_t budget) {
  if (!x.field().is_prime()) throw ShapeError("idempotent search needs a prime field, got " + x.field().name());
  if (x.total_dim() == 0) return false;
  const std::uint64_t p = x.field().characteristic();
  const auto ends = hom_basis(x, x);
  search_size(p, ends.dim(), budget);

  const ResidueBlocks blocks(p, x, x);
  std::vector<std::vector<std::uint64_t>> basis;
  for (const auto& e : ends.elements) basis.push_back(blocks.flatten(e));
  VertexMaps identity;
  for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) identity.push_back(Matrix::identity(x.field(), x.dim(i)));
  const auto id = blocks.flatten(identity);
  const std::vector<std::uint64_t> zero(blocks.total, 0);

  const bool split = for_each_combination(basis, p, blocks.total, [&](const std::vector<std::uint64_t>& e) {
    return e != zero && e != id && blocks.is_idempotent(e);
  });
  return !split;
}

std::optional<VertexMaps> find_isomorphism(const Representation& x, const Representation& y, std::uint64_t budget) {
  require_compatible(x, y, "find_isomorphism");
  if (x.dims() != y.dims()) return std::nullopt;
  const auto homs = hom_basis(x, y);
  const Field field = x.field();

  if (field.is_prime()) {
    const std::uint64_t p = field.characteristic();
    search_size(p, homs.dim(), budget);
    const ResidueBlocks blocks(p, x, y);
    std::vector<std::vector<std::uint64_t>> basis;
    for (const auto& e : homs.elements) basis.push_back(blocks.flatten(e));
    std::vector<std::uint64_t> found;
    const bool ok = for_each_combination(basis, p, blocks.total, [&](const std::vector<std::uint64_t>& e) {
      if (!blocks.is_invertible(e)) return false;
      found = e;
      return true;
    });
    if (!ok) return std::nullopt;
    VertexMaps phi;
    for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) {
      Matrix m(field, y.dim(i), x.dim(i));
      for (std::size_t r = 0; r < m.rows() * m.cols(); ++r) {
        m(r / m.cols(), r % m.cols()) = Scalar(field, static_cast<long>(found[blocks.offsets[i] + r]));
      }
      phi.push_back(std::move(m));
    }
    return phi;
  }

  // Schwartz-Zippel: a nonzero determinant polynomial rarely vanishes on
  // random integer points with coefficients up to 1000.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 8; ++attempt) {
    VertexMaps phi;
    for (std::size_t i = 0; i < x.quiver().vertex_count(); ++i) phi.emplace_back(field, y.dim(i), x.dim(i));
    for (const auto& e : homs.elements) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      const Scalar c(field, static_cast<long>((state >> 33U) % 2001) - 1000);
      for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += c * e[i];
    }
    const bool invertible = std::all_of(phi.begin(), phi.end(), [](const Matrix& m) { return rank(m) == m.rows(); });
    if (invertible) return phi;
  }
  return std::nullopt;
}

}  // namespace qrep
