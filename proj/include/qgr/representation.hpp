#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgr/error.hpp"
#include "qgr/field.hpp"
#include "qgr/forms.hpp"
#include "qgr/matrix.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

/// Finite-dimensional representation over an exact field. The matrix of
/// arrow v: s -> t is dims[t] x dims[s] and acts on column vectors.
template <ExactField F>
class Representation {
 public:
  using Elem = typename F::Elem;
  using Mat = FieldMatrix<F>;

  Representation(Quiver quiver, F field, DimVector dims, std::vector<Mat> matrices)
      : quiver_(std::move(quiver)),
        field_(std::move(field)),
        dims_(std::move(dims)),
        matrices_(std::move(matrices)) {
    require_on(quiver_, dims_);
    if (matrices_.size() != quiver_.arrow_count())
      throw ValidationError("expected one matrix per arrow");
    for (std::size_t a = 0; a < matrices_.size(); ++a) {
      const auto& arr = quiver_.arrow(a);
      const auto rows = static_cast<std::size_t>(dims_[arr.target]);
      const auto cols = static_cast<std::size_t>(dims_[arr.source]);
      if (matrices_[a].rows() != rows || matrices_[a].cols() != cols)
        throw ValidationError("matrix of arrow '" + arr.name + "' must be " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    }
  }

  static Representation zero(Quiver quiver, F field) {
    DimVector d = DimVector::zero(quiver.vertex_count());
    std::vector<Mat> ms(quiver.arrow_count(), zero_matrix(field, 0, 0));
    return Representation(std::move(quiver), std::move(field), std::move(d), std::move(ms));
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const F& field() const noexcept { return field_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t vertex) const { return static_cast<std::size_t>(dims_[vertex]); }
  const Mat& matrix(std::size_t arrow) const { return matrices_.at(arrow); }
  const std::vector<Mat>& matrices() const noexcept { return matrices_; }

  bool operator==(const Representation& o) const {
    return field_ == o.field_ && quiver_ == o.quiver_ && dims_ == o.dims_ &&
           matrices_ == o.matrices_;
  }

 private:
  Quiver quiver_;
  F field_;
  DimVector dims_;
  std::vector<Mat> matrices_;
};

template <ExactField F>
void require_compatible(const Representation<F>& x, const Representation<F>& y) {
  if (!(x.field() == y.field()))
    throw ValidationError("representations live over different fields (" + x.field().name() +
                          ", " + y.field().name() + ")");
  if (!(x.quiver() == y.quiver())) throw ValidationError("representations live on different quivers");
}

struct HomExt {
  std::size_t hom = 0;
  std::size_t ext = 0;
};

/// Matrix of (f_q)_q -> (Y_v f_s - f_t X_v)_v. Unknowns are the entries of
/// each f_q (dims_y[q] x dims_x[q], row-major) in vertex order; equations
/// are the entries of each arrow's difference in arrow order.
template <ExactField F>
FieldMatrix<F> hom_complex_matrix(const Representation<F>& x, const Representation<F>& y) {
  require_compatible(x, y);
  const auto& q = x.quiver();
  const auto& f = x.field();
  std::vector<std::size_t> var_offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    var_offset[v + 1] = var_offset[v] + x.dim(v) * y.dim(v);
  std::size_t eq_count = 0;
  for (const auto& a : q.arrows()) eq_count += y.dim(a.target) * x.dim(a.source);

  auto m = zero_matrix(f, eq_count, var_offset.back());
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& xv = x.matrix(ai);
    const auto& yv = y.matrix(ai);
    const std::size_t dxs = x.dim(a.source), dxt = x.dim(a.target);
    const std::size_t dyt = y.dim(a.target);
    for (std::size_t i = 0; i < dyt; ++i)
      for (std::size_t j = 0; j < dxs; ++j, ++row) {
        // (Y_v f_s)[i][j] = sum_k Y_v[i][k] f_s[k][j]
        for (std::size_t k = 0; k < y.dim(a.source); ++k) {
          auto& cell = m(row, var_offset[a.source] + k * dxs + j);
          cell = f.add(cell, yv(i, k));
        }
        // (f_t X_v)[i][j] = sum_k f_t[i][k] X_v[k][j]
        for (std::size_t k = 0; k < dxt; ++k) {
          auto& cell = m(row, var_offset[a.target] + i * dxt + k);
          cell = f.sub(cell, xv(k, j));
        }
      }
  }
  return m;
}

template <ExactField F>
HomExt hom_ext(const Representation<F>& x, const Representation<F>& y) {
  const auto m = hom_complex_matrix(x, y);
  const std::size_t r = rank(x.field(), m);
  return {m.cols() - r, m.rows() - r};
}

template <ExactField F>
std::size_t hom_dim(const Representation<F>& x, const Representation<F>& y) {
  return hom_ext(x, y).hom;
}

template <ExactField F>
std::size_t ext_dim(const Representation<F>& x, const Representation<F>& y) {
  return hom_ext(x, y).ext;
}

template <ExactField F>
Representation<F> direct_sum(const Representation<F>& x, const Representation<F>& y) {
  require_compatible(x, y);
  const auto& q = x.quiver();
  const auto& f = x.field();
  std::vector<FieldMatrix<F>> ms;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    auto m = zero_matrix(f, x.dim(a.target) + y.dim(a.target), x.dim(a.source) + y.dim(a.source));
    for (std::size_t i = 0; i < x.dim(a.target); ++i)
      for (std::size_t j = 0; j < x.dim(a.source); ++j) m(i, j) = x.matrix(ai)(i, j);
    for (std::size_t i = 0; i < y.dim(a.target); ++i)
      for (std::size_t j = 0; j < y.dim(a.source); ++j)
        m(x.dim(a.target) + i, x.dim(a.source) + j) = y.matrix(ai)(i, j);
    ms.push_back(std::move(m));
  }
  return Representation<F>(q, f, x.dims() + y.dims(), std::move(ms));
}

/// Subrepresentation given by one reduced column echelon basis per vertex.
template <ExactField F>
class Subrep {
 public:
  using Mat = FieldMatrix<F>;
  struct Trusted {};

  /// Canonicalizes each spanning matrix and checks arrow compatibility.
  Subrep(std::shared_ptr<const Representation<F>> parent, const std::vector<Mat>& spanning)
      : parent_(std::move(parent)) {
    const auto& x = *parent_;
    if (spanning.size() != x.quiver().vertex_count())
      throw ValidationError("expected one subspace per vertex");
    for (std::size_t v = 0; v < spanning.size(); ++v) {
      if (spanning[v].rows() != x.dim(v))
        throw ValidationError("subspace at vertex '" + x.quiver().vertices()[v] +
                              "' has the wrong ambient dimension");
      bases_.push_back(column_echelon(x.field(), spanning[v]));
    }
    init_pivots();
    if (!is_compatible())
      throw ValidationError("subspaces are not closed under the arrow maps");
  }

  // Bases already canonical and compatible (the enumerators build these).
  Subrep(std::shared_ptr<const Representation<F>> parent, std::vector<Mat> bases, Trusted)
      : parent_(std::move(parent)), bases_(std::move(bases)) {
    init_pivots();
  }

  const Representation<F>& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const Representation<F>>& parent_ptr() const noexcept { return parent_; }
  const Mat& basis(std::size_t vertex) const { return bases_.at(vertex); }
  const std::vector<Mat>& bases() const noexcept { return bases_; }
  const std::vector<std::size_t>& pivots(std::size_t vertex) const { return pivots_.at(vertex); }

  DimVector dims() const {
    std::vector<std::int64_t> d;
    for (const auto& b : bases_) d.push_back(static_cast<std::int64_t>(b.cols()));
    return DimVector(std::move(d));
  }

  bool is_compatible() const {
    const auto& x = *parent_;
    for (std::size_t ai = 0; ai < x.quiver().arrow_count(); ++ai) {
      const auto& a = x.quiver().arrow(ai);
      const auto img = multiply(x.field(), x.matrix(ai), bases_[a.source]);
      for (std::size_t j = 0; j < img.cols(); ++j)
        if (!in_span(a.target, img, j)) return false;
    }
    return true;
  }

  /// U as a representation in the coordinates of its echelon bases.
  Representation<F> as_representation() const {
    const auto& x = *parent_;
    const auto& f = x.field();
    std::vector<Mat> ms;
    for (std::size_t ai = 0; ai < x.quiver().arrow_count(); ++ai) {
      const auto& a = x.quiver().arrow(ai);
      const auto img = multiply(f, x.matrix(ai), bases_[a.source]);
      auto m = zero_matrix(f, bases_[a.target].cols(), bases_[a.source].cols());
      const auto& piv = pivots_[a.target];
      for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j) m(i, j) = img(piv[i], j);
      ms.push_back(std::move(m));
    }
    return Representation<F>(x.quiver(), f, dims(), std::move(ms));
  }

  /// X/U on the non-pivot coordinates: the class of w is
  /// (w - B w[pivots]) restricted to the non-pivot rows.
  Representation<F> quotient() const {
    const auto& x = *parent_;
    const auto& f = x.field();
    const auto& q = x.quiver();
    std::vector<std::vector<std::size_t>> free(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      std::vector<bool> piv(x.dim(v), false);
      for (auto p : pivots_[v]) piv[p] = true;
      for (std::size_t r = 0; r < x.dim(v); ++r)
        if (!piv[r]) free[v].push_back(r);
    }
    std::vector<Mat> ms;
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
      const auto& a = q.arrow(ai);
      const auto& xv = x.matrix(ai);
      const auto& b = bases_[a.target];
      const auto& piv = pivots_[a.target];
      auto m = zero_matrix(f, free[a.target].size(), free[a.source].size());
      for (std::size_t j = 0; j < free[a.source].size(); ++j) {
        const std::size_t col = free[a.source][j];
        for (std::size_t i = 0; i < free[a.target].size(); ++i) {
          const std::size_t r = free[a.target][i];
          auto val = xv(r, col);
          for (std::size_t k = 0; k < piv.size(); ++k)
            val = f.sub(val, f.mul(b(r, k), xv(piv[k], col)));
          m(i, j) = val;
        }
      }
      ms.push_back(std::move(m));
    }
    return Representation<F>(q, f, x.dims() - dims(), std::move(ms));
  }

  bool operator==(const Subrep& o) const {
    return bases_ == o.bases_ && (parent_ == o.parent_ || *parent_ == *o.parent_);
  }

 private:
  void init_pivots() {
    pivots_.clear();
    for (const auto& b : bases_) pivots_.push_back(echelon_pivots(parent_->field(), b));
  }

  // Column j of m lies in the span of the basis at vertex v.
  bool in_span(std::size_t v, const Mat& m, std::size_t j) const {
    const auto& f = parent_->field();
    const auto& b = bases_[v];
    const auto& piv = pivots_[v];
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto val = m(r, j);
      for (std::size_t k = 0; k < piv.size(); ++k) val = f.sub(val, f.mul(b(r, k), m(piv[k], j)));
      if (!f.is_zero(val)) return false;
    }
    return true;
  }

  std::shared_ptr<const Representation<F>> parent_;
  std::vector<Mat> bases_;
  std::vector<std::vector<std::size_t>> pivots_;
};

template <ExactField F>
Representation<F> quotient_by_subrep(const Subrep<F>& u) {
  if (!u.is_compatible()) throw ValidationError("subspaces are not closed under the arrow maps");
  return u.quotient();
}

/// dim Hom(U, X/U), the tangent space of the quiver Grassmannian at U.
template <ExactField F>
std::size_t tangent_dim_at(const Subrep<F>& u) {
  return hom_dim(u.as_representation(), quotient_by_subrep(u));
}

/// Rational matrices as read from a file; realized over a field on demand.
struct RepresentationData {
  Quiver quiver;
  FieldSpec field;
  DimVector dims;
  std::vector<Matrix<Rational>> matrices;
};

/// Reduces every entry into f. Throws ValidationError when a denominator
/// vanishes in f.
template <ExactField F>
Representation<F> realize_over(const RepresentationData& data, const F& f) {
  std::vector<FieldMatrix<F>> ms;
  for (const auto& m : data.matrices) ms.push_back(from_rational_matrix(f, m));
  return Representation<F>(data.quiver, f, data.dims, std::move(ms));
}

/// Representation file: "quiver: <path>" (relative to base_dir), "field:",
/// "dim <vertex>: <n>" and "matrix <arrow>: rows separated by ';'". Missing
/// dims are 0 and missing matrices are zero.
RepresentationData parse_representation(std::string_view text, const std::filesystem::path& base_dir);
RepresentationData load_representation(const std::filesystem::path& path);

}  // namespace qgr
