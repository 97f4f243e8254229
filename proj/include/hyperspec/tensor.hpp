#pragma once

// Dense order-m dimension-n real tensors and the products that act on them:
// tensor-times-vector, the general (order-composing) product, matrix
// sandwiches, diagonal similarity and the direct product. Entries live in a
// flat Eigen vector, row-major with the first index slowest.

#include <Eigen/Core>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

/// Process-wide cap on dense tensor entries (default 1e8).
inline std::atomic<std::int64_t>& entry_cap_ref() {
  static std::atomic<std::int64_t> cap{100'000'000};
  return cap;
}
inline std::int64_t entry_cap() { return entry_cap_ref().load(); }
inline void set_entry_cap(std::int64_t cap) { entry_cap_ref().store(cap); }

/// dim^order, guarded against overflow and the entry cap.
inline std::int64_t checked_entry_count(int order, int dim) {
  const std::int64_t cap = entry_cap();
  std::int64_t size = 1;
  for (int t = 0; t < order; ++t) {
    size *= dim;
    if (size > cap || size <= 0)
      throw CapacityError("dense tensor of order " + std::to_string(order) + ", dimension " +
                          std::to_string(dim) + " exceeds the entry cap (" + std::to_string(cap) +
                          ")");
  }
  return size;
}

template <typename Scalar = double>
class DenseTensor {
 public:
  using EntryVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  /// Zero tensor.
  DenseTensor(int order, int dim)
      : order_(order), dim_(dim), entries_(EntryVector::Zero(validated_size(order, dim))) {}

  DenseTensor(int order, int dim, EntryVector entries)
      : order_(order), dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != validated_size(order, dim))
      throw DimensionError("entry vector does not match dim^order");
    if (!entries_.allFinite()) throw Error("tensor entries must be finite");
  }

  /// Unit tensor: 1 at (i,...,i), 0 elsewhere. I x = x^[order-1].
  static DenseTensor identity(int order, int dim) {
    DenseTensor t(order, dim);
    for (int i = 0; i < dim; ++i) {
      std::int64_t f = 0;
      for (int m = 0; m < order; ++m) f = f * dim + i;
      t.entries_[f] = Scalar{1};
    }
    return t;
  }

  static DenseTensor constant(int order, int dim, Scalar value) {
    DenseTensor t(order, dim);
    t.entries_.setConstant(value);
    return t;
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::int64_t size() const { return entries_.size(); }
  [[nodiscard]] const EntryVector& entries() const { return entries_; }
  [[nodiscard]] EntryVector& entries() { return entries_; }

  /// Flat offset of a 0-based multi-index (first index slowest).
  [[nodiscard]] std::int64_t flat_index(std::span<const int> idx) const {
    std::int64_t f = 0;
    for (const int i : idx) f = f * dim_ + i;
    return f;
  }

  [[nodiscard]] Scalar operator()(std::initializer_list<int> idx) const {
    return entries_[flat_index(std::span<const int>(idx.begin(), idx.size()))];
  }
  [[nodiscard]] Scalar& operator()(std::initializer_list<int> idx) {
    return entries_[flat_index(std::span<const int>(idx.begin(), idx.size()))];
  }

  DenseTensor operator+(const DenseTensor& other) const {
    require_same_shape(other);
    return DenseTensor(order_, dim_, EntryVector(entries_ + other.entries_));
  }
  DenseTensor operator-(const DenseTensor& other) const {
    require_same_shape(other);
    return DenseTensor(order_, dim_, EntryVector(entries_ - other.entries_));
  }
  DenseTensor operator-() const { return DenseTensor(order_, dim_, EntryVector(-entries_)); }
  DenseTensor operator*(Scalar s) const {
    return DenseTensor(order_, dim_, EntryVector(entries_ * s));
  }

 private:
  static std::int64_t validated_size(int order, int dim) {
    if (order < 1) throw DimensionError("tensor order must be at least 1");
    if (dim < 1) throw DimensionError("tensor dimension must be at least 1");
    return checked_entry_count(order, dim);
  }
  void require_same_shape(const DenseTensor& other) const {
    if (order_ != other.order_ || dim_ != other.dim_)
      throw DimensionError("tensor shapes differ");
  }

  int order_;
  int dim_;
  EntryVector entries_;
};

template <typename Scalar>
[[nodiscard]] Scalar max_abs_diff(const DenseTensor<Scalar>& a, const DenseTensor<Scalar>& b) {
  if (a.order() != b.order() || a.dim() != b.dim())
    throw DimensionError("max_abs_diff: tensor shapes differ");
  if (a.size() == 0) return Scalar{0};
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
[[nodiscard]] bool approx_equal(const DenseTensor<Scalar>& a, const DenseTensor<Scalar>& b,
                                Scalar tol = Scalar{1e-12}) {
  return max_abs_diff(a, b) <= tol;
}

namespace detail {

/// Integer Hadamard power by repeated multiplication; exact for +-1 bases.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> hadamard_int_pow(
    const Eigen::Vector<Scalar, Eigen::Dynamic>& x, long long p) {
  Eigen::Vector<Scalar, Eigen::Dynamic> acc = Eigen::Vector<Scalar, Eigen::Dynamic>::Ones(x.size());
  for (long long t = 0; t < p; ++t) acc = acc.cwiseProduct(x);
  return acc;
}

/// Row-major array with per-mode extents; intermediate carrier for the
/// mode contractions behind the tensor products.
template <typename Scalar>
struct ModeArray {
  std::vector<std::int64_t> dims;
  Eigen::Vector<Scalar, Eigen::Dynamic> data;
};

/// Replaces extent at `mode` by W.cols(): out[.., p, ..] = sum_q in[.., q, ..] W(q, p).
template <typename Scalar>
ModeArray<Scalar> contract_mode(const ModeArray<Scalar>& in, const Eigen::MatrixX<Scalar>& W,
                                int mode) {
  const std::int64_t q_dim = in.dims[mode];
  if (W.rows() != q_dim) throw DimensionError("contract_mode: extent mismatch");
  const std::int64_t p_dim = W.cols();
  std::int64_t outer = 1, inner = 1;
  for (int t = 0; t < mode; ++t) outer *= in.dims[t];
  for (std::size_t t = mode + 1; t < in.dims.size(); ++t) inner *= in.dims[t];

  ModeArray<Scalar> out;
  out.dims = in.dims;
  out.dims[mode] = p_dim;
  const std::int64_t out_size = outer * p_dim * inner;
  if (out_size > entry_cap())
    throw CapacityError("tensor product intermediate exceeds the entry cap");
  out.data.setZero(out_size);

  for (std::int64_t o = 0; o < outer; ++o) {
    const std::int64_t in_base = o * q_dim * inner;
    const std::int64_t out_base = o * p_dim * inner;
    for (std::int64_t q = 0; q < q_dim; ++q) {
      const auto in_block = in.data.segment(in_base + q * inner, inner);
      for (std::int64_t p = 0; p < p_dim; ++p) {
        out.data.segment(out_base + p * inner, inner) += W(q, p) * in_block;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Component-wise power x^[r]. Integer r is computed exactly by repeated
/// multiplication (negative bases allowed); fractional r requires x >= 0.
template <typename Scalar>
[[nodiscard]] Eigen::Vector<Scalar, Eigen::Dynamic> hadamard_power(
    const Eigen::Vector<Scalar, Eigen::Dynamic>& x, double r) {
  if (!(r > 0)) throw Error("hadamard_power: exponent must be positive");
  if (r == std::floor(r)) return detail::hadamard_int_pow(x, static_cast<long long>(r));
  if ((x.array() < Scalar{0}).any())
    throw Error("hadamard_power: negative base with fractional exponent");
  return x.array().pow(static_cast<Scalar>(r)).matrix();
}

/// (T x)_i = sum over (i2..im) of t_{i i2..im} x_{i2} ... x_{im}.
template <typename Scalar>
[[nodiscard]] Eigen::Vector<Scalar, Eigen::Dynamic> apply(
    const DenseTensor<Scalar>& t, const Eigen::Vector<Scalar, Eigen::Dynamic>& x) {
  if (t.order() < 2) throw DimensionError("apply: tensor order must be at least 2");
  if (x.size() != t.dim()) throw DimensionError("apply: vector length differs from dimension");
  const int n = t.dim();
  // Weight over the trailing m-1 indices is the (m-1)-fold Kronecker power of x.
  Eigen::Vector<Scalar, Eigen::Dynamic> w = Eigen::Vector<Scalar, Eigen::Dynamic>::Ones(1);
  for (int m = 1; m < t.order(); ++m) {
    Eigen::Vector<Scalar, Eigen::Dynamic> next(w.size() * n);
    for (Eigen::Index p = 0; p < w.size(); ++p) next.segment(p * n, n) = w[p] * x;
    w = std::move(next);
  }
  Eigen::Vector<Scalar, Eigen::Dynamic> out(n);
  for (int i = 0; i < n; ++i) out[i] = t.entries().segment(static_cast<std::int64_t>(i) * w.size(), w.size()).dot(w);
  return out;
}

/// General product of an order-m (m >= 2) by an order-k (k >= 1) tensor of
/// equal dimension; the result has order (m-1)(k-1)+1. A vector right-hand
/// side reproduces apply; a matrix keeps the order at m.
template <typename Scalar>
[[nodiscard]] DenseTensor<Scalar> general_product(const DenseTensor<Scalar>& a,
                                                  const DenseTensor<Scalar>& b) {
  if (a.order() < 2) throw DimensionError("general_product: left order must be at least 2");
  if (a.dim() != b.dim()) throw DimensionError("general_product: dimensions differ");
  const int n = a.dim();
  const int out_order = (a.order() - 1) * (b.order() - 1) + 1;
  checked_entry_count(out_order, n);

  // B flattened to an n x n^(k-1) matrix: row i2, column = trailing block.
  const std::int64_t block = b.size() / n;
  Eigen::MatrixX<Scalar> bm(n, block);
  for (int i = 0; i < n; ++i) bm.row(i) = b.entries().segment(static_cast<std::int64_t>(i) * block, block);

  detail::ModeArray<Scalar> acc{std::vector<std::int64_t>(a.order(), n), a.entries()};
  for (int mode = 1; mode < a.order(); ++mode) acc = detail::contract_mode(acc, bm, mode);
  return DenseTensor<Scalar>(out_order, n, std::move(acc.data));
}

/// Sandwich P A Q for matrices P, Q:
/// b_{i1..im} = sum a_{j1..jm} p_{i1 j1} q_{j2 i2} ... q_{jm im}.
template <typename Scalar>
[[nodiscard]] DenseTensor<Scalar> matrix_sandwich(const Eigen::MatrixX<Scalar>& p,
                                                  const DenseTensor<Scalar>& a,
                                                  const Eigen::MatrixX<Scalar>& q) {
  if (p.rows() != a.dim() || p.cols() != a.dim() || q.rows() != a.dim() || q.cols() != a.dim())
    throw DimensionError("matrix_sandwich: matrix shapes must match the tensor dimension");
  detail::ModeArray<Scalar> acc{std::vector<std::int64_t>(a.order(), a.dim()), a.entries()};
  const Eigen::MatrixX<Scalar> pt = p.transpose();
  acc = detail::contract_mode(acc, pt, 0);
  for (int mode = 1; mode < a.order(); ++mode) acc = detail::contract_mode(acc, q, mode);
  return DenseTensor<Scalar>(a.order(), a.dim(), std::move(acc.data));
}

/// Diagonal similarity D^{-(m-1)} A D for a nonzero diagonal d:
/// b_{i1..im} = d_{i1}^{-(m-1)} a_{i1..im} d_{i2} ... d_{im}.
template <typename Scalar>
[[nodiscard]] DenseTensor<Scalar> diag_similarity(const DenseTensor<Scalar>& a,
                                                  const Eigen::Vector<Scalar, Eigen::Dynamic>& d) {
  if (d.size() != a.dim()) throw DimensionError("diag_similarity: diagonal length differs");
  if ((d.array() == Scalar{0}).any()) throw Error("diag_similarity: zero diagonal entry");
  const int n = a.dim();
  const int m = a.order();
  Eigen::Vector<Scalar, Eigen::Dynamic> dinv(n);
  for (int i = 0; i < n; ++i) dinv[i] = Scalar{1} / static_cast<Scalar>(std::pow(d[i], m - 1));

  DenseTensor<Scalar> out(m, n);
  std::vector<int> idx(m, 0);
  for (std::int64_t f = 0; f < a.size(); ++f) {
    Scalar factor = dinv[idx[0]];
    for (int t = 1; t < m; ++t) factor *= d[idx[t]];
    out.entries()[f] = factor * a.entries()[f];
    for (int t = m - 1; t >= 0; --t) {
      if (++idx[t] < n) break;
      idx[t] = 0;
    }
  }
  return out;
}

/// Direct product of two order-k tensors (dims n and m) giving order k,
/// dimension n*m; pair (i,j) flattens lexicographically to i*m + j.
template <typename Scalar>
[[nodiscard]] DenseTensor<Scalar> direct_product(const DenseTensor<Scalar>& a,
                                                 const DenseTensor<Scalar>& b) {
  if (a.order() != b.order()) throw DimensionError("direct_product: orders differ");
  const int k = a.order();
  const int n = a.dim(), m = b.dim();
  DenseTensor<Scalar> out(k, n * m);

  std::vector<int> ai(k, 0);
  for (std::int64_t fa = 0; fa < a.size(); ++fa) {
    const Scalar av = a.entries()[fa];
    if (av != Scalar{0}) {
      std::vector<int> bi(k, 0);
      for (std::int64_t fb = 0; fb < b.size(); ++fb) {
        const Scalar bv = b.entries()[fb];
        if (bv != Scalar{0}) {
          std::int64_t f = 0;
          for (int t = 0; t < k; ++t) f = f * (static_cast<std::int64_t>(n) * m) + ai[t] * m + bi[t];
          out.entries()[f] = av * bv;
        }
        for (int t = k - 1; t >= 0; --t) {
          if (++bi[t] < m) break;
          bi[t] = 0;
        }
      }
    }
    for (int t = k - 1; t >= 0; --t) {
      if (++ai[t] < n) break;
      ai[t] = 0;
    }
  }
  return out;
}

/// Strong connectivity of the representation digraph: arc i -> j when some
/// entry t_{i i2..im} > 0 has j among the trailing indices.
template <typename Scalar>
[[nodiscard]] bool weakly_irreducible(const DenseTensor<Scalar>& t) {
  if (t.order() < 2) throw DimensionError("weakly_irreducible: order must be at least 2");
  if ((t.entries().array() < Scalar{0}).any())
    throw Error("weakly_irreducible: negative entry");
  const int n = t.dim();
  if (n == 1) return true;

  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  std::vector<int> idx(t.order(), 0);
  for (std::int64_t f = 0; f < t.size(); ++f) {
    if (t.entries()[f] > Scalar{0}) {
      for (int m = 1; m < t.order(); ++m) arc[idx[0]][idx[m]] = true;
    }
    for (int m = t.order() - 1; m >= 0; --m) {
      if (++idx[m] < n) break;
      idx[m] = 0;
    }
  }

  const auto reaches_all = [n](const auto& has_arc) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!seen[w] && has_arc(v, w)) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all([&arc](int v, int w) { return arc[v][w]; }) &&
         reaches_all([&arc](int v, int w) { return arc[w][v]; });
}

/// View of an order-2 tensor as a dense matrix.
template <typename Scalar>
[[nodiscard]] Eigen::MatrixX<Scalar> to_matrix(const DenseTensor<Scalar>& t) {
  if (t.order() != 2) throw DimensionError("to_matrix: tensor order must be 2");
  const int n = t.dim();
  Eigen::MatrixX<Scalar> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = t.entries()[static_cast<std::int64_t>(i) * n + j];
  return out;
}

/// Debug dump: header `t <order> <dim>`, one line per nonzero with 1-based
/// indices in ascending lexicographic order and shortest round-trip values.
template <typename Scalar>
[[nodiscard]] std::string dump_tensor(const DenseTensor<Scalar>& t) {
  std::string out = "t " + std::to_string(t.order()) + ' ' + std::to_string(t.dim()) + '\n';
  std::vector<int> idx(t.order(), 0);
  char buf[64];
  for (std::int64_t f = 0; f < t.size(); ++f) {
    if (t.entries()[f] != Scalar{0}) {
      for (int m = 0; m < t.order(); ++m) {
        out += std::to_string(idx[m] + 1);
        out += ' ';
      }
      const auto res = std::to_chars(buf, buf + sizeof(buf), static_cast<double>(t.entries()[f]));
      out.append(buf, res.ptr);
      out += '\n';
    }
    for (int m = t.order() - 1; m >= 0; --m) {
      if (++idx[m] < t.dim()) break;
      idx[m] = 0;
    }
  }
  return out;
}

}  // namespace hyperspec
