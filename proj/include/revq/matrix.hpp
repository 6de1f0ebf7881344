#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "revq/radix.hpp"

namespace revq {

/// Default tolerance for unitarity and norm checks. All gate matrices in the
/// library are exact 0/1, so double precision leaves ample headroom.
inline constexpr double kUnitaryTol = 1e-12;

/// Largest register dimension the dense routines will allocate.
/// Adjustable at runtime; the library's own constructions need at most 18.
inline std::int64_t dense_dimension_limit = 4096;

inline void check_dense_dimension(std::int64_t dim) {
  if (dim > dense_dimension_limit)
    throw std::length_error("dense dimension " + std::to_string(dim) +
                            " exceeds limit " + std::to_string(dense_dimension_limit));
}

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    check_dense_dimension(static_cast<std::int64_t>(rows > cols ? rows : cols));
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix addition: size mismatch");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix subtraction: size mismatch");
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type ark = a(r, k);
        if (ark == value_type{}) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend ComplexMatrix operator*(value_type s, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) out.entries_[i] = s * m.entries_[i];
    return out;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> entries_;
};

/// Largest entrywise absolute difference.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = kUnitaryTol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

/// Kronecker product. Factor order is wire order: the first argument is the
/// more significant subsystem, matching big-endian state indexing.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dense_dimension(static_cast<std::int64_t>(a.rows()) * static_cast<std::int64_t>(b.rows()));
  check_dense_dimension(static_cast<std::int64_t>(a.cols()) * static_cast<std::int64_t>(b.cols()));
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const auto f = a(ar, ac);
      if (f == ComplexMatrix::value_type{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

/// |k><k| on a single wire of the given radix.
inline ComplexMatrix projector(int radix, int k) {
  if (radix < 2) throw std::invalid_argument("projector: radix must be >= 2");
  if (k < 0 || k >= radix)
    throw std::out_of_range("projector: k = " + std::to_string(k) +
                            " out of range for radix " + std::to_string(radix));
  ComplexMatrix p(radix, radix);
  p(k, k) = 1.0;
  return p;
}

/// Controlled operator: sum_k |k><k| (x) branches[k], with the control wire
/// as the first tensor factor. Block-diagonal with blocks in control order.
inline ComplexMatrix conditional(int control_radix, const std::vector<ComplexMatrix>& branches) {
  if (control_radix < 2) throw std::invalid_argument("conditional: control radix must be >= 2");
  if (static_cast<int>(branches.size()) != control_radix)
    throw std::invalid_argument("conditional: need one branch per control value");
  const std::size_t n = branches.front().rows();
  for (const auto& u : branches)
    if (!u.square() || u.rows() != n)
      throw std::invalid_argument("conditional: branches must be square and equal-sized");
  ComplexMatrix out(control_radix * n, control_radix * n);
  for (int k = 0; k < control_radix; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out(k * n + r, k * n + c) = branches[k](r, c);
  return out;
}

/// True iff max-norm of (u^dagger u - I) is within tol.
inline bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol) {
  if (!u.square()) throw std::invalid_argument("is_unitary: matrix must be square");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

/// Normalized quantum state over a mixed-radix register.
class StateVector {
 public:
  using value_type = std::complex<double>;

  StateVector(RegisterShape shape, std::vector<value_type> amplitudes)
      : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
    check_dense_dimension(shape_.dimension());
    if (static_cast<std::int64_t>(amplitudes_.size()) != shape_.dimension())
      throw std::invalid_argument("StateVector: amplitude count does not match dimension");
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kUnitaryTol)
      throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }

  /// Basis state |index>.
  static StateVector basis(const RegisterShape& shape, std::int64_t index) {
    check_dense_dimension(shape.dimension());
    if (index < 0 || index >= shape.dimension())
      throw std::out_of_range("StateVector::basis: index out of range");
    std::vector<value_type> amps(shape.dimension());
    amps[static_cast<std::size_t>(index)] = 1.0;
    return StateVector(shape, std::move(amps));
  }

  static StateVector basis(const RegisterShape& shape, const DigitWord& digits) {
    return basis(shape, digits_to_index(shape, digits));
  }

  const RegisterShape& shape() const { return shape_; }
  std::size_t size() const { return amplitudes_.size(); }
  const value_type& amplitude(std::size_t i) const { return amplitudes_.at(i); }
  const std::vector<value_type>& amplitudes() const { return amplitudes_; }

 private:
  RegisterShape shape_;
  std::vector<value_type> amplitudes_;
};

/// u applied to s. u must be unitary within tol; the result keeps unit norm.
inline StateVector apply(const ComplexMatrix& u, const StateVector& s,
                         double tol = kUnitaryTol) {
  if (!u.square() || u.rows() != s.size())
    throw std::invalid_argument("apply: operator size does not match state dimension");
  if (!is_unitary(u, tol)) throw std::invalid_argument("apply: operator is not unitary");
  std::vector<StateVector::value_type> out(s.size());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    StateVector::value_type acc{};
    for (std::size_t c = 0; c < u.cols(); ++c) acc += u(r, c) * s.amplitude(c);
    out[r] = acc;
  }
  return StateVector(s.shape(), std::move(out));
}

/// Continuous unitary path from the identity to NOT on one qubit:
///   U(t) = e^{i pi t / 2} (cos(pi t / 2) I - i sin(pi t / 2) NOT).
/// U(0) = I and U(1) = NOT; in between the image of a basis state is a
/// genuine superposition. The global phase factor makes the endpoints land
/// on I and NOT themselves rather than on phase multiples of them.
inline ComplexMatrix not_path(double t) {
  if (t < 0.0 || t > 1.0) throw std::out_of_range("not_path: t must lie in [0, 1]");
  const double theta = std::numbers::pi * t / 2.0;
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, theta));
  ComplexMatrix u(2, 2);
  const std::complex<double> diag = phase * std::cos(theta);
  const std::complex<double> off = phase * std::complex<double>(0.0, -1.0) * std::sin(theta);
  u(0, 0) = diag;
  u(1, 1) = diag;
  u(0, 1) = off;
  u(1, 0) = off;
  return u;
}

}  // namespace revq
