#include "dedekind/algebra_maps.hpp"

namespace dedekind {

KMatrix::KMatrix(const RingContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, FieldElement(ctx, 0)) {}

KMatrix KMatrix::identity(const RingContext& ctx, std::size_t n) {
  KMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(ctx, 1);
  return m;
}

std::vector<FieldElement> KMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> out(rows_, FieldElement(ctx_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

std::vector<FieldElement> KMatrix::col(std::size_t c) const {
  std::vector<FieldElement> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  KMatrix out(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  KMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

KMatrix operator*(const FieldElement& k, const KMatrix& a) {
  KMatrix out = a;
  for (auto& v : out.data_) v = k * v;
  return out;
}

bool operator==(const KMatrix& a, const KMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix KMatrix::realize() const {
  RatMatrix out(2 * rows_, 2 * cols_);
  const Rational d(ctx_.d());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const FieldElement& e = (*this)(r, c);
      if (e.is_zero()) continue;
      out(2 * r, 2 * c) = e.p();
      out(2 * r, 2 * c + 1) = d * e.q();
      out(2 * r + 1, 2 * c) = e.q();
      out(2 * r + 1, 2 * c + 1) = e.p();
    }
  return out;
}

KMatrix kron(const KMatrix& a, const KMatrix& b) {
  KMatrix out(a.context(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

KMatrix inverse2(const KMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("inverse2 needs a 2x2 matrix");
  FieldElement det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  FieldElement inv = field_inverse(det);
  KMatrix out(a.context(), 2, 2);
  out(0, 0) = inv * a(1, 1);
  out(0, 1) = -(inv * a(0, 1));
  out(1, 0) = -(inv * a(1, 0));
  out(1, 1) = inv * a(0, 0);
  return out;
}

std::vector<Rational> realize(const std::vector<FieldElement>& v) {
  std::vector<Rational> out;
  out.reserve(2 * v.size());
  for (const auto& e : v) {
    out.push_back(e.p());
    out.push_back(e.q());
  }
  return out;
}

std::vector<FieldElement> unrealize(const RingContext& ctx, const std::vector<Rational>& v) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) out.emplace_back(ctx, v[i], v[i + 1]);
  return out;
}

KMatrix unit_map(const FrobeniusAlgebra& alg) {
  KMatrix m(alg.context(), 2, 1);
  m(0, 0) = FieldElement(alg.context(), 1);
  return m;
}

KMatrix counit_map(const FrobeniusAlgebra& alg) {
  KMatrix m(alg.context(), 1, 2);
  m(0, 0) = alg.data().eps_one;
  m(0, 1) = alg.data().eps_x();
  return m;
}

KMatrix multiplication_map(const FrobeniusAlgebra& alg) {
  const RingContext& ctx = alg.context();
  KMatrix m(ctx, 2, 4);
  m(0, 0) = FieldElement(ctx, 1);
  m(1, 1) = FieldElement(ctx, 1);
  m(1, 2) = FieldElement(ctx, 1);
  m(0, 3) = alg.data().b();
  m(1, 3) = alg.data().a();
  return m;
}

KMatrix left_multiplication(const FrobeniusAlgebra& alg, const FieldElement& p0, const FieldElement& p1) {
  KMatrix m(alg.context(), 2, 2);
  m(0, 0) = p0;
  m(1, 0) = p1;
  m(0, 1) = p1 * alg.data().b();
  m(1, 1) = p0 + p1 * alg.data().a();
  return m;
}

KMatrix pairing_matrix(const FrobeniusAlgebra& alg) {
  KMatrix e(alg.context(), 2, 2);
  e(0, 0) = alg.data().eps_one;
  e(0, 1) = alg.data().eps_x();
  e(1, 0) = alg.data().eps_x();
  e(1, 1) = alg.data().t();
  return e;
}

std::vector<FieldElement> comultiplication_one_closed(const FrobeniusAlgebra& alg) {
  const FrobeniusData& p = alg.data();
  const FieldElement inv = field_inverse(p.delta());
  const FieldElement ex = p.eps_x();
  return {inv * p.t(), -(inv * ex), -(inv * ex), inv * FieldElement(p.eps_one)};
}

std::vector<FieldElement> comultiplication_one_dual(const FrobeniusAlgebra& alg) {
  const KMatrix e = pairing_matrix(alg);
  const KMatrix e_inv = inverse2(e);
  const KMatrix delta = kron(e_inv, e_inv) * multiplication_map(alg).transpose() * e;
  return delta.col(0);
}

KMatrix comultiplication_map(const FrobeniusAlgebra& alg) {
  const RingContext& ctx = alg.context();
  const std::vector<FieldElement> one = comultiplication_one_closed(alg);
  const KMatrix lx = kron(left_multiplication(alg, FieldElement(ctx, 0), FieldElement(ctx, 1)), KMatrix::identity(ctx, 2));
  const std::vector<FieldElement> x = lx.apply(one);
  KMatrix m(ctx, 4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 0) = one[i];
    m(i, 1) = x[i];
  }
  return m;
}

}  // namespace dedekind
