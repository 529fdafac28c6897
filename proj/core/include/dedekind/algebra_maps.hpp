#pragma once

#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/matrix.hpp"

#include <vector>

namespace dedekind {

// Dense matrix over K. Tensor powers of A use the word basis of {1, X}
// with the first factor most significant, matching kron().
class KMatrix {
 public:
  KMatrix(const RingContext& ctx, std::size_t rows, std::size_t cols);
  static KMatrix identity(const RingContext& ctx, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingContext& context() const noexcept { return ctx_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  std::vector<FieldElement> col(std::size_t c) const;
  KMatrix transpose() const;

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator*(const FieldElement& k, const KMatrix& a);
  friend bool operator==(const KMatrix& a, const KMatrix& b);

  // Q-matrix on interleaved (re, im) coordinates: p + q w acts as [[p, d q], [q, p]].
  RatMatrix realize() const;

 private:
  RingContext ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

KMatrix kron(const KMatrix& a, const KMatrix& b);
// Inverse of a 2x2 matrix over K; throws DivisionByZero if singular.
KMatrix inverse2(const KMatrix& a);

// Interleaved (re, im) coordinates of a K-vector and back.
std::vector<Rational> realize(const std::vector<FieldElement>& v);
std::vector<FieldElement> unrealize(const RingContext& ctx, const std::vector<Rational>& v);

// Structure maps of A on the K-basis {1, X}.
KMatrix unit_map(const FrobeniusAlgebra& alg);                                    // 2x1
KMatrix counit_map(const FrobeniusAlgebra& alg);                                  // 1x2
KMatrix multiplication_map(const FrobeniusAlgebra& alg);                          // 2x4
KMatrix left_multiplication(const FrobeniusAlgebra& alg, const FieldElement& p0,  // 2x2, by p0 + p1 X
                            const FieldElement& p1);
KMatrix pairing_matrix(const FrobeniusAlgebra& alg);                              // eps(e_i e_j)

// Delta(1) in the basis (1x1, 1xX, Xx1, XxX), by the closed formula
// delta^{-1}(eps(X^2) 1x1 - eps(X)(1xX + Xx1) + eps(1) XxX).
std::vector<FieldElement> comultiplication_one_closed(const FrobeniusAlgebra& alg);
// Delta(1) as (E^{-1} x E^{-1}) m^T E applied to 1, E the pairing matrix.
std::vector<FieldElement> comultiplication_one_dual(const FrobeniusAlgebra& alg);
// Columns Delta(1), Delta(X), with Delta(X) = (l_X x id) Delta(1).
KMatrix comultiplication_map(const FrobeniusAlgebra& alg);

}  // namespace dedekind
