#pragma once

#include "dedekind/ideal.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/quadratic_ring.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dedekind {

// A = O*1 + mu*X with X^2 = aX + b and trace eps, stored through the
// rescaled parameters a = a_bar/z, b = b_bar/z, eps(X) = eps_x_bar/z.
struct FrobeniusData {
  Ideal mu;
  RingElement z;
  RingElement a_bar;
  RingElement b_bar;
  RingElement eps_one;
  RingElement eps_x_bar;

  const RingContext& context() const { return mu.context(); }

  FieldElement a() const;
  FieldElement b() const;
  FieldElement eps_x() const;
  // t_bar = a_bar * eps_x_bar / z + b_bar * eps(1), and t = t_bar / z = eps(X^2).
  FieldElement t_bar() const;
  FieldElement t() const;
  // eps(1) eps(X^2) - eps(X)^2.
  FieldElement delta() const;
  // a_bar^2 + 4 z b_bar, i.e. z^2 times the discriminant of X^2 - aX - b.
  RingElement discriminant() const;
};

// Closed-form duals: c = t/delta, d = -eps(X)/delta, d' = eps(1)/(z delta),
// c' = d/z.
struct DualSolution {
  RingElement c;
  RingElement d;
  FieldElement c_prime;
  RingElement d_prime;
};

struct ValidationCell {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Matrix of u -> eps(u * -) from the Z-basis {1, w, h1 X, h2 X} of A to the
// dual Z-basis {1*, w 1*, (h1/z) X*, (h2/z) X*} of O 1* + z^{-1} mu X*, where
// (h1, h2) = two_generators(mu). Columns are images.
struct EpsilonTilde {
  RatMatrix matrix;
  Rational determinant;
  bool integral = false;
  bool unimodular() const { return integral && abs(determinant) == 1; }
};

EpsilonTilde epsilon_tilde_matrix(const FrobeniusData& data);

struct ValidationReport {
  std::vector<ValidationCell> cells;
  std::vector<std::string> notes;
  bool accepted = false;
  std::optional<ErrorKind> rejection;
  std::string rejection_detail;

  FieldElement t_bar;
  FieldElement delta;
  FieldElement c, d, c_prime, d_prime;
  EpsilonTilde epsilon_tilde;

  const ValidationCell* find(std::string_view name) const;
  bool passed(std::string_view name) const;
};

// Runs every check and never throws for invalid parameter sets; the verdict
// and the first failing check are recorded in the report.
ValidationReport validate(const FrobeniusData& data);

class ValidationError : public Error {
 public:
  ValidationError(ErrorKind kind, const std::string& message, ValidationReport report)
      : Error(kind, message), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct AlgebraElement {
  RingElement u0;  // coefficient of 1
  RingElement u1;  // coefficient of X, lies in mu

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

struct TwistScale {
  RingElement lambda0;  // X -> lambda0 X, lambda0 a unit
};
struct TwistShift {
  RingElement lambda1_bar;  // X -> X + lambda1_bar / z, lambda1_bar in mu
};
struct TwistTrace {
  RingElement lambda;  // eps -> lambda eps, lambda a unit
};
using TwistSpec = std::variant<TwistScale, TwistShift, TwistTrace>;

class FrobeniusAlgebra {
 public:
  const FrobeniusData& data() const noexcept { return data_; }
  const DualSolution& duals() const noexcept { return duals_; }
  const PartitionOfZ& partition() const noexcept { return partition_; }
  const ValidationReport& report() const noexcept { return report_; }
  const RingContext& context() const { return data_.context(); }

  AlgebraElement one() const;
  // Throws PreconditionViolation if u1 is not in mu.
  AlgebraElement element(const RingElement& u0, const RingElement& u1) const;

 private:
  friend FrobeniusAlgebra build_algebra(const FrobeniusData&, long);
  friend FrobeniusAlgebra twist(const FrobeniusAlgebra&, const TwistSpec&);
  FrobeniusAlgebra(FrobeniusData data, DualSolution duals, PartitionOfZ partition, ValidationReport report)
      : data_(std::move(data)), duals_(std::move(duals)), partition_(std::move(partition)), report_(std::move(report)) {}

  FrobeniusData data_;
  DualSolution duals_;
  PartitionOfZ partition_;
  ValidationReport report_;
};

// Throws ValidationError on rejection, SearchExhausted if no partition of z
// is found within `partition_bound`.
FrobeniusAlgebra build_algebra(const FrobeniusData& data, long partition_bound = kDefaultPartitionBound);

AlgebraElement multiply(const FrobeniusAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);
RingElement trace(const FrobeniusAlgebra& alg, const AlgebraElement& x);

// Trace-free family: eps(X) = 0 with b_bar and eps(1) units. a_bar must lie
// in mu (otherwise X * mu X leaves A); violations raise IntegralityViolation.
FrobeniusAlgebra family_eps_x_zero(const Ideal& mu, const RingElement& z, const RingElement& a_bar,
                                   const RingElement& b_bar, const RingElement& eps_one);

// Unit-trace family: eps(X) = 1, b_bar = eps(1)^{-2} (z - a_bar eps(1) - d_under^{-1}).
FrobeniusAlgebra family_eps_x_one(const Ideal& mu, const RingElement& z, const RingElement& a_bar,
                                  const RingElement& eps_one, const RingElement& d_under);

// The four algebras over Z[sqrt -5] with mu = (2, 1+w), z = 2, a_bar = 1-w,
// eps_x_bar = 1+w and b_bar = eps(1)((w - s - 2) eps(1) - 3).
FrobeniusAlgebra example_zsqrtm5(int s, int eps_one);


FrobeniusData twist_data(const FrobeniusData& data, const TwistSpec& spec);
FrobeniusAlgebra twist(const FrobeniusAlgebra& alg, const TwistSpec& spec);

struct GeneralSearchConfig {
  long coefficient_bound = 2;  // box for a_bar, eps_x_bar (lattice coordinates in mu) and eps(1)
  std::size_t limit = 16;      // stop after this many hits
};

// Enumerates parameter sets with delta = -1/(s z) for units s, solving for
// b_bar and keeping those that validate.
std::vector<FrobeniusData> search_general_family(const Ideal& mu, const RingElement& z,
                                                 const GeneralSearchConfig& config = {});

std::string to_string(const AlgebraElement& x);

}  // namespace dedekind
