#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qham/rng.hpp"
#include "qham/tolerances.hpp"

namespace qham {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

// A point of SU(n).
struct GroupElement {
  Matrix m;

  GroupElement() = default;
  explicit GroupElement(Matrix mat) : m(std::move(mat)) {}

  int rank() const { return static_cast<int>(m.rows()); }
  GroupElement inverse() const { return GroupElement(m.adjoint()); }

  static GroupElement identity(int n) {
    return GroupElement(Matrix::Identity(n, n));
  }

  // invariant residuals
  double unitarity_defect() const;
  double det_defect() const;
};

// A point of su(n).
struct AlgebraElement {
  Matrix m;

  AlgebraElement() = default;
  explicit AlgebraElement(Matrix mat) : m(std::move(mat)) {}

  int rank() const { return static_cast<int>(m.rows()); }

  static AlgebraElement zero(int n) {
    return AlgebraElement(Matrix::Zero(n, n));
  }

  double antihermitian_defect() const;
  double trace_defect() const;
};

// A tangent vector at a group element, stored in ambient coordinates.
struct TangentVector {
  GroupElement base;
  Matrix ambient;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

double inner(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
GroupElement exp_alg(const AlgebraElement& x);
AlgebraElement log_group(const GroupElement& g);
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);
double cartan_three_form(const AlgebraElement& x, const AlgebraElement& y,
                         const AlgebraElement& z);

AlgebraElement maurer_cartan_left(const GroupElement& g,
                                  const TangentVector& xi);
AlgebraElement maurer_cartan_right(const GroupElement& g,
                                   const TangentVector& xi);

GroupElement haar_sample(int n, RngStream& rng);

// Haar-distributed real special orthogonal matrix (as a group element).
GroupElement haar_sample_so(int n, RngStream& rng);

// Orthonormal basis of su(n) for the inner product -tr(XY).
std::vector<AlgebraElement> su_basis(int n);

// Spectral data of a unitary matrix: unitary eigenvector frame and
// eigen-angles in (-pi, pi], via the Schur form (exact orthonormality
// for repeated eigenvalues).
struct UnitarySpectrum {
  Matrix frame;     // unitary; columns are eigenvectors
  Vector angles;    // arg of eigenvalues, in (-pi, pi]
};
UnitarySpectrum unitary_spectrum(const GroupElement& g);

// Shift angles whose principal-branch sum is 2*pi*k back to sum zero:
// k > 0 subtracts 2*pi from the k largest entries, k < 0 adds 2*pi to
// the |k| smallest. Returns the adjusted angles (same order as input).
Vector zero_sum_branch(const Vector& angles);

}  // namespace qham
