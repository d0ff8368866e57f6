#pragma once

// Dense complex operator algebra shared by every module. All values are
// immutable after construction and all operations are pure functions, so
// everything here can be shared across threads without synchronization.

#include <complex>

#include <Eigen/Dense>

namespace sqbath {

using Complex = std::complex<double>;

// Row-major dense complex square matrix: the universal carrier for
// Hamiltonians, Lindblad operators, memory operators and density matrices.
// All systems in scope have dim <= 2^6, so dense storage is the right call.
using Operator = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Amplitudes = Eigen::VectorXcd;

Operator identity(Eigen::Index dim);
Operator zero(Eigen::Index dim);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

Operator matmul(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);      // ab - ba
Operator anticommutator(const Operator& a, const Operator& b);  // ab + ba
Operator dagger(const Operator& a);
Operator kron(const Operator& a, const Operator& b);

// max entrywise |A - A^dagger|
double hermiticity_error(const Operator& a);

// Normalized pure state; total probability must be 1 within 1e-12.
class StateVector {
 public:
  explicit StateVector(Amplitudes amplitudes);
  static StateVector basis_state(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }

 private:
  Amplitudes amplitudes_;
};

// Density matrix validated at construction: Hermitian within 1e-9,
// trace 1 within 1e-9.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator op);
  static DensityMatrix pure(const StateVector& psi);

  Eigen::Index dim() const { return op_.rows(); }
  const Operator& op() const { return op_; }

 private:
  Operator op_;
};

// <psi|rho|psi> as a real number. The imaginary residue is discarded but
// must stay below 1e-9; anything larger signals a corrupted state.
double expectation(const DensityMatrix& rho, const StateVector& psi);
double expectation(const Operator& rho, const StateVector& psi);

}  // namespace sqbath
