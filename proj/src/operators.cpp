#include "sqbath/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sqbath {

namespace {

void require_square(const Operator& a, const char* who) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << who << ": operator must be square with dim >= 1, got " << a.rows() << "x" << a.cols();
    throw std::invalid_argument(msg.str());
  }
}

void require_same_dim(const Operator& a, const Operator& b, const char* who) {
  require_square(a, who);
  require_square(b, who);
  if (a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << who << ": dimension mismatch (" << a.rows() << " vs " << b.rows() << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Operator identity(Eigen::Index dim) { return Operator::Identity(dim, dim); }

Operator zero(Eigen::Index dim) { return Operator::Zero(dim, dim); }

Operator pauli_x() {
  Operator s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Operator pauli_y() {
  Operator s(2, 2);
  s << 0, Complex(0, -1), Complex(0, 1), 0;
  return s;
}

Operator pauli_z() {
  Operator s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

Operator matmul(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "matmul");
  return a * b;
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

Operator dagger(const Operator& a) { return a.adjoint(); }

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hermiticity_error(const Operator& a) {
  return (a - Operator(a.adjoint())).cwiseAbs().maxCoeff();
}

StateVector::StateVector(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw std::invalid_argument("StateVector: dim must be >= 1");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "StateVector: amplitudes not normalized, |psi|^2 = " << norm2;
    throw std::invalid_argument(msg.str());
  }
}

StateVector StateVector::basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_state: index out of range");
  Amplitudes v = Amplitudes::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
  require_square(op_, "DensityMatrix");
  const double herm = hermiticity_error(op_);
  if (herm > 1e-9) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, max |A - A^dag| = " << herm;
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = op_.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace = " << tr << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Amplitudes& v = psi.amplitudes();
  return DensityMatrix(Operator(v * v.adjoint()));
}

double expectation(const Operator& rho, const StateVector& psi) {
  require_square(rho, "expectation");
  if (rho.rows() != psi.dim()) {
    std::ostringstream msg;
    msg << "expectation: dimension mismatch (" << rho.rows() << " vs " << psi.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
  const Complex val = psi.amplitudes().dot(rho * psi.amplitudes());
  if (std::abs(val.imag()) > 1e-9) {
    std::ostringstream msg;
    msg << "expectation: imaginary residue " << val.imag() << " exceeds 1e-9 (corrupted state)";
    throw std::runtime_error(msg.str());
  }
  return val.real();
}

double expectation(const DensityMatrix& rho, const StateVector& psi) {
  return expectation(rho.op(), psi);
}

}  // namespace sqbath
