#include "sqbath/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sqbath {

Operator adiabatic_jz() {
  Operator jz = zero(3);
  jz(0, 0) = -1.0;  // -|0><0|
  jz(2, 2) = 1.0;   // +|2><2|
  return jz;
}

Operator adiabatic_jx() {
  const double a = 1.0 / std::sqrt(2.0);
  Operator jx = zero(3);
  jx(0, 1) = a;
  jx(1, 0) = a;
  jx(1, 2) = a;
  jx(2, 1) = a;
  return jx;
}

ModelInstance build_adiabatic_model(double T, SqueezedBathSpec bath_template) {
  if (!(T > 0.0)) throw std::invalid_argument("build_adiabatic_model: T must be > 0");

  bath_template.lindblad = adiabatic_jx();
  bath_template.validate();

  Amplitudes target(3);
  target << 0.5, -std::sqrt(2.0) / 2.0, 0.5;

  return ModelInstance{
      3,
      [jz = adiabatic_jz(), jx = adiabatic_jx(), T](double t) -> Operator {
        const double s = t / T;
        return (1.0 - s) * jz + s * jx;
      },
      {std::move(bath_template)},
      StateVector::basis_state(3, 0),
      StateVector(std::move(target)),
      T};
}

Operator embed_site_operator(const Operator& op2, int site, int n_sites) {
  if (op2.rows() != 2 || op2.cols() != 2)
    throw std::invalid_argument("embed_site_operator: op2 must be 2x2");
  if (site < 1 || site > n_sites) {
    std::ostringstream msg;
    msg << "embed_site_operator: site " << site << " out of range [1, " << n_sites << "]";
    throw std::invalid_argument(msg.str());
  }
  const Eigen::Index left = Eigen::Index(1) << (site - 1);
  const Eigen::Index right = Eigen::Index(1) << (n_sites - site);
  return kron(kron(identity(left), op2), identity(right));
}

Operator xy_chain_hamiltonian(int n_sites, double J) {
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  Operator h = zero(dim);
  const Operator sx = pauli_x(), sy = pauli_y();
  for (int i = 1; i < n_sites; ++i) {
    h += J * (embed_site_operator(sx, i, n_sites) * embed_site_operator(sx, i + 1, n_sites));
    h += J * (embed_site_operator(sy, i, n_sites) * embed_site_operator(sy, i + 1, n_sites));
  }
  return h;
}

ModelInstance build_xy_chain_model(int n_sites, double J, double T,
                                   SqueezedBathSpec bath_template, SiteCoupling coupling) {
  if (n_sites < 2 || n_sites > 8) {
    std::ostringstream msg;
    msg << "build_xy_chain_model: N must lie in [2, 8], got " << n_sites;
    throw std::invalid_argument(msg.str());
  }
  if (!(T > 0.0)) throw std::invalid_argument("build_xy_chain_model: T must be > 0");

  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  const Operator site_op = coupling == SiteCoupling::SigmaX ? pauli_x() : pauli_z();

  std::vector<SqueezedBathSpec> baths;
  baths.reserve(n_sites);
  for (int site = 1; site <= n_sites; ++site) {
    SqueezedBathSpec spec = bath_template;
    spec.lindblad = embed_site_operator(site_op, site, n_sites);
    spec.validate();
    baths.push_back(std::move(spec));
  }

  // big-endian basis: |100...0> has the site-1 bit set, |000...1> the site-N bit
  const Eigen::Index initial_index = dim >> 1;
  const Eigen::Index target_index = 1;

  return ModelInstance{
      dim,
      [h = xy_chain_hamiltonian(n_sites, J)](double) -> Operator { return h; },
      std::move(baths),
      StateVector::basis_state(dim, initial_index),
      StateVector::basis_state(dim, target_index),
      T};
}

}  // namespace sqbath
