#pragma once

// Builders for the two benchmark systems: the time-dependent three-level
// adiabatic model and the open-ended XY spin chain with one squeezed bath
// per site.
//
// Chain conventions (fixed so CSV output is reproducible bit-for-bit):
// sites are 1-based, site 1 is the leftmost tensor factor (big-endian
// basis ordering), and the full 2^N Hilbert space is used since a sigma_x
// coupling breaks excitation-number conservation.

#include <functional>
#include <vector>

#include "sqbath/bath.hpp"

namespace sqbath {

struct ModelInstance {
  Eigen::Index dim;
  std::function<Operator(double)> hamiltonian_at;  // must be a pure function of t
  std::vector<SqueezedBathSpec> baths;
  StateVector initial_state;
  StateVector target_state;
  double total_time;
};

enum class SiteCoupling { SigmaX, SigmaZ };

// Three-level generators of the adiabatic sweep H(t) = (1-t/T) Jz + (t/T) Jx.
Operator adiabatic_jz();
Operator adiabatic_jx();

// Single bath coupled through Jx; initial state |0>, target the Jx ground
// state (|0> - sqrt(2)|1> + |2>)/2.
ModelInstance build_adiabatic_model(double T, SqueezedBathSpec bath_template);

// I x ... x op2 x ... x I with op2 at 1-based position `site`.
Operator embed_site_operator(const Operator& op2, int site, int n_sites);

// Open-ended nearest-neighbor XY chain, J = J^x = J^y.
Operator xy_chain_hamiltonian(int n_sites, double J);

// N baths, bath j coupled through sigma_x or sigma_z at site j; all baths
// share the template's parameters. Initial |100...0>, target |000...1>.
// n_sites is capped at 8 to keep the coupled system (2N+1 matrices of
// dim 2^N) tractable.
ModelInstance build_xy_chain_model(int n_sites, double J, double T,
                                   SqueezedBathSpec bath_template, SiteCoupling coupling);

}  // namespace sqbath
