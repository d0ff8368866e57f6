#include "sqbath/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sqbath {

namespace {

using SparseOp = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

constexpr double kMonitorAbort = 1e-3;

void check_config(const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("IntegratorConfig: dt must be > 0");
  if (cfg.dt > 0.01 + 1e-15)
    throw std::invalid_argument("IntegratorConfig: dt must be <= 0.01 for production runs");
  if (cfg.sample_every < 1)
    throw std::invalid_argument("IntegratorConfig: sample_every must be >= 1");
}

void check_state(const ModelInstance& model, const EvolutionState& state, const char* who) {
  if (state.rho.rows() != model.dim || state.rho.cols() != model.dim)
    throw std::invalid_argument(std::string(who) + ": state dim does not match model");
  if (state.obar1.size() != model.baths.size() || state.obar2.size() != model.baths.size())
    throw std::invalid_argument(std::string(who) + ": memory operator count does not match bath count");
}

int checked_bath_index(const ModelInstance& model, int j, const char* who) {
  if (j < 0 || j >= static_cast<int>(model.baths.size())) {
    std::ostringstream msg;
    msg << who << ": bath index " << j << " out of range [0, " << model.baths.size() << ")";
    throw std::invalid_argument(msg.str());
  }
  return j;
}

// -iH(t) - sum_k L_k (Obar1_k + Obar2_k)
Operator effective_drift(const ModelInstance& model, const EvolutionState& state) {
  Operator m = Complex(0.0, -1.0) * model.hamiltonian_at(state.t);
  for (std::size_t k = 0; k < model.baths.size(); ++k)
    m -= model.baths[k].lindblad * (state.obar1[k] + state.obar2[k]);
  return m;
}

// State of the coupled ODE system: rho plus the memory operators.
struct Sys {
  Operator rho;
  std::vector<Operator> o1, o2;
};

Sys make_like(const Sys& y) {
  Sys out;
  out.rho = zero(y.rho.rows());
  out.o1.assign(y.o1.size(), zero(y.rho.rows()));
  out.o2.assign(y.o2.size(), zero(y.rho.rows()));
  return out;
}

// out = y + c*k
void set_axpy(Sys& out, const Sys& y, double c, const Sys& k) {
  out.rho = y.rho + c * k.rho;
  for (std::size_t j = 0; j < y.o1.size(); ++j) {
    out.o1[j] = y.o1[j] + c * k.o1[j];
    out.o2[j] = y.o2[j] + c * k.o2[j];
  }
}

void accumulate_rk4(Sys& y, double dt, const Sys& k1, const Sys& k2, const Sys& k3,
                    const Sys& k4) {
  const double c = dt / 6.0;
  y.rho += c * (k1.rho + 2.0 * k2.rho + 2.0 * k3.rho + k4.rho);
  for (std::size_t j = 0; j < y.o1.size(); ++j) {
    y.o1[j] += c * (k1.o1[j] + 2.0 * k2.o1[j] + 2.0 * k3.o1[j] + k4.o1[j]);
    y.o2[j] += c * (k1.o2[j] + 2.0 * k2.o2[j] + 2.0 * k3.o2[j] + k4.o2[j]);
  }
}

// Fused RHS of the full coupled system. Lindblad operators are applied as
// sparse views: site-local couplings have O(dim) entries, which drops those
// products from O(dim^3) to O(dim^2).
class CoupledRhs {
 public:
  explicit CoupledRhs(const ModelInstance& model) : model_(model) {
    const Eigen::Index d = model.dim;
    const std::size_t n = model.baths.size();
    a1_.reserve(n);
    a2_.reserve(n);
    damp1_.reserve(n);
    damp2_.reserve(n);
    lsp_.reserve(n);
    for (const auto& bath : model.baths) {
      a1_.push_back(alpha1_coeff(bath));
      a2_.push_back(alpha2_coeff(bath));
      damp1_.push_back(Complex(bath.bandwidth, bath.center_frequency));
      damp2_.push_back(Complex(bath.bandwidth, -bath.center_frequency));
      lsp_.push_back(bath.lindblad.sparseView());
    }
    h_ = zero(d);
    m_ = zero(d);
    p_ = zero(d);
    x_ = zero(d);
  }

  void operator()(double t, const Sys& y, Sys& dy) {
    const std::size_t n = model_.baths.size();
    h_ = model_.hamiltonian_at(t);

    // M = -iH - sum_k L_k (O1_k + O2_k)
    m_ = Complex(0.0, -1.0) * h_;
    for (std::size_t k = 0; k < n; ++k) {
      p_ = y.o1[k] + y.o2[k];
      m_.noalias() -= lsp_[k] * p_;
    }

    for (std::size_t j = 0; j < n; ++j) {
      dy.o1[j] = a1_[j] * model_.baths[j].lindblad - damp1_[j] * y.o1[j];
      dy.o1[j].noalias() += m_ * y.o1[j];
      dy.o1[j].noalias() -= y.o1[j] * m_;
      dy.o2[j] = a2_[j] * model_.baths[j].lindblad - damp2_[j] * y.o2[j];
      dy.o2[j].noalias() += m_ * y.o2[j];
      dy.o2[j].noalias() -= y.o2[j] * m_;
    }

    // -i[H, rho] + sum_j [L_j, rho P_j^dag - P_j rho],  P_j = O1_j + O2_j
    dy.rho.noalias() = Complex(0.0, -1.0) * (h_ * y.rho);
    dy.rho.noalias() += Complex(0.0, 1.0) * (y.rho * h_);
    for (std::size_t j = 0; j < n; ++j) {
      p_ = y.o1[j] + y.o2[j];
      x_.noalias() = y.rho * p_.adjoint();
      x_.noalias() -= p_ * y.rho;
      dy.rho.noalias() += lsp_[j] * x_;
      dy.rho.noalias() -= x_ * lsp_[j];
    }
  }

 private:
  const ModelInstance& model_;
  std::vector<Complex> a1_, a2_, damp1_, damp2_;
  std::vector<SparseOp> lsp_;
  Operator h_, m_, p_, x_;
};

// Markovian-limit RHS: per-bath dissipators with the stationary memory
// coefficients c1 = (Gamma/2)(u^2 - v u), c2 = (Gamma/2)(|v|^2 - v* u).
class LindbladRhs {
 public:
  explicit LindbladRhs(const ModelInstance& model) : model_(model) {
    for (const auto& bath : model.baths) {
      const auto f = squeeze_factors(bath.squeeze_strength, bath.squeeze_direction);
      const Complex c1 = 0.5 * bath.coupling_strength * (f.u * f.u - f.v * f.u);
      const Complex c2 = 0.5 * bath.coupling_strength * (std::norm(f.v) - std::conj(f.v) * f.u);
      coeff_.push_back(c1 + c2);
      lsp_.push_back(bath.lindblad.sparseView());
      lsq_.push_back(Operator(bath.lindblad * bath.lindblad));
    }
    h_ = zero(model.dim);
    x_ = zero(model.dim);
    t_ = zero(model.dim);
  }

  void operator()(double t, const Sys& y, Sys& dy) {
    h_ = model_.hamiltonian_at(t);
    dy.rho.noalias() = Complex(0.0, -1.0) * (h_ * y.rho);
    dy.rho.noalias() += Complex(0.0, 1.0) * (y.rho * h_);
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
      // 0.5 {L^2, rho} - L rho L, scaled by 2 c_j
      x_ = 0.5 * (lsq_[j] * y.rho + y.rho * lsq_[j]);
      t_.noalias() = lsp_[j] * y.rho;
      x_.noalias() -= t_ * lsp_[j];
      dy.rho -= 2.0 * coeff_[j] * x_;
    }
  }

 private:
  const ModelInstance& model_;
  std::vector<Complex> coeff_;
  std::vector<SparseOp> lsp_;
  std::vector<Operator> lsq_;
  Operator h_, x_, t_;
};

double fidelity_from(const Operator& rho, const StateVector& target, double t) {
  const Complex val = target.amplitudes().dot(rho * target.amplitudes());
  if (val.real() < -1e-12) {
    std::ostringstream msg;
    msg << "fidelity: <psi_T|rho|psi_T> = " << val.real() << " below -1e-12 at t = " << t;
    throw std::runtime_error(msg.str());
  }
  return std::sqrt(std::max(val.real(), 0.0));
}

template <class Rhs>
TrajectoryRecord integrate(const ModelInstance& model, const IntegratorConfig& cfg, Rhs& rhs,
                           Sys y, const SampleObserver& observer,
                           std::vector<std::pair<std::string, std::string>> metadata) {
  check_config(cfg);
  const long long steps = std::llround(model.total_time / cfg.dt);
  if (steps < 1) throw std::invalid_argument("evolve: total_time must cover at least one step");

  TrajectoryRecord record;
  record.metadata = std::move(metadata);

  Sys k1 = make_like(y), k2 = make_like(y), k3 = make_like(y), k4 = make_like(y);
  Sys ytmp = make_like(y);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig;

  auto sample = [&](long long step) {
    const double t = static_cast<double>(step) * cfg.dt;
    const double tr_err = std::abs(y.rho.trace() - Complex(1.0, 0.0));
    const double h_err = hermiticity_error(y.rho);
    if (!(tr_err <= kMonitorAbort) || !(h_err <= kMonitorAbort)) {  // also catches nan
      std::ostringstream msg;
      msg << "integrator abort at t = " << t << ": trace drift " << tr_err
          << ", hermiticity drift " << h_err
          << " (step size too large or outside the weak-coupling regime)";
      throw std::runtime_error(msg.str());
    }
    record.times.push_back(t);
    record.fidelity.push_back(fidelity_from(y.rho, model.target_state, t));
    record.trace_err.push_back(tr_err);
    record.herm_err.push_back(h_err);
    record.purity.push_back((y.rho * y.rho).trace().real());
    eig.compute(0.5 * (Eigen::MatrixXcd(y.rho) + Eigen::MatrixXcd(y.rho).adjoint()),
                Eigen::EigenvaluesOnly);
    record.min_eigenvalue.push_back(eig.eigenvalues().minCoeff());
    if (observer) observer(EvolutionState{t, y.rho, y.o1, y.o2});
  };

  for (long long step = 0; step <= steps; ++step) {
    if (step % cfg.sample_every == 0 || step == steps) sample(step);
    if (step == steps) break;
    const double t = static_cast<double>(step) * cfg.dt;
    rhs(t, y, k1);
    set_axpy(ytmp, y, 0.5 * cfg.dt, k1);
    rhs(t + 0.5 * cfg.dt, ytmp, k2);
    set_axpy(ytmp, y, 0.5 * cfg.dt, k2);
    rhs(t + 0.5 * cfg.dt, ytmp, k3);
    set_axpy(ytmp, y, cfg.dt, k3);
    rhs(t + cfg.dt, ytmp, k4);
    accumulate_rk4(y, cfg.dt, k1, k2, k3, k4);
  }
  return record;
}

std::vector<std::pair<std::string, std::string>> base_metadata(const ModelInstance& model,
                                                               const IntegratorConfig& cfg,
                                                               const char* engine) {
  std::vector<std::pair<std::string, std::string>> md;
  md.emplace_back("engine", engine);
  md.emplace_back("method", IntegratorConfig::method);
  md.emplace_back("obar_drift", "multi-bath-sum");
  md.emplace_back("dim", std::to_string(model.dim));
  md.emplace_back("baths", std::to_string(model.baths.size()));
  md.emplace_back("T", std::to_string(model.total_time));
  md.emplace_back("dt", std::to_string(cfg.dt));
  md.emplace_back("sample_every", std::to_string(cfg.sample_every));
  if (!model.baths.empty()) {
    const auto& bath = model.baths.front();  // models in scope share bath parameters
    md.emplace_back("Gamma", std::to_string(bath.coupling_strength));
    md.emplace_back("gamma", std::to_string(bath.bandwidth));
    md.emplace_back("omega0", std::to_string(bath.center_frequency));
    md.emplace_back("r", std::to_string(bath.squeeze_strength));
    md.emplace_back("theta", std::to_string(bath.squeeze_direction));
  }
  return md;
}

}  // namespace

Operator rhs_obar1(const ModelInstance& model, const EvolutionState& state, int bath_index) {
  check_state(model, state, "rhs_obar1");
  const int j = checked_bath_index(model, bath_index, "rhs_obar1");
  const auto& bath = model.baths[j];
  const Complex damping(bath.bandwidth, bath.center_frequency);
  return alpha1_coeff(bath) * bath.lindblad - damping * state.obar1[j] +
         commutator(effective_drift(model, state), state.obar1[j]);
}

Operator rhs_obar2(const ModelInstance& model, const EvolutionState& state, int bath_index) {
  check_state(model, state, "rhs_obar2");
  const int j = checked_bath_index(model, bath_index, "rhs_obar2");
  const auto& bath = model.baths[j];
  const Complex damping(bath.bandwidth, -bath.center_frequency);
  return alpha2_coeff(bath) * bath.lindblad - damping * state.obar2[j] +
         commutator(effective_drift(model, state), state.obar2[j]);
}

Operator rhs_rho(const ModelInstance& model, const EvolutionState& state) {
  check_state(model, state, "rhs_rho");
  Operator out = Complex(0.0, -1.0) * commutator(model.hamiltonian_at(state.t), state.rho);
  for (std::size_t j = 0; j < model.baths.size(); ++j) {
    const Operator& l = model.baths[j].lindblad;
    out += commutator(l, Operator(state.rho * dagger(state.obar1[j])));
    out -= commutator(l, Operator(state.obar1[j] * state.rho));
    out += commutator(l, Operator(state.rho * dagger(state.obar2[j])));
    out -= commutator(l, Operator(state.obar2[j] * state.rho));
  }
  return out;
}

TrajectoryRecord evolve(const ModelInstance& model, const IntegratorConfig& cfg,
                        const SampleObserver& observer) {
  Sys y;
  y.rho = DensityMatrix::pure(model.initial_state).op();
  y.o1.assign(model.baths.size(), zero(model.dim));
  y.o2.assign(model.baths.size(), zero(model.dim));
  CoupledRhs rhs(model);
  return integrate(model, cfg, rhs, std::move(y), observer,
                   base_metadata(model, cfg, "non-markovian"));
}

TrajectoryRecord evolve_lindblad(const ModelInstance& model, const IntegratorConfig& cfg,
                                 const SampleObserver& observer) {
  Sys y;
  y.rho = DensityMatrix::pure(model.initial_state).op();
  LindbladRhs rhs(model);
  return integrate(model, cfg, rhs, std::move(y), observer,
                   base_metadata(model, cfg, "markovian-lindblad"));
}

std::pair<std::vector<double>, std::vector<double>> fidelity_series(
    const TrajectoryRecord& record) {
  if (record.times.empty()) throw std::invalid_argument("fidelity_series: empty record");
  return {record.times, record.fidelity};
}

std::pair<double, double> max_fidelity(const TrajectoryRecord& record) {
  if (record.times.empty()) throw std::invalid_argument("max_fidelity: empty record");
  std::size_t best = 0;
  for (std::size_t i = 1; i < record.fidelity.size(); ++i)
    if (record.fidelity[i] > record.fidelity[best]) best = i;
  return {record.times[best], record.fidelity[best]};
}

}  // namespace sqbath
