// Copyright 2026 The HQPU Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqpu/qcore/propagate.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "hqpu/errors.hpp"

namespace hqpu::qcore {

namespace {

namespace odeint = boost::numeric::odeint;

using OdeState = std::vector<Complex>;

struct Schrodinger {
  const ModulatedHamiltonian& h;

  void operator()(const OdeState& psi, OdeState& dpsi, double t) const {
    h.apply(t, psi.data(), dpsi.data());
    const Complex factor = -kI / kHbar;
    for (auto& v : dpsi) v *= factor;
  }
};

bool all_finite(const OdeState& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

Vector to_vector(const OdeState& x) {
  return Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size()));
}

double default_initial_step(const ModulatedHamiltonian& h, double span) {
  const double e_max = std::max(h.max_frequency(), h.energy_scale());
  if (e_max <= 0.0) return span;
  return std::min(span, 2.0 * kPi * kHbar / (50.0 * e_max));
}

}  // namespace

PropagationResult propagate(const ModulatedHamiltonian& h, const StateVector& psi0, double t_start,
                            double t_end, const PropagationOptions& options) {
  if (!(psi0.space() == h.space())) {
    throw std::invalid_argument("initial state and Hamiltonian live on different spaces");
  }
  if (!(t_end >= t_start)) throw std::invalid_argument("propagate requires t_end >= t_start");
  if (!(options.tol > 0.0)) throw std::invalid_argument("propagate requires tol > 0");

  std::vector<double> stops = options.sample_times;
  for (double s : stops) {
    if (s < t_start || s > t_end) throw std::invalid_argument("sample time outside [t_start, t_end]");
  }
  std::sort(stops.begin(), stops.end());

  OdeState x(psi0.amplitudes().data(), psi0.amplitudes().data() + psi0.amplitudes().size());
  if (!all_finite(x)) throw ConvergenceError("initial state has non-finite amplitudes");
  const double norm0 = psi0.norm_squared();

  PropagationResult result;
  const Schrodinger system{h};
  auto stepper = options.max_step > 0.0
                     ? odeint::make_controlled(options.tol, 0.0, options.max_step,
                                               odeint::runge_kutta_dopri5<OdeState>())
                     : odeint::make_controlled(options.tol, 0.0,
                                               odeint::runge_kutta_dopri5<OdeState>());

  const double span = t_end - t_start;
  double dt = options.initial_step > 0.0 ? std::min(options.initial_step, span)
                                         : default_initial_step(h, span);
  if (options.max_step > 0.0) dt = std::min(dt, options.max_step);

  double t = t_start;
  std::size_t next_stop = 0;
  auto record_stops = [&](double now) {
    while (next_stop < stops.size() && stops[next_stop] <= now) {
      result.sample_times.push_back(stops[next_stop]);
      result.samples.emplace_back(psi0.space(), to_vector(x));
      ++next_stop;
    }
  };

  if (options.observer) options.observer(t, to_vector(x));
  record_stops(t);

  while (t < t_end) {
    const double target = next_stop < stops.size() ? stops[next_stop] : t_end;
    const bool truncated = t + dt >= target;
    const double proposed = dt;
    if (truncated) dt = target - t;

    const auto outcome = stepper.try_step(system, x, t, dt);
    if (outcome == odeint::success) {
      ++result.accepted_steps;
      if (truncated) {
        t = target;
        // keep the controller's step rather than the shortened landing step
        dt = std::max(dt, proposed);
      }
      if (!all_finite(x)) {
        throw ConvergenceError("non-finite amplitude at t = " + std::to_string(t) + " ps");
      }
      if (options.observer) options.observer(t, to_vector(x));
      record_stops(t);
    } else {
      ++result.rejected_steps;
      if (dt < options.min_step) {
        throw ConvergenceError("step size underflow (" + std::to_string(dt) + " ps) at t = " +
                               std::to_string(t) + " ps");
      }
    }
    if (result.accepted_steps + result.rejected_steps >= options.max_steps) {
      throw ConvergenceError("step budget exhausted at t = " + std::to_string(t) + " ps");
    }
  }

  result.state = StateVector(psi0.space(), to_vector(x));
  result.norm_drift = std::abs(result.state.norm_squared() - norm0);
  return result;
}

RefinementCheck propagate_with_refinement(const ModulatedHamiltonian& h, const StateVector& psi0,
                                          double t_start, double t_end,
                                          const PropagationOptions& options) {
  RefinementCheck check;
  check.coarse = propagate(h, psi0, t_start, t_end, options);
  PropagationOptions fine_options = options;
  fine_options.tol = options.tol / 32.0;
  fine_options.observer = nullptr;
  check.fine = propagate(h, psi0, t_start, t_end, fine_options);
  check.max_deviation =
      (check.coarse.state.amplitudes() - check.fine.state.amplitudes()).cwiseAbs().maxCoeff();
  return check;
}

Operator matrix_propagator(const Operator& h, double t) {
  if (!h.is_hermitian(1e-10)) {
    throw std::invalid_argument("matrix_propagator requires a Hermitian generator");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(h.matrix());
  if (eig.info() != Eigen::Success) throw ConvergenceError("eigendecomposition failed");
  const Eigen::VectorXd& energies = eig.eigenvalues();
  Vector phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    phases(k) = std::exp(-kI * (energies(k) * t / kHbar));
  }
  const Matrix& v = eig.eigenvectors();
  return {h.space(), v * phases.asDiagonal() * v.adjoint()};
}

FramePropagator::FramePropagator(const ModulatedHamiltonian& h) : space_(h.space()) {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  // adjacency: (neighbour, required D_j - D_k) for every coupled pair
  std::vector<std::vector<std::pair<Eigen::Index, double>>> edges(static_cast<std::size_t>(n));
  double scale = 0.0;
  for (const auto& term : h.terms()) {
    if (term.amplitude == Complex{}) continue;
    if (!term.envelope.is_constant()) {
      throw std::invalid_argument("FramePropagator requires constant envelopes");
    }
    scale = std::max(scale, std::abs(term.frequency));
    const Matrix& m = term.op.matrix();
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (j == k || m(j, k) == Complex{}) continue;
        edges[static_cast<std::size_t>(j)].emplace_back(k, -term.frequency);
        edges[static_cast<std::size_t>(k)].emplace_back(j, term.frequency);
      }
    }
  }

  frame_ = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::quiet_NaN());
  const double tol = 1e-12 * std::max(1.0, scale);
  for (Eigen::Index root = 0; root < n; ++root) {
    if (!std::isnan(frame_(root))) continue;
    frame_(root) = 0.0;
    std::deque<Eigen::Index> queue{root};
    while (!queue.empty()) {
      const Eigen::Index j = queue.front();
      queue.pop_front();
      for (const auto& [k, shift] : edges[static_cast<std::size_t>(j)]) {
        // edge stored at j says D_k = D_j + shift
        const double want = frame_(j) + shift;
        if (std::isnan(frame_(k))) {
          frame_(k) = want;
          queue.push_back(k);
        } else if (std::abs(frame_(k) - want) > tol) {
          throw std::invalid_argument("modulation frequencies admit no static rotating frame");
        }
      }
    }
  }

  Matrix k = h.evaluate(0.0);
  k.diagonal() += frame_.cast<Complex>();
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(k);
  if (eig.info() != Eigen::Success) throw ConvergenceError("eigendecomposition failed");
  energies_ = eig.eigenvalues();
  vectors_ = eig.eigenvectors();
}

StateVector FramePropagator::evolve(const StateVector& psi0, double t) const {
  if (!(psi0.space() == space_)) {
    throw std::invalid_argument("initial state and propagator live on different spaces");
  }
  Vector c = vectors_.adjoint() * psi0.amplitudes();
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-kI * (energies_(k) * t / kHbar));
  Vector out = vectors_ * c;
  for (Eigen::Index k = 0; k < out.size(); ++k) out(k) *= std::exp(kI * (frame_(k) * t / kHbar));
  return {space_, std::move(out)};
}

}  // namespace hqpu::qcore
