#include "qsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsim {

DensityMatrix::DensityMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::domain_error("dimension must be positive");
  entries_.assign(std::size_t(dim) * dim, Amplitude{0.0, 0.0});
}

DensityMatrix DensityMatrix::from_state(const StateVector& sv) {
  DensityMatrix rho(int(sv.size()));
  for (int r = 0; r < rho.dim_; ++r)
    for (int c = 0; c < rho.dim_; ++c)
      rho.at(r, c) = sv[std::size_t(r)] * std::conj(sv[std::size_t(c)]);
  return rho;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i).real();
  return t;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  // Cyclic Jacobi for Hermitian matrices: rotate away the off-diagonal
  // entry of each 2x2 principal block until all are negligible.
  std::vector<Amplitude> a = entries_;
  const int d = dim_;
  auto ref = [&](int r, int c) -> Amplitude& {
    return a[std::size_t(r) * d + c];
  };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += std::norm(ref(p, q));
    if (off < 1e-28) break;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Amplitude apq = ref(p, q);
        if (std::abs(apq) < 1e-18) continue;
        const double app = ref(p, p).real(), aqq = ref(q, q).real();
        // Unitary 2x2 diagonalization: phase out apq, then a real rotation.
        const Amplitude phase = apq / std::abs(apq);
        const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
        const Amplitude cs{std::cos(theta), 0.0};
        const Amplitude sn = phase * std::sin(theta);
        for (int k = 0; k < d; ++k) {
          const Amplitude akp = ref(k, p), akq = ref(k, q);
          ref(k, p) = akp * cs + akq * std::conj(sn);
          ref(k, q) = -akp * sn + akq * cs;
        }
        for (int k = 0; k < d; ++k) {
          const Amplitude apk = ref(p, k), aqk = ref(q, k);
          ref(p, k) = cs * apk + sn * aqk;
          ref(q, k) = std::conj(sn) * apk * Amplitude{-1.0, 0.0} + cs * aqk;
        }
      }
    }
  }
  std::vector<double> ev(d);
  for (int i = 0; i < d; ++i) ev[i] = ref(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

void DensityMatrix::validate() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > 1e-12)
        throw std::domain_error("density matrix is not Hermitian");
  if (std::abs(trace_real() - 1.0) > 1e-12)
    throw std::domain_error("density matrix trace is not 1");
  if (eigenvalues().front() < -1e-10)
    throw std::domain_error("density matrix is not positive semidefinite");
}

DensityMatrix reduced_density(const StateVector& sv,
                              const std::vector<int>& keep) {
  const int n = sv.num_qubits();
  const int k = int(keep.size());
  std::vector<bool> kept(n, false);
  for (int q : keep) {
    if (q < 0 || q >= n || kept[q])
      throw std::domain_error("invalid qubit list for the reduced state");
    kept[q] = true;
  }
  std::vector<int> env;
  for (int q = 0; q < n; ++q)
    if (!kept[q]) env.push_back(q);

  auto scatter = [](std::uint64_t bits, const std::vector<int>& where) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < where.size(); ++i)
      out |= ((bits >> i) & 1u) << where[i];
    return out;
  };

  DensityMatrix rho(1 << k);
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << env.size()); ++e) {
    const std::uint64_t base = scatter(e, env);
    for (int r = 0; r < rho.dim(); ++r) {
      const Amplitude ar = sv[base | scatter(std::uint64_t(r), keep)];
      for (int c = 0; c < rho.dim(); ++c)
        rho.at(r, c) +=
            ar * std::conj(sv[base | scatter(std::uint64_t(c), keep)]);
    }
  }
  return rho;
}

double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != int(psi.size()))
    throw std::domain_error("dimension mismatch");
  Amplitude f{0.0, 0.0};
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c)
      f += std::conj(psi[std::size_t(r)]) * rho.at(r, c) * psi[std::size_t(c)];
  return f.real();
}

namespace {

void check_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw std::domain_error("environment overlap must lie in [0, 1]");
}

/// Unitary taking the environment's |e0> to kappa |e0> + sqrt(1-k^2) |e1>.
Matrix2 env_coupling(double kappa) {
  const double s = std::sqrt(std::max(0.0, 1.0 - kappa * kappa));
  return {Amplitude{kappa, 0.0}, Amplitude{-s, 0.0}, Amplitude{s, 0.0},
          Amplitude{kappa, 0.0}};
}

}  // namespace

DensityMatrix decohere_qubit(const DensityMatrix& rho, double kappa) {
  if (rho.dim() != 2) throw std::domain_error("expected a single qubit");
  check_kappa(kappa);
  rho.validate();
  DensityMatrix out = rho;
  out.at(0, 1) *= kappa;
  out.at(1, 0) *= kappa;
  return out;
}

std::pair<double, double> interference_probabilities(double phi, double kappa) {
  check_kappa(kappa);
  const double p0 = 0.5 * (1.0 + kappa * std::cos(phi));
  return {p0, 1.0 - p0};
}

std::pair<double, double> interference_probabilities_sim(double phi,
                                                         double kappa) {
  check_kappa(kappa);
  StateVector sv(2);  // qubit 0, environment on qubit 1
  apply_1q(sv, gate_h(), 0);
  apply_1q(sv, gate_phase(phi), 0);
  apply_controlled_1q(sv, 0, env_coupling(kappa), 1);
  apply_1q(sv, gate_h(), 0);
  const auto p = partial_probabilities(sv, {0});
  return {p[0], p[1]};
}

double register_coherence(BasisIndex x, BasisIndex y, double kappa) {
  check_kappa(kappa);
  int h = 0;
  for (std::uint64_t d = x ^ y; d; d >>= 1) h += int(d & 1);
  return std::pow(kappa, h);
}

double pointwise_fidelity(double x, double kappa) {
  return x * x + (1.0 - x) * (1.0 - x) + 2.0 * x * (1.0 - x) * kappa;
}

namespace {

void check_gamma(double gamma_t) {
  if (!(gamma_t >= 0.0)) throw std::domain_error("gamma_t must be >= 0");
}

/// Composite Simpson over |alpha|^2 in [0, 1].
template <typename F>
double simpson(F f, int intervals) {
  if (intervals < 2 || intervals % 2 != 0)
    throw std::domain_error("need an even, positive interval count");
  const double h = 1.0 / intervals;
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < intervals; ++i)
    acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

StateVector alpha_state(double x, double theta = 0.0) {
  StateVector psi(1);
  psi[0] = Amplitude{std::sqrt(x), 0.0};
  psi[1] = std::polar(std::sqrt(1.0 - x), theta);
  return psi;
}

}  // namespace

double average_fidelity_plain(double gamma_t) {
  check_gamma(gamma_t);
  return (2.0 + std::exp(-gamma_t)) / 3.0;
}

double average_fidelity_plain_numeric(double gamma_t, int intervals) {
  check_gamma(gamma_t);
  const double kappa = std::exp(-gamma_t);
  return simpson(
      [&](double x) {
        const StateVector psi = alpha_state(x);
        return state_fidelity(decohere_qubit(DensityMatrix::from_state(psi), kappa),
                              psi);
      },
      intervals);
}

double average_fidelity_encoded(double gamma_t) {
  check_gamma(gamma_t);
  return (4.0 + 3.0 * std::exp(-gamma_t) - std::exp(-3.0 * gamma_t)) / 6.0;
}

Circuit encode3_circuit() {
  Circuit c(3);
  c.add(GateSpec::controlled("CNOT", gate_x()), {0, 1});
  c.add(GateSpec::controlled("CNOT", gate_x()), {0, 2});
  for (int q = 0; q < 3; ++q) c.add(GateSpec::matrix_1q("H", gate_h()), {q});
  return c;
}

Circuit decode3_circuit() {
  Circuit c(3);
  for (int q = 0; q < 3; ++q) c.add(GateSpec::matrix_1q("H", gate_h()), {q});
  c.add(GateSpec::controlled("CNOT", gate_x()), {0, 1});
  c.add(GateSpec::controlled("CNOT", gate_x()), {0, 2});
  c.add(GateSpec::toffoli(), {1, 2, 0});
  return c;
}

StateVector encode3(const StateVector& single) {
  if (single.num_qubits() != 1) throw std::domain_error("expected one qubit");
  return encode3_circuit().run(tensor(StateVector(2), single));
}

Decode3Result decode3(const StateVector& sv) {
  if (sv.num_qubits() != 3) throw std::domain_error("expected three qubits");
  StateVector post = decode3_circuit().run(sv);
  const auto probs = partial_probabilities(post, {2, 1});  // index 2 q1 + q2
  std::array<double, 4> sp{probs[0], probs[1], probs[2], probs[3]};
  const int syndrome =
      int(std::max_element(sp.begin(), sp.end()) - sp.begin());
  DensityMatrix data = reduced_density(post, {0});
  return {std::move(post), sp, syndrome, std::move(data)};
}

double average_fidelity_encoded_sim(double gamma_t, int intervals) {
  check_gamma(gamma_t);
  const double kappa = std::exp(-gamma_t);
  const Matrix2 coupling = env_coupling(kappa);
  const Circuit decode = decode3_circuit().shifted(0, 6);
  auto run_one = [&](const StateVector& psi) {
    // Data on qubits 0..2, one private environment per qubit on 3..5.
    StateVector sv = tensor(StateVector(3), encode3(psi));
    for (int q = 0; q < 3; ++q) apply_controlled_1q(sv, q, coupling, 3 + q);
    sv = decode.run(std::move(sv));
    return state_fidelity(reduced_density(sv, {0}), psi);
  };
  // The residual (uncorrectable) error is a bit flip on the decoded qubit,
  // whose fidelity depends on the relative phase of the input; the closed
  // form averages it out. Four equally spaced phases average any trig
  // polynomial of degree < 4 exactly.
  return simpson(
      [&](double x) {
        double acc = 0.0;
        for (int i = 0; i < 4; ++i)
          acc += run_one(alpha_state(x, i * std::numbers::pi / 2.0));
        return acc / 4.0;
      },
      intervals);
}

void write_fidelity_csv(std::ostream& out, double gamma_t_max, int steps) {
  if (steps < 1) throw std::domain_error("need at least one step");
  if (!(gamma_t_max >= 0.0)) throw std::domain_error("gamma_t_max must be >= 0");
  out << "gamma_t, fidelity_plain, fidelity_encoded\n";
  for (int i = 0; i < steps; ++i) {
    const double t =
        steps == 1 ? 0.0 : gamma_t_max * double(i) / double(steps - 1);
    std::ostringstream row;
    row.precision(12);
    row << t << ", " << average_fidelity_plain(t) << ", "
        << average_fidelity_encoded(t);
    out << row.str() << '\n';
  }
}

}  // namespace qsim
