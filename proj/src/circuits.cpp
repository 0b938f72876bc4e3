#include "qsim/circuits.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qsim {

using std::numbers::pi;

GateSpec GateSpec::matrix_1q(std::string name, const Matrix2& m, double param) {
  GateSpec g;
  g.kind = Kind::Matrix1Q;
  g.name = std::move(name);
  g.matrix = m;
  g.param = param;
  return g;
}

GateSpec GateSpec::controlled(std::string name, const Matrix2& m, double param) {
  GateSpec g;
  g.kind = Kind::ControlledMatrix;
  g.name = std::move(name);
  g.matrix = m;
  g.param = param;
  return g;
}

GateSpec GateSpec::controlled_phase(double phi) {
  GateSpec g;
  g.kind = Kind::ControlledPhase;
  g.name = "B";
  g.param = phi;
  return g;
}

GateSpec GateSpec::permutation(std::string name, BasisPermutation p) {
  GateSpec g;
  g.kind = Kind::Permutation;
  g.name = std::move(name);
  g.perm = std::move(p);
  return g;
}

GateSpec GateSpec::controlled_permutation(std::string name, BasisPermutation p) {
  GateSpec g;
  g.kind = Kind::ControlledPermutation;
  g.name = std::move(name);
  g.perm = std::move(p);
  return g;
}

GateSpec GateSpec::toffoli() {
  GateSpec g;
  g.kind = Kind::Toffoli;
  g.name = "TOFFOLI";
  return g;
}

GateSpec GateSpec::swap() {
  GateSpec g;
  g.kind = Kind::Swap;
  g.name = "SWAP";
  return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::domain_error("bad circuit width");
}

void Circuit::add(GateSpec gate, std::vector<int> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= num_qubits_)
      throw std::domain_error("circuit step qubit out of range");
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw std::domain_error("circuit step qubits must be distinct");
  }
  steps_.push_back(Step{std::move(gate), std::move(qubits)});
}

StateVector Circuit::run(StateVector input) const {
  if (input.num_qubits() != num_qubits_)
    throw std::domain_error("circuit and state register sizes differ");
  for (const Step& s : steps_) {
    const GateSpec& g = s.gate;
    switch (g.kind) {
      case GateSpec::Kind::Matrix1Q:
        apply_1q(input, g.matrix, s.qubits[0]);
        break;
      case GateSpec::Kind::ControlledMatrix:
        apply_controlled_1q(input, s.qubits[0], g.matrix, s.qubits[1]);
        break;
      case GateSpec::Kind::ControlledPhase:
        apply_controlled_phase(input, s.qubits[0], s.qubits[1], g.param);
        break;
      case GateSpec::Kind::Permutation:
        apply_permutation(input, s.qubits, g.perm);
        break;
      case GateSpec::Kind::ControlledPermutation: {
        std::vector<int> targets(s.qubits.begin() + 1, s.qubits.end());
        apply_permutation(input, targets, g.perm, s.qubits[0]);
        break;
      }
      case GateSpec::Kind::Toffoli:
        apply_toffoli(input, s.qubits[0], s.qubits[1], s.qubits[2]);
        break;
      case GateSpec::Kind::Swap:
        apply_swap(input, s.qubits[0], s.qubits[1]);
        break;
    }
  }
  return input;
}

Circuit Circuit::shifted(int offset, int new_num_qubits) const {
  Circuit out(new_num_qubits);
  for (const Step& s : steps_) {
    std::vector<int> q = s.qubits;
    for (int& v : q) v += offset;
    out.add(s.gate, std::move(q));
  }
  return out;
}

Circuit Circuit::inverse() const {
  Circuit out(num_qubits_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    GateSpec g = it->gate;
    switch (g.kind) {
      case GateSpec::Kind::Matrix1Q:
      case GateSpec::Kind::ControlledMatrix:
        g.matrix = adjoint(g.matrix);
        g.param = -g.param;
        break;
      case GateSpec::Kind::ControlledPhase:
        g.param = -g.param;
        break;
      case GateSpec::Kind::Permutation:
      case GateSpec::Kind::ControlledPermutation:
        g.perm = g.perm.inverse();
        break;
      case GateSpec::Kind::Toffoli:
      case GateSpec::Kind::Swap:
        break;  // self-inverse
    }
    out.add(std::move(g), it->qubits);
  }
  return out;
}

std::string Circuit::pretty() const {
  std::ostringstream os;
  for (const Step& s : steps_) {
    os << s.gate.name;
    for (int q : s.qubits) os << " q[" << q << "]";
    if (s.gate.kind == GateSpec::Kind::ControlledPhase ||
        s.gate.name == "PHASE")
      os << " (" << s.gate.param << ")";
    os << '\n';
  }
  return os.str();
}

std::vector<Amplitude> unitary_of(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  std::vector<Amplitude> u(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector col = c.run(StateVector::basis(c.num_qubits(), j));
    for (std::size_t i = 0; i < dim; ++i) u[i * dim + j] = col[i];
  }
  return u;
}

Oracle Oracle::from_function(
    int n_in, int m_out, const std::function<std::uint64_t(std::uint64_t)>& f) {
  Oracle o;
  o.n_in = n_in;
  o.m_out = m_out;
  o.table.resize(std::size_t{1} << n_in);
  for (std::uint64_t x = 0; x < o.table.size(); ++x) o.table[x] = f(x);
  o.validate();
  return o;
}

void Oracle::validate() const {
  if (n_in < 1 || m_out < 1) throw std::domain_error("empty oracle register");
  if (table.size() != (std::size_t{1} << n_in))
    throw std::domain_error("oracle table length must be 2^n_in");
  for (auto v : table)
    if (v >= (std::uint64_t{1} << m_out))
      throw std::domain_error("oracle value out of output range");
}

BasisPermutation oracle_permutation(const Oracle& f) {
  f.validate();
  const std::uint64_t xs = std::uint64_t{1} << f.n_in;
  const std::uint64_t ys = std::uint64_t{1} << f.m_out;
  BasisPermutation p;
  p.map.resize(xs * ys);
  for (std::uint64_t y = 0; y < ys; ++y)
    for (std::uint64_t x = 0; x < xs; ++x)
      p.map[y * xs + x] = ((y + f.table[x]) % ys) * xs + x;
  return p;
}

void apply_oracle(StateVector& sv, const Oracle& f) {
  if (sv.num_qubits() < f.n_in + f.m_out)
    throw std::domain_error("register too small for oracle");
  std::vector<int> targets(f.n_in + f.m_out);
  for (int i = 0; i < f.n_in + f.m_out; ++i) targets[i] = i;
  apply_permutation(sv, targets, oracle_permutation(f));
}

void hadamard_all(StateVector& sv) {
  const Matrix2 h = gate_h();
  for (int q = 0; q < sv.num_qubits(); ++q) apply_1q(sv, h, q);
}

Circuit qft(int n, bool bit_reversed) {
  Circuit c(n);
  for (int j = n - 1; j >= 0; --j) {
    c.add(GateSpec::matrix_1q("H", gate_h()), {j});
    for (int k = j - 1; k >= 0; --k)
      c.add(GateSpec::controlled_phase(pi / double(1 << (j - k))), {k, j});
  }
  if (!bit_reversed)
    for (int i = 0; i < n / 2; ++i) c.add(GateSpec::swap(), {i, n - 1 - i});
  return c;
}

Circuit inverse_qft(int n, bool bit_reversed) {
  return qft(n, bit_reversed).inverse();
}

int elementary_gate_count(const Circuit& c) {
  int count = 0;
  for (const auto& s : c.steps())
    if (s.gate.kind != GateSpec::Kind::Swap) ++count;
  return count;
}

Circuit cnot_from_h_cv() {
  Circuit c(2);  // qubit 1 control, qubit 0 target
  c.add(GateSpec::matrix_1q("H", gate_h()), {0});
  c.add(GateSpec::controlled("c-V", gate_v()), {1, 0});
  c.add(GateSpec::controlled("c-V", gate_v()), {1, 0});
  c.add(GateSpec::matrix_1q("H", gate_h()), {0});
  return c;
}

Circuit toffoli_from_h_cv() {
  Circuit c(3);  // qubits 2, 1 controls, qubit 0 target
  c.add(GateSpec::matrix_1q("H", gate_h()), {0});
  c.add(GateSpec::controlled("c-V", gate_v()), {1, 0});
  c.add(GateSpec::controlled("c-NOT", gate_x()), {2, 1});
  c.add(GateSpec::controlled("c-V+", gate_v_dagger()), {1, 0});
  c.add(GateSpec::controlled("c-NOT", gate_x()), {2, 1});
  c.add(GateSpec::controlled("c-V", gate_v()), {2, 0});
  c.add(GateSpec::matrix_1q("H", gate_h()), {0});
  return c;
}

Circuit half_adder() {
  Circuit c(3);  // |x1 x2 y> with x1 = qubit 2, x2 = qubit 1, y = qubit 0
  c.add(GateSpec::toffoli(), {2, 1, 0});
  c.add(GateSpec::controlled("c-NOT", gate_x()), {2, 1});
  return c;
}

std::pair<double, double> mach_zehnder(double phi0, double phi1) {
  StateVector sv(1);
  apply_1q(sv, gate_h(), 0);
  apply_1q(sv, gate_phase(phi0 - phi1), 0);
  apply_1q(sv, gate_h(), 0);
  auto p = probabilities(sv);
  return {p[0], p[1]};
}

StateVector eigenvalue_kickback_state(int m) {
  return qft(m).run(StateVector::basis(m, (std::uint64_t{1} << m) - 1));
}

}  // namespace qsim
