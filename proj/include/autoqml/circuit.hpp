#pragma once

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "autoqml/errors.hpp"
#include "autoqml/rng.hpp"
#include "autoqml/statevector.hpp"

namespace autoqml {

enum class GateKind { H, X, SX, RY, RZ, CX, CZ, SWAP };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

// One gate in a template.  Two-qubit gates carry the second operand in
// `control` (CZ and SWAP are symmetric; for CX it is the control proper).
// Rotations reference either a parameter slot or a fixed angle.
struct GateOp {
  GateKind kind;
  int target = 0;
  int control = -1;
  int param_slot = -1;   // >= 0: angle comes from the parameter vector
  double angle = 0.0;    // used when param_slot < 0

  bool is_rotation() const {
    return kind == GateKind::RY || kind == GateKind::RZ;
  }
  bool is_two_qubit() const {
    return kind == GateKind::CX || kind == GateKind::CZ ||
           kind == GateKind::SWAP;
  }

  static GateOp rot(GateKind k, int target, int slot) {
    return GateOp{k, target, -1, slot, 0.0};
  }
  static GateOp fixed(GateKind k, int target, double angle = 0.0) {
    return GateOp{k, target, -1, -1, angle};
  }
  static GateOp two(GateKind k, int control, int target) {
    return GateOp{k, target, control, -1, 0.0};
  }
};

enum class AnsatzFamily { zoufal, vallecorsa, herr_1 };

inline const char* family_name(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::zoufal: return "zoufal";
    case AnsatzFamily::vallecorsa: return "vallecorsa";
    case AnsatzFamily::herr_1: return "herr_1";
  }
  return "?";
}

inline AnsatzFamily parse_family(const std::string& name) {
  if (name == "zoufal") return AnsatzFamily::zoufal;
  if (name == "vallecorsa") return AnsatzFamily::vallecorsa;
  if (name == "herr_1") return AnsatzFamily::herr_1;
  throw UnknownFamily("unknown ansatz family: " + name);
}

struct AnsatzDescriptor {
  AnsatzFamily family;
  int num_qubits;
  int repetitions;
};

struct CircuitTemplate {
  AnsatzDescriptor descriptor;
  std::vector<GateOp> ops;
  int num_params = 0;
};

// Gate structures for the three families.
//
// zoufal: RY rotation layer, then k repetitions of a CZ entangling ring
// (pairs (q, q+1 mod N) for N >= 3, the single pair (0,1) for N = 2, none
// for N = 1) each followed by another RY layer.  N*(k+1) parameters.
//
// vallecorsa: RY+RZ rotation layer, then k repetitions of a linear CX chain
// followed by another RY+RZ layer.  2N*(k+1) parameters.
//
// herr_1: RY rotation layer, then k repetitions of all-to-all CZ
// entanglement followed by another RY layer.  N*(k+1) parameters.
inline CircuitTemplate build_ansatz(const AnsatzDescriptor& d) {
  StateVector::check_qubits(d.num_qubits);
  if (d.repetitions < 1)
    throw InvalidValue("repetitions must be >= 1, got " +
                       std::to_string(d.repetitions));

  const int n = d.num_qubits;
  CircuitTemplate t;
  t.descriptor = d;
  int slot = 0;

  const auto ry_layer = [&] {
    for (int q = 0; q < n; ++q)
      t.ops.push_back(GateOp::rot(GateKind::RY, q, slot++));
  };
  const auto rz_layer = [&] {
    for (int q = 0; q < n; ++q)
      t.ops.push_back(GateOp::rot(GateKind::RZ, q, slot++));
  };

  switch (d.family) {
    case AnsatzFamily::zoufal:
      ry_layer();
      for (int rep = 0; rep < d.repetitions; ++rep) {
        if (n == 2) {
          t.ops.push_back(GateOp::two(GateKind::CZ, 0, 1));
        } else if (n >= 3) {
          for (int q = 0; q < n; ++q)
            t.ops.push_back(GateOp::two(GateKind::CZ, q, (q + 1) % n));
        }
        ry_layer();
      }
      break;
    case AnsatzFamily::vallecorsa:
      ry_layer();
      rz_layer();
      for (int rep = 0; rep < d.repetitions; ++rep) {
        for (int q = 0; q + 1 < n; ++q)
          t.ops.push_back(GateOp::two(GateKind::CX, q, q + 1));
        ry_layer();
        rz_layer();
      }
      break;
    case AnsatzFamily::herr_1:
      ry_layer();
      for (int rep = 0; rep < d.repetitions; ++rep) {
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            t.ops.push_back(GateOp::two(GateKind::CZ, a, b));
        ry_layer();
      }
      break;
  }
  t.num_params = slot;
  return t;
}

inline void apply_gate(StateVector& s, const GateOp& op, double angle) {
  switch (op.kind) {
    case GateKind::H: gates::h(s, op.target); break;
    case GateKind::X: gates::x(s, op.target); break;
    case GateKind::SX: gates::sx(s, op.target); break;
    case GateKind::RY: gates::ry(s, op.target, angle); break;
    case GateKind::RZ: gates::rz(s, op.target, angle); break;
    case GateKind::CX: gates::cx(s, op.control, op.target); break;
    case GateKind::CZ: gates::cz(s, op.control, op.target); break;
    case GateKind::SWAP: gates::swap_qubits(s, op.control, op.target); break;
  }
}

inline StateVector apply_circuit(const StateVector& state,
                                 const CircuitTemplate& t,
                                 const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != t.num_params)
    throw ParamLengthMismatch(
        "expected " + std::to_string(t.num_params) + " parameters, got " +
        std::to_string(params.size()));
  StateVector out = state;
  for (const GateOp& op : t.ops) {
    const double angle =
        op.param_slot >= 0 ? params[op.param_slot] : op.angle;
    apply_gate(out, op, angle);
  }
  return out;
}

// Exact inverse template: reversed ops with negated angles.  CX/CZ/SWAP/H/X
// are self-inverse; SX is not, so it expands to its cube.
inline CircuitTemplate inverted(const CircuitTemplate& t) {
  CircuitTemplate inv;
  inv.descriptor = t.descriptor;
  inv.num_params = t.num_params;
  for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
    GateOp op = *it;
    if (op.is_rotation()) {
      op.angle = -op.angle;
      inv.ops.push_back(op);
    } else if (op.kind == GateKind::SX) {
      inv.ops.push_back(op);
      inv.ops.push_back(op);
      inv.ops.push_back(op);
    } else {
      inv.ops.push_back(op);
    }
  }
  return inv;
}

// Applies the inverse of (t, params); rotation slots pick up the negated
// parameter values.
inline StateVector apply_inverse_circuit(const StateVector& state,
                                         const CircuitTemplate& t,
                                         const std::vector<double>& params) {
  std::vector<double> neg(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) neg[i] = -params[i];
  return apply_circuit(state, inverted(t), neg);
}

// ------------------------------------------------------------------
// Initial-state strategies
// ------------------------------------------------------------------

enum class InitKind { uniform, normal, random };

inline const char* init_name(InitKind k) {
  switch (k) {
    case InitKind::uniform: return "uniform";
    case InitKind::normal: return "normal";
    case InitKind::random: return "random";
  }
  return "?";
}

inline InitKind parse_init(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(c));
  if (name == "uniform") return InitKind::uniform;
  if (name == "normal") return InitKind::normal;
  if (name == "random") return InitKind::random;
  throw InvalidValue("unknown initialization strategy: " + name);
}

struct InitStrategy {
  InitKind kind = InitKind::uniform;
  bool has_mean = false, has_std = false, has_seed = false;
  double mean = 0.0, std = 0.0;
  std::uint64_t seed = 0;
};

// The concrete initial state actually used by a run: the strategy with all
// data-dependent and random choices resolved, enough to rebuild the state
// exactly (model persistence requires this).
struct InitRealization {
  InitKind kind = InitKind::uniform;
  double mean = 0.0, std = 0.0;          // normal only
  std::vector<double> thetas;            // random only: per-qubit RY angle
};

inline InitRealization resolve_init(const InitStrategy& strategy, int N,
                                    double data_mean, double data_std,
                                    Rng& rng) {
  StateVector::check_qubits(N);
  InitRealization r;
  r.kind = strategy.kind;
  switch (strategy.kind) {
    case InitKind::uniform:
      break;
    case InitKind::normal: {
      r.mean = strategy.has_mean ? strategy.mean : data_mean;
      r.std = strategy.has_std ? strategy.std : data_std;
      if (!(r.std > 0.0))
        throw NonPositiveStd("normal initialization requires std > 0, got " +
                             std::to_string(r.std));
      break;
    }
    case InitKind::random: {
      constexpr double pi = 3.14159265358979323846;
      if (strategy.has_seed) {
        Rng own(strategy.seed);
        for (int q = 0; q < N; ++q) r.thetas.push_back(own.uniform(-pi, pi));
      } else {
        for (int q = 0; q < N; ++q) r.thetas.push_back(rng.uniform(-pi, pi));
      }
      break;
    }
  }
  return r;
}

inline StateVector state_from_realization(const InitRealization& r, int N) {
  switch (r.kind) {
    case InitKind::uniform:
      return StateVector::uniform_state(N);
    case InitKind::normal: {
      // sqrt of a Gaussian PMF discretized over the bin indices 0..2^N-1
      StateVector s;
      s.num_qubits = N;
      const std::size_t dim = std::size_t{1} << N;
      std::vector<double> pmf(dim);
      double total = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double z = (static_cast<double>(i) - r.mean) / r.std;
        pmf[i] = std::exp(-0.5 * z * z);
        total += pmf[i];
      }
      s.amplitudes.resize(dim);
      for (std::size_t i = 0; i < dim; ++i)
        s.amplitudes[i] = std::sqrt(pmf[i] / total);
      return s;
    }
    case InitKind::random: {
      StateVector s = StateVector::zero_state(N);
      for (int q = 0; q < N; ++q) gates::ry(s, q, r.thetas[q]);
      return s;
    }
  }
  throw InvalidValue("unreachable init kind");
}

inline StateVector prepare_initial_state(const InitStrategy& strategy, int N,
                                         double data_mean, double data_std,
                                         Rng& rng) {
  return state_from_realization(
      resolve_init(strategy, N, data_mean, data_std, rng), N);
}

}  // namespace autoqml
