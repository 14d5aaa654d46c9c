#include "autoqml/circuit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "autoqml/rng.hpp"
#include "autoqml/statevector.hpp"

using namespace autoqml;

namespace {

int count_kind(const CircuitTemplate& t, GateKind k) {
  return static_cast<int>(
      std::count_if(t.ops.begin(), t.ops.end(),
                    [k](const GateOp& op) { return op.kind == k; }));
}

// Random template over the full gate set, rotations wired to sequential
// parameter slots. Used by the norm / unitarity properties.
CircuitTemplate random_template(int n, int n_gates, Rng& rng) {
  CircuitTemplate t;
  t.descriptor = {AnsatzFamily::zoufal, n, 1};
  int slot = 0;
  for (int i = 0; i < n_gates; ++i) {
    const int kind = static_cast<int>(rng.uniform_int(8));
    const int target = static_cast<int>(rng.uniform_int(n));
    switch (kind) {
      case 0: t.ops.push_back(GateOp::fixed(GateKind::H, target)); break;
      case 1: t.ops.push_back(GateOp::fixed(GateKind::X, target)); break;
      case 2: t.ops.push_back(GateOp::fixed(GateKind::SX, target)); break;
      case 3: t.ops.push_back(GateOp::rot(GateKind::RY, target, slot++)); break;
      case 4: t.ops.push_back(GateOp::rot(GateKind::RZ, target, slot++)); break;
      default: {
        if (n < 2) {
          t.ops.push_back(GateOp::fixed(GateKind::H, target));
          break;
        }
        int other = static_cast<int>(rng.uniform_int(n));
        while (other == target) other = static_cast<int>(rng.uniform_int(n));
        const GateKind two = kind == 5   ? GateKind::CX
                             : kind == 6 ? GateKind::CZ
                                         : GateKind::SWAP;
        t.ops.push_back(GateOp::two(two, other, target));
        break;
      }
    }
  }
  t.num_params = slot;
  return t;
}

}  // namespace

// ---------- ansatz construction ----------

TEST(BuildAnsatz, ZoufalParameterCounts) {
  EXPECT_EQ(build_ansatz({AnsatzFamily::zoufal, 5, 2}).num_params, 15);
  EXPECT_EQ(build_ansatz({AnsatzFamily::zoufal, 3, 1}).num_params, 6);
  EXPECT_EQ(build_ansatz({AnsatzFamily::zoufal, 1, 1}).num_params, 2);
}

TEST(BuildAnsatz, ZoufalSingleQubitHasNoEntanglers) {
  const auto t = build_ansatz({AnsatzFamily::zoufal, 1, 1});
  ASSERT_EQ(t.ops.size(), 2u);
  EXPECT_EQ(t.ops[0].kind, GateKind::RY);
  EXPECT_EQ(t.ops[1].kind, GateKind::RY);
}

TEST(BuildAnsatz, ZoufalRingOnThreeQubits) {
  // ring (0,1),(1,2),(2,0): 3 CZ per repetition
  EXPECT_EQ(count_kind(build_ansatz({AnsatzFamily::zoufal, 3, 1}),
                       GateKind::CZ),
            3);
  EXPECT_EQ(count_kind(build_ansatz({AnsatzFamily::zoufal, 3, 2}),
                       GateKind::CZ),
            6);
}

TEST(BuildAnsatz, ZoufalTwoQubitsSingleCzPerRepetition) {
  EXPECT_EQ(count_kind(build_ansatz({AnsatzFamily::zoufal, 2, 3}),
                       GateKind::CZ),
            3);
}

TEST(BuildAnsatz, VallecorsaShape) {
  const auto t = build_ansatz({AnsatzFamily::vallecorsa, 4, 2});
  EXPECT_EQ(t.num_params, 2 * 4 * 3);
  EXPECT_EQ(count_kind(t, GateKind::CX), 2 * 3);  // linear chain per rep
  EXPECT_EQ(count_kind(t, GateKind::RY), 12);
  EXPECT_EQ(count_kind(t, GateKind::RZ), 12);
}

TEST(BuildAnsatz, HerrAllToAll) {
  const auto t = build_ansatz({AnsatzFamily::herr_1, 4, 2});
  EXPECT_EQ(t.num_params, 4 * 3);
  EXPECT_EQ(count_kind(t, GateKind::CZ), 2 * 6);  // C(4,2) per repetition
}

TEST(BuildAnsatz, EverySlotAppearsExactlyOnce) {
  for (const auto family : {AnsatzFamily::zoufal, AnsatzFamily::vallecorsa,
                            AnsatzFamily::herr_1}) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= 3; ++k) {
        const auto t = build_ansatz({family, n, k});
        std::vector<int> seen(t.num_params, 0);
        for (const auto& op : t.ops)
          if (op.param_slot >= 0) seen[op.param_slot]++;
        for (int c : seen) EXPECT_EQ(c, 1);
      }
    }
  }
}

TEST(BuildAnsatz, Errors) {
  EXPECT_THROW(build_ansatz({AnsatzFamily::zoufal, 0, 1}),
               QubitCountOutOfRange);
  EXPECT_THROW(build_ansatz({AnsatzFamily::zoufal, 13, 1}),
               QubitCountOutOfRange);
  EXPECT_THROW(build_ansatz({AnsatzFamily::zoufal, 3, 0}), InvalidValue);
  EXPECT_THROW(parse_family("qcnn"), UnknownFamily);
}

// ---------- circuit application ----------

TEST(ApplyCircuit, RyPiOnZero) {
  CircuitTemplate t;
  t.descriptor = {AnsatzFamily::zoufal, 1, 1};
  t.ops.push_back(GateOp::rot(GateKind::RY, 0, 0));
  t.num_params = 1;
  const auto out = apply_circuit(StateVector::zero_state(1), t,
                                 {3.14159265358979323846});
  EXPECT_NEAR(std::abs(out.amplitudes[0]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out.amplitudes[1]), 1.0, 1e-12);
}

TEST(ApplyCircuit, BellTemplate) {
  CircuitTemplate t;
  t.descriptor = {AnsatzFamily::zoufal, 2, 1};
  t.ops.push_back(GateOp::fixed(GateKind::H, 0));
  t.ops.push_back(GateOp::two(GateKind::CX, 0, 1));
  const auto out = apply_circuit(StateVector::zero_state(2), t, {});
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(out.amplitudes[0].real(), r, 1e-12);
  EXPECT_NEAR(out.amplitudes[3].real(), r, 1e-12);
}

TEST(ApplyCircuit, ZoufalZeroParamsFixesZeroState) {
  const auto t = build_ansatz({AnsatzFamily::zoufal, 4, 2});
  const auto out = apply_circuit(StateVector::zero_state(4), t,
                                 std::vector<double>(t.num_params, 0.0));
  EXPECT_NEAR(std::abs(out.amplitudes[0]), 1.0, 1e-12);
}

TEST(ApplyCircuit, ParamLengthMismatch) {
  const auto t = build_ansatz({AnsatzFamily::zoufal, 2, 1});
  EXPECT_THROW(apply_circuit(StateVector::zero_state(2), t, {0.1}),
               ParamLengthMismatch);
}

TEST(ApplyCircuit, NormPreservedOnRandomCircuits) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(8));
    const int gates = 1 + static_cast<int>(rng.uniform_int(60));
    const auto t = random_template(n, gates, rng);
    std::vector<double> params(t.num_params);
    for (auto& p : params) p = rng.uniform(-3.2, 3.2);
    const auto out = apply_circuit(StateVector::zero_state(n), t, params);
    EXPECT_LT(std::abs(out.norm() - 1.0), 1e-10);
  }
}

TEST(ApplyCircuit, InverseReturnsInput) {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(6));
    const auto t = random_template(n, 30, rng);
    std::vector<double> params(t.num_params);
    for (auto& p : params) p = rng.uniform(-3.2, 3.2);

    // arbitrary normalized input state
    StateVector in;
    in.num_qubits = n;
    in.amplitudes.resize(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto& a : in.amplitudes) {
      a = cdouble{rng.normal(), rng.normal()};
      norm2 += std::norm(a);
    }
    for (auto& a : in.amplitudes) a /= std::sqrt(norm2);

    const auto fwd = apply_circuit(in, t, params);
    const auto back = apply_inverse_circuit(fwd, t, params);
    for (std::size_t i = 0; i < in.amplitudes.size(); ++i)
      EXPECT_LT(std::abs(back.amplitudes[i] - in.amplitudes[i]), 1e-9);
  }
}

// ---------- initial states ----------

TEST(InitialState, UniformN2) {
  Rng rng(0);
  const auto s =
      prepare_initial_state({InitKind::uniform, false, false, false, 0, 0, 0},
                            2, 0.0, 1.0, rng);
  for (const auto& a : s.amplitudes) EXPECT_DOUBLE_EQ(a.real(), 0.5);
}

TEST(InitialState, NormalFlatLimit) {
  Rng rng(0);
  InitStrategy strat;
  strat.kind = InitKind::normal;
  strat.has_mean = strat.has_std = true;
  strat.mean = 0.5;
  strat.std = 1e6;
  const auto s = prepare_initial_state(strat, 1, 0.0, 1.0, rng);
  EXPECT_NEAR(s.amplitudes[0].real(), 0.70710678118654752, 1e-6);
  EXPECT_NEAR(s.amplitudes[1].real(), 0.70710678118654752, 1e-6);
}

TEST(InitialState, NormalUsesDataMomentsWhenUnset) {
  Rng rng(0);
  InitStrategy strat;
  strat.kind = InitKind::normal;
  const auto s = prepare_initial_state(strat, 3, 3.5, 1.2, rng);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  // peak at the bin nearest the mean
  const auto p = analytic_probabilities(s);
  const auto peak = std::max_element(p.begin(), p.end()) - p.begin();
  EXPECT_TRUE(peak == 3 || peak == 4);
}

TEST(InitialState, NormalRejectsNonPositiveStd) {
  Rng rng(0);
  InitStrategy strat;
  strat.kind = InitKind::normal;
  EXPECT_THROW(prepare_initial_state(strat, 2, 1.0, 0.0, rng),
               NonPositiveStd);
}

TEST(InitialState, RandomIsRealAndNormalized) {
  Rng rng(42);
  InitStrategy strat;
  strat.kind = InitKind::random;
  const auto s = prepare_initial_state(strat, 3, 0.0, 1.0, rng);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  for (const auto& a : s.amplitudes) EXPECT_DOUBLE_EQ(a.imag(), 0.0);
}

TEST(InitialState, RandomStrategySeedOverridesRunStream) {
  Rng r1(1), r2(2);
  InitStrategy strat;
  strat.kind = InitKind::random;
  strat.has_seed = true;
  strat.seed = 99;
  const auto a = prepare_initial_state(strat, 3, 0.0, 1.0, r1);
  const auto b = prepare_initial_state(strat, 3, 0.0, 1.0, r2);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    EXPECT_EQ(a.amplitudes[i], b.amplitudes[i]);
}

TEST(InitialState, RealizationRoundTrip) {
  Rng rng(5);
  InitStrategy strat;
  strat.kind = InitKind::random;
  const auto real = resolve_init(strat, 4, 0.0, 1.0, rng);
  ASSERT_EQ(real.thetas.size(), 4u);
  const auto s1 = state_from_realization(real, 4);
  const auto s2 = state_from_realization(real, 4);
  for (std::size_t i = 0; i < s1.amplitudes.size(); ++i)
    EXPECT_EQ(s1.amplitudes[i], s2.amplitudes[i]);
}

TEST(InitialState, ParseInitLowercasesNames) {
  EXPECT_EQ(parse_init("Random"), InitKind::random);
  EXPECT_EQ(parse_init("uniform"), InitKind::uniform);
  EXPECT_THROW(parse_init("gaussian"), InvalidValue);
}
