#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "autoqml/circuit.hpp"

namespace autoqml {

// Depth after transpiling to the basis {RZ, SX, CX} on a linear-chain
// coupling map.  Fixed decompositions:
//   RY   -> RZ SX RZ SX RZ
//   H    -> RZ SX RZ
//   X    -> SX SX
//   CZ   -> H(target) CX H(target)
//   SWAP -> CX CX CX
// Non-adjacent two-qubit gates are routed greedily: the first operand's
// physical position moves one step toward the second per inserted SWAP
// (3 CX each); the layout permutation persists for later gates.  Depth is
// ASAP layering where gates on disjoint physical qubits share a layer.
inline int transpile_depth(const CircuitTemplate& t) {
  const int n = t.descriptor.num_qubits;
  std::vector<int> layout(n);                // layout[logical] = physical
  std::iota(layout.begin(), layout.end(), 0);

  struct PhysGate {
    int a;
    int b;  // -1 for single-qubit
  };
  std::vector<PhysGate> phys;

  const auto emit1 = [&](int p) { phys.push_back({p, -1}); };
  const auto emit_cx = [&](int pa, int pb) { phys.push_back({pa, pb}); };
  const auto emit_h = [&](int p) { emit1(p); emit1(p); emit1(p); };
  const auto emit_ry = [&](int p) {
    emit1(p); emit1(p); emit1(p); emit1(p); emit1(p);
  };

  const auto route = [&](int a, int b) {
    while (std::abs(layout[a] - layout[b]) > 1) {
      const int pa = layout[a];
      const int step = layout[b] > pa ? 1 : -1;
      const auto other = std::find(layout.begin(), layout.end(), pa + step);
      for (int i = 0; i < 3; ++i) emit_cx(pa, pa + step);
      layout[a] = pa + step;
      *other = pa;
    }
  };

  for (const GateOp& op : t.ops) {
    switch (op.kind) {
      case GateKind::RY: emit_ry(layout[op.target]); break;
      case GateKind::RZ: emit1(layout[op.target]); break;
      case GateKind::SX: emit1(layout[op.target]); break;
      case GateKind::H: emit_h(layout[op.target]); break;
      case GateKind::X:
        emit1(layout[op.target]);
        emit1(layout[op.target]);
        break;
      case GateKind::CX:
        route(op.control, op.target);
        emit_cx(layout[op.control], layout[op.target]);
        break;
      case GateKind::CZ:
        route(op.control, op.target);
        emit_h(layout[op.target]);
        emit_cx(layout[op.control], layout[op.target]);
        emit_h(layout[op.target]);
        break;
      case GateKind::SWAP:
        route(op.control, op.target);
        for (int i = 0; i < 3; ++i)
          emit_cx(layout[op.control], layout[op.target]);
        break;
    }
  }

  std::vector<int> depth(n, 0);
  int result = 0;
  for (const PhysGate& g : phys) {
    const int layer =
        1 + (g.b < 0 ? depth[g.a] : std::max(depth[g.a], depth[g.b]));
    depth[g.a] = layer;
    if (g.b >= 0) depth[g.b] = layer;
    result = std::max(result, layer);
  }
  return result;
}

}  // namespace autoqml
