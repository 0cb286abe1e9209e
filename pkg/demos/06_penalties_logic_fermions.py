"""Constrained objectives, ground-state logic, and fermionic operators.

Penalty terms shift infeasible basis states above every feasible one.
Ground-state logic stores a function's whole graph in the zero-eigenvalue
subspace of an (n+1)-qubit operator.  The same Pauli algebra also yields
the parity-string ladder operators used for fermions.
"""

import numpy as np

import boolham as bh
from boolham.oracle import dense_of_pauli

print("== Penalty augmentation ==")
# minimize x1 + x2 subject to 'exactly one of x1, x2'
objective = bh.compile_pseudo(
    bh.PseudoBooleanObjective(2, ((1.0, bh.Var(1)), (1.0, bh.Var(2))))
)
infeasible_marker = bh.parse_expr("!(x1 ^ x2)")
spec = bh.PenaltySpec.with_auto_weights(objective, [infeasible_marker])
augmented = bh.augment_penalties(spec)
print("augmented operator:", augmented.to_text())
for x in ["00", "10", "01", "11"]:
    print(f"  eigenvalue at {x}: {augmented.eval(x):g}")
print("ground states:", bh.spectrum(augmented).ground_states())

print()
print("== Ground-state logic ==")
h_graph = bh.ground_state_logic(bh.parse_expr("x1 & x2"), 2)
sp = bh.spectrum(h_graph)
print("operator:", h_graph.to_text())
print("zero-eigenvalue states (x1 x2 y):", sp.ground_states())
print("all excited levels at 1:", set(np.round(sp.values[len(sp.ground_states()):], 12)) == {1.0})

print()
print("== Spin ladder operators ==")
b = bh.spin_lowering(1, 1)
print("b      =", b.to_text())
print("b+ b   =", (b.adjoint() * b).to_text(), " (occupation operator)")
print("{b,b+} =", bh.anticommutator(b, b.adjoint()).to_text())

print()
print("== Jordan-Wigner transform ==")
n = 3
for j in range(1, n + 1):
    print(f"a{j} =", bh.jordan_wigner(n, j).to_text())

a1 = dense_of_pauli(bh.jordan_wigner(n, 1))
a2d = dense_of_pauli(bh.jordan_wigner(n, 2, "raising"))
print("max |{a1, a2+}| =", np.max(np.abs(a1 @ a2d + a2d @ a1)))
a1d = a1.conj().T
print("max |{a1, a1+} - I| =", np.max(np.abs(a1 @ a1d + a1d @ a1 - np.eye(8))))
