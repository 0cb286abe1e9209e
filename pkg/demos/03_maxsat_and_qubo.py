"""Optimization objectives: weighted clause sums and QUBO polynomials.

A CNF instance has two Hamiltonian views: the conjunction (eigenvalue 1
exactly on satisfying assignments) and the MAX-SAT objective (eigenvalue
counts satisfied clauses).  QUBO polynomials compile through a quadratic
closed form that must agree with the generic clause-by-clause path.
"""

import numpy as np

import boolham as bh

DIMACS = """\
p cnf 3 4
1 -2 0
2 3 0
-1 3 0
-3 0
"""

objective, conjunction = bh.parse_dimacs(DIMACS)
print("== MAX-SAT view ==")
h_obj = bh.compile_pseudo(objective)
print("objective:", h_obj.to_text())
spec = bh.spectrum(h_obj)
print("best satisfied-clause count:", spec.max_value, "at", spec.top_states())
print("worst:", spec.min_value)

print()
print("== SAT view ==")
h_sat = bh.compile_expr(conjunction, objective.n_vars)
print("models of the conjunction:", bh.count_models(h_sat))
print("(0 models and optimum 3 < 4 clauses say the same thing: unsatisfiable)")

print()
print("== Ground-state search via the negated objective ==")
neg = bh.spectrum(-h_obj)
print("ground energy:", neg.min_value, "(= minus the optimum)")

print()
print("== QUBO closed form ==")
q = bh.QuboInstance(
    3,
    constant=0.5,
    linear=np.array([1.0, -2.0, 0.0]),
    quadratic=np.array(
        [
            [0.0, 1.5, 0.0],
            [1.5, 0.0, -1.0],
            [0.0, -1.0, 0.0],
        ]
    ),
)
closed = bh.compile_qubo(q)
print("closed form :", closed.to_text())
via_clauses = bh.compile_pseudo(bh.qubo_objective(q), q.n_vars)
print("clause path :", via_clauses.to_text())
print("value at x=110:", closed.eval("110"), "direct:", q.value("110"))
print("ground states:", bh.spectrum(closed).ground_states())
