"""Bundled verification corpus and the end-to-end invariant suite.

The corpus covers every basic-clause and three-variable golden case plus
seeded random expressions and QUBO instances, so repeated runs produce
byte-identical reports.  Each check compares an independently constructed
reference against the compiled/emitted object and records a residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import boolexpr, circuits, compiler, fourier, oracle
from .boolexpr import BoolExpr, Var, parse_expr, truth_table
from .compiler import QuboInstance, compile_expr, compile_pseudo, qubo_objective
from .zpoly import DiagonalHamiltonian, basis_label

TOL = 1e-9
GOLDEN_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    def line(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"{self.name:<44} residual {self.residual:.3e}  tol {self.tol:.0e}  {mark}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        out.append(
            f"{len(self.checks)} checks, {len(self.failures)} failures: "
            + ("PASS" if self.passed else "FAIL")
        )
        return out


# -- golden cases -----------------------------------------------------------


def _ham(n: int, terms: dict[int, float]) -> DiagonalHamiltonian:
    return DiagonalHamiltonian(n, terms)


def basic_clause_cases(k: int = 5) -> list[tuple[str, str, DiagonalHamiltonian]]:
    """The ten basic-clause golden Hamiltonians; k sizes the n-ary rows."""
    full = (1 << k) - 1
    and_k = {
        mask: (-1.0) ** mask.bit_count() / (1 << k) for mask in range(1 << k)
    }
    or_k = {mask: -1.0 / (1 << k) for mask in range(1, 1 << k)}
    or_k[0] = 1.0 - 1.0 / (1 << k)
    return [
        ("x", "x1", _ham(1, {0: 0.5, 1: -0.5})),
        ("not x", "!x1", _ham(1, {0: 0.5, 1: 0.5})),
        ("xor2", "x1 ^ x2", _ham(2, {0: 0.5, 3: -0.5})),
        (
            f"xor{k}",
            " ^ ".join(f"x{j}" for j in range(1, k + 1)),
            _ham(k, {0: 0.5, full: -0.5}),
        ),
        ("and2", "x1 & x2", _ham(2, {0: 0.25, 1: -0.25, 2: -0.25, 3: 0.25})),
        (
            f"and{k}",
            " & ".join(f"x{j}" for j in range(1, k + 1)),
            _ham(k, and_k),
        ),
        ("or2", "x1 | x2", _ham(2, {0: 0.75, 1: -0.25, 2: -0.25, 3: -0.25})),
        (
            f"or{k}",
            " | ".join(f"x{j}" for j in range(1, k + 1)),
            _ham(k, or_k),
        ),
        ("nand2", "!(x1 & x2)", _ham(2, {0: 0.75, 1: 0.25, 2: 0.25, 3: -0.25})),
        ("implies", "x1 => x2", _ham(2, {0: 0.75, 1: 0.25, 2: -0.25, 3: 0.25})),
    ]


def three_variable_cases() -> list[tuple[str, str, DiagonalHamiltonian]]:
    """MAJ, NAE, MOD3 and 1in3 golden Hamiltonians on three qubits."""
    eighth = 1.0 / 8.0
    return [
        (
            "maj3",
            "(x1 & x2) | (x1 & x3) | (x2 & x3)",
            _ham(3, {0: 0.5, 1: -0.25, 2: -0.25, 4: -0.25, 7: 0.25}),
        ),
        (
            "nae3",
            "(x1 | x2 | x3) & (!x1 | !x2 | !x3)",
            _ham(3, {0: 0.75, 3: -0.25, 5: -0.25, 6: -0.25}),
        ),
        (
            "mod3",
            "!((x1 | x2 | x3) & (!x1 | !x2 | !x3))",
            _ham(3, {0: 0.25, 3: 0.25, 5: 0.25, 6: 0.25}),
        ),
        (
            "1in3",
            "(x1 & !x2 & !x3) | (!x1 & x2 & !x3) | (!x1 & !x2 & x3)",
            _ham(
                3,
                {
                    0: 3 * eighth,
                    1: eighth,
                    2: eighth,
                    4: eighth,
                    3: -eighth,
                    5: -eighth,
                    6: -eighth,
                    7: -3 * eighth,
                },
            ),
        ),
    ]


# -- random corpus ----------------------------------------------------------


def random_expr(rng: np.random.Generator, n_vars: int, depth: int) -> BoolExpr:
    """Random formula over x1..x{n_vars} with the given maximum depth."""
    if depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.05:
            return boolexpr.Const(int(rng.integers(2)))
        return Var(int(rng.integers(1, n_vars + 1)))
    kind = rng.integers(5)
    if kind == 0:
        return boolexpr.Not(random_expr(rng, n_vars, depth - 1))
    if kind == 4:
        return boolexpr.Implies(
            random_expr(rng, n_vars, depth - 1), random_expr(rng, n_vars, depth - 1)
        )
    arity = int(rng.integers(2, 4))
    children = tuple(random_expr(rng, n_vars, depth - 1) for _ in range(arity))
    node = (boolexpr.And, boolexpr.Or, boolexpr.Xor)[kind - 1]
    return node(children)


def random_cnf(
    rng: np.random.Generator, n_vars: int, n_clauses: int, max_width: int = 3
) -> str:
    """Random DIMACS CNF text."""
    lines = [f"p cnf {n_vars} {n_clauses}"]
    for _ in range(n_clauses):
        width = int(rng.integers(1, min(max_width, n_vars) + 1))
        vars_ = rng.choice(np.arange(1, n_vars + 1), size=width, replace=False)
        lits = [int(v) if rng.random() < 0.5 else -int(v) for v in vars_]
        lines.append(" ".join(map(str, lits)) + " 0")
    return "\n".join(lines) + "\n"


def random_qubo(rng: np.random.Generator, n_vars: int) -> QuboInstance:
    quad = np.zeros((n_vars, n_vars))
    for j in range(n_vars):
        for k in range(j + 1, n_vars):
            if rng.random() < 0.6:
                quad[j, k] = quad[k, j] = rng.uniform(-2.0, 2.0)
    return QuboInstance(
        n_vars,
        float(rng.uniform(-2.0, 2.0)),
        rng.uniform(-2.0, 2.0, size=n_vars),
        quad,
    )


def random_zham(
    rng: np.random.Generator, n_qubits: int, size: int
) -> DiagonalHamiltonian:
    masks = rng.choice(1 << n_qubits, size=min(size, 1 << n_qubits), replace=False)
    return DiagonalHamiltonian(
        n_qubits, {int(m): float(rng.uniform(-2.0, 2.0)) for m in masks}
    )


# -- invariant checks --------------------------------------------------------


def expression_checks(
    name: str,
    e: BoolExpr,
    n: int | None = None,
    dense_cap: int = oracle.DENSE_CAP_DEFAULT,
) -> list[CheckResult]:
    """Full invariant suite for one Boolean formula.

    Dense-matrix checks run only where they fit under ``dense_cap`` (the
    kickback suite needs two extra ancilla qubits, the bit query one).
    """
    n = boolexpr.max_var(e) if n is None else n
    h = compile_expr(e, n)
    table = truth_table(e, n)
    out: list[CheckResult] = []

    values = fourier.table_from_fourier(h).values
    out.append(
        CheckResult(f"{name}: eval matches truth table", float(np.max(np.abs(values - table))), TOL)
    )

    dual = fourier.fourier_from_table(table)
    out.append(CheckResult(f"{name}: transform paths agree", h.max_coeff_diff(dual), TOL))

    coeffs = np.array([c for _, c in h.items()])
    sq_sum = float(np.sum(coeffs**2))
    out.append(
        CheckResult(f"{name}: sum of squares = identity coeff", abs(sq_sum - h.identity_coeff), TOL)
    )
    out.append(
        CheckResult(
            f"{name}: coefficient sum = f(0..0)",
            abs(float(np.sum(coeffs)) - table[0]),
            TOL,
        )
    )
    range_violation = max(
        0.0,
        h.identity_coeff - 1.0,
        -h.identity_coeff,
        max((abs(c) - 0.5 for m, c in h.items() if m != 0), default=0.0),
    )
    out.append(CheckResult(f"{name}: coefficient ranges", range_violation, TOL))
    out.append(CheckResult(f"{name}: projector h*h = h", fourier.projector_defect(h), TOL))

    brute_count = int(np.sum(table))
    counted = fourier.count_models(h)
    out.append(CheckResult(f"{name}: model count", float(abs(counted - brute_count)), 0.0))

    d = h.degree
    if d >= 1:
        bound = (math.e / d) ** (d - 1) * n**d + 1
        out.append(
            CheckResult(f"{name}: size bound", max(0.0, float(h.size) - bound), 0.0)
        )

    if n <= min(8, dense_cap):
        diag = oracle.zham_diagonal(h, cap=dense_cap)
        worst = 0.0
        count_defect = 0.0
        for gamma in (0.3, 1.0, math.pi):
            circ = circuits.emit_evolution(h, gamma)
            u = oracle.simulate_circuit(circ)
            target = np.diag(np.exp(-1j * gamma * diag))
            worst = max(worst, oracle.phase_aligned_maxdiff(target, u))
            expected_cnots = sum(2 * (m.bit_count() - 1) for m, _ in h.items() if m)
            count_defect = max(count_defect, float(abs(circ.cnot_count - expected_cnots)))
        out.append(CheckResult(f"{name}: evolution circuit vs exponential", worst, TOL))
        out.append(CheckResult(f"{name}: evolution CNOT count", count_defect, 0.0))

        grover = np.diag(np.exp(-1j * math.pi * diag))
        signs = np.diag(1.0 - 2.0 * table)
        out.append(
            CheckResult(f"{name}: Grover phase query", oracle.maxdiff(grover, signs.astype(complex)), TOL)
        )

    if n <= min(6, dense_cap - 1):
        g = oracle.simulate_circuit(circuits.emit_bit_query(e, n), cap=dense_cap)
        g_ref = oracle.bit_query_matrix(e, n, cap=dense_cap)
        out.append(CheckResult(f"{name}: bit query action", oracle.maxdiff(g, g_ref), TOL))
        out.append(
            CheckResult(
                f"{name}: bit query involution",
                oracle.maxdiff(g @ g, np.eye(g.shape[0])),
                TOL,
            )
        )
        trace_target = 1.0 - h.identity_coeff
        out.append(
            CheckResult(
                f"{name}: bit query trace identity",
                abs(np.trace(g).real / (1 << (n + 1)) - trace_target)
                + abs(np.trace(g).imag / (1 << (n + 1))),
                TOL,
            )
        )

    if n <= min(5, dense_cap - 2):
        report = oracle.verify_kickback_suite(e, n, cap=dense_cap)
        out.append(
            CheckResult(
                f"{name}: kickback suite", max(report.residuals.values()), TOL
            )
        )
        hg = compiler.ground_state_logic(e, n)
        spec_g = oracle.spectrum(hg)
        expected_ground = sorted(
            basis_label(x, n) + ("1" if table[x] else "0") for x in range(1 << n)
        )
        ground = sorted(spec_g.ground_states(tol=1e-9))
        residual = 0.0 if ground == expected_ground else 1.0
        others = spec_g.values[len(ground):]
        if others.size:
            residual = max(residual, float(np.max(np.abs(others - 1.0))))
        out.append(CheckResult(f"{name}: ground-state logic spectrum", residual, TOL))

    return out


def qubo_checks(
    name: str, q: QuboInstance, dense_cap: int = oracle.DENSE_CAP_DEFAULT
) -> list[CheckResult]:
    out: list[CheckResult] = []
    closed = compiler.compile_qubo(q)
    via_clauses = compile_pseudo(qubo_objective(q), q.n_vars)
    out.append(
        CheckResult(f"{name}: closed form vs composition", closed.max_coeff_diff(via_clauses), TOL)
    )

    values = fourier.table_from_fourier(closed).values
    direct = np.array([q.value(x) for x in range(1 << q.n_vars)])
    out.append(CheckResult(f"{name}: eval matches polynomial", float(np.max(np.abs(values - direct))), TOL))

    profile = circuits.evolution_term_profile(closed)
    max_deg = max(profile, default=0)
    count_ok = (
        max_deg <= 2
        and profile.get(1, 0) <= q.n_vars
        and profile.get(2, 0) <= q.n_vars * (q.n_vars - 1) // 2
    )
    out.append(CheckResult(f"{name}: rotation counts within bounds", 0.0 if count_ok else 1.0, 0.0))

    if q.n_vars <= min(8, dense_cap):
        t = 0.7
        u = oracle.simulate_circuit(circuits.emit_qubo_evolution(q, t), cap=dense_cap)
        target = np.diag(np.exp(-1j * t * oracle.zham_diagonal(closed, cap=dense_cap)))
        out.append(
            CheckResult(f"{name}: evolution circuit vs exponential", oracle.phase_aligned_maxdiff(target, u), TOL)
        )
    return out


def bundled_corpus(
    n_random_exprs: int = 50, n_random_qubos: int = 20, seed: int = 20180419
) -> tuple[list[tuple[str, BoolExpr, int]], list[tuple[str, QuboInstance]]]:
    """Deterministic corpus: golden tables plus seeded random instances."""
    rng = np.random.default_rng(seed)
    exprs: list[tuple[str, BoolExpr, int]] = []
    for name, text, _ in basic_clause_cases() + three_variable_cases():
        e = parse_expr(text)
        exprs.append((name, e, boolexpr.max_var(e)))
    for i in range(n_random_exprs):
        n = int(rng.integers(2, 7))
        exprs.append((f"rand{i:02d}", random_expr(rng, n, depth=4), n))
    qubos = [(f"qubo{i:02d}", random_qubo(rng, int(rng.integers(2, 7)))) for i in range(n_random_qubos)]
    return exprs, qubos


def run_corpus_verification(
    dense_cap: int = oracle.DENSE_CAP_DEFAULT,
) -> VerificationReport:
    """The full bundled suite behind the `verify` CLI subcommand."""
    checks: list[CheckResult] = []
    for name, text, expected in basic_clause_cases() + three_variable_cases():
        h = compile_expr(parse_expr(text))
        checks.append(
            CheckResult(f"golden {name}", h.max_coeff_diff(expected), GOLDEN_TOL)
        )
    exprs, qubos = bundled_corpus()
    for name, e, n in exprs:
        checks.extend(expression_checks(name, e, n, dense_cap=dense_cap))
    for name, q in qubos:
        checks.extend(qubo_checks(name, q, dense_cap=dense_cap))
    return VerificationReport(tuple(checks))
