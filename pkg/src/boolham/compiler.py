"""Compile formulas and pseudo-Boolean objectives into Z-polynomials.

Compilation works directly on sparse Z-polynomials via the composition
rules

    H_!f     = I - H_f
    H_(f&g)  = H_f H_g
    H_(f|g)  = H_f + H_g - H_f H_g
    H_(f^g)  = H_f + H_g - 2 H_f H_g
    H_(f=>g) = I - H_f + H_f H_g

with base cases H_0 = 0, H_1 = I and H_xj = (I - Z_j)/2, applied pairwise
and recursively for n-ary nodes.  Truth tables are never built, so the
cost scales with intermediate sparsity rather than 2^n; a configurable
guard aborts when an intermediate operator grows past ``size_cap`` terms
(general formulas can be exponentially dense).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .boolexpr import (
    And,
    BoolExpr,
    Const,
    Implies,
    Not,
    Or,
    PseudoBooleanObjective,
    Var,
    Xor,
    eval_expr,
    max_var,
    parse_expr,
)
from .errors import CapExceeded, ParseError, QubitCountError
from .zpoly import DiagonalHamiltonian, basis_index, bit_projector

DEFAULT_SIZE_CAP = 10**6


def _guard(h: DiagonalHamiltonian, size_cap: int) -> DiagonalHamiltonian:
    if h.size > size_cap:
        raise CapExceeded(
            f"intermediate operator has {h.size} terms, exceeding cap {size_cap}"
        )
    return h


def compile_expr(
    e: BoolExpr, n: int | None = None, *, size_cap: int = DEFAULT_SIZE_CAP
) -> DiagonalHamiltonian:
    """Hamiltonian representing a Boolean formula: eval(x) = f(x) for all x."""
    used = max_var(e)
    if n is None:
        n = used
    elif used > n:
        raise QubitCountError(f"formula uses x{used} but register has {n} qubits")
    identity = DiagonalHamiltonian.identity(n)

    def rec(node) -> DiagonalHamiltonian:
        if isinstance(node, Const):
            return identity if node.value else DiagonalHamiltonian.zero(n)
        if isinstance(node, Var):
            return bit_projector(n, node.index)
        if isinstance(node, Not):
            return identity - rec(node.child)
        if isinstance(node, And):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                acc = _guard(acc * rec(c), size_cap)
            return acc
        if isinstance(node, Or):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                hc = rec(c)
                acc = _guard(acc + hc - acc * hc, size_cap)
            return acc
        if isinstance(node, Xor):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                hc = rec(c)
                acc = _guard(acc + hc - 2.0 * (acc * hc), size_cap)
            return acc
        if isinstance(node, Implies):
            hf = rec(node.lhs)
            hg = rec(node.rhs)
            return _guard(identity - hf + hf * hg, size_cap)
        raise TypeError(f"not a BoolExpr node: {node!r}")

    return rec(e)


def compile_pseudo(
    obj: PseudoBooleanObjective,
    n: int | None = None,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> DiagonalHamiltonian:
    """Weighted sum of clause Hamiltonians: eval(x) = sum_j w_j f_j(x)."""
    if n is None:
        n = obj.n_vars
    elif n < obj.n_vars:
        raise QubitCountError(f"objective declares {obj.n_vars} variables > n={n}")
    total = DiagonalHamiltonian.zero(n)
    for weight, expr in obj.clauses:
        total = _guard(total + weight * compile_expr(expr, n, size_cap=size_cap), size_cap)
    return total


# -- QUBO ----------------------------------------------------------------


@dataclass(frozen=True)
class QuboInstance:
    """f(x) = a + sum_j c_j x_j + sum_{j<k} d_jk x_j x_k over binary x."""

    n_vars: int
    constant: float = 0.0
    linear: np.ndarray = field(default=None)  # shape (n,)
    quadratic: np.ndarray = field(default=None)  # shape (n, n), symmetric, zero diag

    def __post_init__(self):
        n = self.n_vars
        lin = np.zeros(n) if self.linear is None else np.asarray(self.linear, float)
        quad = (
            np.zeros((n, n))
            if self.quadratic is None
            else np.asarray(self.quadratic, float)
        )
        if lin.shape != (n,):
            raise ValueError(f"linear coefficients must have shape ({n},)")
        if quad.shape != (n, n):
            raise ValueError(f"quadratic matrix must have shape ({n}, {n})")
        if not np.array_equal(quad, quad.T):
            raise ValueError("quadratic matrix must be symmetric")
        if np.any(np.diag(quad) != 0.0):
            raise ValueError("quadratic matrix must have zero diagonal")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "quadratic", quad)

    def value(self, x) -> float:
        idx = basis_index(x, self.n_vars)
        bits = np.array([(idx >> j) & 1 for j in range(self.n_vars)], dtype=float)
        return float(
            self.constant + self.linear @ bits + 0.5 * bits @ self.quadratic @ bits
        )

    def to_json_dict(self) -> dict:
        entries = [
            [j + 1, k + 1, float(self.quadratic[j, k])]
            for j in range(self.n_vars)
            for k in range(j + 1, self.n_vars)
            if self.quadratic[j, k] != 0.0
        ]
        return {
            "n": self.n_vars,
            "a": self.constant,
            "linear": [float(c) for c in self.linear],
            "quadratic": entries,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "QuboInstance":
        try:
            n = int(doc["n"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"QUBO JSON needs an integer 'n': {exc}") from exc
        a = float(doc.get("a", 0.0))
        lin = np.zeros(n)
        for j, c in enumerate(doc.get("linear", [])):
            lin[j] = float(c)
        quad = np.zeros((n, n))
        for entry in doc.get("quadratic", []):
            j, k, d = int(entry[0]), int(entry[1]), float(entry[2])
            if not (1 <= j <= n and 1 <= k <= n) or j == k:
                raise ParseError(f"bad quadratic entry {entry!r} for n={n}")
            quad[j - 1, k - 1] += d
            quad[k - 1, j - 1] += d
        return cls(n, a, lin, quad)

    @classmethod
    def from_json(cls, text: str) -> "QuboInstance":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


def compile_qubo(q: QuboInstance) -> DiagonalHamiltonian:
    """Closed-form quadratic Z-polynomial for a QUBO instance.

    H = (a + c + d) I - 1/2 sum_j (c_j + d_j) Z_j + 1/4 sum_{j<k} d_jk Z_j Z_k
    with c = 1/2 sum_j c_j, d = 1/4 sum_{j<k} d_jk, d_j = 1/2 sum_{k != j} d_jk.
    """
    n = q.n_vars
    c_bar = 0.5 * float(np.sum(q.linear))
    d_bar = 0.25 * float(np.sum(np.triu(q.quadratic, k=1)))
    d_row = 0.5 * q.quadratic.sum(axis=1)
    terms: dict[int, float] = {0: q.constant + c_bar + d_bar}
    for j in range(n):
        terms[1 << j] = terms.get(1 << j, 0.0) - 0.5 * (q.linear[j] + d_row[j])
    for j in range(n):
        for k in range(j + 1, n):
            if q.quadratic[j, k] != 0.0:
                terms[(1 << j) | (1 << k)] = 0.25 * q.quadratic[j, k]
    return DiagonalHamiltonian(n, terms)


def qubo_objective(q: QuboInstance) -> PseudoBooleanObjective:
    """The same polynomial written as weighted Boolean clauses (x_j, x_j & x_k)."""
    clauses: list[tuple[float, BoolExpr]] = []
    if q.constant != 0.0:
        clauses.append((q.constant, Const(1)))
    for j in range(q.n_vars):
        if q.linear[j] != 0.0:
            clauses.append((float(q.linear[j]), Var(j + 1)))
    for j in range(q.n_vars):
        for k in range(j + 1, q.n_vars):
            if q.quadratic[j, k] != 0.0:
                clauses.append(
                    (float(q.quadratic[j, k]), And((Var(j + 1), Var(k + 1))))
                )
    return PseudoBooleanObjective(q.n_vars, tuple(clauses))


# -- penalty augmentation -------------------------------------------------


def auto_penalty_weight(objective: DiagonalHamiltonian) -> float:
    """Weight guaranteed to lift every infeasible state above every feasible one.

    Uses the coefficient 1-norm as a cheap upper bound on max_x |f(x)|.
    """
    return 2.0 * objective.coeff_one_norm() + 1.0


@dataclass(frozen=True)
class PenaltySpec:
    """Objective plus positively weighted infeasibility markers g_j.

    g_j(x) = 1 flags x as infeasible; x is feasible iff all g_j(x) = 0.
    """

    objective: DiagonalHamiltonian
    penalties: tuple[tuple[float, BoolExpr], ...]

    def __post_init__(self):
        n = self.objective.n_qubits
        for w, g in self.penalties:
            if w <= 0:
                raise ValueError(f"penalty weights must be positive, got {w}")
            if max_var(g) > n:
                raise QubitCountError(
                    f"constraint uses x{max_var(g)} but objective has {n} qubits"
                )

    @classmethod
    def with_auto_weights(
        cls, objective: DiagonalHamiltonian, constraints: Iterable[BoolExpr]
    ) -> "PenaltySpec":
        w = auto_penalty_weight(objective)
        return cls(objective, tuple((w, g) for g in constraints))

    def is_feasible(self, x) -> bool:
        return all(eval_expr(g, x) == 0 for _, g in self.penalties)


def augment_penalties(
    spec: PenaltySpec, *, size_cap: int = DEFAULT_SIZE_CAP
) -> DiagonalHamiltonian:
    """H_p = H_f + sum_j w_j H_gj."""
    n = spec.objective.n_qubits
    total = spec.objective
    for w, g in spec.penalties:
        total = _guard(total + w * compile_expr(g, n, size_cap=size_cap), size_cap)
    return total


def penalty_spec_from_json(text: str) -> PenaltySpec:
    """Penalty spec JSON: objective as an expression string or Hamiltonian
    document, penalties as {"weight": w | null, "expr": "..."} entries
    (null weight means choose automatically)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        n = int(doc["n"])
        raw_objective = doc["objective"]
        raw_penalties = doc["penalties"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"penalty spec JSON missing field: {exc}") from exc
    if isinstance(raw_objective, str):
        objective = compile_expr(parse_expr(raw_objective, n), n)
    else:
        objective = DiagonalHamiltonian.from_json_dict(raw_objective)
        if objective.n_qubits != n:
            raise ParseError("objective qubit count disagrees with 'n'")
    auto_w = auto_penalty_weight(objective)
    penalties = []
    for entry in raw_penalties:
        g = parse_expr(entry["expr"], n)
        w = entry.get("weight")
        penalties.append((auto_w if w is None else float(w), g))
    return PenaltySpec(objective, tuple(penalties))


# -- ground-state logic ----------------------------------------------------


def ground_state_logic(
    f: BoolExpr, n: int | None = None, *, size_cap: int = DEFAULT_SIZE_CAP
) -> DiagonalHamiltonian:
    """Encode input-output pairs of f in the zero-eigenvalue subspace.

    Returns the (n+1)-qubit operator H = I (x) x_a + H_f (x) Z_a with the
    ancilla a = qubit n+1.  A basis state |x>|y> has eigenvalue 0 iff
    y = f(x) and eigenvalue 1 otherwise, so the ground space is exactly
    span{|x>|f(x)>}.
    """
    used = max_var(f)
    if n is None:
        n = used
    elif used > n:
        raise QubitCountError(f"formula uses x{used} but register has {n} qubits")
    hf = compile_expr(f, n, size_cap=size_cap)
    ancilla = n + 1
    terms = {0: 0.5, 1 << (ancilla - 1): -0.5}  # I (x) x_a
    for mask, coeff in hf.items():  # H_f (x) Z_a
        amask = mask | (1 << (ancilla - 1))
        terms[amask] = terms.get(amask, 0.0) + coeff
    return DiagonalHamiltonian(ancilla, terms)
