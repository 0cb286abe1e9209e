"""Boolean formula ASTs, the infix expression parser, and DIMACS/WCNF input.

Grammar for the infix parser::

    expr    := or ('=>' expr)?          right-associative
    or      := xor ('|' xor)*
    xor     := and ('^' and)*
    and     := unary ('&' unary)*
    unary   := '!' unary | atom
    atom    := 'x'<digits> | '0' | '1' | '(' expr ')'

Precedence from tightest to loosest: ! & ^ | =>.  N-ary And/Or/Xor nodes
are flattened, so "x1 & x2 & x3" is a single And with three children.

Assignments follow the package-wide convention: an integer assignment has
x_1 as its least significant bit; sequences list (x_1, x_2, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import CapExceeded, ParseError, QubitCountError

TABLE_CAP = 24

Assignment = Union[int, Sequence[int]]


class BoolExpr:
    """Base class for formula nodes. Nodes are immutable and hashable."""

    __slots__ = ()

    def __and__(self, other: "BoolExpr") -> "BoolExpr":
        return And((self, other))

    def __or__(self, other: "BoolExpr") -> "BoolExpr":
        return Or((self, other))

    def __xor__(self, other: "BoolExpr") -> "BoolExpr":
        return Xor((self, other))

    def __invert__(self) -> "BoolExpr":
        return Not(self)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Const(BoolExpr):
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {self.value}")


@dataclass(frozen=True, slots=True)
class Var(BoolExpr):
    index: int  # 1-based

    def __post_init__(self):
        if self.index < 1:
            raise QubitCountError(f"variable index {self.index} must be >= 1")


@dataclass(frozen=True, slots=True)
class Not(BoolExpr):
    child: BoolExpr


def _flatten(op_type, children) -> tuple:
    flat = []
    for c in children:
        if isinstance(c, op_type):
            flat.extend(c.children)
        else:
            flat.append(c)
    return tuple(flat)


@dataclass(frozen=True, slots=True)
class And(BoolExpr):
    children: tuple[BoolExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", _flatten(And, self.children))
        if len(self.children) < 2:
            raise ValueError("And needs at least two children")


@dataclass(frozen=True, slots=True)
class Or(BoolExpr):
    children: tuple[BoolExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", _flatten(Or, self.children))
        if len(self.children) < 2:
            raise ValueError("Or needs at least two children")


@dataclass(frozen=True, slots=True)
class Xor(BoolExpr):
    children: tuple[BoolExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", _flatten(Xor, self.children))
        if len(self.children) < 2:
            raise ValueError("Xor needs at least two children")


@dataclass(frozen=True, slots=True)
class Implies(BoolExpr):
    lhs: BoolExpr
    rhs: BoolExpr


def max_var(e: BoolExpr) -> int:
    """Largest variable index appearing in the formula (0 if none)."""
    if isinstance(e, Var):
        return e.index
    if isinstance(e, Not):
        return max_var(e.child)
    if isinstance(e, (And, Or, Xor)):
        return max(max_var(c) for c in e.children)
    if isinstance(e, Implies):
        return max(max_var(e.lhs), max_var(e.rhs))
    return 0


def _as_mask(x: Assignment) -> int:
    if isinstance(x, int):
        return x
    mask = 0
    for i, b in enumerate(x):
        if b not in (0, 1):
            raise ValueError(f"assignment entries must be 0/1, got {b!r}")
        mask |= b << i
    return mask


def eval_expr(e: BoolExpr, x: Assignment) -> int:
    """Evaluate on an assignment; returns 0 or 1."""
    mask = _as_mask(x)

    def rec(node) -> int:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Var):
            return (mask >> (node.index - 1)) & 1
        if isinstance(node, Not):
            return 1 - rec(node.child)
        if isinstance(node, And):
            for c in node.children:
                if not rec(c):
                    return 0
            return 1
        if isinstance(node, Or):
            for c in node.children:
                if rec(c):
                    return 1
            return 0
        if isinstance(node, Xor):
            acc = 0
            for c in node.children:
                acc ^= rec(c)
            return acc
        if isinstance(node, Implies):
            return 1 if (not rec(node.lhs)) or rec(node.rhs) else 0
        raise TypeError(f"not a BoolExpr node: {node!r}")

    return rec(e)


def truth_table(e: BoolExpr, n: int) -> np.ndarray:
    """All 2^n values as a float vector indexed by assignment (x_1 = LSB)."""
    if n > TABLE_CAP:
        raise CapExceeded(f"truth table for n={n} exceeds cap {TABLE_CAP}")
    if max_var(e) > n:
        raise QubitCountError(
            f"formula uses x{max_var(e)} but table has only {n} variables"
        )
    idx = np.arange(1 << n, dtype=np.uint32)

    def rec(node) -> np.ndarray:
        if isinstance(node, Const):
            return np.full(idx.shape, node.value, dtype=np.uint8)
        if isinstance(node, Var):
            return ((idx >> np.uint32(node.index - 1)) & 1).astype(np.uint8)
        if isinstance(node, Not):
            return 1 - rec(node.child)
        if isinstance(node, And):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                acc = acc & rec(c)
            return acc
        if isinstance(node, Or):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                acc = acc | rec(c)
            return acc
        if isinstance(node, Xor):
            acc = rec(node.children[0])
            for c in node.children[1:]:
                acc = acc ^ rec(c)
            return acc
        if isinstance(node, Implies):
            return (1 - rec(node.lhs)) | rec(node.rhs)
        raise TypeError(f"not a BoolExpr node: {node!r}")

    return rec(e).astype(np.float64)


# -- printing ----------------------------------------------------------

_PREC = {Implies: 1, Or: 2, Xor: 3, And: 4, Not: 5, Var: 6, Const: 6}


def to_text(e: BoolExpr) -> str:
    """Parser-compatible text; parse_expr(to_text(e)) is structurally equal to e."""

    def wrap(child, parent_prec, allow_equal=False) -> str:
        text = to_text(child)
        prec = _PREC[type(child)]
        if prec < parent_prec or (prec == parent_prec and not allow_equal):
            return f"({text})"
        return text

    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Not):
        return "!" + wrap(e.child, _PREC[Not], allow_equal=True)
    if isinstance(e, (And, Or, Xor)):
        op = {And: " & ", Or: " | ", Xor: " ^ "}[type(e)]
        return op.join(wrap(c, _PREC[type(e)]) for c in e.children)
    if isinstance(e, Implies):
        # right-associative: parenthesize a nested lhs, not the rhs
        return f"{wrap(e.lhs, _PREC[Implies])} => {wrap(e.rhs, _PREC[Implies], allow_equal=True)}"
    raise TypeError(f"not a BoolExpr node: {e!r}")


# -- infix parser ------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(x\d+|=>|[!&|^()01])")


class _Parser:
    def __init__(self, text: str, n_vars: int | None):
        self.text = text
        self.n_vars = n_vars
        self.pos = 0
        self.tokens: list[tuple[str, int]] = []
        scan = 0
        while scan < len(text):
            m = _TOKEN_RE.match(text, scan)
            if m is None:
                if text[scan:].strip() == "":
                    break
                bad = len(text) - len(text[scan:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad)
            self.tokens.append((m.group(1), m.start(1)))
            scan = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, token: str) -> None:
        got = self.peek()
        if got != token:
            where = self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)
            raise ParseError(f"expected {token!r}, got {got!r}", where)
        self.take()

    def parse(self) -> BoolExpr:
        e = self.implies()
        if self.i < len(self.tokens):
            tok, where = self.tokens[self.i]
            raise ParseError(f"unexpected trailing token {tok!r}", where)
        return e

    def implies(self) -> BoolExpr:
        lhs = self.chain(Or, "|", lambda: self.chain(Xor, "^", lambda: self.chain(And, "&", self.unary)))
        if self.peek() == "=>":
            self.take()
            return Implies(lhs, self.implies())
        return lhs

    def chain(self, node_type, op: str, sub) -> BoolExpr:
        parts = [sub()]
        while self.peek() == op:
            self.take()
            parts.append(sub())
        return parts[0] if len(parts) == 1 else node_type(tuple(parts))

    def unary(self) -> BoolExpr:
        if self.peek() == "!":
            self.take()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> BoolExpr:
        if self.peek() is None:
            raise ParseError("unexpected end of input", len(self.text))
        tok, where = self.take()
        if tok == "(":
            e = self.implies()
            self.expect(")")
            return e
        if tok in ("0", "1"):
            return Const(int(tok))
        if tok.startswith("x"):
            j = int(tok[1:])
            if j < 1:
                raise ParseError(f"variable index must be >= 1: {tok}", where)
            if self.n_vars is not None and j > self.n_vars:
                raise ParseError(
                    f"variable {tok} exceeds declared count {self.n_vars}", where
                )
            return Var(j)
        raise ParseError(f"unexpected token {tok!r}", where)


def parse_expr(text: str, n_vars: int | None = None) -> BoolExpr:
    """Parse an infix formula; n_vars, when given, bounds variable indices."""
    return _Parser(text, n_vars).parse()


# -- pseudo-Boolean objectives and DIMACS ------------------------------


@dataclass(frozen=True, slots=True)
class PseudoBooleanObjective:
    """Weighted sum of Boolean clauses: value(x) = sum_j w_j * f_j(x)."""

    n_vars: int
    clauses: tuple[tuple[float, BoolExpr], ...] = field(default=())

    def __post_init__(self):
        for _, expr in self.clauses:
            if max_var(expr) > self.n_vars:
                raise QubitCountError(
                    f"clause uses x{max_var(expr)} > declared {self.n_vars} variables"
                )

    def value(self, x: Assignment) -> float:
        return sum(w * eval_expr(e, x) for w, e in self.clauses)


def _clause_expr(lits: Sequence[int]) -> BoolExpr:
    if not lits:
        return Const(0)  # empty clause is unsatisfiable
    parts = tuple(Var(l) if l > 0 else Not(Var(-l)) for l in lits)
    return parts[0] if len(parts) == 1 else Or(parts)


def conjunction(clauses: Sequence[BoolExpr]) -> BoolExpr:
    """And of all clause expressions (Const(1) for an empty list)."""
    if not clauses:
        return Const(1)
    if len(clauses) == 1:
        return clauses[0]
    return And(tuple(clauses))


def parse_dimacs(text: str) -> tuple[PseudoBooleanObjective, BoolExpr]:
    """Parse DIMACS CNF (or WCNF with per-clause leading weights).

    Returns both views of the formula: the MAX-SAT objective (one weighted
    OR-clause per input clause, unit weights for plain CNF) and the single
    conjunction expression (the SAT view).
    """
    n_vars = None
    n_clauses_declared = None
    weighted = False
    weights: list[float] = []
    clause_lits: list[list[int]] = []
    current: list[int] = []
    current_weight: float | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            fields = line.split()
            if len(fields) != 4 or fields[1] not in ("cnf", "wcnf"):
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n_vars = int(fields[2])
                n_clauses_declared = int(fields[3])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: malformed header {line!r}") from exc
            if n_vars < 0 or n_clauses_declared < 0:
                raise ParseError(f"line {lineno}: negative counts in header")
            weighted = fields[1] == "wcnf"
            continue
        if n_vars is None:
            raise ParseError(f"line {lineno}: clause before 'p cnf' header")
        fields = line.split()
        start = 0
        if weighted and current_weight is None and not current:
            try:
                current_weight = float(fields[0])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad clause weight {fields[0]!r}") from exc
            start = 1
        for tok in fields[start:]:
            try:
                lit = int(tok)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad literal {tok!r}") from exc
            if lit == 0:
                clause_lits.append(current)
                weights.append(1.0 if current_weight is None else current_weight)
                current = []
                current_weight = None
            else:
                if abs(lit) > n_vars:
                    raise ParseError(
                        f"line {lineno}: literal {lit} out of range (n={n_vars})"
                    )
                current.append(lit)

    if n_vars is None:
        raise ParseError("missing 'p cnf' header")
    if current or current_weight is not None:
        raise ParseError("last clause is missing its terminating 0")
    if n_clauses_declared is not None and len(clause_lits) != n_clauses_declared:
        raise ParseError(
            f"header declares {n_clauses_declared} clauses, found {len(clause_lits)}"
        )

    clause_exprs = [_clause_expr(lits) for lits in clause_lits]
    objective = PseudoBooleanObjective(
        n_vars, tuple(zip(weights, clause_exprs))
    )
    return objective, conjunction(clause_exprs)
