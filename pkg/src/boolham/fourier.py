"""Truth-table <-> Fourier-coefficient transforms and derived checks.

The coefficient of a term mask S is f_hat(S) = 2^-n sum_x f(x) (-1)^(S.x),
with S.x = popcount(S & x).  The fast Walsh-Hadamard transform computes all
2^n coefficients in O(n 2^n); the 2^-n normalization is applied only on the
table -> coefficients direction, so applying the raw transform twice
returns 2^n times the input.

Dense tables are capped at n = 24 (128 MiB of float64 values).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import boolexpr
from .errors import CapExceeded, ParseError, VerificationError
from .zpoly import PRUNE_EPS, DiagonalHamiltonian, basis_index

TABLE_CAP = 24

MAX_NORM_BOUND = 1.0 / 3.0


@dataclass(frozen=True)
class TruthTable:
    """All 2^n values of a real function, indexed by assignment (x_1 = LSB)."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "values", np.asarray(self.values, dtype=np.float64)
        )
        if self.values.shape != (1 << self.n,):
            raise ValueError(
                f"table for n={self.n} must have length {1 << self.n}, "
                f"got shape {self.values.shape}"
            )

    @classmethod
    def from_bits(cls, bits: str) -> "TruthTable":
        """Table from a binary string, index 0 first (e.g. '0111' is OR on 2 bits)."""
        n = (len(bits) - 1).bit_length()
        if len(bits) != 1 << n or any(ch not in "01" for ch in bits):
            raise ParseError(f"truth table string must be 2^n bits of 0/1: {bits!r}")
        return cls(n, np.array([float(ch) for ch in bits]))

    def value(self, x) -> float:
        return float(self.values[basis_index(x, self.n)])

    def allclose(self, other: "TruthTable", tol: float = 1e-12) -> bool:
        return self.n == other.n and bool(
            np.max(np.abs(self.values - other.values)) <= tol
        )


def _check_table_cap(n: int) -> None:
    if n > TABLE_CAP:
        raise CapExceeded(f"dense table for n={n} exceeds cap {TABLE_CAP}")


def fwht_inplace(a: np.ndarray) -> None:
    """Unnormalized Walsh-Hadamard transform, in place, length 2^n.

    Output[S] = sum_x input[x] * (-1)^popcount(S & x).  Self-inverse up to
    the factor 2^n.
    """
    m = a.shape[0]
    if m & (m - 1) or m == 0:
        raise ValueError(f"length must be a power of two, got {m}")
    h = 1
    while h < m:
        blocks = a.reshape(-1, 2, h)
        top = blocks[:, 0, :].copy()
        bottom = blocks[:, 1, :]
        blocks[:, 0, :] = top + bottom
        blocks[:, 1, :] = top - bottom
        h *= 2


def fourier_from_table(
    table: TruthTable | np.ndarray, *, eps: float = PRUNE_EPS
) -> DiagonalHamiltonian:
    """Fourier coefficients of a real table as a sparse Z-polynomial."""
    if isinstance(table, TruthTable):
        n, values = table.n, table.values
    else:
        values = np.asarray(table, dtype=np.float64)
        n = (values.shape[0] - 1).bit_length()
        if values.shape != (1 << n,):
            raise ValueError(f"table length {values.shape} is not a power of two")
    _check_table_cap(n)
    coeffs = values.copy()
    fwht_inplace(coeffs)
    coeffs /= float(1 << n)
    (masks,) = np.nonzero(np.abs(coeffs) >= eps)
    return DiagonalHamiltonian(n, ((int(m), float(coeffs[m])) for m in masks), eps=eps)


def table_from_fourier(h: DiagonalHamiltonian) -> TruthTable:
    """Exact inverse transform: all 2^n function values of a Z-polynomial."""
    n = h.n_qubits
    _check_table_cap(n)
    vec = np.zeros(1 << n, dtype=np.float64)
    for mask, coeff in h.items():
        vec[mask] = coeff
    fwht_inplace(vec)
    return TruthTable(n, vec)


def projector_defect(h: DiagonalHamiltonian) -> float:
    """max coefficient difference between h*h and h (0 for Boolean-compiled h)."""
    return (h * h).max_coeff_diff(h)


def count_models(h: DiagonalHamiltonian, *, tol: float = 1e-6) -> int:
    """Number of satisfying assignments, read off the identity coefficient.

    Only valid for operators representing 0/1-valued functions; validated
    via the projector property h*h = h before rounding.
    """
    defect = projector_defect(h)
    if defect > tol:
        raise VerificationError(
            f"operator is not a projector (defect {defect:.3g}); "
            "model counting needs a Boolean-compiled Hamiltonian"
        )
    return round(h.identity_coeff * (1 << h.n_qubits))


def check_approx(
    h: DiagonalHamiltonian, f: boolexpr.BoolExpr
) -> tuple[float, bool]:
    """Max-norm distance between a candidate Z-polynomial and a Boolean function.

    Returns (max_x |h.eval(x) - f(x)|, within the 1/3 approximation bound).
    """
    n = h.n_qubits
    _check_table_cap(n)
    approx = table_from_fourier(h).values
    exact = boolexpr.truth_table(f, n)
    max_error = float(np.max(np.abs(approx - exact)))
    return max_error, max_error <= MAX_NORM_BOUND + 1e-12


def approx_report(h: DiagonalHamiltonian, f: boolexpr.BoolExpr) -> str:
    """One-line report used by the verification CLI and golden tests."""
    max_error, ok = check_approx(h, f)
    verdict = "OK" if ok else "FAIL"
    return f"max_error {max_error:.12g} bound 1/3 {verdict}"
