"""Sparse algebra of diagonal Z-polynomials.

A diagonal Hamiltonian is stored as a real-weighted sum of products of
Pauli Z operators.  Each product is identified by a term mask: a machine-word
bit set over qubits, so registers are limited to 63 qubits.

Conventions used throughout the package:

- Qubits are numbered 1..n.  Bit j-1 of a term mask means "Z acts on qubit j".
- The empty mask is the identity term.
- Basis strings are indexed by integers with x_1 the LEAST significant bit.
  The string literal "110" reads left to right as x_1=1, x_2=1, x_3=0 and
  corresponds to the integer index 3.
- eval(x) returns sum_S w_S * (-1)^popcount(S & x), i.e. the represented
  function's value on the basis string x.

Arithmetic applies Z^2 = I (term masks combine by XOR) and prunes
coefficients below PRUNE_EPS after every operation.  All values are
immutable after construction; every operation returns a fresh object.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ParseError, QubitCountError

PRUNE_EPS = 1e-12
MAX_QUBITS = 63

BasisInput = Union[int, str, Sequence[int]]


def mask_of(qubits: Iterable[int]) -> int:
    """Term mask for a set of 1-based qubit indices."""
    mask = 0
    for j in qubits:
        if j < 1:
            raise QubitCountError(f"qubit index {j} must be >= 1")
        mask |= 1 << (j - 1)
    return mask


def qubits_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based qubit indices of a term mask."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def term_label(mask: int, sep: str = "") -> str:
    """Human-readable label, e.g. mask 0b101 -> 'Z1Z3' (or 'Z1 Z3' with sep=' ')."""
    if mask == 0:
        return "I"
    return sep.join(f"Z{j}" for j in qubits_of(mask))


def basis_index(x: BasisInput, n_qubits: int) -> int:
    """Convert a basis-string argument into an integer index (x_1 = LSB).

    Accepts an int in [0, 2^n), a string like "110" (read x_1, x_2, ...),
    or a sequence of 0/1 values (x_1 first).
    """
    if isinstance(x, int):
        if not 0 <= x < (1 << n_qubits):
            raise QubitCountError(f"basis index {x} out of range for {n_qubits} qubits")
        return x
    if isinstance(x, str):
        bits = x
    else:
        bits = "".join(str(int(b)) for b in x)
    if len(bits) != n_qubits:
        raise QubitCountError(f"basis string length {len(bits)} != qubit count {n_qubits}")
    idx = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            idx |= 1 << i
        elif ch != "0":
            raise ParseError(f"invalid bit {ch!r} in basis string {bits!r}", i)
    return idx


def basis_label(x: int, n_qubits: int) -> str:
    """Inverse of basis_index for integer inputs: 'x_1 x_2 ... x_n' string."""
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n_qubits))


def format_coeff(c: float) -> str:
    """Coefficient text, 12 significant digits, exact-zero suppression."""
    return f"{c:.12g}"


class DiagonalHamiltonian:
    """Immutable sparse sum of Z-products with real coefficients.

    ``terms`` maps term masks to 64-bit float coefficients; no stored
    coefficient has magnitude below the pruning epsilon, and iteration
    is always in ascending mask order.
    """

    __slots__ = ("_n", "_terms")

    def __init__(
        self,
        n_qubits: int,
        terms: Union[Mapping[int, float], Iterable[tuple[int, float]]] = (),
        *,
        eps: float = PRUNE_EPS,
    ):
        if not 0 <= n_qubits <= MAX_QUBITS:
            raise QubitCountError(f"qubit count {n_qubits} outside [0, {MAX_QUBITS}]")
        acc: dict[int, float] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mask, coeff in items:
            if not 0 <= mask < (1 << n_qubits):
                raise QubitCountError(
                    f"term mask {mask:#x} out of range for {n_qubits} qubits"
                )
            acc[mask] = acc.get(mask, 0.0) + float(coeff)
        self._n = n_qubits
        self._terms = {m: acc[m] for m in sorted(acc) if abs(acc[m]) >= eps}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n_qubits: int) -> "DiagonalHamiltonian":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int) -> "DiagonalHamiltonian":
        return cls(n_qubits, {0: 1.0})

    @classmethod
    def z_product(cls, n_qubits: int, qubits: Iterable[int], coeff: float = 1.0):
        """coeff * Z_{q1} Z_{q2} ... for 1-based qubit indices."""
        mask = mask_of(qubits)
        if mask >> n_qubits:
            raise QubitCountError(f"qubit index exceeds register size {n_qubits}")
        return cls(n_qubits, {mask: coeff})

    # -- inspection ---------------------------------------------------

    @property
    def n_qubits(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        """Number of stored nonzero terms (the sparsity of the function)."""
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Maximum number of qubits touched by any term; 0 for the zero operator."""
        if not self._terms:
            return 0
        return max(m.bit_count() for m in self._terms)

    @property
    def identity_coeff(self) -> float:
        return self._terms.get(0, 0.0)

    def coeff(self, mask: int) -> float:
        return self._terms.get(mask, 0.0)

    def items(self) -> Iterator[tuple[int, float]]:
        """(mask, coefficient) pairs in ascending mask order."""
        return iter(self._terms.items())

    def coeff_one_norm(self) -> float:
        """Sum of |coefficients|; an upper bound on max_x |eval(x)|."""
        return sum(abs(c) for c in self._terms.values())

    # -- evaluation ---------------------------------------------------

    def eval(self, x: BasisInput) -> float:
        """Value on a basis string: sum_S w_S * (-1)^popcount(S & x)."""
        idx = basis_index(x, self._n)
        total = 0.0
        for mask, coeff in self._terms.items():
            total += coeff if ((mask & idx).bit_count() & 1) == 0 else -coeff
        return total

    # -- arithmetic ---------------------------------------------------

    def _require_same_register(self, other: "DiagonalHamiltonian") -> None:
        if self._n != other._n:
            raise QubitCountError(
                f"qubit-count mismatch: {self._n} vs {other._n}"
            )

    def __add__(self, other: "DiagonalHamiltonian") -> "DiagonalHamiltonian":
        if not isinstance(other, DiagonalHamiltonian):
            return NotImplemented
        self._require_same_register(other)
        acc = dict(self._terms)
        for mask, coeff in other._terms.items():
            acc[mask] = acc.get(mask, 0.0) + coeff
        return DiagonalHamiltonian(self._n, acc)

    def __sub__(self, other: "DiagonalHamiltonian") -> "DiagonalHamiltonian":
        if not isinstance(other, DiagonalHamiltonian):
            return NotImplemented
        return self + (-1.0) * other

    def __neg__(self) -> "DiagonalHamiltonian":
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, DiagonalHamiltonian):
            self._require_same_register(other)
            acc: dict[int, float] = {}
            for ma, ca in self._terms.items():
                for mb, cb in other._terms.items():
                    m = ma ^ mb  # Z_S Z_T = Z_{S xor T}
                    acc[m] = acc.get(m, 0.0) + ca * cb
            return DiagonalHamiltonian(self._n, acc)
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return NotImplemented

    def scaled(self, w: float) -> "DiagonalHamiltonian":
        return DiagonalHamiltonian(self._n, {m: w * c for m, c in self._terms.items()})

    def tensor(self, other: "DiagonalHamiltonian") -> "DiagonalHamiltonian":
        """Tensor product; self keeps qubits 1..n, other is shifted up by n."""
        n = self._n + other._n
        if n > MAX_QUBITS:
            raise QubitCountError(f"tensor product needs {n} qubits > {MAX_QUBITS}")
        acc = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                acc[ma | (mb << self._n)] = ca * cb
        return DiagonalHamiltonian(n, acc)

    def embedded(self, n_qubits: int) -> "DiagonalHamiltonian":
        """Same operator viewed on a larger register (extra qubits idle)."""
        if n_qubits < self._n:
            raise QubitCountError(
                f"cannot embed {self._n}-qubit operator into {n_qubits} qubits"
            )
        return DiagonalHamiltonian(n_qubits, self._terms)

    def pruned(self, eps: float) -> "DiagonalHamiltonian":
        return DiagonalHamiltonian(self._n, self._terms, eps=eps)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagonalHamiltonian):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def allclose(self, other: "DiagonalHamiltonian", tol: float = 1e-9) -> bool:
        """Term-for-term comparison within an absolute coefficient tolerance."""
        if self._n != other._n:
            return False
        for mask in self._terms.keys() | other._terms.keys():
            if abs(self.coeff(mask) - other.coeff(mask)) > tol:
                return False
        return True

    def max_coeff_diff(self, other: "DiagonalHamiltonian") -> float:
        self._require_same_register(other)
        masks = self._terms.keys() | other._terms.keys()
        return max((abs(self.coeff(m) - other.coeff(m)) for m in masks), default=0.0)

    # -- serialization ------------------------------------------------

    def to_text(self) -> str:
        """Readable form, e.g. '0.75 I - 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2'."""
        if not self._terms:
            return "0"
        parts = []
        for i, (mask, coeff) in enumerate(self._terms.items()):
            mag = format_coeff(abs(coeff))
            if i == 0:
                sign = "-" if coeff < 0 else ""
                parts.append(f"{sign}{mag} {term_label(mask)}")
            else:
                sign = "-" if coeff < 0 else "+"
                parts.append(f"{sign} {mag} {term_label(mask)}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "n": self._n,
            "terms": [
                {"paulis": term_label(mask, sep=" "), "coeff": coeff}
                for mask, coeff in self._terms.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "DiagonalHamiltonian":
        try:
            n = int(doc["n"])
            entries = doc["terms"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"Hamiltonian JSON missing field: {exc}") from exc
        terms = []
        for entry in entries:
            label = entry["paulis"].strip()
            coeff = entry["coeff"]
            if not isinstance(coeff, (int, float)):
                raise ParseError(f"diagonal coefficient must be real, got {coeff!r}")
            terms.append((_mask_from_label(label), float(coeff)))
        return cls(n, terms)

    @classmethod
    def from_json(cls, text: str) -> "DiagonalHamiltonian":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)

    def __repr__(self) -> str:
        return f"DiagonalHamiltonian({self._n}, {self.to_text()!r})"


def _mask_from_label(label: str) -> int:
    if label in ("I", ""):
        return 0
    mask = 0
    for atom in label.replace("Z", " Z").split():
        if not atom.startswith("Z"):
            raise ParseError(f"expected Z<index> in term label, got {atom!r}")
        try:
            j = int(atom[1:])
        except ValueError as exc:
            raise ParseError(f"bad qubit index in term label {atom!r}") from exc
        mask |= 1 << (j - 1)
    return mask


def bit_projector(n_qubits: int, j: int) -> DiagonalHamiltonian:
    """The multiplication operator for bit j: (I - Z_j)/2, eigenvalue x_j."""
    if not 1 <= j <= n_qubits:
        raise QubitCountError(f"qubit index {j} outside 1..{n_qubits}")
    return DiagonalHamiltonian(n_qubits, {0: 0.5, 1 << (j - 1): -0.5})
