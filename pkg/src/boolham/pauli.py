"""Exact symbolic algebra of general Pauli strings and operators.

A Pauli string is a pair of bit masks plus a phase exponent: a qubit set in
both masks carries Y, in x_mask only X, in z_mask only Z, in neither I.
The string's value is i^phase_pow times the plain tensor product of those
letters, so phase_pow = 0 strings are exactly the Hermitian Pauli products.
String multiplication is exact: the product of two strings is a single
string whose phase exponent follows the Pauli product table (XZ = -iY and
friends).  Operators fold each string's phase into a complex coefficient,
keeping the stored keys canonical (phase 0).

Qubit numbering and mask conventions follow zpoly: bit j-1 <-> qubit j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import ParseError, QubitCountError
from .zpoly import MAX_QUBITS, PRUNE_EPS, DiagonalHamiltonian, format_coeff

_LETTERS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True, slots=True)
class PauliString:
    n_qubits: int
    x_mask: int
    z_mask: int
    phase_pow: int = 0  # power of i multiplying the I/X/Y/Z tensor product

    def __post_init__(self):
        if not 0 <= self.n_qubits <= MAX_QUBITS:
            raise QubitCountError(f"qubit count {self.n_qubits} outside [0, {MAX_QUBITS}]")
        limit = 1 << self.n_qubits
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise QubitCountError("mask sets bits beyond the register size")
        object.__setattr__(self, "phase_pow", self.phase_pow % 4)

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls(n_qubits, 0, 0)

    @classmethod
    def single(cls, n_qubits: int, letter: str, j: int) -> "PauliString":
        """One X/Y/Z on 1-based qubit j, identity elsewhere."""
        if not 1 <= j <= n_qubits:
            raise QubitCountError(f"qubit index {j} outside 1..{n_qubits}")
        try:
            x, z = _LETTERS[letter]
        except KeyError:
            raise ValueError(f"letter must be one of I X Y Z, got {letter!r}") from None
        bit = 1 << (j - 1)
        return cls(n_qubits, x * bit, z * bit)

    @classmethod
    def from_label(cls, n_qubits: int, label: str) -> "PauliString":
        """Parse 'X1 Z3' / 'X1Z3' style labels; 'I' is the identity."""
        label = label.strip()
        if label in ("I", ""):
            return cls.identity(n_qubits)
        x_mask = z_mask = 0
        for atom in label.replace("X", " X").replace("Y", " Y").replace("Z", " Z").split():
            letter, digits = atom[0], atom[1:]
            if letter not in "XYZ" or not digits.isdigit():
                raise ParseError(f"bad Pauli atom {atom!r} in label {label!r}")
            j = int(digits)
            if not 1 <= j <= n_qubits:
                raise QubitCountError(f"qubit index {j} outside 1..{n_qubits}")
            bit = 1 << (j - 1)
            if (x_mask | z_mask) & bit:
                raise ParseError(f"qubit {j} appears twice in label {label!r}")
            x, z = _LETTERS[letter]
            x_mask |= x * bit
            z_mask |= z * bit
        return cls(n_qubits, x_mask, z_mask)

    def letter(self, j: int) -> str:
        bit = 1 << (j - 1)
        x, z = bool(self.x_mask & bit), bool(self.z_mask & bit)
        return "Y" if (x and z) else "X" if x else "Z" if z else "I"

    def label(self, sep: str = " ") -> str:
        atoms = [
            f"{self.letter(j)}{j}"
            for j in range(1, self.n_qubits + 1)
            if (self.x_mask | self.z_mask) & (1 << (j - 1))
        ]
        return sep.join(atoms) if atoms else "I"

    @property
    def weight(self) -> int:
        """Number of non-identity qubits."""
        return (self.x_mask | self.z_mask).bit_count()

    @property
    def phase(self) -> complex:
        return (1j) ** self.phase_pow

    def canonical(self) -> "PauliString":
        return PauliString(self.n_qubits, self.x_mask, self.z_mask)

    def __mul__(self, other: "PauliString") -> "PauliString":
        if not isinstance(other, PauliString):
            return NotImplemented
        if self.n_qubits != other.n_qubits:
            raise QubitCountError(
                f"qubit-count mismatch: {self.n_qubits} vs {other.n_qubits}"
            )
        xc = self.x_mask ^ other.x_mask
        zc = self.z_mask ^ other.z_mask
        # work in X^x Z^z form: herm(x, z) = i^popcount(x & z) X^x Z^z,
        # and Z^za X^xb = (-1)^(za.xb) X^xb Z^za
        p = (
            self.phase_pow
            + other.phase_pow
            + (self.x_mask & self.z_mask).bit_count()
            + (other.x_mask & other.z_mask).bit_count()
            + 2 * (self.z_mask & other.x_mask).bit_count()
            - (xc & zc).bit_count()
        )
        return PauliString(self.n_qubits, xc, zc, p % 4)

    def adjoint(self) -> "PauliString":
        return PauliString(self.n_qubits, self.x_mask, self.z_mask, -self.phase_pow)

    def commutes_with(self, other: "PauliString") -> bool:
        cross = (self.x_mask & other.z_mask).bit_count() + (
            self.z_mask & other.x_mask
        ).bit_count()
        return cross % 2 == 0

    def __repr__(self) -> str:
        prefix = ["", "i ", "- ", "-i "][self.phase_pow]
        return f"PauliString({prefix}{self.label()})"


def _sort_key(s: PauliString) -> tuple[int, int]:
    return (s.z_mask, s.x_mask)


def _format_complex(c: complex) -> str:
    if c.imag == 0.0:
        return format_coeff(c.real)
    if c.real == 0.0:
        return f"{format_coeff(c.imag)}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"({format_coeff(c.real)}{sign}{format_coeff(abs(c.imag))}i)"


class PauliOperator:
    """Immutable complex-weighted sum of canonical-phase Pauli strings."""

    __slots__ = ("_n", "_terms")

    def __init__(
        self,
        n_qubits: int,
        terms: Union[Mapping[PauliString, complex], Iterable[tuple[PauliString, complex]]] = (),
        *,
        eps: float = PRUNE_EPS,
    ):
        if not 0 <= n_qubits <= MAX_QUBITS:
            raise QubitCountError(f"qubit count {n_qubits} outside [0, {MAX_QUBITS}]")
        acc: dict[PauliString, complex] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for string, coeff in items:
            if string.n_qubits != n_qubits:
                raise QubitCountError(
                    f"string on {string.n_qubits} qubits added to {n_qubits}-qubit operator"
                )
            key = string.canonical()
            acc[key] = acc.get(key, 0j) + complex(coeff) * string.phase
        self._n = n_qubits
        self._terms = {
            s: acc[s] for s in sorted(acc, key=_sort_key) if abs(acc[s]) >= eps
        }

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliOperator":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliOperator":
        return cls(n_qubits, {PauliString.identity(n_qubits): 1.0})

    @classmethod
    def single(cls, n_qubits: int, letter: str, j: int, coeff: complex = 1.0):
        return cls(n_qubits, {PauliString.single(n_qubits, letter, j): coeff})

    @classmethod
    def from_diagonal(cls, h: DiagonalHamiltonian) -> "PauliOperator":
        return cls(
            h.n_qubits,
            ((PauliString(h.n_qubits, 0, mask), c) for mask, c in h.items()),
        )

    # -- inspection ---------------------------------------------------

    @property
    def n_qubits(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return len(self._terms)

    def coeff(self, string: PauliString) -> complex:
        return self._terms.get(string.canonical(), 0j) * string.phase.conjugate()

    def items(self) -> Iterator[tuple[PauliString, complex]]:
        return iter(self._terms.items())

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return all(abs(c.imag) <= tol for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------

    def _require_same_register(self, other: "PauliOperator") -> None:
        if self._n != other._n:
            raise QubitCountError(f"qubit-count mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "PauliOperator") -> "PauliOperator":
        if not isinstance(other, PauliOperator):
            return NotImplemented
        self._require_same_register(other)
        acc = dict(self._terms)
        for s, c in other._terms.items():
            acc[s] = acc.get(s, 0j) + c
        return PauliOperator(self._n, acc)

    def __sub__(self, other: "PauliOperator") -> "PauliOperator":
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self + (-1.0) * other

    def __neg__(self) -> "PauliOperator":
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, PauliOperator):
            self._require_same_register(other)
            acc: dict[PauliString, complex] = {}
            for sa, ca in self._terms.items():
                for sb, cb in other._terms.items():
                    prod = sa * sb
                    key = prod.canonical()
                    acc[key] = acc.get(key, 0j) + ca * cb * prod.phase
            return PauliOperator(self._n, acc)
        if isinstance(other, (int, float, complex)):
            return self.scaled(complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scaled(complex(other))
        return NotImplemented

    def scaled(self, w: complex) -> "PauliOperator":
        return PauliOperator(self._n, {s: w * c for s, c in self._terms.items()})

    def adjoint(self) -> "PauliOperator":
        # canonical strings are Hermitian, so only coefficients conjugate
        return PauliOperator(
            self._n, {s: c.conjugate() for s, c in self._terms.items()}
        )

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def allclose(self, other: "PauliOperator", tol: float = 1e-9) -> bool:
        if self._n != other._n:
            return False
        for s in self._terms.keys() | other._terms.keys():
            if abs(self._terms.get(s, 0j) - other._terms.get(s, 0j)) > tol:
                return False
        return True

    # -- serialization ------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (s, c) in enumerate(self._terms.items()):
            # pull a real sign out front when possible, like the diagonal form
            if c.imag == 0.0 and c.real < 0:
                sign, mag = "-", format_coeff(-c.real)
            elif c.real == 0.0 and c.imag < 0:
                sign, mag = "-", f"{format_coeff(-c.imag)}i"
            else:
                sign, mag = "+", _format_complex(c)
            if i == 0:
                parts.append(f"{'-' if sign == '-' else ''}{mag} {s.label(sep='')}")
            else:
                parts.append(f"{sign} {mag} {s.label(sep='')}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        entries = []
        for s, c in self._terms.items():
            coeff = c.real if c.imag == 0.0 else [c.real, c.imag]
            entries.append({"paulis": s.label(), "coeff": coeff})
        return {"n": self._n, "terms": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "PauliOperator":
        try:
            n = int(doc["n"])
            entries = doc["terms"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"operator JSON missing field: {exc}") from exc
        terms = []
        for entry in entries:
            raw = entry["coeff"]
            coeff = complex(raw[0], raw[1]) if isinstance(raw, list) else complex(raw)
            terms.append((PauliString.from_label(n, entry["paulis"]), coeff))
        return cls(n, terms)

    def __repr__(self) -> str:
        return f"PauliOperator({self._n}, {self.to_text()!r})"


def anticommutator(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """{a, b} = ab + ba."""
    return a * b + b * a


def spin_lowering(n_qubits: int, j: int) -> PauliOperator:
    """b_j = (X_j + i Y_j)/2, the spin annihilation operator |0><1|."""
    return PauliOperator(
        n_qubits,
        [
            (PauliString.single(n_qubits, "X", j), 0.5),
            (PauliString.single(n_qubits, "Y", j), 0.5j),
        ],
    )


def spin_raising(n_qubits: int, j: int) -> PauliOperator:
    """b_j^dag = (X_j - i Y_j)/2, the spin creation operator |1><0|."""
    return spin_lowering(n_qubits, j).adjoint()


def jordan_wigner(n_qubits: int, j: int, kind: str = "lowering") -> PauliOperator:
    """Fermionic ladder operator a_j = Z_1 ... Z_{j-1} (X_j + i Y_j)/2.

    kind='raising' gives a_j^dag (conjugate Y coefficient).  The Z-parity
    prefix makes the family satisfy the canonical anticommutation relations.
    """
    if kind not in ("lowering", "raising"):
        raise ValueError(f"kind must be 'lowering' or 'raising', got {kind!r}")
    if not 1 <= j <= n_qubits:
        raise QubitCountError(f"qubit index {j} outside 1..{n_qubits}")
    prefix = (1 << (j - 1)) - 1  # Z on qubits 1..j-1
    bit = 1 << (j - 1)
    y_coeff = 0.5j if kind == "lowering" else -0.5j
    return PauliOperator(
        n_qubits,
        [
            (PauliString(n_qubits, bit, prefix), 0.5),
            (PauliString(n_qubits, bit, prefix | bit), y_coeff),
        ],
    )
