"""Exact dense linear algebra over a prime field F_p.

The workhorse type is :class:`FieldMatrix`, an immutable dense matrix of
integer residues.  All pivoting is deterministic (first nonzero entry in
column order) so every downstream computation is bit-stable across runs.

The default prime is 101: large enough that the trace-form radical
criterion is valid for every desk-scale algebra (which all have dimension
well below 101), small enough that products never approach int64 overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from ._backend import rref_inplace
from .errors import ContractViolation

DTYPE = np.int64
DEFAULT_PRIME = 101

# (p-1)^2 * dim must stay below 2^63; this cap leaves room for matrices
# with millions of columns.
_MAX_PRIME = 1 << 20


def check_prime(p: int) -> int:
    if not sympy.isprime(p):
        raise ContractViolation(f"modulus {p} is not prime")
    if p >= _MAX_PRIME:
        raise ContractViolation(f"modulus {p} exceeds the supported bound {_MAX_PRIME}")
    return int(p)


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


class FieldMatrix:
    """Immutable dense matrix over F_p."""

    __slots__ = ("arr", "p")

    def __init__(self, data, p: int = DEFAULT_PRIME):
        arr = np.array(data, dtype=DTYPE)
        if arr.ndim != 2:
            raise ContractViolation("FieldMatrix data must be 2-dimensional")
        arr %= p
        arr.flags.writeable = False
        object.__setattr__(self, "arr", arr)
        object.__setattr__(self, "p", int(p))

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @classmethod
    def _wrap(cls, arr: np.ndarray, p: int) -> "FieldMatrix":
        # Trusted constructor: arr already reduced mod p, int64, 2-D.
        self = object.__new__(cls)
        if not arr.flags.c_contiguous:
            arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "arr", arr)
        object.__setattr__(self, "p", p)
        return self

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls._wrap(np.zeros((rows, cols), dtype=DTYPE), p)

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls._wrap(np.eye(n, dtype=DTYPE), p)

    @classmethod
    def from_columns(cls, columns, dim: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        if not columns:
            return cls.zeros(dim, 0, p)
        return cls._wrap(np.array(columns, dtype=DTYPE).T % p, p)

    @property
    def rows(self) -> int:
        return self.arr.shape[0]

    @property
    def cols(self) -> int:
        return self.arr.shape[1]

    @property
    def T(self) -> "FieldMatrix":
        return FieldMatrix._wrap(np.ascontiguousarray(self.arr.T), self.p)

    def _same_field(self, other: "FieldMatrix"):
        if self.p != other.p:
            raise ContractViolation("mixed moduli in one computation")

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise ContractViolation(
                f"shape mismatch for product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        return FieldMatrix._wrap(self.arr @ other.arr % self.p, self.p)

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        return FieldMatrix._wrap((self.arr + other.arr) % self.p, self.p)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        return FieldMatrix._wrap((self.arr - other.arr) % self.p, self.p)

    def __neg__(self) -> "FieldMatrix":
        return FieldMatrix._wrap((-self.arr) % self.p, self.p)

    def scale(self, c: int) -> "FieldMatrix":
        return FieldMatrix._wrap(self.arr * (c % self.p) % self.p, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.p == other.p
            and self.arr.shape == other.arr.shape
            and bool(np.array_equal(self.arr, other.arr))
        )

    def __hash__(self):
        return hash((self.p, self.arr.shape, self.arr.tobytes()))

    def __repr__(self):
        return f"FieldMatrix({self.arr.tolist()}, p={self.p})"

    def is_zero(self) -> bool:
        return not self.arr.any()

    def copy_array(self) -> np.ndarray:
        return np.ascontiguousarray(self.arr).copy()

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        return FieldMatrix._wrap(np.hstack([self.arr, other.arr]), self.p)

    def vstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        return FieldMatrix._wrap(np.vstack([self.arr, other.arr]), self.p)

    def kron(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other)
        return FieldMatrix._wrap(np.kron(self.arr, other.arr) % self.p, self.p)

    def col(self, j: int) -> np.ndarray:
        return self.arr[:, j].copy()

    # -- elimination-based operations ----------------------------------

    def rref(self):
        """Return ``(rref_matrix, rank, pivot_columns)``."""
        work = self.copy_array()
        rank, pivots = rref_inplace(work, self.p)
        return FieldMatrix._wrap(work, self.p), rank, list(pivots)

    def rank(self) -> int:
        work = self.copy_array()
        rank, _ = rref_inplace(work, self.p)
        return rank

    def nullspace(self) -> "FieldMatrix":
        """Basis of the right null space, one column per free variable.

        The free variable of each basis vector is set to 1 and the pivot
        variables are back-filled, which makes the output canonical.
        """
        r, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        kernel = np.zeros((self.cols, len(free)), dtype=DTYPE)
        for idx, f in enumerate(free):
            kernel[f, idx] = 1
            for row, c in enumerate(pivots):
                kernel[c, idx] = (-r.arr[row, f]) % self.p
        return FieldMatrix._wrap(kernel, self.p)

    def solve(self, b: "FieldMatrix"):
        """Solve ``self @ x = b`` columnwise; free variables are set to zero.

        Returns ``None`` when the system is inconsistent.
        """
        self._same_field(b)
        if b.rows != self.rows:
            raise ContractViolation(
                f"solve: lhs has {self.rows} rows, rhs has {b.rows}"
            )
        aug = np.ascontiguousarray(np.hstack([self.arr, b.arr]))
        rank, pivots = rref_inplace(aug, self.p)
        x = np.zeros((self.cols, b.cols), dtype=DTYPE)
        for row, c in enumerate(pivots):
            if c >= self.cols:
                return None
            x[c, :] = aug[row, self.cols:]
        return FieldMatrix._wrap(x, self.p)

    def inv(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise ContractViolation("inverse of a non-square matrix")
        sol = self.solve(FieldMatrix.identity(self.rows, self.p))
        if sol is None or (self.arr @ sol.arr % self.p != np.eye(self.rows, dtype=DTYPE)).any():
            raise ContractViolation("matrix is singular")
        return sol

    def column_space(self) -> "FieldMatrix":
        """Canonical basis of the column space (reduced row form of the
        transpose, transposed back)."""
        r, rank, _ = self.T.rref()
        return FieldMatrix._wrap(np.ascontiguousarray(r.arr[:rank].T), self.p)


@dataclass(frozen=True)
class ReduceResult:
    rref: FieldMatrix
    rank: int
    kernel_basis: FieldMatrix


def reduce(m: FieldMatrix) -> ReduceResult:
    """Reduced row-echelon form, rank, and right kernel basis of ``m``."""
    r, rank, _ = m.rref()
    return ReduceResult(rref=r, rank=rank, kernel_basis=m.nullspace())


def solve(a: FieldMatrix, b: FieldMatrix):
    """Deterministic solution of ``a @ x = b`` or ``None`` if inconsistent."""
    return a.solve(b)


# -- subspace utilities (columns span the subspace) ---------------------


def subspace_contains(basis: FieldMatrix, vectors: FieldMatrix) -> bool:
    """True when every column of ``vectors`` lies in the column span of
    ``basis``."""
    if vectors.cols == 0:
        return True
    return basis.hstack(vectors).rank() == basis.rank()


def subspace_equal(a: FieldMatrix, b: FieldMatrix) -> bool:
    ra = a.rank()
    if ra != b.rank():
        return False
    return a.hstack(b).rank() == ra


def subspace_intersection(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Basis of the intersection of two column spans in the same space."""
    if a.cols == 0 or b.cols == 0:
        return FieldMatrix.zeros(a.rows, 0, a.p)
    combined = a.hstack(b)
    ker = combined.nullspace()
    coeffs = FieldMatrix._wrap(np.ascontiguousarray(ker.arr[: a.cols]), a.p)
    return (a @ coeffs).column_space()


def complement_coordinates(basis: FieldMatrix) -> list[int]:
    """Standard coordinates completing the column span of ``basis`` to the
    ambient space (non-pivot rows of the column-reduced basis)."""
    r, rank, pivots = basis.T.rref()
    pivot_set = set(pivots)
    return [i for i in range(basis.rows) if i not in pivot_set]


def quotient_maps(subspace: FieldMatrix):
    """Projection/section pair for the quotient by a column span.

    Returns ``(proj, sect)`` with ``proj @ subspace = 0``,
    ``proj @ sect = identity`` on the quotient.
    """
    d = subspace.rows
    p = subspace.p
    comp = complement_coordinates(subspace)
    sect = np.zeros((d, len(comp)), dtype=DTYPE)
    for idx, c in enumerate(comp):
        sect[c, idx] = 1
    full = subspace.hstack(FieldMatrix._wrap(sect, p))
    inv = full.inv()
    proj = FieldMatrix._wrap(np.ascontiguousarray(inv.arr[subspace.cols:]), p)
    return proj, FieldMatrix._wrap(sect, p)
