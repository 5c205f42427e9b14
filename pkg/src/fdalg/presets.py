"""Named desk-scale algebras used throughout the tests and the CLI.

NAK2 is k[x]/(x^2); AUS2 is its Auslander algebra (the two-vertex cyclic
quiver with one dead length-2 path); A2/A3 are linearly oriented type-A
quivers; the Kronecker and triple-arrow quivers provide the non-Dynkin
inputs for the tensor experiments.
"""

from __future__ import annotations

from .algebra import (
    Quiver,
    QuiverPresentation,
    StructureAlgebra,
    build_path_algebra_quotient,
)
import numpy as np

from .exactla import DEFAULT_PRIME, DTYPE


def nakayama_local(order: int, p: int = DEFAULT_PRIME) -> StructureAlgebra:
    """k[x]/(x^order) presented as a one-loop quiver algebra."""
    quiver = Quiver(1, (((0, 0, "a")),))
    rel = ((1, tuple(0 for _ in range(order))),)
    pres = QuiverPresentation(quiver, (rel,), nilpotency_bound=order)
    return build_path_algebra_quotient(pres, p)


def nak2(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return nakayama_local(2, p)


def nak3(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return nakayama_local(3, p)


def linear_quiver(n: int) -> Quiver:
    """Type A_n quiver with arrows i -> i+1."""
    return Quiver(n, tuple((i, i + 1, f"a{i + 1}") for i in range(n - 1)))


def path_algebra(quiver: Quiver, p: int = DEFAULT_PRIME) -> StructureAlgebra:
    """Full path algebra of an acyclic quiver."""
    bound = quiver.vertex_count if quiver.vertex_count >= 2 else 2
    pres = QuiverPresentation(quiver, (), nilpotency_bound=bound)
    return build_path_algebra_quotient(pres, p)


def a2(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return path_algebra(linear_quiver(2), p)


def a3(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return path_algebra(linear_quiver(3), p)


def aus2(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    """Auslander algebra of k[x]/(x^2): quiver 1 <-> 2 with the round trip
    through vertex 2 (the path 1 -> 2 -> 1) set to zero.  Dimension 5."""
    quiver = Quiver(2, ((0, 1, "u"), (1, 0, "v")))
    rel = ((1, (0, 1)),)  # "u then v", the 1 -> 2 -> 1 path
    pres = QuiverPresentation(quiver, (rel,), nilpotency_bound=3)
    return build_path_algebra_quotient(pres, p)


def kronecker_quiver() -> Quiver:
    return Quiver(2, ((0, 1, "a"), (0, 1, "b")))

def kronecker(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return path_algebra(kronecker_quiver(), p)


def triple_quiver() -> Quiver:
    """Three parallel arrows: connected, acyclic, wild, not Dynkin."""
    return Quiver(2, ((0, 1, "a"), (0, 1, "b"), (0, 1, "c")))


def d4_quiver() -> Quiver:
    """D4 with the three outer vertices pointing into the center."""
    return Quiver(4, ((0, 3, "a"), (1, 3, "b"), (2, 3, "c")))


def d4(p: int = DEFAULT_PRIME) -> StructureAlgebra:
    return path_algebra(d4_quiver(), p)


def matrix_algebra(n: int, p: int = DEFAULT_PRIME) -> StructureAlgebra:
    """Full n x n matrix algebra on the matrix-unit basis (split, not
    basic for n >= 2)."""
    dim = n * n
    sc = np.zeros((dim, dim, dim), dtype=DTYPE)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b == c:
                        sc[a * n + b, c * n + d, a * n + d] = 1
    unit = np.zeros(dim, dtype=DTYPE)
    for a in range(n):
        unit[a * n + a] = 1
    labels = tuple(f"E{a + 1}{b + 1}" for a in range(n) for b in range(n))
    return StructureAlgebra(sc, unit, p=p, labels=labels)
