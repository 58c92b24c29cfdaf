"""Finite chain complexes of free abelian groups.

Two constructions live here. :func:`kset_complex` gives the complex whose
homology is H_*(X) for a pointed M(E,I)-set X: in degree n it is free on
pairs (x, c) with c an n-clique, and

    d(x, c) = sum_{i=1..n} (-1)^i [ (x·e_i, c - e_i) - (x, c - e_i) ]

for c = {e_1 < ... < e_n}. :func:`simplicial_chain_complex` is the ordinary
(optionally augmented) simplicial chain complex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Literal, Sequence

from .action import PointedAction
from .alphabet import all_cliques
from .errors import ShapeMismatch
from .intlinalg import IntMatrix
from .simplicial import SimplicialComplex, faces

Variant = Literal["unreduced", "reduced"]


@dataclass(frozen=True)
class ChainComplex:
    """Degrees ``bottom_degree .. top_degree``; ``boundaries[n]`` maps degree
    n to degree n-1 and exists for ``bottom < n <= top``."""

    bases: dict[int, tuple[Hashable, ...]]
    boundaries: dict[int, IntMatrix] = field(default_factory=dict)
    bottom_degree: int = 0

    def __post_init__(self):
        for n, D in self.boundaries.items():
            if D.shape != (self.dim(n - 1), self.dim(n)):
                raise ShapeMismatch(
                    f"D_{n} has shape {D.shape}, expected {(self.dim(n - 1), self.dim(n))}")

    @property
    def top_degree(self) -> int:
        return max(self.bases) if self.bases else self.bottom_degree - 1

    def degrees(self) -> range:
        return range(self.bottom_degree, self.top_degree + 1)

    def dim(self, n: int) -> int:
        return len(self.bases.get(n, ()))

    def dims(self) -> list[int]:
        return [self.dim(n) for n in self.degrees()]

    def boundary(self, n: int) -> IntMatrix | None:
        """D_n, or None where it is the zero map out of/into a zero group."""
        return self.boundaries.get(n)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.dim(n) for n in self.degrees())


def _from_columns(basis_lo: Sequence, basis_hi: Sequence, columns) -> IntMatrix:
    """Assemble a boundary matrix from per-column {label: coeff} dicts."""
    row_of = {lab: i for i, lab in enumerate(basis_lo)}
    data: list[dict[int, int]] = [{} for _ in basis_lo]
    for j, col in enumerate(columns):
        for lab, v in col.items():
            if v:
                data[row_of[lab]][j] = data[row_of[lab]].get(j, 0) + v
    return IntMatrix(len(basis_lo), len(basis_hi), data)


def kset_complex(action: PointedAction, kmax: int | None = None,
                 variant: Variant = "unreduced") -> ChainComplex:
    """Chain complex computing H_*(X) of a pointed M(E,I)-set.

    The unreduced variant treats the base point as an ordinary element; the
    reduced one drops it from the bases and discards every boundary term
    landing on it.
    """
    if variant not in ("unreduced", "reduced"):
        raise ValueError(f"unknown variant {variant!r}")
    alpha = action.alphabet
    levels = all_cliques(alpha)
    if kmax is None:
        kmax = len(levels) - 1
    levels = levels + [[]] * (kmax + 1 - len(levels))
    base = action.base
    elems = action.non_base if variant == "reduced" else action.ordered_elements()
    bases = {n: tuple((x, c) for x in elems for c in levels[n]) for n in range(kmax + 1)}

    boundaries = {}
    for n in range(1, kmax + 1):
        columns = []
        for x, c in bases[n]:
            col: dict = {}
            for i, e in enumerate(c, start=1):
                face = c[:i - 1] + c[i:]
                sign = -1 if i % 2 else 1
                y = action.act(x, e)
                if not (variant == "reduced" and y == base):
                    col[(y, face)] = col.get((y, face), 0) + sign
                col[(x, face)] = col.get((x, face), 0) - sign
            columns.append(col)
        boundaries[n] = _from_columns(bases[n - 1], bases[n], columns)
    return ChainComplex(bases, boundaries, 0)


def simplicial_chain_complex(sc: SimplicialComplex, augmented: bool = False) -> ChainComplex:
    """Degree k is free on (k+1)-vertex faces; the augmented complex adds Z
    (the empty face) in degree -1."""
    top = sc.dimension
    lo = -1 if augmented and sc.vertices else 0
    bases = {k: tuple(faces(sc, k + 1)) for k in range(lo, top + 1)}
    boundaries = {}
    for k in range(lo + 1, top + 1):
        columns = []
        for f in bases[k]:
            columns.append({f[:i] + f[i + 1:]: (-1) ** i for i in range(len(f))})
        boundaries[k] = _from_columns(bases[k - 1], bases[k], columns)
    return ChainComplex(bases, boundaries, lo)


def direct_sum(cc1: ChainComplex, cc2: ChainComplex) -> ChainComplex:
    """Block-diagonal sum; labels are tagged 0 or 1 by summand."""
    lo = min(cc1.bottom_degree, cc2.bottom_degree)
    hi = max(cc1.top_degree, cc2.top_degree)
    bases = {n: tuple((0, b) for b in cc1.bases.get(n, ()))
             + tuple((1, b) for b in cc2.bases.get(n, ())) for n in range(lo, hi + 1)}
    boundaries = {}
    for n in range(lo + 1, hi + 1):
        r1, c1 = cc1.dim(n - 1), cc1.dim(n)
        r2, c2 = cc2.dim(n - 1), cc2.dim(n)
        D1 = cc1.boundary(n) or IntMatrix(r1, c1)
        D2 = cc2.boundary(n) or IntMatrix(r2, c2)
        data = D1.sparse_rows() + [{j + c1: v for j, v in r.items()} for r in D2.sparse_rows()]
        boundaries[n] = IntMatrix(r1 + r2, c1 + c2, data)
    return ChainComplex(bases, boundaries, lo)


@dataclass(frozen=True)
class DDReport:
    passed: bool
    degree: int | None = None  # n with D_n D_{n+1} != 0
    row: int | None = None
    col: int | None = None
    value: int = 0

    def __str__(self) -> str:
        if self.passed:
            return "dd=0 pass"
        return (f"dd=0 FAIL: (D_{self.degree} D_{self.degree + 1})"
                f"[{self.row},{self.col}] = {self.value}")


def verify_dd_zero(cc: ChainComplex) -> DDReport:
    """Exact check of D_n D_{n+1} = 0; reports the first nonzero entry
    (lowest degree, then row-major)."""
    for n in cc.degrees():
        a, b = cc.boundary(n), cc.boundary(n + 1)
        if a is None or b is None:
            continue
        for (i, j), v in (a @ b).items():
            return DDReport(False, n, i, j, v)
    return DDReport(True)


def dump_matrices(cc: ChainComplex) -> str:
    """Dense text dump: ``degree n rows r cols c`` then one line per row."""
    out = []
    for n in range(cc.bottom_degree + 1, cc.top_degree + 1):
        D = cc.boundary(n)
        out.append(f"degree {n} rows {D.rows} cols {D.cols}")
        out.extend(" ".join(map(str, r)) for r in D.to_dense())
    return "\n".join(out) + ("\n" if out else "")
