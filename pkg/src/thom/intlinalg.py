"""Exact integer linear algebra.

Smith normal form over Z, ranks over Q and over GF(p), homology of chain
complexes and canonical forms of finitely generated abelian groups.

All arithmetic uses Python integers, so intermediate entries never overflow.
Matrices are stored sparsely (one ``{col: value}`` dict per row) because the
boundary matrices produced downstream have a handful of nonzeros per column.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DegreeOutOfRange, NonCanonical, NotPrime, ShapeMismatch

__all__ = [
    "IntMatrix",
    "SmithForm",
    "FinAbGroup",
    "smith",
    "rank_rational",
    "rank_mod_p",
    "homology_at",
    "homology",
    "group_sum",
    "group_eq",
    "torsion",
    "TRIVIAL",
    "Z",
]


class IntMatrix:
    """Integer matrix with sparse row storage and value semantics."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[dict[int, int]] | None = None):
        if rows < 0 or cols < 0:
            raise ShapeMismatch(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = [{} for _ in range(rows)]
        else:
            self._data = [{j: int(v) for j, v in r.items() if v} for r in data]
            if len(self._data) != rows:
                raise ShapeMismatch(f"expected {rows} rows, got {len(self._data)}")
            for r in self._data:
                for j in r:
                    if not 0 <= j < cols:
                        raise ShapeMismatch(f"column index {j} outside 0..{cols - 1}")

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        for r in entries:
            if len(r) != cols:
                raise ShapeMismatch("ragged dense matrix")
        return cls(rows, cols, ({j: v for j, v in enumerate(r) if v} for r in entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, ({i: 1} for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> dict[int, int]:
        return dict(self._data[i])

    def sparse_rows(self) -> list[dict[int, int]]:
        """Fresh mutable copies of the row dicts."""
        return [dict(r) for r in self._data]

    def items(self):
        for i, r in enumerate(self._data):
            for j in sorted(r):
                yield (i, j), r[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i].get(j, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self) -> "IntMatrix":
        data: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                data[j][i] = v
        return IntMatrix(self.cols, self.rows, data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self._data:
            acc: dict[int, int] = {}
            for k, a in r.items():
                for j, b in other._data[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            return f"IntMatrix.from_dense({self.to_dense()!r}, cols={self.cols})"
        return f"<IntMatrix {self.rows}x{self.cols} nnz={self.nnz()}>"


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = A.rows
    M = A.to_dense()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


# --------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r (all >= 1), plus optional
    unimodular ``U``, ``V`` with ``U @ A @ V`` equal to ``diagonal()``."""

    invariant_factors: tuple[int, ...]
    shape: tuple[int, int]
    U: IntMatrix | None = field(default=None, compare=False)
    V: IntMatrix | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal(self) -> IntMatrix:
        rows, cols = self.shape
        d = self.invariant_factors
        return IntMatrix(rows, cols, [{i: d[i]} if i < len(d) else {} for i in range(rows)])


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return x, y, a


def _add_into(target: dict[int, int], source: dict[int, int], factor: int) -> None:
    for j, v in source.items():
        w = target.get(j, 0) + factor * v
        if w:
            target[j] = w
        else:
            target.pop(j, None)


def smith(A: IntMatrix, want_transforms: bool = False) -> SmithForm:
    """Smith normal form of ``A``.

    The pivot is always the nonzero entry of least absolute value in the
    active submatrix (ties broken row-major); its row and column are cleared
    by floor-division steps, and a smaller remainder becomes the next pivot.
    The diagonal is then brought into a divisibility chain by 2x2 gcd moves.

    >>> smith(IntMatrix.from_dense([[2, 4], [6, 8]])).invariant_factors
    (2, 4)
    """
    nrows, ncols = A.shape
    rows = A.sparse_rows()
    colidx: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for j in r:
            colidx.setdefault(j, set()).add(i)

    U = [{i: 1} for i in range(nrows)] if want_transforms else None
    # V is stored by columns
    V = [{j: 1} for j in range(ncols)] if want_transforms else None

    def row_add(dst: int, src: int, factor: int) -> None:
        rd = rows[dst]
        for j, v in rows[src].items():
            w = rd.get(j, 0) + factor * v
            if w:
                if j not in rd:
                    colidx[j].add(dst)
                rd[j] = w
            elif j in rd:
                del rd[j]
                colidx[j].discard(dst)
        if U is not None:
            _add_into(U[dst], U[src], factor)

    def col_add_single_row(dst: int, src: int, r: int, factor: int) -> None:
        # valid only while column ``src`` is zero outside row ``r``
        rr = rows[r]
        w = rr.get(dst, 0) + factor * rr[src]
        if w:
            if dst not in rr:
                colidx.setdefault(dst, set()).add(r)
            rr[dst] = w
        elif dst in rr:
            del rr[dst]
            colidx[dst].discard(r)
        if V is not None:
            _add_into(V[dst], V[src], factor)

    def find_pivot() -> tuple[int, int] | None:
        best = None
        for i, r in enumerate(rows):
            if not r:
                continue
            j = min(r, key=lambda c: (abs(r[c]), c))
            v = abs(r[j])
            if best is None or v < best[0]:
                best = (v, i, j)
                if v == 1:
                    break
        return None if best is None else (best[1], best[2])

    pivots: list[tuple[int, int, int]] = []
    while True:
        found = find_pivot()
        if found is None:
            break
        r, c = found
        while True:
            p = rows[r][c]
            leftover = False
            for i in sorted(colidx[c] - {r}):
                q = rows[i][c] // p
                if q:
                    row_add(i, r, -q)
                if c in rows[i]:
                    leftover = True
            if leftover:
                r = min(colidx[c], key=lambda i: (abs(rows[i][c]), i))
                continue
            for j in sorted(rows[r]):
                if j == c:
                    continue
                q = rows[r][j] // p
                if q:
                    col_add_single_row(j, c, r, -q)
                if j in rows[r]:
                    leftover = True
            if leftover:
                rr = rows[r]
                c = min(rr, key=lambda j: (abs(rr[j]), j))
                continue
            break
        pivots.append((r, c, rows[r][c]))
        rows[r] = {}
        colidx[c].discard(r)

    diag = [p for _, _, p in pivots]
    if U is not None:
        prow = [r for r, _, _ in pivots]
        pcol = [c for _, c, _ in pivots]
        used_r, used_c = set(prow), set(pcol)
        U = [U[i] for i in prow] + [U[i] for i in range(nrows) if i not in used_r]
        V = [V[j] for j in pcol] + [V[j] for j in range(ncols) if j not in used_c]
    for k, d in enumerate(diag):
        if d < 0:
            diag[k] = -d
            if U is not None:
                U[k] = {j: -v for j, v in U[k].items()}

    n = len(diag)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = diag[i], diag[j]
            if b % a == 0:
                continue
            s, t, g = _xgcd(a, b)
            diag[i], diag[j] = g, a // g * b
            if U is not None:
                ui, uj = U[i], U[j]
                new_i: dict[int, int] = {}
                _add_into(new_i, ui, s)
                _add_into(new_i, uj, t)
                new_j: dict[int, int] = {}
                _add_into(new_j, ui, -(b // g))
                _add_into(new_j, uj, a // g)
                U[i], U[j] = new_i, new_j
                vi, vj = V[i], V[j]
                new_vi: dict[int, int] = {}
                _add_into(new_vi, vi, 1)
                _add_into(new_vi, vj, 1)
                new_vj: dict[int, int] = {}
                _add_into(new_vj, vi, -t * (b // g))
                _add_into(new_vj, vj, s * (a // g))
                V[i], V[j] = new_vi, new_vj

    if U is None:
        return SmithForm(tuple(diag), (nrows, ncols))
    Umat = IntMatrix(nrows, nrows, U)
    Vmat = IntMatrix(ncols, ncols, V).transpose()
    return SmithForm(tuple(diag), (nrows, ncols), Umat, Vmat)


def rank_rational(A: IntMatrix) -> int:
    """Rank over Q, by exact Gaussian elimination on fractions."""
    rows = [{j: Fraction(v) for j, v in r.items()} for r in A.sparse_rows() if r]
    rank = 0
    while rows:
        # pick the shortest row to limit fill-in
        k = min(range(len(rows)), key=lambda i: len(rows[i]))
        piv_row = rows.pop(k)
        c = min(piv_row)
        p = piv_row[c]
        rank += 1
        rest = []
        for r in rows:
            if c in r:
                f = r[c] / p
                for j, v in piv_row.items():
                    w = r.get(j, 0) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
            if r:
                rest.append(r)
        rows = rest
    return rank


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(A: IntMatrix, p: int) -> int:
    """Rank of ``A`` over the field with ``p`` elements."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    rows = []
    for r in A.sparse_rows():
        r = {j: v % p for j, v in r.items() if v % p}
        if r:
            rows.append(r)
    rank = 0
    while rows:
        piv_row = rows.pop()
        c = min(piv_row)
        inv = pow(piv_row[c], -1, p)
        rank += 1
        rest = []
        for r in rows:
            if c in r:
                f = r[c] * inv % p
                for j, v in piv_row.items():
                    w = (r.get(j, 0) - f * v) % p
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
            if r:
                rest.append(r)
        rows = rest
    return rank


# --------------------------------------------------------------------------
# finitely generated abelian groups


def _chain(factors: Iterable[int]) -> tuple[int, ...]:
    """Invariant-factor chain of Z/f_1 + ... + Z/f_n (factors > 0)."""
    ds = sorted(abs(f) for f in factors)
    if any(d == 0 for d in ds):
        raise NonCanonical("a zero factor is a free summand, pass it as rank")
    n = len(ds)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ds[i], ds[j]
            if b % a:
                g = gcd(a, b)
                ds[i], ds[j] = g, a // g * b
    return tuple(d for d in ds if d != 1)


@dataclass(frozen=True, order=True)
class FinAbGroup:
    """Z^rank + Z/t_1 + ... + Z/t_s with t_1 | t_2 | ... and every t_i >= 2.

    The constructor only accepts canonical data; use :meth:`from_factors`
    for an arbitrary list of cyclic orders.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.rank < 0:
            raise NonCanonical(f"negative rank {self.rank}")
        for i, d in enumerate(t):
            if d < 2:
                raise NonCanonical(f"torsion factor {d} < 2")
            if i and d % t[i - 1]:
                raise NonCanonical(f"torsion {t} is not a divisibility chain")

    @classmethod
    def from_factors(cls, rank: int = 0, factors: Iterable[int] = ()) -> "FinAbGroup":
        return cls(rank, _chain(factors))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def count_divisible(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)

    def render(self, sep: str = " + ") -> str:
        terms = []
        if self.rank == 1:
            terms.append("Z")
        elif self.rank > 1:
            terms.append(f"Z^{self.rank}")
        terms.extend(f"Z/{d}" for d in self.torsion)
        return sep.join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "FinAbGroup") -> "FinAbGroup":
        return group_sum(self, other)

    @classmethod
    def parse(cls, text: str) -> "FinAbGroup":
        text = text.strip()
        if text == "0":
            return cls()
        rank, factors = 0, []
        for term in text.replace(" ", "").split("+"):
            if term == "Z":
                rank += 1
            elif term.startswith("Z^"):
                rank += int(term[2:])
            elif term.startswith("Z/"):
                factors.append(int(term[2:]))
            else:
                raise NonCanonical(f"cannot parse group term {term!r}")
        return cls.from_factors(rank, factors)


TRIVIAL = FinAbGroup()
Z = FinAbGroup(1)


def group_sum(g1: FinAbGroup, g2: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(g1.rank + g2.rank, _chain(g1.torsion + g2.torsion))


def group_eq(g1: FinAbGroup, g2: FinAbGroup) -> bool:
    """Isomorphism test; canonical forms make it structural equality."""
    return g1.rank == g2.rank and g1.torsion == g2.torsion


def torsion(g: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(0, g.torsion)


# --------------------------------------------------------------------------
# homology


def _smith_of(cc, n: int) -> SmithForm | None:
    D = cc.boundary(n)
    if D is None or D.is_zero():
        return None
    return smith(D)


def homology_at(cc, n: int) -> FinAbGroup:
    """H_n of a chain complex: ranks from D_n and D_{n+1}, torsion from the
    invariant factors of D_{n+1} that exceed 1."""
    if not cc.bottom_degree <= n <= cc.top_degree:
        raise DegreeOutOfRange(f"degree {n} outside {cc.bottom_degree}..{cc.top_degree}")
    out = _smith_of(cc, n)
    inc = _smith_of(cc, n + 1)
    r_out = out.rank if out else 0
    r_in = inc.rank if inc else 0
    tors = [d for d in inc.invariant_factors if d > 1] if inc else []
    return FinAbGroup(cc.dim(n) - r_out - r_in, tuple(tors))


def homology(cc) -> list[FinAbGroup]:
    """All homology groups, bottom degree first. Each boundary is reduced once."""
    lo, hi = cc.bottom_degree, cc.top_degree
    forms = {n: _smith_of(cc, n) for n in range(lo + 1, hi + 1)}
    groups = []
    for n in range(lo, hi + 1):
        out, inc = forms.get(n), forms.get(n + 1)
        r_out = out.rank if out else 0
        r_in = inc.rank if inc else 0
        tors = tuple(d for d in inc.invariant_factors if d > 1) if inc else ()
        groups.append(FinAbGroup(cc.dim(n) - r_out - r_in, tors))
    return groups


def mod_p_betti(cc, n: int, p: int) -> int:
    """dim H_n(cc; GF(p)) computed from ranks mod p."""
    def r(k):
        D = cc.boundary(k)
        return rank_mod_p(D, p) if D is not None else 0
    return cc.dim(n) - r(n) - r(n + 1)
