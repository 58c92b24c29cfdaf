"""Theorem harness.

Each ``check_*`` function computes both sides of a decomposition statement
on one concrete alphabet and records, degree by degree, whether the two
finitely generated abelian groups are isomorphic. Isomorphism is decided by
comparing canonical forms.

Conventions used throughout: H_k(X) is the unreduced homology of the
pointed set (the base point is an ordinary object), and the homology of the
simplicial scheme is the reduced homology of the clique complex of the
commutation graph.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Sequence

from .action import chain_set, restrict_action
from .alphabet import IndependenceAlphabet, disjoint_union
from .complex import kset_complex
from .errors import NameClash
from .intlinalg import FinAbGroup, group_eq, group_sum, homology, torsion
from .simplicial import clique_complex, reduced_homology

ZERO = FinAbGroup()

CONVENTION_NOTE = ("H_k(X) unreduced; simplicial-scheme homology read as reduced "
                   "homology of the clique complex")


@dataclass(frozen=True)
class DegreeRecord:
    k: int
    lhs: FinAbGroup
    rhs: FinAbGroup
    passed: bool
    m: int | None = None


@dataclass
class TheoremReport:
    theorem: str
    alphabet: str
    params: dict = field(default_factory=dict)
    records: list[DegreeRecord] = field(default_factory=list)
    asserted: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def machine_lines(self) -> list[str]:
        """``THM1 alpha=A2 m=-1 k=1 lhs=Z^3 rhs=Z^3 pass=1``; group terms are
        joined by '+' without spaces so every field stays one token."""
        lines = []
        for r in self.records:
            fields = [self.theorem, f"alpha={self.alphabet}"]
            params = dict(self.params)
            if r.m is not None:
                params["m"] = r.m
            fields += [f"{k}={v}" for k, v in params.items()]
            fields += [f"k={r.k}", f"lhs={r.lhs.render('+')}", f"rhs={r.rhs.render('+')}",
                       f"pass={int(r.passed)}"]
            lines.append(" ".join(fields))
        return lines

    def text(self) -> str:
        head = " ".join([self.theorem, f"alpha={self.alphabet}"]
                        + [f"{k}={v}" for k, v in self.params.items()])
        rows = [("m", "k", "lhs", "rhs", "pass")]
        for r in self.records:
            rows.append(("" if r.m is None else str(r.m), str(r.k), str(r.lhs), str(r.rhs),
                         "yes" if r.passed else "NO"))
        if all(r.m is None for r in self.records):
            rows = [row[1:] for row in rows]
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        body = ["  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        verdict = "PASS" if self.passed else "FAIL"
        if not self.asserted:
            verdict += " (informational, not asserted)"
        tail = [f"  note: {n}" for n in self.notes]
        return "\n".join([head, *body, f"  overall: {verdict}", *tail])


@lru_cache(maxsize=256)
def chain_homology(alpha: IndependenceAlphabet, m: int, variant: str = "unreduced") -> tuple[FinAbGroup, ...]:
    """H_0 .. H_top of the chain set X_m over ``alpha`` (top = clique number)."""
    return tuple(homology(kset_complex(chain_set(alpha, m), variant=variant)))


def H(alpha: IndependenceAlphabet, m: int, k: int, variant: str = "unreduced") -> FinAbGroup:
    groups = chain_homology(alpha, m, variant)
    return groups[k] if 0 <= k < len(groups) else ZERO


@lru_cache(maxsize=64)
def _clique_reduced(alpha: IndependenceAlphabet) -> tuple[FinAbGroup, ...]:
    return tuple(reduced_homology(clique_complex(alpha)))


def clique_reduced_homology(alpha: IndependenceAlphabet, k: int) -> FinAbGroup:
    groups = _clique_reduced(alpha)
    return groups[k] if 0 <= k < len(groups) else ZERO


def _name(alpha: IndependenceAlphabet, name: str | None) -> str:
    return name if name is not None else "{" + ",".join(alpha.generators) + "}"


def check_thm1(alpha: IndependenceAlphabet, m: int, kmax: int = 3, name: str | None = None) -> TheoremReport:
    """H_k(X_{m+1}) = H_k(X_m) + H~_{k-1}(clique complex) for k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    rep = TheoremReport("THM1", _name(alpha, name), {"m": m}, notes=[CONVENTION_NOTE])
    for k in range(1, kmax + 1):
        lhs = H(alpha, m + 1, k)
        rhs = group_sum(H(alpha, m, k), clique_reduced_homology(alpha, k - 1))
        rep.records.append(DegreeRecord(k, lhs, rhs, group_eq(lhs, rhs)))
    return rep


def check_corollary(alpha: IndependenceAlphabet, m: int, kmax: int = 3, name: str | None = None) -> TheoremReport:
    """Tor H_k(X_{m+1}) = Tor H_k(X_m) + Tor H_k(X_0) for k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    rep = TheoremReport("COR", _name(alpha, name), {"m": m}, notes=[CONVENTION_NOTE])
    for k in range(1, kmax + 1):
        lhs = torsion(H(alpha, m + 1, k))
        rhs = group_sum(torsion(H(alpha, m, k)), torsion(H(alpha, 0, k)))
        rep.records.append(DegreeRecord(k, lhs, rhs, group_eq(lhs, rhs)))
    return rep


def check_thm2(alpha: IndependenceAlphabet, mmax: int = 3, name: str | None = None) -> TheoremReport:
    """Tor H_1(X_m) is trivial for m = -1..mmax."""
    rep = TheoremReport("THM2", _name(alpha, name), {"mmax": mmax}, notes=[CONVENTION_NOTE])
    for m in range(-1, mmax + 1):
        lhs = torsion(H(alpha, m, 1))
        rep.records.append(DegreeRecord(1, lhs, ZERO, group_eq(lhs, ZERO), m=m))
    return rep


def check_iterated_torsion(alpha: IndependenceAlphabet, mmax: int = 2, kmax: int = 3,
                           name: str | None = None) -> TheoremReport:
    """Tor H_k(X_m) = (m+1) copies of Tor H~_{k-1}(clique complex)."""
    rep = TheoremReport("ITER", _name(alpha, name), {"mmax": mmax}, notes=[CONVENTION_NOTE])
    for m in range(-1, mmax + 1):
        for k in range(1, kmax + 1):
            lhs = torsion(H(alpha, m, k))
            t = torsion(clique_reduced_homology(alpha, k - 1))
            rhs = reduce(group_sum, [t] * (m + 1), ZERO)
            rep.records.append(DegreeRecord(k, lhs, rhs, group_eq(lhs, rhs), m=m))
    return rep


def check_thm3(component_alphas: Sequence[IndependenceAlphabet], n: int, kmax: int = 2,
               name: str | None = None) -> TheoremReport:
    """Compare H_k of the uniform chain set X_n over the disjoint union of the
    components with the direct sum over the components, for k = 1..kmax.

    The report is evidence only: ``asserted`` is False and a mismatch is a
    recorded outcome, not an error.
    """
    seen: dict[str, int] = {}
    for i, a in enumerate(component_alphas):
        for g in a.generators:
            if g in seen:
                raise NameClash(f"generator {g!r} appears in components {seen[g]} and {i}")
            seen[g] = i
    union = disjoint_union(component_alphas)
    big = chain_set(union, n)
    lhs_groups = homology(kset_complex(big))
    rhs_groups = [homology(kset_complex(restrict_action(big, a))) for a in component_alphas]

    def at(groups, k):
        return groups[k] if k < len(groups) else ZERO

    label = name if name is not None else "+".join(_name(a, None) for a in component_alphas)
    rep = TheoremReport("THM3", label, {"n": n}, asserted=False, notes=[CONVENTION_NOTE])
    for k in range(1, kmax + 1):
        lhs = at(lhs_groups, k)
        rhs = reduce(group_sum, (at(g, k) for g in rhs_groups), ZERO)
        rep.records.append(DegreeRecord(k, lhs, rhs, group_eq(lhs, rhs)))
    if not rep.passed:
        rep.notes.append("direct-sum decomposition does not hold on this instance")
    return rep


# --------------------------------------------------------------------------
# battery runs


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("THOM_THREADS", "1")))
    except ValueError:
        return 1


def _run_cell(cell):
    fn, name, args = cell
    from .battery import battery_alphabet
    return fn(battery_alphabet(name), *args, name=name)


def run_battery(theorem: str, names: Sequence[str] | None = None, ms: Sequence[int] = (-1, 0, 1, 2),
                kmax: int = 3, mmax: int = 3, workers: int | None = None) -> list[TheoremReport]:
    """Run one check over battery alphabets; cells may run in worker
    processes (``THOM_THREADS``) but reports come back in input order."""
    from .battery import BATTERY
    names = list(names or BATTERY)
    if theorem == "thm1":
        cells = [(check_thm1, nm, (m, kmax)) for nm in names for m in ms]
    elif theorem == "corollary":
        cells = [(check_corollary, nm, (m, kmax)) for nm in names for m in ms]
    elif theorem == "thm2":
        cells = [(check_thm2, nm, (mmax,)) for nm in names]
    elif theorem == "iter":
        cells = [(check_iterated_torsion, nm, (max(ms), kmax)) for nm in names]
    else:
        raise ValueError(f"no battery run for {theorem!r}")
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return [_run_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_cell, cells))
