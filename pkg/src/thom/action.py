"""Finite pointed right M(E,I)-sets given by per-generator transition tables."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .alphabet import IndependenceAlphabet, _statements, restrict
from .errors import (
    BaseMoved,
    CommutationViolation,
    DuplicateElement,
    DuplicateEntry,
    MissingEntry,
    NotASubAlphabet,
    ParseError,
    UnknownElement,
    UnknownGenerator,
)

BASE_NAME = "*"


@dataclass(frozen=True)
class PointedAction:
    """A pointed set with a right action of M(E,I).

    ``table[i][j]`` is the index of ``elements[i] · generators[j]``. The
    dataclass itself does not check the action laws; :func:`validate_action`
    does.
    """

    alphabet: IndependenceAlphabet
    elements: tuple[str, ...]
    base: str
    table: tuple[tuple[int, ...], ...]

    @cached_property
    def element_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def act(self, x: str, e: str) -> str:
        return self.elements[self.table[self.element_index[x]][self.alphabet.index[e]]]

    def act_word(self, x: str, word: Iterable[str]) -> str:
        for e in word:
            x = self.act(x, e)
        return x

    def entries(self) -> list[tuple[str, str, str]]:
        return [(x, e, self.act(x, e)) for x in self.elements for e in self.alphabet.generators]

    @property
    def non_base(self) -> tuple[str, ...]:
        return tuple(x for x in self.elements if x != self.base)

    def ordered_elements(self) -> tuple[str, ...]:
        """Declaration order with the base point moved last."""
        return self.non_base + (self.base,)


def validate_action(
    alpha: IndependenceAlphabet,
    elements: Sequence[str],
    base: str,
    entries: Iterable[tuple[str, str, str]],
    *,
    check_laws: bool = True,
) -> PointedAction:
    """Build an action from ``(x, e, y)`` triples meaning ``x · e = y``.

    Entries for the base point may be omitted; they default to ``base``.
    With ``check_laws=False`` only totality and name resolution are checked,
    which is how deliberately broken actions are built for testing.
    """
    elements = tuple(str(x) for x in elements)
    eidx: dict[str, int] = {}
    for i, x in enumerate(elements):
        if x in eidx:
            raise DuplicateElement(f"element {x!r} declared twice")
        eidx[x] = i
    if base not in eidx:
        raise UnknownElement(f"base point {base!r} is not a declared element")
    gidx = alpha.index
    table: dict[tuple[int, int], int] = {}
    for x, e, y in entries:
        for z in (x, y):
            if z not in eidx:
                raise UnknownElement(f"entry {x}.{e} = {y} uses undeclared element {z!r}")
        if e not in gidx:
            raise UnknownGenerator(f"entry {x}.{e} = {y} uses undeclared generator {e!r}")
        key = (eidx[x], gidx[e])
        if key in table and table[key] != eidx[y]:
            raise DuplicateEntry(
                f"{x}.{e} given as both {elements[table[key]]} and {y}")
        table[key] = eidx[y]

    b = eidx[base]
    for j, e in enumerate(alpha.generators):
        table.setdefault((b, j), b)
        if check_laws and table[(b, j)] != b:
            raise BaseMoved(f"base point moved: {base}.{e} = {elements[table[(b, j)]]}")
    rows = []
    for i, x in enumerate(elements):
        row = []
        for j, e in enumerate(alpha.generators):
            if (i, j) not in table:
                raise MissingEntry(f"no entry for {x}.{e}")
            row.append(table[(i, j)])
        rows.append(tuple(row))
    action = PointedAction(alpha, elements, base, tuple(rows))
    if check_laws:
        check_commutation(action)
    return action


def check_commutation(action: PointedAction) -> None:
    """Raise CommutationViolation unless x·e·f = x·f·e for each commuting e, f."""
    t = action.table
    idx = action.alphabet.index
    for e, f in action.alphabet.sorted_pairs():
        i, j = idx[e], idx[f]
        for k, x in enumerate(action.elements):
            ef, fe = t[t[k][i]][j], t[t[k][j]][i]
            if ef != fe:
                raise CommutationViolation(x, e, f, action.elements[ef], action.elements[fe])


def chain_set(alpha: IndependenceAlphabet, n: int) -> PointedAction:
    """The set {x_0, ..., x_n, *} where every generator sends x_i to x_{i+1}
    and x_n to the base point; ``n = -1`` gives the one-point set."""
    if n < -1:
        raise ValueError(f"chain length must be >= -1, got {n}")
    elements = tuple(f"x{i}" for i in range(n + 1)) + (BASE_NAME,)
    g = len(alpha.generators)
    rows = tuple((i + 1,) * g for i in range(n + 1)) + ((n + 1,) * g,)
    return PointedAction(alpha, elements, BASE_NAME, rows)


def restrict_action(action: PointedAction, sub: IndependenceAlphabet) -> PointedAction:
    full = action.alphabet
    missing = [g for g in sub.generators if g not in full.index]
    if missing or restrict(full, sub.generators) != sub:
        raise NotASubAlphabet(
            "restriction target is not an induced sub-alphabet"
            + (f" (unknown generators {missing})" if missing else ""))
    cols = [full.index[g] for g in sub.generators]
    rows = tuple(tuple(r[j] for j in cols) for r in action.table)
    return PointedAction(sub, action.elements, action.base, rows)


# --------------------------------------------------------------------------
# text format


def parse_action(text: str, alpha: IndependenceAlphabet) -> PointedAction:
    elements = None
    base = None
    entries = []
    for lineno, line in _statements(text):
        toks = line.split()
        head = toks[0]
        if head == "elements:":
            if elements is not None:
                raise ParseError(lineno, "second 'elements:' statement")
            elements = toks[1:]
        elif head == "base:":
            if len(toks) != 2:
                raise ParseError(lineno, "'base:' takes exactly one element")
            base = toks[1]
        elif head == "act":
            if len(toks) != 4:
                raise ParseError(lineno, "expected 'act <element> <generator> <element>'")
            entries.append(tuple(toks[1:]))
        else:
            raise ParseError(lineno, f"unknown statement {head!r}")
    if elements is None:
        raise ParseError(0, "missing 'elements:' statement")
    if base is None:
        if BASE_NAME not in elements:
            raise ParseError(0, "missing 'base:' statement")
        base = BASE_NAME
    return validate_action(alpha, elements, base, entries)


def serialize_action(action: PointedAction) -> str:
    """Canonical text: declared elements, base, then one line per non-base
    (element, generator) in declaration order."""
    lines = ["elements: " + " ".join(action.elements), f"base: {action.base}"]
    for x in action.non_base:
        for e in action.alphabet.generators:
            lines.append(f"act {x} {e} {action.act(x, e)}")
    return "\n".join(lines) + "\n"
