"""Independence alphabets (E, I) and their cliques."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DuplicateGenerator, ParseError, SelfPair, ThomError, UnknownGenerator

Clique = tuple  # generator names, strictly increasing in alphabet order


@dataclass(frozen=True)
class IndependenceAlphabet:
    """Generators in a fixed total order plus the commuting pairs.

    Pairs are stored as name tuples ordered by generator position, so the
    relation is symmetric by construction. Build instances through
    :func:`validate_alphabet`.
    """

    generators: tuple[str, ...]
    commuting_pairs: frozenset[tuple[str, str]]

    @cached_property
    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in self.generators]
        for a, b in self.commuting_pairs:
            i, j = self.index[a], self.index[b]
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    def commute(self, a: str, b: str) -> bool:
        return self.index[b] in self.neighbours[self.index[a]]

    def sorted_pairs(self) -> list[tuple[str, str]]:
        return sorted(self.commuting_pairs, key=lambda p: (self.index[p[0]], self.index[p[1]]))

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        pairs = " ".join(f"{a}{b}" if len(a) == len(b) == 1 else f"{a}~{b}"
                         for a, b in self.sorted_pairs())
        return f"<IndependenceAlphabet {' '.join(self.generators)} | {pairs}>"


def validate_alphabet(names: Iterable[str], pairs: Iterable[Iterable[str]] = ()) -> IndependenceAlphabet:
    names = tuple(str(n) for n in names)
    index = {}
    for i, n in enumerate(names):
        if n in index:
            raise DuplicateGenerator(f"generator {n!r} declared twice")
        index[n] = i
    normalized = set()
    for pair in pairs:
        a, b = (str(x) for x in pair)
        for x in (a, b):
            if x not in index:
                raise UnknownGenerator(f"pair ({a}, {b}) references undeclared generator {x!r}")
        if a == b:
            raise SelfPair(f"pair ({a}, {a}) violates irreflexivity")
        normalized.add((a, b) if index[a] < index[b] else (b, a))
    return IndependenceAlphabet(names, frozenset(normalized))


def cliques(alpha: IndependenceAlphabet, n: int) -> list[Clique]:
    """All n-element pairwise-commuting subsets, in lexicographic order."""
    return list(_clique_levels(alpha, n)[n]) if n <= len(alpha) else []


def _clique_levels(alpha: IndependenceAlphabet, nmax: int) -> list[list[Clique]]:
    gens, nb = alpha.generators, alpha.neighbours
    # each clique carries its index tuple and the set of common later neighbours
    level = [((), frozenset(range(len(gens))))]
    out = [[()]]
    for _ in range(nmax):
        nxt = []
        for idx, cand in level:
            for v in sorted(cand):
                nxt.append((idx + (v,), frozenset(u for u in cand & nb[v] if u > v)))
        level = nxt
        out.append([tuple(gens[i] for i in idx) for idx, _ in level])
        if not level:
            break
    while len(out) <= nmax:
        out.append([])
    return out


def all_cliques(alpha: IndependenceAlphabet) -> list[list[Clique]]:
    """Cliques grouped by size: entry n lists 𝔐_n, up to the clique number."""
    levels = _clique_levels(alpha, len(alpha))
    while len(levels) > 1 and not levels[-1]:
        levels.pop()
    return levels


def clique_number(alpha: IndependenceAlphabet) -> int:
    return len(all_cliques(alpha)) - 1


def components(alpha: IndependenceAlphabet) -> list[tuple[str, ...]]:
    """Connected components of the commutation graph, each in alphabet order,
    listed by their first generator."""
    seen: set[int] = set()
    parts = []
    for start in range(len(alpha)):
        if start in seen:
            continue
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for u in alpha.neighbours[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        parts.append(tuple(alpha.generators[i] for i in sorted(comp)))
    return parts


def restrict(alpha: IndependenceAlphabet, subset: Iterable[str]) -> IndependenceAlphabet:
    subset = set(subset)
    unknown = subset - set(alpha.generators)
    if unknown:
        raise UnknownGenerator(f"cannot restrict to undeclared generators {sorted(unknown)}")
    gens = tuple(g for g in alpha.generators if g in subset)
    pairs = frozenset(p for p in alpha.commuting_pairs if p[0] in subset and p[1] in subset)
    return IndependenceAlphabet(gens, pairs)


def disjoint_union(alphas: Iterable[IndependenceAlphabet]) -> IndependenceAlphabet:
    gens: list[str] = []
    pairs: set[tuple[str, str]] = set()
    for a in alphas:
        gens.extend(a.generators)
        pairs |= a.commuting_pairs
    return validate_alphabet(gens, pairs)


def permuted(alpha: IndependenceAlphabet, order: Iterable[str]) -> IndependenceAlphabet:
    """Same relation, generators declared in ``order``."""
    order = list(order)
    if sorted(order) != sorted(alpha.generators):
        raise UnknownGenerator("permutation must list every generator exactly once")
    return validate_alphabet(order, alpha.commuting_pairs)


# --------------------------------------------------------------------------
# text format


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_alphabet(text: str) -> IndependenceAlphabet:
    """Parse ``generators: ...`` / ``commute: a b`` statements."""
    names = None
    pairs = []
    for lineno, line in _statements(text):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(lineno, f"expected 'key: values', got {line!r}")
        toks = rest.split()
        if key == "generators":
            if names is not None:
                raise ParseError(lineno, "second 'generators:' statement")
            names = toks
        elif key == "commute":
            if len(toks) != 2:
                raise ParseError(lineno, f"'commute:' takes two generators, got {len(toks)}")
            pairs.append((lineno, toks))
        else:
            raise ParseError(lineno, f"unknown statement {key!r}")
    if names is None:
        raise ParseError(0, "missing 'generators:' statement")
    validate_alphabet(names)
    for lineno, toks in pairs:
        try:
            validate_alphabet(names, [toks])
        except ThomError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return validate_alphabet(names, [t for _, t in pairs])


def serialize_alphabet(alpha: IndependenceAlphabet) -> str:
    lines = ["generators: " + " ".join(alpha.generators)]
    lines += [f"commute: {a} {b}" for a, b in alpha.sorted_pairs()]
    return "\n".join(lines) + "\n"
