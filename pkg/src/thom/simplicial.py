"""Finite abstract simplicial complexes, clique complexes and subdivision."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable

from .alphabet import IndependenceAlphabet, _statements, all_cliques, validate_alphabet
from .errors import EmptyComplex, NotFlag, ParseError, UnknownName, UnknownVertex
from .intlinalg import FinAbGroup

Face = tuple  # vertex names in vertex order


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices in a fixed order and the maximal faces (an antichain).

    Isolated vertices appear as singleton maximal faces. Use
    :func:`make_complex` to build one from an arbitrary generating face list.
    """

    vertices: tuple[str, ...]
    maximal_faces: tuple[Face, ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _faces_by_size(self) -> list[list[Face]]:
        if not self.vertices:
            return [[]]
        idx = self.index
        top = max(len(f) for f in self.maximal_faces)
        levels: list[set[tuple[int, ...]]] = [set() for _ in range(top + 1)]
        for f in self.maximal_faces:
            fi = tuple(idx[v] for v in f)
            for k in range(len(fi) + 1):
                levels[k].update(combinations(fi, k))
        return [[tuple(self.vertices[i] for i in s) for s in sorted(lv)] for lv in levels]

    @property
    def dimension(self) -> int:
        return len(self._faces_by_size) - 2

    def face_counts(self) -> list[int]:
        """Number of faces with 1, 2, 3, ... vertices."""
        return [len(lv) for lv in self._faces_by_size[1:]]

    def __repr__(self) -> str:
        counts = "/".join(map(str, self.face_counts()))
        return f"<SimplicialComplex {len(self.vertices)} vertices, faces {counts}>"


def make_complex(vertices: Iterable[str], faces: Iterable[Iterable[str]] = ()) -> SimplicialComplex:
    vertices = tuple(vertices)
    idx = {v: i for i, v in enumerate(vertices)}
    if len(idx) != len(vertices):
        raise UnknownVertex("duplicate vertex names")
    sets = set()
    for f in faces:
        f = frozenset(f)
        for v in f:
            if v not in idx:
                raise UnknownVertex(f"face uses undeclared vertex {v!r}")
        if f:
            sets.add(f)
    covered = set().union(*sets) if sets else set()
    sets |= {frozenset([v]) for v in vertices if v not in covered}
    maximal = [f for f in sets if not any(f < g for g in sets)]
    ordered = sorted(tuple(sorted(idx[v] for v in f)) for f in maximal)
    return SimplicialComplex(vertices, tuple(tuple(vertices[i] for i in f) for f in ordered))


def faces(sc: SimplicialComplex, k: int) -> list[Face]:
    """All k-vertex faces in lexicographic vertex order; ``[()]`` for k = 0
    on a nonempty complex."""
    levels = sc._faces_by_size
    return list(levels[k]) if k < len(levels) else []


def clique_complex(alpha: IndependenceAlphabet) -> SimplicialComplex:
    levels = all_cliques(alpha)
    nb = alpha.neighbours
    idx = alpha.index
    maximal = []
    for level in levels[1:]:
        for c in level:
            common = set(range(len(alpha))) - {idx[v] for v in c}
            for v in c:
                common &= nb[idx[v]]
            if not common:
                maximal.append(c)
    maximal.sort(key=lambda c: [idx[v] for v in c])
    return SimplicialComplex(alpha.generators, tuple(maximal))


def one_skeleton_alphabet(sc: SimplicialComplex) -> IndependenceAlphabet:
    return validate_alphabet(sc.vertices, faces(sc, 2))


def is_flag(sc: SimplicialComplex) -> bool:
    return clique_complex(one_skeleton_alphabet(sc)) == sc


def to_alphabet(sc: SimplicialComplex) -> IndependenceAlphabet:
    if not is_flag(sc):
        raise NotFlag("complex is not the clique complex of its 1-skeleton")
    return one_skeleton_alphabet(sc)


def face_name(face: Face) -> str:
    return ".".join(face)


def barycentric_subdivision(sc: SimplicialComplex) -> SimplicialComplex:
    """Vertices are the nonempty faces (named by joining their vertices with
    '.'), simplices are chains under strict inclusion."""
    if not sc.vertices:
        raise EmptyComplex("cannot subdivide the empty complex")
    all_faces = [f for k in range(1, sc.dimension + 2) for f in faces(sc, k)]
    names = [face_name(f) for f in all_faces]
    chains = set()
    idx = sc.index
    for top in sc.maximal_faces:
        for perm in permutations(top):
            chain = frozenset(face_name(tuple(sorted(perm[:i], key=idx.__getitem__)))
                              for i in range(1, len(perm) + 1))
            chains.add(chain)
    return make_complex(names, chains)


# 6-vertex triangulation of RP^2 (the hemi-icosahedron)
_RP2_FACES = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
]

_BUILTINS = {
    "delta2": (["1", "2", "3"], [("1", "2", "3")]),
    "hollow_triangle": (["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")]),
    "cycle4": (["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]),
    "two_points": (["1", "2"], []),
    "rp2_min": ([str(i) for i in range(1, 7)], [tuple(map(str, f)) for f in _RP2_FACES]),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> SimplicialComplex:
    try:
        vertices, fs = _BUILTINS[name]
    except KeyError:
        raise UnknownName(f"no builtin complex {name!r}; choose from {', '.join(_BUILTINS)}") from None
    return make_complex(vertices, fs)


def reduced_homology(sc: SimplicialComplex, kmax: int | None = None) -> list[FinAbGroup]:
    """Reduced homology H~_0 .. H~_kmax from the augmented chain complex."""
    from .complex import simplicial_chain_complex
    from .intlinalg import homology

    if kmax is None:
        kmax = max(sc.dimension, 0)
    if not sc.vertices:
        return [FinAbGroup() for _ in range(kmax + 1)]
    groups = homology(simplicial_chain_complex(sc, augmented=True))[1:]
    groups += [FinAbGroup()] * (kmax + 1 - len(groups))
    return groups[: kmax + 1]


def euler_characteristic(sc: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(sc.face_counts()))


# --------------------------------------------------------------------------
# text format


def parse_complex(text: str) -> SimplicialComplex:
    vertices = None
    fs = []
    for lineno, line in _statements(text):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(lineno, f"expected 'key: values', got {line!r}")
        if key == "vertices":
            if vertices is not None:
                raise ParseError(lineno, "second 'vertices:' statement")
            vertices = rest.split()
        elif key == "face":
            if not rest.split():
                raise ParseError(lineno, "empty face")
            fs.append((lineno, rest.split()))
        else:
            raise ParseError(lineno, f"unknown statement {key!r}")
    if vertices is None:
        raise ParseError(0, "missing 'vertices:' statement")
    known = set(vertices)
    for lineno, f in fs:
        for v in f:
            if v not in known:
                raise UnknownVertex(f"line {lineno}: face uses undeclared vertex {v!r}")
    return make_complex(vertices, [f for _, f in fs])


def serialize_complex(sc: SimplicialComplex) -> str:
    lines = ["vertices: " + " ".join(sc.vertices)]
    lines += ["face: " + " ".join(f) for f in sc.maximal_faces if len(f) > 1]
    return "\n".join(lines) + "\n"
