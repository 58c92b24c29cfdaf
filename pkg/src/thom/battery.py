"""Versioned manifest of the standard test alphabets."""
from __future__ import annotations

from functools import lru_cache

from .alphabet import IndependenceAlphabet, validate_alphabet
from .errors import UnknownName
from .simplicial import barycentric_subdivision, builtin, to_alphabet

BATTERY_VERSION = "1"

# name -> (generators, commuting pairs); RP2 is derived below
_SPECS = {
    "A1": ("a b", ["a b"]),
    "A2": ("a b", []),
    "A3": ("a b c", ["a b"]),
    "C4": ("a b c d", ["a b", "b c", "c d", "a d"]),
    "K4": ("a b c d", ["a b", "a c", "a d", "b c", "b d", "c d"]),
}

BATTERY = ("A1", "A2", "A3", "C4", "K4", "RP2")


@lru_cache(maxsize=None)
def battery_alphabet(name: str) -> IndependenceAlphabet:
    """A battery alphabet by name. ``RP2`` is the flag complex of the
    barycentric subdivision of the 6-vertex projective plane, read back as
    an alphabet (31 generators)."""
    if name == "RP2":
        return to_alphabet(barycentric_subdivision(builtin("rp2_min")))
    if name == "EMPTY":
        return validate_alphabet([])
    try:
        gens, pairs = _SPECS[name]
    except KeyError:
        raise UnknownName(f"no battery alphabet {name!r}; choose from {', '.join(BATTERY)}") from None
    return validate_alphabet(gens.split(), [p.split() for p in pairs])
