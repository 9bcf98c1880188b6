"""Letterplace encoding of noncommutative data into a commutative window.

A word x_{i1} ... x_{id} maps to the commutative monomial whose variable at
place k is the k-th letter; shifting a module component by s moves its
word to places s+1, s+2, ...  Variables are numbered place-major:
var = (place - 1) * L + letter for an active alphabet of L letters, so that
smaller variable index means earlier place, then earlier letter.  The
engine's degrevlex order reads smaller index as greater variable, matching
the place-major precedence.

The place window has finite width D.  The encoded two-sided ideal is the
set of all place shifts of the encoded relations that fit in the window,
together with the squarefree-per-place monomials that force at most one
letter per place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .freealg import (AlgebraPresentation, NcModElem, NcPoly, Word,
                      homogeneous_degree)

LpMono = Tuple[Tuple[int, int], ...]  # ((var, exp), ...) ascending by var
LpPoly = Dict[LpMono, object]
LpModElem = Dict[Tuple[int, LpMono], object]


class WindowTooSmall(ValueError):
    """Raised when data does not fit in the place window."""


class NotLetterplace(ValueError):
    """Raised when a monomial is not the image of a shifted word."""


@dataclass(frozen=True)
class PlaceWindow:
    names: Tuple[str, ...]  # active alphabet, in variable order
    width: int              # number of places

    @property
    def n_letters(self) -> int:
        return len(self.names)

    @property
    def n_vars(self) -> int:
        return len(self.names) * self.width

    def var(self, place0: int, letter: int) -> int:
        return place0 * len(self.names) + letter

    def var_place0(self, v: int) -> int:
        return v // len(self.names)

    def var_letter(self, v: int) -> int:
        return v % len(self.names)

    def var_str(self, v: int) -> str:
        return f"{self.names[self.var_letter(v)]}{self.var_place0(v) + 1}"

    def mono_str(self, m: LpMono) -> str:
        if not m:
            return "1"
        parts = []
        for v, e in m:
            s = self.var_str(v)
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts)


def iota_word(win: PlaceWindow, w: Word, shift: int = 0) -> LpMono:
    """Encode a word starting at place shift+1."""
    if shift < 0 or shift + len(w) > win.width:
        raise WindowTooSmall(
            f"word of length {len(w)} at shift {shift} exceeds "
            f"window {win.width}")
    L = win.n_letters
    return tuple(((shift + k) * L + a, 1) for k, a in enumerate(w))


def iota_poly(win: PlaceWindow, p: NcPoly, shift: int = 0) -> LpPoly:
    return {iota_word(win, w, shift): c for w, c in p.items()}


def iota_module_elem(win: PlaceWindow, elem: NcModElem,
                     shifts: Sequence[int]) -> LpModElem:
    out: LpModElem = {}
    for (comp, w), c in elem.items():
        out[(comp, iota_word(win, w, shifts[comp]))] = c
    return out


def sigma_shift_mono(win: PlaceWindow, m: LpMono, k: int) -> LpMono:
    L = win.n_letters
    out = tuple((v + k * L, e) for v, e in m)
    if out and (out[0][0] < 0 or win.var_place0(out[-1][0]) >= win.width):
        raise WindowTooSmall(f"shift by {k} leaves the window")
    return out


def sigma_shift(win: PlaceWindow, p: LpPoly, k: int) -> LpPoly:
    return {sigma_shift_mono(win, m, k): c for m, c in p.items()}


def iota_inverse_word(win: PlaceWindow, m: LpMono, shift: int) -> Word:
    """Decode a monomial that should be a word at the given shift."""
    letters = []
    for k, (v, e) in enumerate(m):
        if e != 1:
            raise NotLetterplace(f"exponent {e} on {win.var_str(v)}")
        if win.var_place0(v) != shift + k:
            raise NotLetterplace(
                f"variable {win.var_str(v)} breaks the place run at "
                f"shift {shift}")
        letters.append(win.var_letter(v))
    return tuple(letters)


def iota_inverse_elem(win: PlaceWindow, elem: LpModElem,
                      shifts: Sequence[int]) -> NcModElem:
    out: NcModElem = {}
    for (comp, m), c in elem.items():
        out[(comp, iota_inverse_word(win, m, shifts[comp]))] = c
    return out


def letterplace_ideal_gens(win: PlaceWindow,
                           alg: AlgebraPresentation) -> List[LpPoly]:
    """All window shifts of the encoded relations, then the one-letter-per-
    place monomials.  The alphabet of `alg` must match the window."""
    if alg.names != win.names:
        raise ValueError("algebra alphabet does not match the window")
    gens: List[LpPoly] = []
    for f in alg.relations:
        d = homogeneous_degree(f)
        if d is None:
            raise ValueError("relations must be homogeneous")
        for shift in range(win.width - d + 1):
            gens.append(iota_poly(win, f, shift))
    L = win.n_letters
    for place0 in range(win.width):
        base = place0 * L
        for i in range(L):
            for j in range(i, L):
                if i == j:
                    mono: LpMono = ((base + i, 2),)
                else:
                    mono = ((base + i, 1), (base + j, 1))
                gens.append({mono: alg.field.one})
    return gens


def build_C(win: PlaceWindow, field, gen_degrees: Sequence[int]) -> List[LpModElem]:
    """The block of forced syzygies: component j times any variable at a
    place up to that generator's encoded degree.  These are syzygies of any
    homogeneous generator set with those degrees, because a variable below
    a word's first place collides with every letter of the word."""
    L = win.n_letters
    out: List[LpModElem] = []
    for j, d in enumerate(gen_degrees):
        if d > win.width:
            raise WindowTooSmall(
                f"generator degree {d} exceeds window {win.width}")
        for place0 in range(d):
            for letter in range(L):
                mono: LpMono = ((place0 * L + letter, 1),)
                out.append({(j, mono): field.one})
    return out
