"""Minimal graded free right resolutions, one syzygy step at a time.

A step takes the current minimal generators g_1..g_s of a submodule of
(+)_i A(-delta_i), makes every component shift zero by prefixing the
reserved letter (complete homogenization), encodes words into the
one-letter-per-place window, divides out the common reserved-letter
prefix, computes syzygies of the encoded family over the encoded quotient
ring, strips the forced block coming from the encoding, and decodes the
survivors back over the original algebra.

Decoded output is canonical: within each degree the emitted generators
are the reduced-row-echelon basis of the stair subspace (syzygies whose
coefficients are plain reserved-letter-free words) modulo the part
already generated by the forced block and lower-degree output.  Both
spaces are intrinsic to the module data, so the result is independent of
whether the prefix compression ran.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .engine import Poly as LpPoly
from .engine import RingGB, mono_div, mono_mul
from .freealg import (AlgebraPresentation, ModulePresentation, NcModElem,
                      elem_degree, homogeneous_degree, validate_presentation)
from .homog import HomogenizationContext, eta_apply, homogenization_context
from .letterplace import (LpModElem, PlaceWindow, WindowTooSmall, build_C,
                          iota_inverse_word, iota_module_elem,
                          letterplace_ideal_gens)
from .linalg import _eliminate, rref
from .syzygy import (ModuleGB, elem_sdeg, minimalize_graded,
                     syzygies_over_quotient)

STAIR_GUARD = 10_000


def monomial_degree_bound(max_gen_degree: int, max_rel_degree: int,
                          index: int) -> int:
    """Largest degree where level-`index` syzygy generators can live over
    a monomial presentation (level 1 being the module's own generators)."""
    if index < 1:
        raise ValueError("homological index starts at 1")
    return max_gen_degree + (index - 1) * (max_rel_degree - 1)


def tshift_compress(win: PlaceWindow, elems: Sequence[LpModElem],
                    delta: Sequence[int]):
    """Divide the common homogenization prefix out of an encoded basis.

    With m = min(delta) and complete homogenization already applied, every
    encoded monomial carries the reserved last letter at places 1..m.
    Divide that block out and slide all variables m places left.  Returns
    (window narrowed by m, compressed elements, m).
    """
    m = min(delta) if delta else 0
    if m <= 0:
        return win, [dict(e) for e in elems], 0
    L = win.n_letters
    t = L - 1
    block = tuple((p * L + t, 1) for p in range(m))
    drop = m * L
    out = []
    for e in elems:
        ne: LpModElem = {}
        for (comp, mono), c in e.items():
            q = mono_div(mono, block)
            if q is None:
                raise AssertionError(
                    "compression prefix missing; homogenization is broken")
            if q and q[0][0] < drop:
                raise AssertionError(
                    "stray variable below the compression offset")
            ne[(comp, tuple((v - drop, x) for v, x in q))] = c
        out.append(ne)
    return PlaceWindow(win.names, win.width - m), out, m


@dataclass
class _StepEncoding:
    """Everything the commutative side needs for one syzygy step."""
    ctx: Optional[HomogenizationContext]
    win: PlaceWindow
    offset: int
    gens_lp: List[LpModElem]
    gen_degrees: List[int]  # compressed encoded degrees
    ideal_gens: List[LpPoly]
    ring: RingGB
    n_base: int  # letters of the original algebra (reserved one excluded)


def _encode_step(alg: AlgebraPresentation, ambient_shifts: Sequence[int],
                 gens: Sequence[NcModElem], window: int,
                 use_tshift: bool) -> _StepEncoding:
    degs = []
    for g in gens:
        d = elem_degree(ambient_shifts, g)
        if d is None:
            raise ValueError("generators must be homogeneous")
        degs.append(d)
    if degs and max(degs) > window:
        raise WindowTooSmall(
            f"generator degree {max(degs)} exceeds degree bound {window}")
    need_t = any(s > 0 for s in ambient_shifts)
    if need_t:
        ctx: Optional[HomogenizationContext] = homogenization_context(
            alg, list(ambient_shifts))
        hgens = [eta_apply(ctx, g) for g in gens]
        active = ctx.extended
    else:
        ctx = None
        hgens = [dict(g) for g in gens]
        active = alg
    win = PlaceWindow(active.names, window)
    zero_shifts = [0] * len(ambient_shifts)
    lp = [iota_module_elem(win, g, zero_shifts) for g in hgens]
    if use_tshift and need_t:
        win, lp, m = tshift_compress(win, lp, list(ambient_shifts))
    else:
        m = 0
    ideal = letterplace_ideal_gens(win, active)
    ring = RingGB(alg.field, ideal, cap=win.width)
    return _StepEncoding(ctx, win, m, lp, [d - m for d in degs], ideal, ring,
                         alg.n_letters)


def _check_forced_block(enc: _StepEncoding, block: Sequence[LpModElem],
                        field) -> None:
    """Every forced-block element must be an actual syzygy: a variable at
    a place at or below a generator's word run collides with it."""
    for elem in block:
        j, mono = next(iter(elem))
        image: Dict[int, LpPoly] = {}
        for (comp, gm), c in enc.gens_lp[j].items():
            poly = image.setdefault(comp, {})
            key = mono_mul(gm, mono)
            poly[key] = field.add(poly.get(key, field.zero), c)
        for poly in image.values():
            if enc.ring.normal_form(poly):
                raise AssertionError(
                    "forced-block element is not a syzygy; encoding broken")


def _stair_frame(enc: _StepEncoding, degree: int) -> List[Tuple[int, tuple]]:
    """Coordinate frame for degree-`degree` syzygies whose coefficients
    are plain words: pairs (component j, encoded normal word of length
    degree - deg_j over the original letters, starting after the
    generator's places)."""
    frame: List[Tuple[int, tuple]] = []
    L = enc.win.n_letters
    total = 0
    for j, dj in enumerate(enc.gen_degrees):
        k = degree - dj
        if k < 0 or degree > enc.win.width:
            continue
        total += enc.n_base ** k
        if total > STAIR_GUARD:
            raise RuntimeError(
                f"stair frame beyond {STAIR_GUARD} columns at degree "
                f"{degree}; this instance is out of desk scale")
        for u in itertools.product(range(enc.n_base), repeat=k):
            mono = tuple(((dj + p) * L + a, 1) for p, a in enumerate(u))
            if enc.ring._find(mono) is None:
                frame.append((j, mono))
    return frame


def _frame_kernel(field, images: Sequence[dict]):
    """RREF basis of {w : sum_s w_s * images[s] = 0} in frame coordinates.

    Augment each image row with a unit tag, eliminate with image columns
    first; surviving rows supported on tags alone are the kernel.
    """
    rows = []
    for pos, img in enumerate(images):
        row = {(0, key): c for key, c in img.items()}
        row[(1, pos)] = field.one
        rows.append(row)
    basis = _eliminate(rows, field, col_key=lambda c: c)
    kernel = [{key[1]: c for key, c in row.items()}
              for piv, row in basis.items() if piv[0] == 1]
    return rref(kernel, field)


def _ev_image(enc: _StepEncoding, field, j: int, mono: tuple) -> dict:
    """Image of the frame vector e_j * mono under evaluation against the
    encoded generators, in normal-form coordinates."""
    acc: Dict[int, LpPoly] = {}
    for (comp, gm), c in enc.gens_lp[j].items():
        poly = acc.setdefault(comp, {})
        key = mono_mul(gm, mono)
        s = field.add(poly.get(key, field.zero), c)
        if s == field.zero:
            poly.pop(key, None)
        else:
            poly[key] = s
    out = {}
    for comp, poly in acc.items():
        for m, c in enc.ring.normal_form(poly).items():
            out[(comp, m)] = c
    return out


@dataclass
class ResolutionStep:
    index: int
    ambient_shifts: List[int]
    window: int
    offset: int
    homogenized: bool
    generators: List[NcModElem]
    degrees: List[int]
    betti: Dict[int, int]
    betti_with_block: Dict[int, int]
    betti_block: Dict[int, int]
    certified: Optional[bool] = None


def syzygy_step(alg: AlgebraPresentation, ambient_shifts: Sequence[int],
                gens: Sequence[NcModElem], window: int,
                use_tshift: bool = True, index: int = 1) -> ResolutionStep:
    """One level of the resolution: the minimal syzygies (complete through
    `window`) of a minimal homogeneous generating family."""
    field = alg.field
    enc = _encode_step(alg, ambient_shifts, gens, window, use_tshift)
    W = enc.win.width
    rank = len(ambient_shifts)
    raw = syzygies_over_quotient(field, enc.gens_lp, [0] * rank,
                                 enc.ideal_gens, cap=W, ring=enc.ring)
    block = build_C(enc.win, field, enc.gen_degrees)
    _check_forced_block(enc, block, field)
    candidates = block + raw.generators
    kept = minimalize_graded(field, candidates, enc.ideal_gens,
                             enc.gen_degrees,
                             preferred=set(range(len(block))),
                             ring=enc.ring)
    kept_block = [i for i in kept if i < len(block)]
    if len(kept_block) != len(block):
        raise AssertionError("preferred block dropped without an abort")
    kept_rest = [candidates[i] for i in kept if i >= len(block)]

    deg_of = lambda e: elem_sdeg(enc.gen_degrees, e)
    hist_block = Counter(deg_of(block[i]) for i in kept_block)
    hist_rest = Counter(deg_of(e) for e in kept_rest)
    expected_block: Counter = Counter()
    n_active = enc.win.n_letters
    for dj in enc.gen_degrees:
        if dj:
            expected_block[dj + 1] += n_active * dj
    if +hist_block != +expected_block:
        raise AssertionError("forced-block degree histogram is off")

    # canonical representatives, degree by degree
    by_degree: Dict[int, int] = dict(hist_rest)
    gb_old = ModuleGB(field, enc.gen_degrees, enc.ring, cap=W)
    for e in block:
        gb_old.add_generator(e)
    out_elems: List[NcModElem] = []
    out_degrees: List[int] = []
    one = field.one
    for d in sorted(by_degree):
        gb_old.complete_to(d)
        frame = _stair_frame(enc, d)
        ev_rows, ev_piv = _frame_kernel(
            field, [_ev_image(enc, field, j, mono) for j, mono in frame])
        old_rows, old_piv = _frame_kernel(
            field, [gb_old.normal_form({(j, mono): one})
                    for j, mono in frame])
        stale = set(old_piv)
        fresh = [row for row, piv in zip(ev_rows, ev_piv)
                 if piv not in stale]
        if len(fresh) != by_degree[d]:
            raise AssertionError(
                f"stair frame at degree {d} yields {len(fresh)} new "
                f"generators, minimalization says {by_degree[d]}")
        for row in fresh:
            lp_elem = {frame[pos]: c for pos, c in row.items()}
            gb_old._install(dict(lp_elem), None)
            nc = {(j, iota_inverse_word(enc.win, mono, enc.gen_degrees[j])): c
                  for (j, mono), c in lp_elem.items()}
            out_elems.append(nc)
            out_degrees.append(d + enc.offset)

    restore = lambda h: {d + enc.offset: v for d, v in h.items() if v}
    return ResolutionStep(
        index=index,
        ambient_shifts=list(ambient_shifts),
        window=window,
        offset=enc.offset,
        homogenized=enc.ctx is not None,
        generators=out_elems,
        degrees=out_degrees,
        betti=restore(hist_rest),
        betti_with_block=restore(hist_block + hist_rest),
        betti_block=restore(hist_block),
    )


@dataclass
class ResolutionRequest:
    module: ModulePresentation
    degree_bound: Optional[int] = None
    length_bound: int = 7
    tshift: bool = True
    trust_finite: bool = False
    oracle_compare: bool = False


@dataclass
class BettiTable:
    entries: Dict[Tuple[int, int], int]  # (homological, internal - homological)
    truncated: bool
    truncation_degree: Optional[int] = None


@dataclass
class Resolution:
    module: ModulePresentation
    minimal_input: List[NcModElem]
    steps: List[ResolutionStep]
    table: BettiTable
    status: str
    level_shifts: Dict[int, List[int]]
    windows: List[int]
    window_policy: str  # "explicit" | "heuristic"


def _is_monomial(module: ModulePresentation) -> bool:
    alg = module.algebra
    return all(len(r) == 1 for r in alg.relations) and \
        all(len(g) == 1 for g in module.generators)


def resolve(req: ResolutionRequest) -> Resolution:
    module = req.module
    alg = module.algebra
    field = alg.field
    problems = validate_presentation(module)
    if problems:
        raise ValueError("; ".join(problems))
    if req.length_bound < 1:
        raise ValueError("length bound must be at least 1")

    shifts = list(module.shifts)
    gens = [dict(g) for g in module.generators]
    degs = [elem_degree(shifts, g) for g in gens]
    rel_deg = max((homogeneous_degree(r) for r in alg.relations), default=0)
    if gens:
        top = max(degs)
        if req.degree_bound is not None and req.degree_bound < top:
            raise ValueError(
                f"degree bound {req.degree_bound} below generator degree "
                f"{top}")
        enc0 = _encode_step(alg, shifts, gens, max(top, 1), req.tshift)
        kept = minimalize_graded(field, enc0.gens_lp, enc0.ideal_gens,
                                 [0] * len(shifts), preferred=set(),
                                 ring=enc0.ring)
        gens = [gens[i] for i in kept]
        degs = [degs[i] for i in kept]

    entries: Dict[Tuple[int, int], int] = {}
    for s in shifts:
        entries[(0, s)] = entries.get((0, s), 0) + 1
    for d in degs:
        entries[(1, d - 1)] = entries.get((1, d - 1), 0) + 1
    level_shifts: Dict[int, List[int]] = {0: sorted(shifts)}
    if gens:
        level_shifts[1] = sorted(degs)

    steps: List[ResolutionStep] = []
    windows: List[int] = []
    basis, basis_ambient, basis_degs = gens, shifts, degs
    terminated = not gens
    for i in range(1, req.length_bound):
        if terminated:
            break
        if req.degree_bound is not None:
            D = req.degree_bound
        else:
            D = max(basis_degs) + max(rel_deg, 2) - 1
        step = syzygy_step(alg, basis_ambient, basis, D,
                           use_tshift=req.tshift, index=i)
        steps.append(step)
        windows.append(D)
        if not step.generators:
            terminated = True
            break
        for d in step.degrees:
            key = (i + 1, d - (i + 1))
            entries[key] = entries.get(key, 0) + 1
        level_shifts[i + 1] = sorted(step.degrees)
        basis_ambient = basis_degs
        basis = step.generators
        basis_degs = step.degrees

    top_window = max(windows) if windows else (max(degs) if degs else 0)
    certified = False
    if terminated:
        if req.trust_finite:
            certified = True
        elif _is_monomial(module):
            base = max(degs) if degs else 0
            d_rel = max(rel_deg, 1)
            certified = all(
                windows[s - 1] >= monomial_degree_bound(base, d_rel, s + 1)
                for s in range(1, len(windows) + 1))
    status = "certified" if certified else f"truncated({top_window})"
    for step in steps:
        step.certified = certified
    table = BettiTable(entries, truncated=not certified,
                       truncation_degree=None if certified else top_window)
    return Resolution(
        module=module,
        minimal_input=gens,
        steps=steps,
        table=table,
        status=status,
        level_shifts=level_shifts,
        windows=windows,
        window_policy="explicit" if req.degree_bound is not None
        else "heuristic",
    )


def betti_summary(table: BettiTable) -> dict:
    entries = {k: v for k, v in table.entries.items() if v}
    regularity = max((j for (_, j) in entries), default=None)
    top = max((i for (i, _) in entries), default=0)
    if table.truncated:
        gdim: object = f">= {top} (truncated)"
    else:
        gdim = top
    tor = {(i, i + j): v for (i, j), v in sorted(entries.items())}
    return {"regularity": regularity, "global_dimension": gdim,
            "tor_dimensions": tor}


def render_betti_text(table: BettiTable) -> str:
    entries = {k: v for k, v in table.entries.items() if v}
    if not entries:
        return "(empty table)\n"
    imax = max(i for (i, _) in entries)
    jmin = min(j for (_, j) in entries)
    jmax = max(j for (_, j) in entries)
    width = max(len(str(v)) for v in entries.values())
    width = max(width, len(str(imax)), 3)
    lines = []
    header = "      " + "".join(f"{i:>{width + 2}}" for i in range(imax + 1))
    lines.append(header)
    lines.append("      " + "-" * ((width + 2) * (imax + 1)))
    for j in range(jmin, jmax + 1):
        cells = []
        for i in range(imax + 1):
            v = entries.get((i, j))
            cells.append(f"{v if v is not None else '.':>{width + 2}}")
        lines.append(f"{j:>4}: " + "".join(cells))
    if table.truncated:
        lines.append(f"(truncated at degree {table.truncation_degree})")
    return "\n".join(lines) + "\n"
