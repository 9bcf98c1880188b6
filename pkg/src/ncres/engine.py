"""Exact commutative polynomial arithmetic over a finite variable window.

Monomials are tuples of (variable, exponent) pairs sorted by variable
index; polynomials are dicts mapping monomials to nonzero field elements.
The order is degree-reverse-lexicographic where a SMALLER variable index
means a GREATER variable, matching the place-major letterplace precedence.

The Groebner machinery is plain Buchberger with the Gebauer-Moeller pair
criteria and an optional degree cap: S-pairs whose lcm degree exceeds the
cap are discarded, which for homogeneous input yields a truncated basis
that is complete through the cap degree.  Pair pruning is only used here,
in the plain ring setting; the syzygy routines (see syzygy.py) must keep
every pair because pruned pairs carry generators of the syzygy module.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

Mono = Tuple[Tuple[int, int], ...]
Poly = Dict[Mono, object]

_KEY_CACHE: Dict[Mono, tuple] = {}


def mono_deg(m: Mono) -> int:
    d = 0
    for _, e in m:
        d += e
    return d


def mono_key(m: Mono) -> tuple:
    """Sort key realizing degrevlex: higher key = greater monomial.

    Degree first; ties broken at the largest variable index where the
    exponents differ, smaller exponent winning.  (-v, -e) pairs from the
    tail end encode exactly that under tuple comparison.
    """
    k = _KEY_CACHE.get(m)
    if k is None:
        d = 0
        for _, e in m:
            d += e
        k = (d,) + tuple((-v, -e) for v, e in reversed(m))
        _KEY_CACHE[m] = k
    return k


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(m: Mono, d: Mono) -> Optional[Mono]:
    """m / d, or None when d does not divide m."""
    out = []
    i = 0
    lm = len(m)
    for vd, ed in d:
        while i < lm and m[i][0] < vd:
            out.append(m[i])
            i += 1
        if i >= lm or m[i][0] != vd or m[i][1] < ed:
            return None
        rem = m[i][1] - ed
        if rem:
            out.append((vd, rem))
        i += 1
    out.extend(m[i:])
    return tuple(out)


def mono_lcm(a: Mono, b: Mono) -> Mono:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea if ea >= eb else eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_coprime(a: Mono, b: Mono) -> bool:
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, vb = a[i][0], b[j][0]
        if va == vb:
            return False
        if va < vb:
            i += 1
        else:
            j += 1
    return True


def mono_mask(m: Mono) -> int:
    mask = 0
    for v, _ in m:
        mask |= 1 << (v & 63)
    return mask


def poly_lead(p: Poly) -> Mono:
    return max(p, key=mono_key)


def poly_items_sorted(p: Poly):
    return sorted(p.items(), key=lambda t: mono_key(t[0]), reverse=True)


class ReducerStore:
    """Reducers bucketed by the smallest variable of their lead, with a
    bitmask pre-filter.  Each entry is (lead, mask, terms) where terms is
    the descending term list of a monic polynomial, lead first."""

    __slots__ = ("buckets",)

    def __init__(self):
        self.buckets: Dict[int, list] = {}

    def add(self, lead: Mono, terms) -> None:
        key = lead[0][0] if lead else -1
        self.buckets.setdefault(key, []).append((lead, mono_mask(lead), terms))

    def find(self, m: Mono, mmask: int):
        unit = self.buckets.get(-1)
        if unit:
            return (), unit[0][2]
        for v, _ in m:
            lst = self.buckets.get(v)
            if lst is None:
                continue
            for lead, mask, terms in lst:
                if mask & mmask == mask:
                    q = mono_div(m, lead)
                    if q is not None:
                        return q, terms
        return None


def _nf(field, p: Poly, store: ReducerStore) -> Poly:
    sub, mul = field.sub, field.mul
    zero = field.zero
    work = dict(p)
    out: Poly = {}
    while work:
        m = max(work, key=mono_key)
        c = work.pop(m)
        hit = store.find(m, mono_mask(m))
        if hit is None:
            out[m] = c
            continue
        q, terms = hit
        for tm, tc in terms[1:]:
            key = mono_mul(tm, q) if q else tm
            s = sub(work.get(key, zero), mul(c, tc))
            if s == zero:
                work.pop(key, None)
            else:
                work[key] = s
    return out


def _monic_terms(field, p: Poly):
    """Descending monic term list; returns (lead, terms)."""
    items = poly_items_sorted(p)
    lead, lc = items[0]
    if lc == field.one:
        return lead, items
    inv = field.inv(lc)
    mul = field.mul
    return lead, [(m, mul(inv, c)) for m, c in items]


@dataclass
class GroebnerBasis:
    elements: List[Poly]
    transformation: Optional[List[Dict[int, Poly]]]
    reduced: bool


class RingGB:
    """Truncated Buchberger over the polynomial ring.

    With track_transformation, every basis element carries its expression
    in the input generators as {input_index: cofactor poly}.
    """

    def __init__(self, field, gens: Sequence[Poly], cap: Optional[int] = None,
                 track_transformation: bool = False, interreduce: bool = True):
        self.field = field
        self.cap = cap
        self.track = track_transformation
        self.elements: List[tuple] = []  # (lead, terms, cof)
        self.store = ReducerStore()
        self._pairs: list = []
        self._cancelled = set()
        self._lcms: Dict[Tuple[int, int], Mono] = {}
        for idx, g in enumerate(gens):
            if not g:
                continue
            cof = {idx: {(): field.one}} if track_transformation else None
            self._insert(dict(g), cof)
        self._run()
        if interreduce:
            self._interreduce()

    # -- construction ---------------------------------------------------

    def _reduce_full(self, p: Poly, cof):
        """Full NF of p, updating cof in place when tracking."""
        field = self.field
        sub, mul = field.sub, field.mul
        zero = field.zero
        work = dict(p)
        out: Poly = {}
        while work:
            m = max(work, key=mono_key)
            c = work.pop(m)
            hit = self._find(m)
            if hit is None:
                out[m] = c
                continue
            q, terms, rcof = hit
            for tm, tc in terms[1:]:
                key = mono_mul(tm, q) if q else tm
                s = sub(work.get(key, zero), mul(c, tc))
                if s == zero:
                    work.pop(key, None)
                else:
                    work[key] = s
            if cof is not None:
                for idx, cp in rcof.items():
                    acc = cof.setdefault(idx, {})
                    for cm, cc in cp.items():
                        key = mono_mul(cm, q) if q else cm
                        s = sub(acc.get(key, zero), mul(c, cc))
                        if s == zero:
                            acc.pop(key, None)
                        else:
                            acc[key] = s
        return out

    def _find(self, m: Mono):
        mmask = mono_mask(m)
        for v, _ in m:
            lst = self.store.buckets.get(v)
            if lst is None:
                continue
            for lead, mask, payload in lst:
                if mask & mmask == mask:
                    q = mono_div(m, lead)
                    if q is not None:
                        terms, rcof = payload
                        return q, terms, rcof
        unit = self.store.buckets.get(-1)
        if unit:
            terms, rcof = unit[0][2]
            return (), terms, rcof
        return None

    def _insert(self, p: Poly, cof) -> None:
        p = self._reduce_full(p, cof)
        if not p:
            return
        lead, terms = _monic_terms(self.field, p)
        if cof is not None:
            lc = p[lead]
            if lc != self.field.one:
                inv = self.field.inv(lc)
                mul = self.field.mul
                cof = {i: {m: mul(inv, c) for m, c in cp.items()}
                       for i, cp in cof.items()}
        t = len(self.elements)
        self._update_pairs(t, lead)
        self.elements.append((lead, terms, cof))
        key = lead[0][0] if lead else -1
        self.store.buckets.setdefault(key, []).append(
            (lead, mono_mask(lead), (terms, cof)))

    def _update_pairs(self, t: int, lead_t: Mono) -> None:
        """Gebauer-Moeller update: M, F and B criteria on the new pairs,
        chain criterion on the old ones."""
        cand = []
        for i, (lead_i, _, _) in enumerate(self.elements):
            l = mono_lcm(lead_i, lead_t)
            cand.append([l, mono_deg(l), i, True])
        # M: drop a pair whose lcm is a proper multiple of another's
        for a in cand:
            la = a[0]
            for b in cand:
                if b is a or not b[3]:
                    continue
                if b[1] <= a[1] and la != b[0] and mono_div(la, b[0]) is not None:
                    a[3] = False
                    break
        # F: among equal lcms keep the first
        seen = {}
        for a in cand:
            if not a[3]:
                continue
            if a[0] in seen:
                a[3] = False
            else:
                seen[a[0]] = a
        # B: coprime leads reduce to zero anyway
        for a in cand:
            if a[3] and mono_coprime(self.elements[a[2]][0], lead_t):
                a[3] = False
        # chain criterion on existing pairs
        for (i, j), l in list(self._lcms.items()):
            if (i, j) in self._cancelled:
                continue
            if mono_div(l, lead_t) is not None:
                if mono_lcm(self.elements[i][0], lead_t) != l and \
                        mono_lcm(self.elements[j][0], lead_t) != l:
                    self._cancelled.add((i, j))
        for l, deg, i, keep in cand:
            if not keep:
                continue
            if self.cap is not None and deg > self.cap:
                continue
            self._lcms[(i, t)] = l
            heapq.heappush(self._pairs, (deg, l, i, t))

    def _run(self) -> None:
        field = self.field
        sub, mul = field.sub, field.mul
        zero = field.zero
        while self._pairs:
            deg, l, i, j = heapq.heappop(self._pairs)
            if (i, j) in self._cancelled:
                continue
            lead_i, terms_i, cof_i = self.elements[i]
            lead_j, terms_j, cof_j = self.elements[j]
            qi = mono_div(l, lead_i)
            qj = mono_div(l, lead_j)
            spoly: Poly = {}
            for tm, tc in terms_i:
                spoly[mono_mul(tm, qi) if qi else tm] = tc
            for tm, tc in terms_j:
                key = mono_mul(tm, qj) if qj else tm
                s = sub(spoly.get(key, zero), tc)
                if s == zero:
                    spoly.pop(key, None)
                else:
                    spoly[key] = s
            cof = None
            if self.track:
                cof = {}
                for idx, cp in (cof_i or {}).items():
                    cof[idx] = {mono_mul(m, qi) if qi else m: c
                                for m, c in cp.items()}
                for idx, cp in (cof_j or {}).items():
                    acc = cof.setdefault(idx, {})
                    for m, c in cp.items():
                        key = mono_mul(m, qj) if qj else m
                        s = sub(acc.get(key, zero), c)
                        if s == zero:
                            acc.pop(key, None)
                        else:
                            acc[key] = s
            self._insert(spoly, cof)

    def _interreduce(self) -> None:
        """Shrink to the unique (truncated) reduced basis."""
        field = self.field
        entries = [(lead, dict(terms), cof)
                   for lead, terms, cof in self.elements]
        # minimal leads: drop anything whose lead another lead divides
        keep: List[tuple] = []
        for lead, p, cof in sorted(entries, key=lambda e: mono_key(e[0])):
            if any(mono_div(lead, k[0]) is not None for k in keep):
                continue
            keep.append((lead, p, cof))
        changed = True
        while changed:
            changed = False
            for idx in range(len(keep)):
                lead, p, cof = keep[idx]
                store = ReducerStore()
                for k, (l2, p2, _) in enumerate(keep):
                    if k != idx:
                        store.add(l2, poly_items_sorted(p2))
                q = _nf(field, p, store)
                if q != p:
                    changed = True
                    # tracking through interreduction is not kept exact;
                    # recompute below when needed
                    keep[idx] = (poly_lead(q), q, cof)
        self.elements = []
        self.store = ReducerStore()
        for lead, p, cof in sorted(keep, key=lambda e: mono_key(e[0])):
            lead2, terms = _monic_terms(field, p)
            self.elements.append((lead2, terms, cof))
            key = lead2[0][0] if lead2 else -1
            self.store.buckets.setdefault(key, []).append(
                (lead2, mono_mask(lead2), (terms, cof)))

    # -- queries ---------------------------------------------------------

    def normal_form(self, p: Poly) -> Poly:
        return self._reduce_full(dict(p), None)

    def polys(self) -> List[Poly]:
        return [dict(terms) for _, terms, _ in self.elements]

    def leads(self) -> List[Mono]:
        return [lead for lead, _, _ in self.elements]


def reduced_groebner(field, gens: Sequence[Poly], cap: Optional[int] = None,
                     track_transformation: bool = False) -> GroebnerBasis:
    """Unique reduced (degree-truncated when cap is set) Groebner basis."""
    gb = RingGB(field, gens, cap=cap)
    transformation = None
    if track_transformation:
        transformation = _recover_transformation(field, gens, gb)
    return GroebnerBasis(gb.polys(), transformation, True)


def _recover_transformation(field, gens, gb: RingGB):
    """Solve for cofactors of each reduced element by reducing it through a
    fresh tracked run against the input generators.  The tracked run must
    stay un-interreduced: interreduction rewrites tails without updating
    the stored cofactors."""
    tracked = RingGB(field, gens, cap=gb.cap, track_transformation=True,
                     interreduce=False)
    out = []
    for _, terms, _ in gb.elements:
        target = dict(terms)
        cof: Dict[int, Poly] = {}
        rem = tracked._reduce_full(target, cof)
        if rem:
            raise AssertionError("reduced basis element fails to reduce")
        neg = field.neg
        out.append({i: {m: neg(c) for m, c in cp.items()}
                    for i, cp in cof.items() if cp})
    return out


def normal_form(field, f: Poly, basis: Sequence[Poly]) -> Poly:
    """Greedy reduction of f by a list of nonzero polynomials.

    Unique when basis is a Groebner basis; otherwise some normal form with
    the divisibility and membership postconditions.
    """
    store = ReducerStore()
    for p in basis:
        if p:
            lead, terms = _monic_terms(field, p)
            store.add(lead, terms)
    return _nf(field, f, store)
