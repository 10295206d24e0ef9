"""Standard covers of monomial ideals.

The pipeline:

1. ``pair_difference(P, P')``: decompose ``(b + NG) \\ (b' + NG')`` into
   finitely many pairs over faces of G.  The points of ``b + NG`` landing
   in ``b' + NG'`` pull back to a monomial ideal J in |G| variables (its
   generators are the u-parts of the minimal solutions of
   ``[G -G'] [u; v] = b' - b``); the standard pairs of J push forward to
   the desired pairs.
2. ``principal_cover``: for a principal ideal, the pair difference of
   (0, A) and (b, A) is already the standard cover.
3. ``cover_to_standard``: refine an arbitrary cover of std(I) to the
   standard cover by alternating two steps until a fixpoint: move each
   base down to the minimal monoid elements of its real-span slice
   (``czero_to_cone``), then re-expand each pair to every containing face
   that keeps it proper (``cone_to_ctwo``).  Nested pairs are pruned at
   the fixpoint.
4. ``standard_cover``: fold the ideal's generators one at a time,
   differencing each standing pair against the new generator and
   re-standardizing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from .diophantine import (
    IntMatrix,
    IntVector,
    min_nonneg_solutions,
    minimal_elements,
    vec,
    vec_add,
    vec_leq,
    vec_sub,
)
from .ideal import MonomialIdeal
from .monoid import AffineMonoid
from .pairs import ProperPair, is_proper
from .polyhedral import BOTTOM, Face, face_sort_key

log = logging.getLogger("stdpairs")


class LoopCapExceeded(RuntimeError):
    """The cover refinement loop did not reach a fixpoint within the cap."""


# ---------------------------------------------------------------------------
# covers

@dataclass(frozen=True)
class Cover:
    """Pairs classified by their face, in canonical order."""

    entries: tuple  # tuple[(Face, tuple[ProperPair, ...]), ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Cover":
        buckets: dict = {}
        for p in pairs:
            buckets.setdefault(p.face, {})[p.base] = p
        entries = tuple(
            (face, tuple(buckets[face][b] for b in sorted(buckets[face])))
            for face in sorted(buckets, key=face_sort_key)
        )
        return cls(entries)

    def as_dict(self) -> dict:
        return {face: list(ps) for face, ps in self.entries}

    def pairs(self) -> list:
        return [p for _, ps in self.entries for p in ps]

    def is_empty(self) -> bool:
        return not self.entries

    def skeleton(self):
        """Faces and bases only; the shape compared by the fixpoint test."""
        return tuple((face, tuple(p.base for p in ps)) for face, ps in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cover):
            return NotImplemented
        return self.skeleton() == other.skeleton()

    def __hash__(self) -> int:
        return hash(self.skeleton())

    def __repr__(self) -> str:
        if not self.entries:
            return "{}"
        lines = []
        for face, ps in self.entries:
            lines.append(f"{face}: [" + ", ".join(repr(p) for p in ps) + "]")
        return "{" + ",\n ".join(lines) + "}"


# ---------------------------------------------------------------------------
# standard pairs in a polynomial ring

@dataclass(frozen=True)
class PolyStdPair:
    """A pair (x^u, V) in N^m: base exponent u (zero on V) plus free variables V."""

    base: tuple
    free: tuple  # strictly increasing variable indices

    def contains(self, other: "PolyStdPair") -> bool:
        """Set containment other + N^free(other) <= self + N^free(self)."""
        if not set(other.free) <= set(self.free):
            return False
        for i, (a, b) in enumerate(zip(other.base, self.base)):
            if i in self.free:
                continue
            if a != b:
                return False
        return vec_leq(self.base, other.base)


class PolyMonomialIdeal:
    """A monomial ideal of N^m given by exponent vectors, kept minimal."""

    def __init__(self, nvars: int, exponents):
        self.nvars = nvars
        exps = [vec(e) for e in exponents]
        for e in exps:
            if len(e) != nvars:
                raise ValueError("exponent dimension mismatch")
        self.exponents = tuple(minimal_elements(exps))

    def is_empty(self) -> bool:
        return not self.exponents

    def is_unit(self) -> bool:
        return any(all(x == 0 for x in e) for e in self.exponents)

    def __contains__(self, u) -> bool:
        u = vec(u)
        return any(vec_leq(e, u) for e in self.exponents)


def poly_standard_pairs(J: PolyMonomialIdeal) -> tuple:
    """All standard pairs of a polynomial-ring monomial ideal.

    Exhaustive at desk scale: for every admissible variable set V the
    candidate bases live in the box bounded by the generator exponents
    (a base reaching the bound off V is absorbed by a larger pair), and
    properness reduces to comparison with the V-saturated generators.
    """
    m = J.nvars
    if J.is_unit():
        raise ValueError("the unit ideal has no standard pairs")
    if J.is_empty():
        return (PolyStdPair((0,) * m, tuple(range(m))),)
    bound = [max(e[i] for e in J.exponents) for i in range(m)]
    candidates: list = []
    for mask in product((False, True), repeat=m):
        free = tuple(i for i in range(m) if mask[i])
        fset = set(free)
        if any(all(e[i] == 0 for i in range(m) if i not in fset) for e in J.exponents):
            continue  # a generator is supported inside V: no proper pair survives
        saturated = minimal_elements(
            tuple(0 if i in fset else e[i] for i in range(m)) for e in J.exponents
        )
        ranges = [range(1) if i in fset else range(bound[i]) for i in range(m)]
        for u in product(*ranges):
            if not any(vec_leq(s, u) for s in saturated):
                candidates.append(PolyStdPair(u, free))
    maximal = [
        p for p in candidates
        if not any(q != p and q.contains(p) for q in candidates)
    ]
    return tuple(sorted(maximal, key=lambda p: (p.base, p.free)))


# ---------------------------------------------------------------------------
# pair difference

def pair_difference(pair: ProperPair, other: ProperPair) -> Cover:
    """Pairs over faces of G covering ``(b + NG) \\ (b' + NG')``.

    Requires G <= G' (as column sets) and a common ambient monoid.  Output
    pairs are anchored to ``pair``'s ambient ideal with checks skipped; the
    caller decides what properness means for them.
    """
    monoid = pair.ideal.ambient
    if monoid != other.ideal.ambient:
        raise ValueError("pairs live over different ambient monoids")
    g_idx, go_idx = pair.face, other.face
    if not set(g_idx) <= set(go_idx):
        raise ValueError("pair difference requires the first face inside the second")
    gsub = monoid.submatrix(g_idx)
    gosub = monoid.submatrix(go_idx)
    system = gsub.hstack(gosub.neg())
    sols = min_nonneg_solutions(system, vec_sub(other.base, pair.base))
    m = len(g_idx)
    u_parts = [s[:m] for s in sols]
    if any(all(x == 0 for x in u) for u in u_parts):
        return Cover.from_pairs([])  # base already swallowed: empty difference
    if not u_parts:
        return Cover.from_pairs([ProperPair(pair.base, g_idx, pair.ideal, skip_check=True)])
    J = PolyMonomialIdeal(m, u_parts)
    out = []
    for std in poly_standard_pairs(J):
        base = vec_add(pair.base, gsub.mul(std.base))
        cols = tuple(sorted(g_idx[i] for i in std.free))
        face = _resolve_face(monoid, cols, base, other)
        out.append(ProperPair(base, face, pair.ideal, skip_check=True))
    return Cover.from_pairs(out)


def _resolve_face(monoid: AffineMonoid, cols: Face, base: IntVector, other: ProperPair):
    """Map a combinatorial variable set to a face index tuple.

    When the selected columns already form a face, use it.  Otherwise try
    the smallest containing face, provided the enlarged pair stays disjoint
    from the subtracted pair; failing that, keep the set-theoretic index
    set and let the refinement loop sort it out.
    """
    if cols in monoid.faces:
        return cols
    closure = monoid.face_closure(cols)
    system = monoid.submatrix(closure).hstack(other.face_matrix().neg())
    if min_nonneg_solutions(system, vec_sub(other.base, base)).is_empty():
        return closure
    return cols


def principal_cover(I: MonomialIdeal) -> Cover:
    """The standard cover of a principal ideal, via one pair difference."""
    if not I.is_principal():
        raise ValueError("principal_cover requires a principal ideal")
    monoid = I.ambient
    top = tuple(range(monoid.gens.cols))
    zero = (0,) * monoid.dim
    whole = ProperPair(zero, top, I, skip_check=True)
    shifted = ProperPair(I.gens.col(0), top, I, skip_check=True)
    return pair_difference(whole, shifted)


# ---------------------------------------------------------------------------
# cover refinement

def minimal_holes(a: IntVector, face: Face, monoid: AffineMonoid) -> tuple:
    """Minimal monoid elements in the real-span slice of ``a`` along a face.

    These are the candidates for standard-pair bases absorbing ``(a, F)``:
    the elements q of the monoid with ``q - a`` in the linear span of the
    face, minimal under ``q <= q'  iff  q' - q in the monoid``.  Membership
    in the slice is linear (the face's support vectors vanish on it), so
    candidates come from one Diophantine solve.
    """
    a = vec(a)
    support = monoid.support_of(face)
    system = support.matmul(monoid.gens)
    rhs = support.mul(a)
    sols = min_nonneg_solutions(system, rhs)
    candidates = sorted({monoid.gens.mul(x) for x in sols})
    out: list = []
    for q in candidates:
        if not any(monoid.contains(vec_sub(q, p)) for p in candidates if p != q):
            out.append(q)
    return tuple(sorted(out))


def czero_to_cone(cover: Cover, I: MonomialIdeal) -> Cover:
    """Replace each pair's base with the minimal holes of its slice.

    Properness is not required at this stage.  Index sets that are not
    faces keep their original pair alongside, since for them the moved
    base need not absorb the original region.
    """
    monoid = I.ambient
    out = []
    for face, ps in cover.entries:
        genuine = face in monoid.faces
        for p in ps:
            for b in minimal_holes(p.base, face, monoid):
                out.append(ProperPair(b, face, I, skip_check=True))
            if not genuine:
                out.append(ProperPair(p.base, face, I, skip_check=True))
    return Cover.from_pairs(out)


def cone_to_ctwo(cover: Cover, I: MonomialIdeal) -> Cover:
    """Expand every pair to all containing faces, keeping the proper ones."""
    monoid = I.ambient
    faces = [f for f in monoid.faces if f != BOTTOM]
    out = []
    for face, ps in cover.entries:
        fset = set(face)
        targets = [g for g in faces if fset <= set(g)]
        if face not in monoid.faces:
            targets.append(face)
        for p in ps:
            for g in targets:
                candidate = ProperPair(p.base, g, I, skip_check=True)
                if is_proper(candidate):
                    out.append(candidate)
    return Cover.from_pairs(out)


def _pair_set_contains(big: ProperPair, small: ProperPair) -> bool:
    """Set containment small.base + NF <= big.base + NG."""
    if not set(small.face) <= set(big.face):
        return False
    diff = vec_sub(small.base, big.base)
    return bool(min_nonneg_solutions(big.face_matrix(), diff))


def _prune_nested(cover: Cover) -> Cover:
    pairs = cover.pairs()
    keep = [
        p for p in pairs
        if not any(q is not p and _pair_set_contains(q, p) and not _pair_set_contains(p, q) for q in pairs)
    ]
    return Cover.from_pairs(keep)


def cover_to_standard(cover: Cover, I: MonomialIdeal, loop_cap: int = 1000) -> Cover:
    """Refine a cover of std(I) to the standard cover (fixpoint of the two steps)."""
    current = Cover.from_pairs(
        ProperPair(p.base, p.face, I, skip_check=True) for p in cover.pairs()
    )
    for _ in range(loop_cap):
        refined = cone_to_ctwo(czero_to_cone(current, I), I)
        if refined == current:
            return _prune_nested(current)
        current = refined
    raise LoopCapExceeded(f"cover refinement did not stabilize within {loop_cap} iterations")


def standard_cover(I: MonomialIdeal, loop_cap: int = 1000) -> Cover:
    """The standard cover of a proper nonempty monomial ideal (memoized)."""
    if I.is_empty():
        raise ValueError("the empty ideal has no standard cover")
    if "standard_cover" in I._cache:
        return I._cache["standard_cover"]
    monoid = I.ambient
    gens = I.gens.columns()
    top = tuple(range(monoid.gens.cols))
    sub = MonomialIdeal(monoid, IntMatrix.from_cols(gens[:1], rows=monoid.dim), _trusted=True)
    cover = principal_cover(sub)
    log.info("Cover for 1 generator was calculated. %d generators are left.", len(gens) - 1)
    for i in range(1, len(gens)):
        sub = MonomialIdeal(monoid, IntMatrix.from_cols(gens[: i + 1], rows=monoid.dim), _trusted=True)
        cutter = ProperPair(gens[i], top, sub, skip_check=True)
        pieces = []
        for p in cover.pairs():
            anchored = ProperPair(p.base, p.face, sub, skip_check=True)
            pieces.extend(pair_difference(anchored, cutter).pairs())
        cover = cover_to_standard(Cover.from_pairs(pieces), sub, loop_cap=loop_cap)
        log.info(
            "Cover for %d generators was calculated. %d generators are left.",
            i + 1,
            len(gens) - i - 1,
        )
    result = Cover.from_pairs(
        ProperPair(p.base, p.face, I, skip_check=True) for p in cover.pairs()
    )
    I._cache["standard_cover"] = result
    return result
