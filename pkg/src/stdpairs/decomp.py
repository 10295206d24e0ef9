"""Overlap classes, associated primes, multiplicities, irreducible decomposition.

Everything here is read off the standard cover.  Standard pairs over one
face are grouped into overlap classes (connected components of the
"translated submonoids intersect" graph); classes are ordered by lifting
pair divisibility existentially, and the maximal classes carry the
associated primes and one irreducible component each.

A component for a maximal class C over a face F is the ideal of monomials
exceeding, on some facet containing F, the largest support value attained
by the bases of C.  Its standard monomials are exactly the monoid elements
capped by those thresholds, which specializes to the familiar corner
ideals in the polynomial case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diophantine import IntMatrix, min_nonneg_solutions, vec_add, vec_dot, vec_sub
from .ideal import MonomialIdeal
from .pairs import ProperPair, divides, intersect_pairs
from .polyhedral import Face, face_sort_key


@dataclass(frozen=True)
class OverlapClass:
    """A connected block of standard pairs over one face."""

    face: Face
    pairs: tuple

    def bases(self) -> list:
        return [p.base for p in self.pairs]


def _degenerate_cover(I: MonomialIdeal):
    """The cover {(0, top)} of the empty ideal (everything is standard)."""
    from .covers import Cover

    top = tuple(range(I.ambient.gens.cols))
    zero = (0,) * I.ambient.dim
    return Cover.from_pairs([ProperPair(zero, top, I, skip_check=True)])


def _cover_of(I: MonomialIdeal):
    if I.is_empty():
        return _degenerate_cover(I)
    return I.standard_cover()


def overlap_classes(I: MonomialIdeal) -> dict:
    """Partition each face's standard pairs into overlap classes."""
    if "overlap_classes" in I._cache:
        return I._cache["overlap_classes"]
    monoid = I.ambient
    result: dict = {}
    for face, ps in _cover_of(I).entries:
        parent = list(range(len(ps)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                if intersect_pairs(monoid, ps[i].base, face, ps[j].base, face):
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[rj] = ri
        blocks: dict = {}
        for i in range(len(ps)):
            blocks.setdefault(find(i), []).append(ps[i])
        classes = [
            OverlapClass(face, tuple(sorted(b, key=lambda p: p.base))) for b in blocks.values()
        ]
        result[face] = sorted(classes, key=lambda c: c.pairs[0].base)
    I._cache["overlap_classes"] = result
    return result


def _class_below(c: OverlapClass, d: OverlapClass) -> bool:
    """Existential divisibility lift: some pair of c divides some pair of d."""
    return any(divides(p, q).rows > 0 for p in c.pairs for q in d.pairs)


def maximal_overlap_classes(I: MonomialIdeal) -> dict:
    """Classes not strictly below any other class in the lifted order."""
    if "maximal_overlap_classes" in I._cache:
        return I._cache["maximal_overlap_classes"]
    classes = [c for cs in overlap_classes(I).values() for c in cs]
    result: dict = {}
    for c in classes:
        if any(d is not c and _class_below(c, d) and not _class_below(d, c) for d in classes):
            continue
        result.setdefault(c.face, []).append(c)
    result = {
        f: sorted(result[f], key=lambda c: c.pairs[0].base)
        for f in sorted(result, key=face_sort_key)
    }
    I._cache["maximal_overlap_classes"] = result
    return result


def associated_primes(I: MonomialIdeal) -> dict:
    """Face -> prime ideal, for every face carrying a maximal overlap class."""
    if "associated_primes" in I._cache:
        return I._cache["associated_primes"]
    result = {
        face: I.ambient.prime_ideal(face) for face in maximal_overlap_classes(I)
    }
    I._cache["associated_primes"] = result
    return result


def _face_of_prime(I: MonomialIdeal, prime: MonomialIdeal) -> Face:
    for face, p in associated_primes(I).items():
        if p == prime:
            return face
    raise ValueError("ideal is not an associated prime")


def multiplicity(I: MonomialIdeal, face_or_prime) -> int:
    """The number of standard pairs over an associated face.

    Accepts the face itself or the corresponding prime ideal.
    """
    if isinstance(face_or_prime, MonomialIdeal):
        face = _face_of_prime(I, face_or_prime)
    else:
        face = tuple(face_or_prime)
        if face not in associated_primes(I):
            raise ValueError(f"{face} is not an associated face of the ideal")
    return sum(len(ps) for f, ps in _cover_of(I).entries if f == face)


def _in_closure(monoid, fsub: IntMatrix, bases, q) -> bool:
    """Whether q divides into some translate a + NF of the class.

    Solvability of ``q + A m = a + F f`` over nonnegative integers is one
    Diophantine system per class base.
    """
    system = fsub.hstack(monoid.gens.neg())
    return any(bool(min_nonneg_solutions(system, vec_sub(q, a))) for a in bases)


def irreducible_component(I: MonomialIdeal, face: Face, ov_class: OverlapClass) -> MonomialIdeal:
    """The irreducible component attached to a maximal overlap class.

    Its standard monomials are the monoid elements dividing into the union
    of the class's translated submonoids (the downward closure of
    ``a + NF`` over the class bases); the component is the complement.

    A minimal generator cannot step down along a face column (the result
    would still avoid the closure), so every factorization of a minimal
    generator uses off-face columns only, and each off-face column has a
    positive value under some facet normal containing the face.  Since the
    closure is capped by the class maxima under those normals, minimal
    generators live in a finite window that can be enumerated exactly.
    """
    face = tuple(face)
    maximal = maximal_overlap_classes(I)
    if face not in maximal or ov_class not in maximal[face]:
        raise ValueError("not a maximal overlap class of the ideal")
    monoid = I.ambient
    fsub = monoid.submatrix(face)
    bases = ov_class.bases()
    support = monoid.support_of(face)
    normals = [phi for phi in support.data]
    budgets = []
    for phi in normals:
        top = max(vec_dot(phi, b) for b in bases)
        step = max((vec_dot(phi, c) for c in monoid.gens.columns()), default=0)
        budgets.append(top + step)
    off_face = [j for j in range(monoid.gens.cols) if j not in face]
    off_cols = [monoid.gens.col(j) for j in off_face]
    off_values = [[vec_dot(phi, c) for c in off_cols] for phi in normals]
    extendable = [
        k for k in range(len(off_cols)) if any(off_values[i][k] > 0 for i in range(len(normals)))
    ]

    closure_known: dict = {}

    def dividing(q) -> bool:
        if q not in closure_known:
            closure_known[q] = _in_closure(monoid, fsub, bases, q)
        return closure_known[q]

    # Walk sums of off-face columns in the budget window.  A node outside
    # the closure already lies in the component, so its descendants exceed
    # it and cannot be minimal; record it and do not descend.
    outside: set = set()

    def walk(idx: int, point, values):
        if not dividing(point):
            outside.add(point)
            return
        for pos in range(idx, len(extendable)):
            k = extendable[pos]
            nxt = [v + off_values[i][k] for i, v in enumerate(values)]
            if all(v <= b for v, b in zip(nxt, budgets)):
                walk(pos, vec_add(point, off_cols[k]), nxt)

    walk(0, (0,) * monoid.dim, [0] * len(normals))
    outside = sorted(outside)
    keep = [
        q for q in outside
        if not any(p != q and monoid.contains(vec_sub(q, p)) for p in outside)
    ]
    return MonomialIdeal(monoid, IntMatrix.from_cols(keep, rows=monoid.dim), _trusted=True)


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """One irreducible component per maximal overlap class; intersection is I."""
    if "irreducible_decomposition" in I._cache:
        return I._cache["irreducible_decomposition"]
    if I.is_empty():
        result = [I]
    else:
        result = [
            irreducible_component(I, face, c)
            for face, classes in maximal_overlap_classes(I).items()
            for c in classes
        ]
        result.sort(key=lambda W: W.gens.to_token())
    I._cache["irreducible_decomposition"] = result
    return result
