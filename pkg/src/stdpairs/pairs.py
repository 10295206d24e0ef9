"""Pairs (monomial, face) and their divisibility.

A proper pair ``(a, F)`` of an ideal ``I`` represents the translated
submonoid ``a + NF`` inside the standard monomials of ``I``.  Pairs carry
their ambient ideal; the checked constructor verifies membership of the
base and disjointness of ``a + NF`` from ``I`` (one Diophantine solve per
generator), while ``skip_check=True`` trusts the caller — that path is
what the cover pipeline uses for pairs known proper by construction.

Face fields are index tuples.  They normally name faces of the ambient
monoid, but the machinery below is well-defined for any column index set,
which the cover-refinement loop exploits transiently.
"""

from __future__ import annotations

from .diophantine import IntMatrix, IntVector, SolutionSet, min_nonneg_solutions, vec, vec_sub
from .ideal import MonomialIdeal
from .monoid import AffineMonoid
from .polyhedral import BOTTOM, Face


class ProperPair:
    def __init__(self, base: IntVector, face: Face, ideal: MonomialIdeal, skip_check: bool = False):
        self.base = vec(base)
        self.face = tuple(int(j) for j in face)
        self.ideal = ideal
        monoid = ideal.ambient
        if len(self.base) != monoid.dim:
            raise ValueError(f"base has dim {len(self.base)}, expected {monoid.dim}")
        if not skip_check:
            if self.face not in monoid.faces or self.face == BOTTOM:
                raise ValueError(f"{self.face} is not a face of the ambient monoid")
            if monoid.is_element(self.base).is_empty():
                raise ValueError(f"base {self.base} is not an element of the ambient monoid")
            if not is_proper(self):
                raise ValueError(f"({self.base}, {self.face}) is not a proper pair of the ideal")
        self.hash_string = f"pair {self.base} {self.face} | {ideal.hash_string}"

    @property
    def monomial(self) -> IntVector:
        return self.base

    @property
    def ambient_ideal(self) -> MonomialIdeal:
        return self.ideal

    def face_matrix(self) -> IntMatrix:
        return self.ideal.ambient.submatrix(self.face)

    def is_element(self, b: IntVector) -> SolutionSet:
        """Minimal solutions of ``base + F x = b``; empty iff b lies outside the pair."""
        return min_nonneg_solutions(self.face_matrix(), vec_sub(vec(b), self.base))

    def is_maximal(self) -> bool:
        """True iff the pair mutually divides (or equals) a standard pair of its ideal."""
        for std in self.ideal.standard_cover().pairs():
            if self == std:
                return True
            if divides(self, std).rows > 0 and divides(std, self).rows > 0:
                return True
        return False

    def __eq__(self, other) -> bool:
        return isinstance(other, ProperPair) and self.hash_string == other.hash_string

    def __hash__(self) -> int:
        return hash(self.hash_string)

    def _col_text(self, v) -> str:
        return "[" + ", ".join(f"[{x}]" for x in v) + "]"

    def __repr__(self) -> str:
        face_mat = self.face_matrix()
        face_rows = "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in face_mat.data) + "]"
        return f"({self._col_text(self.base)}^T,{face_rows})"


def is_proper(pair: ProperPair) -> bool:
    """Whether ``base + NF`` misses the ideal entirely.

    ``base + F u = g + A w`` solvable for some generator g is exactly an
    intersection with the ideal, so one infeasibility check per generator
    suffices.
    """
    monoid = pair.ideal.ambient
    system = pair.face_matrix().hstack(monoid.gens.neg())
    for g in pair.ideal.gens.columns():
        if min_nonneg_solutions(system, vec_sub(g, pair.base)):
            return False
    return True


def divides(pair: ProperPair, other: ProperPair) -> IntMatrix:
    """Witness matrix for "``pair`` divides ``other``": rows are joined ``[u; w]``.

    A row satisfies ``a + A u = b + G w``, exhibiting a translate
    ``a + A u + NF`` inside ``b + NG``.  The result is empty when no
    translate fits; divisibility forces face containment F <= G, which is
    prechecked so the system stays finite-dimensional.
    """
    monoid = pair.ideal.ambient
    if monoid != other.ideal.ambient:
        raise ValueError("pairs live over different ambient monoids")
    gsub = other.face_matrix()
    if not set(pair.face) <= set(other.face):
        return IntMatrix.zero(0, monoid.gens.cols + gsub.cols)
    system = monoid.gens.hstack(gsub.neg())
    sols = min_nonneg_solutions(system, vec_sub(other.base, pair.base))
    return IntMatrix.from_rows(list(sols), cols=system.cols)


def intersect_pairs(monoid: AffineMonoid, a: IntVector, face_a: Face, b: IntVector, face_b: Face) -> SolutionSet:
    """Minimal ``[u; v]`` with ``a + F u = b + G v``; nonempty iff the pairs meet."""
    fsub = monoid.submatrix(face_a)
    gsub = monoid.submatrix(face_b)
    system = fsub.hstack(gsub.neg())
    return min_nonneg_solutions(system, vec_sub(vec(b), vec(a)))
