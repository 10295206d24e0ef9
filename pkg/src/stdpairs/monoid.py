"""Pointed affine monoids: generators, faces, membership, prime ideals."""

from __future__ import annotations

from .diophantine import IntMatrix, IntVector, SolutionSet, min_nonneg_solutions, vec, vec_is_zero
from .polyhedral import (
    BOTTOM,
    Face,
    face_closure,
    face_lattice,
    facet_data,
    is_pointed,
    support_vectors_of_face,
)


class NotPointedError(ValueError):
    """Raised when a generating matrix spans a cone containing a line."""


class AffineMonoid:
    """The monoid of all nonnegative integer combinations of the columns of A.

    The constructor rejects non-pointed input, since every algorithm built
    on top assumes pointedness.  Faces, support vectors and minimal
    generators are derived eagerly; the object is immutable afterwards and
    safe to share between threads.
    """

    def __init__(self, gens: IntMatrix):
        if not isinstance(gens, IntMatrix):
            gens = IntMatrix.from_rows(gens)
        if not is_pointed(gens):
            raise NotPointedError("generating matrix spans a cone containing a line")
        self._gens = gens
        self._facets, self._equations = facet_data(gens)
        self._faces = face_lattice(gens)
        self._supports = {
            f: support_vectors_of_face(gens, f) for f in self._faces if f != BOTTOM
        }
        self._mingens = self._compute_mingens()
        self._hash_string = "monoid " + self._mingens.to_token()

    def _compute_mingens(self) -> IntMatrix:
        cols = []
        for c in self._gens.columns():
            if not vec_is_zero(c) and c not in cols:
                cols.append(c)
        keep = []
        for i, c in enumerate(cols):
            others = IntMatrix.from_cols(cols[:i] + cols[i + 1:], rows=self._gens.rows)
            if min_nonneg_solutions(others, c).is_empty():
                keep.append(c)
        return IntMatrix.from_cols(sorted(keep), rows=self._gens.rows)

    @property
    def gens(self) -> IntMatrix:
        return self._gens

    @property
    def mingens(self) -> IntMatrix:
        return self._mingens

    @property
    def dim(self) -> int:
        return self._gens.rows

    @property
    def faces(self) -> tuple:
        """All faces as column index tuples, BOTTOM included."""
        return self._faces

    @property
    def supports(self) -> dict:
        """Face -> matrix of facet normals containing that face."""
        return dict(self._supports)

    @property
    def hash_string(self) -> str:
        return self._hash_string

    def is_empty(self) -> bool:
        return self._gens.cols == 0

    def is_pointed(self) -> bool:
        return True

    def is_element(self, b: IntVector) -> SolutionSet:
        """Minimal factorizations of b over the generators; empty iff b is not in the monoid."""
        b = vec(b)
        if len(b) != self.dim:
            raise ValueError(f"vector has dim {len(b)}, expected {self.dim}")
        return min_nonneg_solutions(self._gens, b)

    def contains(self, b: IntVector) -> bool:
        return not self.is_element(b).is_empty()

    def face(self, index: Face) -> IntMatrix:
        """The face as a submatrix of the generators."""
        if index not in self._faces or index == BOTTOM:
            if index != BOTTOM:
                raise ValueError(f"{index} is not a face")
            raise ValueError("the bottom face has no submatrix")
        return self._gens.take_cols(list(index))

    def submatrix(self, indices) -> IntMatrix:
        """Columns at arbitrary index sets (used by the cover pipeline)."""
        return self._gens.take_cols(list(indices))

    def index_of_face(self, sub: IntMatrix) -> Face:
        """Inverse of :meth:`face`: the index tuple whose columns equal ``sub``'s."""
        gcols = self._gens.columns()
        wanted = set(map(tuple, sub.columns()))
        for c in wanted:
            if c not in gcols:
                raise ValueError("matrix columns are not generator columns")
        index = tuple(sorted(j for j, c in enumerate(gcols) if c in wanted))
        if index not in self._faces:
            raise ValueError("columns do not form a face")
        return index

    def face_closure(self, indices) -> Face:
        return face_closure(self._gens, indices)

    def support_of(self, indices) -> IntMatrix:
        """Support vectors of the smallest face containing ``indices``."""
        indices = tuple(indices)
        if indices in self._supports:
            return self._supports[indices]
        if indices == BOTTOM:
            return self._supports.get((), support_vectors_of_face(self._gens, BOTTOM))
        return self._supports[self.face_closure(indices)]

    def prime_ideal(self, face: Face):
        """The prime ideal of monomials outside the given face."""
        from .ideal import MonomialIdeal

        if face == BOTTOM:
            raise ValueError("no prime ideal is attached to the bottom face")
        if face not in self._faces:
            raise ValueError(f"{face} is not a face")
        cols = [self._gens.col(j) for j in range(self._gens.cols) if j not in face]
        mat = IntMatrix.from_cols(cols, rows=self.dim)
        return MonomialIdeal(self, mat)

    def save(self, path: str) -> bool:
        from .archive import save

        return save(self, path)

    def __eq__(self, other) -> bool:
        return isinstance(other, AffineMonoid) and self._hash_string == other._hash_string

    def __hash__(self) -> int:
        return hash(self._hash_string)

    def __repr__(self) -> str:
        return f"An affine semigroup whose generating set is \n{self._gens}"
