"""Rational cone geometry over a generating matrix.

Faces are identified with the set of generator-column indices lying on
them, so the whole face lattice is a family of index tuples ordered by
containment.  ``BOTTOM`` is a sentinel below everything, printed as
``(-1,)``; the empty tuple is the zero face of a pointed cone.

Facets of ``cone(A)`` are found by exact enumeration: each facet contains
rank(A)-1 independent generator columns, so candidate normals come from
the one-dimensional orthogonal complements of column subsets inside the
linear span of A.  For cones of less than full dimension the normal list
additionally carries a pair of rows ``+phi/-phi`` for each generator of
the orthogonal complement of the span, so the uniform test "``q`` lies on
the face iff every listed normal vanishes on it" keeps working.
"""

from __future__ import annotations

from .diophantine import IntMatrix, _facets_of_cone, hilbert_kernel, vec_is_zero

Face = tuple  # tuple[int, ...] of column indices, strictly increasing

BOTTOM: Face = (-1,)


def face_sort_key(face: Face):
    """Canonical ordering: BOTTOM first, then by (cardinality, lex)."""
    if face == BOTTOM:
        return (0, 0, ())
    return (1, len(face), face)


def facet_data(A: IntMatrix) -> tuple:
    """Return ``(facets, equations)`` for ``cone(A)``.

    ``facets`` is a list of ``(normal, zero_set)`` pairs, one per facet, with
    primitive inner normals and ``zero_set`` the frozenset of columns on the
    facet.  ``equations`` is a list of primitive vectors spanning the
    orthogonal complement of the linear span of A.
    """
    return _facets_of_cone(A.columns(), A.rows)


def facet_normals(A: IntMatrix) -> IntMatrix:
    """Primitive inner normals of the facets of ``cone(A)``, one per row.

    For a cone of less than full dimension the rows also include the
    ``+phi/-phi`` pairs spanning the complement of the span.  Rows are
    sorted lexicographically.  An empty matrix yields no rows.
    """
    facets, equations = facet_data(A)
    rows = [phi for phi, _ in facets]
    for e in equations:
        rows.append(e)
        rows.append(tuple(-x for x in e))
    rows.sort()
    return IntMatrix.from_rows(rows, cols=A.rows)


def face_lattice(A: IntMatrix) -> tuple:
    """All faces of ``cone(A)`` as column index tuples, plus BOTTOM.

    Every face is an intersection of facets, and its index tuple is the
    intersection of their zero sets; the family is closed by construction.
    """
    n = A.cols
    facets, _ = facet_data(A)
    top = frozenset(range(n))
    family = {top}
    changed = True
    while changed:
        changed = False
        for _, zs in facets:
            for s in list(family):
                t = s & zs
                if t not in family:
                    family.add(t)
                    changed = True
    faces = [tuple(sorted(s)) for s in family]
    faces.append(BOTTOM)
    return tuple(sorted(faces, key=face_sort_key))


def face_closure(A: IntMatrix, indices) -> Face:
    """The smallest face of ``cone(A)`` whose column set contains ``indices``."""
    facets, _ = facet_data(A)
    current = frozenset(range(A.cols))
    target = frozenset(indices)
    for _, zs in facets:
        if target <= zs:
            current &= zs
    return tuple(sorted(current))


def support_vectors_of_face(A: IntMatrix, face: Face) -> IntMatrix:
    """Normals of all facets containing ``face`` (plus span equations), by row.

    The full column set of a full-dimensional cone has no such facet and
    yields an empty matrix.  BOTTOM behaves like the zero face: every facet
    contains it.
    """
    lattice = face_lattice(A)
    if face != BOTTOM and face not in lattice:
        raise ValueError(f"{face} is not a face of the cone")
    facets, equations = facet_data(A)
    wanted = frozenset() if face == BOTTOM else frozenset(face)
    rows = [phi for phi, zs in facets if wanted <= zs]
    for e in equations:
        rows.append(e)
        rows.append(tuple(-x for x in e))
    rows.sort()
    return IntMatrix.from_rows(rows, cols=A.rows)


def is_pointed(A: IntMatrix) -> bool:
    """True iff ``cone(A)`` contains no line.

    Equivalent to: every nonnegative integer kernel element of A is
    supported on zero columns only.
    """
    zero_cols = {j for j in range(A.cols) if vec_is_zero(A.col(j))}
    for h in hilbert_kernel(A):
        if any(x > 0 and j not in zero_cols for j, x in enumerate(h)):
            return False
    return True
