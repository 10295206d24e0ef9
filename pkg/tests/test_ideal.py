import pytest

from stdpairs.diophantine import IntMatrix
from stdpairs.ideal import MonomialIdeal
from stdpairs.monoid import AffineMonoid

from oracles import ideal_members, monoid_box


@pytest.fixture
def Q():
    return AffineMonoid(IntMatrix.from_rows([[1, 2], [0, 2]]))


def test_generators_are_minimalized(Q):
    I = MonomialIdeal(Q, IntMatrix.from_rows([[4, 6], [4, 6]]))
    assert I.gens.columns() == [(4, 4)]


def test_rejects_outside_generators(Q):
    with pytest.raises(ValueError):
        MonomialIdeal(Q, IntMatrix.from_cols([(1, 1)]))


def test_rejects_unit_ideal(Q):
    with pytest.raises(ValueError):
        MonomialIdeal(Q, IntMatrix.from_cols([(0, 0)]))


def test_empty_ideal(Q):
    I = MonomialIdeal(Q, IntMatrix.zero(2, 0))
    assert I.is_empty()
    assert I.is_element((4, 4)) is None


def test_membership_witness(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    assert I.is_element((5, 4)) == ((1, 0), (4, 4))
    assert I.is_element((4, 4)) == ((0, 0), (4, 4))
    assert I.is_element((3, 2)) is None


def test_std_monomial(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    assert I.is_std_monomial((2, 2))
    assert not I.is_std_monomial((4, 4))
    assert not I.is_std_monomial((1, 1))  # outside the monoid


def test_intersection_paper_value(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    J = MonomialIdeal(Q, IntMatrix.from_cols([(5, 0)]))
    assert I.intersect(J).gens.columns() == [(9, 4)]
    assert I.intersect(I) == I
    E = MonomialIdeal(Q, IntMatrix.zero(2, 0))
    assert I.intersect(E).is_empty()


def test_sum_and_product(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    J = MonomialIdeal(Q, IntMatrix.from_cols([(5, 0)]))
    assert (I + J).gens.columns() == [(4, 4), (5, 0)]
    assert (I * J).gens.columns() == [(9, 4)]
    E = MonomialIdeal(Q, IntMatrix.zero(2, 0))
    assert (I + E) == I


def test_ambient_mismatch_raises(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    other = MonomialIdeal(AffineMonoid(IntMatrix.identity(2)), IntMatrix.from_cols([(1, 1)]))
    with pytest.raises(ValueError):
        I.intersect(other)


def test_radical_paper_value(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    rad = I.radical()
    assert rad.gens.columns() == [(2, 2)]
    assert rad.radical() == rad
    # the radical witness: a small multiple of each radical generator lies in I
    assert I.is_element((4, 4)) is not None
    P = Q.prime_ideal((1,))
    assert P.radical() == P


def test_predicates(Q):
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    assert I.is_principal() and not I.is_empty()
    assert not I.is_radical()
    assert Q.prime_ideal((1,)).is_prime()
    assert not I.is_prime()
    E = MonomialIdeal(Q, IntMatrix.zero(2, 0))
    assert E.is_empty()
    assert E.is_prime()  # the zero ideal of a domain


def test_membership_box_oracle():
    cols = [(1, 0), (2, 2)]
    Q = AffineMonoid(IntMatrix.from_cols(cols))
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4), (5, 0)]))
    box = monoid_box(cols, 6)
    caps = [max(b[r] for b in box) for r in range(2)]
    members = ideal_members(I.gens.columns(), cols, caps)
    for b in sorted(box):
        witness = I.is_element(b)
        assert (witness is not None) == (b in members)
        if witness is not None:
            x, g = witness
            assert tuple(gi + v for gi, v in zip(g, Q.gens.mul(x))) == b


def test_arithmetic_box_oracle():
    cols = [(1, 0), (2, 2)]
    Q = AffineMonoid(IntMatrix.from_cols(cols))
    I = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    J = MonomialIdeal(Q, IntMatrix.from_cols([(5, 0)]))
    box = monoid_box(cols, 6)
    caps = [max(b[r] for b in box) for r in range(2)]
    mi = ideal_members(I.gens.columns(), cols, caps)
    mj = ideal_members(J.gens.columns(), cols, caps)
    both = ideal_members(I.intersect(J).gens.columns(), cols, caps)
    either = ideal_members((I + J).gens.columns(), cols, caps)
    for b in box:
        assert (b in both) == (b in mi and b in mj)
        assert (b in either) == (b in mi or b in mj)


def test_equality_and_hash(Q):
    I = MonomialIdeal(Q, IntMatrix.from_rows([[4, 6], [4, 6]]))
    J = MonomialIdeal(Q, IntMatrix.from_cols([(4, 4)]))
    assert I == J and hash(I) == hash(J)
    assert I.hash_string == J.hash_string
