from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from covg.exactla import (
    QQ,
    ExactLAError,
    FpRowSpace,
    Polynomial,
    PrimeField,
    RationalRowSpace,
    apply_point_permutation,
    elementary_symmetric,
    field_from_name,
)

GF = PrimeField(1000003)


def test_field_parsing():
    assert field_from_name("rational") is QQ or field_from_name("rational") == QQ
    assert field_from_name("fp:101").p == 101
    with pytest.raises(ValueError):
        field_from_name("fp:100")
    with pytest.raises(ValueError):
        field_from_name("real")


def test_prime_field_coercion():
    assert GF.of(Fraction(1, 2)) == (1000003 + 1) // 2
    assert GF.of(-1) == 1000002
    assert GF.inv(GF.of(7)) * 7 % GF.p == 1


def test_polynomial_ring_basics():
    vars = ("y", "z")
    y = Polynomial.variable(vars, "y")
    z = Polynomial.variable(vars, "z")
    zero = Polynomial.zero(vars)
    one = Polynomial.one(vars)
    assert y + zero == y
    assert y * one == y
    assert (y + z) * (y - z) == y * y - z * z
    assert (y + z).degree() == 1
    assert not (y + z * z).is_homogeneous()
    assert (y * z).evaluate([Fraction(3), Fraction(5)]) == 15


def test_polynomial_variable_mismatch():
    y = Polynomial.variable(("y",), "y")
    z = Polynomial.variable(("z",), "z")
    with pytest.raises(ExactLAError):
        y + z


def test_elementary_symmetric():
    vars = ("a", "b", "c")
    a, b, c = (Polynomial.variable(vars, v) for v in vars)
    assert elementary_symmetric(0, [a, b]) == Polynomial.one(vars)
    assert elementary_symmetric(2, [a, b, c]) == a * b + a * c + b * c
    with pytest.raises(ExactLAError):
        elementary_symmetric(3, [a, b])


def test_top_degree_form():
    vars = ("x",)
    x = Polynomial.variable(vars, "x")
    f = x * x + x - Polynomial.one(vars)
    assert f.top_degree_form() == x * x


coeff_st = st.integers(min_value=-9, max_value=9)


@given(
    st.lists(st.tuples(coeff_st, st.tuples(st.integers(0, 3), st.integers(0, 3))), max_size=6),
    st.lists(st.tuples(coeff_st, st.tuples(st.integers(0, 3), st.integers(0, 3))), max_size=6),
)
def test_fp_matches_rational_mod_p(terms1, terms2):
    """Integer polynomial arithmetic mod p agrees with exact arithmetic reduced mod p."""
    vars = ("u", "v")

    def build(terms, field):
        out = Polynomial.zero(vars, field)
        for c, e in terms:
            out = out + Polynomial.monomial(vars, e, field.of(c), field)
        return out

    pq = build(terms1, QQ) * build(terms2, QQ) + build(terms1, QQ)
    pf = build(terms1, GF) * build(terms2, GF) + build(terms1, GF)
    reduced = {e: GF.of(c) for e, c in pq.terms.items() if GF.of(c) != 0}
    assert reduced == pf.terms


def _spaces(ambient):
    return [RationalRowSpace(ambient), FpRowSpace(ambient, 1000003)]


def test_rowspace_insert_idempotent():
    for rs in _spaces(3):
        assert rs.insert([1, 0, 0])
        assert not rs.insert([1, 0, 0])
        assert not rs.insert([2, 0, 0])
        assert rs.rank == 1


def test_rowspace_span_membership():
    for rs in _spaces(2):
        rs.insert([1, 0])
        rs.insert([0, 1])
        assert rs.contains([2, 3])
        assert rs.rank == 2


def test_rowspace_rational_fractions():
    rs = RationalRowSpace(2)
    rs.insert([Fraction(1, 2), Fraction(1, 3)])
    assert rs.contains([Fraction(3), Fraction(2)])
    assert not rs.contains([1, 0])


def test_rowspace_expansion_coefficients():
    rs = RationalRowSpace(3)
    rs.insert([1, 1, 0])
    rs.insert([0, 1, 1])
    coeffs = rs.expansion_coefficients([2, 5, 3])
    assert coeffs is not None
    rebuilt = [sum(c * r[k] for c, r in zip(coeffs, rs.rows)) for k in range(3)]
    assert rebuilt == [2, 5, 3]
    assert rs.expansion_coefficients([1, 0, 0]) is None


def test_trace_identity_is_rank():
    for rs in _spaces(4):
        rs.insert([1, 2, 0, 0])
        rs.insert([0, 0, 1, 1])
        assert rs.trace_under_permutation((0, 1, 2, 3)) == 2


def test_trace_full_space_counts_fixed_points():
    perm = (1, 0, 2, 4, 3)  # fixed points: just index 2
    for rs in _spaces(5):
        for i in range(5):
            rs.insert([int(i == j) for j in range(5)])
        assert rs.trace_under_permutation(perm) == 1


def test_trace_swap_on_diagonal_line():
    for rs in _spaces(2):
        rs.insert([1, 1])
        assert rs.trace_under_permutation((1, 0)) == 1


def test_trace_rejects_noninvariant_subspace():
    for rs in _spaces(2):
        rs.insert([1, 0])
        with pytest.raises(ExactLAError):
            rs.trace_under_permutation((1, 0))


@given(
    st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4),
)
def test_rank_agrees_between_fields(rows):
    """Entries are tiny, so every minor is far below p and ranks must agree."""
    rq = RationalRowSpace(4)
    rp = FpRowSpace(4, 1000003)
    for row in rows:
        rq.insert(row)
        rp.insert(row)
    assert rq.rank == rp.rank


@given(st.permutations(list(range(5))), st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=3))
@settings(max_examples=60)
def test_trace_conjugation_invariance(g, seeds):
    """Trace of g on an orbit-closed span equals the trace of hgh^-1 on the moved span."""
    h = (1, 2, 3, 4, 0)
    g = tuple(g)

    def orbit_closure(vectors, perm):
        rs = RationalRowSpace(5)
        for v in vectors:
            w = list(v)
            for _ in range(6):
                rs.insert(w)
                w = apply_point_permutation(w, perm)
        return rs

    rs = orbit_closure(seeds, g)
    t1 = rs.trace_under_permutation(g)
    hg = tuple(h[g[_inv(h)[k]]] for k in range(5))  # h g h^-1
    moved = orbit_closure([apply_point_permutation(v, h) for v in seeds], hg)
    t2 = moved.trace_under_permutation(hg)
    assert t1 == t2


def _inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return out


def test_rank_never_exceeds_ambient():
    rs = RationalRowSpace(2)
    rs.insert([1, 0])
    rs.insert([0, 1])
    assert not rs.insert([1, 1])
    assert rs.rank == 2
