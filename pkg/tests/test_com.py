import pytest
from hypothesis import given
import hypothesis.strategies as st

from covg import (
    COM,
    AxiomError,
    COMError,
    GroundSet,
    SignedPermutation,
    SignedVector,
    act,
    check_axioms,
    coloops,
    compose,
    contract,
    flat_poset,
    restrict,
    separator,
    topes,
    verify_automorphism,
)

sv = SignedVector.from_string

signs_st = st.lists(st.sampled_from([1, -1, 0]), min_size=1, max_size=6)


def test_compose_fills_single_zero():
    assert compose(sv("0+-+"), sv("-+-+")) == sv("-+-+")


def test_compose_identity_and_zero():
    assert compose(sv("00"), sv("+-")) == sv("+-")
    x = sv("+0-")
    assert compose(x, x) == x


def test_compose_length_mismatch():
    with pytest.raises(COMError):
        compose(sv("+"), sv("+-"))
    with pytest.raises(COMError):
        separator(sv("+"), sv("+-"))


def test_separator_examples():
    assert separator(sv("+-0"), sv("--+")) == frozenset({0})
    assert separator(sv("+0"), sv("-0")) == frozenset({0})
    x = sv("+0-")
    assert separator(x, x) == frozenset()


@given(signs_st, signs_st, signs_st)
def test_compose_associative_idempotent(a, b, c):
    n = min(len(a), len(b), len(c))
    x, y, z = SignedVector(a[:n]), SignedVector(b[:n]), SignedVector(c[:n])
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert compose(x, x) == x


@given(signs_st, signs_st)
def test_flat_of_composition_is_intersection(a, b):
    n = min(len(a), len(b))
    x, y = SignedVector(a[:n]), SignedVector(b[:n])
    assert compose(x, y).zero_set() == x.zero_set() & y.zero_set()


def test_axioms_pass_figure1(figure1):
    report = check_axioms(figure1.covectors)
    assert report.ok


def test_axioms_fail_two_opposite_topes():
    report = check_axioms([sv("+"), sv("-")])
    assert report.face_symmetry_ok
    assert not report.strong_elimination_ok
    x, y, i = report.strong_elimination_witness
    assert i == 0


def test_axioms_single_tope():
    assert check_axioms([sv("+-+")]).ok


def test_axioms_face_symmetry_failure():
    # {0, +} is closed for elimination trivia but +, -(+) = - is missing
    report = check_axioms([sv("0"), sv("+")])
    assert not report.face_symmetry_ok


def test_axioms_chunked_scan_matches(figure1, braid3, monkeypatch):
    # force the face-symmetry pair scan through many tiny chunks
    import covg.com as com_mod

    monkeypatch.setattr(com_mod, "_PAIR_CHUNK_ENTRIES", 8)
    assert check_axioms(figure1.covectors).ok
    assert check_axioms(braid3.covectors).ok
    report = check_axioms([v for v in figure1.covectors if v.to_string() != "-+-+"])
    assert not report.face_symmetry_ok
    x, y = report.face_symmetry_witness
    from covg.com import compose

    assert compose(x, -y) == sv("-+-+")


def test_axioms_catch_missing_meeting_point(figure1):
    # removing the common zero covector breaks strong elimination for pairs
    # of opposite rays, whose witness had to vanish on both lines
    family = [v for v in figure1.covectors if v.to_string() != "000+"]
    report = check_axioms(family)
    assert not report.strong_elimination_ok


def test_com_constructor_validates():
    with pytest.raises(AxiomError):
        COM(GroundSet(("a",)), [sv("+"), sv("-")])
    unchecked = COM.unchecked(GroundSet(("a",)), [sv("+"), sv("-")])
    assert len(unchecked) == 2


def test_com_closed_under_composition(corpus):
    for M in corpus.values():
        for x in M.covectors:
            for y in M.covectors:
                assert compose(x, y) in M


def test_topes_figure1(figure1):
    ts = {t.to_string() for t in topes(figure1)}
    assert ts == {"++++", "++-+", "-+-+", "---+", "--++", "+-++"}


def test_topes_braid3(braid3):
    assert len(topes(braid3)) == 6


def test_coloops(figure1, braid2):
    assert coloops(figure1) == frozenset()
    assert coloops(braid2) == frozenset()
    M = COM(GroundSet(("a", "b")), [sv("0+"), sv("0-"), sv("00")])
    assert coloops(M) == frozenset({0})


def test_tope_empty_with_coloop():
    M = COM(GroundSet(("a", "b")), [sv("0+"), sv("0-"), sv("00")])
    assert topes(M) == ()


def test_flat_poset_figure1(figure1):
    flats = {frozenset(figure1.ground.labels[i] for i in f) for f in flat_poset(figure1)}
    assert flats == {
        frozenset(),
        frozenset({"1"}),
        frozenset({"2"}),
        frozenset({"3"}),
        frozenset({"1", "2", "3"}),
    }


def test_flat_poset_rectangle(figure1_rect):
    flats = {
        frozenset(figure1_rect.ground.labels[i] for i in f)
        for f in flat_poset(figure1_rect)
    }
    assert frozenset({"4"}) in flats
    assert len(flats) == 6


def test_flat_poset_single_tope():
    M = COM(GroundSet(("a",)), [sv("+")])
    assert flat_poset(M).flats == (frozenset(),)


def test_flat_poset_intersection_closed(corpus):
    for M in corpus.values():
        flats = set(flat_poset(M).flats)
        for f in flats:
            for g in flats:
                assert f & g in flats
        assert flat_poset(M).minimum == coloops(M)


def test_restrict_figure1(figure1):
    R = restrict(figure1, frozenset({0, 1, 2}))
    assert R.ground.labels == ("1", "2", "3")
    assert SignedVector((0, 0, 0)) in R
    R2 = restrict(figure1, frozenset({1}))
    assert {v.to_string() for v in R2.covectors} == {"+", "-", "0"}


def test_restrict_empty_flat(figure1):
    R = restrict(figure1, frozenset())
    assert R.ground.size == 0
    assert len(R) == 1


def test_restrict_requires_flat(figure1):
    with pytest.raises(COMError):
        restrict(figure1, frozenset({3}))  # {4} is not a flat


def test_contract_figure1(figure1):
    C = contract(figure1, frozenset({1}))
    assert {v.to_string() for v in C.covectors} == {"+++", "00+", "--+"}
    assert C.ground.labels == ("1", "3", "4")
    C2 = contract(figure1, frozenset({0, 1, 2}))
    assert [v.to_string() for v in C2.covectors] == ["+"]


def test_contract_empty_flat_is_identity(figure1):
    assert contract(figure1, frozenset()) == figure1


def test_contract_never_has_coloops(corpus):
    for M in corpus.values():
        for F in flat_poset(M):
            assert coloops(contract(M, F)) == frozenset()


def test_act_and_automorphism(braid2, figure1):
    ident = SignedPermutation.identity(figure1.ground.size)
    assert verify_automorphism(figure1, ident)
    # swapping the two chambers of one hyperplane: sign flip
    flip = SignedPermutation((0,), (-1,))
    assert verify_automorphism(braid2, flip)
    assert act(flip, sv("+")) == sv("-")
    # sign flip at element 4 is not an automorphism: every covector has +
    flip4 = SignedPermutation((0, 1, 2, 3), (1, 1, 1, -1))
    assert not verify_automorphism(figure1, flip4)


def test_automorphisms_compose(figure1):
    flip123 = SignedPermutation((0, 1, 2, 3), (-1, -1, -1, 1))
    assert verify_automorphism(figure1, flip123)
    assert verify_automorphism(figure1, flip123.compose(flip123))


def test_signed_permutation_algebra():
    w = SignedPermutation((1, 2, 0), (1, -1, 1))
    assert w.compose(w.inverse()) == SignedPermutation.identity(3)
    assert w.inverse().compose(w) == SignedPermutation.identity(3)
    x = sv("+-0")
    assert act(w.inverse(), act(w, x)) == x


def test_com_json_roundtrip(figure1):
    data = figure1.to_json_dict()
    again = COM.from_json_dict(data)
    assert again == figure1


def test_empty_ground_set():
    M = COM(GroundSet(()), [SignedVector(())])
    assert len(M) == 1
    assert topes(M) == (SignedVector(()),)
    assert flat_poset(M).flats == (frozenset(),)
