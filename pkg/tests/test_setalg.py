import itertools

import pytest
from hypothesis import given, strategies as st

from sumlabel.errors import GroundSetError, SumLabelError
from sumlabel.setalg import (
    GroundSet,
    compute_structural_sets,
    format_set,
    nontrivial_representations,
    parse_set,
    sumset,
)

from . import oracles

F = frozenset
intsets = st.frozensets(st.integers(min_value=0, max_value=12), min_size=1, max_size=6)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ({0}, {0, 2}, {0, 2}),
        ({1}, {1}, {2}),
        ({0, 1}, {0, 2}, {0, 1, 2, 3}),
    ],
)
def test_sumset_examples(a, b, expected):
    assert sumset(a, b) == F(expected)
    assert oracles.ssum(a, b) == F(expected)


def test_sumset_rejects_empty_operand():
    with pytest.raises(SumLabelError, match="empty set-label operand"):
        sumset(set(), {1})
    with pytest.raises(SumLabelError):
        sumset({1}, [])


def test_sumset_rejects_negative_members():
    with pytest.raises(SumLabelError):
        sumset({-1}, {0})


@given(intsets, intsets)
def test_commutative(a, b):
    assert sumset(a, b) == sumset(b, a)


@given(intsets, intsets, intsets)
def test_associative(a, b, c):
    assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c))


@given(intsets)
def test_zero_is_identity(a):
    assert sumset({0}, a) == a


@given(intsets, intsets)
def test_cardinality_and_extremes(a, b):
    s = sumset(a, b)
    assert max(len(a), len(b)) <= len(s) <= len(a) * len(b)
    assert min(s) == min(a) + min(b)
    assert max(s) == max(a) + max(b)
    assert s == oracles.ssum(a, b)


def test_ground_set_validation():
    with pytest.raises(GroundSetError, match="contain 0"):
        GroundSet([1, 2])
    with pytest.raises(GroundSetError):
        GroundSet([])
    with pytest.raises(GroundSetError):
        GroundSet(range(7))
    assert len(GroundSet(range(7), limit=7)) == 7


def test_ground_set_limit_env(monkeypatch):
    monkeypatch.setenv("SUMSET_MAX_GROUND", "3")
    with pytest.raises(GroundSetError):
        GroundSet([0, 1, 2, 3])
    GroundSet([0, 1, 2])


def test_masks_follow_sorted_elements():
    x = GroundSet([5, 0, 2])
    assert x.elements == (0, 2, 5)
    assert x.to_mask({0}) == 1
    assert x.to_mask({2, 5}) == 6
    assert x.from_mask(5) == F({0, 5})
    assert [sorted(s) for s in x.subsets()][:4] == [[0], [2], [0, 2], [5]]


@pytest.mark.parametrize("elements", [[0, 1], [0, 1, 2], [0, 2, 3], [0, 1, 2, 3], [0, 1, 5, 6]])
def test_sum_table_matches_direct_sums(elements):
    x = GroundSet(elements)
    for a, b in itertools.product(x.nonempty_masks(), repeat=2):
        s = oracles.ssum(x.from_mask(a), x.from_mask(b))
        expected = x.to_mask(s) if s <= x.as_set else -1
        assert x.sum_mask(a, b) == expected


def test_parse_and_format():
    assert parse_set("2,0,1") == F({0, 1, 2})
    assert parse_set("{0,3}") == F({0, 3})
    assert parse_set("") == F()
    assert format_set({3, 1}) == "1,3"
    assert format_set({3, 1}, braces=True) == "{1,3}"
    with pytest.raises(SumLabelError):
        parse_set("0,a")


class TestRepresentations:
    x = GroundSet([0, 1, 2])

    def test_self_pair_only(self):
        assert nontrivial_representations({2}, self.x) == [(F({1}), F({1}), True)]

    def test_single_pair(self):
        assert nontrivial_representations({1, 2}, self.x) == [(F({1}), F({0, 1}), False)]

    def test_only_trivial(self):
        assert nontrivial_representations({1}, self.x) == []

    def test_not_subset(self):
        with pytest.raises(SumLabelError, match="not a subset of ground set"):
            nontrivial_representations({3}, self.x)

    @pytest.mark.parametrize("elements", [[0, 1, 2], [0, 1, 3], [0, 1, 2, 3]])
    def test_against_oracle(self, elements):
        x = GroundSet(elements)
        for c in x.subsets():
            got = {F((a, b)) for a, b, _ in nontrivial_representations(c, x)}
            assert got == oracles.representations(c, elements)


def _family(x, masks):
    return {x.from_mask(m) for m in masks}


# frozen from tests/oracles.structural_sets
STRUCTURAL = {
    (0, 1): dict(
        A=[{0}, {1}, {0, 1}], B=[{1}, {0, 1}], D=[{1}, {0, 1}], rho=3, rho1=2, rho2=2
    ),
    (0, 1, 2): dict(
        A=[{0}, {1}, {0, 1}, {0, 2}],
        B=[{2}, {0, 2}, {1, 2}, {0, 1, 2}],
        D=[{0, 2}],
        rho=4, rho1=4, rho2=1,
    ),
    (0, 1, 2, 3): dict(
        A=[{0}, {1}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 3}, {0, 2, 3}], rho=7, rho1=8, rho2=3
    ),
}


@pytest.mark.parametrize("elements", sorted(STRUCTURAL))
def test_structural_set_examples(elements):
    want = STRUCTURAL[elements]
    x = GroundSet(elements)
    s = compute_structural_sets(x)
    assert _family(x, s.A) == {F(a) for a in want["A"]}
    assert (s.rho, s.rho_prime, s.rho_double_prime) == (want["rho"], want["rho1"], want["rho2"])
    if "B" in want:
        assert _family(x, s.B) == {F(b) for b in want["B"]}
        assert _family(x, s.D) == {F(d) for d in want["D"]}


def _grounds_up_to(top):
    for k in range(0, top + 1):
        for rest in itertools.combinations(range(1, top + 1), k):
            yield (0,) + rest


@pytest.mark.parametrize("elements", list(_grounds_up_to(4)))
def test_structural_sets_invariants_and_oracle(elements):
    x = GroundSet(elements)
    s = compute_structural_sets(x)
    A, B, D, Ap = oracles.structural_sets(elements)
    assert _family(x, s.A) == A
    assert _family(x, s.B) == B
    assert _family(x, s.D) == D
    assert _family(x, s.Aprime) == Ap
    assert set(s.D) == set(s.A) & set(s.B)
    assert set(s.Aprime) == set(x.nonempty_masks()) - set(s.A)
    assert x.zero_mask in s.A
    assert x.full_mask in s.B or len(x) == 1
    for m in s.Aprime:
        assert nontrivial_representations(x.from_mask(m), x)
    assert list(s.A) == sorted(s.A)
