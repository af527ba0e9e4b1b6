import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nongenerators import (
    build_poset,
    check_coatom_characterization,
    check_finite_collapse,
    check_frattini_laws,
    frattini_analysis,
    frattini_element,
    is_1_compact,
    is_very_weakly_1_compact,
    is_weakly_1_compact,
    nongenerator_join,
    nongenerators,
)
from nongenerators.builders import random_join_semilattice, random_poset
from nongenerators.frattini import compactness

random_posets = st.builds(
    random_poset, n=st.integers(1, 7), edge_density=st.floats(0, 1),
    seed=st.integers(0, 2**32 - 1),
)


@pytest.fixture
def split():
    """Two maximal elements over two incomparable common lower bounds."""
    return build_poset(
        ["c", "d", "p", "q", "1"],
        [("c", "p"), ("c", "q"), ("d", "p"), ("d", "q"), ("p", "1"), ("q", "1")],
    )


def test_compactness_examples(m2, chain3):
    assert is_1_compact(m2, "1")
    assert is_1_compact(chain3, "m")
    assert is_weakly_1_compact(m2, "b")
    for x in m2:
        c = compactness(m2, x)
        assert c.one_compact and c.weakly and c.very_weakly


def test_top_chains_would_empty_the_weak_notions(m2, singleton):
    # the one-element chain {1} generates the top but lies under no r < 1
    assert not is_weakly_1_compact(m2, "0", include_top_chains=True)
    assert not is_very_weakly_1_compact(singleton, "1", include_top_chains=True)
    assert is_1_compact(m2, "0")


def test_frattini_element(m2, pq, singleton, chain3):
    assert frattini_element(m2) == "0"
    assert frattini_element(pq) is None
    assert frattini_element(singleton) == "1"
    assert frattini_element(chain3) == "m"


def test_nongenerator_join(m2, chain3, pq):
    assert nongenerator_join(m2) == "0"
    assert nongenerator_join(chain3) == "m"
    assert nongenerator_join(pq) is None


def test_absent_reason_codes(pq, split):
    r = frattini_analysis(pq)
    assert (r.phi, r.phi_reason) == (None, "NoMeet")
    assert (r.nongen_join, r.nongen_join_reason) == (None, "EmptyFamily")
    assert r.agree
    r = frattini_analysis(split)
    assert nongenerators(split) == ["c", "d"]
    assert (r.phi_reason, r.nongen_join_reason) == ("NoMeet", "NoJoin")


@pytest.mark.parametrize("fixture", ["m2", "pq", "singleton", "chain3", "split"])
def test_laws_on_small_posets(request, fixture):
    P = request.getfixturevalue(fixture)
    assert check_coatom_characterization(P).passed
    assert all(r.passed for r in check_frattini_laws(P))
    assert all(r.passed for r in check_finite_collapse(P))


def test_semilattice_check_skipped_without_nongenerators(pq):
    law = {r.law: r for r in check_frattini_laws(pq)}["semilattice_frattini"]
    assert law.passed and law.skipped == 1


def test_semilattice_check_runs_on_m2(m2):
    law = {r.law: r for r in check_frattini_laws(m2)}["semilattice_frattini"]
    assert law.passed and law.checked == 1


@settings(max_examples=200, deadline=None)
@given(random_posets)
def test_compactness_implications_and_collapse(P):
    for a in P:
        c = compactness(P, a)
        assert not c.one_compact or c.weakly
        assert not c.weakly or c.very_weakly
        assert c.one_compact


@settings(max_examples=200, deadline=None)
@given(random_posets)
def test_frattini_matches_oracle(P):
    N = oracles.NaivePoset.from_poset(P)
    phi = frattini_element(P)
    assert phi == oracles.frattini(N)
    ng = oracles.nongenerators(N)
    assert set(nongenerators(P)) == ng
    if phi is not None:
        assert all(P.le(a, phi) for a in ng)
    assert phi == (oracles.join(N, ng) if ng else None)


@settings(max_examples=200, deadline=None)
@given(random_posets)
def test_frattini_laws_hold(P):
    assert check_coatom_characterization(P).passed
    assert all(r.passed for r in check_frattini_laws(P))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_join_semilattices_with_nongenerator_have_frattini(n, seed):
    P = random_join_semilattice(n, seed)
    if nongenerators(P):
        assert frattini_element(P) == nongenerator_join(P) is not None
