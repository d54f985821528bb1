import pytest
from hypothesis import given

from strategies import closure_closed_form, genfns, pointwise_leq, waning_fns
from waning import (
    CONST_OMEGA,
    CONST_ZERO,
    OMEGA,
    GenFn,
    NotWaning,
    OmegaEntries,
    WaningFn,
    closure,
    count_with_first_value_below,
    descending_chain_element,
    enumerate_below,
    is_omega,
    is_waning,
    join,
    meet_if_waning,
    preceq,
    staircase,
)


def horizon(*fns):
    ends = [0 if w.const_omega else w.support_end for w in fns]
    return max(ends) + 2


# the worked piecewise example: OMEGA up to 42, then 1337 - x, then 0
EXAMPLE = GenFn(
    prefix=tuple([OMEGA] * 43 + [1337 - x for x in range(43, 69)]),
    tail=0,
    omega=0,
)


def test_eval_example_fixture():
    assert EXAMPLE(50) == 1287
    assert is_omega(EXAMPLE(10))
    assert EXAMPLE(69) == 0
    assert EXAMPLE(OMEGA) == 0
    assert is_waning(EXAMPLE)


def test_eval_tail_form_at_top_point():
    assert WaningFn(drops=(3, 1))(OMEGA) == 0
    assert is_omega(CONST_OMEGA(OMEGA))


def test_is_waning_examples():
    assert is_waning(GenFn())
    assert not is_waning(GenFn(prefix=(2, 2)))
    assert is_waning(GenFn(prefix=(OMEGA, 3, 2, 1)))
    # constant OMEGA on the finite indices only is not waning
    assert not is_waning(GenFn(tail=OMEGA, omega=0))
    assert is_waning(GenFn(tail=OMEGA, omega=OMEGA))


def test_closure_examples():
    assert closure(GenFn(prefix=(5, 5, 5))) == WaningFn(drops=(5, 4, 3))
    w = WaningFn(omega_prefix=1, drops=(4, 2))
    assert closure(w.as_genfn()) == w
    assert closure(GenFn(tail=OMEGA, omega=0)) == CONST_OMEGA


def test_closure_of_example_fixture():
    got = closure(EXAMPLE)
    assert got.omega_prefix == 43
    assert got.drops == tuple(1337 - x for x in range(43, 69))


@given(genfns())
def test_closure_laws(f):
    c = closure(f)
    assert is_waning(c.as_genfn())
    window = (0 if c.const_omega else c.support_end) + len(f.prefix) + 2
    assert pointwise_leq(c, f, window)
    assert closure(c.as_genfn()) == c
    for i in range(window):
        assert c(i) == closure_closed_form(f, i)


def test_preceq_examples():
    assert preceq(WaningFn(drops=(3, 1)), WaningFn(drops=(2,)))
    f, g = WaningFn(drops=(5, 1)), WaningFn(drops=(3, 2, 1))
    assert not preceq(f, g) and not preceq(g, f)
    assert preceq(f, f)
    assert preceq(CONST_OMEGA, f) and not preceq(f, CONST_OMEGA)
    assert preceq(f, CONST_ZERO)


def test_join_examples():
    assert join(WaningFn(drops=(5, 1)), WaningFn(drops=(3, 2, 1))) == WaningFn(
        drops=(3, 1)
    )
    f = WaningFn(drops=(4, 2))
    assert join(f, CONST_OMEGA) == f
    assert join(f, CONST_ZERO) == CONST_ZERO


def test_meet_examples():
    assert meet_if_waning(
        WaningFn(drops=(5, 1)), WaningFn(drops=(3, 2, 1))
    ) == WaningFn(drops=(5, 2, 1))
    f = WaningFn(drops=(4, 2))
    assert meet_if_waning(f, f) == f
    assert meet_if_waning(CONST_OMEGA, f) == CONST_OMEGA


@given(waning_fns(), waning_fns(), waning_fns())
def test_join_is_least_upper_bound(f, g, h):
    j = join(f, g)
    assert preceq(f, j) and preceq(g, j)
    if preceq(f, h) and preceq(g, h):
        assert preceq(j, h)


@given(waning_fns(), waning_fns())
def test_join_meet_algebra(f, g):
    assert join(f, g) == join(g, f)
    assert join(f, f) == f
    m = meet_if_waning(f, g)
    assert preceq(m, f) and preceq(m, g)


@given(waning_fns(), waning_fns(), waning_fns())
def test_join_associative(f, g, h):
    assert join(join(f, g), h) == join(f, join(g, h))


def test_enumerate_below_examples():
    assert enumerate_below(WaningFn(drops=(1,))) == [
        CONST_ZERO,
        WaningFn(drops=(1,)),
    ]
    assert enumerate_below(CONST_ZERO) == [CONST_ZERO]
    assert len(enumerate_below(WaningFn(drops=(2,)))) == 3
    with pytest.raises(OmegaEntries):
        enumerate_below(CONST_OMEGA)
    with pytest.raises(OmegaEntries):
        enumerate_below(WaningFn(omega_prefix=1, drops=(1,)))


def test_enumerate_below_is_downset():
    f = WaningFn(drops=(3, 2))
    below = enumerate_below(f)
    assert len(set(below)) == len(below)
    for h in below:
        assert pointwise_leq(h, f, horizon(h, f))
        assert preceq(f, h)


def test_census_counts():
    for c in range(11):
        assert count_with_first_value_below(c) == 2**c


def test_census_membership():
    fns = enumerate_below(staircase(3))
    assert len(fns) == 8
    assert all(w(0) <= 3 for w in fns)


def test_census_subset_bijection():
    # independent construction: a function starting at v >= 1 is exactly a
    # choice of which values below v remain nonzero
    import itertools

    c = 5
    built = {CONST_ZERO}
    for v in range(1, c + 1):
        for size in range(v):
            for rest in itertools.combinations(range(v - 1, 0, -1), size):
                built.add(WaningFn(drops=(v, *rest)))
    assert built == set(enumerate_below(staircase(c)))
    assert len(built) == 2**c


def test_chain_examples():
    assert descending_chain_element(0) == CONST_ZERO
    assert descending_chain_element(2) == WaningFn(drops=(2,))
    assert preceq(descending_chain_element(5), descending_chain_element(4))
    assert not preceq(descending_chain_element(4), descending_chain_element(5))


def test_canonical_equality_is_pointwise():
    f = WaningFn(omega_prefix=1, drops=(3, 1))
    g = WaningFn(omega_prefix=1, drops=(3, 2))
    assert f != g
    assert any(f(i) != g(i) for i in range(horizon(f, g)))
    same = WaningFn(omega_prefix=1, drops=(3, 1))
    assert f == same and hash(f) == hash(same)


def test_from_values_rejects_bad_shapes():
    with pytest.raises(NotWaning):
        WaningFn.from_values([2, 2])
    with pytest.raises(NotWaning):
        WaningFn.from_values([0, 3])
    with pytest.raises(NotWaning):
        WaningFn.from_values([3, OMEGA])
