import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from mpmath import mpf

from monobound import monogamy as mg
from monobound.errors import DegenerateInputError, InvalidInputError, PreconditionError
from monobound.ineq import BoundParams, alpha_min
from monobound.monogamy import PartitionedMeasures
import oracles

R2 = math.sqrt(2)
E_AB, E_AC = 0.5, R2 / 4
# 50-digit evaluations, frozen.
THM1_EXAMPLE = 0.031005859375  # alpha=6, gamma=2, m=0
Z1_AT_6 = 0.0436025390625  # alpha=6, gamma=2, m=2, k=0.8
EB_AB, EB_AC = 0.14988743661168018431, 0.052793582345407003491
T1_AT_3 = 0.0061618302430994448121  # exact Bures inputs, m=2
LEMMA5_EXAMPLE = 128.74662962962962963  # (3, 2, 1), x=3, m=1


def thm3_oracle(e, tails, n, alpha, gamma, m, k):
    """Direct transcription of the mixed-regime bound in 50-digit arithmetic."""
    e = [mpf(v) for v in e]
    tails = [mpf(v) for v in tails]
    a, g, m, k = map(mpf, (alpha, gamma, m, k))
    x = a / g
    big_m = ((1 + k) ** x - 1) / k**x + k**x
    mt = [big_m - (tails[i] / e[i]) ** a + m * x * (e[i] ** g / tails[i] ** g - 1 / k) for i in range(n)]
    total = e[0] ** a
    for i in range(1, n):
        total += math.prod(mt[:i]) * e[i] ** a
    inner = e[-1] ** a
    for j in range(n + 1, len(e)):
        ej, tj = e[j - 1], tails[j - 1]
        inner += (big_m - (ej / tj) ** a + m * x * (tj**g / ej**g - 1 / k)) * ej**a
    return total + math.prod(mt) * inner


def test_frozen_values_match_oracle():
    assert float(oracles.thm2(E_AB, E_AC, 6, 2, 0, 1)) == pytest.approx(THM1_EXAMPLE, rel=1e-15)
    assert float(oracles.thm2(E_AB, E_AC, 6, 2, 2, 0.8)) == pytest.approx(Z1_AT_6, rel=1e-15)
    c_ab, c_ac = 2 * mpf(10).sqrt() / 9, mpf(4) / 9
    assert float(oracles.thm6([oracles.bures(c_ab), oracles.bures(c_ac)], 3, 1, 2)) == pytest.approx(T1_AT_3, rel=1e-15)
    assert float(oracles.lemma5([3, 2, 1], 3, 1)) == pytest.approx(LEMMA5_EXAMPLE, rel=1e-15)


def test_thm1_equality_case():
    for alpha, m in [(4, 0), (6, 2), (9.5, 3)]:
        p = BoundParams(alpha, 2, m)
        assert mg.thm1_bound(0.3, 0.3, p) == pytest.approx(2 ** (alpha / 2) * 0.3**alpha, rel=1e-12)


def test_thm1_example():
    assert mg.thm1_bound(E_AB, E_AC, BoundParams(6, 2, 0)) == pytest.approx(THM1_EXAMPLE, rel=1e-14)


def test_thm1_ignores_k_and_grows_with_m():
    p = BoundParams(6, 2, 0, k=0.3)
    assert mg.thm1_bound(E_AB, E_AC, p) == pytest.approx(THM1_EXAMPLE, rel=1e-14)
    assert mg.thm1_bound(E_AB, E_AC, BoundParams(6, 2, 2)) >= THM1_EXAMPLE


def test_thm1_order_violation():
    with pytest.raises(PreconditionError):
        mg.thm1_bound(E_AC, E_AB, BoundParams(6, 2, 0))


def test_thm2_examples():
    assert mg.thm2_bound(E_AB, E_AC, BoundParams(6, 2, 2, 1)) == pytest.approx(
        mg.thm1_bound(E_AB, E_AC, BoundParams(6, 2, 2)), abs=1e-12)
    z1 = mg.thm2_bound(E_AB, E_AC, BoundParams(6, 2, 2, 0.8))
    assert z1 == pytest.approx(Z1_AT_6, rel=1e-14)
    assert z1 > mg.thm2_bound(E_AB, E_AC, BoundParams(6, 2, 0, 0.8))


def test_thm2_preconditions():
    with pytest.raises(PreconditionError) as exc:
        mg.thm2_bound(E_AB, E_AC, BoundParams(6, 2, 0, 0.4))  # t = 1/2 > k
    assert exc.value.index == 1
    with pytest.raises(PreconditionError):
        mg.thm2_bound(E_AB, E_AC, BoundParams(6, 2, 0, 1.5))
    with pytest.raises(DegenerateInputError):
        mg.thm2_bound(E_AB, 0.0, BoundParams(6, 2))
    with pytest.raises(InvalidInputError):
        mg.thm2_bound(E_AB, -0.1, BoundParams(6, 2))


@settings(max_examples=300, deadline=None)
@given(st.floats(0.01, 1), st.floats(0.01, 1), st.floats(0.05, 1), st.floats(0, 6), st.floats(0, 8),
       st.sampled_from([1.0, 2.0]))
def test_thm2_below_power_sum(a, b, k, m, extra, gamma):
    e_ab, e_ac = max(a, b), min(a, b)
    assume(k * e_ab**gamma >= e_ac**gamma)
    p = BoundParams(alpha_min(m, gamma) + extra, gamma, m, k)
    truth = (e_ab**gamma + e_ac**gamma) ** p.x
    got = mg.thm2_bound(e_ab, e_ac, p)
    assert got <= truth * (1 + 1e-9)
    assert got == pytest.approx(float(oracles.thm2(e_ab, e_ac, p.alpha, gamma, m, k)), rel=1e-9)


def test_partitioned_measures_validation():
    PartitionedMeasures([0.5, 0.4, 0.3], [0.4, 0.3], 1)
    with pytest.raises(InvalidInputError):
        PartitionedMeasures([0.5, 0.4, 0.3], [0.4], 1)
    with pytest.raises(InvalidInputError):
        PartitionedMeasures([0.5, 0.4, 0.3], [0.4, 0.3], 0)
    with pytest.raises(InvalidInputError):
        PartitionedMeasures([0.5], [], 1)


def test_thm3_uniform_case():
    c, alpha = 0.4, 6.0
    x = alpha / 2
    pm = PartitionedMeasures([c, c, c], [c, c], 1)
    got = mg.thm3_bound(pm, BoundParams(alpha, 2, 0, 1))
    assert got == pytest.approx(c**alpha * (1 + (2**x - 1) * 2**x), rel=1e-12)


@pytest.mark.parametrize("e, tails, n, m, k", [
    ([0.6, 0.2, 0.25, 0.3], [0.4, 0.3, 0.35], 1, 0, 1),
    ([0.6, 0.5, 0.2, 0.3], [0.4, 0.3, 0.35], 2, 2, 0.9),
    ([0.7, 0.6, 0.2, 0.25, 0.3], [0.5, 0.4, 0.3, 0.35], 2, 1, 1),
])
def test_thm3_against_transcription(e, tails, n, m, k):
    p = BoundParams(alpha_min(m, 2) + 1, 2, m, k)
    got = mg.thm3_bound(PartitionedMeasures(e, tails, n), p)
    assert got == pytest.approx(float(thm3_oracle(e, tails, n, p.alpha, 2, m, k)), rel=1e-12)


def test_thm3_names_failing_index():
    p = BoundParams(4, 2, 0, 1)
    with pytest.raises(PreconditionError) as exc:
        mg.thm3_bound(PartitionedMeasures([0.6, 0.2, 0.1, 0.1], [0.4, 0.3, 0.1], 2), p)
    assert exc.value.index == 2
    with pytest.raises(PreconditionError) as exc:
        mg.thm3_bound(PartitionedMeasures([0.6, 0.5, 0.4, 0.1], [0.4, 0.3, 0.1], 1), p)
    assert exc.value.index == 2


def test_cor4_three_parties_is_thm2():
    p = BoundParams(6, 2, 2, 0.8)
    assert mg.cor4_bound([E_AB, E_AC], [E_AC], p) == pytest.approx(mg.thm2_bound(E_AB, E_AC, p), rel=1e-14)


@pytest.mark.parametrize("n_pairs", [2, 3, 5])
def test_cor4_uniform_geometric_sum(n_pairs):
    c = 0.3
    got = mg.cor4_bound([c] * n_pairs, [c] * (n_pairs - 1), BoundParams(4, 2, 0, 1))
    assert got == pytest.approx(c**4 * sum(3**i for i in range(n_pairs)), rel=1e-12)


def test_cor4_nondecreasing_in_m():
    e, tails = [0.6, 0.5, 0.4], [0.4, 0.3]
    vals = [mg.cor4_bound(e, tails, BoundParams(9, 2, m, 0.9)) for m in (0, 1, 2, 4)]
    assert vals == sorted(vals)
    with pytest.raises(PreconditionError) as exc:
        mg.cor4_bound(e, [0.4, 0.48], BoundParams(9, 2, 0, 0.9))
    assert exc.value.index == 2


def test_lemma5_examples():
    assert mg.lemma5_rhs([0.7], 3, 1) == pytest.approx(0.7**3)
    assert mg.lemma5_rhs([0.2] * 4, 3.5, 0) == pytest.approx(4**3.5 * 0.2**3.5, rel=1e-12)
    got = mg.lemma5_rhs([3, 2, 1], 3, 1)
    assert got == pytest.approx(LEMMA5_EXAMPLE, rel=1e-14)
    assert got <= 216
    with pytest.raises(PreconditionError):
        mg.lemma5_rhs([1, 2, 3], 3, 1)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(1e-3, 10), min_size=1, max_size=6), st.floats(0, 6), st.floats(0, 6))
def test_lemma5_below_power_of_sum(p, m, extra):
    p = sorted(p, reverse=True)
    x = 1 + math.log2(m + 2) + extra
    assert mg.lemma5_rhs(p, x, m) <= sum(p) ** x * (1 + 1e-9)


def test_thm6_example():
    p = BoundParams(3, 1, 2)
    assert mg.thm6_bound([EB_AB, EB_AC], p) == pytest.approx(T1_AT_3, rel=1e-14)
    rounded = mg.thm6_bound([0.14989, 0.05279], p)
    assert rounded == pytest.approx(float(oracles.thm6([0.14989, 0.05279], 3, 1, 2)), rel=1e-13)


def test_thm6_equal_values():
    for n in (2, 3, 5):
        got = mg.thm6_bound([0.2] * n, BoundParams(6, 2, 0))
        assert got == pytest.approx(n**3 * 0.2**6, rel=1e-12)


def test_thm6_rejects_unsorted():
    with pytest.raises(PreconditionError):
        mg.thm6_bound([0.1, 0.2], BoundParams(3, 1))


def test_cor7_levels():
    c = mg.cor7_chain([0.3, 0.3], BoundParams(4, 2, 0))
    assert c.full == pytest.approx(c.without_m) == pytest.approx(c.without_tau)
    e1, e2, a = EB_AB, EB_AC, 3
    tau = e1 / e2
    c = mg.cor7_chain([e1, e2], BoundParams(a, 1, 2))
    assert c.full == pytest.approx(T1_AT_3, rel=1e-14)
    assert c.without_m == pytest.approx(e1**a + (2**a - tau**-a) * e2**a, rel=1e-14)
    assert c.without_tau == pytest.approx(e1**a + (2**a - 1) * e2**a, rel=1e-14)
    assert c.flat == pytest.approx(c.without_tau, rel=1e-14)  # N = 3
    assert c.plain == pytest.approx(e1**a + e2**a, rel=1e-14)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(1e-3, 1), min_size=1, max_size=6), st.floats(0, 6), st.floats(0, 6),
       st.sampled_from([1.0, 2.0]))
def test_cor7_nonincreasing_and_sound(e, m, extra, gamma):
    e = sorted(e, reverse=True)
    p = BoundParams(alpha_min(m, gamma) + extra, gamma, m)
    chain = mg.cor7_chain(e, p)
    for hi, lo in zip(chain, chain[1:]):
        assert lo <= hi + 1e-12 * max(1.0, hi)
    truth = sum(v**gamma for v in e) ** p.x
    assert chain.full <= truth * (1 + 1e-9)


def test_bures_simple_examples():
    assert mg.bures_simple_bound([0.4, 0.1], 1) == pytest.approx(0.5)
    assert mg.bures_simple_bound([0.14989, 0.05279], 3) == pytest.approx(0.14989**3 + 7 * 0.05279**3, rel=1e-14)
    with pytest.raises(InvalidInputError):
        mg.bures_simple_bound([0.4, 0.1], 0.5)
    with pytest.raises(PreconditionError):
        mg.bures_simple_bound([0.1, 0.4], 2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(1e-3, 1), min_size=2, max_size=6), st.floats(2, 10))
def test_bures_simple_below_m_zero_level(e, alpha):
    e = sorted(e, reverse=True)
    p = BoundParams(alpha, 1, 0)
    # tau_i >= i - 1 for descending input, so the tau-corrections are nonnegative
    assert mg.bures_simple_bound(e, alpha) <= mg.cor7_chain(e, p).without_m * (1 + 1e-12)


def test_all_bounds_nondecreasing_in_m():
    e_ab, e_ac = 0.6, 0.4
    for m_grid in ([0, 0.5, 1, 2], [0, 2, 4, 6]):
        alpha = alpha_min(max(m_grid), 2) + 0.5
        for fn in (lambda p: mg.thm1_bound(e_ab, e_ac, p), lambda p: mg.thm2_bound(e_ab, e_ac, p),
                   lambda p: mg.thm6_bound([e_ab, e_ac, 0.1], p)):
            vals = [fn(BoundParams(alpha, 2, m, 0.8)) for m in m_grid]
            assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_evaluate_bounds_three_parties():
    p = BoundParams(6, 2, 2, 0.8)
    out = mg.evaluate_bounds([E_AC, E_AB], p)
    assert out["thm2"] == pytest.approx(Z1_AT_6, rel=1e-14)
    assert out["cor4"] == pytest.approx(Z1_AT_6, rel=1e-14)
    assert out["thm3"].startswith("skipped")
    assert "bures_simple" not in out
    assert set(out) == set(mg.BOUND_NAMES) - {"bures_simple"}


def test_evaluate_bounds_reports_skips():
    out = mg.evaluate_bounds([0.5, 0.45], BoundParams(6, 2, 0, 0.5))
    assert out["thm2"].startswith("skipped: precondition")
    assert isinstance(out["thm1"], float)
    out = mg.evaluate_bounds([0.0, 0.0], BoundParams(6, 2), bures=True)
    assert all(v.startswith("skipped: degenerate") for k, v in out.items() if k != "thm3")
    out = mg.evaluate_bounds([0.5, 0.4, 0.3], BoundParams(3, 1), bures=True)
    assert out["thm3"].startswith("skipped") and out["thm1"].startswith("skipped")
    assert isinstance(out["cor7_full"], float) and isinstance(out["bures_simple"], float)
