"""Parameter map, potential forms, and beta classification."""

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from halfscatter.errors import DomainError, ParityError
from halfscatter.model import ModelParams, classify_beta, potential, reduce_group_indices


def integer_pair_potential(m, n, x):
    """Independent potential form for integer pairs (the reduction target)."""
    return (m * m + n * n - 1 - 2 * m * n * np.cosh(2 * x)) / np.sinh(2 * x) ** 2


def test_free_case_zero_potential():
    p = ModelParams(0.5, 0.5)
    x = np.linspace(0.01, 10, 100)
    assert np.max(np.abs(potential(p, x))) < 1e-14


def test_potential_1_1_closed_form():
    p = ModelParams(1.0, 1.0)
    x = np.linspace(0.05, 8, 60)
    assert np.max(np.abs(potential(p, x) - 3.0 / np.sinh(2 * x) ** 2)) < 1e-12


def test_potential_decays_exponentially():
    p = ModelParams(1.3, 2.7)
    assert abs(potential(p, 20.0)) < 1e-15
    assert abs(potential(p, 10.0)) < 1e-7


def test_potential_domain():
    with pytest.raises(DomainError):
        potential(ModelParams(1, 1), 0.0)
    with pytest.raises(DomainError):
        potential(ModelParams(1, 1), -2.0)


def test_reduce_group_indices_examples():
    assert reduce_group_indices(0, 0) == ModelParams(0.0, 0.0)
    assert reduce_group_indices(2, 0) == ModelParams(1.0, 1.0)
    assert reduce_group_indices(3, 1) == ModelParams(1.0, 2.0)


def test_reduce_group_indices_parity():
    with pytest.raises(ParityError):
        reduce_group_indices(2, 1)


def test_reduction_potential_identity_all_pairs():
    # sup norm scaled by the local magnitude: the potential reaches ~1e5 near
    # x = 0.01, where an absolute 1e-10 would be below double resolution
    x = np.linspace(0.01, 10, 400)
    for m in range(-6, 7):
        for n in range(-6, 7):
            if (m - n) % 2:
                continue
            p = reduce_group_indices(m, n)
            v = potential(p, x)
            diff = np.abs(v - integer_pair_potential(m, n, x))
            assert np.max(diff / np.maximum(1.0, np.abs(v))) < 1e-10, (m, n)


def test_alpha_beta_relations():
    p = ModelParams(1.25, 0.75)
    assert abs(p.alpha + p.beta - (1 + p.mu)) < 1e-15
    assert abs(p.alpha - p.beta - p.nu) < 1e-15
    assert p.alpha - p.beta >= 0  # nu >= 0 by construction


def test_params_reject_negative():
    with pytest.raises(DomainError):
        ModelParams(-0.1, 1.0)
    with pytest.raises(DomainError):
        ModelParams(0.0, -2.0)


def test_classify_beta_examples():
    assert classify_beta(ModelParams(2.0, 0.0)).kind == "positive"  # beta = 1.5
    bc = classify_beta(ModelParams(0.0, 3.0))  # beta = -1
    assert bc.kind == "negative_integer" and bc.n == 1
    bc = classify_beta(ModelParams(0.0, 2.5))  # beta = -0.75 = -1 + 0.25
    assert bc.kind == "negative_noninteger" and bc.n == 1
    assert abs(bc.epsilon - 0.25) < 1e-12


def test_classify_beta_zero_counts_as_integer():
    bc = classify_beta(ModelParams(1.0, 2.0))  # beta = 0
    assert bc.kind == "negative_integer" and bc.n == 0


def test_classify_beta_integer_tolerance():
    # float noise within 1e-12 of an integer must classify as that integer
    bc = classify_beta(ModelParams(0.0, 3.0 + 1e-13))
    assert bc.kind == "negative_integer" and bc.n == 1


@settings(max_examples=80, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=5.0),
    st.integers(min_value=0, max_value=4),
    st.floats(min_value=1e-6, max_value=1.0 - 1e-6),
)
def test_classify_beta_roundtrip(mu, n, eps):
    # build nu so that beta = -n + eps exactly in the parameter arithmetic
    nu = mu + 1.0 + 2 * n - 2 * eps
    assume(nu >= 0)
    p = ModelParams(mu, nu)
    bc = classify_beta(p)
    if bc.kind == "negative_noninteger":
        assert abs(-bc.n + bc.epsilon - p.beta) < 1e-12
    elif bc.kind == "negative_integer":
        # eps rounded onto an integer boundary within tolerance
        assert abs(p.beta - round(p.beta)) < 1e-12
    else:
        assert p.beta > 0
