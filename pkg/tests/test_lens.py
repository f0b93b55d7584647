"""Lens space parameter arithmetic."""

import pytest
from hypothesis import given, strategies as st

from lensurgery.lens import (LensError, LensParams, canonical_form,
                             homeomorphic, klein_bottle_params, normalize_u)


def test_validation():
    with pytest.raises(LensError):
        LensParams(6, 3)
    with pytest.raises(LensError):
        LensParams(5, 5)
    with pytest.raises(LensError):
        LensParams(0, 1)
    assert LensParams(1, 0).p == 1


def test_canonical_form_examples():
    assert canonical_form(16, 9) == LensParams(16, 7)
    assert canonical_form(5, 4) == LensParams(5, 1)
    assert canonical_form(7, 1) == LensParams(7, 1)
    assert canonical_form(7, 2) == LensParams(7, 2)
    assert canonical_form(20, 11) == LensParams(20, 9)


def test_homeomorphic_examples():
    assert homeomorphic(LensParams(16, 9), LensParams(16, 7))
    assert homeomorphic(LensParams(5, 4), LensParams(5, 1))
    assert not homeomorphic(LensParams(7, 1), LensParams(7, 2))


def _equivalent_q(p: int, q: int) -> set[int]:
    inv = pow(q, -1, p)
    return {q % p, (-q) % p, inv, (-inv) % p}


def test_canonical_form_matches_modular_oracle_small():
    import math
    for p in range(2, 60):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            canon = canonical_form(p, q)
            assert canon.q in _equivalent_q(p, q)
            assert 2 * canon.q <= p


def test_klein_bottle_params():
    assert klein_bottle_params(4) == LensParams(16, 7)
    assert klein_bottle_params(5) == LensParams(20, 9)
    with pytest.raises(LensError):
        klein_bottle_params(0)


def test_normalize_u():
    assert normalize_u(16, 13) == 3
    assert normalize_u(16, 3) == 3
    assert normalize_u(5, 4) == 1


@given(st.integers(2, 120), st.integers(1, 119))
def test_canonical_is_idempotent_and_symmetric(p, q):
    import math
    q = q % p
    if q == 0 or math.gcd(p, q) != 1:
        return
    canon = canonical_form(p, q)
    assert canonical_form(canon.p, canon.q) == canon
    assert homeomorphic(LensParams(p, q), canon)
