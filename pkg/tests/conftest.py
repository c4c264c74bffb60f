import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from lfspp import Instance, Pack
from lfspp import _search


def brute_force_packs(inst):
    """Every x in {0,1}^n with A x <= 1, in lexicographic order of x.

    Independent of the library's search: plain row sums over all 2^n vectors.
    """
    rows = inst.A.tolist()
    out = []
    for x in itertools.product((0, 1), repeat=inst.n):
        if all(sum(a * b for a, b in zip(row, x)) <= 1 for row in rows):
            out.append(x)
    return out


def brute_force_value(inst, x):
    num = sum(cj * xj for cj, xj in zip(inst.c, x)) + inst.alpha
    den = sum(dj * xj for dj, xj in zip(inst.d, x)) + inst.beta
    return Fraction(num, den)


def brute_force_optima(inst):
    values = {x: brute_force_value(inst, x) for x in brute_force_packs(inst)}
    best = max(values.values())
    return best, [x for x, v in values.items() if v == best]


def with_admissible_beta(A, c, d, alpha, extra):
    """Instance whose beta is just large enough (plus ``extra``) to be admissible."""
    probe = Instance(A=A, c=c, d=d, alpha=alpha, beta=1)
    worst, _, _ = _search.max_linear(probe, [-v for v in d])
    return probe.replace(beta=max(1, worst + 1) + extra)


@st.composite
def instances(draw, max_n=8, max_m=5, coef=20, admissible=True, uniform=False):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    density = draw(st.sampled_from([0.0, 0.2, 0.4, 0.7, 1.0]))
    bits = draw(st.lists(st.floats(0, 1, exclude_max=True), min_size=m * n, max_size=m * n))
    A = (np.array(bits).reshape(m, n) < density).astype(int)
    ints = st.integers(-coef, coef)
    if uniform:
        c = [draw(ints)] * n
        d = [draw(ints)] * n
    else:
        c = draw(st.lists(ints, min_size=n, max_size=n))
        d = draw(st.lists(ints, min_size=n, max_size=n))
    alpha = 0 if uniform else draw(ints)
    if admissible:
        return with_admissible_beta(A, c, d, alpha, draw(st.integers(0, 10)))
    return Instance(A=A, c=c, d=d, alpha=alpha, beta=draw(st.integers(1, coef)))


@pytest.fixture
def paper():
    return Instance(A=[[1, 1, 0], [1, 0, 1]], c=(1, 2, 5), d=(4, 4, 6), alpha=0, beta=2)


def cols(n, *columns):
    """Pack from 1-based column numbers."""
    return Pack.from_columns(n, columns)
