"""Seeded random generators shared by the property tests."""

from bivsum.bipoly import BiPoly
from bivsum.exactnum import FieldElem


def random_linear(rng, lo=-4, hi=4, constant=True):
    """Random degree-1 polynomial c1*alpha + c2*beta + c0 with c1, c2 not both zero."""
    while True:
        ca, cb = rng.randint(lo, hi), rng.randint(lo, hi)
        if ca or cb:
            break
    c0 = rng.randint(lo, hi) if constant else 0
    return BiPoly.linear(ca, cb, c0)


def random_poly(rng, deg, lo=-5, hi=5, density=0.7, field_elems=None):
    """Random polynomial of total degree <= deg (may be zero)."""
    terms = {}
    for t in range(deg + 1):
        for i in range(t + 1):
            if rng.random() < density:
                c = rng.randint(lo, hi)
                if field_elems and rng.random() < 0.3:
                    c = FieldElem(c) * rng.choice(field_elems)
                terms[(i, t - i)] = c
    return BiPoly(terms)


def nonzero_poly(rng, deg, **kw):
    while True:
        p = random_poly(rng, deg, **kw)
        if p and p.deg == deg:
            return p

