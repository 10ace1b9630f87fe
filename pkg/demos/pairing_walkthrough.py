"""Chain-level elements on a single simplex, paired against forms.

Walks through the three facts the local theory rests on: the pairing
computes by exact integration, the boundary is adjoint to the exterior
derivative, and every nonzero element is detected by an explicit
witness form.
"""

import random

from simplicial_derham import (
    Q, PhiElt, FormElt, ThetaElt, delta, big_pair, xi_witness,
)

# A degree-1 element on the 2-simplex: the pair (0,2) of marked
# vertices carrying the weight-1 interleaving generator.
a = PhiElt.include(2, (0, 2), ThetaElt.w(1, 1))
print("element:", a)

# Pair against the 1-form s_2 ds_1 on the 2-simplex; exponents are
# recorded in the cumulative coordinates s_1, ..., s_n.
om = FormElt(2, {((0, 1), (1,)): Q(1)})
print("pairing with s_2 ds_1:", big_pair(a, om))

# Adjunction: pairing the boundary against a 0-form equals pairing the
# element against its exterior derivative, up to the degree sign.
f = FormElt(2, {((1, 0), ()): Q(1), ((0, 2), ()): Q(3)})
lhs = big_pair(delta(a), f)
rhs = big_pair(a, f.de_rham_d()) * (-1) ** 1
print("boundary adjunction: %s == %s" % (lhs, rhs))
assert lhs == rhs

# The witness: for a nonzero element, xi_witness produces a form whose
# pairing is a strictly positive rational, so nothing nonzero pairs to
# zero against every form.
rng = random.Random(7)
for trial in range(3):
    coeffs = [Q(rng.randint(-4, 4)) for _ in range(2)]
    b = (PhiElt.include(3, (0, 1), ThetaElt.w(1, 1)).scale(coeffs[0])
         + PhiElt.include(3, (1, 3), ThetaElt.w(1, 1)).scale(coeffs[1]))
    if b.is_zero():
        continue
    w = xi_witness(b)
    print("witness pairing #%d:" % trial, big_pair(b, w))
    assert big_pair(b, w) > 0
