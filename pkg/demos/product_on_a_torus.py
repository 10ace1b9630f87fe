"""Multiply chain-level classes on a torus built as a product of circles.

The product of two spaces carries a product of dual-form chains.  The
demo embeds the fundamental cycle of each circle factor, multiplies the
embeddings, and checks the result is a cycle representing the torus
top class; then it pairs against a product cochain to read the
coefficient off exactly.
"""

from simplicial_derham import (
    Q, build, product, phi_of_chain, phi_boundary, mu_phi,
    homology_report, CochainForm, FormElt, global_pair, omega_wedge,
    validate_cochain,
)

S1 = build("sphere:1")
T = product(S1, S1)
print("torus cells by dimension:", T.nd_counts())

# Fundamental cycle of a circle: its single nondegenerate edge.
edge = {(1, "j1"): Q(1)}
c = phi_of_chain(S1, edge, 1)
print("circle cycle boundary is zero:", phi_boundary(c).is_zero())

# Product of the two copies: a 2-cycle on the torus with one shuffled
# term per orientation of the square.
top = mu_phi(T, c, c)
print("torus product has %d terms" % len(top.terms))
print("torus product boundary is zero:", phi_boundary(top).is_zero())

# Pair against the product of the two edge volume forms.  Each factor
# integrates ds_1 over the edge to 1; the interleaving normalization
# contributes the degree sign (-1)^(m(m-1)/2), which is -1 for m = 2,
# so the top class pairs to -1.
ds = FormElt(1, {((0,), (1,)): Q(1)})
om = CochainForm(S1, 1, {(1, "j1"): ds})
assert validate_cochain(om) is None
vol = omega_wedge(T, om, om)
print("pairing with the product volume form:", global_pair(top, vol))

# The certified homology shows both circle classes and the product
# class: dimensions 1, 2, 1.
report = homology_report(T, T.top_dim, name="torus")
print("stable homology dimensions:", report["stable_image_dims"])
