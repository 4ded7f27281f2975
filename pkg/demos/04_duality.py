"""When is the dual of a complete Pick space again complete Pick?

Duals of model spaces are model spaces.  For the origin together with a point
on each coordinate axis of B^2, the dual Gram has an exact zero, which no
complete Pick space allows.  Nearby geodesic sets are more delicate: the dual
of a model space sits on the boundary of the Pick cone, so even a small
perturbation can push the dual outside it.
"""

import numpy as np

from pickspace import da_gram, dual_gram, dual_membership_probe, model_gram
from pickspace.pick import normalized_pick_matrix
from pickspace.sampling import random_ball_point, random_geodesic_set

probe = dual_membership_probe(model_gram([0, 0.5, -0.3 + 0.4j]))
print("model space:        dual in F", probe.dual_in_F, " dual in M", probe.dual_in_M)

for a, b in [(0.5, 0.5), (0.2, 0.9)]:
    x = np.array([[0, 0], [a, 0], [0, b]])
    d = dual_gram(da_gram(x))
    print(f"axes a={a}, b={b}:    dual entry (1, 2) = {abs(d[1, 2]):.1e}, "
          f"dual in F {dual_membership_probe(da_gram(x)).dual_in_F}")

rng = np.random.default_rng(3)
x = random_geodesic_set(4, 2, rng)
noise = np.array([random_ball_point(2, rng, 1.0) for _ in range(4)])
print("\nperturbing a geodesic set in B^2:")
for eps in (0.0, 1e-4, 1e-3, 1e-2):
    g = da_gram(x + eps * noise)
    w = np.linalg.eigvalsh(normalized_pick_matrix(dual_gram(g)))
    print(f"  eps {eps:.0e}: smallest/largest eigenvalue of the dual's Pick matrix "
          f"{w[0] / w[-1]:+.2e}, dual in F {dual_membership_probe(g).dual_in_F}")
