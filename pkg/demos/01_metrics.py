"""Two ways to measure the distance between kernels, and why they agree on the ball.

The kernel metric delta compares the directions of two reproducing kernels.
For Drury-Arveson kernels it coincides with the pseudohyperbolic distance of
the underlying points, which is invariant under ball automorphisms.
"""

import numpy as np

from pickspace import da_gram, delta_matrix, delta_via_projections, pseudohyperbolic_matrix
from pickspace.sampling import random_automorphism, random_ball_point

rng = np.random.default_rng(1)

x = np.array([random_ball_point(2, rng) for _ in range(4)])
g = da_gram(x)
print("points in B^2:\n", np.round(x, 3))

d = delta_matrix(g)
print("\nkernel metric delta:\n", np.round(d, 6))
print("max |delta - pseudohyperbolic| =", np.abs(d - pseudohyperbolic_matrix(x)).max())

# the same numbers as norms of differences of rank one projections
proj = np.array([[delta_via_projections(g, i, j) for j in range(4)] for i in range(4)])
print("max |delta - ||P_i - P_j|| |   =", np.abs(d - proj).max())

# rescaling the kernels changes the Gram but not delta
lam = rng.uniform(0.5, 2, 4) * np.exp(1j * rng.uniform(0, 2 * np.pi, 4))
h = np.outer(lam, lam.conj()) * g
print("after rescaling, change in delta:", np.abs(delta_matrix(h) - d).max())

# and moving the points by an automorphism changes neither
phi = random_automorphism(2, rng)
print("after an automorphism, change:  ", np.abs(delta_matrix(da_gram(phi(x))) - d).max())
