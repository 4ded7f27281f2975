"""Six tests for one question: is this complete Pick space a model space?

A point set on a complex geodesic gives a rescaled model space; a point set
off every geodesic gives none of the six properties.  The classifier computes
each property on its own and reports whether they agree.
"""

import numpy as np

from pickspace import classify_gram, classify_points, da_gram, rescale
from pickspace.sampling import random_generic_set, random_geodesic_set, random_rescaling

rng = np.random.default_rng(7)


def show(title, report):
    print(title)
    for name, r in report.results().items():
        stat = "" if r.statistic is None else f"  ({r.statistic:.2e})"
        print(f"  {name:<22}{r.status.value}{stat}")
    print(f"  consistent: {report.consistent}, model space: {report.is_model_space}\n")


x = random_geodesic_set(5, 3, rng)
show("five points on a complex geodesic in B^3", classify_points(x))

g = rescale(da_gram(x), random_rescaling(5, rng))
show("the same space after rescaling its kernels", classify_gram(g))

y = random_generic_set(5, 2, rng, margin=1e-3)
show("five points in general position in B^2", classify_points(y))

opposite = np.array([[0, 0], [0.5, 0], [0, 0.5]])
show("origin and two points on different axes", classify_points(opposite))

# off a geodesic the extremal multiplier beats the product of distances
per_base = classify_points(opposite).c3_extremal_product.detail["per_base"]
for row in per_base:
    print(f"  base {row['base']}: extremal {row['extremal']:.6f}  product {row['product']:.6f}")
