"""The model space of a finite Blaschke product and its conjugation.

K_B is spanned by Szego kernels at the zeros of B.  The conjugation
J f = B conj(z f) almost sends kernels to the dual basis: J k_j evaluated at
x_i is B'(x_i) when i = j and zero otherwise.  Rescaling each kernel by
B'(x_i)^(-1/2) turns the Gram into an orthogonal matrix.
"""

import numpy as np

from pickspace import (
    blaschke_derivative_at_zero,
    conjugate_zeros,
    are_rescalings,
    dual_gram,
    is_orthogonal_gram,
    model_conjugation_matrix,
    model_gram,
    rescale,
)
from pickspace.conjugation import conjugation_defects, kernel_evaluations

np.set_printoptions(precision=4, suppress=True, linewidth=100)

zeros = np.array([0, 0.5, -0.3 + 0.4j, 0.6j])
g = model_gram(zeros)
c = model_conjugation_matrix(zeros)
dprime = np.array([blaschke_derivative_at_zero(zeros, i) for i in range(len(zeros))])

print("B'(x_i):", dprime)
print("|J k_j (x_i)|:\n", np.abs(kernel_evaluations(g, c)))
iso, invol = conjugation_defects(g, c)
print(f"isometry defect {iso:.1e}, involution defect {invol:.1e}")

k = rescale(g, dprime.conj() ** -0.5)
print("\nrescaled Gram is orthogonal:", is_orthogonal_gram(k))

# the dual space is again a model space, for the conjugate zeros
w = are_rescalings(dual_gram(g), model_gram(conjugate_zeros(zeros)))
print("dual ~ model space of conj(zeros), residual", f"{w.residual:.1e}")
