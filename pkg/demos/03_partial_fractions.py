"""Partial-fraction Padé approximants by Prony's method."""
import numpy as np

from padebary import FormalPowerSeries, log1p_over_t_series, pfpa
from padebary.errors import NonDistinctNodes
from padebary.prony import orthogonality_residuals, prony_denominator

# c_j = 2 * 1^j + 3 * 2^j is the expansion of 2/(1 - t) + 3/(1 - 2t).
c = FormalPowerSeries([5, 8, 14, 26])
R = pfpa(c, 1)
for a, p in sorted(R.terms, key=lambda x: x[0].real):
    print(f"residue {a.real:.12g} at node {p.real:.12g}")

# The node polynomial is orthogonal with respect to the moments c_i.
b = prony_denominator(c, 1)
print("B(x) coefficients:", b.real, " residuals:", orthogonality_residuals(c, b, 1))

# log(1 + t)/t = integral of 1/(1 + x t) over [0, 1]; the nodes of the
# [k/k+1] approximant are (minus) Gauss-Legendre points on [0, 1].
k = 3
R = pfpa(log1p_over_t_series(2 * k + 1), k)
gauss = (np.polynomial.legendre.leggauss(k + 1)[0] + 1) / 2
print("\nnodes  :", np.sort(-R.nodes.real))
print("Gauss  :", np.sort(gauss))

# c_j = j + 1 comes from 1/(1 - t)^2: a double pole has no simple
# partial-fraction form.
try:
    pfpa(FormalPowerSeries([1, 2, 3, 4]), 1)
except NonDistinctNodes as exc:
    print("\ndouble node:", exc)
