"""Barycentric Padé approximants: choose the poles and zeros, then fit the weights."""
import numpy as np

from padebary import bpa_form1, bpa_form2, log1p_over_t_series, pade
from padebary.barycentric import convert_form1_to_form2

c = log1p_over_t_series(12)

# Form 1: sum a_i/(p_i - t) / sum b_i/(z_i - t). The p_i become poles and
# the z_i zeros of the approximant.
poles = [-1.0, -2.0, -4.0]
zeros = [-1.5, -3.0, -6.0]
R = bpa_form1(c, poles, zeros)
print("a =", np.round(R.a, 6))
print("b =", np.round(R.b, 6))
print("matches the series through t^4:", np.allclose(R.expand(4).coeffs, c.coeffs[:5]))
print("value at a prescribed zero:", R(-1.5), " at a prescribed pole:", R(-1.0))

# Form 2 uses 1/(1 - p_i t); with reciprocal nodes it is the same function.
S = bpa_form2(c, 1 / np.array(poles), 1 / np.array(zeros))
t = np.linspace(-0.9, 2, 6)
print("\nform 1 vs form 2 max difference:", np.max(np.abs(R(t) - S(t))))
print("converted form agrees:", np.allclose(convert_form1_to_form2(R)(t), R(t)))

# When both node families coincide, the nodes drop out: we get the classical
# [2/2] Padé approximant, whichever nodes were picked.
for nodes in ([1.0, 2.0, 3.0], [-5.0, 0.5j, 7.0]):
    B = bpa_form1(c, nodes, nodes)
    print("coincident nodes", nodes, "-> max |BPA - [2/2]| =",
          np.max(np.abs(B(t) - pade(c, 2, 2)(t))))
