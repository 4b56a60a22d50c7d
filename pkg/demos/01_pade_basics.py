"""Classical Padé and Padé-type approximants of exp(t)."""
import numpy as np

from padebary import exp_series, pade, pade_type

c = exp_series(10)

# [2/2] matches the series through t^4 ...
R = pade(c, 2, 2)
print("numerator  ", np.round(R.num.coeffs.real, 6))
print("denominator", np.round(R.den.coeffs.real, 6))
print("expansion  ", np.round(R.expand(6).coeffs.real, 6))
print("series     ", np.round(c.coeffs[:7].real, 6))

# ... and is far better than the degree-4 Taylor polynomial away from 0
t = np.linspace(-2, 2, 5)
print("\n   t     |R - exp|    |T4 - exp|")
for x in t:
    taylor = sum(c[k] * x**k for k in range(5)).real
    print(f"{x:5.1f}  {abs(R(x) - np.exp(x)):10.2e}  {abs(taylor - np.exp(x)):10.2e}")

# A Padé-type approximant takes any denominator we like and only matches
# through the numerator degree.
P = pade_type(c, [1, -0.3, 0.02], 3)
print("\nPadé-type (3/2) expansion:", np.round(P.expand(5).coeffs.real, 6))
