"""tan(4t)/(4t): classical versus barycentric [4/4] near the poles of tan."""
import numpy as np

from padebary import experiments as ex
from padebary.series import contact_order, perturb, tan_over_t, tan_over_t_series

omega = 4.0
c = tan_over_t_series(omega, 8)

# Put the poles of the approximant on those of tan(4t), the zeros on its zeros.
pnodes, znodes = ex.example1_nodes(omega)
methods = ex.build_methods(c, pnodes, znodes)
grid = ex.parse_grid(ex.DEFAULT_GRID)
ref = lambda t: tan_over_t(t, omega)  # noqa: E731

print("exact coefficients")
for name, R in methods.items():
    rep = ex.make_report(R, grid, ref)
    print(f"  {name:5s} contact {contact_order(R.expand(8), c)}, abs error in [{rep.error_range()[0]:.2e}, {rep.error_range()[1]:.2e}]")

# Perturb the coefficients by 1e-4: the barycentric forms keep their poles
# where we put them, so they suffer less.
noisy = perturb(c, 1e-4, seed=ex.DEFAULT_SEED)
print("\nperturbed coefficients (eps = 1e-4)")
for name, R in ex.build_methods(noisy, pnodes, znodes).items():
    lo, hi = ex.make_report(R, grid, ref).error_range()
    print(f"  {name:5s} abs error in [{lo:.2e}, {hi:.2e}]")
