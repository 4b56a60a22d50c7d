"""log(1 + t)/t on [-1.5, 1.5]: equidistant nodes on the branch cut."""
import numpy as np

from padebary import experiments as ex
from padebary.series import contact_order, log1p_over_t, log1p_over_t_series

c = log1p_over_t_series(8)
pnodes, znodes = ex.example2_nodes()
print("pole nodes:", pnodes)
print("zero nodes:", znodes)

grid = ex.parse_grid(ex.DEFAULT_GRID)
for name, R in ex.build_methods(c, pnodes, znodes).items():
    rep = ex.make_report(R, grid, log1p_over_t)
    ok = ~rep.pole_mask & (grid > -0.9)
    print(f"{name:5s} contact {contact_order(R.expand(8), c)}, "
          f"max error on (-0.9, 1.5]: {np.max(rep.abs_err[ok]):.2e}")
