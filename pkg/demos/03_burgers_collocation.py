"""
Collocation off the grid for Burgers' equation
==============================================

The columns of the trained manifold are interpolated by periodic splines,
so the reduced dynamics can be evaluated at a handful of random points
instead of on every grid node.
"""
import numpy as np

from qmng import reduced_interp as ri
from qmng.full_models import FullModel, generate_snapshots, preset
from qmng.manifold import train_manifold
from qmng.metrics import relative_error

setup = preset("burgers", "desk")
model = FullModel(setup)
train = generate_snapshots(model, np.linspace(*setup.domain, 8), subsample=50)
test = generate_snapshots(model, [0.5], subsample=50)

n = 10
m = train_manifold(train, n, 1e-6, 40)
basis = ri.build_spline_basis(m, setup.grid)
pde = ri.burgers_pointwise(setup.constants["alpha"])
theta0 = m.encode(model.initial_condition(0.5))
ref = test.trajectory(0)
print(f"reconstruction error: {relative_error(ref, m.reconstruct(ref)):.3e}")

# Short horizon so the demo runs in seconds; every point set is redrawn
# before each time step.
K = 1000
for points in (32, 64, 256):
    traj = ri.integrate_interp(basis, pde, theta0, setup.dt, K, setup.grid, points, seed=0)
    approx = m.decode(traj.theta[::50].T)
    err = relative_error(ref[:, : approx.shape[1]], approx)
    print(f"m={points:4d}: error over t<={K * setup.dt:g} {err:.3e}, "
          f"rank-deficient solves {traj.metadata['rank_deficiency_count']}")

# On the 512-point desk grid the shock that forms from this initial bump is
# narrower than one cell, so spline derivatives and the stencil disagree
# near the front and the reduced errors stay well above the reconstruction
# error. The README discusses this in more detail.
