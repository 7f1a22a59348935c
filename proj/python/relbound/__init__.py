"""Relativistic energy levels of two-particle Coulomb bound states."""

import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if "RELBOUND_DATA_DIR" not in os.environ and (_data / "particles.txt").is_file():
    os.environ["RELBOUND_DATA_DIR"] = str(_data)

from ._core import *  # noqa: E402,F401,F403
from ._core import Branch, TwoBodySystem, default_catalog, default_constants, solve_level  # noqa: E402


def make_system(particle1, particle2, Z=1, alpha=None, catalog=None):
    """Build a TwoBodySystem from catalog names; alpha defaults to the shipped constant."""
    catalog = catalog if catalog is not None else default_catalog()
    if alpha is None:
        alpha = default_constants().alpha
    a = catalog.lookup(particle1)
    b = catalog.lookup(particle2)
    return TwoBodySystem(a.rest_energy, b.rest_energy, Z, alpha)


def spectrum(particle1, particle2, Z=1, n_max=1, branch=Branch.Normal):
    """Solved levels for n = 1..n_max, all l, in (n, l) order."""
    system = make_system(particle1, particle2, Z)
    return [solve_level(system, n, l, branch) for n in range(1, n_max + 1) for l in range(n)]


__version__ = "0.1.0"
