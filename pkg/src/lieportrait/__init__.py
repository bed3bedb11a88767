"""Portraits of the compact simply connected Lie groups of rank at most two."""

from .haar import density_at, density_grid, discriminant, max_density
from .portrait import (boundary_polyline, center_orbit, closed_form_residual, delta, membership,
                       shotgun)
from .reps import character, flavor_of, fundamental_rep, fundamental_reps
from .rootsys import GroupType, build_root_system, longest_element
from .torus import alcove, reduce_to_alcove, sample_uniform, wall_point

__version__ = "0.1.0"
