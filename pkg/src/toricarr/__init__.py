"""Exact computations for complexified toric arrangements: poset of layers,
chambers on the compact torus, homology of (T, Sigma), and beta by four
independent routes."""
from .arrangement import (DimensionMismatch, DuplicateHypertorus, Hypertorus, NonPrimitiveCharacter,
                          NotEssential, ToricArrangement, essentialize, make_arrangement, rank,
                          validate)
from .cells import cellulate, chambers, f_vector, lift_periodic, relative_homology
from .delres import beta_delres, restrict
from .fileio import parse_arrangement, parse_local_system, serialize_arrangement
from .layers import beta_poset, euler_complement, layers, tangential_arrangement
from .local_systems import (LocalSystem, NotGeneric, UnitScalar, WrongDimension, is_generic,
                            lambda_of_layer, predict_group_ring, predict_l2, predict_twisted,
                            twisted_cohomology_1d)
from .render import render_svg
from .report import verify

__version__ = "0.1.0"
