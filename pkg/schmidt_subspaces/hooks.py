# -*- coding: utf-8 -*-
from __future__ import unicode_literals

app_name = "schmidt_subspaces"
app_title = "Schmidt Subspaces"
app_description = "Subspaces of bipartite states with bounded Schmidt rank"

# construct --kind <name>
basis_constructors = {
    "geq": "schmidt_subspaces.construct.kinds.build_geq",
    "flanders": "schmidt_subspaces.construct.kinds.build_flanders",
    "fixed": "schmidt_subspaces.construct.kinds.build_fixed",
    "antisymmetric": "schmidt_subspaces.construct.kinds.build_antisymmetric",
    "random": "schmidt_subspaces.construct.kinds.build_random",
}

# verify --mode <name>
verification_modes = {
    "sample": "schmidt_subspaces.verify.modes.run_sample",
    "gfp": "schmidt_subspaces.verify.modes.run_gfp",
    "sigma": "schmidt_subspaces.verify.modes.run_sigma",
    "structural": "schmidt_subspaces.verify.modes.run_structural",
}
