"""Finite-scale phase diagrams for transformation groupoids.

Orbit categories of finite permutation groups, fixed-point presheaves on
simplicial G-complexes and their Grothendieck categories of elements,
degeneracy quivers of rational linear actions, Milnor numbers and Euler
gradings of quasihomogeneous singularities, and Cramer rate functions for
finite observables -- with deterministic DOT and olog exporters.
"""

from .category import FiniteCategory, IsoWitness, category_isomorphic
from .errors import CapExceededError, PhasecatError, ValidationError
from .germs import ParseError, PolyGerm, parse_germ
from .gspace import (GComplex, components, fixed_subcomplex, isotropy,
                     orbit_of, pi0_fix_presheaf, subdivide)
from .largedev import (DiscreteObservable, RateProfile, bernoulli,
                       binary_entropy, cgf, cgf_prime, cramer, legendre)
from .linrep import (LinearAction, averaging_projector, degeneracy_quiver,
                     fix_subspace, isotypic_decomposition, relative_normal)
from .ologio import (atomic_write, export_dot, export_olog, import_olog,
                     olog_json)
from .orbitcat import OrbitCategory, OrbitMorphism, build_orbit_category
from .permgroup import (FiniteGroup, Subgroup, SubgroupClass, all_subgroups,
                        closure, conjugacy_classes_of_subgroups, normalizer,
                        transporter, weyl_group)
from .phase import (PhaseCategory, StratifiedComplex, build_phase_diagram,
                    forgetful_functor, quotient_functor, strata_category)
from .singularity import (AdjacencyCorpus, NonIsolated, QuasihomogeneousGerm,
                          corpus_adjacency, euler_apply, euler_eigenvalue,
                          local_algebra,
                          milnor_number, modality, relative_cokernel,
                          spectrum_grading, stabilize, weight_milnor)

__version__ = "0.1.0"
