"""Exact verification of hyperkaehler-with-torsion geometry on Lie algebras and charts."""

__version__ = "0.1.0"

from .errors import HKTError, ParseError, PreconditionError, StructureError
from .forms import AlternatingForm, act, evaluate, pullback, wedge
from .lie import LieAlgebra, ce_differential, direct_sum, validate_jacobi
from .hermitian import (Connection, HermitianStructure, bismut_connection, bismut_torsion,
                        chern_connection, convention_self_test, fundamental_form,
                        gauduchon_connection, levi_civita, nijenhuis, skt_check)
from .hypercomplex import (GHKPair, Hypercomplex, Hyperhermitian, abelian_check,
                           generalized_hk_check, hkt_check, hkt_check_dolbeault,
                           strong_hkt_check, validate_hypercomplex)
from .holonomy import (algebra_containment, bismut_flat_check, bismut_ricci_form, curvature,
                       cyt_check, holonomy_algebra)
from .constructions import JoyceModule, JoyceSpec, RhoRep, bf_extend, joyce_build
from .bundle import Bundle, bundle_from_json, load_bundle
from .catalog import CATALOG, catalog
from .report import Report
