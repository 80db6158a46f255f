"""Shellability of admissible sets in extended affine Weyl groups."""
from .admissible import AdmPoset, build_adm, build_coxeter_subsets, sigma_data, top_two
from .affine import AffineElt, AffineWeylGroup, Presentation
from .labeling import LabelSet, ReflectionOrder
from .poset import GradedPoset
from .qbg import QBGraph, build_qbg
from .rootdatum import CartanSpec, RootDatum, build_root_datum
from .shellability import (
    VerificationReport,
    verify_dual_EL,
    verify_NCM,
    verify_recursive_coatom_ordering,
)

__version__ = "0.1.0"
