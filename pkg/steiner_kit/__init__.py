"""steiner-kit core package: augmented directed complexes, orientals and horn equations."""

from .adc import AugmentedDirectedComplex, SteinerTable, atom_table, is_loop_free, is_unitary, validate_adc
from .algebra import BasisElement, Chain, GroupElement
from .chain_calculus import comp_degree, d, degree, is_coherent, ordered_form
from .config import load_dotenv
from .decomposition import Compose, Generator, decompose_full, decompose_once, evaluate, render
from .errors import SteinerError
from .horns import gamma_family, horn_equation, stratify_standard, verify_complicial_props
from .morphisms import AdcMorphism, apply_mu, is_quasi_rigid, validate_morphism
from .omega import Cell, cell_compose, chain_of_table, table_of_chain
from .simplicial import RegularSimplicialSet, build_complex, chains_of, oriental

__all__ = [
    "AdcMorphism",
    "AugmentedDirectedComplex",
    "BasisElement",
    "Cell",
    "Chain",
    "Compose",
    "Generator",
    "GroupElement",
    "RegularSimplicialSet",
    "SteinerError",
    "SteinerTable",
    "apply_mu",
    "atom_table",
    "build_complex",
    "cell_compose",
    "chain_of_table",
    "chains_of",
    "comp_degree",
    "d",
    "decompose_full",
    "decompose_once",
    "degree",
    "evaluate",
    "gamma_family",
    "horn_equation",
    "is_coherent",
    "is_loop_free",
    "is_quasi_rigid",
    "is_unitary",
    "load_dotenv",
    "oriental",
    "ordered_form",
    "render",
    "stratify_standard",
    "table_of_chain",
    "validate_adc",
    "validate_morphism",
    "verify_complicial_props",
]
