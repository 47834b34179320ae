"""Exact integrality tests for Cayley multigraphs over abelian groups and Q8 x A."""

from .algebra import (
    AtomPartition, ConeCertificate, NotInConeError, atom_partition, cone_decompose,
    in_boolean_algebra, in_cone, normal_closure,
)
from .cyclotomic import CycContext, CycInt, as_rational_integer, cyc_context, cyclotomic_poly, from_root_power
from .errors import (
    DomainError, InconsistencyError, InvalidElementError, ParseError, PreconditionError,
    UnsupportedSpecError,
)
from .groups import (
    AbelianGroup, GMultiset, GroupElement, GroupSpec, abelian, convolve, elem, element_order,
    inv, is_hamiltonian, is_inverse_closed, mul, parse_element, parse_groupspec, parse_multiset,
    q8_times,
)
from .oracle import adjacency_matrix, char_poly, commute_check, integer_spectrum, oracle_check
from .spectra import (
    HamiltonianReport, Spectrum, abelian_spectrum, char_sum, elementary_abelian_analysis,
    extract_Bq, hamiltonian_conditions, hamiltonian_spectrum, is_integral, is_integral_abelian,
    lambda_hat, spectrum,
)

__version__ = '0.1.0'
