"""Co-prime order graphs of finite abelian and dihedral groups.

The co-prime order graph of a finite group has the group elements as
vertices; two distinct elements are adjacent when the gcd of their orders
is 1 or a prime.  This package builds those graphs, evaluates closed-form
degree and Laplacian-spectrum formulas, and certifies them with exact
integer linear algebra.
"""

from cpog.config import Limits, SweepBounds
from cpog.groups import (
    AbelianCanonicalForm,
    AbelianSpec,
    DihedralElement,
    DihedralSpec,
    GroupSpecError,
    CapExceededError,
    OrderDecomposition,
    canonicalize_abelian,
    decompose_order,
    element_order,
    enumerate_abelian_groups_of_order,
    enumerate_elements,
    order_profile,
    parse_group_spec,
)
from cpog.graph import (
    CoprimeOrderGraph,
    adjacent,
    brute_degree,
    build_graph,
    export_graph,
    laplacian,
)
from cpog.closed_forms import (
    NoClosedFormError,
    Spectrum,
    build_block_L,
    closed_form_spectrum,
    degree_abelian,
    degree_dihedral,
    spectrum_abelian_p_group,
    spectrum_block,
    spectrum_dihedral_prime_power,
    spectrum_elementary_abelian,
    spectrum_pq,
)
from cpog.linalg import (
    CharPoly,
    SpectrumCertificate,
    bareiss_eliminate,
    certify_spectrum,
    char_poly,
    integer_roots,
    rank,
)

__all__ = [name for name in dir() if not name.startswith("_")]
