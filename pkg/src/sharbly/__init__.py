"""Exact arithmetic in the differential graded bialgebra of coinvariant sharblies over Z."""

from .bialgebra import (
    SubspaceRecord,
    TensorElement,
    antipode,
    boundary,
    coproduct,
    counit,
    is_primitive,
    product,
    reduced_coproduct,
    subspace_records,
    tensor,
    tensor_swap,
)
from .canonical import (
    DET,
    TRIV,
    UNIT,
    BasicSharbly,
    Element,
    GradeError,
    Sharbly,
    TooWideError,
    basic,
    canonical_form,
    canonicalize,
    element_from,
    random_sharbly,
    sharbly_element,
)
from .classes import is_cycle, t1, wheel
from .truncation import VectorPool, build_complex, find_boundary_witness, homology_dims

__version__ = "0.1.0"
