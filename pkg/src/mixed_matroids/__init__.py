"""Mixed matroids and orientation problems on mixed graphs."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapacityError,
    InputError,
    InternalConsistencyError,
    InvalidMatroidError,
    MatroidError,
    PreconditionError,
)
from .graphs import (  # noqa: E402
    Edge,
    MixedGraph,
    acyclic_orientation,
    enumerate_cycles,
    fixture,
    graphic_oriented_matroid,
    mixed_graphic_matroid,
    p_orientation_pairs,
    signed_bonds,
    strong_orientation,
)
from .mixed import (  # noqa: E402
    MixedCircuit,
    MixedMatroid,
    apply_signature,
    coherent_orientations,
    contract_mixed,
    delete_mixed,
    dual_mixed,
    exists_acyclic_coherent,
    is_positive,
    is_totally_cyclic_mixed,
    make_mixed,
    mixed_circuits,
)
from .oriented import (  # noqa: E402
    OrientedMatroid,
    contract,
    delete,
    dual,
    is_acyclic,
    is_totally_cyclic,
    reorient,
    underlying,
    verify_circuit_axioms,
)
from .signed import GroundSet, SignedSet, is_orthogonal, negate_on, restrict  # noqa: E402
from .solver import (  # noqa: E402
    OrientationResult,
    PSet,
    Status,
    brute_force_p_orientation,
    check_facet_criterion,
    essential_characterization,
    find_p_orientation,
    is_p_connected,
    is_p_essential,
    p_essential_elements,
)
