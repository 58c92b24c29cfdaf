"""Integer homology of pointed sets over free partially commutative monoids."""

from .action import PointedAction, chain_set, parse_action, restrict_action, serialize_action, validate_action
from .alphabet import (
    IndependenceAlphabet,
    cliques,
    components,
    parse_alphabet,
    restrict,
    serialize_alphabet,
    validate_alphabet,
)
from .complex import ChainComplex, direct_sum, kset_complex, simplicial_chain_complex, verify_dd_zero
from .intlinalg import (
    FinAbGroup,
    IntMatrix,
    SmithForm,
    group_eq,
    group_sum,
    homology,
    homology_at,
    rank_mod_p,
    rank_rational,
    smith,
    torsion,
)
from .simplicial import (
    SimplicialComplex,
    barycentric_subdivision,
    builtin,
    clique_complex,
    faces,
    is_flag,
    reduced_homology,
    to_alphabet,
)
from .verify import check_corollary, check_thm1, check_thm2, check_thm3

__version__ = "0.1.0"
