"""Stable matching lattices and robustness to preference errors.

The heavy lifting lives in the compiled extension ``_stablelattice``; this
package re-exports its surface. Matchings cross the boundary as plain lists
(``matching[boy] == girl``, all 0-based), closed sets as sorted element-id
lists, edge sets as ``(tail, head)`` tuple lists, and weights as ``n x n``
nested lists indexed ``weights[boy][girl]``.
"""

try:
    from ._stablelattice import *  # noqa: F401,F403
    from ._stablelattice import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: the extension sits on sys.path itself
    from _stablelattice import *  # noqa: F401,F403

__all__ = [
    "Error",
    "ParseError",
    "DomainError",
    "IoError",
    "Side",
    "Mode",
    "Orientation",
    "Instance",
    "Rotation",
    "RotationPoset",
    "ErrorSpec",
    "Flower",
    "Bouquet",
    "MetaPoset",
    "RobustResult",
    "parse_instance",
    "format_instance",
    "parse_errors",
    "format_error",
    "generate",
    "deferred_acceptance",
    "is_stable",
    "blocking_pairs",
    "meet",
    "join",
    "dominates",
    "enumerate_stable",
    "format_matching",
    "build_rotation_poset",
    "exposed_rotations",
    "eliminate",
    "enumerate_proper_closed_sets",
    "matching_from_closed_set",
    "closed_set_from_matching",
    "shrink",
    "closed_sets_of_meta",
    "sublattice_from_edges",
    "compression_from_sublattice",
    "minimize_edges",
    "find_bouquet",
    "apply_error",
    "edges_for_error",
    "build_robust",
    "max_weight_robust",
    "matching_weight",
    "brute_force_robust",
]
