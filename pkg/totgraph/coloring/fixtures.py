"""
totgraph.coloring.fixtures.py

Colorings of T(Γ(Z3 x Z3)) and T(Γ(Z3 x Z3 x Z3)) stored verbatim, keyed by canonical ring
text. Elements are written as tuples of block digits.
"""
from typing import Dict, Optional, Tuple

import numpy as np

from ..graph.total import total_graph
from ..ring import FiniteRing
from . import Coloring, Provenance

# Four classes.
Z3Z3_CLASSES = (
    ((0, 0), (1, 2)),
    ((0, 1), (1, 0), (1, 1)),
    ((0, 2), (2, 0), (2, 2)),
    ((2, 1),),
)

# Nine classes, -1 written as 2.
Z3Z3Z3_CLASSES = (
    ((1, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)),
    ((2, 0, 1), (2, 1, 1), (0, 1, 0)),
    ((2, 0, 2), (0, 2, 0), (2, 2, 2)),
    ((2, 0, 0), (0, 2, 1)),
    ((1, 0, 0), (0, 1, 2), (1, 1, 2)),
    ((2, 1, 0), (0, 0, 2), (2, 1, 2)),
    ((2, 2, 0), (2, 2, 1), (0, 0, 1)),
    ((0, 0, 0), (1, 2, 1)),
    ((1, 2, 0), (0, 2, 2), (1, 2, 2), (1, 0, 2)),
)

FIXTURES: Dict[str, Tuple[Provenance, tuple]] = {
    "Z3 x Z3": (Provenance.STORED_Z3Z3, Z3Z3_CLASSES),
    "Z3 x Z3 x Z3": (Provenance.STORED_Z3CUBED, Z3Z3Z3_CLASSES),
}


def fixture_for(ring: FiniteRing) -> Optional[Coloring]:
    """The stored coloring of T(Γ(R)) when R has one, else None."""
    entry = FIXTURES.get(ring.descriptor.text)
    if entry is None:
        return None
    provenance, classes = entry
    graph = total_graph(ring)
    members = [ring.encode(np.array(digits)).tolist() for digits in classes]
    return Coloring.from_classes(graph, members, provenance)
