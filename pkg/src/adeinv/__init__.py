"""Exact algebraic invariants of objects acting on 4 points.

The package computes, in exact rational arithmetic, the moment sequences,
spectral measures and circular measures of

* finite permutation groups on 4 points (``adeinv.groups``),
* rooted ADE-type graphs, ghost graphs and signed graphs (``adeinv.graphs``),
* dihedral group duals via Cayley-graph word counting (``adeinv.duals``),
* the fusion semiring of the hyperoctahedral rank-2 object (``adeinv.fusion``),

and matches them into McKay-type classification tables
(``adeinv.correspond``).  ``adeinv.relcheck`` verifies the matrix-level
structures behind the correspondence.  A FastAPI service
(``adeinv.service``) and a CLI (``adeinv.cli``) expose everything.
"""

__version__ = "0.1.0"
