"""Bundled graph data.

The two cubic girth-5 graphs on 12 vertices, shipped as edge lists.  They
are regenerated (and the pair property re-verified) by
``tools/derive_girth5_graphs.py``: every cubic girth-5 graph contains a
depth-2 tree from any root, and completing that tree exhaustively on 12
vertices yields exactly these two graphs up to isomorphism.  The names
follow the obstruction pipeline's verdicts: the triplex admits 216
colorings (15 up to symmetry) and no surviving orientation; the twinplex
keeps surviving candidates.
"""

from importlib.resources import files

from ..graphs import Graph, parse_edge_list


def _load(name: str) -> Graph:
    return parse_edge_list(files(__package__).joinpath(name).read_text())


def triplex() -> Graph:
    """The cubic girth-5 graph on 12 vertices that is not a subgraph of any
    minimal Cayley graph."""
    return _load("triplex.edges")


def twinplex() -> Graph:
    """The other cubic girth-5 graph on 12 vertices; the pipeline leaves its
    status inconclusive."""
    return _load("twinplex.edges")
