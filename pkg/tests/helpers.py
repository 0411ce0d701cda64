"""Shared test utilities: random relabelings and small constructions."""

from knotweights.bcr import validate_bcr
from knotweights.jacobi import JacobiDiagram


def shuffled_jacobi(d, rng):
    """The same diagram under a random vertex and edge relabeling."""
    perm = list(range(d.nv))
    rng.shuffle(perm)
    edge_order = list(range(len(d.edges)))
    rng.shuffle(edge_order)
    flip = [rng.random() < 0.5 for _ in edge_order]
    old2new = {old: new for new, old in enumerate(edge_order)}
    edges = []
    for old in edge_order:
        a, b = d.edges[old]
        pair = (perm[b], perm[a]) if flip[old2new[old]] else (perm[a], perm[b])
        edges.append(pair)
    orient = {}
    for v, cyc in d.orient.items():
        new_cyc = []
        for (e, end) in cyc:
            new_end = 1 - end if flip[old2new[e]] else end
            new_cyc.append((old2new[e], new_end))
        r = rng.randrange(3)
        orient[perm[v]] = tuple(new_cyc[r:] + new_cyc[:r])
    numbering = None
    if d.numbering is not None:
        numbering = {old2new[e]: n for e, n in d.numbering.items()}
    return JacobiDiagram(d.nv, [perm[v] for v in d.univalent_order], edges,
                         orient, numbering)


def shuffled_bcr(d, rng):
    perm = list(range(d.nv))
    rng.shuffle(perm)
    edges = [(perm[a], perm[b], cls) for (a, b, cls) in d.edges]
    rng.shuffle(edges)
    return validate_bcr(d.nv, [perm[v] for v in d.external], edges)
