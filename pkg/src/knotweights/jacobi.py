"""Jacobi unitrivalent diagrams on an ordered line of univalent vertices.

A diagram is a loop-free multigraph whose vertices are either univalent
(lying on a totally ordered line) or trivalent (carrying a cyclic order of
their three half-edges).  Half-edges are tokens ``(edge_index, end)`` with
``end`` selecting one of the two entries of ``edges[edge_index]``.

Parallel edges are allowed; they are required by the degree-2 wheel, whose
two rim edges are parallel.  Loops are excluded: a loop at a trivalent
vertex admits an orientation-reversing symmetry, so its class vanishes and
local moves that would create one simply drop the term (see
:func:`class_of`).
"""

from .canon import canonical_form, edge_map_for_perm
from .errors import InvalidNumbering, LoopEdge, VertexTypeViolation


class JacobiDiagram:
    """Immutable-by-convention unitrivalent diagram.

    Fields:
      nv              number of vertices (ids 0..nv-1)
      univalent_order tuple of univalent vertex ids, in line order
      edges           tuple of vertex pairs; pair order is meaningful only
                      when the diagram came from a directed construction
      orient          dict trivalent vertex -> cyclic triple of half-edges
      numbering       optional dict edge index -> label in 1..3k
    """

    __slots__ = ("nv", "univalent_order", "edges", "orient", "numbering")

    def __init__(self, nv, univalent_order, edges, orient, numbering=None,
                 validate=True):
        self.nv = nv
        self.univalent_order = tuple(univalent_order)
        self.edges = tuple((u, v) for (u, v) in edges)
        self.orient = {v: tuple(c) for v, c in orient.items()}
        self.numbering = dict(numbering) if numbering else None
        if validate:
            self._validate()

    # -- basic structure ----------------------------------------------------

    def incident(self, v):
        halves = []
        for i, (a, b) in enumerate(self.edges):
            if a == v:
                halves.append((i, 0))
            if b == v:
                halves.append((i, 1))
        return halves

    def half_vertex(self, half):
        e, end = half
        return self.edges[e][end]

    def other_end(self, half):
        e, end = half
        return self.edges[e][1 - end]

    @property
    def univalent(self):
        return set(self.univalent_order)

    @property
    def trivalent(self):
        uni = self.univalent
        return [v for v in range(self.nv) if v not in uni]

    @property
    def degree(self):
        return self.nv // 2

    def _validate(self):
        if self.nv % 2 != 0:
            raise VertexTypeViolation(self.nv - 1, "odd vertex count")
        uni = self.univalent
        if len(uni) != len(self.univalent_order):
            raise VertexTypeViolation(self.univalent_order[0],
                                      "univalent order has repeats")
        deg = [0] * self.nv
        for i, (a, b) in enumerate(self.edges):
            if a == b:
                raise LoopEdge(i)
            deg[a] += 1
            deg[b] += 1
        for v in range(self.nv):
            want = 1 if v in uni else 3
            if deg[v] != want:
                raise VertexTypeViolation(v, f"valence {deg[v]} != {want}")
        for v in self.trivalent:
            cyc = self.orient.get(v)
            if cyc is None or sorted(cyc) != sorted(self.incident(v)):
                raise VertexTypeViolation(v, "bad cyclic orientation")
        if self.numbering is not None:
            labels = list(self.numbering.values())
            bound = 3 * self.degree
            if (len(self.numbering) != len(self.edges)
                    or len(set(labels)) != len(labels)
                    or any(not (1 <= x <= bound) for x in labels)):
                raise InvalidNumbering(
                    f"numbering must inject edges into 1..{bound}")

    # -- components and shape ----------------------------------------------

    def components(self):
        """Connected components as sorted vertex lists."""
        parent = list(range(self.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, b) in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        comps = {}
        for v in range(self.nv):
            comps.setdefault(find(v), []).append(v)
        return sorted(comps.values())

    def is_connected(self):
        return self.nv == 0 or len(self.components()) == 1

    def is_chord_diagram(self):
        return len(self.univalent_order) == self.nv

    def has_trivalent_component(self):
        uni = self.univalent
        return any(not (set(c) & uni) for c in self.components())

    def chords(self):
        """Chord endpoints as 1-based line positions (chord diagrams only)."""
        pos = {v: i + 1 for i, v in enumerate(self.univalent_order)}
        return [tuple(sorted((pos[a], pos[b]))) for (a, b) in self.edges]

    def product_split(self):
        """Split as a product d1 x d2 with d1 connected, or None.

        A diagram is a non-trivial product when its components can be
        grouped into two non-empty diagrams with all univalent vertices of
        the first before all of the second.  Testing the first connected
        group against every cut position is enough because products are
        associative.
        """
        if self.nv == 0:
            return None
        comps = self.components()
        if len(comps) < 2:
            return None
        pos = {v: i for i, v in enumerate(self.univalent_order)}
        nu = len(self.univalent_order)
        for cut in range(nu + 1):
            left, right = [], []
            ok = True
            for comp in comps:
                ps = sorted(pos[v] for v in comp if v in pos)
                if not ps:
                    ok = False  # trivalent components spoil the split here
                    break
                if ps[-1] < cut:
                    left.append(comp)
                elif ps[0] >= cut:
                    right.append(comp)
                else:
                    ok = False
                    break
            if ok and left and right:
                return (sorted(sum(left, [])), sorted(sum(right, [])))
        return None

    # -- rebuilding helpers --------------------------------------------------

    def relabeled(self, perm, edge_order=None):
        """Apply a vertex relabeling (and optional edge reordering)."""
        edge_idxs = edge_order if edge_order is not None else range(len(self.edges))
        old2new = {old: new for new, old in enumerate(edge_idxs)}
        edges = [(perm[self.edges[i][0]], perm[self.edges[i][1]]) for i in edge_idxs]
        orient = {}
        for v, cyc in self.orient.items():
            orient[perm[v]] = tuple((old2new[e], end) for (e, end) in cyc)
        numbering = None
        if self.numbering is not None:
            numbering = {old2new[e]: n for e, n in self.numbering.items()}
        return JacobiDiagram(self.nv, [perm[v] for v in self.univalent_order],
                             edges, orient, numbering, validate=False)


def default_orientation(nv, univalent_order, edges):
    """Cyclic orders listing each trivalent vertex's half-edges ascending."""
    uni = set(univalent_order)
    halves = {v: [] for v in range(nv) if v not in uni}
    for i, (a, b) in enumerate(edges):
        if a in halves:
            halves[a].append((i, 0))
        if b in halves:
            halves[b].append((i, 1))
    return {v: tuple(sorted(h)) for v, h in halves.items()}


def make_diagram(nv, univalent_order, edges, orient=None, numbering=None):
    if orient is None:
        orient = default_orientation(nv, univalent_order, edges)
    return JacobiDiagram(nv, univalent_order, edges, orient, numbering)


def validate_jacobi(g):
    """Re-validate a diagram built elsewhere (identity on success)."""
    return JacobiDiagram(g.nv, g.univalent_order, g.edges, g.orient,
                         g.numbering, validate=True)


# -- stock diagrams ---------------------------------------------------------

def empty_diagram():
    return JacobiDiagram(0, (), (), {})


def chord_diagram(pairs):
    """Chord diagram from 1-based position pairs covering 1..2k."""
    points = sorted(p for pair in pairs for p in pair)
    n = len(points)
    if points != list(range(1, n + 1)):
        raise VertexTypeViolation(points[0] if points else 0,
                                  "chord endpoints must cover 1..2k")
    edges = [(a - 1, b - 1) for (a, b) in pairs]
    return make_diagram(n, range(n), edges)


def single_chord():
    return chord_diagram([(1, 2)])


def theta_graph():
    return make_diagram(2, (), [(0, 1), (0, 1), (0, 1)])


def wheel(k):
    """Degree-k wheel: a k-cycle of trivalent vertices, one spoke each.

    Univalent vertices sit at line positions 1..k; trivalent vertex i is
    joined to univalent i by a spoke and to its cyclic neighbors by rim
    edges.  Each rim vertex is oriented (rim-in, rim-out, spoke), the cyclic
    order induced when the rim is traversed as a directed cycle; this is the
    orientation the cycle-with-legs construction induces on its sources.
    """
    if k < 2:
        raise VertexTypeViolation(0, "wheels need k >= 2")
    uni = list(range(k))
    tri = list(range(k, 2 * k))
    edges = [(uni[i], tri[i]) for i in range(k)]            # spokes 0..k-1
    edges += [(tri[i], tri[(i + 1) % k]) for i in range(k)]  # rim k..2k-1
    orient = {}
    for i in range(k):
        spoke = (i, 1)
        rim_out = (k + i, 0)
        rim_in = (k + (i - 1) % k, 1)
        orient[tri[i]] = (rim_in, rim_out, spoke)
    return JacobiDiagram(2 * k, uni, edges, orient)


def product(d1, d2):
    """Disjoint union with all univalent vertices of d1 before those of d2."""
    shift = d1.nv
    eshift = len(d1.edges)
    edges = list(d1.edges) + [(a + shift, b + shift) for (a, b) in d2.edges]
    orient = dict(d1.orient)
    for v, cyc in d2.orient.items():
        orient[v + shift] = tuple((e + eshift, end) for (e, end) in cyc)
    order = list(d1.univalent_order) + [v + shift for v in d2.univalent_order]
    return JacobiDiagram(d1.nv + d2.nv, order, edges, orient, validate=False)


def flipped(d, v):
    """Reverse the cyclic orientation at trivalent vertex v."""
    orient = dict(d.orient)
    a, b, c = orient[v]
    orient[v] = (a, c, b)
    return JacobiDiagram(d.nv, d.univalent_order, d.edges, orient,
                         d.numbering, validate=False)


# -- canonical classes ------------------------------------------------------

_registry = {}


def _colors(d):
    pos = {v: i for i, v in enumerate(d.univalent_order)}
    colors = []
    for v in range(d.nv):
        colors.append(("u", pos[v]) if v in pos else ("t",))
    return colors


def _edge_tags(d, with_numbering):
    if with_numbering and d.numbering is not None:
        return [d.numbering[i] for i in range(len(d.edges))]
    return [0] * len(d.edges)


def _cyclic_parity(triple):
    a, b, c = triple
    if a < b < c or b < c < a or c < a < b:
        return 1
    return -1


def class_of(d, with_numbering=False):
    """Canonical class of an oriented diagram: ``(key, sign)``.

    The key identifies the diagram up to isomorphisms preserving the line
    order and (optionally) the edge numbering, with trivalent orientations
    forgotten.  The sign compares the given orientation with the class
    default (ascending half-edges at every vertex in canonical labels);
    it is 0 exactly when some automorphism reverses an odd number of
    vertices, in which case the class vanishes by antisymmetry.
    """
    if any(a == b for (a, b) in d.edges):
        return None, 0
    tags = _edge_tags(d, with_numbering)
    entries = [(u, v, tags[i]) for i, (u, v) in enumerate(d.edges)]
    key, perms = canonical_form(d.nv, _colors(d), entries)
    sign = None
    for perm in perms:
        _, emap = edge_map_for_perm(entries, perm)
        s = 1
        for v, cyc in d.orient.items():
            moved = tuple((emap[e], 0 if perm[d.edges[e][end]] == max(
                perm[d.edges[e][0]], perm[d.edges[e][1]]) else 1)
                for (e, end) in cyc)
            s *= _cyclic_parity(moved)
        if sign is None:
            sign = s
        elif sign != s:
            return key, 0
    return key, sign


def representative(key):
    """The stored default-oriented representative of a canonical class."""
    return _registry[key]


def canonicalize(d):
    """Return ``(key, sign, representative)`` and intern the representative.

    The representative is built even when the class vanishes (sign 0), so
    enumerations can list it; only loop-carrying diagrams have no class at
    all and come back as ``(None, 0, None)``.
    """
    key, sign = class_of(d)
    if key is None:
        return None, 0, None
    rep = _registry.get(key)
    if rep is None:
        slot_colors, tokens = key
        order = [i for i, c in enumerate(slot_colors) if c[0] == "u"]
        order.sort(key=lambda i: slot_colors[i][1])
        edges = [(tok[1], tok[0]) for tok in tokens]
        rep = make_diagram(len(slot_colors), order, edges)
        _registry[key] = rep
    return key, sign, rep


def key_bytes(key):
    """Stable byte form of a canonical key, for golden files and hashing."""
    return repr(key).encode("ascii")


# -- local moves ------------------------------------------------------------

def stu_sites(d):
    """All (trivalent vertex, univalent vertex) pairs joined by an edge."""
    uni = d.univalent
    sites = []
    for u in d.univalent_order:
        (e, end), = d.incident(u)
        t = d.edges[e][1 - end]
        if t not in uni:
            sites.append((t, u))
    return sites


def _rotate_to(cyc, first):
    i = cyc.index(first)
    return cyc[i:] + cyc[:i]


def _rebuild(d, drop_vertices, drop_edges, extra_uni, extra_edges,
             reattach, order_patch):
    """Shared constructor for STU-style surgeries.

    drop_vertices/drop_edges are removed; `reattach` maps an old half-edge
    to a new endpoint vertex (given in old labels or fresh ids from
    extra_uni); extra_edges are brand-new edges in old labels.  Univalent
    order is given explicitly by `order_patch` (old labels + fresh ids).
    """
    keep_v = [v for v in range(d.nv) if v not in drop_vertices]
    vmap = {v: i for i, v in enumerate(keep_v)}
    for v in extra_uni:
        vmap[v] = len(vmap)
    nv = len(vmap)

    edges = []
    for i, (a, b) in enumerate(d.edges):
        if i in drop_edges:
            edges.append(None)
            continue
        a2 = reattach.get((i, 0), a)
        b2 = reattach.get((i, 1), b)
        edges.append((vmap[a2], vmap[b2]))
    emap = {}
    new_edges = []
    for i, e in enumerate(edges):
        if e is not None:
            emap[i] = len(new_edges)
            new_edges.append(e)
    for (a, b) in extra_edges:
        new_edges.append((vmap[a], vmap[b]))

    orient = {}
    for v, cyc in d.orient.items():
        if v in drop_vertices:
            continue
        orient[vmap[v]] = tuple((emap[e], end) for (e, end) in cyc)
    order = [vmap[v] for v in order_patch]
    return JacobiDiagram(nv, order, new_edges, orient, validate=False)


def stu_expand(d, t, u):
    """Resolve trivalent vertex t against its univalent neighbor u.

    Returns (d1, d2) with [d] = [d1] - [d2]: writing the cyclic order at t
    as (edge-to-u, alpha, beta), d1 attaches alpha to the earlier of the two
    new line vertices replacing u and beta to the later one; d2 swaps them.
    """
    (eu_half,) = [h for h in d.incident(u)]
    eu = eu_half[0]
    cyc = _rotate_to(list(d.orient[t]), (eu, 1 - eu_half[1]))
    alpha, beta = cyc[1], cyc[2]

    x, y = d.nv, d.nv + 1
    i = list(d.univalent_order).index(u)
    order = list(d.univalent_order[:i]) + [x, y] + list(d.univalent_order[i + 1:])

    def build(first, second):
        reattach = {first: x, second: y}
        return _rebuild(d, {t, u}, {eu}, [x, y], [], reattach, order)

    return build(alpha, beta), build(beta, alpha)


def ihx_terms(d, edge_idx):
    """The H and X companions of d at an internal edge (both ends trivalent).

    With the cyclic orders written (g, p, q) at one end and (g, r, s) at the
    other, the relation [I] - [H] + [X] = 0 holds where H carries (g, q, r)
    and (g, s, p), and X carries (g, q, s) and (g, r, p).
    """
    a, b = d.edges[edge_idx]
    cyc_a = _rotate_to(list(d.orient[a]), (edge_idx, 0))
    cyc_b = _rotate_to(list(d.orient[b]), (edge_idx, 1))
    g_a, p, q = cyc_a
    g_b, r, s = cyc_b

    def rebuilt(cyc_a2, cyc_b2):
        # Half-edges move between a and b; edges keep their indices.
        reattach = {}
        for h in cyc_a2[1:]:
            if h in (r, s):
                reattach[h] = a
        for h in cyc_b2[1:]:
            if h in (p, q):
                reattach[h] = b
        edges = list(d.edges)
        for (e, end), v in reattach.items():
            pair = list(edges[e])
            pair[end] = v
            edges[e] = tuple(pair)
        orient = dict(d.orient)
        orient[a] = tuple(cyc_a2)
        orient[b] = tuple(cyc_b2)
        return JacobiDiagram(d.nv, d.univalent_order, edges, orient,
                             validate=False)

    h_term = rebuilt((g_a, q, r), (g_b, s, p))
    x_term = rebuilt((g_a, q, s), (g_b, r, p))
    return h_term, x_term


def internal_edges(d):
    uni = d.univalent
    return [i for i, (a, b) in enumerate(d.edges)
            if a not in uni and b not in uni]
