"""Two independent routes to the Alexander/Conway polynomial of a knot.

The primary route builds the Alexander matrix from the crossing relations
of the knot group (one generator per arc, one relation per crossing, with
the derivative rows (1-t, t, -1) at the overstrand, incoming and outgoing
understrand for positive crossings and the unit-adjusted transpose for
negative ones), deletes one row and one column, takes the exact
determinant, and normalizes to the symmetric representative with value 1
at t = 1.

The oracle route resolves crossings through the standard two-term recursion
(switch and smooth at the first crossing met on its understrand), reaching
descending diagrams, which are unknots or split links; its value at
z = t^(1/2) - t^(-1/2) is symmetric and equals 1 at t = 1 by construction,
so the two routes must agree exactly.
"""

from .errors import DegenerateDiagram
from .series import LaurentPolynomial


def _arc_classes(pd):
    """Merge the PD edges of each overpass into one strand generator."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in pd.crossings:
        o_in, o_out = pd.over_pair(x)
        ri, ro = find(o_in), find(o_out)
        if ri != ro:
            parent[max(ri, ro)] = min(ri, ro)
    return {label: find(label) for label in pd.arcs()}


def _alexander_matrix(pd):
    cls = _arc_classes(pd)
    gens = sorted(set(cls.values()))
    idx = {g: i for i, g in enumerate(gens)}
    one = LaurentPolynomial({0: 1})
    t = LaurentPolynomial({1: 1})
    rows = []
    for x in pd.crossings:
        row = [LaurentPolynomial() for _ in gens]
        o_in, _ = pd.over_pair(x)
        if x.sign > 0:
            # relation:  out = over * in * over^-1
            row[idx[cls[o_in]]] += one - t
            row[idx[cls[x.under_in]]] += t
            row[idx[cls[x.under_out]]] += -one
        else:
            # relation:  out = over^-1 * in * over  (times the unit t)
            row[idx[cls[o_in]]] += t - one
            row[idx[cls[x.under_in]]] += one
            row[idx[cls[x.under_out]]] += -t
        rows.append(row)
    return rows, gens


def _det(rows):
    """Exact determinant by expansion with memoized minors."""
    n = len(rows)
    if n == 0:
        return LaurentPolynomial({0: 1})
    full = (1 << n) - 1
    memo = {}

    def minor(row, cols):
        if row == n:
            return LaurentPolynomial({0: 1})
        got = memo.get((row, cols))
        if got is not None:
            return got
        total = LaurentPolynomial()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not cols & bit:
                continue
            c = rows[row][j]
            if not c.is_zero():
                total = total + sign * c * minor(row + 1, cols & ~bit)
            sign = -sign
        memo[(row, cols)] = total
        return total

    return minor(0, full)


def symmetric_normalize(p):
    """Unit-adjust a determinant to the symmetric form with value 1 at 1."""
    if p.is_zero():
        raise DegenerateDiagram("vanishing determinant")
    span = p.max_exp() + p.min_exp()
    if span % 2:
        # balance by the frame shift t^(1/2); knots always allow it
        raise DegenerateDiagram("odd exponent span cannot be symmetrized")
    q = p.shift(-span // 2)
    if q != q.invert_variable():
        raise DegenerateDiagram("determinant is not symmetric up to units")
    at_one = q(1)
    if at_one == 1:
        return q
    if at_one == -1:
        return -q
    raise DegenerateDiagram(f"value {at_one} at t=1; expected a unit")


def alexander_poly(pd):
    """Symmetric Alexander polynomial with value 1 at t = 1."""
    if len(pd) == 0:
        return LaurentPolynomial.one()
    rows, gens = _alexander_matrix(pd)
    if len(gens) == 1:
        return LaurentPolynomial.one()
    sub = [row[:len(gens) - 1] for row in rows[:-1]]
    return symmetric_normalize(_det(sub))


# -- skein-recursion oracle ---------------------------------------------------

class _Tangle:
    """Mutable crossing list for the recursion, with free circles."""

    __slots__ = ("crossings", "free_circles")

    def __init__(self, crossings, free_circles=0):
        # crossing: [under_in, under_out, over_in, over_out, sign]
        self.crossings = [list(c) for c in crossings]
        self.free_circles = free_circles

    @classmethod
    def from_pd(cls, pd):
        rows = []
        for x in pd.crossings:
            o_in, o_out = pd.over_pair(x)
            rows.append([x.under_in, x.under_out, o_in, o_out, x.sign])
        return cls(rows)

    def successor(self):
        succ = {}
        for (ui, uo, oi, oo, _s) in self.crossings:
            succ[ui] = uo
            succ[oi] = oo
        return succ

    def components(self):
        succ = self.successor()
        seen = set()
        comps = []
        for start in sorted(succ):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            arc = succ[start]
            while arc != start:
                comp.append(arc)
                seen.add(arc)
                arc = succ[arc]
            comps.append(comp)
        return comps

    def switched(self, i):
        out = _Tangle(self.crossings, self.free_circles)
        ui, uo, oi, oo, s = out.crossings[i]
        out.crossings[i] = [oi, oo, ui, uo, -s]
        return out

    def smoothed(self, i):
        """Oriented smoothing: under-in joins over-out and vice versa.

        Arcs merge through a union-find; uniting two already-identified
        arcs closes a free circle.
        """
        out = _Tangle(self.crossings, self.free_circles)
        ui, uo, oi, oo, _s = out.crossings.pop(i)
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (x, y) in ((ui, oo), (oi, uo)):
            rx, ry = find(x), find(y)
            if rx == ry:
                out.free_circles += 1
            else:
                parent[max(rx, ry)] = min(rx, ry)
        for c in out.crossings:
            for j in range(4):
                c[j] = find(c[j])
        return out

    def first_underpass(self):
        """First crossing met on its understrand in the component walk."""
        succ = self.successor()
        enters_under = {}
        enters_over = {}
        for ci, (ui, uo, oi, oo, _s) in enumerate(self.crossings):
            enters_under[ui] = ci
            enters_over[oi] = ci
        seen = set()
        for comp in self.components():
            for arc in comp:
                if arc in enters_under:
                    ci = enters_under[arc]
                    if ci not in seen:
                        return ci
                    continue
                ci = enters_over[arc]
                seen.add(ci)
        return None


def _nabla(tangle, depth=0):
    """Conway polynomial coefficients as {exponent of z: int}."""
    if not tangle.crossings:
        n_comp = tangle.free_circles
        return {0: 1} if n_comp == 1 else {}
    ci = tangle.first_underpass()
    if ci is None:
        # descending diagram: an unknot when there is a single component
        n_comp = len(tangle.components()) + tangle.free_circles
        return {0: 1} if n_comp == 1 else {}
    sign = tangle.crossings[ci][4]
    a = _nabla(tangle.switched(ci), depth + 1)
    b = _nabla(tangle.smoothed(ci), depth + 1)
    out = dict(a)
    for e, c in b.items():
        out[e + 1] = out.get(e + 1, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def conway_skein(pd):
    """Conway polynomial in z by the two-term crossing recursion."""
    if len(pd) == 0:
        return {0: 1}
    return _nabla(_Tangle.from_pd(pd))


def nabla_to_alexander(nabla):
    """Substitute z^2 = t - 2 + 1/t (knots have even powers only)."""
    zsq = LaurentPolynomial({1: 1, 0: -2, -1: 1})
    out = LaurentPolynomial()
    for e, c in nabla.items():
        if e % 2:
            raise DegenerateDiagram("odd z power; not a knot polynomial")
        term = LaurentPolynomial({0: c})
        for _ in range(e // 2):
            term = term * zsq
        out = out + term
    return out


def alexander_by_skein(pd):
    return nabla_to_alexander(conway_skein(pd))
