"""Finite abstract simplicial complexes.

A complex is stored by its maximal faces (facets) over an ordered list of
vertex labels.  All derived data (face lists, boundary matrices, reports)
follows one fixed enumeration order -- faces graded by dimension, then
lexicographic on sorted index tuples -- so every downstream computation is
byte-deterministic.  Instances are treated as immutable; every operation
returns a new complex.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass

from .errors import BadCycleLength, NonOrientable


class SimplicialComplex:
    def __init__(self, vertices, facets):
        """Use :func:`from_facets` instead of calling this directly."""
        self.vertices = tuple(vertices)
        self.facets = tuple(tuple(f) for f in facets)
        self.dim = max(len(f) for f in self.facets) - 1
        self._faces = None  # lazy cache, dim -> sorted tuple list

    # -- basic queries ---------------------------------------------------

    def faces(self, d):
        """All d-faces, sorted lexicographically. d = -1 gives nothing."""
        if self._faces is None:
            byd = [set() for _ in range(self.dim + 1)]
            for f in self.facets:
                for r in range(1, len(f) + 1):
                    for c in itertools.combinations(f, r):
                        byd[r - 1].add(c)
            self._faces = [sorted(s) for s in byd]
        if d < 0 or d > self.dim:
            return []
        return self._faces[d]

    def has_face(self, vs):
        vs = tuple(sorted(vs))
        if not vs or len(vs) - 1 > self.dim:
            return False
        return vs in self._face_set(len(vs) - 1)

    def _face_set(self, d):
        if not hasattr(self, "_fsets"):
            self._fsets = {}
        if d not in self._fsets:
            self._fsets[d] = set(self.faces(d))
        return self._fsets[d]

    def f_vector(self):
        return tuple(len(self.faces(d)) for d in range(self.dim + 1))

    def euler_characteristic(self):
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def face_label(self, face):
        return "(" + "|".join(self.vertices[i] for i in face) + ")"

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(|V|={len(self.vertices)}, f={self.f_vector()})"

    # -- JSON interchange ------------------------------------------------

    def to_json_dict(self):
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(obj):
        return from_facets(obj["vertices"], obj["facets"])


@dataclass(frozen=True)
class OrientationClass:
    """A coherent ±1 assignment to the top-dimensional faces.

    The signed sum of the top faces is a cycle: its image under the top
    boundary matrix is exactly zero.
    """

    coefficients: dict  # top face tuple -> +1 or -1


def from_facets(labels, facets) -> SimplicialComplex:
    """Build a complex from vertex labels and facet index sets.

    Facets are deduplicated and subset-dominated entries removed; the
    stored facet list is sorted lexicographically.
    """
    labels = list(labels)
    if not facets:
        raise ValueError("facet list must be nonempty")
    cleaned = set()
    for f in facets:
        t = tuple(sorted(set(f)))
        if not t:
            raise ValueError("empty facet")
        if t[0] < 0 or t[-1] >= len(labels):
            raise ValueError(f"facet {t} has out-of-range vertex index")
        cleaned.add(t)
    # drop faces contained in another facet
    maximal = [
        f
        for f in cleaned
        if not any(g != f and set(f) <= set(g) for g in cleaned)
    ]
    return SimplicialComplex(labels, sorted(maximal))


def cycle_complex(n, labels=None) -> SimplicialComplex:
    """The cycle graph C_n as a 1-complex. Requires n >= 3."""
    if n < 3:
        raise BadCycleLength(f"cycle length {n} < 3 is not simplicial")
    if labels is None:
        labels = [f"c{i}" for i in range(n)]
    return from_facets(labels, [[i, (i + 1) % n] for i in range(n)])


def f_vector(k: SimplicialComplex):
    return k.f_vector()


def euler_characteristic(k: SimplicialComplex):
    return k.euler_characteristic()


def barycentric_subdivision(k: SimplicialComplex) -> SimplicialComplex:
    """The complex of flags (chains of faces ordered by inclusion).

    Output vertices are the faces of ``k`` in graded-lex order, labeled by
    the canonical serialization of the face; facets are the maximal flags,
    (d+1)! per d-facet.
    """
    all_faces = []
    for d in range(k.dim + 1):
        all_faces.extend(k.faces(d))
    index = {f: i for i, f in enumerate(all_faces)}
    labels = [k.face_label(f) for f in all_faces]
    flags = []
    for facet in k.facets:
        for perm in itertools.permutations(facet):
            chain = []
            for r in range(1, len(perm) + 1):
                chain.append(index[tuple(sorted(perm[:r]))])
            flags.append(sorted(chain))
    return from_facets(labels, flags)


def _ridge_incidence(k: SimplicialComplex, d):
    """Map each (d-1)-face to the list of (facet index, dropped position)."""
    inc = {}
    for fi, f in enumerate(k.facets):
        for p in range(len(f)):
            ridge = f[:p] + f[p + 1 :]
            inc.setdefault(ridge, []).append((fi, p))
    return inc


def is_closed_pseudomanifold(k: SimplicialComplex, d) -> bool:
    """True iff k is pure of dimension d, every ridge lies in exactly two
    facets, and the facet adjacency graph is connected."""
    if any(len(f) != d + 1 for f in k.facets):
        return False
    inc = _ridge_incidence(k, d)
    if any(len(v) != 2 for v in inc.values()):
        return False
    adj = {i: [] for i in range(len(k.facets))}
    for (a, _), (b, _) in inc.values():
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    dq = deque([0])
    while dq:
        for j in adj[dq.popleft()]:
            if j not in seen:
                seen.add(j)
                dq.append(j)
    return len(seen) == len(k.facets)


def fundamental_cycle(k: SimplicialComplex) -> OrientationClass:
    """Propagate a coherent orientation across ridges, first facet +1.

    Requires ``is_closed_pseudomanifold(k, k.dim)``; raises NonOrientable
    if sign propagation is inconsistent.
    """
    if not is_closed_pseudomanifold(k, k.dim):
        raise ValueError("fundamental_cycle needs a closed pseudomanifold")
    inc = _ridge_incidence(k, k.dim)
    sign = {0: 1}
    dq = deque([0])
    while dq:
        fi = dq.popleft()
        f = k.facets[fi]
        for p in range(len(f)):
            pair = inc[f[:p] + f[p + 1 :]]
            for gj, q in pair:
                if gj == fi and q == p:
                    continue
                # the two induced orientations on a shared ridge must cancel
                want = -sign[fi] * (-1) ** p * (-1) ** q
                if gj in sign:
                    if sign[gj] != want:
                        raise NonOrientable("orientation propagation is inconsistent")
                else:
                    sign[gj] = want
                    dq.append(gj)
    return OrientationClass({f: sign[i] for i, f in enumerate(k.facets)})
