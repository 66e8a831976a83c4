"""Cyclic group actions on complexes and their simplicial quotients.

The quotient construction is the delicate step: the vertex-orbit quotient
of a complex is a genuine simplicial model of the topological quotient only
when the action is *regular* -- distinct face orbits must land on distinct
vertex-orbit label sets in every dimension.  Freeness alone (even together
with "no face contains both v and g.v") does not guarantee this, so
``quotient`` verifies regularity exhaustively and raises
:class:`IdentificationClash` when it fails; the caller should subdivide
and retry.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .complexes import SimplicialComplex, barycentric_subdivision, from_facets
from .errors import BadCycleLength, FreenessViolation, IdentificationClash, NotCoprime, NotSimplicial


@dataclass(frozen=True)
class CyclicAction:
    """Order-n action given by a vertex permutation generating Z/n."""

    order: int
    generator: tuple  # generator[i] = image vertex index of vertex i

    def __post_init__(self):
        n = len(self.generator)
        if sorted(self.generator) != list(range(n)):
            raise ValueError("generator is not a permutation")
        if self.order < 1:
            raise ValueError("order must be >= 1")
        p = list(range(n))
        for _ in range(self.order):
            p = [self.generator[i] for i in p]
        if p != list(range(n)):
            raise ValueError("generator^order is not the identity")

    def power(self, m):
        p = list(range(len(self.generator)))
        for _ in range(m % self.order):
            p = [self.generator[i] for i in p]
        return p

    def face_image(self, face, perm=None):
        perm = self.generator if perm is None else perm
        return tuple(sorted(perm[i] for i in face))

    def vertex_orbit(self, v):
        orb = [v]
        w = self.generator[v]
        while w != v:
            orb.append(w)
            w = self.generator[w]
        return orb

    def to_json_dict(self):
        return {"order": self.order, "generator": list(self.generator)}

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(obj):
        return CyclicAction(obj["order"], tuple(obj["generator"]))


def is_simplicial_on(a: CyclicAction, k: SimplicialComplex) -> bool:
    if len(a.generator) != len(k.vertices):
        return False
    return all(k.has_face(a.face_image(f)) for f in k.facets)


def _require_simplicial(a, k):
    if not is_simplicial_on(a, k):
        raise NotSimplicial("generator does not map facets to faces")


def psi_k_on_mn(n, k) -> CyclicAction:
    """The order-n action on M_n: rotate the first factor cycle by one
    step and the second by k steps.

    Vertex layout matches :func:`lenscert.lens.build_mn`: indices 0..n-1
    are the first factor, n..2n-1 the second.
    """
    if n < 3:
        raise BadCycleLength(f"cycle length {n} < 3")
    if not (1 <= k < n):
        raise NotCoprime(f"k={k} outside 1..{n - 1}")
    if math.gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n},{k}) != 1")
    gen = [(i + 1) % n for i in range(n)] + [n + (j + k) % n for j in range(n)]
    return CyclicAction(n, tuple(gen))


def is_free_on_cells(a: CyclicAction, k: SimplicialComplex) -> bool:
    """True iff no face is mapped to itself (as a set) by any nontrivial power."""
    _require_simplicial(a, k)
    perms = [a.power(m) for m in range(1, a.order)]
    for d in range(k.dim + 1):
        for f in k.faces(d):
            for p in perms:
                if a.face_image(f, p) == f:
                    return False
    return True


def induced_action_on_subdivision(a: CyclicAction, k: SimplicialComplex) -> CyclicAction:
    """Push the action to Sd(k): a face-label vertex maps to its set image."""
    _require_simplicial(a, k)
    all_faces = []
    for d in range(k.dim + 1):
        all_faces.extend(k.faces(d))
    index = {f: i for i, f in enumerate(all_faces)}
    gen = [index[a.face_image(f)] for f in all_faces]
    return CyclicAction(a.order, tuple(gen))


def quotient(k: SimplicialComplex, a: CyclicAction) -> SimplicialComplex:
    """The vertex-orbit quotient complex, verified regular.

    Quotient vertices are vertex orbits labeled by their lexicographically
    smallest member; facets are the orbit-label images of the facets.
    Raises FreenessViolation if some cell is fixed setwise, and
    IdentificationClash if the label map degenerates a facet or any two
    distinct face orbits collide (checked via exact per-dimension counts:
    every f_i must drop by a factor of exactly n).
    """
    _require_simplicial(a, k)
    if not is_free_on_cells(a, k):
        raise FreenessViolation("a nontrivial power fixes a cell setwise")
    n = a.order
    # orbit labels on vertices
    rep = {}
    order = []
    for v in range(len(k.vertices)):
        if v in rep:
            continue
        orb = a.vertex_orbit(v)
        r = min(orb, key=lambda i: k.vertices[i])
        for w in orb:
            rep[w] = r
        order.append(r)
    reps = sorted(set(rep.values()), key=lambda i: k.vertices[i])
    new_index = {r: i for i, r in enumerate(reps)}
    labels = [k.vertices[r] for r in reps]
    image_facets = set()
    for f in k.facets:
        img = tuple(sorted(new_index[rep[v]] for v in set(f)))
        if len(img) != len(f):
            raise IdentificationClash(
                "facet collapses under vertex identification; subdivide again"
            )
        image_facets.add(img)
    q = from_facets(labels, sorted(image_facets))
    expected = tuple(c // n for c in k.f_vector())
    if any(c % n for c in k.f_vector()) or q.f_vector() != expected:
        raise IdentificationClash(
            f"face orbits collide: quotient f-vector {q.f_vector()} != "
            f"{expected}; subdivide again"
        )
    return q


def orbit_count(a: CyclicAction, k: SimplicialComplex, d) -> int:
    """Number of d-face orbits (free actions only: |faces| / order)."""
    faces = k.faces(d)
    seen = set()
    count = 0
    for f in faces:
        if f in seen:
            continue
        count += 1
        for m in range(a.order):
            seen.add(a.face_image(f, a.power(m)))
    return count
