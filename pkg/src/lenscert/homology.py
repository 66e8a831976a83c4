"""Integral simplicial homology from Smith normal forms of boundary maps.

Orientation convention, fixed globally: faces are sorted index tuples and
the i-th face map drops the i-th vertex with sign (-1)^i.  The cup products
in :mod:`lenscert.torsion` rely on this same order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .exactlin import IntMatrix, elementary_divisors


@dataclass(frozen=True)
class HomologyGroups:
    """H_d = Z^betti[d] (+) sum of Z/t for t in torsion[d]."""

    betti: tuple
    torsion: tuple  # tuple of tuples of invariant factors > 1

    def to_json_fragment(self):
        return {
            "H": [
                {"betti": b, "torsion": list(t)}
                for b, t in zip(self.betti, self.torsion)
            ]
        }

    def __str__(self):
        parts = []
        for b, t in zip(self.betti, self.torsion):
            terms = ["Z"] * b + [f"Z/{x}" for x in t]
            parts.append(" + ".join(terms) if terms else "0")
        return "(" + ", ".join(parts) + ")"


def boundary_matrix(k: SimplicialComplex, d) -> IntMatrix:
    """The boundary map C_d -> C_{d-1}: rows are (d-1)-faces, columns d-faces."""
    if d < 1 or d > k.dim:
        raise ValueError(f"dimension {d} out of range 1..{k.dim}")
    low = {f: i for i, f in enumerate(k.faces(d - 1))}
    high = k.faces(d)
    entries = [0] * (len(low) * len(high))
    ncols = len(high)
    for j, f in enumerate(high):
        for p in range(len(f)):
            i = low[f[:p] + f[p + 1 :]]
            entries[i * ncols + j] = (-1) ** p
    return IntMatrix(len(low), ncols, entries)


def _sparse_boundary(k: SimplicialComplex, d):
    low = {f: i for i, f in enumerate(k.faces(d - 1))}
    cols = {}
    for j, f in enumerate(k.faces(d)):
        cols[j] = {low[f[:p] + f[p + 1 :]]: (-1) ** p for p in range(len(f))}
    return cols


def homology_groups(k: SimplicialComplex) -> HomologyGroups:
    """All integral homology groups, H_d = ker d_d / im d_{d+1}."""
    divisors = {d: elementary_divisors(_sparse_boundary(k, d)) for d in range(1, k.dim + 1)}
    ranks = {d: len(divisors.get(d, [])) for d in range(k.dim + 2)}
    ranks[0] = 0
    betti = []
    torsion = []
    for d in range(k.dim + 1):
        betti.append(len(k.faces(d)) - ranks[d] - ranks.get(d + 1, 0))
        torsion.append(tuple(t for t in divisors.get(d + 1, []) if t > 1))
    return HomologyGroups(tuple(betti), tuple(torsion))


def euler_characteristic_from_ranks(k: SimplicialComplex) -> int:
    """chi = sum (-1)^d betti_d; an oracle independent of the face counts."""
    h = homology_groups(k)
    return sum((-1) ** d * b for d, b in enumerate(h.betti))
