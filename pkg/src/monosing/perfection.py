"""Minimal annihilators, perfect pairs, perfect paths, and the classification
of indecomposable non-projective Gorenstein projective modules.

For a nonzero nontrivial path p, L(p) collects the right-minimal paths among
the nonzero q with s(q) = t(p) and qp = 0, and R(p) the left-minimal paths
among the nonzero q with t(q) = s(p) and pq = 0.  Minimality is taken
relative to the candidate set: a candidate is discarded when a proper factor
on the relevant side is itself a candidate.

A pair (p, q) is perfect when both are nontrivial, pq = 0, R(p) = {q} and
L(q) = {p}.  The partial successor map p -> q is then injective in both
directions and its cycles are exactly the perfect paths; the module over the
cyclic generator classifies the stable Gorenstein projectives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation, TrivialPath, ZeroPath


def annihilator_minimal(pres, p, side):
    """L(p) (side="left") or R(p) (side="right"), canonically sorted."""
    if p.is_trivial:
        raise TrivialPath(f"{p} is trivial")
    if not pres.is_nonzero(p):
        raise ZeroPath(f"{p} is zero in the algebra")
    basis = pres.basis()
    out = []
    if side == "right":
        for q in basis.paths:
            if q.is_trivial or q.target != p.source:
                continue
            if pres.word_is_nonzero(p.arrows + q.arrows):
                continue
            if _left_minimal(pres, p, q):
                out.append(q)
    elif side == "left":
        for q in basis.paths:
            if q.is_trivial or q.source != p.target:
                continue
            if pres.word_is_nonzero(q.arrows + p.arrows):
                continue
            if _right_minimal(pres, p, q):
                out.append(q)
    else:
        raise ValueError("side must be 'left' or 'right'")
    out.sort(key=pres.quiver.sort_key)
    return out


def _left_minimal(pres, p, q):
    # q is in R(p)-candidates; discard if some proper left factor is too
    for i in range(1, q.length):
        if not pres.word_is_nonzero(p.arrows + q.arrows[:i]):
            return False
    return True


def _right_minimal(pres, p, q):
    # q is in L(p)-candidates; discard if some proper right factor is too
    for i in range(1, q.length):
        if not pres.word_is_nonzero(q.arrows[q.length - i :] + p.arrows):
            return False
    return True


def perfect_pairs(pres):
    """All perfect pairs (p, q), canonically sorted by p."""
    if "perfect_pairs" in pres._cache:
        return pres._cache["perfect_pairs"]
    basis = pres.basis()
    pairs = []
    for p in basis.paths:
        if p.is_trivial:
            continue
        r = annihilator_minimal(pres, p, "right")
        if len(r) != 1:
            continue
        q = r[0]
        l = annihilator_minimal(pres, q, "left")
        if l == [p]:
            pairs.append((p, q))
    seen_left = set()
    seen_right = set()
    for p, q in pairs:
        if p in seen_left or q in seen_right:
            raise InternalInvariantViolation("perfect-pair successor is not a partial injection")
        seen_left.add(p)
        seen_right.add(q)
    pres._cache["perfect_pairs"] = pairs
    return pairs


@dataclass
class PerfectPairGraph:
    """The successor map p -> q over perfect pairs and its cycles."""

    pairs: list
    successor: dict
    cycles: list  # list of tuples of Paths, each rotated to its least member

    def perfect_set(self):
        return {p for cyc in self.cycles for p in cyc}

    def cycle_of(self, p):
        for cyc in self.cycles:
            if p in cyc:
                return cyc
        return None


def perfect_paths(pres):
    """The PerfectPairGraph; perfect paths are the successor-cycle members."""
    if "perfect_paths" in pres._cache:
        return pres._cache["perfect_paths"]
    pairs = perfect_pairs(pres)
    successor = {p: q for p, q in pairs}
    key = pres.quiver.sort_key
    cycles = []
    done = set()
    for start in sorted(successor, key=key):
        if start in done:
            continue
        walk = []
        pos = {}
        cur = start
        while cur is not None and cur not in done and cur not in pos:
            pos[cur] = len(walk)
            walk.append(cur)
            cur = successor.get(cur)
        if cur is not None and cur in pos:
            cycles.append(_rotate_to_least(walk[pos[cur] :], key))
        done.update(walk)
    cycles.sort(key=lambda c: key(c[0]))
    g = PerfectPairGraph(pairs=pairs, successor=successor, cycles=cycles)
    pres._cache["perfect_paths"] = g
    return g


def _rotate_to_least(cycle, key):
    i = min(range(len(cycle)), key=lambda j: key(cycle[j]))
    return tuple(cycle[i:] + cycle[:i])


@dataclass
class GpModuleDescriptor:
    """The cyclic module over a perfect path: basis, dimension vector, top."""

    generator: object  # Path
    basis: list
    dim_vector: dict
    projective: bool = False

    @property
    def top_vertex(self):
        return self.generator.target

    @property
    def total_dimension(self):
        return sum(self.dim_vector.values())


def classify_stable_gproj(pres):
    """One descriptor per perfect path; the count is the CM-type.

    The classification sends a perfect path p to the cyclic module on p;
    every descriptor is non-projective with simple top at t(p).
    """
    graph = perfect_paths(pres)
    out = []
    for p in sorted(graph.perfect_set(), key=pres.quiver.sort_key):
        basis, vec = pres.cyclic_module_basis(p)
        if len(basis) == len(pres.basis().from_vertex(p.target)):
            raise InternalInvariantViolation(f"perfect path {p} generates a projective module")
        out.append(GpModuleDescriptor(generator=p, basis=basis, dim_vector=vec))
    return out


def cm_type(pres):
    return len(perfect_paths(pres).perfect_set())


def perfection_to_json(pres):
    """The documented JSON report for pairs, cycles and GP modules."""
    graph = perfect_paths(pres)
    descriptors = classify_stable_gproj(pres)
    return {
        "perfect_pairs": [[str(p), str(q)] for p, q in graph.pairs],
        "cycles": [[str(p) for p in cyc] for cyc in graph.cycles],
        "gp_modules": [
            {
                "generator": str(d.generator),
                "dim_vector": {v: n for v, n in d.dim_vector.items() if n},
                "basis": [str(q) for q in d.basis],
                "top": d.top_vertex,
            }
            for d in descriptors
        ],
        "cm_type": len(descriptors),
    }
