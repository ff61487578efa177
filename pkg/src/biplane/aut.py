"""Automorphism groups, canonical forms and isomorphism tests for designs.

The search is individualization-refinement backtracking on the bipartite
point/block incidence graph. Points and blocks carry distinct initial colors,
so dualities are never counted as automorphisms. Refinement is iterated
degree-in-color-class counting (equitable partition); the target cell is the
first smallest non-singleton; children are taken in ascending vertex order.
Automorphisms found during the search prune sibling branches through the
orbits of the prefix-fixing generators found so far (weak pruning only).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import permutations

from .design import Design, verify_symmetric_design
from .errors import InputError, ScaleError
from .perm import PermGroup, Permutation


@dataclass(frozen=True)
class CanonicalCertificate:
    """Relabeling-invariant fingerprint: the canonical block list plus a digest."""

    blocks: tuple[tuple[int, ...], ...]
    digest: str

    @classmethod
    def from_blocks(cls, blocks) -> "CanonicalCertificate":
        blocks = tuple(tuple(b) for b in blocks)
        digest = hashlib.sha256(repr(blocks).encode()).hexdigest()
        return cls(blocks, digest)


@dataclass(frozen=True)
class AutResult:
    group: PermGroup
    order: int


def _equitable(cells: list[tuple[int, ...]], adj: list[int]) -> list[tuple[int, ...]]:
    """Refine an ordered partition until every cell is equitable.

    Split fragments are ordered by their neighbor-count signature, which is
    independent of the vertex labels; cells stay sorted internally.
    """
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for u in cell:
                m |= 1 << u
            masks[i] = m
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs: dict[tuple[int, ...], list[int]] = {}
            for u in cell:
                au = adj[u]
                sig = tuple((au & m).bit_count() for m in masks)
                sigs.setdefault(sig, []).append(u)
            if len(sigs) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(sigs):
                    new_cells.append(tuple(sorted(sigs[sig])))
        if not changed:
            return new_cells
        cells = new_cells


def _individualize(cells, idx: int, u: int):
    cell = cells[idx]
    rest = tuple(x for x in cell if x != u)
    return cells[:idx] + [(u,), rest] + cells[idx + 1:]


class _Search:
    """One individualization-refinement run over a design's incidence graph."""

    def __init__(self, d: Design):
        self.v = d.v
        self.nblocks = len(d.blocks)
        self.n = self.v + self.nblocks
        adj = [0] * self.n
        for j, b in enumerate(d.blocks):
            bv = self.v + j
            for p in b:
                adj[p - 1] |= 1 << bv
                adj[bv] |= 1 << (p - 1)
        self.adj = adj
        self.block_lookup = d.block_index()
        self.blocks = d.blocks
        self.first_pos: dict[int, int] | None = None
        self.first_cert = None
        self.best_pos: dict[int, int] | None = None
        self.best_cert = None
        self.autos: list[tuple[int, ...]] = []  # 0-based full-vertex image tuples
        self._auto_set: set[tuple[int, ...]] = set()

    def run(self) -> None:
        cells = [tuple(range(self.v)), tuple(range(self.v, self.n))]
        if self.nblocks == 0:
            cells = cells[:1]
        self._recurse(cells, ())

    # -- tree walk ---------------------------------------------------------

    def _target(self, cells) -> int | None:
        best, best_size = None, None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (best_size is None or len(cell) < best_size):
                best, best_size = i, len(cell)
        return best

    def _recurse(self, cells, prefix: tuple[int, ...]) -> None:
        cells = _equitable(cells, self.adj)
        tgt = self._target(cells)
        if tgt is None:
            self._leaf(cells)
            return
        explored: list[int] = []
        nautos = -1
        find = None
        for u in cells[tgt]:
            if explored:
                if len(self.autos) != nautos:
                    nautos = len(self.autos)
                    find = self._prefix_orbit_find(prefix)
                if find is not None and any(find[u] == find[e] for e in explored):
                    continue
            explored.append(u)
            self._recurse(_individualize(cells, tgt, u), prefix + (u,))

    def _prefix_orbit_find(self, prefix) -> list[int] | None:
        """Flat union-find table over vertices, from autos fixing the prefix pointwise."""
        gens = [a for a in self.autos if all(a[p] == p for p in prefix)]
        if not gens:
            return None
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in gens:
            for i in range(self.n):
                ri, rj = find(i), find(g[i])
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return [find(i) for i in range(self.n)]

    # -- leaves ------------------------------------------------------------

    def _leaf(self, cells) -> None:
        pos = {cell[0]: i for i, cell in enumerate(cells)}
        cert = self._certificate(pos)
        if self.first_cert is None:
            self.first_cert, self.first_pos = cert, pos
        elif cert == self.first_cert:
            self._record_automorphism(pos)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_pos = cert, pos

    def _point_ranks(self, pos) -> dict[int, int]:
        """Map each point p (1-based) to its canonical label (1-based)."""
        order = sorted(range(self.v), key=lambda p: pos[p])
        return {p + 1: rank + 1 for rank, p in enumerate(order)}

    def _certificate(self, pos):
        ranks = self._point_ranks(pos)
        return tuple(sorted(tuple(sorted(ranks[p] for p in b)) for b in self.blocks))

    def _record_automorphism(self, pos) -> None:
        ranks_first = self._point_ranks(self.first_pos)
        ranks_here = self._point_ranks(pos)
        inv_first = {lab: p for p, lab in ranks_first.items()}
        point_images = [inv_first[ranks_here[p]] for p in range(1, self.v + 1)]
        sigma = Permutation(point_images)
        full = list(range(self.n))
        for p in range(1, self.v + 1):
            full[p - 1] = sigma(p) - 1
        for j, b in enumerate(self.blocks):
            image = sigma.apply_set(b)
            tj = self.block_lookup.get(image)
            if tj is None:
                raise AssertionError("leaf with equal certificate is not an automorphism")
            full[self.v + j] = self.v + tj
        full_t = tuple(full)
        if not sigma.is_identity() and full_t not in self._auto_set:
            self._auto_set.add(full_t)
            self.autos.append(full_t)

    def point_generators(self) -> list[Permutation]:
        out = []
        for a in self.autos:
            out.append(Permutation(a[p] + 1 for p in range(self.v)))
        return sorted(out, key=lambda g: g.images)


def _checked(d: Design) -> Design:
    if not verify_symmetric_design(d).ok:
        raise InputError("design does not verify; refusing to search")
    return d


def automorphism_group(d: Design) -> AutResult:
    """Full automorphism group of a verified design, acting on points."""
    s = _Search(_checked(d))
    s.run()
    group = PermGroup(d.v, s.point_generators())
    return AutResult(group=group, order=group.order())


def canonical_form(d: Design) -> CanonicalCertificate:
    """Certificate invariant under point relabeling: the least leaf block list."""
    s = _Search(_checked(d))
    s.run()
    return CanonicalCertificate.from_blocks(s.best_cert)


def _canonical_ranks(d: Design) -> dict[int, int]:
    s = _Search(_checked(d))
    s.run()
    return s._point_ranks(s.best_pos)


def are_isomorphic(a: Design, b: Design) -> Permutation | None:
    """A point bijection carrying blocks of a onto blocks of b, or None.

    Consistent with canonical_form equality: a mapping exists iff the
    certificates agree.
    """
    if a.params != b.params:
        raise InputError(f"parameter mismatch: {a.params} vs {b.params}")
    if canonical_form(a) != canonical_form(b):
        return None
    ranks_a = _canonical_ranks(a)
    ranks_b = _canonical_ranks(b)
    inv_b = {lab: p for p, lab in ranks_b.items()}
    sigma = Permutation(inv_b[ranks_a[p]] for p in range(1, a.v + 1))
    image = {sigma.apply_set(blk) for blk in a.blocks}
    if image != set(b.block_sets()):
        raise AssertionError("canonical forms agree but mapping failed")
    return sigma


def is_automorphism(d: Design, x: Permutation) -> bool:
    """Does x map the block set onto itself?"""
    if x.degree != d.v:
        raise InputError(f"permutation degree {x.degree} != v = {d.v}")
    sets = set(d.block_sets())
    return all(x.apply_set(b) in sets for b in d.blocks)


def brute_force_automorphism_order(d: Design, cap_degree: int = 8) -> int:
    """Oracle: count all point permutations preserving the block set (v <= cap)."""
    if d.v > cap_degree:
        raise ScaleError(f"brute force capped at degree {cap_degree}")
    sets = set(d.block_sets())
    count = 0
    for images in permutations(range(1, d.v + 1)):
        x = Permutation(images)
        if all(x.apply_set(b) in sets for b in d.blocks):
            count += 1
    return count
