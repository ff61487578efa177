"""Finite group tables, difference sets, developments, and exclusion tests.

Groups are explicit multiplication tables over elements 0..n-1 with identity
0, so everything downstream is presentation-free. The exhaustive search and
the development are the constructive route to transitive biplanes; the
Lander witness scan is the arithmetic route to nonexistence.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple

from .design import Design, DesignParams
from .errors import InputError, ScaleError
from .ntheory import divisors, factorize, square_free_part
from .perm import Permutation

ASSOCIATIVITY_CHECK_CAP = 64
SEARCH_SUBSET_CAP = 10**8


@dataclass(frozen=True)
class GroupTable:
    """A finite group as an n x n multiplication table; element 0 is the identity."""

    name: str
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(self.n)


def _build_table(name: str, mul) -> GroupTable:
    mul = tuple(tuple(row) for row in mul)
    n = len(mul)
    if any(len(row) != n for row in mul):
        raise InputError("multiplication table is not square")
    if any(mul[0][x] != x or mul[x][0] != x for x in range(n)):
        raise InputError("element 0 is not an identity")
    inv = [None] * n
    for x in range(n):
        for y in range(n):
            if mul[x][y] == 0:
                if mul[y][x] != 0:
                    raise InputError(f"one-sided inverse at {x}")
                inv[x] = y
    if any(i is None for i in inv):
        raise InputError("missing inverses")
    if n <= ASSOCIATIVITY_CHECK_CAP:
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise InputError(f"associativity fails at ({a},{b},{c})")
    return GroupTable(name=name, mul=mul, inv=tuple(inv))


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InputError("cyclic group order must be positive")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _build_table(f"cyclic({n})", mul)


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Direct product with elements enumerated as x*|b| + y."""
    nb = b.n
    n = a.n * nb

    def pair(x, y):
        return x * nb + y

    mul = [[0] * n for _ in range(n)]
    for x1 in range(a.n):
        for y1 in range(nb):
            for x2 in range(a.n):
                for y2 in range(nb):
                    mul[pair(x1, y1)][pair(x2, y2)] = pair(a.mul[x1][x2], b.mul[y1][y2])
    return _build_table(f"product({a.name},{b.name})", mul)


def quaternion8() -> GroupTable:
    """The quaternion group of order 8: elements 1, i, j, k, -1, -i, -j, -k."""
    # (sign, axis) with axis in 0..3 standing for 1, i, j, k
    axis_mul = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    sign_mul = [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
    ]

    def idx(sign, axis):
        return axis if sign == 1 else axis + 4

    mul = [[0] * 8 for _ in range(8)]
    for s1 in (1, -1):
        for a1 in range(4):
            for s2 in (1, -1):
                for a2 in range(4):
                    s = s1 * s2 * sign_mul[a1][a2]
                    mul[idx(s1, a1)][idx(s2, a2)] = idx(s, axis_mul[a1][a2])
    return _build_table("quaternion8", mul)


def elementary_abelian(p: int, k: int) -> GroupTable:
    """(C_p)^k with elements written in base p."""
    n = p**k
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            total, mult = 0, 1
            x, y = a, b
            for _ in range(k):
                total += ((x + y) % p) * mult
                x //= p
                y //= p
                mult *= p
            mul[a][b] = total
    return _build_table(f"elementary({p},{k})", mul)


_TAG_BUILDERS = {
    "c11": lambda: cyclic(11),
    "c16": lambda: cyclic(16),
    "c37": lambda: cyclic(37),
    "c2xc8": lambda: direct_product(cyclic(2), cyclic(8)),
    "q8xc2": lambda: direct_product(quaternion8(), cyclic(2)),
    "e16": lambda: elementary_abelian(2, 4),
    "c121ab": lambda: direct_product(cyclic(11), cyclic(11)),
}


def from_tag(tag: str) -> GroupTable:
    """Build one of the documented group tags; c<N> means cyclic of order N."""
    if tag in _TAG_BUILDERS:
        return _TAG_BUILDERS[tag]()
    if tag.startswith("c") and tag[1:].isdigit():
        return cyclic(int(tag[1:]))
    raise InputError(f"unknown group tag {tag!r}; known: {sorted(_TAG_BUILDERS)}")


@dataclass(frozen=True)
class DifferenceSet:
    group: GroupTable
    elements: tuple[int, ...]
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @property
    def params(self) -> DesignParams:
        return DesignParams(self.group.n, len(self.elements), self.lam)


def is_difference_set(g: GroupTable, elements, lam: int) -> bool:
    """Does the difference list x^-1 y cover every non-identity element lam times?"""
    elements = sorted(set(elements))
    if any(not 0 <= e < g.n for e in elements):
        raise InputError("difference-set elements out of range")
    if len(elements) < 2:
        raise InputError("difference set needs at least two elements")
    counts = [0] * g.n
    mul, inv = g.mul, g.inv
    for x in elements:
        ix = inv[x]
        row = mul[ix]
        for y in elements:
            if x != y:
                counts[row[y]] += 1
    return counts[0] == 0 and all(c == lam for c in counts[1:])


def develop(ds: DifferenceSet) -> Design:
    """The development: blocks are the right translates D*x, x over the group.

    The right-multiplication action of the group is checked to embed as a
    point-regular automorphism subgroup.
    """
    g = ds.group
    if not is_difference_set(g, ds.elements, ds.lam):
        raise InputError("not a difference set; refusing to develop")
    mul = g.mul
    blocks = sorted(tuple(sorted(mul[d][x] + 1 for d in ds.elements)) for x in g.elements())
    design = Design(ds.params, blocks)
    block_sets = set(design.block_sets())
    for x in g.elements():
        perm = Permutation(mul[e][x] + 1 for e in g.elements())
        if any(perm.apply_set(b) not in block_sets for b in design.blocks):
            raise AssertionError("right translation does not preserve the development")
    return design


def _canonical_rep(g: GroupTable, subset: tuple[int, ...],
                   automorphisms: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Least representative of the subset's class under translation (and
    the supplied group automorphisms, if any)."""
    mul = g.mul
    best = None
    images = [subset]
    if automorphisms:
        images = [tuple(a[e] for e in subset) for a in automorphisms]
    for img in images:
        for x in g.elements():
            cand = tuple(sorted(mul[e][x] for e in img))
            if best is None or cand < best:
                best = cand
    return best


def _scan_chunk(g: GroupTable, k: int, lam: int, chunk) -> list[tuple[int, ...]]:
    found = []
    for rest in chunk:
        subset = (0,) + rest
        if is_difference_set(g, subset, lam):
            found.append(subset)
    return found


def search_difference_sets(g: GroupTable, k: int, lam: int,
                           automorphisms=None, threads: int | None = None
                           ) -> list[DifferenceSet]:
    """All (n,k,lam) difference sets in g, up to translation (and up to the
    supplied automorphisms of g, given as image tables).

    Every translation class has a member containing the identity, so the scan
    runs over subsets containing 0. Results are in ascending representative
    order; the order is independent of how the scan is sharded.
    """
    if comb(g.n, k) > SEARCH_SUBSET_CAP:
        raise ScaleError(f"C({g.n},{k}) exceeds the search cap {SEARCH_SUBSET_CAP}")
    if threads is None:
        threads = max(1, int(os.environ.get("BIPLANE_THREADS", "1")))
    autos = tuple(tuple(a) for a in automorphisms) if automorphisms else ()
    combos = combinations(range(1, g.n), k - 1)
    if threads <= 1:
        hits = _scan_chunk(g, k, lam, combos)
    else:
        chunks: list[list] = [[] for _ in range(threads)]
        for i, rest in enumerate(combos):
            chunks[i % threads].append(rest)
        hits = []
        with ThreadPoolExecutor(max_workers=threads) as ex:
            for part in ex.map(lambda ch: _scan_chunk(g, k, lam, ch), chunks):
                hits.extend(part)
    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    for subset in hits:
        rep = _canonical_rep(g, subset, autos)
        reps.setdefault(rep, rep)
    return [DifferenceSet(group=g, elements=rep, lam=lam) for rep in sorted(reps)]


def table_automorphisms(g: GroupTable, cap: int = 16) -> list[tuple[int, ...]]:
    """All automorphisms of a small group table, as image tuples.

    Backtracks over images of the elements in order, using the table to
    propagate products; practical for n <= 16.
    """
    if g.n > cap:
        raise ScaleError(f"table automorphism search capped at order {cap}")
    n, mul = g.n, g.mul
    orders = {}
    for x in range(n):
        e, y = 1, x
        while y != 0:
            y = mul[y][x]
            e += 1
        orders[x] = e
    out: list[tuple[int, ...]] = []

    def extend(img: dict[int, int], used: set[int]):
        if len(img) == n:
            out.append(tuple(img[x] for x in range(n)))
            return
        x = min(e for e in range(n) if e not in img)
        for y in range(n):
            if y in used or orders[y] != orders[x]:
                continue
            new = dict(img)
            new[x] = y
            ok = True
            frontier = [x]
            while frontier and ok:
                a = frontier.pop()
                for b in list(new):
                    for p, q in ((a, b), (b, a)):
                        pq = mul[p][q]
                        want = mul[new[p]][new[q]]
                        if pq in new:
                            if new[pq] != want:
                                ok = False
                                break
                        else:
                            if want in new.values():
                                ok = False
                                break
                            new[pq] = want
                            frontier.append(pq)
                    if not ok:
                        break
            if ok:
                extend(new, set(new.values()))

    extend({0: 0}, {0})
    return sorted(set(out))


class LanderWitness(NamedTuple):
    pdiv: int
    q: int
    j: int


def lander_excluded(p: DesignParams) -> LanderWitness | None:
    """Witness (pdiv, q, j) certifying that no (v,k,lam) difference set exists.

    Needs pdiv > 1 dividing v, a prime q dividing the square-free part of
    k - lam, and q**j = -1 (mod pdiv). Scans divisors ascending, so the least
    witness is returned; None when no witness exists.
    """
    if not p.symmetric_feasible:
        raise InputError(f"{p} is not symmetric-feasible")
    sf = square_free_part(p.k - p.lam)
    qs = sorted(factorize(sf)) if sf > 1 else []
    for pdiv in divisors(p.v):
        if pdiv == 1:
            continue
        for q in qs:
            if pdiv % q == 0:
                continue
            power, j, seen = q % pdiv, 1, set()
            while power not in seen:
                if power == pdiv - 1 and pdiv > 2:
                    return LanderWitness(pdiv=pdiv, q=q, j=j)
                seen.add(power)
                power = power * q % pdiv
                j += 1
    return None
