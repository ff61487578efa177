"""Symmetric 2-designs: construction, verification, duality, parameter arithmetic.

Points are 1-based integers; blocks are stored as sorted tuples. Designs are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

import numpy as np

from .errors import InputError
from .ntheory import is_square, ternary_isotropic


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    lam: int

    def __post_init__(self):
        if self.v < 1 or self.k < 1 or self.lam < 1:
            raise InputError(f"parameters must be positive: {self}")

    @property
    def symmetric_feasible(self) -> bool:
        """k(k-1) = lambda(v-1) together with 2 <= k < v."""
        return 2 <= self.k < self.v and self.k * (self.k - 1) == self.lam * (self.v - 1)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.v, self.k, self.lam)


@dataclass(frozen=True)
class Design:
    """Incidence structure with point set {1..v} and an ordered list of blocks.

    Construction rejects malformed input (out-of-range ids, duplicate points
    inside a block, repeated blocks); whether the structure satisfies the
    symmetric-design axioms is the job of verify_symmetric_design.
    """

    params: DesignParams
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, params: DesignParams, blocks):
        cleaned = []
        seen = set()
        for b in blocks:
            b = tuple(sorted(b))
            if len(set(b)) != len(b):
                raise InputError(f"block with repeated point: {b}")
            if b and (b[0] < 1 or b[-1] > params.v):
                raise InputError(f"block {b} has a point outside 1..{params.v}")
            if b in seen:
                raise InputError(f"repeated block: {b}")
            seen.add(b)
            cleaned.append(b)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "blocks", tuple(cleaned))

    @property
    def v(self) -> int:
        return self.params.v

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def lam(self) -> int:
        return self.params.lam

    def block_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(b) for b in self.blocks)

    def block_index(self) -> dict[frozenset, int]:
        return {frozenset(b): i for i, b in enumerate(self.blocks)}

    def points(self) -> range:
        return range(1, self.v + 1)

    def relabel(self, sigma) -> "Design":
        """Apply a point permutation; blocks re-sorted, block list re-canonicalized."""
        new_blocks = sorted(tuple(sorted(sigma(p) for p in b)) for b in self.blocks)
        return Design(self.params, new_blocks)

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "blocks": [list(b) for b in sorted(self.blocks)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Design":
        try:
            params = DesignParams(int(data["v"]), int(data["k"]), int(data["lambda"]))
            blocks = [tuple(int(p) for p in b) for b in data["blocks"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad design file: {exc}") from exc
        return cls(params, blocks)


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple[tuple, ...] = field(default_factory=tuple)

    def __post_init__(self):
        assert self.ok == (len(self.violations) == 0)


def verify_symmetric_design(d: Design) -> VerifyReport:
    """Check the symmetric (v,k,lambda) axioms exhaustively.

    Violations are (kind, subject, observed, expected) tuples; kinds are
    "block-count", "block-size", "pair-count" and "block-intersection".
    """
    v, k, lam = d.params.as_tuple()
    violations: list[tuple] = []
    if len(d.blocks) != v:
        violations.append(("block-count", None, len(d.blocks), v))
    for i, b in enumerate(d.blocks):
        if len(b) != k:
            violations.append(("block-size", i, len(b), k))
    pair_counts: dict[tuple[int, int], int] = {}
    for b in d.blocks:
        for pair in combinations(b, 2):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
    for pair in combinations(range(1, v + 1), 2):
        got = pair_counts.get(pair, 0)
        if got != lam:
            violations.append(("pair-count", pair, got, lam))
    sets = d.block_sets()
    for i, j in combinations(range(len(sets)), 2):
        got = len(sets[i] & sets[j])
        if got != lam:
            violations.append(("block-intersection", (i, j), got, lam))
    return VerifyReport(ok=not violations, violations=tuple(violations))


def dual(d: Design) -> Design:
    """The dual design: point i of the dual is block i of d.

    Block alpha of the dual is {i : alpha in block i of d}; a verified
    symmetric design dualizes to a design with the same parameters.
    """
    if not verify_symmetric_design(d).ok:
        raise InputError("dual requires a verified symmetric design")
    v = d.v
    dual_blocks = []
    for alpha in range(1, v + 1):
        dual_blocks.append(tuple(sorted(i + 1 for i, b in enumerate(d.blocks) if alpha in b)))
    return Design(d.params, dual_blocks)


def params_from_k(k: int) -> DesignParams:
    """Biplane parameters forced by the block size: v = (k^2 - k + 2)/2."""
    if k < 3:
        raise InputError("block size below 3 admits no biplane parameters")
    return DesignParams((k * k - k + 2) // 2, k, 2)


def k_for_point_power(c: int, d: int) -> int | None:
    """The only possible block size when v = c**d, or None.

    Integer-only: k must satisfy k(k-1) = 2(c**d - 1) exactly.
    """
    if c < 2 or d < 2:
        raise InputError("need c >= 2 and d >= 2")
    target = 2 * (c**d - 1)
    k = (1 + isqrt(1 + 4 * target)) // 2
    for cand in (k - 1, k, k + 1):
        if cand >= 2 and cand * (cand - 1) == target:
            return cand
    return None


def brc_feasible(p: DesignParams) -> bool:
    """Bruck-Ryser-Chowla feasibility for symmetric (v,k,lambda) parameters.

    v even: k - lambda must be a perfect square. v odd: the ternary form
    z^2 = (k-lambda) x^2 + (-1)^((v-1)/2) lambda y^2 must have a nontrivial
    integer solution, decided by exact integer Hilbert symbols.
    """
    if not p.symmetric_feasible:
        raise InputError(f"{p} is not symmetric-feasible")
    n = p.k - p.lam
    if p.v % 2 == 0:
        return is_square(n)
    m = p.lam if ((p.v - 1) // 2) % 2 == 0 else -p.lam
    return ternary_isotropic(n, m)


def brc_brute_force(p: DesignParams, bound: int | None = None) -> bool:
    """Independent oracle for brc_feasible: bounded search for a solution.

    Scans |x|, |y|, |z| <= bound (default 4*(k-lambda)*lambda*v) of the same
    ternary form; returns True iff a nontrivial solution is found in the box.
    """
    if not p.symmetric_feasible:
        raise InputError(f"{p} is not symmetric-feasible")
    n = p.k - p.lam
    if p.v % 2 == 0:
        # the form degenerates; existence requires n to be a square, which the
        # bounded scan reproduces via z^2 = n x^2
        return is_square(n)
    m = p.lam if ((p.v - 1) // 2) % 2 == 0 else -p.lam
    if bound is None:
        bound = 4 * n * p.lam * p.v
    zmax2 = bound * bound
    ys = np.arange(0, bound + 1, dtype=np.int64)
    my2 = m * ys * ys
    for x in range(0, bound + 1):
        base = n * x * x
        if m > 0 and base > zmax2:
            break
        vals = base + my2
        if x == 0:
            vals = vals.copy()
            vals[0] = -1  # (x, y, z) = (0, 0, 0) is the trivial solution
        mask = (vals >= 0) & (vals <= zmax2)
        if not mask.any():
            continue
        cand = vals[mask]
        roots = np.sqrt(cand.astype(np.float64)).astype(np.int64)
        if ((roots * roots == cand) | ((roots + 1) * (roots + 1) == cand)).any():
            return True
    return False


def subdesign_constraint(k: int, lam: int, k_prime: int) -> bool:
    """Parameter constraint forced on a proper symmetric subdesign:
    either (k'-1)^2 = k - lambda, or k'(k'-1) <= k - lambda."""
    return (k_prime - 1) ** 2 == k - lam or k_prime * (k_prime - 1) <= k - lam


def restrict_subdesign(d: Design, points, block_indices) -> Design | None:
    """Induced substructure on a point subset and block subset, if it is a design.

    Returns the symmetric subdesign iff all restricted blocks have one common
    size k' >= 2, the restricted structure has as many blocks as points, and
    every point pair of the restriction is covered exactly lambda times.
    """
    points = sorted(set(points))
    block_indices = sorted(set(block_indices))
    if any(not 1 <= p <= d.v for p in points):
        raise InputError("restriction points out of range")
    if any(not 0 <= i < len(d.blocks) for i in block_indices):
        raise InputError("restriction block indices out of range")
    if not points or not block_indices:
        return None
    pset = set(points)
    restricted = [tuple(sorted(set(d.blocks[i]) & pset)) for i in block_indices]
    sizes = {len(b) for b in restricted}
    if len(sizes) != 1:
        return None
    k_prime = sizes.pop()
    if k_prime < 2 or len(restricted) != len(points) or k_prime >= len(points):
        return None
    if len(set(restricted)) != len(restricted):
        return None
    relabel = {p: i + 1 for i, p in enumerate(points)}
    sub_blocks = [tuple(sorted(relabel[p] for p in b)) for b in restricted]
    sub = Design(DesignParams(len(points), k_prime, d.lam), sub_blocks)
    if not verify_symmetric_design(sub).ok:
        return None
    return sub
