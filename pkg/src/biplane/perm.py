"""Permutations of {1..n}, cycle types, and permutation groups.

Groups are given by generators; exact orders, orbits and stabilizers come
from a deterministic Schreier-Sims stabilizer chain (fixed base order
1, 2, 3, ... unless a base prefix is requested), so repeated runs produce
identical certificates.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass

from .errors import InputError, ScaleError

_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\)")

CONJUGACY_ENUMERATION_CAP = 10**7


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation like "(2,4,3)(5,13,9)"; fixed points implicit."""
        stripped = text.replace(" ", "")
        if stripped in ("", "()"):
            return cls.identity(degree)
        if _CYCLE_RE.sub("", stripped):
            raise InputError(f"unparsable cycle notation: {text!r}")
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for m in _CYCLE_RE.finditer(stripped):
            pts = [int(t) for t in m.group(1).split(",")]
            if any(not 1 <= p <= degree for p in pts):
                raise InputError(f"point out of range 1..{degree} in {text!r}")
            if len(set(pts)) != len(pts) or seen & set(pts):
                raise InputError(f"cycles not disjoint in {text!r}")
            seen.update(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def apply_set(self, points) -> frozenset:
        return frozenset(self.images[p - 1] for p in points)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a*b)(x) = a(b(x))
        a, b = self.images, other.images
        return Permutation(a[x - 1] for x in b)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        out = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.degree + 1) if self(p) == p)

    def order(self) -> int:
        from math import lcm

        return lcm(*(length for length, _ in cycle_type(self).counts))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


@dataclass(frozen=True)
class CycleType:
    """Multiset {cycle length -> multiplicity}, fixed points included as length 1."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "CycleType":
        return cls(tuple(sorted((l, m) for l, m in d.items() if m)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def degree(self) -> int:
        return sum(l * m for l, m in self.counts)

    def power(self, e: int) -> "CycleType":
        """Cycle type of x**e given the type of x."""
        from math import gcd

        out: dict[int, int] = {}
        for l, m in self.counts:
            g = gcd(l, e)
            out[l // g] = out.get(l // g, 0) + m * g
        return CycleType.from_dict(out)

    def __str__(self):
        return " ".join(f"{l}^{m}" for l, m in self.counts)


def cycle_type(x: Permutation) -> CycleType:
    """Exact cycle type of x, counting fixed points as 1-cycles."""
    lengths: dict[int, int] = {}
    seen: set[int] = set()
    for start in range(1, x.degree + 1):
        if start in seen:
            continue
        n, p = 1, x(start)
        seen.add(start)
        while p != start:
            seen.add(p)
            p = x(p)
            n += 1
        lengths[n] = lengths.get(n, 0) + 1
    return CycleType.from_dict(lengths)


def _orbit_transversal(beta: int, gens: list[Permutation], degree: int):
    """BFS orbit of beta with coset representatives u_p satisfying u_p(beta) = p."""
    transversal = {beta: Permutation.identity(degree)}
    frontier = [beta]
    while frontier:
        nxt = []
        for p in frontier:
            u = transversal[p]
            for g in gens:
                q = g(p)
                if q not in transversal:
                    transversal[q] = g * u
                    nxt.append(q)
        frontier = sorted(nxt)
    return transversal


class _Chain:
    """One level of a stabilizer chain; `child` stabilizes this level's base point."""

    __slots__ = ("degree", "hint", "beta", "gens", "transversal", "child")

    def __init__(self, degree: int, hint: tuple[int, ...]):
        self.degree = degree
        self.hint = hint
        self.beta: int | None = None
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}
        self.child: _Chain | None = None

    def _pick_beta(self, g: Permutation) -> int:
        # hint points are consumed unconditionally (redundant base points are
        # harmless and make stabilizer queries exact); otherwise take the
        # smallest point moved by g
        if self.hint:
            return self.hint[0]
        for b in range(1, self.degree + 1):
            if g(b) != b:
                return b
        raise AssertionError("identity reached _pick_beta")

    def add(self, g: Permutation) -> None:
        if g.is_identity():
            return
        if self.beta is None:
            self.beta = self._pick_beta(g)
            self.transversal = {self.beta: Permutation.identity(self.degree)}
            self.child = _Chain(self.degree, tuple(h for h in self.hint if h != self.beta))
        self.gens.append(g)
        self._close()

    def _close(self) -> None:
        # Rebuild the orbit, then push every Schreier generator into the child;
        # the recursion keeps each child chain complete for its own generators.
        self.transversal = _orbit_transversal(self.beta, self.gens, self.degree)
        for p in sorted(self.transversal):
            u = self.transversal[p]
            for s in self.gens:
                rep = self.transversal[s(p)]
                schreier = rep.inverse() * s * u
                residue = self.child.sift(schreier)
                if not residue.is_identity():
                    self.child.add(residue)

    def sift(self, x: Permutation) -> Permutation:
        node = self
        while node is not None and node.beta is not None:
            p = x(node.beta)
            u = node.transversal.get(p)
            if u is None:
                return x
            x = u.inverse() * x
            node = node.child
        return x

    def order(self) -> int:
        node, out = self, 1
        while node is not None and node.beta is not None:
            out *= len(node.transversal)
            node = node.child
        return out

    def base(self) -> list[int]:
        node, out = self, []
        while node is not None and node.beta is not None:
            out.append(node.beta)
            node = node.child
        return out

    def elements(self):
        """Iterate the whole group, deterministically, as transversal products."""
        if self.beta is None:
            yield Permutation.identity(self.degree)
            return
        for h in self.child.elements():
            for p in sorted(self.transversal):
                yield self.transversal[p] * h


class PermGroup:
    """Permutation group on {1..degree} given by generators.

    The stabilizer chain is computed once on demand, guarded by a lock;
    afterwards all queries are read-only.
    """

    def __init__(self, degree: int, generators):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise InputError(
                    f"generator degree {g.degree} does not match group degree {degree}")
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_identity())
        self._chain: _Chain | None = None
        self._lock = threading.Lock()

    @classmethod
    def from_cycles(cls, degree: int, cycle_strings) -> "PermGroup":
        return cls(degree, [Permutation.from_cycles(s, degree) for s in cycle_strings])

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [])

    def chain(self, base_prefix: tuple[int, ...] = ()) -> _Chain:
        if base_prefix:
            c = _Chain(self.degree, tuple(base_prefix))
            for g in self.generators:
                c.add(g)
            return c
        with self._lock:
            if self._chain is None:
                c = _Chain(self.degree, ())
                for g in self.generators:
                    c.add(g)
                self._chain = c
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def __contains__(self, x: Permutation) -> bool:
        if x.degree != self.degree:
            return False
        return self.chain().sift(x).is_identity()

    def elements(self):
        return self.chain().elements()

    def orbit(self, point: int) -> frozenset:
        orb = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = g(p)
                    if q not in orb:
                        orb.add(q)
                        nxt.append(q)
            frontier = nxt
        return frozenset(orb)

    def orbits(self, domain=None) -> list[tuple[int, ...]]:
        """Orbit partition of the domain, listed by least element."""
        if domain is None:
            domain = range(1, self.degree + 1)
        domain = set(domain)
        if any(not 1 <= p <= self.degree for p in domain):
            raise InputError(f"domain not contained in 1..{self.degree}")
        remaining = set(domain)
        out = []
        while remaining:
            p = min(remaining)
            orb = self.orbit(p) & domain
            out.append(tuple(sorted(orb)))
            remaining -= orb
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree if self.degree else True

    def stabilizer(self, alpha: int) -> "PermGroup":
        """The point stabilizer G_alpha, from a chain with base starting at alpha."""
        if not 1 <= alpha <= self.degree:
            raise InputError(f"point {alpha} out of range 1..{self.degree}")
        c = self.chain(base_prefix=(alpha,))
        if c.beta != alpha:
            # alpha fixed by every generator: the stabilizer is the whole group
            return PermGroup(self.degree, self.generators)
        return PermGroup(self.degree, _collect_gens(c.child))

    def is_semiregular(self, domain) -> bool:
        """True iff every point stabilizer on the domain is trivial."""
        domain = sorted(set(domain))
        pts = set(domain)
        for g in self.generators:
            if not all(g(p) in pts for p in domain):
                raise InputError("domain is not invariant under the group")
        n = self.order()
        seen: set[int] = set()
        for p in domain:
            if p in seen:
                continue
            orb = self.orbit(p)
            seen |= orb
            if len(orb) != n:
                return False
        return True

    def conjugate_class(self, x: Permutation) -> set[Permutation]:
        """All G-conjugates of x, by closure under conjugation by generators."""
        if x not in self:
            raise InputError("element is not in the group")
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in self.generators:
                    z = g * y * g.inverse()
                    if z not in cls:
                        if len(cls) >= CONJUGACY_ENUMERATION_CAP:
                            raise ScaleError("conjugacy class exceeds enumeration cap")
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        return cls

    def conjugacy_counts(self, x: Permutation, alpha: int) -> tuple[int, int]:
        """(u, u1): number of G-conjugates of x, and of those fixing alpha."""
        if not 1 <= alpha <= self.degree:
            raise InputError(f"point {alpha} out of range 1..{self.degree}")
        cls = self.conjugate_class(x)
        u1 = sum(1 for y in cls if y(alpha) == alpha)
        return len(cls), u1

    def minimal_block(self, alpha: int, beta: int) -> frozenset:
        """Smallest block of imprimitivity containing {alpha, beta} (union-find refinement)."""
        parent = list(range(self.degree + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[max(ra, rb)] = min(ra, rb)
            return True

        union(alpha, beta)
        queue = [(alpha, beta)]
        while queue:
            u, v = queue.pop()
            for g in self.generators:
                a, b = g(u), g(v)
                if union(a, b):
                    queue.append((a, b))
        root = find(alpha)
        return frozenset(p for p in range(1, self.degree + 1) if find(p) == root)

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system."""
        if not self.is_transitive():
            return False
        if self.degree == 1:
            return True
        for beta in range(2, self.degree + 1):
            if len(self.minimal_block(1, beta)) != self.degree:
                return False
        return True

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def _collect_gens(node: _Chain) -> list[Permutation]:
    out: list[Permutation] = []
    while node is not None and node.beta is not None:
        out.extend(node.gens)
        node = node.child
    # generators of deeper levels are elements of this level's group too
    return out


def closure(generators, degree: int, cap: int = 10**6) -> set[Permutation]:
    """Brute-force element closure; the oracle against chain orders at small degree."""
    gens = [g for g in generators if not g.is_identity()]
    els = {Permutation.identity(degree)}
    frontier = list(els)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = g * a
                if c not in els:
                    if len(els) >= cap:
                        raise ScaleError("closure exceeds cap")
                    els.add(c)
                    nxt.append(c)
        frontier = nxt
    return els


def group_order(group: PermGroup) -> int:
    """Exact group order via the stabilizer chain."""
    return group.order()


def orbits(group: PermGroup, domain=None) -> list[tuple[int, ...]]:
    return group.orbits(domain)


def stabilizer(group: PermGroup, alpha: int) -> PermGroup:
    return group.stabilizer(alpha)


def is_semiregular(group: PermGroup, domain) -> bool:
    return group.is_semiregular(domain)


def conjugacy_counts(group: PermGroup, x: Permutation, alpha: int) -> tuple[int, int]:
    return group.conjugacy_counts(x, alpha)


def group_to_json_dict(group: PermGroup) -> dict:
    return {
        "degree": group.degree,
        "generators": [g.cycle_string() for g in group.generators],
    }


def group_from_json_dict(data: dict) -> PermGroup:
    try:
        degree = int(data["degree"])
        gens = list(data["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group file: {exc}") from exc
    return PermGroup.from_cycles(degree, gens)
