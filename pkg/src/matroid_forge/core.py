"""Exact finite matroid kernel.

Backends: uniform, graphic, linear over GF(p), explicit base lists, plus
minors and rank-oracle wrappers.  All arithmetic is exact integer work;
exhaustive loops run over bitmask encodings of the (small) ground set.

An explicit base list is quarantined: the constructor refuses it unless the
literal base axioms hold, so every matroid object in the system can be
trusted to answer rank queries consistently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .errors import BoundError, DependenceError, GroundError, SpecError

# Declared exhaustive bounds.  MATROID_FORGE_MAX_GROUND may lower (never raise)
# them at runtime.
AXIOM_CHECK_MAX_GROUND = 12
ENUMERATION_MAX_GROUND = 12


def exhaustive_bound(default: int) -> int:
    raw = os.environ.get("MATROID_FORGE_MAX_GROUND")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise SpecError("MATROID_FORGE_MAX_GROUND must be an integer") from exc
    return min(default, value)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom or condition check; violations carry a replayable witness."""

    ok: bool
    tag: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def violation(cls, tag: str, *witness) -> "Verdict":
        return cls(False, tag, tuple(witness))

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        parts = ", ".join(fmt(w) for w in self.witness)
        return f"violation({self.tag}{'; ' + parts if parts else ''})"


def fmt(value) -> str:
    """Compact human-readable rendering for witnesses and reports."""
    if isinstance(value, frozenset):
        return "{" + ",".join(str(v) for v in sorted(value)) + "}"
    if isinstance(value, (set, tuple, list)):
        return "(" + ",".join(fmt(v) for v in value) + ")"
    return str(value)


class FiniteMatroid:
    """Finite matroid with an exact rank oracle.

    Subclasses implement `_rank_of`; everything else (independence, relative
    rank, span, minors, enumeration) is derived.  Instances are immutable
    after construction and every operation is a pure function of its inputs.
    """

    kind = "abstract"

    def __init__(self, ground: Iterable[int], name: str = "m"):
        g = frozenset(int(e) for e in ground)
        if any(e < 0 for e in g):
            raise SpecError("element ids are natural numbers")
        self.ground = g
        self.name = name
        self._order: tuple[int, ...] = tuple(sorted(g))
        self._pos = {e: i for i, e in enumerate(self._order)}
        self._rank_cache: dict[int, int] = {}
        self._span_cache: dict[int, int] = {}
        self._indep_cache: tuple[frozenset, ...] | None = None
        self._bases_cache: tuple[frozenset, ...] | None = None

    # -- backend hook ------------------------------------------------------

    def _rank_of(self, xs: frozenset) -> int:
        raise NotImplementedError

    # -- bitmask helpers -----------------------------------------------------

    def mask_of(self, xs: Iterable[int]) -> int:
        m = 0
        for e in xs:
            m |= 1 << self._pos[e]
        return m

    def set_of(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self._order) if mask >> i & 1)

    def rank_mask(self, mask: int) -> int:
        cached = self._rank_cache.get(mask)
        if cached is None:
            cached = self._rank_of(self.set_of(mask))
            self._rank_cache[mask] = cached
        return cached

    def span_mask(self, mask: int) -> int:
        """Bitmask of all elements spanned by the given set."""
        cached = self._span_cache.get(mask)
        if cached is None:
            r = self.rank_mask(mask)
            cached = 0
            for i in range(len(self._order)):
                bit = 1 << i
                if mask & bit or self.rank_mask(mask | bit) == r:
                    cached |= bit
            self._span_cache[mask] = cached
        return cached

    # -- validation ---------------------------------------------------------

    def _subset(self, xs: Iterable[int], what: str = "argument") -> frozenset:
        if type(xs) is frozenset:
            if xs <= self.ground:
                return xs
            raise GroundError(f"{what} {fmt(xs - self.ground)} lies outside the ground set")
        s = frozenset(int(e) for e in xs)
        if not s <= self.ground:
            raise GroundError(f"{what} {fmt(s - self.ground)} lies outside the ground set")
        return s

    # -- core queries ----------------------------------------------------------

    def rank(self, xs: Iterable[int]) -> int:
        return self.rank_mask(self.mask_of(self._subset(xs)))

    def is_independent(self, xs: Iterable[int]) -> bool:
        s = self._subset(xs)
        return self.rank_mask(self.mask_of(s)) == len(s)

    def relative_rank(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        """Rank of X over Y: the rank of X - Y once Y is contracted.

        Computed as r(X|Y) = r(X+Y) - r(Y); tests cross-check this against the
        contraction-minor route.
        """
        x = self.mask_of(self._subset(xs, "first argument"))
        y = self.mask_of(self._subset(ys, "second argument"))
        return self.rank_mask(x | y) - self.rank_mask(y)

    def spans(self, xs: Iterable[int], element: int) -> bool:
        s = self._subset(xs)
        e = self._subset([element], "element")
        return self.relative_rank(e, s) == 0

    def span_of(self, xs: Iterable[int]) -> frozenset:
        return self.set_of(self.span_mask(self.mask_of(self._subset(xs))))

    @property
    def full_rank(self) -> int:
        return self.rank_mask(self.mask_of(self.ground))

    # -- minors -------------------------------------------------------------

    def minor(self, deleted: Iterable[int] = (), contracted: Iterable[int] = ()) -> "FiniteMatroid":
        d = self._subset(deleted, "deleted set")
        c = self._subset(contracted, "contracted set")
        if d & c:
            raise GroundError(f"deleted and contracted sets overlap on {fmt(d & c)}")
        if not d and not c:
            return self
        return MinorMatroid(self, d, c)

    def delete(self, xs: Iterable[int]) -> "FiniteMatroid":
        return self.minor(deleted=xs)

    def contract(self, xs: Iterable[int]) -> "FiniteMatroid":
        return self.minor(contracted=xs)

    # -- enumeration ---------------------------------------------------------

    def independent_sets(self) -> tuple[frozenset, ...]:
        """All independent sets, sorted by (size, elements).  Bound-guarded."""
        if self._indep_cache is None:
            bound = exhaustive_bound(ENUMERATION_MAX_GROUND)
            if len(self.ground) > bound:
                raise BoundError(
                    f"independent-set enumeration limited to {bound} elements, got {len(self.ground)}"
                )
            found: list[frozenset] = []
            order = self._order

            def grow(current: frozenset, start: int) -> None:
                found.append(current)
                for i in range(start, len(order)):
                    nxt = current | {order[i]}
                    if self.is_independent(nxt):
                        grow(nxt, i + 1)

            grow(frozenset(), 0)
            found.sort(key=lambda s: (len(s), tuple(sorted(s))))
            self._indep_cache = tuple(found)
        return self._indep_cache

    def bases(self) -> tuple[frozenset, ...]:
        if self._bases_cache is None:
            r = self.full_rank
            out = [
                frozenset(c)
                for c in combinations(self._order, r)
                if self.is_independent(frozenset(c))
            ]
            out.sort(key=lambda s: tuple(sorted(s)))
            self._bases_cache = tuple(out)
        return self._bases_cache

    def bases_set(self) -> frozenset:
        return frozenset(self.bases())

    def same_matroid(self, other: "FiniteMatroid") -> bool:
        return self.ground == other.ground and self.bases_set() == other.bases_set()

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r} on {fmt(self.ground)}>"


class UniformMatroid(FiniteMatroid):
    kind = "uniform"

    def __init__(self, k: int, n: int, name: str | None = None):
        if not 0 <= k <= n:
            raise SpecError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        super().__init__(range(1, n + 1), name or f"u{k}{n}")
        self.k = k
        self.n = n

    def _rank_of(self, xs: frozenset) -> int:
        return min(self.k, len(xs))

    def is_independent(self, xs: Iterable[int]) -> bool:
        return len(self._subset(xs)) <= self.k


class GraphicMatroid(FiniteMatroid):
    """Cycle matroid of a multigraph; element i is the i-th edge (1-based)."""

    kind = "graphic"

    def __init__(self, edges: Iterable[tuple], name: str = "g"):
        edge_list = tuple((str(u), str(v)) for u, v in edges)
        super().__init__(range(1, len(edge_list) + 1), name)
        self.edges = edge_list

    def _rank_of(self, xs: frozenset) -> int:
        parent: dict[str, str] = {}

        def find(v: str) -> str:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        rank = 0
        for e in xs:
            u, v = self.edges[e - 1]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


class LinearMatroid(FiniteMatroid):
    """Column matroid of a matrix over GF(p); element j is column j (1-based)."""

    kind = "linear"

    def __init__(self, prime: int, rows: Iterable[Iterable[int]], name: str = "l"):
        if not _is_prime(prime):
            raise SpecError(f"{prime} is not prime")
        mat = tuple(tuple(int(v) % prime for v in row) for row in rows)
        if not mat or not mat[0]:
            raise SpecError("matrix must have at least one row and one column")
        width = len(mat[0])
        if any(len(row) != width for row in mat):
            raise SpecError("matrix rows must have equal length")
        super().__init__(range(1, width + 1), name)
        self.prime = prime
        self.rows = mat

    def _rank_of(self, xs: frozenset) -> int:
        cols = sorted(xs)
        if not cols:
            return 0
        p = self.prime
        # work on the transpose: one row per selected column
        work = [[self.rows[i][c - 1] for i in range(len(self.rows))] for c in cols]
        rank = 0
        width = len(self.rows)
        for col in range(width):
            pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            inv = pow(work[rank][col], p - 2, p)
            work[rank] = [v * inv % p for v in work[rank]]
            for r in range(len(work)):
                if r != rank and work[r][col]:
                    factor = work[r][col]
                    work[r] = [(a - factor * b) % p for a, b in zip(work[r], work[rank])]
            rank += 1
        return rank


class ExplicitMatroid(FiniteMatroid):
    """Matroid given by its base list.

    Quarantined: unless `_checked` is set by an internal caller that has
    already certified the family, construction runs the literal base-axiom
    check and refuses violators.
    """

    kind = "explicit"

    def __init__(self, ground: Iterable[int], bases: Iterable[Iterable[int]],
                 name: str = "m", _checked: bool = False):
        super().__init__(ground, name)
        fam = frozenset(self._subset(b, "base") for b in bases)
        if not fam:
            raise SpecError("an explicit matroid needs at least one base")
        if not _checked:
            verdict = check_base_axioms(self.ground, fam)
            if not verdict:
                raise SpecError(f"base family rejected: {verdict}")
        self._bases = fam

    def _rank_of(self, xs: frozenset) -> int:
        return max(len(xs & b) for b in self._bases)

    def is_independent(self, xs: Iterable[int]) -> bool:
        s = self._subset(xs)
        return any(s <= b for b in self._bases)

    def bases(self) -> tuple[frozenset, ...]:
        if self._bases_cache is None:
            self._bases_cache = tuple(sorted(self._bases, key=lambda s: tuple(sorted(s))))
        return self._bases_cache


class MinorMatroid(FiniteMatroid):
    kind = "minor"

    def __init__(self, parent: FiniteMatroid, deleted: frozenset, contracted: frozenset):
        super().__init__(parent.ground - deleted - contracted,
                         f"{parent.name}/{fmt(contracted)}\\{fmt(deleted)}")
        self.parent = parent
        self.contracted = contracted
        self._base_rank = parent.rank(contracted)

    def _rank_of(self, xs: frozenset) -> int:
        return self.parent.rank(xs | self.contracted) - self._base_rank


class OracleMatroid(FiniteMatroid):
    """Matroid backed by an arbitrary exact rank function (trusted caller)."""

    kind = "oracle"

    def __init__(self, ground: Iterable[int], rank_fn: Callable[[frozenset], int], name: str = "o"):
        super().__init__(ground, name)
        self._fn = rank_fn

    def _rank_of(self, xs: frozenset) -> int:
        return self._fn(xs)


def check_base_axioms(ground: Iterable[int], family: Iterable[Iterable[int]]) -> Verdict:
    """Literal check of the base axioms for a finite set family.

    Verifies non-emptiness, the pairwise exchange axiom, and — for every
    subset X of the ground set — that the maximal traces {X & B} are cofinal
    among all traces.  On a finite ground the trace condition cannot fail,
    but the contract is to check it as written.  Violations carry a witness
    that replays the failure.
    """
    g = frozenset(int(e) for e in ground)
    bound = exhaustive_bound(AXIOM_CHECK_MAX_GROUND)
    if len(g) > bound:
        raise BoundError(f"axiom check limited to {bound} elements, got {len(g)}")
    fam = sorted(
        (frozenset(int(e) for e in b) for b in family),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    for b in fam:
        if not b <= g:
            raise GroundError(f"family member {fmt(b)} lies outside the ground set")
    if not fam:
        return Verdict.violation("B1")
    fset = set(fam)
    for b0 in fam:
        for b1 in fam:
            only_b1 = sorted(b1 - b0)
            for x in sorted(b0 - b1):
                if not any((b0 - {x}) | {y} in fset for y in only_b1):
                    return Verdict.violation("B2", b0, b1, x)
    order = sorted(g)
    for mask in range(1 << len(order)):
        x = frozenset(e for i, e in enumerate(order) if mask >> i & 1)
        traces = {x & b for b in fam}
        maximal = [t for t in traces if not any(t < s for s in traces)]
        for t in traces:
            if not any(t <= s for s in maximal):
                return Verdict.violation("BM", x, t)
    return Verdict.passed()


def max_independent_extension(matroid: FiniteMatroid, independent: Iterable[int],
                              within: Iterable[int]) -> frozenset:
    """Greedy maximal independent superset of `independent` inside `within`.

    Ties break by ascending element id, so the result is deterministic.
    """
    seed = matroid._subset(independent, "seed")
    target = matroid._subset(within, "target")
    if not seed <= target:
        raise GroundError("seed must lie inside the target set")
    if not matroid.is_independent(seed):
        raise DependenceError(f"seed {fmt(seed)} is dependent")
    current = set(seed)
    for e in sorted(target - seed):
        if matroid.is_independent(current | {e}):
            current.add(e)
    return frozenset(current)
