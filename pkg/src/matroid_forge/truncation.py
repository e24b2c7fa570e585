"""Classical truncation operators on finite matroids.

Positive levels keep all independent sets of a fixed size as bases; negative
levels remove elements from bases.  For finite matroids these meet in the
middle, which the tests assert rather than assume: `cotruncate` is built
literally from the base list, not routed through `truncate_to`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import ExplicitMatroid, FiniteMatroid
from .errors import GroundError, SpecError


@dataclass(frozen=True)
class TruncationLevel:
    """A truncation level; value None denotes the trivial truncation (the matroid itself)."""

    value: int | None

    @property
    def is_trivial(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "trivial" if self.value is None else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "TruncationLevel":
        if text == "trivial":
            return cls(None)
        try:
            return cls(int(text))
        except ValueError as exc:
            raise SpecError(f"level must be an integer or 'trivial', got {text!r}") from exc

    def validate_for(self, matroid: FiniteMatroid) -> None:
        r = matroid.full_rank
        if self.value is None:
            return
        if self.value >= 0 and self.value > r:
            raise SpecError(f"level {self.value} exceeds rank {r}")
        if self.value < 0 and -self.value > r:
            raise SpecError(f"level {self.value} removes more than rank {r}")


def truncate_to(matroid: FiniteMatroid, size: int) -> FiniteMatroid:
    """Matroid whose bases are all independent sets of the given size."""
    if not 0 <= size <= matroid.full_rank:
        raise SpecError(f"truncation size {size} not in [0, {matroid.full_rank}]")
    bases = [
        frozenset(c)
        for c in combinations(sorted(matroid.ground), size)
        if matroid.is_independent(frozenset(c))
    ]
    # truncation of a matroid is a matroid, so the quarantine check is skipped
    return ExplicitMatroid(matroid.ground, bases, name=f"{matroid.name}~{size}", _checked=True)


def cotruncate(matroid: FiniteMatroid, steps: int) -> FiniteMatroid:
    """Matroid whose bases arise by deleting `steps` elements from a base.

    steps = 0 is refused: that is the trivial truncation, not an operator
    application.
    """
    if steps <= 0:
        raise SpecError("cotruncation steps must be positive; zero means the matroid itself")
    if steps > matroid.full_rank:
        raise SpecError(f"cannot remove {steps} elements from rank-{matroid.full_rank} bases")
    bases = {
        b - frozenset(drop)
        for b in matroid.bases()
        for drop in combinations(sorted(b), steps)
    }
    return ExplicitMatroid(matroid.ground, bases, name=f"{matroid.name}~-{steps}", _checked=True)


def apply_level(matroid: FiniteMatroid, level: TruncationLevel) -> FiniteMatroid:
    level.validate_for(matroid)
    if level.value is None:
        return matroid
    if level.value >= 0:
        return truncate_to(matroid, level.value)
    return cotruncate(matroid, -level.value)


def classify_truncation(matroid: FiniteMatroid, candidate: FiniteMatroid) -> TruncationLevel | None:
    """The unique level at which `candidate` is a truncation of `matroid`, if any.

    Full-rank matches report the trivial level.
    """
    if matroid.ground != candidate.ground:
        raise GroundError("classification requires a common ground set")
    target = candidate.bases_set()
    r = matroid.full_rank
    for size in range(r + 1):
        if truncate_to(matroid, size).bases_set() == target:
            return TruncationLevel(None if size == r else size)
    return None
