"""Verifier and enumerator for generalised truncations.

A family F of independent sets is the base family of a generalised
truncation of M iff it is non-empty, closed under balanced finite exchange
inside the independent sets of M, no proper subset of a member spans a
member, and every nested independent pair (I, J) below a member can be
settled inside F.  `verify_family` checks those four conditions literally;
`verify_is_gen_truncation` checks the truncation definition itself
(independence containment plus forced augmentation), giving an independent
second route that the tests hold against the first.

Enumeration comes in two flavours: a level-structured fast path and a raw
2^|independents| sweep with no structural shortcuts, kept as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import FiniteMatroid, Verdict, check_base_axioms, exhaustive_bound
from .equivalence import find_comparable_pair, strongly_equivalent
from .errors import BoundError, FamilyError, TaskError
from .finitary import FinitaryMatroid
from .templates import TemplateSet

VERIFY_FAMILY_MAX_GROUND = 10
LEVEL_ENUM_MAX_GROUND = 10
RAW_ENUM_MAX_INDEP = 16

_SATISFIER_PATCH_CAP = 64


def _sorted_family(matroid: FiniteMatroid, family: Iterable[Iterable[int]]) -> list[frozenset]:
    fam = {matroid._subset(b, "family member") for b in family}
    return sorted(fam, key=lambda s: (len(s), tuple(sorted(s))))


def verify_family(matroid: FiniteMatroid, family: Iterable[Iterable[int]]) -> Verdict:
    """Check the four base-family conditions for a generalised truncation.

    Violations carry (condition tag, witness tuple) and replay: condition 2
    witnesses are (member, missing same-size independent), condition 3
    witnesses are (member, spanned member, proper subset), condition 4
    witnesses are the unsettled nested pair (I, J).
    """
    bound = exhaustive_bound(VERIFY_FAMILY_MAX_GROUND)
    if len(matroid.ground) > bound:
        raise BoundError(f"family verification limited to {bound} elements")
    fam = _sorted_family(matroid, family)

    if not fam:
        return Verdict.violation("1")
    for b in fam:
        if not matroid.is_independent(b):
            return Verdict.violation("1", b)

    indep = matroid.independent_sets()
    by_size: dict[int, list[frozenset]] = {}
    for s in indep:
        by_size.setdefault(len(s), []).append(s)
    fam_set = set(fam)

    # no proper subset of a member may span a member; spanning is monotone,
    # so checking the maximal proper subsets suffices
    fam_masks = [matroid.mask_of(b) for b in fam]
    for b in fam:
        for x in sorted(b):
            sub = b - {x}
            span = matroid.span_mask(matroid.mask_of(sub))
            for other, omask in zip(fam, fam_masks):
                if omask & ~span == 0:
                    return Verdict.violation("3", b, other, sub)

    # balanced finite exchange: for finite sets, |B-B'| = |B'-B| means equal size
    for b in fam:
        for other in by_size.get(len(b), ()):
            if other not in fam_set:
                return Verdict.violation("2", b, other)

    # nested-pair condition, exhaustive over independent I <= J
    has_super: dict[int, bool] = {}

    def member_contains(mask: int) -> bool:
        hit = has_super.get(mask)
        if hit is None:
            hit = any(mask & ~fm == 0 for fm in fam_masks)
            has_super[mask] = hit
        return hit

    for big in indep:
        jmask = matroid.mask_of(big)
        if any(fm | jmask == fm for fm in fam_masks):
            continue  # some member contains J, settling every I below it
        inside = [fm for fm in fam_masks if fm & ~jmask == 0]
        sub = jmask
        while True:
            if member_contains(sub) and not any(fm & sub == sub for fm in inside):
                return Verdict.violation("4", matroid.set_of(sub), big)
            if sub == 0:
                break
            sub = (sub - 1) & jmask
    return Verdict.passed()


def verify_is_gen_truncation(matroid: FiniteMatroid, candidate: FiniteMatroid) -> Verdict:
    """Check the generalised-truncation definition directly.

    (I) equal ground sets, (II) every candidate-independent set is matroid
    independent, (III) every non-base candidate-independent set absorbs any
    matroid-independent one-element extension.
    """
    if matroid.ground != candidate.ground:
        return Verdict.violation("I", matroid.ground, candidate.ground)
    for xs in candidate.independent_sets():
        if not matroid.is_independent(xs):
            return Verdict.violation("II", xs)
    cand_bases = candidate.bases_set()
    for xs in candidate.independent_sets():
        if xs in cand_bases:
            continue
        for e in sorted(matroid.ground - xs):
            grown = xs | {e}
            if matroid.is_independent(grown) and not candidate.is_independent(grown):
                return Verdict.violation("III", xs, e)
    return Verdict.passed()


def family_sort_key(family: frozenset):
    return tuple(sorted((len(b), tuple(sorted(b))) for b in family))


def enumerate_gen_truncations(matroid: FiniteMatroid) -> list[frozenset]:
    """All base families of generalised truncations, via the level structure.

    Balanced-exchange closure forces any candidate to be a union of complete
    size levels of the independent sets (equal finite differences mean equal
    size), so only those unions are generated; each survivor is re-validated
    by `verify_family` and by the literal base axioms.  `enumerate_raw` is
    the shortcut-free oracle this reduction is tested against.
    """
    bound = exhaustive_bound(LEVEL_ENUM_MAX_GROUND)
    if len(matroid.ground) > bound:
        raise BoundError(f"level enumeration limited to {bound} elements")
    r = matroid.full_rank
    levels: list[frozenset] = []
    for size in range(r + 1):
        levels.append(frozenset(s for s in matroid.independent_sets() if len(s) == size))
    found: list[frozenset] = []
    for mask in range(1, 1 << len(levels)):
        fam = frozenset().union(*(levels[i] for i in range(len(levels)) if mask >> i & 1))
        if verify_family(matroid, fam):
            found.append(fam)
    for fam in found:
        axioms = check_base_axioms(matroid.ground, fam)
        if not axioms:
            raise FamilyError(f"enumerated family fails base axioms: {axioms}")
    return sorted(found, key=family_sort_key)


def enumerate_raw(matroid: FiniteMatroid) -> list[frozenset]:
    """Brute-force oracle: every subset of the independent sets, no shortcuts."""
    indep = matroid.independent_sets()
    if len(indep) > RAW_ENUM_MAX_INDEP:
        raise BoundError(
            f"raw enumeration limited to {RAW_ENUM_MAX_INDEP} independent sets, got {len(indep)}"
        )
    found: list[frozenset] = []
    for mask in range(1 << len(indep)):
        fam = frozenset(indep[i] for i in range(len(indep)) if mask >> i & 1)
        if verify_family(matroid, fam):
            found.append(fam)
    return sorted(found, key=family_sort_key)


@dataclass(frozen=True)
class TruncationFamily:
    """Finite union of strong-equivalence classes, named by representatives."""

    representatives: tuple[TemplateSet, ...]

    @classmethod
    def build(cls, matroid: FinitaryMatroid, representatives: Iterable) -> "TruncationFamily":
        reps = sorted((matroid.require_independent(r) for r in representatives),
                      key=TemplateSet.sort_key)
        if not reps:
            raise FamilyError("a truncation family needs at least one representative")
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                if strongly_equivalent(matroid, a, b):
                    raise FamilyError(
                        f"representatives {a!r} and {b!r} name the same class"
                    )
        return cls(tuple(reps))

    def __iter__(self):
        return iter(self.representatives)


@dataclass(frozen=True)
class FinitaryFamilyVerdict:
    """Outcome of the task-relative family check on a countable schema."""

    verdict: Verdict
    unmet_tasks: tuple = ()

    @property
    def ok(self) -> bool:
        return self.verdict.ok and not self.unmet_tasks

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        if not self.verdict.ok:
            return str(self.verdict)
        return f"unmet tasks: {len(self.unmet_tasks)}"


def _normalize_task_pair(matroid: FinitaryMatroid, pair) -> tuple[TemplateSet, TemplateSet]:
    lower = matroid.require_independent(pair[0])
    upper = matroid.require_independent(pair[1])
    if not lower.issubset(upper):
        raise TaskError("task lower set must be contained in the upper set")
    return lower, upper


def _class_members_between(matroid, rep, lower, upper, fuel) -> TemplateSet | None:
    """Fueled search for a member of rep's class settling the pair (lower, upper)."""
    cap = min(max(fuel, 1), _SATISFIER_PATCH_CAP)
    if upper.issubset(rep):
        return rep
    if lower.issubset(rep) and rep.issubset(upper):
        return rep
    core = (rep & upper) | lower
    candidates = [core]
    pool_up = upper - core
    for j in range(1, cap + 1):
        if pool_up.is_infinite or len(pool_up.low) >= j:
            candidates.append(core | TemplateSet.from_finite(pool_up.first(j)))
    pool_down = core - lower
    for j in range(1, cap + 1):
        if pool_down.is_infinite or len(pool_down.low) >= j:
            candidates.append(core - TemplateSet.from_finite(pool_down.first(j)))
    pool_sup = rep - upper
    for j in range(0, cap + 1):
        if j == 0 or pool_sup.is_infinite or len(pool_sup.low) >= j:
            extra = TemplateSet.from_finite(pool_sup.first(j)) if j else TemplateSet.empty()
            candidates.append(upper | extra)
    for cand in candidates:
        if not matroid.certify(cand):
            continue
        between = lower.issubset(cand) and cand.issubset(upper)
        covers = upper.issubset(cand)
        if not (between or covers):
            continue
        if strongly_equivalent(matroid, cand, rep):
            return cand
    return None


def _class_triggered_by(matroid, rep, lower, fuel) -> bool:
    """Whether rep's class contains a superset of `lower` (fueled search)."""
    if lower.issubset(rep):
        return True
    cap = min(max(fuel, 1), _SATISFIER_PATCH_CAP)
    removable = rep - lower
    for j in range(cap + 1):
        if j and not (removable.is_infinite or len(removable.low) >= j):
            break
        drop = TemplateSet.from_finite(removable.first(j)) if j else TemplateSet.empty()
        cand = (rep - drop) | lower
        if matroid.certify(cand) and strongly_equivalent(matroid, cand, rep):
            return True
    return False


def verify_family_finitary(
    matroid: FinitaryMatroid,
    family: TruncationFamily,
    tasks: Sequence = (),
    fuel: int = 256,
) -> FinitaryFamilyVerdict:
    """Task-relative family check on a countable schema.

    Conditions 1-3 are checked on the representatives (non-emptiness and
    certified independence; pairwise non-equivalence; pairwise
    incomparability under almost-spanning, which is what rules out
    proper-subset spanning between distinct classes).  Condition 4 is checked
    only for the supplied task pairs, each decided by a fueled search for a
    class member settling the pair; this is an approximation by design, never
    a full verdict for an infinite matroid.
    """
    reps = list(family)
    if not reps:
        return FinitaryFamilyVerdict(Verdict.violation("1"))
    for rep in reps:
        if not matroid.certify(rep):
            return FinitaryFamilyVerdict(Verdict.violation("1", rep.directive()))
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if strongly_equivalent(matroid, a, b):
                return FinitaryFamilyVerdict(
                    Verdict.violation("2", a.directive(), b.directive())
                )
    pair = find_comparable_pair(matroid, reps)
    if pair is not None:
        return FinitaryFamilyVerdict(
            Verdict.violation("3", pair[0].directive(), pair[1].directive())
        )
    unmet = []
    for raw in tasks:
        lower, upper = _normalize_task_pair(matroid, raw)
        triggered = any(_class_triggered_by(matroid, rep, lower, fuel) for rep in reps)
        if not triggered:
            continue
        if not any(_class_members_between(matroid, rep, lower, upper, fuel) for rep in reps):
            unmet.append((lower, upper))
    return FinitaryFamilyVerdict(Verdict.passed(), tuple(unmet))
