# identify.py
"""End-to-end identifiability check of a Waring decomposition of a ternary form.

S0  rank of M_d (rows L_i^d) against r: a deficient rank means A is redundant.
S1  r <= 4+n, i.e. r <= (d+1)/2: identifiable without further work.
S2  Terracini test: q = 3r certifies identifiability, anything less is
    inconclusive. The method is one-sided and never claims the converse.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from exact_linalg import OpCounter
from forms import Instance
from hilbert import PointSet
from position import FamilyKind, FamilyObstruction, PositionReport, best_conic, best_line, \
    family_obstruction, position_report
from terracini import TerraciniReport, terracini_dimension
from validate import small_rank_limit, validate_instance, veronese_rank

logger = logging.getLogger(__name__)

NOTE_REDUNDANT = (
    "v_d(A) is linearly dependent: A is a redundant decomposition, so T has a "
    "decomposition with fewer than r terms"
)
NOTE_SMALL_RANK = "r <= (d+1)/2: identifiable by the small-rank criterion"
NOTE_UNDECIDED = (
    "Terracini space is deficient and no family obstruction was found: "
    "uniqueness is undecided"
)
NOTE_NO_DIAGNOSTICS = "Terracini space is deficient; run with diagnostics to look for a family obstruction"


class VerdictKind(Enum):
    RANK_DEFICIENT = "RankDeficient"
    IDENTIFIABLE_SMALL_RANK = "IdentifiableSmallRank"
    IDENTIFIABLE_TERRACINI = "IdentifiableTerracini"
    INCONCLUSIVE = "Inconclusive"

    @property
    def identifiable(self) -> bool:
        return self in (VerdictKind.IDENTIFIABLE_SMALL_RANK, VerdictKind.IDENTIFIABLE_TERRACINI)

    @property
    def exit_code(self) -> int:
        if self.identifiable:
            return 0
        if self is VerdictKind.INCONCLUSIVE:
            return 2
        return 3


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    r: int
    n: int
    rank_of_Md: int
    terracini: Optional[TerraciniReport] = None
    position: Optional[PositionReport] = None
    obstruction: Optional[FamilyObstruction] = None
    notes: Tuple[str, ...] = ()
    counter: OpCounter = field(default_factory=OpCounter, compare=False)

    @property
    def exit_code(self) -> int:
        return self.kind.exit_code

    def to_document(self):
        """Plain-data verdict; contains no timing so equal instances give equal documents"""
        return {
            "kind": self.kind.value,
            "r": self.r,
            "n": self.n,
            "degree": 8 + 2 * self.n,
            "rank_of_Md": self.rank_of_Md,
            "terracini": self.terracini.as_dict() if self.terracini else None,
            "position": self.position.as_dict() if self.position else None,
            "obstruction": self.obstruction.as_dict() if self.obstruction else None,
            "notes": list(self.notes),
            "multiplications": self.counter.multiplications,
        }


def _diagnose(inst: Instance, n: int) -> Tuple[PositionReport, FamilyObstruction]:
    points = PointSet(inst.points)
    line = best_line(points)
    conic = best_conic(points)
    return position_report(points, line, conic), family_obstruction(points, n, line, conic)


def identify(inst: Instance, diagnostics: bool = False) -> Verdict:
    n = validate_instance(inst)
    r = inst.r
    counter = OpCounter()

    # S0
    rank_md, rank_counter = veronese_rank(inst)
    counter.merge(rank_counter)
    position, obstruction = _diagnose(inst, n) if diagnostics else (None, None)
    if rank_md < r:
        logger.info(f"S0: rank(M_d) = {rank_md} < r = {r}")
        return Verdict(VerdictKind.RANK_DEFICIENT, r, n, rank_md, None, position, obstruction,
                       (NOTE_REDUNDANT,), counter)

    # S1
    if r <= small_rank_limit(n):
        logger.info(f"S1: r = {r} <= {small_rank_limit(n)}, identifiable")
        return Verdict(VerdictKind.IDENTIFIABLE_SMALL_RANK, r, n, rank_md, None, position, obstruction,
                       (NOTE_SMALL_RANK,), counter)

    # S2
    report = terracini_dimension(inst)
    counter.merge(report.counter)
    if report.full:
        kind = VerdictKind.IDENTIFIABLE_TERRACINI
        notes = (f"Terracini space has the expected dimension {report.expected}",)
    else:
        kind = VerdictKind.INCONCLUSIVE
        notes = [f"Terracini space has dimension {report.projective_dimension} < {report.expected}"]
        if obstruction is None:
            notes.append(NOTE_NO_DIAGNOSTICS)
        elif obstruction.kind is FamilyKind.NONE:
            notes.append(NOTE_UNDECIDED)
        else:
            notes.append(
                f"{obstruction.kind.value}: {len(obstruction.witness)} points reach the "
                f"threshold {obstruction.threshold}, so a positive-dimensional family of "
                f"decompositions exists"
            )
        notes = tuple(notes)
    logger.info(
        f"S2: q = {report.q} of {3 * r}, verdict {kind.value}, "
        f"{counter.multiplications} multiplications"
    )
    return Verdict(kind, r, n, rank_md, report, position, obstruction, notes, counter)
