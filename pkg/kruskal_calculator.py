# kruskal_calculator.py
import logging
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Dict, List, Optional, Tuple

from errors import DimensionError, EmptyPointSet, InvalidPartition, LengthOutOfRange
from exact_linalg import Matrix, OpCounter, rank
from forms import Instance, basis_size, power_coefficients
from hilbert import PointSet
from validate import degree_parameter, max_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KruskalReport:
    d: int
    k: int
    bound: int
    subsets_tested: int
    witness: Optional[Tuple[int, ...]] = None
    counter: OpCounter = field(default_factory=OpCounter, compare=False)

    def meets(self, threshold: int) -> bool:
        return self.k >= threshold

    def as_dict(self):
        return {
            "d": self.d,
            "k": self.k,
            "bound": self.bound,
            "subsets_tested": self.subsets_tested,
            "witness": list(self.witness) if self.witness is not None else None,
            "multiplications": self.counter.multiplications,
        }


@dataclass(frozen=True)
class ReshapedKruskalDetails:
    partition: Tuple[int, int, int]
    r: int
    reports: Tuple[KruskalReport, KruskalReport, KruskalReport]

    @property
    def kruskal_sum(self) -> int:
        return sum(report.k for report in self.reports)

    @property
    def passed(self) -> bool:
        # r <= (k_a + k_b + k_c - 2) / 2, compared in integers
        return 2 * self.r <= self.kruskal_sum - 2

    def as_dict(self):
        return {
            "partition": list(self.partition),
            "r": self.r,
            "k": [report.k for report in self.reports],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Prop31Details:
    n: int
    r: int
    k2: KruskalReport
    k_n3: KruskalReport
    k2_condition: bool
    k_n3_condition: bool
    inequality: bool

    @property
    def identifiable(self) -> bool:
        # the reported inequality adds nothing once r >= 2
        return self.k2_condition and self.k_n3_condition

    @property
    def counter(self) -> OpCounter:
        return OpCounter().merge(self.k2.counter).merge(self.k_n3.counter)

    def as_dict(self):
        return {
            "n": self.n,
            "r": self.r,
            "k2": self.k2.as_dict(),
            "k_n3": self.k_n3.as_dict(),
            "k2_condition": self.k2_condition,
            "k_n3_condition": self.k_n3_condition,
            "inequality": self.inequality,
            "identifiable": self.identifiable,
        }


class KruskalCalculator:
    """Kruskal ranks of Veronese images and the reshaped Kruskal criterion"""

    def __init__(self, executor=None, batch_size: int = 256):
        self.executor = executor
        self.batch_size = batch_size

    def _subset_rank(self, rows, subset) -> Tuple[bool, OpCounter]:
        value, counter = rank(Matrix.from_rows([rows[i] for i in subset]))
        return value == len(subset), counter

    def first_dependent_subset(self, rows, size: int, counter: OpCounter) -> Tuple[Optional[Tuple[int, ...]], int]:
        """First dependent subset of the given size in lexicographic order, and how many were tested"""
        subsets = combinations(range(len(rows)), size)
        tested = 0
        if self.executor is None:
            for subset in subsets:
                independent, sub_counter = self._subset_rank(rows, subset)
                counter.merge(sub_counter)
                tested += 1
                if not independent:
                    return subset, tested
            return None, tested

        while True:
            batch = list(islice(subsets, self.batch_size))
            if not batch:
                return None, tested
            outcomes = list(self.executor.map(lambda s: self._subset_rank(rows, s), batch))
            # completion order is irrelevant: the first failure in enumeration order wins
            for subset, (independent, sub_counter) in zip(batch, outcomes):
                counter.merge(sub_counter)
                tested += 1
                if not independent:
                    return subset, tested

    def kruskal_rank_d(self, points: PointSet, d: int) -> KruskalReport:
        if len(points) == 0:
            raise EmptyPointSet("Kruskal rank of an empty set")
        if d < 1:
            raise DimensionError(f"Veronese degree must be at least 1, got {d}")
        rows = [power_coefficients(p.coords, d) for p in points]
        bound = min(len(points), basis_size(d))
        counter = OpCounter()
        tested = 0
        witness = None
        size = bound
        # all subsets of size s independent implies the same for every smaller size
        while size > 1:
            dependent, count = self.first_dependent_subset(rows, size, counter)
            tested += count
            logger.debug(f"k_{d}: size {size}, {count} subsets tested, dependent={dependent}")
            if dependent is None:
                break
            witness = dependent
            size -= 1
        report = KruskalReport(d, size, bound, tested, witness, counter)
        logger.debug(f"k_{d} = {size} (bound {bound}) for {len(points)} points")
        return report

    def kruskal_rank(self, points: PointSet) -> KruskalReport:
        return self.kruskal_rank_d(points, 1)

    def reshaped_kruskal_check(self, points: PointSet, d: int, partition,
                               cache: Optional[Dict[int, KruskalReport]] = None) -> Tuple[bool, ReshapedKruskalDetails]:
        partition = tuple(partition)
        if len(partition) != 3 or any(part < 1 for part in partition) or sum(partition) != d:
            raise InvalidPartition(f"{partition} is not a partition of {d} into three positive parts")
        cache = {} if cache is None else cache
        reports = []
        for part in partition:
            if part not in cache:
                cache[part] = self.kruskal_rank_d(points, part)
            reports.append(cache[part])
        details = ReshapedKruskalDetails(partition, len(points), tuple(reports))
        logger.debug(f"Reshaped Kruskal {partition}: k={[r.k for r in reports]}, passed={details.passed}")
        return details.passed, details

    def best_partition_check(self, points: PointSet, d: int) -> Tuple[bool, List[ReshapedKruskalDetails]]:
        """Try every partition a <= b <= c of d; stop at the first one that certifies"""
        cache: Dict[int, KruskalReport] = {}
        tried = []
        for a in range(1, d // 3 + 1):
            for b in range(a, (d - a) // 2 + 1):
                passed, details = self.reshaped_kruskal_check(points, d, (a, b, d - a - b), cache)
                tried.append(details)
                if passed:
                    return True, tried
        return False, tried

    def prop31_check(self, inst: Instance) -> Tuple[bool, Prop31Details]:
        """Partition d = (n+3) + (n+3) + 2 with k_2 = min(6, r) and k_{n+3} >= min(r, 3n+9)"""
        n = degree_parameter(inst.degree)
        r = inst.r
        if r > max_length(n):
            raise LengthOutOfRange(f"r = {r} exceeds 3n+11 = {max_length(n)}")
        points = PointSet(inst.points)
        k2 = self.kruskal_rank_d(points, 2)
        k_n3 = self.kruskal_rank_d(points, n + 3)
        details = Prop31Details(
            n=n,
            r=r,
            k2=k2,
            k_n3=k_n3,
            k2_condition=k2.k == min(6, r),
            k_n3_condition=k_n3.k >= min(r, 3 * n + 9),
            inequality=2 * r <= 2 * k_n3.k + k2.k - 2,
        )
        logger.info(
            f"Kruskal baseline n={n} r={r}: k_2={k2.k} k_{n + 3}={k_n3.k} "
            f"identifiable={details.identifiable} mults={details.counter.multiplications}"
        )
        return details.identifiable, details


def kruskal_rank(points: PointSet) -> KruskalReport:
    return KruskalCalculator().kruskal_rank(points)


def kruskal_rank_d(points: PointSet, d: int) -> KruskalReport:
    return KruskalCalculator().kruskal_rank_d(points, d)


def reshaped_kruskal_check(points: PointSet, d: int, partition) -> Tuple[bool, ReshapedKruskalDetails]:
    return KruskalCalculator().reshaped_kruskal_check(points, d, partition)


def best_partition_check(points: PointSet, d: int) -> Tuple[bool, List[ReshapedKruskalDetails]]:
    return KruskalCalculator().best_partition_check(points, d)


def prop31_check(inst: Instance) -> Tuple[bool, Prop31Details]:
    return KruskalCalculator().prop31_check(inst)
