"""Set and integer domains, and the mutable propagation state."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from graphs.graph import VertexSet


class DomainWipeout(Exception):
    """A domain became empty; the current search node has no solution."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class IntDomain:
    """Integer interval [min, max]."""

    min: int
    max: int

    def __post_init__(self):
        if self.min > self.max:
            raise DomainWipeout(f"empty interval [{self.min}, {self.max}]")

    def set_min(self, value: int) -> bool:
        if value <= self.min:
            return False
        if value > self.max:
            raise DomainWipeout(f"min {value} exceeds max {self.max}")
        self.min = value
        return True

    def set_max(self, value: int) -> bool:
        if value >= self.max:
            return False
        if value < self.min:
            raise DomainWipeout(f"max {value} below min {self.min}")
        self.max = value
        return True

    @property
    def is_fixed(self) -> bool:
        return self.min == self.max


@dataclass
class SetDomain:
    """Set variable bounded by lb (required) and ub (possible) plus a cardinality interval."""

    lb: VertexSet
    ub: VertexSet
    card_min: int = 0
    card_max: int = -1

    def __post_init__(self):
        if self.card_max < 0:
            self.card_max = len(self.ub)
        self._validate()

    @classmethod
    def universe(cls, n: int) -> SetDomain:
        return cls(VertexSet.empty(n), VertexSet.full(n))

    def _validate(self) -> None:
        if not self.lb <= self.ub:
            raise DomainWipeout("required vertex excluded")
        if self.card_min > self.card_max:
            raise DomainWipeout(f"cardinality [{self.card_min}, {self.card_max}] empty")
        if len(self.lb) > self.card_max:
            raise DomainWipeout(f"{len(self.lb)} required vertices exceed {self.card_max}")
        if len(self.ub) < self.card_min:
            raise DomainWipeout(f"{len(self.ub)} possible vertices below {self.card_min}")

    @property
    def undecided(self) -> VertexSet:
        return self.ub - self.lb

    @property
    def is_fixed(self) -> bool:
        return self.lb == self.ub

    def include(self, vertices: VertexSet) -> bool:
        """Add ``vertices`` to lb; True if lb grew."""
        grown = self.lb | vertices
        if grown == self.lb:
            return False
        self.lb = grown
        self._validate()
        return True

    def exclude(self, vertices: VertexSet) -> bool:
        """Remove ``vertices`` from ub; True if ub shrank."""
        shrunk = self.ub - vertices
        if shrunk == self.ub:
            return False
        self.ub = shrunk
        self._validate()
        return True

    def set_card_min(self, value: int) -> bool:
        if value <= self.card_min:
            return False
        self.card_min = value
        self._validate()
        return True

    def set_card_max(self, value: int) -> bool:
        if value >= self.card_max:
            return False
        self.card_max = value
        self._validate()
        return True


Snapshot = Tuple


@dataclass
class PropagationState:
    """S, K, per-block count intervals and the failure flag of one search."""

    s: SetDomain
    k: IntDomain
    block_counts: List[List[int]] = field(default_factory=list)
    failed: bool = False

    @classmethod
    def initial(cls, n: int) -> PropagationState:
        return cls(s=SetDomain.universe(n), k=IntDomain(0, n))

    def snapshot(self) -> Snapshot:
        s = self.s
        return (
            s.lb,
            s.ub,
            s.card_min,
            s.card_max,
            self.k.min,
            self.k.max,
            tuple(tuple(counts) for counts in self.block_counts),
            self.failed,
        )

    def restore(self, snapshot: Snapshot) -> None:
        (lb, ub, card_min, card_max, k_min, k_max, blocks, failed) = snapshot
        self.s.lb, self.s.ub = lb, ub
        self.s.card_min, self.s.card_max = card_min, card_max
        self.k.min, self.k.max = k_min, k_max
        self.block_counts = [list(counts) for counts in blocks]
        self.failed = failed

    def domains_snapshot(self) -> Tuple:
        """Only S and K, for change detection."""
        s = self.s
        return (s.lb.bits, s.ub.bits, s.card_min, s.card_max, self.k.min, self.k.max)
