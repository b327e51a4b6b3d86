"""Solver parameters and result containers."""

from __future__ import annotations

from dataclasses import dataclass

from .cost import CostProfile, check_c, cost_set
from .errors import InstanceTooSmall, InvalidParams

TIE_LOWEST_INDEX = "lowest-index"


@dataclass(frozen=True)
class SolveParams:
    c: int
    k: int
    tie_rule: str = TIE_LOWEST_INDEX

    def check(self, n: int) -> None:
        check_c(self.c)
        if self.tie_rule != TIE_LOWEST_INDEX:
            raise InvalidParams(f"unsupported tie rule {self.tie_rule!r}")
        if n < self.c + 1:
            raise InstanceTooSmall(f"n = {n} < c + 1 = {self.c + 1}")
        if not self.c + 1 <= self.k <= n:
            raise InvalidParams(f"k = {self.k} outside [c+1, n] = [{self.c + 1}, {n}]")


@dataclass(frozen=True)
class Solution:
    subset: tuple
    cost: float
    profile: CostProfile

    @property
    def c(self) -> int:
        return self.profile.c

    @property
    def k(self) -> int:
        return len(self.subset)

    @classmethod
    def evaluate(cls, instance, subset, c) -> Solution:
        profile = cost_set(instance, subset, c)
        return cls(profile.subset, profile.min_value, profile)


@dataclass(frozen=True)
class GreedyTrace:
    seed: tuple
    seed_cost: float
    steps: tuple  # ((added index, cost after adding), ...)
    final: Solution

    def costs(self) -> list:
        return [self.seed_cost] + [cost for _, cost in self.steps]
