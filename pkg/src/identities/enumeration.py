"""
Constrained Tuple Enumeration
Weighted sums over (k, l) tuples with sum k_i l_i bounded, grouped by total weight
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

SignRule = Callable[[int, int], int]
KFilter = Callable[[int, int], bool]
Coupling = Callable[[Tuple[Tuple[int, ...], ...]], Fraction]


@dataclass(frozen=True)
class SlotBlock:
    """A group of (k, l) slots sharing one l-parity and sign rule.

    Inside a decreasing block k_1 > k_2 > ... >= 1. The k filter receives the slot
    index inside the block and the candidate k.
    """

    size: int
    l_parity: Optional[int] = None
    sign: Optional[SignRule] = None
    decreasing: bool = True
    k_filter: Optional[KFilter] = None

    @property
    def l_min(self) -> int:
        return 2 if self.l_parity == 0 else 1

    def allows(self, slot: int, k: int) -> bool:
        return self.k_filter is None or self.k_filter(slot, k)

    def series(self, k: int, limit: int) -> Dict[int, int]:
        """sum over admissible l of sign(k, l) t^(k l), up to t^limit."""
        out = {}
        l = self.l_min
        step = 1 if self.l_parity is None else 2
        while k * l <= limit:
            value = self.sign(k, l) if self.sign else 1
            if value:
                out[k * l] = value
            l += step
        return out


def _convolve(a: Dict[int, int], b: Dict[int, int], limit: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e <= limit:
                out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _separable(blocks: Sequence[SlotBlock], limit: int) -> List[Fraction]:
    total = {0: 1}
    for block in blocks:
        for slot in range(block.size):
            slot_series: Dict[int, int] = {}
            for k in range(1, limit // block.l_min + 1):
                if block.allows(slot, k):
                    for e, c in block.series(k, limit).items():
                        slot_series[e] = slot_series.get(e, 0) + c
            total = _convolve(total, slot_series, limit)
    return [Fraction(total.get(e, 0)) for e in range(limit + 1)]


def enumerate_weighted(blocks: Sequence[SlotBlock], coupling: Optional[Coupling],
                       limit: int) -> List[Fraction]:
    """Coefficients of t^0..t^limit in

        sum over k-tuples of coupling(k-tuples per block) * prod_slots sum_l sign(k, l) t^(k l)

    Args:
        blocks: slot blocks in order
        coupling: weight of a full k-assignment, given one tuple per block; None means 1
        limit: largest total weight kept

    Returns:
        List of Fractions indexed by total weight
    """
    if coupling is None and not any(b.decreasing and b.size > 1 for b in blocks):
        return _separable(blocks, limit)

    flat = [(index, slot) for index, block in enumerate(blocks) for slot in range(block.size)]
    tail = [0] * (len(flat) + 1)
    for p in range(len(flat) - 1, -1, -1):
        index, slot = flat[p]
        block = blocks[index]
        smallest = block.size - slot if block.decreasing else 1
        tail[p] = tail[p + 1] + smallest * block.l_min

    cache: Dict[Tuple[int, int], Dict[int, int]] = {}
    chosen: List[List[int]] = [[] for _ in blocks]
    by_denominator: Dict[int, List[int]] = {}
    leaves = 0

    def accumulate(partial: Dict[int, int]) -> None:
        nonlocal leaves
        leaves += 1
        weight = coupling(tuple(tuple(c) for c in chosen)) if coupling else 1
        if not weight:
            return
        weight = Fraction(weight)
        row = by_denominator.setdefault(weight.denominator, [0] * (limit + 1))
        for e, c in partial.items():
            row[e] += weight.numerator * c

    def walk(p: int, partial: Dict[int, int], used: int) -> None:
        if p == len(flat):
            accumulate(partial)
            return
        index, slot = flat[p]
        block = blocks[index]
        budget = limit - used - tail[p + 1]
        k_max = budget // block.l_min
        k_min = 1
        if block.decreasing:
            k_min = block.size - slot
            if slot > 0:
                k_max = min(k_max, chosen[index][-1] - 1)
        for k in range(k_min, k_max + 1):
            if not block.allows(slot, k):
                continue
            key = (index, k)
            if key not in cache:
                cache[key] = block.series(k, limit)
            extended = _convolve(partial, cache[key], limit)
            if not extended:
                continue
            chosen[index].append(k)
            walk(p + 1, extended, used + k * block.l_min)
            chosen[index].pop()

    walk(0, {0: 1}, 0)
    logger.debug(f"enumerate_weighted: {len(flat)} slots, {leaves} k-assignments up to weight {limit}")
    result = [Fraction(0)] * (limit + 1)
    for denominator, row in by_denominator.items():
        for e, value in enumerate(row):
            if value:
                result[e] += Fraction(value, denominator)
    return result


# Sign rules shared by the counting formulas

def sign_plus(k: int, l: int) -> int:
    """(-1)^((k-1)(l-1)): expansion of q^k / (1 + (-q)^k)."""
    return -1 if ((k - 1) * (l - 1)) % 2 else 1


def sign_minus(k: int, l: int) -> int:
    """(-1)^(k(l-1)): expansion of q^k / (1 - (-q)^k)."""
    return -1 if (k * (l - 1)) % 2 else 1


def sign_odd_l(k: int, l: int) -> int:
    """(-1)^((l-1)/2) for odd l."""
    return -1 if ((l - 1) // 2) % 2 else 1


def sign_even_l(k: int, l: int) -> int:
    """(-1)^(k + l/2) for even l."""
    return -1 if (k + l // 2) % 2 else 1


def sign_odd_k(k: int, l: int) -> int:
    """(-1)^((k-1)/2) for odd k."""
    return -1 if ((k - 1) // 2) % 2 else 1


def odd_k(slot: int, k: int) -> bool:
    return k % 2 == 1


def squared_differences(ks: Sequence[int]) -> int:
    value = 1
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            value *= (ks[i] ** 2 - ks[j] ** 2) ** 2
    return value
