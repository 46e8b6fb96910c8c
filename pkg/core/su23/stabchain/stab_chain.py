#  Copyright 2026 su23 contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
"""Randomized Schreier-Sims for matrix groups acting on projective points.

A point is a nonzero vector scaled so that its first nonzero entry is 1. The pointwise stabilizer of the
whole base acts trivially on points, so it consists of scalar matrices. Those are tracked separately as a
cyclic subgroup of the field's multiplicative group, and the claimed order is the product of the orbit
lengths times the order of that scalar subgroup.
"""
import logging
import time
from collections import deque
from dataclasses import dataclass, field
from math import lcm
from random import Random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from su23.algebra.linalg import Mat, add_vectors, normalize_projective, unit_vector
from su23.common.config_helper import ConfigHelper
from su23.exceptions.exceptions import DimensionMismatch
from su23.stabchain.random_elements import Pair, RandomElements, identity_pair, pair_inverse, pair_product

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]

STATUS_CONFIRMED = 'CONFIRMED'
STATUS_UNCONFIRMED = 'UNCONFIRMED'

REASON_MISMATCH = 'mismatch'
REASON_STATIONARY = 'stationary'
REASON_BUDGET = 'budget'
REASON_TOO_LARGE = 'too_large'

VERIFY_SAMPLES = 64
STATIONARY_ROUNDS = 64


class OrbitTooLarge(Exception):

    def __init__(self, size: int, ceiling: int):
        super(OrbitTooLarge, self).__init__(f'Orbit exceeds {ceiling} points (reached {size})')
        self.size = size
        self.ceiling = ceiling


class StabLevel:
    """One level of the chain: a base point, the generators added here and a Schreier tree.

    The tree maps each orbit point to (generator index, polarity). Applying that side of the pair moves the
    point one step closer to the base point.
    """

    def __init__(self, chain: 'StabChain'):
        self.chain = chain
        self.basepoint: Optional[Point] = None
        self.gens: List[Pair] = []
        self.tree: Dict[Point, Optional[Tuple[int, int]]] = {}
        self.tree_gens: List[Pair] = []
        self.points: List[Point] = []
        self.stab: Optional[StabLevel] = None

    def generators(self) -> List[Pair]:
        below = self.stab.generators() if self.stab is not None else []
        return below + self.gens

    def orbit_length(self) -> int:
        return len(self.tree)

    def rebuild_tree(self):
        self.tree_gens = self.generators()
        self.tree = self.chain.schreier_tree(self.basepoint, self.tree_gens)
        self.points = list(self.tree)

    def move_to_basepoint(self, point: Point, p: Pair) -> Pair:
        while point != self.basepoint:
            index, polarity = self.tree[point]
            edge = self.tree_gens[index]
            if polarity:
                edge = pair_inverse(edge)
            point = self.chain.act(edge[0], point)
            p = pair_product(p, edge)
        return p

    def sift(self, p: Pair) -> Tuple[Pair, bool]:
        """Returns the residue and whether it passed every level."""
        level = self
        while level.basepoint is not None:
            image = self.chain.act(p[0], level.basepoint)
            if image not in level.tree:
                return p, False
            p = level.move_to_basepoint(image, p)
            level = level.stab
        return p, True

    def add_nonmember_gen(self, gen: Pair):
        if self.basepoint is None:
            self.basepoint = self.chain.choose_basepoint(gen[0])
            self.stab = StabLevel(self.chain)
            logger.debug(f'New base point {self.basepoint}')
        if self.chain.act(gen[0], self.basepoint) == self.basepoint:
            self.stab.add_nonmember_gen(gen)
        else:
            self.gens.append(gen)
        self.rebuild_tree()

    def levels(self) -> Iterator['StabLevel']:
        level = self
        while level is not None and level.basepoint is not None:
            yield level
            level = level.stab


class StabChain:

    def __init__(self, gens: Sequence[Mat], orbit_ceiling: int, rng: Random):
        if not gens:
            raise DimensionMismatch('A stabilizer chain needs at least one generator')
        self.ctx = gens[0].ctx
        self.n = gens[0].n
        for g in gens:
            if g.ctx is not self.ctx or g.n != self.n:
                raise DimensionMismatch('Generators must share field and degree')
        self.orbit_ceiling = orbit_ceiling
        self.rng = rng
        self.random_elements = RandomElements(rng)
        self.top = StabLevel(self)
        self.scalar_order = 1
        self.input_gens: List[Pair] = [(g, g.inverse()) for g in gens]
        self._candidates = self._basepoint_candidates()

    def act(self, g: Mat, point: Point) -> Point:
        return normalize_projective(self.ctx, g.apply(point))

    def schreier_tree(self, basepoint: Point, gens: Sequence[Pair]) -> Dict[Point, Optional[Tuple[int, int]]]:
        tree = {basepoint: None}
        queue = deque([basepoint])
        while queue:
            point = queue.popleft()
            for index, gen in enumerate(gens):
                for polarity in (0, 1):
                    image = self.act(gen[polarity], point)
                    if image not in tree:
                        tree[image] = (index, 1 - polarity)
                        queue.append(image)
            if len(tree) > self.orbit_ceiling:
                raise OrbitTooLarge(len(tree), self.orbit_ceiling)
        return tree

    def _basepoint_candidates(self) -> List[Point]:
        units = [tuple(unit_vector(self.n, i)) for i in range(self.n)]
        sums = [tuple(add_vectors(self.ctx, units[i], units[j]))
                for i in range(self.n) for j in range(i + 1, self.n)]
        return units + sums

    def choose_basepoint(self, g: Mat) -> Point:
        # a matrix fixing every e_i and every e_i + e_j projectively is scalar
        for candidate in self._candidates:
            if self.act(g, candidate) != candidate:
                return candidate
        raise DimensionMismatch('Scalar matrix reached the base point selection')

    def first_basepoint(self) -> Optional[Point]:
        """The unit vector with the largest orbit under the input generators, the first one on ties."""
        moving = [gen for gen in self.input_gens if not gen[0].is_scalar()]
        if not moving:
            return None
        best, best_length = None, 0
        for candidate in self._candidates[:self.n]:
            length = len(self.schreier_tree(candidate, moving))
            if length > best_length:
                best, best_length = candidate, length
        return best

    @property
    def base(self) -> List[Point]:
        return [level.basepoint for level in self.top.levels()]

    @property
    def orbit_lengths(self) -> List[int]:
        return [level.orbit_length() for level in self.top.levels()]

    @property
    def strong_generators(self) -> List[Pair]:
        return self.top.generators()

    @property
    def claimed_order(self) -> int:
        order = self.scalar_order
        for length in self.orbit_lengths:
            order *= length
        return order

    def absorb(self, level: StabLevel, p: Pair) -> bool:
        """Sifts p below level; returns True when the chain grew."""
        residue, complete = level.sift(p)
        if complete and residue[0].is_scalar():
            scalar = residue[0].rows[0][0] if self.n else 1
            order = self.ctx.multiplicative_order(scalar)
            if self.scalar_order % order == 0:
                return False
            self.scalar_order = lcm(self.scalar_order, order)
            return True
        level.add_nonmember_gen(residue)
        return True

    def add_generators(self):
        basepoint = self.first_basepoint()
        if basepoint is not None:
            self.top.basepoint = basepoint
            self.top.stab = StabLevel(self)
            self.top.rebuild_tree()
        for gen in self.input_gens:
            self.random_elements.add_gen(gen)
            self.absorb(self.top, gen)

    def monte_carlo_round(self) -> bool:
        return self.absorb(self.top, self.random_elements.sample())

    def random_schreier_generator(self) -> Tuple[StabLevel, Pair]:
        levels = list(self.top.levels())
        level = self.rng.choice(levels)
        point = self.rng.choice(level.points)
        gen = self.rng.choice(level.tree_gens)
        if self.rng.randrange(2):
            gen = pair_inverse(gen)
        to_base = level.move_to_basepoint(point, identity_pair(gen[0]))
        schreier = pair_product(pair_inverse(to_base), gen)
        schreier = level.move_to_basepoint(self.act(schreier[0], level.basepoint), schreier)
        return level, schreier

    def verify(self, samples: int = VERIFY_SAMPLES) -> bool:
        """Sifts random Schreier generators; any that fails is added and False is returned."""
        if self.top.basepoint is None:
            return True
        for _ in range(samples):
            level, schreier = self.random_schreier_generator()
            if self.absorb(level.stab, schreier):
                logger.debug('Verification sift found a new strong generator')
                return False
        return True


@dataclass
class CertifyResult:
    status: str
    expected: int
    claimed_order: int
    reason: Optional[str] = None
    detail: Optional[str] = None
    base_length: int = 0
    orbit_lengths: List[int] = field(default_factory=list)
    scalar_order: int = 1
    rounds: int = 0
    elapsed: float = 0.0

    def is_confirmed(self) -> bool:
        return self.status == STATUS_CONFIRMED

    def to_dict(self) -> dict:
        return {
            'status': self.status,
            'reason': self.reason,
            'detail': self.detail,
            'expected': str(self.expected),
            'claimedOrder': str(self.claimed_order),
            'baseLength': self.base_length,
            'orbitLengths': self.orbit_lengths,
            'scalarOrder': self.scalar_order,
            'rounds': self.rounds,
            'elapsed': round(self.elapsed, 3),
        }


def certify_order(gens: Sequence[Mat],
                  expected: int,
                  budget_seconds: Optional[float] = None,
                  seed: Optional[int] = None,
                  orbit_ceiling: Optional[int] = None) -> CertifyResult:
    config = ConfigHelper.get_instance()
    budget_seconds = config.budget_seconds if budget_seconds is None else budget_seconds
    seed = config.seed if seed is None else seed
    orbit_ceiling = config.orbit_ceiling if orbit_ceiling is None else orbit_ceiling

    start = time.monotonic()
    chain = StabChain(gens, orbit_ceiling, Random(seed))
    rounds = 0

    def result(status: str, reason: Optional[str] = None, detail: Optional[str] = None) -> CertifyResult:
        return CertifyResult(status=status,
                             expected=expected,
                             claimed_order=chain.claimed_order,
                             reason=reason,
                             detail=detail,
                             base_length=len(chain.base),
                             orbit_lengths=chain.orbit_lengths,
                             scalar_order=chain.scalar_order,
                             rounds=rounds,
                             elapsed=time.monotonic() - start)

    try:
        chain.add_generators()
        stationary = 0
        while True:
            claimed = chain.claimed_order
            if claimed > expected:
                return result(STATUS_UNCONFIRMED, REASON_MISMATCH,
                              f'claimed order {claimed} exceeds expected {expected}')
            if claimed == expected and chain.verify():
                logger.info(f'Order {expected} confirmed after {rounds} rounds')
                return result(STATUS_CONFIRMED)
            if time.monotonic() - start > budget_seconds:
                return result(STATUS_UNCONFIRMED, REASON_BUDGET,
                              f'budget of {budget_seconds}s exhausted at claimed order {chain.claimed_order}')
            if stationary >= STATIONARY_ROUNDS:
                return result(STATUS_UNCONFIRMED, REASON_STATIONARY,
                              f'claimed order {claimed} unchanged for {stationary} rounds, expected {expected}')
            rounds += 1
            stationary = 0 if chain.monte_carlo_round() else stationary + 1
    except OrbitTooLarge as e:
        logger.warning(str(e))
        return result(STATUS_UNCONFIRMED, REASON_TOO_LARGE, str(e))
