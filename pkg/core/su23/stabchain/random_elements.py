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
"""Product replacement ("rattle") for approximately uniform random group elements.

Elements are carried as (g, g^-1) pairs so that no matrix is ever inverted.
"""
from random import Random
from typing import List, Tuple

from su23.algebra.linalg import Mat

Pair = Tuple[Mat, Mat]

EXTRA_SLOTS = 5
ACCUMULATORS = 5
SCRAMBLE_STEPS = 30
SCRAMBLE_FACTOR = 4


def pair_product(p: Pair, q: Pair) -> Pair:
    """p then q, i.e. (q p, p^-1 q^-1) in the left action on column vectors."""
    return q[0] * p[0], p[1] * q[1]


def pair_inverse(p: Pair) -> Pair:
    return p[1], p[0]


def identity_pair(g: Mat) -> Pair:
    identity = Mat.identity(g.ctx, g.n)
    return identity, identity


class RandomElements:

    def __init__(self, rng: Random):
        self.rng = rng
        self.reservoir: List[Pair] = []
        self.accumulators: List[Pair] = []
        self.accumulator = 0
        self.products = 0
        self._new_gens = False

    def add_gen(self, gen: Pair):
        if not self.reservoir:
            self.reservoir = [identity_pair(gen[0])] * EXTRA_SLOTS
            self.accumulators = [identity_pair(gen[0])] * ACCUMULATORS
        self.reservoir.append(gen)
        self._new_gens = True

    def sample(self) -> Pair:
        if self._new_gens:
            self._new_gens = False
            self.scramble()
        return self.stir()

    def _maybe_invert(self, p: Pair) -> Pair:
        return pair_inverse(p) if self.rng.randrange(2) else p

    def stir(self) -> Pair:
        i = self.rng.randrange(1, len(self.reservoir))
        j = self.rng.randrange(1, len(self.reservoir))

        c = pair_product(self.reservoir[0], self._maybe_invert(self.reservoir[i]))
        self.reservoir[0] = c
        d = pair_product(self.reservoir[j], self._maybe_invert(c))
        self.reservoir[j] = d

        self.accumulator = (self.accumulator + 1) % len(self.accumulators)
        r = pair_product(self.accumulators[self.accumulator], self._maybe_invert(d))
        self.accumulators[self.accumulator] = r
        self.products += 3
        return r

    def scramble(self):
        gen_count = len(self.reservoir) - EXTRA_SLOTS
        for _ in range(max(SCRAMBLE_STEPS, SCRAMBLE_FACTOR * gen_count)):
            self.stir()
