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
"""Published parameter data: minimal polynomials of good parameters and the word exponents used by the
prime-coverage certificates.

Polynomials are integer coefficient tuples from low to high degree; they are reduced modulo p on use.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from su23.gens.gen_case import GenCase, REGIME_CHAR_THREE, REGIME_N11, REGIME_N8, REGIME_NORM_THREE, \
    REGIME_SMALL_Q

Coefficients = Tuple[int, ...]


@dataclass(frozen=True)
class SmallQWords:
    """Parameter and word exponents j for the words (zeta^k y)^j y restricted to the last nine coordinates."""
    q: int
    minimal_polynomial: Optional[Coefficients]
    zeta_exponent: int
    exponents: Tuple[int, ...]

    def word_description(self) -> str:
        zeta = 'zeta' if self.zeta_exponent == 1 else f'zeta^{self.zeta_exponent}'
        return f'({zeta} y)^j y'

    def to_dict(self) -> dict:
        return {
            'q': self.q,
            'minimal_polynomial': format_coefficients(self.minimal_polynomial)
            if self.minimal_polynomial else None,
            'word': self.word_description(),
            'exponents': list(self.exponents)
        }


SMALL_Q_WORDS: Dict[int, SmallQWords] = {
    2: SmallQWords(2, None, 3, (1, 6, 8, 15, 33)),
    3: SmallQWords(3, (-1, -1, 1), 1, (3, 5, 6, 12, 23)),
    5: SmallQWords(5, (2, -1, 1), 1, (1, 3, 8, 23, 26)),
    7: SmallQWords(7, (3, 1, 1), 1, (1, 3, 4, 7, 12, 25)),
    8: SmallQWords(8, (1, 1, 0, 1, 1, 0, 1), 1, (3, 4, 5, 6, 9, 11)),
    11: SmallQWords(11, (2, 7, 1), 1, (5, 6, 7, 8, 18)),
}

# exponents j of the words [x,y](xy)^j, keyed by (n, q)
COMMUTATOR_WORD_EXPONENTS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (8, 2): (1, 2, 6, 8),
    (11, 2): (1, 2, 6, 7, 8, 30),
    (12, 2): (4, 6, 10, 20, 30, 46),
    (13, 2): (1, 6, 7, 8, 21, 39, 44),
    (17, 2): (2, 4, 6, 7, 13, 14, 17, 19, 44, 46),
    (8, 3): (1, 4, 5, 8),
    (9, 3): (1, 2, 4, 8, 15),
    (10, 3): (1, 2, 11, 13, 17, 21),
    (12, 3): (2, 4, 5, 6, 13, 29),
    (13, 3): (2, 3, 5, 6, 8, 11, 13),
    (14, 3): (1, 2, 4, 5, 23, 30, 32),
    (17, 3): (4, 10, 12, 15, 16, 18, 19, 24, 33, 40),
    (8, 5): (4, 10, 11, 13),
    (9, 5): (1, 2, 4, 8, 13),
    (10, 5): (2, 7, 10, 15, 16),
    (12, 5): (4, 7, 10, 13, 25, 27),
    (13, 5): (3, 6, 13, 14, 15, 20, 23),
    (14, 5): (2, 4, 5, 7, 14, 19, 23),
    (17, 5): (5, 9, 13, 25, 27, 28, 32, 33, 41),
    (8, 8): (1, 2, 4, 7, 34),
    (9, 8): (2, 5, 8, 10, 11),
    (10, 8): (1, 3, 5, 7, 13, 14, 17),
    (12, 8): (1, 2, 4, 9, 14, 15, 43),
    (13, 8): (2, 4, 6, 8, 11, 18, 26, 40),
    (14, 8): (1, 4, 5, 7, 16, 19, 34),
    (17, 8): (2, 5, 7, 9, 10, 12, 13, 18, 21, 41),
    (9, 7): (1, 2, 3, 4, 6, 11),
    (10, 7): (3, 4, 5, 18, 35),
    (12, 7): (1, 2, 7, 22, 26, 33),
    (13, 7): (3, 8, 9, 15, 17, 21, 25),
    (14, 7): (1, 4, 6, 9, 10, 26, 29, 35),
    (17, 7): (4, 6, 9, 11, 13, 14, 15, 18, 19, 31),
    (9, 11): (1, 3, 13, 16, 24),
    (10, 11): (2, 3, 7, 12, 13),
    (12, 11): (1, 6, 9, 16, 19, 69),
    (13, 11): (2, 7, 8, 11, 21, 22, 25, 41),
    (14, 11): (3, 4, 6, 15, 20, 30, 35, 37),
    (17, 11): (1, 4, 5, 6, 13, 14, 15, 21, 23),
}

# roots have norm 3 and generate GF(q^2) through their cube
NORM_THREE_POLYNOMIALS: Dict[int, Coefficients] = {
    4: (1, 1, 1, 1, 1),
    25: (-1, 1, 0, 2, 1),
    49: (2, 2, 0, 3, 1),
    121: (-2, -3, -1, -1, 1),
    125: (2, 1, 0, 0, 0, -1, 1),
}

# a = sqrt(-3), (1+sqrt(-11))/2, -3+sqrt(6) and (-5+sqrt(13))/2 for q = p
NORM_THREE_QUADRATICS: Dict[Coefficients, Tuple[int, ...]] = {
    (3, 0, 1): (17, 23, 29, 41, 47, 53, 59, 71, 83, 89, 101, 107, 113, 131, 137, 149),
    (3, -1, 1): (13, 43, 61, 73, 79, 109, 127, 139, 151),
    (3, 6, 1): (37, 103),
    (3, 5, 1): (19, 31, 67, 97),
}

CHAR_THREE_POLYNOMIALS: Dict[int, Coefficients] = {
    9: (-1, 1, 1, -1, 1),
}

N8_POLYNOMIALS: Dict[int, Coefficients] = {
    4: (1, 1, 1, 1, 1),
    9: (-1, 1, 1, -1, 1),
}

N11_POLYNOMIALS: Dict[int, Coefficients] = {
    3: (11, -1, 1),
    5: (11, -1, 1),
    4: (1, 1, 1, 1, 1),
    9: (1, 1, 1, 1, 1),
    7: (3, 1, 1),
    13: (3, 1, 1),
    17: (3, 1, 1),
    19: (3, 1, 1),
    29: (3, 1, 1),
    8: (1, 0, 0, 1, 0, 0, 1),
    11: (3, 5, 1),
    23: (3, 3, 1),
}


def format_coefficients(coefficients: Coefficients) -> str:
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = coefficients[degree]
        if c == 0:
            continue
        sign = '-' if c < 0 else '+'
        magnitude = abs(c)
        if degree == 0:
            body = str(magnitude)
        else:
            power = 't' if degree == 1 else f't^{degree}'
            body = power if magnitude == 1 else f'{magnitude}{power}'
        terms.append((sign, body))
    if not terms:
        return '0'
    text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
    for sign, body in terms[1:]:
        text += f' {sign} {body}'
    return text


def norm_three_polynomial(q: int) -> Optional[Coefficients]:
    if q in NORM_THREE_POLYNOMIALS:
        return NORM_THREE_POLYNOMIALS[q]
    for coefficients, primes in NORM_THREE_QUADRATICS.items():
        if q in primes:
            return coefficients
    return None


def hint_polynomial(case: GenCase) -> Optional[Coefficients]:
    """The published minimal polynomial of a good parameter for the case, if any."""
    regime = case.regime
    if regime == REGIME_SMALL_Q:
        return SMALL_Q_WORDS[case.q].minimal_polynomial
    if regime == REGIME_NORM_THREE:
        return norm_three_polynomial(case.q)
    if regime == REGIME_CHAR_THREE:
        return CHAR_THREE_POLYNOMIALS.get(case.q)
    if regime == REGIME_N8:
        return N8_POLYNOMIALS.get(case.q)
    if regime == REGIME_N11:
        return N11_POLYNOMIALS.get(case.q)
    return None


def commutator_word_exponents(n: int, q: int) -> Optional[Tuple[int, ...]]:
    return COMMUTATOR_WORD_EXPONENTS.get((n, q))


def tables_as_dict() -> dict:
    return {
        'small_q_words': [entry.to_dict() for entry in SMALL_Q_WORDS.values()],
        'commutator_word_exponents': [
            {'n': n, 'q': q, 'word': '[x,y](xy)^j', 'exponents': list(exponents)}
            for (n, q), exponents in sorted(COMMUTATOR_WORD_EXPONENTS.items(), key=lambda item: (item[0][1],
                                                                                              item[0][0]))
        ],
        'norm_three_polynomials': [
            {'q': q, 'minimal_polynomial': format_coefficients(c)} for q, c in NORM_THREE_POLYNOMIALS.items()
        ] + [
            {'q': q, 'minimal_polynomial': format_coefficients(c)}
            for c, primes in NORM_THREE_QUADRATICS.items() for q in primes
        ],
        'char_three_polynomials': [
            {'q': q, 'minimal_polynomial': format_coefficients(c)} for q, c in CHAR_THREE_POLYNOMIALS.items()
        ],
        'n8_polynomials': [
            {'q': q, 'minimal_polynomial': format_coefficients(c)} for q, c in N8_POLYNOMIALS.items()
        ],
        'n11_polynomials': [
            {'q': q, 'minimal_polynomial': format_coefficients(c)} for q, c in sorted(N11_POLYNOMIALS.items())
        ],
    }


def tables_as_csv_rows():
    """Rows (table, q, n, polynomial, word, exponents) for CSV export."""
    rows = []
    for entry in SMALL_Q_WORDS.values():
        rows.append(('small_q_words', entry.q, '', format_coefficients(entry.minimal_polynomial)
                     if entry.minimal_polynomial else '', entry.word_description(),
                     ' '.join(str(j) for j in entry.exponents)))
    for (n, q), exponents in sorted(COMMUTATOR_WORD_EXPONENTS.items(), key=lambda item: (item[0][1], item[0][0])):
        rows.append(('commutator_word_exponents', q, n, '', '[x,y](xy)^j', ' '.join(str(j) for j in exponents)))
    for name, section in (('norm_three_polynomials', 'norm_three_polynomials'),
                          ('char_three_polynomials', 'char_three_polynomials'),
                          ('n8_polynomials', 'n8_polynomials'),
                          ('n11_polynomials', 'n11_polynomials')):
        for item in tables_as_dict()[section]:
            rows.append((name, item['q'], '', item['minimal_polynomial'], '', ''))
    return rows
