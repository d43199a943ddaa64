"""Choosing which non-crossing matching each Kempe name stands for.

A binding is accepted when
  * each letter's matchings form one rotation orbit of the right size, with
    the index advancing along the rotation (same direction for all letters);
  * dC/dY3 = -X2 Y1 + Z4 Z8 holds as an identity of straightened tableau sums;
  * the normal-form cubic is skew under (1 2) and under the rotation.

Candidates are enumerated in a fixed order and the first one accepted wins,
so the result is deterministic.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterator

from eightpoints.errors import BindingNotFoundError
from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.m8.action import action_generators
from eightpoints.m8.cubic import build_cubic_explicit, is_skew
from eightpoints.m8.kempe import KEMPE_NAMES, KempeBasis, orbit_chain, rotation_orbits
from eightpoints.symrep.group_action import inverse, rotation
from eightpoints.tableaux.straighten import straighten

logger = logging.getLogger(__name__)


def candidate_bindings() -> Iterator[KempeBasis]:
    forward = rotation(8)
    orbits = rotation_orbits(forward)
    by_size = {len(o): o for o in orbits}
    if sorted(by_size) != [2, 4, 8] or len(orbits) != 3:
        raise BindingNotFoundError(f"unexpected rotation orbit sizes {[len(o) for o in orbits]}")
    for direction in (forward, inverse(forward)):
        for x1, y1, z1 in product(by_size[2], by_size[4], by_size[8]):
            matchings = orbit_chain(x1, direction, 2) + orbit_chain(y1, direction, 4) + orbit_chain(z1, direction, 8)
            for ex, ey, ez in product((1, -1), repeat=3):
                yield KempeBasis(matchings, (ex,) * 2 + (ey,) * 4 + (ez,) * 8)


def binomial_holds(basis: KempeBasis, cubic: SparsePolynomial) -> bool:
    """dC/dY3 realised as tableaux straightens to zero."""
    relation = cubic.derivative("Y3")
    return straighten(basis.realize(relation)).is_zero()


def is_consistent(basis: KempeBasis, cubic: SparsePolynomial) -> bool:
    if not binomial_holds(basis, cubic):
        return False
    return is_skew(cubic, action_generators(basis))


def bind_kempe_labels() -> KempeBasis:
    """The first binding under which the normal-form cubic is the skew cubic."""
    cubic = build_cubic_explicit()
    tried = 0
    for basis in candidate_bindings():
        tried += 1
        if is_consistent(basis, cubic):
            logger.info(f"Kempe binding selected after {tried} candidates")
            for name in KEMPE_NAMES:
                logger.debug(f"{name} -> {basis.matching(name)} (sign {basis.signs[basis.index(name)]})")
            return basis
    logger.critical(f"No Kempe binding among {tried} candidates makes the cubic skew")
    raise BindingNotFoundError(f"no consistent binding among {tried} candidates")
