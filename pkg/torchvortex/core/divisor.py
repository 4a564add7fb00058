# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from torchvortex.core.errors import ConfigurationError


@dataclass(frozen=True)
class VortexDivisor:
    """
    A finite multiset of vortex points ``z_k`` with positive integer multiplicities.

    Args:
        entries: ``(point, multiplicity)`` pairs with pairwise distinct points.
    """

    entries: Tuple[Tuple[complex, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for point, multiplicity in self.entries:
            if not isinstance(multiplicity, int) or multiplicity < 1:
                raise ConfigurationError(
                    f"Vortex at {point} has multiplicity {multiplicity}; expected a positive integer"
                )
            if point in seen:
                raise ConfigurationError(f"Vortex point {point} is repeated in the divisor")
            seen.add(point)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[complex, int]]) -> "VortexDivisor":
        return cls(tuple((complex(p), int(m)) for p, m in pairs))

    @property
    def degree(self) -> int:
        """Total multiplicity ``N``."""
        return sum(m for _, m in self.entries)

    @property
    def points(self) -> List[complex]:
        return [p for p, _ in self.entries]

    @property
    def multiplicities(self) -> List[int]:
        return [m for _, m in self.entries]

    def require_min_multiplicity(self, minimum: int) -> None:
        """
        Raises:
            ConfigurationError: if some multiplicity is below ``minimum``.
        """
        for point, multiplicity in self.entries:
            if multiplicity < minimum:
                raise ConfigurationError(
                    f"Vortex at {point} has multiplicity {multiplicity}; at least {minimum} is required",
                    {"point": str(point)},
                )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[complex, int]]:
        return iter(self.entries)
