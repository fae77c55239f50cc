"""
Scalar distributions for random coefficients, trend weights and agent counts.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from news_market.core.models import InvalidParameterError


class DistributionKind(str, Enum):
    EXPONENTIAL = 'exponential'
    DEGENERATE = 'degenerate'
    NORMAL = 'normal'
    POISSON = 'poisson'


_PARAMETER_COUNT = {
    DistributionKind.EXPONENTIAL: 1,
    DistributionKind.DEGENERATE: 1,
    DistributionKind.NORMAL: 2,
    DistributionKind.POISSON: 1,
}


@dataclass(frozen=True)
class Distribution:
    """
    A one- or two-parameter law written as ``kind:p1[:p2]``.

    ``loc`` is the mean for exponential, normal and poisson laws and the point
    value for degenerate laws; ``scale`` is the normal standard deviation.
    """
    kind: DistributionKind
    loc: float
    scale: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'kind', DistributionKind(self.kind))
        if not np.isfinite(self.loc) or not np.isfinite(self.scale):
            raise InvalidParameterError(self.kind.value, "parameters must be finite")
        if self.kind is DistributionKind.EXPONENTIAL and self.loc <= 0:
            raise InvalidParameterError(self.kind.value, f"mean must be positive, got {self.loc}")
        if self.kind is DistributionKind.POISSON and self.loc < 0:
            raise InvalidParameterError(self.kind.value, f"mean must be nonnegative, got {self.loc}")
        if self.kind is DistributionKind.NORMAL and self.scale < 0:
            raise InvalidParameterError(self.kind.value, f"sd must be nonnegative, got {self.scale}")

    @classmethod
    def exponential(cls, mean: float) -> 'Distribution':
        return cls(DistributionKind.EXPONENTIAL, float(mean))

    @classmethod
    def degenerate(cls, value: float) -> 'Distribution':
        return cls(DistributionKind.DEGENERATE, float(value))

    @classmethod
    def normal(cls, mean: float, sd: float) -> 'Distribution':
        return cls(DistributionKind.NORMAL, float(mean), float(sd))

    @classmethod
    def poisson(cls, mean: float) -> 'Distribution':
        return cls(DistributionKind.POISSON, float(mean))

    @classmethod
    def parse(cls, text: str) -> 'Distribution':
        """
        Parse the ``kind:p1[:p2]`` text form.

        Raises:
            ValueError: If the kind is unknown or the parameters do not parse
        """
        parts = [part.strip() for part in text.strip().split(':')]
        try:
            kind = DistributionKind(parts[0].lower())
        except ValueError:
            known = ', '.join(k.value for k in DistributionKind)
            raise ValueError(f"unknown distribution '{parts[0]}' (expected one of {known})")
        params = parts[1:]
        if len(params) != _PARAMETER_COUNT[kind]:
            raise ValueError(
                f"{kind.value} takes {_PARAMETER_COUNT[kind]} parameter(s), got {len(params)}"
            )
        values = [float(p) for p in params]
        return cls(kind, *values)

    def render(self) -> str:
        """Render the text form parsed by ``parse``."""
        if self.kind is DistributionKind.NORMAL:
            return f"{self.kind.value}:{self.loc!r}:{self.scale!r}"
        return f"{self.kind.value}:{self.loc!r}"

    @property
    def mean(self) -> float:
        return self.loc

    @property
    def is_nonnegative(self) -> bool:
        if self.kind is DistributionKind.NORMAL:
            return self.scale == 0 and self.loc >= 0
        return self.loc >= 0

    @property
    def is_integer_valued(self) -> bool:
        if self.kind is DistributionKind.POISSON:
            return True
        return self.kind is DistributionKind.DEGENERATE and float(self.loc).is_integer()

    def sample(self, rng: np.random.Generator,
               size: Optional[int] = None) -> Union[float, np.ndarray]:
        """Draw one value (size None) or an array of ``size`` values."""
        if self.kind is DistributionKind.EXPONENTIAL:
            return rng.exponential(self.loc, size)
        if self.kind is DistributionKind.NORMAL:
            return rng.normal(self.loc, self.scale, size)
        if self.kind is DistributionKind.POISSON:
            return rng.poisson(self.loc, size)
        if size is None:
            return self.loc
        return np.full(size, self.loc)

    def __str__(self) -> str:
        return self.render()


def require_nonnegative(field: str, dist: Distribution) -> Distribution:
    """Reject laws that can produce negative values."""
    if not isinstance(dist, Distribution):
        raise InvalidParameterError(field, "a distribution is required")
    if not dist.is_nonnegative or dist.kind is DistributionKind.NORMAL:
        raise InvalidParameterError(field, f"{dist} can produce negative values")
    return dist


def require_count(field: str, dist: Distribution) -> Distribution:
    """Accept only nonnegative integer-valued laws for agent counts."""
    require_nonnegative(field, dist)
    if not dist.is_integer_valued:
        raise InvalidParameterError(field, f"{dist} is not an integer-valued law")
    return dist
