"""
Access Structures — перебор всех 2^n коалиций

A_m^d = {𝓘 : #𝓘 = d, I(S; X_𝓘) = m}; минимальные / максимальные элементы
A_m по включению. MI монотонна и растёт не более чем на 1 за участника,
поэтому минимальность проверяется удалением одного элемента, а
максимальность — добавлением одного.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.core.domain import CoordinateSet, LeakageProfile, Provenance
from src.core.errors import InvalidParameterError
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.ramp.scheme import RampScheme, mutual_information_dual

logger = logging.getLogger(__name__)


def _coordinates(n: int, mask: int) -> CoordinateSet:
    return CoordinateSet.from_zero_based(n, (i for i in range(n) if mask >> i & 1))


def mutual_information_table(scheme: RampScheme, limits: SearchLimits | None = None) -> np.ndarray:
    """MI для каждой коалиции; индекс — bitmask (бит i ↔ участник i+1)."""
    limits = resolve_limits(limits)
    n = scheme.n
    ensure_within("max_access_length", n, limits.max_access_length, "enumeration is 2^n")
    table = np.array(
        [mutual_information_dual(scheme, _coordinates(n, mask)) for mask in range(1 << n)],
        dtype=np.int64,
    )
    logger.debug("mutual information table: n=%d, %d coalitions", n, table.size)
    return table


@dataclass(frozen=True)
class AccessStructure:
    """A_m^d и его минимальные / максимальные (в A_m) элементы."""

    m: int
    d: int
    sets: tuple[CoordinateSet, ...]
    minimal: tuple[CoordinateSet, ...]
    maximal: tuple[CoordinateSet, ...]


def access_structure(
    scheme: RampScheme,
    m: int,
    d: int,
    limits: SearchLimits | None = None,
    table: np.ndarray | None = None,
) -> AccessStructure:
    """
    A_m^d, A_m^{min,d}, A_m^{max,d}.

    Raises:
        InvalidParameterError: m вне [0, ℓ] или d вне [0, n]
        SearchLimitExceeded: n > max_access_length
    """
    n = scheme.n
    if not 0 <= m <= scheme.ell:
        raise InvalidParameterError(f"m={m} out of range [0, {scheme.ell}]")
    if not 0 <= d <= n:
        raise InvalidParameterError(f"d={d} out of range [0, {n}]")
    if table is None:
        table = mutual_information_table(scheme, limits)

    sets, minimal, maximal = [], [], []
    for mask in range(1 << n):
        if mask.bit_count() != d or table[mask] != m:
            continue
        coordinates = _coordinates(n, mask)
        sets.append(coordinates)
        members = [i for i in range(n) if mask >> i & 1]
        outsiders = [i for i in range(n) if not mask >> i & 1]
        if all(table[mask & ~(1 << i)] < m for i in members):
            minimal.append(coordinates)
        if all(table[mask | (1 << i)] > m for i in outsiders):
            maximal.append(coordinates)
    return AccessStructure(
        m=m, d=d, sets=tuple(sets), minimal=tuple(minimal), maximal=tuple(maximal)
    )


def profile_from_mutual_information(
    scheme: RampScheme, limits: SearchLimits | None = None, table: np.ndarray | None = None
) -> LeakageProfile:
    """
    t_m = min{#𝓘 : MI(𝓘) ≥ m} − 1,  r_m = max{#𝓘 : MI(𝓘) < m} + 1.
    """
    n, ell = scheme.n, scheme.ell
    if table is None:
        table = mutual_information_table(scheme, limits)
    sizes = np.array([mask.bit_count() for mask in range(1 << n)], dtype=np.int64)
    t = tuple(int(sizes[table >= m].min()) - 1 for m in range(1, ell + 1))
    r = tuple(int(sizes[table < m].max()) + 1 for m in range(1, ell + 1))
    return LeakageProfile(
        n=n,
        ell=ell,
        t=t,
        r=r,
        t_provenance=(Provenance.EXACT_ORACLE,) * ell,
        r_provenance=(Provenance.EXACT_ORACLE,) * ell,
    )
