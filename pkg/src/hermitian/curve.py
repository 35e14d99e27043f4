"""
Hermitian Curve — x^{q+1} = y^q + y над GF(q²)

q³ аффинных точек, H(Q) = ⟨q, q+1⟩, g = q(q−1)/2, c = q(q−1).
Функция f_λ = x^i y^j с λ = qi + (q+1)j, 0 ≤ j < q.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Ровно q³ решений N(x) = Tr(y), порядок точек лексикографический
   по (кодировка x, кодировка y)
2. Pole orders qi + (q+1)j, j < q, попарно различны
3. C(μ)^⊥ = C(n + c − 2 − μ) как row spaces
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache, partial
from math import isqrt
from typing import Any, Final

import galois
import numpy as np

from src.ag_bounds import OnePointCodeFamily, PoleOrderProfile
from src.codes.linear_code import LinearCode
from src.core.errors import InconsistentFamilyError, InvalidParameterError
from src.core.field import FiniteField, make_field, norm_trace_arrays
from src.core.limits import SearchLimits, resolve_limits
from src.fengrao.ordered_basis import OrderedBasis
from src.semigroup import NumericalSemigroup, make_semigroup

logger = logging.getLogger(__name__)


# =============================================================================
# CONSTANTS
# =============================================================================

# Поддерживаемые q (n = q³ ≤ 4096)
SUPPORTED_Q: Final[tuple[int, ...]] = (2, 3, 4, 5, 7, 8, 9, 16)


# =============================================================================
# POLE ORDERS
# =============================================================================


def decompose_pole_order(q: int, pole: int) -> tuple[int, int]:
    """
    λ = iq + j(q+1) с 0 ≤ j < q.

    Raises:
        InvalidParameterError: λ ∉ ⟨q, q+1⟩
    """
    j = pole % q
    i, remainder = divmod(pole - (q + 1) * j, q)
    if pole < 0 or i < 0 or remainder:
        raise InvalidParameterError(f"{pole} is not a pole order of <{q}, {q + 1}>")
    return i, j


def monomial_h_star(q: int) -> tuple[int, ...]:
    """{qi + (q+1)j : 0 ≤ i < q², 0 ≤ j < q} — экспоненты независимых мономов."""
    return tuple(sorted(q * i + (q + 1) * j for i in range(q * q) for j in range(q)))


def evaluate_monomial(field: FiniteField, q: int, xs: Any, ys: Any, pole: int) -> Any:
    """ev(x^i y^j) на точках (xs, ys), λ = qi + (q+1)j."""
    i, j = decompose_pole_order(q, pole)
    values = field.ones(len(xs))
    if i:
        values = values * xs**i
    if j:
        values = values * ys**j
    return values


# =============================================================================
# FAMILY
# =============================================================================


@dataclass(frozen=True, eq=False)
class HermitianFamily:
    """
    Hermitian codes C_𝓛(D, μQ) над GF(q²).

    Attributes:
        q: Параметр кривой (поле GF(q²))
        field: GF(q²)
        xs, ys: Координаты точек P₁..P_n
        codes: One-point семейство на этих точках
    """

    q: int
    field: FiniteField
    xs: Any
    ys: Any
    codes: OnePointCodeFamily

    @property
    def n(self) -> int:
        return self.q**3

    @property
    def genus(self) -> int:
        return self.q * (self.q - 1) // 2

    @property
    def conductor(self) -> int:
        return self.q * (self.q - 1)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.codes.semigroup

    @property
    def profile(self) -> PoleOrderProfile:
        return self.codes.profile

    @property
    def basis(self) -> OrderedBasis:
        return self.codes.basis

    @property
    def dual_offset(self) -> int:
        """n + c − 2: C(μ)^⊥ = C(n + c − 2 − μ)."""
        return self.n + self.conductor - 2

    def evaluate(self, pole: int) -> Any:
        return evaluate_monomial(self.field, self.q, self.xs, self.ys, pole)

    def code(self, mu: int) -> LinearCode:
        return self.codes.code(mu)

    @cached_property
    def rank_oracle_agrees(self) -> bool:
        """Совпадает ли H* rank oracle с мономиальным описанием."""
        return self.profile.h_star == monomial_h_star(self.q)


def hermitian_points(field: FiniteField) -> tuple[Any, Any]:
    """
    Решения N(x) = Tr(y) в лексикографическом порядке кодировок.

    Raises:
        InconsistentFamilyError: Число точек ≠ q³
    """
    elements = field.elements
    norms, traces = norm_trace_arrays(field, elements)
    mask = norms.view(np.ndarray)[:, None] == traces.view(np.ndarray)[None, :]
    x_index, y_index = np.nonzero(mask)
    q = isqrt(field.order)
    if len(x_index) != q**3:
        raise InconsistentFamilyError(f"found {len(x_index)} Hermitian points, expected {q**3}")
    return field(x_index), field(y_index)


@lru_cache(maxsize=None)
def build_hermitian(q: int, limits: SearchLimits | None = None) -> HermitianFamily:
    """
    Построить семейство Hermitian codes.

    H* вычисляется rank oracle при n ≤ max_rank_oracle_length; для больших
    n используется мономиальное описание.

    Raises:
        InvalidParameterError: q вне SUPPORTED_Q
    """
    if q not in SUPPORTED_Q:
        raise InvalidParameterError(f"q={q} not supported, choose one of {SUPPORTED_Q}")
    limits = resolve_limits(limits)
    primes, exponents = galois.factors(q)
    field = make_field(int(primes[0]), 2 * int(exponents[0]))
    xs, ys = hermitian_points(field)
    n = q**3

    h_star = None
    if n > limits.max_rank_oracle_length:
        logger.info("q=%d: n=%d beyond rank oracle cap, using monomial pole orders", q, n)
        h_star = monomial_h_star(q)

    codes = OnePointCodeFamily(
        field=field,
        n=n,
        semigroup=make_semigroup([q, q + 1]),
        evaluate=partial(evaluate_monomial, field, q, xs, ys),
        name=f"hermitian-q{q}",
        limits=limits,
        h_star=h_star,
    )
    return HermitianFamily(q=q, field=field, xs=xs, ys=ys, codes=codes)


def hermitian_code(family: HermitianFamily, mu: int) -> LinearCode:
    """C_𝓛(D, μQ); μ за пределами насыщения даёт всё пространство."""
    return family.code(mu)


def hermitian_basis(family: HermitianFamily) -> OrderedBasis:
    """ℬ = {ev(f_γ) : γ ∈ H*}."""
    return family.basis
