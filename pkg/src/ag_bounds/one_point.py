"""
One-Point Codes — H*(Q), профиль pole orders и семейство C_𝓛(D, μQ)

H*(Q) = {μ ∈ H(Q) : C_𝓛(D, μQ) ≠ C_𝓛(D, (μ−1)Q)} = {γ₁ < ⋯ < γₙ}.
Вычисляется rank oracle: ev(f_λ) для λ ∈ H(Q) по возрастанию, λ записывается,
когда ранг растёт; остановка на ранге n.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. |H*| = n, H* ⊆ H(Q), строго возрастает
2. dim C(μ) = #{γ ∈ H* : γ ≤ μ}
3. Divisor-closedness: δ ∈ H*, α + β = δ, α, β ∈ H(Q) ⇒ α, β ∈ H*
4. Профиль можно подставить готовым (fixture): validate() доступен, но не
   вызывается автоматически
"""

import logging
from bisect import bisect_right
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from src.codes.linear_code import LinearCode, zero_code
from src.core.errors import InconsistentFamilyError, InvalidParameterError
from src.core.field import FiniteField
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.core.math.gf_linalg import stack
from src.fengrao.ordered_basis import OrderedBasis
from src.semigroup import NumericalSemigroup

logger = logging.getLogger(__name__)


# =============================================================================
# POLE ORDER PROFILE
# =============================================================================


@dataclass(frozen=True)
class PoleOrderProfile:
    """
    Целочисленные данные one-point семейства: n, H(Q), H*(Q).

    Все границы модуля зависят только от профиля, не от поля.
    """

    n: int
    semigroup: NumericalSemigroup
    h_star: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.h_star) != self.n:
            raise InvalidParameterError(f"|H*| = {len(self.h_star)} != n = {self.n}")
        if any(b <= a for a, b in zip(self.h_star, self.h_star[1:])):
            raise InvalidParameterError("H* must be strictly increasing")
        outside = [g for g in self.h_star if not self.semigroup.contains(g)]
        if outside:
            raise InvalidParameterError(f"H* elements {outside} are not in H(Q)")

    @cached_property
    def _h_set(self) -> frozenset[int]:
        return frozenset(self.h_star)

    @property
    def gamma_max(self) -> int:
        return self.h_star[-1]

    def in_h_star(self, value: int) -> bool:
        return value in self._h_set

    def dim(self, mu: int) -> int:
        """dim C_𝓛(D, μQ)."""
        return bisect_right(self.h_star, mu)

    def normalize(self, mu: int) -> int:
        """max{γ ∈ H* : γ ≤ μ}; −1, если таких нет (C = {0})."""
        count = self.dim(mu)
        return self.h_star[count - 1] if count else -1

    def index_of(self, gamma: int) -> int:
        """Индекс i с γ_i = gamma (1-based)."""
        if gamma not in self._h_set:
            raise InvalidParameterError(f"{gamma} is not in H*")
        return self.dim(gamma)

    def candidates(self, mu1: int, mu2: int) -> tuple[int, ...]:
        """H* ∩ (μ₂, μ₁]."""
        return self.h_star[self.dim(mu2) : self.dim(mu1)]

    def validate(self) -> None:
        """
        Проверка divisor-closedness.

        Raises:
            InconsistentFamilyError: Нашлось разложение δ = α + β с α ∉ H*
        """
        for delta in self.h_star:
            for alpha in self.semigroup.elements_below(delta + 1):
                if self.semigroup.contains(delta - alpha) and alpha not in self._h_set:
                    raise InconsistentFamilyError(
                        f"H* is not divisor-closed: {delta} = {alpha} + {delta - alpha}, "
                        f"{alpha} not in H*"
                    )


# =============================================================================
# RANK ORACLE
# =============================================================================


def compute_h_star(
    field: FiniteField,
    n: int,
    semigroup: NumericalSemigroup,
    evaluate: Callable[[int], Any],
    limits: SearchLimits | None = None,
) -> tuple[int, ...]:
    """
    H*(Q) инкрементальным рангом.

    Базис хранится в RREF: новый вектор редуцируется одной операцией
    v − v[pivots]·R, после чего его pivot вычищается из старых строк.

    Args:
        evaluate: λ ↦ ev(f_λ), вектор длины n над field

    Raises:
        SearchLimitExceeded: n > max_rank_oracle_length
        InconsistentFamilyError: Перебор λ ≤ n + 2g + c исчерпан до ранга n
    """
    limits = resolve_limits(limits)
    ensure_within("max_rank_oracle_length", n, limits.max_rank_oracle_length)

    reduced = field.zeros((0, n))
    pivots: list[int] = []
    h_star: list[int] = []
    horizon = n + 2 * semigroup.genus + semigroup.conductor

    for pole in range(horizon + 1):
        if len(h_star) == n:
            break
        if not semigroup.contains(pole):
            continue
        vector = evaluate(pole)
        field.check_array(vector)
        if pivots:
            vector = vector - vector[pivots] @ reduced
        nonzero = vector.view(np.ndarray) != 0
        if not nonzero.any():
            continue
        pivot = int(nonzero.argmax())
        vector = vector / vector[pivot]
        if pivots:
            reduced = reduced - reduced[:, [pivot]] * vector
        reduced = stack(field.gf, [reduced, vector], n)
        pivots.append(pivot)
        h_star.append(pole)

    if len(h_star) != n:
        raise InconsistentFamilyError(
            f"evaluation data exhausted at rank {len(h_star)} < n={n} (poles up to {horizon})"
        )
    logger.info("H* computed: n=%d, largest pole order %d", n, h_star[-1])
    return tuple(h_star)


# =============================================================================
# FAMILY
# =============================================================================


@dataclass(frozen=True, eq=False)
class OnePointCodeFamily:
    """
    Семейство C_𝓛(D, μQ), μ ∈ ℤ.

    Attributes:
        field: Поле
        n: Число точек D
        semigroup: H(Q)
        evaluate: λ ↦ ev(f_λ) для λ ∈ H(Q)
        name: Метка семейства (basis_id упорядоченного базиса)
        h_star: Готовый H*(Q); None — вычислить rank oracle
    """

    field: FiniteField
    n: int
    semigroup: NumericalSemigroup
    evaluate: Callable[[int], Any]
    name: str = "one-point"
    limits: SearchLimits | None = None
    h_star: tuple[int, ...] | None = None

    @cached_property
    def profile(self) -> PoleOrderProfile:
        if self.h_star is not None:
            return PoleOrderProfile(n=self.n, semigroup=self.semigroup, h_star=self.h_star)
        h_star = compute_h_star(self.field, self.n, self.semigroup, self.evaluate, self.limits)
        return PoleOrderProfile(n=self.n, semigroup=self.semigroup, h_star=h_star)

    @cached_property
    def evaluation_matrix(self) -> Any:
        """Строки ev(f_γ), γ ∈ H* по возрастанию."""
        return stack(self.field.gf, [self.evaluate(g) for g in self.profile.h_star], self.n)

    @cached_property
    def basis(self) -> OrderedBasis:
        """Упорядоченный базис ℬ = {ev(f_{γ₁}), …, ev(f_{γₙ})}."""
        return OrderedBasis.from_vectors(self.field, self.evaluation_matrix, basis_id=self.name)

    def code(self, mu: int) -> LinearCode:
        """C_𝓛(D, μQ); {0} при μ < γ₁."""
        dim = self.profile.dim(mu)
        if dim == 0:
            return zero_code(self.field, self.n)
        return LinearCode.from_rows(self.field, self.evaluation_matrix[:dim], self.n)
