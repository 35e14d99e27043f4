"""
Numerical Semigroup — ⟨a₁, …, a_r⟩ ⊆ ℕ, gaps, conductor и Z-функция

Z(Γ, μ, m) = 0 при m = 1, иначе
    min_{−μ+1 ≤ i₁ < ⋯ < i_{m−1} ≤ −1} #{α ∈ ∪_s (i_s + Γ) : α ∉ Γ}.

Все «бесконечные» сдвиги i + Γ обрабатываются на окне [i, c−1]:
каждое целое ≥ c лежит в Γ и в счёт не попадает.

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. gcd(generators) = 1, иначе conductor не существует
2. c − 1 ∉ Γ (при c > 0), всё ≥ c ∈ Γ
3. Равенство полугрупп = равенство списков gaps
4. Для ⟨a, a+1⟩ и 1 ≤ m ≤ μ ≤ a+1: Z = a(m−1) − (m−2)(m−1)/2
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb, gcd

from src.core.errors import InvalidParameterError
from src.core.limits import SearchLimits, ensure_within, resolve_limits
from src.core.math.subsets import min_union_cover, to_mask

logger = logging.getLogger(__name__)


# =============================================================================
# SEMIGROUP
# =============================================================================


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """
    Полностью материализованная numerical semigroup.

    Attributes:
        generators: Порождающие (как переданы, без дубликатов, по возрастанию)
        gaps: Отсортированные gaps
        conductor: Наименьшее c с [c, ∞) ⊆ Γ
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    conductor: int

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def _gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)

    def contains(self, value: int) -> bool:
        """value ∈ Γ (отрицательные числа не принадлежат)."""
        return value >= 0 and (value >= self.conductor or value not in self._gap_set)

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and self.contains(value)

    def elements_below(self, bound: int) -> list[int]:
        """Γ ∩ [0, bound)."""
        return [v for v in range(max(bound, 0)) if self.contains(v)]

    def elements(self, count: int) -> list[int]:
        """ρ₁ < ρ₂ < ⋯ < ρ_count."""
        below = self.elements_below(self.conductor)
        if count <= len(below):
            return below[:count]
        return below + list(range(self.conductor, self.conductor + count - len(below)))

    def rho(self, i: int) -> int:
        """ρ_i (1-based, ρ₁ = 0)."""
        if i < 1:
            raise InvalidParameterError(f"rho index must be >= 1, got {i}")
        below = self.conductor - self.genus
        if i <= below:
            return self.elements_below(self.conductor)[i - 1]
        return self.conductor + (i - below - 1)

    def deserts(self) -> list[tuple[int, ...]]:
        """Максимальные серии подряд идущих gaps."""
        runs: list[list[int]] = []
        for gap in self.gaps:
            if runs and runs[-1][-1] == gap - 1:
                runs[-1].append(gap)
            else:
                runs.append([gap])
        return [tuple(run) for run in runs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        gens = ",".join(str(g) for g in self.generators)
        return f"NumericalSemigroup(<{gens}>, g={self.genus}, c={self.conductor})"


def make_semigroup(generators: list[int] | tuple[int, ...]) -> NumericalSemigroup:
    """
    Построить ⟨generators⟩.

    Членство заполняется динамикой до появления min(generators) подряд идущих
    элементов: начиная с этой серии все целые лежат в Γ.

    Raises:
        InvalidParameterError: Пустой список, неположительный элемент или gcd ≠ 1
    """
    gens = tuple(sorted(set(int(g) for g in generators)))
    if not gens:
        raise InvalidParameterError("semigroup needs at least one generator")
    if gens[0] < 1:
        raise InvalidParameterError(f"generators must be positive, got {list(generators)}")
    if gcd(*gens) != 1:
        raise InvalidParameterError(
            f"gcd{gens} = {gcd(*gens)} != 1: semigroup has no finite conductor"
        )

    smallest = gens[0]
    member = [True]
    run = 1
    while run < smallest:
        value = len(member)
        is_member = any(value >= g and member[value - g] for g in gens)
        member.append(is_member)
        run = run + 1 if is_member else 0

    conductor = len(member) - smallest
    gaps = tuple(v for v in range(conductor) if not member[v])
    return NumericalSemigroup(generators=gens, gaps=gaps, conductor=conductor)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """CLI-литерал "4,5"."""
    try:
        generators = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidParameterError(f"bad semigroup literal {text!r}") from exc
    return make_semigroup(generators)


# =============================================================================
# Z-FUNCTION
# =============================================================================


def _escaped(semigroup: NumericalSemigroup, shift: int) -> list[int]:
    """{α ∈ shift + Γ : α ∉ Γ}; конечное множество внутри [shift, c−1]."""
    return [
        alpha
        for alpha in range(shift, semigroup.conductor)
        if semigroup.contains(alpha - shift) and not semigroup.contains(alpha)
    ]


def shifted_difference_count(semigroup: NumericalSemigroup, shifts: list[int] | tuple[int, ...]) -> int:
    """
    #{α ∈ ∪_s (i_s + Γ) : α ∉ Γ}.

    Raises:
        InvalidParameterError: Неотрицательный или повторяющийся сдвиг
    """
    if any(s >= 0 for s in shifts):
        raise InvalidParameterError(f"shifts must be negative, got {list(shifts)}")
    if len(set(shifts)) != len(shifts):
        raise InvalidParameterError(f"shifts must be distinct, got {list(shifts)}")
    escaped: set[int] = set()
    for shift in shifts:
        escaped.update(_escaped(semigroup, shift))
    return len(escaped)


def _check_z_range(mu: int, m: int) -> None:
    if not 1 <= m <= mu:
        raise InvalidParameterError(f"Z requires 1 <= m <= mu, got mu={mu}, m={m}")


def z_function_argmin(
    semigroup: NumericalSemigroup, mu: int, m: int, limits: SearchLimits | None = None
) -> tuple[int, tuple[int, ...]]:
    """
    Z(Γ, μ, m) перебором (m−1)-подмножеств {−μ+1, …, −1}.

    Returns:
        (Z, минимизирующие сдвиги по возрастанию)

    Raises:
        InvalidParameterError: m вне [1, μ]
        SearchLimitExceeded: C(μ−1, m−1) > max_z_combinations
    """
    limits = resolve_limits(limits)
    _check_z_range(mu, m)
    if m == 1:
        return 0, ()
    shifts = list(range(-mu + 1, 0))
    ensure_within(
        "max_z_combinations",
        comb(len(shifts), m - 1),
        limits.max_z_combinations,
        "use the closed form for <a, a+1>",
    )
    offset = -mu + 1
    masks = [to_mask(_escaped(semigroup, s), offset) for s in shifts]
    value, choice = min_union_cover(masks, m - 1, limits.max_z_combinations, "max_z_combinations")
    argmin = tuple(shifts[c] for c in choice)
    logger.debug("Z(%r, %d, %d) = %d at shifts %s", semigroup, mu, m, value, argmin)
    return value, argmin


def z_function(
    semigroup: NumericalSemigroup, mu: int, m: int, limits: SearchLimits | None = None
) -> int:
    """Z(Γ, μ, m)."""
    return z_function_argmin(semigroup, mu, m, limits)[0]


def z_closed_form(a: int, mu: int, m: int) -> int:
    """
    Z(⟨a, a+1⟩, μ, m) = a(m−1) − (m−2)(m−1)/2 при 1 ≤ m ≤ μ ≤ a+1.

    Raises:
        InvalidParameterError: Вне области, где формула доказана
    """
    if a < 2:
        raise InvalidParameterError(f"closed form needs a >= 2, got a={a}")
    if not 1 <= m <= mu <= a + 1:
        raise InvalidParameterError(
            f"closed form holds for 1 <= m <= mu <= a+1, got a={a}, mu={mu}, m={m}"
        )
    return a * (m - 1) - (m - 2) * (m - 1) // 2
