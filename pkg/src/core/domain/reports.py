"""
Reports — immutable модели результатов

BoundReport, GhwReport, LeakageProfile, ReportRow — то, что библиотека отдаёт
наружу и что CLI сериализует в JSON/CSV (схемы в contracts/schema/).

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. LeakageProfile: t_m и r_m строго возрастают, t_m < r_m, длины равны ℓ
2. GhwReport: equality = True только при выполнении всех трёх условий
3. ReportRow: match = (value == expected), если expected задан; иначе None
"""

from enum import Enum

from pydantic import BaseModel, Field, model_validator


# =============================================================================
# ENUMS
# =============================================================================


class Provenance(str, Enum):
    """Происхождение значения профиля"""

    EXACT_ORACLE = "exact-oracle"
    EXACT_CLOSED = "exact-closed"
    BOUND = "bound"


class BoundTier(str, Enum):
    """Уровень границы RGHW для one-point кодов"""

    EXACT_SET = "exact-set"
    SHIFTED = "shifted"
    CLOSED = "closed"
    DUAL = "dual"


class ValueKind(str, Enum):
    """Смысл числа в отчёте"""

    EXACT = "exact"
    LOWER_BOUND = "lower-bound"
    UPPER_BOUND = "upper-bound"


# =============================================================================
# BOUND REPORT
# =============================================================================


class BoundReport(BaseModel):
    """
    Результат одной границы RGHW.

    mu1/mu2 — как заданы; mu1_normalized/mu2_normalized — после сдвига к
    max{γ ∈ H* : γ ≤ μ} (коды при этом не меняются).
    """

    mu1: int = Field(..., description="μ₁ как задан")
    mu2: int = Field(..., description="μ₂ как задан (−1 означает C₂ = {0})")
    mu1_normalized: int = Field(..., description="max{γ ∈ H* : γ ≤ μ₁}")
    mu2_normalized: int = Field(..., description="max{γ ∈ H* : γ ≤ μ₂} или −1")
    m: int = Field(..., ge=1, description="Номер relative weight")
    tier: BoundTier = Field(..., description="Уровень границы")
    value: int = Field(..., description="Значение границы")
    argmin: tuple[int, ...] = Field(default=(), description="Минимизирующее γ-множество")
    kind: ValueKind = Field(default=ValueKind.LOWER_BOUND, description="Смысл значения")

    model_config = {"frozen": True}


# =============================================================================
# GHW REPORT
# =============================================================================


class GhwReport(BaseModel):
    """
    Граница обобщённого веса Хэмминга d_m(C(μ)) через abundance.

    bound = n − μ + ρ_m + α(μ); bound_shifted = n − μ + ρ_{m+α(μ)}.
    """

    q: int = Field(..., ge=2)
    mu: int = Field(..., ge=0)
    m: int = Field(..., ge=1)
    abundance: int = Field(..., ge=0, description="α(μ) = #(H ∩ [0, μ]) − dim C(μ)")
    bound: int = Field(..., description="n − μ + ρ_m + α(μ)")
    bound_shifted: int = Field(..., description="n − μ + ρ_{m+α(μ)}")
    mu_in_h_star: bool = Field(..., description="Условие 1: μ ∈ H*")
    value_in_semigroup: bool = Field(..., description="Условие 2: n − μ + ρ_{m+α} ∈ H")
    decomposition_ok: bool = Field(..., description="Условие 3: i ≤ q² − q − 1 или j = 0")
    decomposition: tuple[int, int] | None = Field(
        default=None, description="(i, j) с n − μ + ρ_{m+α} = iq + j(q+1), j < q"
    )
    equality: bool = Field(..., description="d_m равно bound_shifted")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_equality(self) -> "GhwReport":
        conditions = self.mu_in_h_star and self.value_in_semigroup and self.decomposition_ok
        if self.equality != conditions:
            raise ValueError("equality flag must equal the conjunction of the three conditions")
        return self


# =============================================================================
# LEAKAGE PROFILE
# =============================================================================


class LeakageProfile(BaseModel):
    """
    (t₁..t_ℓ)-privacy и (r₁..r_ℓ)-reconstruction линейной ramp-схемы.

    Для provenance = bound: t_m — нижние границы («противнику нужно больше»),
    r_m — верхние границы («столько всегда достаточно»).
    """

    n: int = Field(..., ge=1, description="Число участников")
    ell: int = Field(..., ge=1, description="Длина секрета ℓ = k₁ − k₂")
    t: tuple[int, ...] = Field(..., description="t₁..t_ℓ")
    r: tuple[int, ...] = Field(..., description="r₁..r_ℓ")
    t_provenance: tuple[Provenance, ...] = Field(..., description="Происхождение t_m")
    r_provenance: tuple[Provenance, ...] = Field(..., description="Происхождение r_m")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_profile(self) -> "LeakageProfile":
        for name in ("t", "r", "t_provenance", "r_provenance"):
            if len(getattr(self, name)) != self.ell:
                raise ValueError(f"{name} must have length ell={self.ell}")
        for m in range(1, self.ell):
            if self.t[m] <= self.t[m - 1] or self.r[m] <= self.r[m - 1]:
                raise ValueError(f"t and r must be strictly increasing: t={self.t}, r={self.r}")
        for t_m, r_m in zip(self.t, self.r):
            if not 0 <= t_m < r_m <= self.n:
                raise ValueError(f"need 0 <= t_m < r_m <= n, got t={self.t}, r={self.r}")
        return self

    @property
    def privacy_threshold(self) -> int:
        """t = t₁"""
        return self.t[0]

    @property
    def reconstruction_threshold(self) -> int:
        """r = r_ℓ"""
        return self.r[-1]

    @property
    def exact(self) -> bool:
        return all(p != Provenance.BOUND for p in self.t_provenance + self.r_provenance)

    def t_m(self, m: int) -> int:
        return self.t[m - 1]

    def r_m(self, m: int) -> int:
        return self.r[m - 1]


# =============================================================================
# REPORT ROW
# =============================================================================


class ReportRow(BaseModel):
    """Строка отчёта CLI (плоская, чтобы совпадать с колонками CSV)."""

    scenario: str = Field(..., min_length=1, description="Идентификатор сценария, например ex1-m2")
    q: int | None = Field(default=None, description="Параметр q семейства")
    mu1: int | None = Field(default=None)
    mu2: int | None = Field(default=None)
    m: int | None = Field(default=None)
    tier: str | None = Field(default=None, description="Уровень границы или вид величины")
    value: int = Field(..., description="Вычисленное значение")
    expected: int | None = Field(default=None, description="Эталон из fixture")
    match: bool | None = Field(default=None, description="value == expected")
    kind: ValueKind = Field(default=ValueKind.EXACT)
    source: str | None = Field(default=None, description="Ссылка на источник эталона")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def validate_match(self) -> "ReportRow":
        expected_match = None if self.expected is None else self.value == self.expected
        if self.match != expected_match:
            raise ValueError(
                f"match flag {self.match} inconsistent with value={self.value}, expected={self.expected}"
            )
        return self

    @classmethod
    def build(cls, scenario: str, value: int, expected: int | None = None, **fields: object) -> "ReportRow":
        """Конструктор, вычисляющий match из value/expected."""
        match = None if expected is None else value == expected
        return cls(scenario=scenario, value=value, expected=expected, match=match, **fields)  # type: ignore[arg-type]
