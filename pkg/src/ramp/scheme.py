"""
Ramp Scheme — линейная ramp-схема на паре C₂ ⊊ C₁

Секрет s ∈ 𝔽^ℓ (ℓ = k₁ − k₂) кодируется как x = ψ(s) + c₂, c₂ ∈ C₂ случайно,
ψ(s) = s · L, где строки L дополняют C₂ до C₁ (C₁ = L ⊕ C₂).

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. rank([L; G₂]) = k₁, все строки L лежат в C₁
2. share() — чистая функция (secret, seed): Philox(seed)
3. I(S; X_𝓘) = ℓ − dim((C₁ ∩ V_𝓘̄)/(C₂ ∩ V_𝓘̄)) = dim((C₂^⊥ ∩ V_𝓘)/(C₁^⊥ ∩ V_𝓘)),
   обе формулы считаются и сравниваются
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.codes.linear_code import LinearCode, as_matrix
from src.codes.oracles import require_nested, shortened_dim_quotient
from src.core.domain import CoordinateSet
from src.core.errors import FieldMismatchError, InconsistentSharesError, InvalidParameterError
from src.core.field import FiniteField
from src.core.math.gf_linalg import pivot_completion, rank, solve_affine, stack


# =============================================================================
# SCHEME
# =============================================================================


@dataclass(frozen=True)
class SchemeOrigin:
    """Откуда взялась пара кодов (для выбора bound-режима профиля)."""

    family: str
    q: int | None = None
    mu1: int | None = None
    mu2: int | None = None


@dataclass(frozen=True, eq=False)
class RampScheme:
    """
    Ramp-схема C₁/C₂ с фиксированным дополнением L.

    Attributes:
        c1, c2: Коды схемы, C₂ ⊊ C₁
        complement: Матрица L формы (ℓ, n)
        origin: Метаданные построения (hermitian / mds / custom)
    """

    c1: LinearCode
    c2: LinearCode
    complement: Any
    origin: SchemeOrigin = SchemeOrigin(family="custom")

    @property
    def field(self) -> FiniteField:
        return self.c1.field

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def ell(self) -> int:
        return self.c1.k - self.c2.k

    @classmethod
    def from_codes(
        cls,
        c1: LinearCode,
        c2: LinearCode,
        complement: Any | None = None,
        origin: SchemeOrigin | None = None,
    ) -> "RampScheme":
        """
        Схема на паре C₂ ⊊ C₁.

        Args:
            complement: Строки L; по умолчанию — pivot completion G₂ строками G₁

        Raises:
            NotSubcodeError: C₂ ⊄ C₁
            InvalidParameterError: C₂ = C₁ или L не дополняет C₂ до C₁
        """
        require_nested(c1, c2)
        ell = c1.k - c2.k
        if ell < 1:
            raise InvalidParameterError("C2 must be a proper subcode of C1")
        if complement is None:
            chosen = pivot_completion(c2.generator, c1.generator)
            complement = c1.generator[chosen]
        else:
            complement = as_matrix(c1.field, complement, c1.n)
            joint = stack(c1.field.gf, [complement, c2.generator], c1.n)
            if complement.shape[0] != ell or rank(joint) != c1.k or not all(
                c1.contains_vector(row) for row in complement
            ):
                raise InvalidParameterError(f"complement must span C1 modulo C2 with {ell} rows")
        if complement.shape[0] != ell:
            raise InvalidParameterError(f"pivot completion found {complement.shape[0]} rows, expected {ell}")
        return cls(c1=c1, c2=c2, complement=complement, origin=origin or SchemeOrigin(family="custom"))

    def psi(self, secret: Any) -> Any:
        """ψ(s) = s · L."""
        return secret @ self.complement

    @property
    def joint_generator(self) -> Any:
        """[L; G₂] — отображение (s, r) ↦ x."""
        return stack(self.field.gf, [self.complement, self.c2.generator], self.n)


# =============================================================================
# SHARING
# =============================================================================


def _as_vector(scheme: RampScheme, values: Any, length: int, name: str) -> Any:
    vector = as_matrix(scheme.field, values).reshape(-1)
    if vector.shape[0] != length:
        raise FieldMismatchError(f"{name} must have length {length}, got {vector.shape[0]}")
    return vector


def share_with_randomness(scheme: RampScheme, secret: Any, randomness: Any) -> Any:
    """x = ψ(s) + r · G₂ (детерминированное ядро share)."""
    s = _as_vector(scheme, secret, scheme.ell, "secret")
    r = _as_vector(scheme, randomness, scheme.c2.k, "randomness")
    x = scheme.psi(s)
    if scheme.c2.k:
        x = x + r @ scheme.c2.generator
    return x


def share(scheme: RampScheme, secret: Any, seed: int) -> Any:
    """Вектор долей длины n; c₂ равномерно из C₂ под Philox(seed)."""
    rng = np.random.Generator(np.random.Philox(seed))
    randomness = scheme.field.random(scheme.c2.k, rng)
    return share_with_randomness(scheme, secret, randomness)


@dataclass(frozen=True)
class Reconstruction:
    """
    Результат восстановления по наблюдаемым долям.

    Возможные секреты: particular + span(kernel); secret задан, если determined = ℓ.
    """

    determined: int
    particular: Any
    kernel: Any
    secret: Any | None


def reconstruct(scheme: RampScheme, observed: dict[int, int]) -> Reconstruction:
    """
    Восстановление по {индекс (1-based): кодировка значения}.

    Raises:
        InvalidParameterError: Индекс вне [1, n] или значение вне поля
        InconsistentSharesError: Наблюдения не продолжаются до вектора из C₁
    """
    n, ell = scheme.n, scheme.ell
    indices = sorted(observed)
    if any(not 1 <= i <= n for i in indices):
        raise InvalidParameterError(f"share indices must lie in [1, {n}], got {indices}")
    if any(not 0 <= int(observed[i]) < scheme.field.order for i in indices):
        raise InvalidParameterError(f"share values must be encodings in [0, {scheme.field.order})")

    columns = [i - 1 for i in indices]
    system = scheme.joint_generator[:, columns].T
    values = scheme.field([int(observed[i]) for i in indices])
    solution = solve_affine(system, values)
    if solution is None:
        raise InconsistentSharesError(f"shares at {indices} are not a restriction of any share vector")
    particular, kernel = solution
    secret_kernel = kernel[:, :ell]
    determined = ell - rank(secret_kernel)
    secret = particular[:ell] if determined == ell else None
    return Reconstruction(
        determined=determined, particular=particular[:ell], kernel=secret_kernel, secret=secret
    )


# =============================================================================
# MUTUAL INFORMATION
# =============================================================================


def mutual_information_primal(scheme: RampScheme, coordinates: CoordinateSet) -> int:
    """ℓ − dim((C₁ ∩ V_𝓘̄)/(C₂ ∩ V_𝓘̄))."""
    return scheme.ell - shortened_dim_quotient(
        scheme.c1, scheme.c2, coordinates.complement(), check=False
    )


def mutual_information_dual(scheme: RampScheme, coordinates: CoordinateSet) -> int:
    """dim((C₂^⊥ ∩ V_𝓘)/(C₁^⊥ ∩ V_𝓘))."""
    return shortened_dim_quotient(scheme.c2.dual, scheme.c1.dual, coordinates, check=False)


def mutual_information(scheme: RampScheme, coordinates: CoordinateSet) -> int:
    """
    I(S; X_𝓘) в q-битах.

    Raises:
        InvalidParameterError: Длина 𝓘 не совпадает с n
        AssertionError: Две формулы разошлись
    """
    if coordinates.n != scheme.n:
        raise InvalidParameterError(f"coordinate set length {coordinates.n} != n = {scheme.n}")
    primal = mutual_information_primal(scheme, coordinates)
    dual_value = mutual_information_dual(scheme, coordinates)
    if primal != dual_value:
        raise AssertionError(f"mutual information mismatch on {coordinates.indices}: {primal} != {dual_value}")
    return primal
