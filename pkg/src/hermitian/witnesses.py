"""
Witness Functions — явные функции, на которых граница n − μ₁ + G₁(m, q) достигается

f₀, …, f_{m−1} с f_k ∈ 𝓛((μ₁−k)Q) ∖ 𝓛((μ₁−k−1)Q) — произведения линейных
множителей (X − β), (X − γ), (Y − α), где
    α — элементы со следом 1 (q штук),
    β — элементы с нормой ≠ 1 (q² − q − 1 штук),
    γ — элементы с нормой 1 (q + 1 штук),
каждое множество в порядке кодировок.

Число общих нулей на q³ точках = μ₁ − Σ_{s=0}^{m−2} (q − s).
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.core.errors import InvalidParameterError
from src.hermitian.bounds import g1
from src.hermitian.curve import HermitianFamily, decompose_pole_order


@dataclass(frozen=True)
class WitnessFunction:
    """Произведение Π(X − x_root) · Π(Y − y_root) и его значения в точках."""

    pole_order: int
    x_roots: tuple[int, ...]
    y_roots: tuple[int, ...]
    values: Any


@dataclass(frozen=True)
class WitnessSet:
    functions: tuple[WitnessFunction, ...]
    common_zero_count: int
    regime: int


def _element_classes(family: HermitianFamily) -> tuple[list[int], list[int], list[int]]:
    field = family.field
    elements = field.elements
    norms = field.norm(elements).view(np.ndarray)
    traces = field.trace(elements).view(np.ndarray)
    alphas = [int(e) for e in np.flatnonzero(traces == 1)]
    betas = [int(e) for e in np.flatnonzero(norms != 1)]
    gammas = [int(e) for e in np.flatnonzero(norms == 1)]
    return alphas, betas, gammas


def _evaluate(family: HermitianFamily, x_roots: list[int], y_roots: list[int]) -> WitnessFunction:
    field = family.field
    values = field.ones(family.n)
    for root in x_roots:
        values = values * (family.xs - field(root))
    for root in y_roots:
        values = values * (family.ys - field(root))
    pole_order = family.q * len(x_roots) + (family.q + 1) * len(y_roots)
    return WitnessFunction(
        pole_order=pole_order, x_roots=tuple(x_roots), y_roots=tuple(y_roots), values=values
    )


def witness_functions(family: HermitianFamily, mu1: int, m: int) -> WitnessSet:
    """
    Построить f₀..f_{m−1} и посчитать их общие нули.

    Regime 1 (m ≤ j+1, i ≤ q² − q − 1):
        F_k = β^{i} γ^{k} α^{j−k}
    Regime 2 (j+1 ≤ m ≤ j+q):
        F_k = β^{i−q+j} γ^{q−j+k} α^{j−k},   k ≤ j
        F_{j+r} = β^{i−q+j} α^{q−r} γ^{r−1}, r ≥ 1
    (степень — число первых элементов соответствующего класса).

    Raises:
        InvalidParameterError: m > q + 1, μ₁ ≥ n − c, c − 1 ≥ μ₁ − (m−1)
            или μ₁ не раскладывается
    """
    q, n, c = family.q, family.n, family.conductor
    if not 1 <= m <= q + 1:
        raise InvalidParameterError(f"m={m} out of range [1, {q + 1}]")
    if mu1 >= n - c:
        raise InvalidParameterError(f"need mu1 < n - c = {n - c}, got {mu1}")
    if c - 1 >= mu1 - (m - 1):
        raise InvalidParameterError(f"need c - 1 < mu1 - (m - 1), got mu1={mu1}, m={m}")
    i, j = decompose_pole_order(q, mu1)
    alphas, betas, gammas = _element_classes(family)

    specs: list[tuple[list[int], list[int]]] = []
    if m <= j + 1 and i <= q * q - q - 1:
        regime = 1
        for k in range(m):
            specs.append((betas[:i] + gammas[:k], alphas[: j - k]))
    else:
        regime = 2
        b = i - q + j
        if not (j + 1 <= m <= j + q and 0 <= b <= len(betas)):
            raise InvalidParameterError(f"no witness construction for mu1={mu1} (i={i}, j={j}), m={m}")
        for k in range(m):
            if k <= j:
                specs.append((betas[:b] + gammas[: q - j + k], alphas[: j - k]))
            else:
                r = k - j
                specs.append((betas[:b] + gammas[: r - 1], alphas[: q - r]))

    functions = tuple(_evaluate(family, x_roots, y_roots) for x_roots, y_roots in specs)
    for k, function in enumerate(functions):
        if function.pole_order != mu1 - k:
            raise AssertionError(f"F_{k} has pole order {function.pole_order}, expected {mu1 - k}")

    zero = np.ones(n, dtype=bool)
    for function in functions:
        zero &= function.values.view(np.ndarray) == 0
    count = int(zero.sum())
    expected = mu1 - g1(m, q)
    if count != expected:
        raise AssertionError(f"witness functions share {count} zeros, expected {expected}")
    return WitnessSet(functions=functions, common_zero_count=count, regime=regime)
