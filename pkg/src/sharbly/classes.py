"""Distinguished cycles: wheel sharblies and the rank-one class."""

from __future__ import annotations

from .bialgebra import boundary
from .canonical import TRIV, Element, chi_value, sharbly_element


def wheel_columns(n: int) -> list[tuple[int, ...]]:
    """``e_1, ..., e_n, e_1 - e_2, ..., e_{n-1} - e_n, e_n - e_1``."""
    e = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    rim = [tuple(a - b for a, b in zip(e[j], e[(j + 1) % n])) for j in range(n)]
    return e + rim


def wheel(n: int, chi=TRIV) -> Element:
    """The wheel sharbly in grade ``(n, n)``; zero for even ``n``."""
    if n < 3:
        raise ValueError(f"wheel sharblies need n >= 3, got {n}")
    return sharbly_element(wheel_columns(n), chi_value(chi))


def t1(chi=TRIV) -> Element:
    """``[1]`` in grade ``(1, 0)``, the generator of the rank-one piece."""
    return sharbly_element([(1,)], chi_value(chi))


def is_cycle(x: Element) -> bool:
    return boundary(x).is_zero()
