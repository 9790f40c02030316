"""
Dense polynomials with exact integer coefficients.

``IntPoly`` holds coefficients indexed by x-degree, trailing zeros stripped.
``BiPoly`` is ``z0(x) + z * z1(x)``, enough for the first-letter marker z.
"""

from typing import Iterable, List, Tuple

ZERO_DEGREE = -1


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """x-degree, or ``ZERO_DEGREE`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(d) + other.coeff(d) for d in range(size))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            for b, cb in enumerate(other.coeffs):
                out[a + b] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def scale(self, factor: int) -> "IntPoly":
        return IntPoly(factor * c for c in self.coeffs)

    def shift(self, by: int = 1) -> "IntPoly":
        """Multiply by ``x**by``."""
        if self.is_zero():
            return self
        return IntPoly([0] * by + list(self.coeffs))

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def reversed_within(self, top: int) -> "IntPoly":
        """Coefficients mirrored in the window ``0..top``."""
        return IntPoly(self.coeff(top - d) for d in range(top + 1))

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == _normalize(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_terms((c, d, "") for d, c in enumerate(self.coeffs))


class BiPoly:
    __slots__ = ("z0", "z1")

    def __init__(self, z0=(), z1=()):
        object.__setattr__(self, "z0", z0 if isinstance(z0, IntPoly) else IntPoly(z0))
        object.__setattr__(self, "z1", z1 if isinstance(z1, IntPoly) else IntPoly(z1))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def part(self, z: int) -> IntPoly:
        if z == 0:
            return self.z0
        if z == 1:
            return self.z1
        raise ValueError(f"z-degree must be 0 or 1, got {z}")

    def coeff(self, z: int, degree: int) -> int:
        return self.part(z).coeff(degree)

    @property
    def degree(self) -> int:
        return max(self.z0.degree, self.z1.degree)

    def is_zero(self) -> bool:
        return self.z0.is_zero() and self.z1.is_zero()

    def __add__(self, other: "BiPoly") -> "BiPoly":
        return BiPoly(self.z0 + other.z0, self.z1 + other.z1)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return BiPoly(self.z0 - other.z0, self.z1 - other.z1)

    def scale(self, factor: int) -> "BiPoly":
        return BiPoly(self.z0.scale(factor), self.z1.scale(factor))

    def at_z1(self) -> IntPoly:
        """Specialize z = 1, i.e. forget the first-letter marker."""
        return self.z0 + self.z1

    def evaluate(self, x: int, z: int) -> int:
        return self.z0.evaluate(x) + z * self.z1.evaluate(x)

    def coefficient_sum(self) -> int:
        return self.z0.coefficient_sum() + self.z1.coefficient_sum()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.z0 == other.z0 and self.z1 == other.z1

    def __hash__(self) -> int:
        return hash((self.z0, self.z1))

    def __repr__(self) -> str:
        return f"BiPoly(z0={list(self.z0.coeffs)}, z1={list(self.z1.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for d in range(self.degree + 1):
            terms.append((self.z0.coeff(d), d, ""))
            terms.append((self.z1.coeff(d), d, "z"))
        return format_terms(terms)


def format_terms(terms) -> str:
    """Render ``(coefficient, x-degree, suffix)`` triples as ``72 + 456x + 192x^2``."""
    parts = []
    for c, d, suffix in terms:
        if c == 0:
            continue
        x = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        body = f"{x}{suffix}"
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        else:
            parts.append(f"{c}{body}")
    return " + ".join(parts) if parts else "0"


def coefficient_sum(poly) -> int:
    """Sum of all coefficients of an ``IntPoly``, a ``BiPoly`` or a plain sequence."""
    if isinstance(poly, (IntPoly, BiPoly)):
        return poly.coefficient_sum()
    return sum(int(c) for c in poly)
