"""
Insertion recursions for the A and B distributions.

Going from length m to m + 1 inserts the new maximum m + 1 into every one of
the m + 1 slots of each permutation. Callers pass lengths; the (n, j) split
``m = k*n + j`` that selects the operator is derived here.
"""

import logging
from typing import Dict, List

from app.utils.polynomials import BiPoly, IntPoly

logger = logging.getLogger(__name__)


def apply_delta(p: IntPoly, m: int) -> IntPoly:
    """x^s -> s x^(s-1) + (m - s) x^s, used when m is not divisible by k."""
    if m < 1:
        raise ValueError(f"Delta needs m >= 1, got {m}")
    out = [0] * (len(p.coeffs) + 1)
    for s, c in enumerate(p.coeffs):
        if s > 0:
            out[s - 1] += s * c
        out[s] += (m - s) * c
    return IntPoly(out)


def apply_gamma(p: IntPoly, m: int) -> IntPoly:
    """x^s -> (s + 1) x^s + (m - 1 - s) x^(s+1), used when m is divisible by k."""
    if m < 1:
        raise ValueError(f"Gamma needs m >= 1, got {m}")
    out = [0] * (len(p.coeffs) + 1)
    for s, c in enumerate(p.coeffs):
        out[s] += (s + 1) * c
        out[s + 1] += (m - 1 - s) * c
    return IntPoly(out)


def apply_theta(p: BiPoly, k: int, n: int, j: int) -> BiPoly:
    """Step from length kn + j to kn + j + 1 for 0 <= j <= k - 2."""
    if not 0 <= j <= k - 2:
        raise ValueError(f"Theta needs 0 <= j <= k-2, got j={j}, k={k}")
    base = 1 + (k - 1) * n + j
    size = p.degree + 2
    z0 = [0] * size
    z1 = [0] * size
    for s, c in enumerate(p.z0.coeffs):
        z0[s] += (base + s) * c
        z0[s + 1] += (n - s) * c
    for s, c in enumerate(p.z1.coeffs):
        z1[s] += (base + s) * c
        z1[s + 1] += (n - s - 1) * c
        # sigma_1 in the class loses its leading spot when the maximum goes in front
        z0[s + 1] += c
    return BiPoly(z0, z1)


def apply_psi(p: BiPoly, k: int, n: int) -> BiPoly:
    """Step from length kn + k - 1 to kn + k."""
    if k < 2 or n < 0:
        raise ValueError(f"Psi needs k >= 2 and n >= 0, got k={k}, n={n}")
    base = (k - 1) * (n + 1)
    size = p.degree + 2
    z0 = [0] * size
    z1 = [0] * size
    for s, c in enumerate(p.z0.coeffs):
        z0[s] += (base + s) * c
        # the new maximum kn + k is itself divisible by k
        z1[s] += c
        z0[s + 1] += (n - s) * c
    for s, c in enumerate(p.z1.coeffs):
        z1[s] += (base + 1 + s) * c
        z1[s + 1] += (n - s) * c
    return BiPoly(z0, z1)


def a_step(p: IntPoly, k: int, m: int) -> IntPoly:
    """A at length m from A at length m - 1."""
    if m % k == 0:
        return apply_gamma(p, m)
    return apply_delta(p, m)


def b_step(p: BiPoly, k: int, m: int) -> BiPoly:
    """B at length m + 1 from B at length m."""
    n, j = divmod(m, k)
    if j <= k - 2:
        return apply_theta(p, k, n, j)
    return apply_psi(p, k, n)


_A_CHAINS: Dict[int, List[IntPoly]] = {}
_B_CHAINS: Dict[int, List[BiPoly]] = {}


def _a_chain(k: int, n: int) -> IntPoly:
    chain = _A_CHAINS.setdefault(k, [IntPoly.constant(1), IntPoly.constant(1)])
    if len(chain) <= n:
        logger.debug(f"Extending A chain for k={k} from length {len(chain) - 1} to {n}")
    while len(chain) <= n:
        chain.append(a_step(chain[-1], k, len(chain)))
    return chain[n]


def _b_chain(k: int, n: int) -> BiPoly:
    chain = _B_CHAINS.setdefault(k, [BiPoly((1,)), BiPoly((1,))])
    if len(chain) <= n:
        logger.debug(f"Extending B chain for k={k} from length {len(chain) - 1} to {n}")
    while len(chain) <= n:
        chain.append(b_step(chain[-1], k, len(chain) - 1))
    return chain[n]


def poly_A_recursive(k: int, n: int) -> IntPoly:
    """
    A^(k)_n(x) from A_1 = 1. k = 1 is allowed and gives the Eulerian
    polynomials, since every length is then divisible by k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _a_chain(k, n)


def poly_B_recursive(k: int, n: int) -> BiPoly:
    """B^(k)_n(x, z) from B_1 = 1 (length 1 never starts with a multiple of k >= 2)."""
    if k < 2:
        raise ValueError(f"B recursion needs k >= 2, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _b_chain(k, n)


def coeff_recursion_step_A(k: int, m: int, s: int, previous: IntPoly) -> int:
    """Coefficient of x^s in A at length m, from the coefficients at length m - 1."""
    if s < 0:
        return 0
    if m % k == 0:
        return (1 + s) * previous.coeff(s) + (m - s) * previous.coeff(s - 1)
    return (m - s) * previous.coeff(s) + (s + 1) * previous.coeff(s + 1)


def coeff_recursion_step_B(k: int, m: int, s: int, i: int, previous: BiPoly) -> int:
    """Coefficient of z^i x^s in B at length m + 1, from the split coefficients at length m."""
    if s < 0 or i not in (0, 1):
        return 0
    n, j = divmod(m, k)
    b0 = previous.z0.coeff
    b1 = previous.z1.coeff
    if j <= k - 2:
        base = 1 + s + (k - 1) * n + j
        if i == 0:
            return base * b0(s) + (n - s + 1) * b0(s - 1) + b1(s - 1)
        return base * b1(s) + (n - s) * b1(s - 1)
    if i == 0:
        return (s + (k - 1) * (n + 1)) * b0(s) + (n - s + 1) * b0(s - 1)
    return (1 + s + (k - 1) * (n + 1)) * b1(s) + (n - s + 1) * b1(s - 1) + b0(s)


def coeff_recursion_step_C(k: int, m: int, s: int, previous: IntPoly) -> int:
    """Coefficient of x^s in B(x) = B(x, 1) at length m + 1, from B(x) at length m."""
    if s < 0:
        return 0
    n, j = divmod(m, k)
    return (1 + s + (k - 1) * n + j) * previous.coeff(s) + (n - s + 1) * previous.coeff(s - 1)


def a_chain(k: int, n: int) -> List[IntPoly]:
    """A_0 .. A_n."""
    return [poly_A_recursive(k, m) for m in range(n + 1)]


def b_chain(k: int, n: int) -> List[BiPoly]:
    """B_0 .. B_n."""
    return [poly_B_recursive(k, m) for m in range(n + 1)]
