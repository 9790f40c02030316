"""
Exact checks of the binomial and product identities that fall out of
comparing two formulas for the same coefficient.

Each ``check_*`` evaluates both sides from raw binomials and products and
returns a ``CheckResult``. Plain binomials on the closed side come from
``math.comb``; the alternating sums go through ``_binom``, so a fault in
either path shows up as a mismatch.
"""

import logging
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from app.services.closed_forms import omega_product, omega_sum
from app.services.recursion import poly_A_recursive, poly_B_recursive

logger = logging.getLogger(__name__)


class CheckResult(NamedTuple):
    lhs: Any
    rhs: Any
    equal: bool


def _result(lhs, rhs, equal: Optional[bool] = None) -> CheckResult:
    return CheckResult(lhs, rhs, lhs == rhs if equal is None else equal)


@dataclass
class VerificationReport:
    """Pass/fail record for one identity or cross-check sweep."""

    id: str
    ranges: Dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, params: Dict[str, Any], result: CheckResult):
        self.checked += 1
        if not result.equal:
            self.failures.append({"params": params, "lhs": result.lhs, "rhs": result.rhs})

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.failures.extend({"id": other.id, **failure} for failure in other.failures)
        self.elapsed += other.elapsed
        self.ranges.setdefault("identities", []).append(other.id)
        return self

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload["passed"] = self.passed
        payload["status"] = "pass" if self.passed else "fail"
        payload["failures"] = [_stringify(f) for f in self.failures]
        return payload


def _stringify(value):
    """Big integers become decimal strings so JSON readers never truncate them."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {key: _stringify(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    return (-1) ** b * math.comb(b - a - 1, b)


def _signed_sum(top: int, term: Callable[[int], int]) -> int:
    """sum_{r=0}^{top} (-1)^(top-r) term(r)."""
    return sum((-1) ** (top - r) * term(r) for r in range(top + 1))


def check_saalschutz_A(n: int, s: int, variant: int = 1) -> CheckResult:
    """
    variant 1: C(n,s)^2 against the alternating sum over C(n+r,r)^2 C(2n+1,s-r).
    variant 2: C(n,s) C(n+1,s+1) against the sum over
    C(n+r+1,r) C(n+r+1,r+1) C(2n+2,s-r).
    """
    if variant == 1:
        lhs = math.comb(n, s) ** 2
        rhs = _signed_sum(s, lambda r: _binom(n + r, r) ** 2 * _binom(2 * n + 1, s - r))
    elif variant == 2:
        lhs = math.comb(n, s) * math.comb(n + 1, s + 1)
        rhs = _signed_sum(s, lambda r: _binom(n + r + 1, r) * _binom(n + r + 1, r + 1) * _binom(2 * n + 2, s - r))
    else:
        raise ValueError(f"Unknown Saalschutz-A variant {variant}")
    return _result(lhs, rhs)


def check_saalschutz_B(n: int, s: int, variant: int = 1) -> CheckResult:
    """
    variant 1 is cross-multiplied by (s + 1): (n+1) C(n,s)^2 against (s+1)
    times the sum over C(n+r,r) C(n+r+1,r) C(2n+2,n-s-r).
    variant 2: C(n-1,s) C(n+1,s+1) against the sum over
    C(n+r,r) C(n+r-1,r-1) C(2n+1,n-s-r); needs n >= 1.
    """
    top = n - s
    if variant == 1:
        lhs = (n + 1) * math.comb(n, s) ** 2
        rhs = (s + 1) * _signed_sum(
            top, lambda r: _binom(n + r, r) * _binom(n + r + 1, r) * _binom(2 * n + 2, top - r)
        )
    elif variant == 2:
        if n < 1:
            raise ValueError("Saalschutz-B variant 2 needs n >= 1")
        lhs = math.comb(n - 1, s) * math.comb(n + 1, s + 1)
        rhs = _signed_sum(top, lambda r: _binom(n + r, r) * _binom(n + r - 1, r - 1) * _binom(2 * n + 1, top - r))
    else:
        raise ValueError(f"Unknown Saalschutz-B variant {variant}")
    return _result(lhs, rhs)


def _split_sum(k: int, n: int, j: int, top: int, product: Callable[[int], int]) -> int:
    big_n = (k - 1) * n + j
    m = k * n + j
    return _signed_sum(top, lambda r: _binom(big_n + r, r) * _binom(m + 1, top - r) * product(r))


def check_cross_A(k: int, n: int, j: int, s: int) -> CheckResult:
    """The A coefficient summed up from x^0 against the same coefficient summed down from x^n."""
    lhs = _split_sum(k, n, j, s, lambda r: math.prod(r + (k - 1) * i for i in range(1, n + 1)))
    rhs = _split_sum(k, n, j, n - s, lambda r: math.prod(r + 1 + j + (k - 1) * i for i in range(n)))
    return _result(lhs, rhs)


def check_cross_A_s0(k: int, n: int, j: int) -> CheckResult:
    """(k-1)^n n! against the down-summed side of ``check_cross_A`` at s = 0."""
    lhs = (k - 1) ** n * math.factorial(n)
    rhs = _split_sum(k, n, j, n, lambda r: math.prod(r + 1 + j + (k - 1) * i for i in range(n)))
    return _result(lhs, rhs)


def check_cross_B(k: int, n: int, j: int, s: int) -> CheckResult:
    lhs = _split_sum(k, n, j, s, lambda r: math.prod(1 + r + (k - 1) * i for i in range(1, n + 1)))
    rhs = _split_sum(k, n, j, n - s, lambda r: math.prod(r + j + (k - 1) * i for i in range(n)))
    return _result(lhs, rhs)


def check_s1_specialization(k: int, n: int, j: int) -> CheckResult:
    big_n = (k - 1) * n + j
    m = k * n + j
    lhs = (big_n + 1) * math.prod(1 + (k - 1) * i for i in range(n + 1)) - (m + 1) * (k - 1) ** n * math.factorial(n)
    rhs = _split_sum(k, n, j, n - 1, lambda r: math.prod(r + 1 + j + (k - 1) * i for i in range(n)))
    return _result(lhs, rhs)


PROBLEM1_DISPLAYS = ("even-0-2n", "0-2n+1", "B-0-2n")


def check_problem1(n: int, which: str) -> CheckResult:
    """
    Constant terms of the k = 2 polynomials against their alternating-sum
    displays. ``0-2n+1`` also requires the A and B constants to agree.
    """
    if which == "even-0-2n":
        lhs = poly_A_recursive(2, 2 * n).coeff(0)
        rhs = math.factorial(n) ** 2 * _signed_sum(
            n, lambda r: _binom(2 * n + 1, n - r) * _binom(n + r, n) ** 2
        )
        return _result(lhs, rhs)
    if which == "0-2n+1":
        lhs = poly_A_recursive(2, 2 * n + 1).coeff(0)
        other = poly_B_recursive(2, 2 * n + 1).at_z1().coeff(0)
        rhs = math.factorial(n + 1) * math.factorial(n) * _signed_sum(
            n, lambda r: _binom(2 * n + 2, n - r) * _binom(n + r, n) * _binom(n + r + 1, r)
        )
        return _result(lhs, rhs, lhs == rhs == other)
    if which == "B-0-2n":
        lhs = poly_B_recursive(2, 2 * n).at_z1().coeff(0)
        rhs = math.factorial(n) ** 2 * _signed_sum(
            n, lambda r: _binom(2 * n + 1, n - r) * _binom(n + r, n) * _binom(n + r - 1, n)
        )
        return _result(lhs, rhs)
    raise ValueError(f"Unknown Problem-1 display {which!r}; expected one of {', '.join(PROBLEM1_DISPLAYS)}")


K2_FORMS = ("A-even", "A-odd", "B1-even", "B0-even", "B0-odd", "B-odd", "B-even")


def check_k2_forms(n: int, s: int) -> CheckResult:
    """
    Every k = 2 closed form at (n, s), as tuples ordered like ``K2_FORMS``.
    Forms with a 1/(s+1) factor are compared after multiplying by s + 1.
    """
    fact = math.factorial(n)
    big = math.factorial(n + 1)
    c = math.comb
    a_even = poly_A_recursive(2, 2 * n)
    a_odd = poly_A_recursive(2, 2 * n + 1)
    b_even = poly_B_recursive(2, 2 * n)
    b_odd = poly_B_recursive(2, 2 * n + 1)
    engine = (
        a_even.coeff(s),
        (s + 1) * a_odd.coeff(s),
        b_even.coeff(1, s),
        b_even.coeff(0, s),
        b_odd.coeff(0, s),
        (s + 1) * b_odd.at_z1().coeff(s),
        b_even.at_z1().coeff(s),
    )
    closed = (
        c(n, s) ** 2 * fact ** 2,
        c(n, s) ** 2 * big ** 2,
        _binom(n - 1, s) * c(n, s + 1) * fact ** 2,
        _binom(n - 1, s) * c(n, s) * fact ** 2,
        (n + 1) * c(n, s) ** 2 * fact ** 2,
        c(n, s) ** 2 * big ** 2,
        fact ** 2 * _binom(n - 1, s) * c(n + 1, s + 1),
    )
    return _result(engine, closed)


def check_omega_forms(k: int, n: int, r: int) -> CheckResult:
    return _result(omega_sum(k, n, r), omega_product(k, n, r))


def check_factorial_divisibility(k: int, n: int, j: int) -> CheckResult:
    """Remainders of every A^(k)_{kn+j} coefficient modulo ((k-1)n + j)!."""
    prefactor = math.factorial((k - 1) * n + j)
    remainders = tuple(c % prefactor for c in poly_A_recursive(k, k * n + j).coeffs)
    return _result(remainders, tuple(0 for _ in remainders))


def factorize(value: int) -> Dict[int, int]:
    """Prime factorization by trial division; fine for the small quotients checked here."""
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= value:
        while value % d == 0:
            factors[d] = factors.get(d, 0) + 1
            value //= d
        d += 1
    if value > 1:
        factors[value] = factors.get(value, 0) + 1
    return factors


def spot_52905() -> Tuple[int, Dict[int, int]]:
    """A^(3)_{4,15} / 10! and its factorization."""
    coefficient = poly_A_recursive(3, 15).coeff(4)
    quotient, remainder = divmod(coefficient, math.factorial(10))
    if remainder:
        raise ArithmeticError(f"A^(3)_(4,15) = {coefficient} is not divisible by 10!")
    return quotient, factorize(quotient)


@dataclass(frozen=True)
class SuiteRanges:
    """Sweep bounds; a negative bound sweeps nothing."""

    max_n: int = 40
    max_k: int = 6
    cross_max_n: int = 20
    problem1_max_n: int = 12
    k2_max_n: int = 8
    omega_max_k: int = 6
    omega_max_n: int = 20
    omega_max_r: int = 20

    @classmethod
    def from_config(cls, config) -> "SuiteRanges":
        """Bounds from ``IDENTITY_*`` settings; missing keys keep the defaults."""
        defaults = cls()
        return cls(**{
            name: int(config.get(key, getattr(defaults, name)))
            for name, key in CONFIG_KEYS.items()
        })

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


CONFIG_KEYS = {
    "max_n": "IDENTITY_MAX_N",
    "max_k": "IDENTITY_MAX_K",
    "cross_max_n": "IDENTITY_CROSS_MAX_N",
    "problem1_max_n": "IDENTITY_PROBLEM1_MAX_N",
    "k2_max_n": "IDENTITY_K2_MAX_N",
    "omega_max_k": "IDENTITY_OMEGA_MAX_K",
    "omega_max_n": "IDENTITY_OMEGA_MAX_N",
    "omega_max_r": "IDENTITY_OMEGA_MAX_R",
}


def _saalschutz_A_cases(ranges: SuiteRanges):
    for n in range(ranges.max_n + 1):
        for s in range(n + 1):
            for variant in (1, 2):
                yield {"n": n, "s": s, "variant": variant}, (lambda n=n, s=s, v=variant: check_saalschutz_A(n, s, v))


def _saalschutz_B_cases(ranges: SuiteRanges):
    for n in range(ranges.max_n + 1):
        for s in range(n + 1):
            yield {"n": n, "s": s, "variant": 1}, (lambda n=n, s=s: check_saalschutz_B(n, s, 1))
            if n >= 1:
                yield {"n": n, "s": s, "variant": 2}, (lambda n=n, s=s: check_saalschutz_B(n, s, 2))


def _split_grid(ranges: SuiteRanges, min_n: int = 0, min_k: int = 1) -> Iterator[Tuple[int, int, int]]:
    for k in range(min_k, ranges.max_k + 1):
        for n in range(min_n, ranges.cross_max_n + 1):
            for j in range(k):
                yield k, n, j


def _cross_A_cases(ranges: SuiteRanges):
    for k, n, j in _split_grid(ranges):
        for s in range(n + 1):
            yield {"k": k, "n": n, "j": j, "s": s}, (lambda k=k, n=n, j=j, s=s: check_cross_A(k, n, j, s))


def _cross_A_s0_cases(ranges: SuiteRanges):
    for k, n, j in _split_grid(ranges):
        yield {"k": k, "n": n, "j": j}, (lambda k=k, n=n, j=j: check_cross_A_s0(k, n, j))


def _cross_B_cases(ranges: SuiteRanges):
    for k, n, j in _split_grid(ranges, min_k=2):
        for s in range(n + 1):
            yield {"k": k, "n": n, "j": j, "s": s}, (lambda k=k, n=n, j=j, s=s: check_cross_B(k, n, j, s))


def _s1_cases(ranges: SuiteRanges):
    for k, n, j in _split_grid(ranges, min_n=1):
        yield {"k": k, "n": n, "j": j}, (lambda k=k, n=n, j=j: check_s1_specialization(k, n, j))


def _problem1_cases(ranges: SuiteRanges):
    for n in range(ranges.problem1_max_n + 1):
        for which in PROBLEM1_DISPLAYS:
            yield {"n": n, "which": which}, (lambda n=n, w=which: check_problem1(n, w))


def _k2_cases(ranges: SuiteRanges):
    for n in range(1, ranges.k2_max_n + 1):
        for s in range(n + 1):
            yield {"n": n, "s": s}, (lambda n=n, s=s: check_k2_forms(n, s))


def _omega_cases(ranges: SuiteRanges):
    for k in range(1, ranges.omega_max_k + 1):
        for n in range(1, ranges.omega_max_n + 1):
            for r in range(ranges.omega_max_r + 1):
                yield {"k": k, "n": n, "r": r}, (lambda k=k, n=n, r=r: check_omega_forms(k, n, r))


def _divisibility_cases(ranges: SuiteRanges):
    for k in range(2, ranges.max_k + 1):
        for n in range(0, 5):
            for j in range(k):
                yield {"k": k, "n": n, "j": j}, (lambda k=k, n=n, j=j: check_factorial_divisibility(k, n, j))


def _spot_cases(ranges: SuiteRanges):
    yield {}, lambda: _result(spot_52905(), (52905, {3: 1, 5: 1, 3527: 1}))


IDENTITIES: Dict[str, Callable[[SuiteRanges], Iterator]] = {
    "saalschutz-A": _saalschutz_A_cases,
    "saalschutz-B": _saalschutz_B_cases,
    "cross-A": _cross_A_cases,
    "cross-A-s0": _cross_A_s0_cases,
    "cross-B": _cross_B_cases,
    "s1-specialization": _s1_cases,
    "problem1": _problem1_cases,
    "k2-closed-forms": _k2_cases,
    "omega": _omega_cases,
    "factorial-divisibility": _divisibility_cases,
    "spot-52905": _spot_cases,
}


def run_identity(name: str, ranges: Optional[SuiteRanges] = None) -> VerificationReport:
    if name not in IDENTITIES:
        raise ValueError(f"Unknown identity {name!r}; expected one of {', '.join(IDENTITIES)}")
    ranges = ranges or SuiteRanges()
    report = VerificationReport(id=name, ranges=ranges.to_dict())
    started = time.perf_counter()
    for params, check in IDENTITIES[name](ranges):
        report.record(params, check())
    report.elapsed = time.perf_counter() - started
    if report.passed:
        logger.info(f"Identity {name}: {report.checked} checks passed in {report.elapsed:.3f}s")
    else:
        logger.error(f"Identity {name}: {len(report.failures)} of {report.checked} checks failed, "
                     f"first at {report.failures[0]['params']}")
    return report


def run_suite(ranges: Optional[SuiteRanges] = None, names: Optional[Sequence[str]] = None) -> VerificationReport:
    """Every named identity (all by default) merged into one report."""
    ranges = ranges or SuiteRanges()
    names = list(IDENTITIES) if names is None else list(names)
    logger.info(f"Running identity suite over {len(names)} identities")
    suite = VerificationReport(id="suite", ranges=ranges.to_dict())
    for name in names:
        suite.merge(run_identity(name, ranges))
    return suite
