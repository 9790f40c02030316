"""
Sweeps that compare independent computations of the same distribution.

``verify_methods`` checks brute force, recursion and the closed forms
coefficient by coefficient. The ``check_*`` helpers exercise the
symmetries and bijections exhaustively on small symmetric groups.
"""

import logging
import math
import time
from typing import Iterable, List, Optional, Sequence

from app.services import closed_forms as cf
from app.services.bijections import bij01, bij01_inverse, bij02, bij02_inverse, complement, star
from app.services.identities import CheckResult, VerificationReport
from app.services.oracle import DEFAULT_MAX_N, poly_A_bruteforce, poly_B_bruteforce
from app.services.recursion import poly_A_recursive, poly_B_recursive
from app.utils.permutations import StatConfig, all_permutations, des_left, des_right, first_in_class

logger = logging.getLogger(__name__)


def palindromic(coeffs: Sequence[int], window: int) -> bool:
    """True when coeffs[d] == coeffs[window - d] for 0 <= d <= window (missing entries are 0)."""

    def at(d):
        return coeffs[d] if 0 <= d < len(coeffs) else 0

    return all(at(d) == at(window - d) for d in range(window + 1))


def _compare(report: VerificationReport, k: int, length: int, method: str, got: Sequence[int],
             expected: Sequence[int], z: Optional[int] = None):
    """Record one check per x-degree; mismatches carry (k, n, j, s, method, value)."""
    n, j = divmod(length, k)
    for s in range(n + 1):
        value = got[s] if s < len(got) else 0
        want = expected[s] if s < len(expected) else 0
        params = {"k": k, "length": length, "n": n, "j": j, "s": s, "method": method}
        if z is not None:
            params["z"] = z
        report.record(params, CheckResult(value, want, value == want))


def verify_methods(k_values: Iterable[int], lengths: Iterable[int], jobs: int = 1,
                   oracle_max_n: Optional[int] = None) -> VerificationReport:
    """
    Recursion is the reference. Brute force joins for lengths within the
    enumeration guard; larger lengths are compared between the remaining
    methods only.
    """
    k_values = list(k_values)
    lengths = list(lengths)
    guard = DEFAULT_MAX_N if oracle_max_n is None else oracle_max_n
    report = VerificationReport(id="verify", ranges={"k": k_values, "lengths": lengths})
    started = time.perf_counter()
    logger.info(f"Cross-verifying k={k_values} over lengths {lengths[:1]}..{lengths[-1:]}")

    for k in k_values:
        for length in lengths:
            n, j = divmod(length, k)
            use_oracle = length <= guard
            if not use_oracle:
                logger.debug(f"Skipping brute force at k={k}, length={length}: above guard {guard}")

            reference = poly_A_recursive(k, length).to_list()
            if use_oracle:
                _compare(report, k, length, "oracle", poly_A_bruteforce(k, length, jobs, guard).to_list(), reference)
            _compare(report, k, length, cf.FormulaId.A_INCL_EXCL.value,
                     [cf.coefficient(cf.FormulaId.A_INCL_EXCL, k, n, j, s) for s in range(n + 1)], reference)
            _compare(report, k, length, cf.FormulaId.A_DUAL.value,
                     [cf.coefficient(cf.FormulaId.A_DUAL, k, n, j, s) for s in range(n + 1)], reference)

            if k < 2:
                continue
            split = poly_B_recursive(k, length)
            total = split.at_z1().to_list()
            if use_oracle:
                brute = poly_B_bruteforce(k, length, jobs, guard)
                _compare(report, k, length, "oracle", brute.z0.to_list(), split.z0.to_list(), z=0)
                _compare(report, k, length, "oracle", brute.z1.to_list(), split.z1.to_list(), z=1)
            for formula in (cf.FormulaId.B_TOTAL_DUAL, cf.FormulaId.B_TOTAL_INCL_EXCL):
                _compare(report, k, length, formula.value,
                         [cf.coefficient(formula, k, n, j, s) for s in range(n + 1)], total)
            z0, z1 = cf.closed_B_split_coefficients(k, length)
            _compare(report, k, length, cf.FormulaId.B0_FORM.value, z0, split.z0.to_list(), z=0)
            _compare(report, k, length, cf.FormulaId.B1_FORM.value, z1, split.z1.to_list(), z=1)
            _compare(report, k, length, "B0+B1", [a + b for a, b in zip(z0, z1)], total)

    report.elapsed = time.perf_counter() - started
    _log_outcome(report)
    return report


def _log_outcome(report: VerificationReport):
    if report.passed:
        logger.info(f"{report.id}: {report.checked} checks passed in {report.elapsed:.3f}s")
    else:
        logger.error(f"{report.id}: {len(report.failures)} of {report.checked} checks failed")


def check_complement_symmetries(k: int, n: int) -> VerificationReport:
    """
    At length kn + k - 1 complement keeps the class positions and flips every
    class letter between descent and ascent, so

        des_right(p) + des_right(p^c) == n - first_in_class(p)
        des_left(p) + des_left(p^c) == n - [last letter in class]

    B0 is then palindromic in the window n and B1 in the window n - 1. The A
    distribution is not palindromic at these lengths (A^(3)_5 = 72 + 48x).
    """
    length = k * n + k - 1
    left, right = StatConfig.left(k), StatConfig.right(k)
    report = VerificationReport(id="complement-symmetries", ranges={"k": k, "n": n, "length": length})
    started = time.perf_counter()
    for p in all_permutations(length):
        image = complement(p)
        params = {"k": k, "n": n, "perm": str(p)}
        same = all((a % k == 0) == (b % k == 0) for a, b in zip(p, image))
        report.record({**params, "check": "class-positions"}, CheckResult(same, True, same))
        right_sum = des_right(p, right) + des_right(image, right)
        expected = n - first_in_class(p, right)
        report.record({**params, "check": "right"}, CheckResult(right_sum, expected, right_sum == expected))
        left_sum = des_left(p, left) + des_left(image, left)
        last = 1 if left.in_class(p[-1]) else 0
        report.record({**params, "check": "left"}, CheckResult(left_sum, n - last, left_sum == n - last))

    b_dist = poly_B_bruteforce(k, length, max_n=length)
    for label, coeffs, window in (("B0", b_dist.z0.to_list(), n), ("B1", b_dist.z1.to_list(), n - 1)):
        ok = palindromic(coeffs, window)
        report.record({"k": k, "n": n, "distribution": label}, CheckResult(coeffs, window, ok))
    report.elapsed = time.perf_counter() - started
    return report


def check_star_transport(k: int, n: int) -> VerificationReport:
    """des_left(p) == des_right(star(p)) for every p of length kn + k - 1."""
    length = k * n + k - 1
    left, right = StatConfig.left(k), StatConfig.right(k)
    report = VerificationReport(id="star-transport", ranges={"k": k, "n": n, "length": length})
    started = time.perf_counter()
    images = set()
    for p in all_permutations(length):
        image = star(p)
        images.add(image)
        before, after = des_left(p, left), des_right(image, right)
        report.record({"k": k, "n": n, "perm": str(p)}, CheckResult(before, after, before == after))
    total = math.factorial(length)
    report.record({"k": k, "n": n, "check": "bijective"}, CheckResult(len(images), total, len(images) == total))
    report.elapsed = time.perf_counter() - started
    return report


def check_bij01(k: int, n: int) -> VerificationReport:
    """Statistic j goes to n - j, the map is onto S_L and the inverse undoes it."""
    length = k * n + k - 2
    cfg = StatConfig.left(k)
    report = VerificationReport(id="bij01", ranges={"k": k, "n": n, "length": length})
    started = time.perf_counter()
    images = set()
    for p in all_permutations(length):
        image = bij01(p, k)
        images.add(image)
        j = des_left(p, cfg)
        got = des_left(image, cfg)
        report.record({"k": k, "n": n, "perm": str(p), "check": "statistic"}, CheckResult(got, n - j, got == n - j))
        back = bij01_inverse(image, k)
        report.record({"k": k, "n": n, "perm": str(p), "check": "inverse"}, CheckResult(str(back), str(p), back == p))
    total = math.factorial(length)
    report.record({"k": k, "n": n, "check": "bijective"}, CheckResult(len(images), total, len(images) == total))
    closed = cf.closed_A_coefficients(k, length)
    report.record({"k": k, "n": n, "check": "palindromic"}, CheckResult(closed, n, palindromic(closed, n)))
    report.elapsed = time.perf_counter() - started
    return report


def check_bij02(k: int, n: int) -> VerificationReport:
    """
    The image has des_right = j - flag with flag = first letter in class, and
    the counts split as A_j = B0_j + B1_(j-1).
    """
    length = k * n + k - 2
    left, right = StatConfig.left(k), StatConfig.right(k)
    report = VerificationReport(id="bij02", ranges={"k": k, "n": n, "length": length})
    started = time.perf_counter()
    images = set()
    for p in all_permutations(length):
        image, flag = bij02(p, k)
        images.add(image)
        j = des_left(p, left)
        got = des_right(image, right)
        ok = got == j - flag and flag == first_in_class(image, right)
        report.record({"k": k, "n": n, "perm": str(p), "check": "statistic"}, CheckResult((got, flag), j, ok))
        back = bij02_inverse(image, k)
        report.record({"k": k, "n": n, "perm": str(p), "check": "inverse"}, CheckResult(str(back), str(p), back == p))
    total = math.factorial(length)
    report.record({"k": k, "n": n, "check": "bijective"}, CheckResult(len(images), total, len(images) == total))

    a_dist = poly_A_recursive(k, length)
    b_dist = poly_B_recursive(k, length)
    for j in range(n + 1):
        split = b_dist.coeff(0, j) + b_dist.coeff(1, j - 1)
        report.record({"k": k, "n": n, "j": j, "check": "decomposition"},
                      CheckResult(a_dist.coeff(j), split, a_dist.coeff(j) == split))
    report.elapsed = time.perf_counter() - started
    return report


def bijection_lengths(k: int, max_length: int, offset: int) -> List[int]:
    """Every n >= 0 with k*n + k - offset <= max_length."""
    return [n for n in range(max_length + 1) if k * n + k - offset <= max_length and k * n + k - offset >= 0]


def run_bijection_checks(k_values: Iterable[int], max_length: int) -> VerificationReport:
    """All symmetry and bijection checks at every valid length up to ``max_length``."""
    suite = VerificationReport(id="bijection-check", ranges={"max_length": max_length})
    k_values = list(k_values)
    suite.ranges["k"] = k_values
    for k in k_values:
        if k < 2:
            continue
        for n in bijection_lengths(k, max_length, 1):
            suite.merge(check_complement_symmetries(k, n))
            suite.merge(check_star_transport(k, n))
        if k < 3:
            continue
        for n in bijection_lengths(k, max_length, 2):
            suite.merge(check_bij01(k, n))
            suite.merge(check_bij02(k, n))
    _log_outcome(suite)
    return suite

