"""Sample summaries and the two-sample t test.

P values come from the Student t CDF, which reduces to the regularized
incomplete beta function I_x(df/2, 1/2) at x = df / (df + t^2). The
incomplete beta is evaluated with the modified Lentz continued fraction,
switching to the symmetric form 1 - I_{1-x}(b, a) past
x = (a + 1) / (a + b + 2). Iteration stops when the running factor is
within 1e-12 of one; exhausting 300 iterations raises instead of
returning a half-converged value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import ArgumentError, DegenerateTestError, NumericalError

TTEST_KINDS = ("welch", "pooled")

_BETA_TOL = 1e-12
_BETA_MAX_ITER = 300
_FPMIN = 1e-300


@dataclass(frozen=True)
class SampleSummary:
    """n, mean and sample standard deviation (divisor n - 1)."""

    n: int
    mean: float
    sd: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ArgumentError("n must be >= 1")
        if self.sd < 0:
            raise ArgumentError("sd must be non-negative")


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: float
    p_two_sided: float
    kind: str

    def __post_init__(self) -> None:
        if not 0 <= self.p_two_sided <= 1:
            raise ArgumentError("p must lie in [0, 1]")
        if not self.df > 0:
            raise ArgumentError("df must be positive")


def summarize(xs: Iterable[float]) -> SampleSummary:
    values = [float(x) for x in xs]
    if not values:
        raise ArgumentError("cannot summarize an empty sample")
    if not all(math.isfinite(v) for v in values):
        raise ArgumentError("sample contains a non-finite value")
    n = len(values)
    mean = math.fsum(values) / n
    if n == 1:
        sd = 0.0
    else:
        sd = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (n - 1))
    return SampleSummary(n=n, mean=mean, sd=sd)


def _beta_cont_fraction(a: float, b: float, x: float) -> float:
    """Lentz evaluation of the incomplete beta continued fraction."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_TOL:
            return h
    raise NumericalError(
        f"incomplete beta continued fraction did not converge in "
        f"{_BETA_MAX_ITER} iterations (a={a}, b={b}, x={x})"
    )


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ArgumentError("beta parameters must be positive")
    if not 0 <= x <= 1:
        raise ArgumentError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cont_fraction(a, b, x) / a
    return 1.0 - front * _beta_cont_fraction(b, a, 1.0 - x) / b


def student_t_cdf(t: float, df: float) -> float:
    """P(T <= t) for Student's t with ``df`` degrees of freedom."""
    if not df > 0:
        raise ArgumentError(f"df must be positive, got {df}")
    if math.isnan(t):
        raise ArgumentError("t must not be NaN")
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    if t == 0.0:
        return 0.5
    x = df / (df + t * t)
    tail = regularized_incomplete_beta(df / 2.0, 0.5, x)  # = 2 P(T > |t|)
    return 1.0 - 0.5 * tail if t > 0 else 0.5 * tail


def two_sample_ttest(
    a: Iterable[float], b: Iterable[float], kind: str = "welch"
) -> TTestResult:
    """Two-sided two-sample t test.

    "welch" (default) uses the unequal-variance statistic with
    Welch-Satterthwaite degrees of freedom; "pooled" is the classic
    equal-variance Student test. Each sample needs n >= 2. Two constant
    samples with equal means leave the statistic undefined and raise
    :class:`DegenerateTestError`; with different means the result is
    reported as infinitely significant (t = +/-inf, p = 0).
    """
    if kind not in TTEST_KINDS:
        raise ArgumentError(f"kind must be one of {TTEST_KINDS}, got {kind!r}")
    sa = summarize(a)
    sb = summarize(b)
    if sa.n < 2 or sb.n < 2:
        raise ArgumentError("each sample needs at least 2 observations")
    va = sa.sd**2
    vb = sb.sd**2
    diff = sa.mean - sb.mean

    if kind == "welch":
        sea = va / sa.n
        seb = vb / sb.n
        se2 = sea + seb
        if se2 == 0.0:
            return _degenerate(diff, sa.n + sb.n - 2, kind)
        t = diff / math.sqrt(se2)
        # normalized form of Welch-Satterthwaite; the shares ra, rb sum to
        # one, so neither squaring can underflow the denominator to zero
        ra = sea / se2
        rb = seb / se2
        df = 1.0 / (ra**2 / (sa.n - 1) + rb**2 / (sb.n - 1))
    else:
        pooled = ((sa.n - 1) * va + (sb.n - 1) * vb) / (sa.n + sb.n - 2)
        df = float(sa.n + sb.n - 2)
        if pooled == 0.0:
            return _degenerate(diff, df, kind)
        t = diff / math.sqrt(pooled * (1.0 / sa.n + 1.0 / sb.n))

    if t == 0.0:
        p = 1.0
    else:
        # two-sided p = 2 P(T > |t|) = I_x(df/2, 1/2) directly
        p = regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t))
    p = min(max(p, 0.0), 1.0)
    return TTestResult(t=t, df=df, p_two_sided=p, kind=kind)


def _degenerate(diff: float, df: float, kind: str) -> TTestResult:
    if diff == 0.0:
        raise DegenerateTestError(
            "both samples are constant with equal means; t is undefined"
        )
    return TTestResult(t=math.copysign(math.inf, diff), df=float(df), p_two_sided=0.0, kind=kind)
