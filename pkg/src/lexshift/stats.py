"""Descriptive statistics and the two-sample test-selection procedure.

The routing mirrors the usual small-sample protocol: Shapiro-Wilk normality
checks on both samples gate the choice between a t test and Mann-Whitney U;
when both samples look normal, a median-centered Levene (Brown-Forsythe)
check decides between the pooled Student and the Welch variant.

All tests are implemented here rather than delegated, so each one can be
validated against an independent oracle:

* Shapiro-Wilk follows Royston's AS R94 approximation (weights from normal
  scores, p from the n-dependent normalizing transformation).
* t and F tail probabilities come from the regularized incomplete beta
  function in ``_special``.
* The exact Mann-Whitney p enumerates the null distribution of the rank sum
  (a counting recurrence equivalent to enumerating all labelings), used for
  tie-free pooled samples of at most 20 values; larger or tied samples use
  the normal approximation with tie and continuity corrections.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._special import f_sf, norm_cdf, norm_ppf, norm_sf, student_t_two_tailed_p
from .errors import DegenerateSample, EmptySample, SampleTooSmall

STUDENT_T = "student_t"
WELCH_T = "welch_t"
MANN_WHITNEY_U = "mann_whitney_u"
SHAPIRO_WILK = "shapiro_wilk"
LEVENE = "levene"


@dataclass(frozen=True)
class Sample:
    values: tuple[float, ...]
    label: str = ""

    def __init__(self, values, label=""):
        vals = tuple(float(v) for v in values)
        for v in vals:
            if not math.isfinite(v):
                raise ValueError(f"non-finite sample value {v!r}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "label", label)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True, slots=True)
class DescriptiveStats:
    n: int
    mean: float
    sd: float
    median: float
    iqr: float


@dataclass(frozen=True, slots=True)
class TestResult:
    method: str
    statistic: float
    df: float | None
    p_value: float
    alpha: float
    significant: bool


@dataclass(frozen=True, slots=True)
class ComparisonPlan:
    normality_alpha: float = 0.05
    variance_alpha: float = 0.05
    test_alpha: float = 0.05

    def __post_init__(self):
        for name in ("normality_alpha", "variance_alpha", "test_alpha"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise ValueError(f"{name} must be in (0, 1), got {v}")


def _result(method, statistic, df, p, alpha):
    return TestResult(method, float(statistic), df, float(p), alpha, p < alpha)


def _median(sorted_vals):
    n = len(sorted_vals)
    mid = n // 2
    if n % 2:
        return float(sorted_vals[mid])
    return (sorted_vals[mid - 1] + sorted_vals[mid]) / 2.0


def describe(sample: Sample) -> DescriptiveStats:
    """Mean, sample SD (n-1), median, and Tukey-hinge IQR.

    The hinges are the medians of the lower and upper halves of the sorted
    data, excluding the overall median itself when n is odd.
    """
    n = len(sample)
    if n == 0:
        raise EmptySample("describe needs at least one value")
    vals = sorted(sample.values)
    mean = float(np.mean(vals))
    sd = float(np.std(vals, ddof=1)) if n > 1 else 0.0
    median = _median(vals)
    half = n // 2
    iqr = (_median(vals[n - half:]) - _median(vals[:half])) if half else 0.0
    return DescriptiveStats(n, mean, sd, median, iqr)


# --- Shapiro-Wilk (Royston 1995, AS R94) ------------------------------------

_SW_C1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_SW_C2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)
_SW_C3 = (0.5440, -0.39978, 0.025054, -6.714e-4)
_SW_C4 = (1.3822, -0.77857, 0.062767, -0.0020322)
_SW_C5 = (-1.5861, -0.31082, -0.083751, 0.0038915)
_SW_C6 = (-0.4803, -0.082676, 0.0030302)
_SW_G = (-2.273, 0.459)
_SW_PMIN = 1e-19


def _poly(coeffs, x):
    r = 0.0
    for c in reversed(coeffs):
        r = r * x + c
    return r


def _shapiro_w(values):
    """W statistic and p-value for a sorted-able, non-constant sample."""
    x = sorted(values)
    n = len(x)
    if n == 3:
        numerator = (math.sqrt(0.5) * (x[2] - x[0])) ** 2
    else:
        m = [norm_ppf((i - 0.375) / (n + 0.25)) for i in range(1, n + 1)]
        ssq_m = sum(v * v for v in m)
        rsn = 1.0 / math.sqrt(n)
        a_n = _poly(_SW_C1, rsn) + m[-1] / math.sqrt(ssq_m)
        if n > 5:
            a_n1 = _poly(_SW_C2, rsn) + m[-2] / math.sqrt(ssq_m)
            phi = ((ssq_m - 2.0 * m[-1] ** 2 - 2.0 * m[-2] ** 2)
                   / (1.0 - 2.0 * a_n ** 2 - 2.0 * a_n1 ** 2))
            a = [v / math.sqrt(phi) for v in m]
            a[-2], a[1] = a_n1, -a_n1
        else:
            phi = (ssq_m - 2.0 * m[-1] ** 2) / (1.0 - 2.0 * a_n ** 2)
            a = [v / math.sqrt(phi) for v in m]
        a[-1], a[0] = a_n, -a_n
        numerator = sum(ai * xi for ai, xi in zip(a, x)) ** 2
    mean = sum(x) / n
    ssq = sum((xi - mean) ** 2 for xi in x)
    w = min(numerator / ssq, 1.0)

    if n == 3:
        p = (6.0 / math.pi) * (math.asin(math.sqrt(w)) - math.asin(math.sqrt(0.75)))
        return w, min(max(p, 0.0), 1.0)
    w1 = 1.0 - w
    if w1 <= 0.0:
        return w, 1.0
    y = math.log(w1)
    if n <= 11:
        gamma = _poly(_SW_G, float(n))
        if y >= gamma:
            return w, _SW_PMIN
        y = -math.log(gamma - y)
        mu = _poly(_SW_C3, float(n))
        sigma = math.exp(_poly(_SW_C4, float(n)))
    else:
        ln_n = math.log(n)
        mu = _poly(_SW_C5, ln_n)
        sigma = math.exp(_poly(_SW_C6, ln_n))
    return w, norm_sf((y - mu) / sigma)


def shapiro_wilk(sample: Sample, alpha: float = 0.05) -> TestResult:
    """Shapiro-Wilk normality test; significant means normality rejected."""
    n = len(sample)
    if n < 3 or n > 5000:
        raise SampleTooSmall(f"Shapiro-Wilk needs 3 <= n <= 5000, got {n}")
    if max(sample.values) == min(sample.values):
        raise DegenerateSample("all sample values identical")
    w, p = _shapiro_w(sample.values)
    return _result(SHAPIRO_WILK, w, None, p, alpha)


# --- Levene / Brown-Forsythe -------------------------------------------------

def variance_equal_test(a: Sample, b: Sample, alpha: float = 0.05) -> TestResult:
    """Median-centered Levene test of equal variances (Brown-Forsythe).

    df holds the denominator degrees of freedom n1 + n2 - 2; the numerator
    df is 1 for two groups.
    """
    if len(a) < 3 or len(b) < 3:
        raise SampleTooSmall("variance test needs n >= 3 in both samples")
    groups = [np.asarray(a.values), np.asarray(b.values)]
    z = [np.abs(g - np.median(g)) for g in groups]
    zbars = [g.mean() for g in z]
    grand = float(np.concatenate(z).mean())
    n_total = sum(len(g) for g in groups)
    k = len(groups)
    numer = sum(len(g) * (zb - grand) ** 2 for g, zb in zip(z, zbars))
    denom = sum(float(((g - zb) ** 2).sum()) for g, zb in zip(z, zbars))
    df = float(n_total - k)
    if denom == 0.0:
        if numer == 0.0:
            return _result(LEVENE, 0.0, df, 1.0, alpha)
        return _result(LEVENE, math.inf, df, 0.0, alpha)
    stat = df / (k - 1) * numer / denom
    return _result(LEVENE, stat, df, f_sf(stat, k - 1, n_total - k), alpha)


# --- two-sample t ------------------------------------------------------------

def two_sample_t(a: Sample, b: Sample, variant: str = "student",
                 alpha: float = 0.05) -> TestResult:
    """Two-tailed independent two-sample t test (pooled or Welch)."""
    if variant not in ("student", "welch"):
        raise ValueError(f"variant must be 'student' or 'welch', got {variant!r}")
    n1, n2 = len(a), len(b)
    if n1 < 2 or n2 < 2:
        raise SampleTooSmall("t test needs n >= 2 in both samples")
    m1, m2 = float(np.mean(a.values)), float(np.mean(b.values))
    v1 = float(np.var(a.values, ddof=1))
    v2 = float(np.var(b.values, ddof=1))
    if variant == "student":
        df = float(n1 + n2 - 2)
        pooled = ((n1 - 1) * v1 + (n2 - 1) * v2) / df
        if pooled <= 0.0:
            raise DegenerateSample("pooled variance is zero")
        se = math.sqrt(pooled * (1.0 / n1 + 1.0 / n2))
        method = STUDENT_T
    else:
        q1, q2 = v1 / n1, v2 / n2
        if q1 + q2 <= 0.0:
            raise DegenerateSample("both sample variances are zero")
        se = math.sqrt(q1 + q2)
        df = (q1 + q2) ** 2 / (q1 ** 2 / (n1 - 1) + q2 ** 2 / (n2 - 1))
        method = WELCH_T
    t = (m1 - m2) / se
    return _result(method, t, df, student_t_two_tailed_p(t, df), alpha)


# --- Mann-Whitney U ----------------------------------------------------------

def _average_ranks(pooled):
    n = len(pooled)
    order = sorted(range(n), key=lambda i: pooled[i])
    ranks = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_u_p(u: int, n1: int, n2: int) -> float:
    """Exact two-tailed p over the tie-free null distribution of U.

    counts[k][s] = number of k-subsets of ranks {1..N} with rank sum s;
    summing both tails of the implied U distribution reproduces full
    enumeration of all C(N, n1) labelings.
    """
    n_total = n1 + n2
    max_sum = n1 * (2 * n_total - n1 + 1) // 2
    counts = [[0] * (max_sum + 1) for _ in range(n1 + 1)]
    counts[0][0] = 1
    for r in range(1, n_total + 1):
        for k in range(min(r, n1), 0, -1):
            prev, cur = counts[k - 1], counts[k]
            for s in range(max_sum, r - 1, -1):
                if prev[s - r]:
                    cur[s] += prev[s - r]
    offset = n1 * (n1 + 1) // 2
    u_max = n1 * n2
    dist = [0] * (u_max + 1)
    for s in range(offset, max_sum + 1):
        dist[s - offset] = counts[n1][s]
    total = sum(dist)
    lower = sum(dist[v] for v in range(0, u + 1))
    upper = sum(dist[v] for v in range(u_max - u, u_max + 1))
    return min(1.0, (lower + upper) / total)


def _approx_u_p(u: float, n1: int, n2: int, pooled) -> float:
    """Normal approximation with tie and continuity corrections."""
    n_total = n1 + n2
    tie_term = 0.0
    seen = {}
    for v in pooled:
        seen[v] = seen.get(v, 0) + 1
    for t in seen.values():
        tie_term += t ** 3 - t
    var = n1 * n2 / 12.0 * ((n_total + 1) - tie_term / (n_total * (n_total - 1)))
    if var <= 0.0:
        return 1.0
    z = (u - n1 * n2 / 2.0 + 0.5) / math.sqrt(var)
    return min(1.0, 2.0 * norm_cdf(z))


def mann_whitney_u(a: Sample, b: Sample, alpha: float = 0.05,
                   method: str = "auto") -> TestResult:
    """Two-tailed Mann-Whitney U test, U = min(U1, U2).

    method: 'auto' picks 'exact' for tie-free pooled samples of at most 20
    values and 'approx' otherwise; 'exact'/'approx' force the choice.
    """
    n1, n2 = len(a), len(b)
    if n1 < 3 or n2 < 3:
        raise SampleTooSmall("Mann-Whitney needs n >= 3 in both samples")
    pooled = a.values + b.values
    ranks = _average_ranks(pooled)
    r1 = sum(ranks[:n1])
    u1 = n1 * n2 + n1 * (n1 + 1) / 2.0 - r1
    u2 = n1 * n2 - u1
    u = min(u1, u2)
    has_ties = len(set(pooled)) < len(pooled)
    if method == "auto":
        method = "exact" if (n1 + n2 <= 20 and not has_ties) else "approx"
    if method == "exact":
        if has_ties:
            raise ValueError("exact Mann-Whitney p requires tie-free data")
        p = _exact_u_p(int(round(u)), n1, n2)
    elif method == "approx":
        p = _approx_u_p(u, n1, n2, pooled)
    else:
        raise ValueError(f"method must be auto, exact or approx, got {method!r}")
    return _result(MANN_WHITNEY_U, u, None, p, alpha)


# --- routing -----------------------------------------------------------------

def compare_samples(a: Sample, b: Sample,
                    plan: ComparisonPlan | None = None) -> TestResult:
    """Normality- and variance-gated two-sample comparison.

    Both samples normal: Student t if the variance test passes, else Welch.
    Any normality rejection: Mann-Whitney U. The chosen method is recorded
    in the result; significance is judged at plan.test_alpha.
    """
    plan = plan or ComparisonPlan()
    norm_a = shapiro_wilk(a, alpha=plan.normality_alpha)
    norm_b = shapiro_wilk(b, alpha=plan.normality_alpha)
    if norm_a.significant or norm_b.significant:
        return mann_whitney_u(a, b, alpha=plan.test_alpha)
    spread = variance_equal_test(a, b, alpha=plan.variance_alpha)
    variant = "welch" if spread.significant else "student"
    return two_sample_t(a, b, variant, alpha=plan.test_alpha)
