"""Uniform sampling of digit sequences and the classical limit-law statistics.

Sampling never touches floating point: each digit is isolated by refining a
dyadic interval around a fresh uniform variate until the integer part of
M/v is unambiguous, where M - 1 is the previous digit.  Conditioned on the
digits so far, the next shifted point is exactly uniform on [0, 1/M), which
makes the digit process a Markov chain whose cylinder probabilities equal the
exact cylinder interval lengths.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .expansion import affine_map
from .intervals import IntervalExact

DIGIT_BIT_BUDGET = 4096


def child_seed(seed: int, index: int) -> int:
    """Independent per-sample stream seed derived by hashing."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest, "big")


class DigitSampler:
    """Lazily samples the digit sequence of a uniform point of (0, 1].

    State per emitted digit: the dyadic interval [a/2^k, (a+1)/2^k) that
    pinned the digit's renormalized variate, kept for exact pullback via
    constraint_interval.
    """

    def __init__(self, seed: int):
        self._rng = random.Random(seed)
        self._word: list[int] = []
        self.retries = 0
        self.bits_used = 0
        self._last_state: tuple[int, int, int] | None = None

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self._word)

    def next_digit(self) -> int:
        m_scale = (self._word[-1] + 1) if self._word else 1
        while True:
            digit, state = self._try_digit(m_scale)
            if digit is not None:
                break
            self.retries += 1
        self._word.append(digit)
        self._last_state = state
        return digit

    def _try_digit(self, m_scale: int) -> tuple[int | None, tuple[int, int, int] | None]:
        """One budgeted attempt: returns (digit, (a, k, M)) or (None, None)."""
        k = m_scale.bit_length() + 16
        a = self._rng.getrandbits(k)
        self.bits_used += k
        while True:
            if a > 0:
                # floor(scaled/a) == floor(scaled/(a+1)) iff q*(a+1) <= scaled
                # iff q <= r, so one divmod settles both floors.
                q, r = divmod(m_scale << k, a)
                if q <= r:
                    return q, (a, k, m_scale)
            if k > DIGIT_BIT_BUDGET + m_scale.bit_length():
                return None, None
            a = (a << 32) | self._rng.getrandbits(32)
            k += 32
            self.bits_used += 32

    def take(self, n: int) -> tuple[int, ...]:
        while len(self._word) < n:
            self.next_digit()
        return tuple(self._word[:n])

    def constraint_interval(self) -> IntervalExact:
        """Exact interval of points consistent with every emitted digit and
        with the final digit's refined dyadic state; a subset of the last
        digit's cylinder.  Re-expanding any point inside reproduces the word."""
        if self._last_state is None:
            raise ValueError("no digit emitted yet")
        a, k, m_scale = self._last_state
        denom = m_scale << k
        y_lo = Fraction(a, denom)
        y_hi = Fraction(a + 1, denom)
        prefix = tuple(self._word[:-1])
        if not prefix:
            return IntervalExact(y_lo, y_hi, left_open=False, right_open=True)
        lo = affine_map(prefix, y_lo)
        hi = affine_map(prefix, y_hi)
        if len(prefix) % 2:
            return IntervalExact(hi, lo, left_open=True, right_open=False)
        return IntervalExact(lo, hi, left_open=False, right_open=True)


def sample_digits(seed: int, n: int) -> tuple[int, ...]:
    """First n digits of a uniform point, deterministic in the seed."""
    if n < 1:
        raise ValueError("need n >= 1")
    return DigitSampler(seed).take(n)


# -- statistics ---------------------------------------------------------------


def _check_word(word, n: int) -> int:
    if n < 1 or len(word) < n:
        raise ValueError(f"word of length {len(word)} has no depth-{n} digit")
    return word[n - 1]


def lln_stat(word, n: int) -> float:
    """(1/n) log d_n; almost surely tends to 1."""
    return math.log(_check_word(word, n)) / n


def clt_stat(word, n: int) -> float:
    """(log d_n - n)/sqrt(n); asymptotically standard normal."""
    return (math.log(_check_word(word, n)) - n) / math.sqrt(n)


def lil_stat(word, n: int) -> float:
    """(log d_n - n)/sqrt(2n log log n); limsup 1 and liminf -1 a.s."""
    if n < 3:
        raise ValueError("iterated-logarithm scale needs n >= 3")
    d = _check_word(word, n)
    return (math.log(d) - n) / math.sqrt(2 * n * math.log(math.log(n)))


def lil_running_extremes(word) -> tuple[float, float]:
    """(max, min) of the iterated-logarithm statistic over depths 3..len."""
    if len(word) < 3:
        raise ValueError("need at least 3 digits")
    hi = -math.inf
    lo = math.inf
    for n in range(3, len(word) + 1):
        s = lil_stat(word, n)
        hi = max(hi, s)
        lo = min(lo, s)
    return hi, lo


def normal_cdf(t: float) -> float:
    """Standard normal distribution function."""
    return math.erfc(-t / math.sqrt(2)) / 2


def ks_distance(samples, cdf: Callable[[float], float]) -> float:
    """Two-sided sup distance between the empirical CDF and `cdf`."""
    if not samples:
        raise ValueError("need at least one sample")
    ordered = sorted(samples)
    n = len(ordered)
    worst = 0.0
    for i, x in enumerate(ordered):
        f = cdf(x)
        worst = max(worst, f - i / n, (i + 1) / n - f)
    return worst


# -- Monte Carlo reports --------------------------------------------------------


@dataclass(frozen=True)
class LawReport:
    law: str
    n: int
    sample_count: int
    seed: int
    statistics: list[float]
    summary: dict[str, float] = field(default_factory=dict)


def _one_sample(args) -> tuple[float, float, float, int]:
    """(statistic, lil_max, lil_min, retries) for one seeded sample."""
    law, seed, index, n = args
    sampler = DigitSampler(child_seed(seed, index))
    word = sampler.take(n)
    if law == "lln":
        stat = lln_stat(word, n)
        extremes = (0.0, 0.0)
    elif law == "clt":
        stat = clt_stat(word, n)
        extremes = (0.0, 0.0)
    else:
        stat = lil_stat(word, n)
        extremes = lil_running_extremes(word)
    return stat, extremes[0], extremes[1], sampler.retries


def _quantile(ordered: list[float], q: float) -> float:
    pos = q * (len(ordered) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(ordered) - 1)
    return ordered[lo] + (pos - lo) * (ordered[hi] - ordered[lo])


def run_law(law: str, seed: int, n: int, count: int, workers: int = 1) -> LawReport:
    """Monte Carlo sweep of one law statistic at depth n over `count`
    independently seeded samples.  Deterministic in (law, seed, n, count)
    regardless of worker count."""
    if law not in ("lln", "clt", "lil"):
        raise ValueError(f"unknown law {law!r}")
    if count < 1:
        raise ValueError("need count >= 1")
    if n < 1 or (law == "lil" and n < 3):
        raise ValueError(f"depth {n} too small for {law}")
    jobs = [(law, seed, i, n) for i in range(count)]
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_one_sample, jobs)
    else:
        rows = [_one_sample(job) for job in jobs]
    stats = [r[0] for r in rows]
    ordered = sorted(stats)
    summary: dict[str, float] = {
        "mean": sum(stats) / count,
        "q05": _quantile(ordered, 0.05),
        "q25": _quantile(ordered, 0.25),
        "median": _quantile(ordered, 0.50),
        "q75": _quantile(ordered, 0.75),
        "q95": _quantile(ordered, 0.95),
        "refinement_retries": float(sum(r[3] for r in rows)),
    }
    if law == "clt":
        summary["ks_distance"] = ks_distance(stats, normal_cdf)
    if law == "lil":
        in_band = sum(
            1 for r in rows if 0 < r[1] < 3 and -3 < r[2] < 0
        )
        summary["extremes_in_band_fraction"] = in_band / count
    return LawReport(
        law=law, n=n, sample_count=count, seed=seed, statistics=stats, summary=summary
    )
