"""Growth profiles and per-level digit bounds.

A growth profile is an immutable description of a positive sequence, with an
exact-rational evaluation path where the formula allows one and certified
high-precision paths (floor, log, interval enclosure) everywhere else.  A
bounds profile pairs two growth profiles (l, r) and constrains digits by
l(n) < d_n <= r(n); `find_threshold` locates the splice index beyond which the
three admissibility conditions

    (i)   r(n) - l(n) >= 2
    (ii)  r(n+1) <= 2*l(n+1) - 1
    (iii) r(n) <= l(n+1)

hold, so that a 2n / 2(n+1) prefix can be glued in front of the rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath

from ._precision import PrecisionError, certified_floor, certified_sign, iv_from_fraction

DEFAULT_WINDOW = 10_000

_KINDS = (
    "power",
    "sqrt",
    "log",
    "linear_log",
    "exponential",
    "table",
    "lil",
    "deviation",
    "affine",
    "index_scaled",
    "exp_of",
    "exp_of_scaled",
    "piecewise",
)


def _as_exact(v: Any) -> Fraction | None:
    """Fraction view of a parameter when it is exactly rational."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    return None


def _mpf(v: Any) -> mpmath.mpf:
    """mpf conversion that also accepts exact rationals."""
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def _ivnum(iv, v: Any):
    """Interval conversion that also accepts exact rationals."""
    if isinstance(v, Fraction):
        return iv_from_fraction(iv, v)
    return iv.mpf(v)


def _encode_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def _decode_value(v: Any) -> Any:
    if isinstance(v, str) and "/" in v:
        num, den = v.split("/", 1)
        return Fraction(int(num), int(den))
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float) and v == math.inf:
        return math.inf
    return v


def _encode_tag(v: Any) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if isinstance(v, Fraction):
        return _encode_value(v)
    return v


def _decode_tag(v: Any) -> Any:
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    if isinstance(v, str):
        return float(Fraction(v))
    return v


class ProfileError(ValueError):
    """Profile parameters outside their documented domain."""


@dataclass(frozen=True)
class GrowthProfile:
    """One positive sequence n -> value, n >= min_index.

    kinds and parameters:
      power        coeff * n**a + shift          (a, coeff, shift)
      sqrt         coeff * sqrt(n)               (coeff)
      log          coeff * log(n)                (coeff); positive from n = 2
      linear_log   n * log(a)                    (a > 1)
      exponential  coeff * a**n + shift          (a, coeff, shift)
      table        values[n-1]                   (values)
      lil          1, 2, then sqrt(2n log log n)
      deviation    n + beta * psi(n)             (beta, psi)
      affine       a*n + b                       (a, b)
      index_scaled (n + offset) * u(n)           (u, offset)
      exp_of       exp(g(n))                     (inner)
      exp_of_scaled exp(g(n)) * (1 + psi(n)/n)   (inner, psi)
      piecewise    low(n) if n <= split else high(n)

    `analytic` carries externally known limit values (keys among gamma, xi,
    theta, eta, psi_conditions) for catalog entries; user-built profiles leave
    it empty and get window estimates instead.
    """

    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    analytic: dict[str, float] = field(default_factory=dict)
    label: str = ""
    min_index: int = 1

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ProfileError(f"unknown profile kind {self.kind!r}")

    # -- exact path -------------------------------------------------------

    def value(self, n: int) -> Fraction | None:
        """Exact value at n, or None when the formula is not rational."""
        self._check_index(n)
        k, p = self.kind, self.params
        if k == "power":
            a = _as_exact(p["a"])
            coeff = _as_exact(p.get("coeff", 1))
            shift = _as_exact(p.get("shift", 0))
            if a is None or coeff is None or shift is None or a.denominator != 1 or a < 0:
                return None
            return coeff * Fraction(n) ** int(a) + shift
        if k == "exponential":
            a = _as_exact(p["a"])
            coeff = _as_exact(p.get("coeff", 1))
            shift = _as_exact(p.get("shift", 0))
            if a is None or coeff is None or shift is None:
                return None
            return coeff * a**n + shift
        if k == "table":
            return Fraction(p["values"][n - 1])
        if k == "affine":
            a, b = _as_exact(p["a"]), _as_exact(p.get("b", 0))
            if a is None or b is None:
                return None
            return a * n + b
        if k == "deviation":
            beta = _as_exact(p["beta"])
            inner = p["psi"].value(n)
            if beta is None or inner is None:
                return None
            return n + beta * inner
        if k == "index_scaled":
            u = p["u"].value(n)
            if u is None:
                return None
            return (n + p.get("offset", 0)) * u
        if k == "piecewise":
            branch = p["low"] if n <= p["split"] else p["high"]
            return branch.value(n)
        if k == "lil" and n <= 2:
            return Fraction(n)
        return None

    # -- floating paths ---------------------------------------------------

    def mp_value(self, n: int) -> mpmath.mpf:
        """Value at n as an mpf under the caller's mpmath precision."""
        self._check_index(n)
        exact = self.value(n)
        if exact is not None:
            return mpmath.mpf(exact.numerator) / exact.denominator
        k, p = self.kind, self.params
        if k == "power":
            return (
                _mpf(p.get("coeff", 1)) * mpmath.power(n, _mpf(p["a"]))
                + _mpf(p.get("shift", 0))
            )
        if k == "sqrt":
            return _mpf(p.get("coeff", 1)) * mpmath.sqrt(n)
        if k == "log":
            return _mpf(p["coeff"]) * mpmath.log(n)
        if k == "linear_log":
            return n * mpmath.log(_mpf(p["a"]))
        if k == "exponential":
            return (
                _mpf(p.get("coeff", 1)) * mpmath.power(_mpf(p["a"]), n)
                + _mpf(p.get("shift", 0))
            )
        if k == "lil":
            return mpmath.sqrt(2 * n * mpmath.log(mpmath.log(n)))
        if k == "deviation":
            return n + _mpf(p["beta"]) * p["psi"].mp_value(n)
        if k == "index_scaled":
            return (n + p.get("offset", 0)) * p["u"].mp_value(n)
        if k == "exp_of":
            return mpmath.exp(p["inner"].mp_value(n))
        if k == "exp_of_scaled":
            return mpmath.exp(p["inner"].mp_value(n)) * (1 + p["psi"].mp_value(n) / n)
        if k == "piecewise":
            branch = p["low"] if n <= p["split"] else p["high"]
            return branch.mp_value(n)
        raise ProfileError(f"no float path for kind {self.kind!r}")  # pragma: no cover

    def log_value(self, n: int) -> mpmath.mpf:
        """Natural log of the value, computed without overflowing exponents."""
        self._check_index(n)
        k, p = self.kind, self.params
        if k == "exp_of":
            return p["inner"].mp_value(n)
        if k == "exp_of_scaled":
            return p["inner"].mp_value(n) + mpmath.log(1 + p["psi"].mp_value(n) / n)
        if k == "exponential" and p.get("shift", 0) == 0:
            return mpmath.log(_mpf(p.get("coeff", 1))) + n * mpmath.log(_mpf(p["a"]))
        if k == "power" and p.get("shift", 0) == 0:
            return mpmath.log(_mpf(p.get("coeff", 1))) + _mpf(p["a"]) * mpmath.log(n)
        if k == "piecewise":
            branch = p["low"] if n <= p["split"] else p["high"]
            return branch.log_value(n)
        exact = self.value(n)
        if exact is not None:
            if exact <= 0:
                raise ProfileError(f"log of non-positive value {exact} at n={n}")
            return mpmath.log(mpmath.mpf(exact.numerator)) - mpmath.log(
                mpmath.mpf(exact.denominator)
            )
        return mpmath.log(self.mp_value(n))

    def iv_value(self, n: int, iv) -> object:
        """Directed-rounding interval enclosure of the value at n."""
        self._check_index(n)
        exact = self.value(n)
        if exact is not None:
            return iv_from_fraction(iv, exact)
        k, p = self.kind, self.params
        if k == "power":
            base = iv.exp(_ivnum(iv, p["a"]) * iv.log(iv.mpf(n)))
            return _ivnum(iv, p.get("coeff", 1)) * base + _ivnum(iv, p.get("shift", 0))
        if k == "sqrt":
            return _ivnum(iv, p.get("coeff", 1)) * iv.sqrt(iv.mpf(n))
        if k == "log":
            return _ivnum(iv, p["coeff"]) * iv.log(iv.mpf(n))
        if k == "linear_log":
            return iv.mpf(n) * iv.log(_ivnum(iv, p["a"]))
        if k == "exponential":
            base = iv.exp(iv.mpf(n) * iv.log(_ivnum(iv, p["a"])))
            return _ivnum(iv, p.get("coeff", 1)) * base + _ivnum(iv, p.get("shift", 0))
        if k == "lil":
            return iv.sqrt(2 * iv.mpf(n) * iv.log(iv.log(iv.mpf(n))))
        if k == "deviation":
            return iv.mpf(n) + _ivnum(iv, p["beta"]) * p["psi"].iv_value(n, iv)
        if k == "index_scaled":
            return iv.mpf(n + p.get("offset", 0)) * p["u"].iv_value(n, iv)
        if k == "exp_of":
            return iv.exp(p["inner"].iv_value(n, iv))
        if k == "exp_of_scaled":
            return iv.exp(p["inner"].iv_value(n, iv)) * (
                1 + p["psi"].iv_value(n, iv) / iv.mpf(n)
            )
        if k == "piecewise":
            branch = p["low"] if n <= p["split"] else p["high"]
            return branch.iv_value(n, iv)
        raise ProfileError(f"no interval path for kind {self.kind!r}")

    def floor(self, n: int) -> int:
        """Exact integer part of the value at n (certified for irrational
        formulas by precision escalation)."""
        exact = self.value(n)
        if exact is not None:
            return exact.numerator // exact.denominator
        return certified_floor(lambda iv: self.iv_value(n, iv))

    def _check_index(self, n: int) -> None:
        if n < self.min_index:
            raise ProfileError(
                f"profile {self.label or self.kind} starts at n={self.min_index}, got {n}"
            )

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        for key, val in self.params.items():
            if isinstance(val, GrowthProfile):
                out[key] = val.to_dict()
            elif key == "values":
                out[key] = [_encode_value(Fraction(v)) for v in val]
            else:
                out[key] = _encode_value(val)
        if self.analytic:
            out["analytic"] = {k: _encode_tag(v) for k, v in self.analytic.items()}
        if self.label:
            out["label"] = self.label
        return out

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "GrowthProfile":
        data = dict(data)
        kind = data.pop("kind", None)
        if kind == "builtin":
            name = data.get("name")
            catalog = builtin_profiles()
            if name not in catalog:
                raise ProfileError(f"unknown builtin profile {name!r}")
            return catalog[name]
        if kind not in _KINDS:
            raise ProfileError(f"unknown profile kind {kind!r}")
        label = data.pop("label", "")
        analytic_raw = data.pop("analytic", None) or {}
        analytic = {k: _decode_tag(v) for k, v in analytic_raw.items()}
        params: dict[str, Any] = {}
        for key, val in data.items():
            if isinstance(val, dict) and "kind" in val:
                params[key] = GrowthProfile.from_dict(val)
            elif key == "values":
                params[key] = tuple(_decode_value(v) for v in val)
            elif key == "split" or key == "offset":
                params[key] = int(val)
            else:
                params[key] = _decode_value(val)
        return _make(kind, params, analytic=analytic, label=label)


def _make(kind: str, params: dict[str, Any], *, analytic=None, label="") -> GrowthProfile:
    min_index = 2 if kind == "log" else 1
    if kind == "piecewise":
        min_index = max(
            min_index,
            params["low"].min_index,
            # the high branch only needs to be evaluable beyond the split
        )
    tags = dict(analytic or {})
    if kind == "log":
        # phi(n)/log n equals the coefficient identically, so the growth
        # constant is structural rather than a user claim.
        tags.setdefault("gamma", float(params["coeff"]))
    if kind == "lil":
        # sqrt(2n log log n) has vanishing increments and subexponential
        # decay by closed form; both deviation-scale hypotheses hold.
        tags.setdefault("psi_conditions", 1.0)
    return GrowthProfile(
        kind=kind,
        params=params,
        analytic=tags,
        label=label,
        min_index=min_index,
    )


# -- constructors ----------------------------------------------------------


def power_profile(a, coeff=1, shift=0, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "power",
        {"a": _coerce(a), "coeff": _coerce(coeff), "shift": _coerce(shift)},
        analytic=analytic,
        label=label or f"{coeff}*n^{a}",
    )


def sqrt_profile(coeff=1, *, analytic=None, label="") -> GrowthProfile:
    return _make("sqrt", {"coeff": _coerce(coeff)}, analytic=analytic, label=label or "sqrt(n)")


def log_profile(coeff, *, analytic=None, label="") -> GrowthProfile:
    if not coeff > 0:
        raise ProfileError("log profile needs coeff > 0")
    return _make("log", {"coeff": _coerce(coeff)}, analytic=analytic, label=label or f"{coeff}*log n")


def linear_log_profile(alpha, *, analytic=None, label="") -> GrowthProfile:
    if not alpha > 1:
        raise ProfileError("linear_log profile needs a > 1")
    return _make("linear_log", {"a": _coerce(alpha)}, analytic=analytic, label=label or f"n*log {alpha}")


def exponential_profile(alpha, coeff=1, shift=0, *, analytic=None, label="") -> GrowthProfile:
    if not alpha > 0:
        raise ProfileError("exponential profile needs a > 0")
    return _make(
        "exponential",
        {"a": _coerce(alpha), "coeff": _coerce(coeff), "shift": _coerce(shift)},
        analytic=analytic,
        label=label or f"{coeff}*{alpha}^n",
    )


def table_profile(values, *, analytic=None, label="") -> GrowthProfile:
    vals = tuple(Fraction(v) for v in values)
    if not vals:
        raise ProfileError("table profile needs at least one value")
    return _make("table", {"values": vals}, analytic=analytic, label=label or "table")


def lil_profile(*, analytic=None, label="") -> GrowthProfile:
    return _make("lil", {}, analytic=analytic, label=label or "lil-scale")


def deviation_profile(beta, psi: GrowthProfile, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "deviation",
        {"beta": _coerce(beta), "psi": psi},
        analytic=analytic,
        label=label or f"n + {beta}*psi(n)",
    )


def affine_profile(a, b=0, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "affine",
        {"a": _coerce(a), "b": _coerce(b)},
        analytic=analytic,
        label=label or f"{a}*n + {b}",
    )


def index_scaled_profile(u: GrowthProfile, offset: int, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "index_scaled",
        {"u": u, "offset": int(offset)},
        analytic=analytic,
        label=label or f"(n+{offset})*u(n)",
    )


def exp_of_profile(inner: GrowthProfile, *, analytic=None, label="") -> GrowthProfile:
    return _make("exp_of", {"inner": inner}, analytic=analytic, label=label or "exp(g(n))")


def exp_of_scaled_profile(inner: GrowthProfile, psi: GrowthProfile, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "exp_of_scaled",
        {"inner": inner, "psi": psi},
        analytic=analytic,
        label=label or "exp(g(n))*(1+psi/n)",
    )


def piecewise_profile(split: int, low: GrowthProfile, high: GrowthProfile, *, analytic=None, label="") -> GrowthProfile:
    return _make(
        "piecewise",
        {"split": int(split), "low": low, "high": high},
        analytic=analytic,
        label=label or f"piecewise@{split}",
    )


def _coerce(v):
    """Ints become Fractions; Fractions and floats pass through."""
    if isinstance(v, bool):
        raise ProfileError("boolean is not a profile parameter")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, float)):
        return v
    raise ProfileError(f"unsupported parameter {v!r}")


# -- bounds profiles --------------------------------------------------------


@dataclass(frozen=True)
class BoundsProfile:
    """Digit window l(n) < d_n <= r(n); admissible digits at level n are the
    integers floor(l(n))+1 .. floor(r(n))."""

    l: GrowthProfile
    r: GrowthProfile
    threshold: int = 0
    label: str = ""
    analytic: dict[str, float] = field(default_factory=dict)
    scale: GrowthProfile | None = None

    def floor_l(self, n: int) -> int:
        return self.l.floor(n)

    def floor_r(self, n: int) -> int:
        return self.r.floor(n)

    def digit_range(self, n: int) -> tuple[int, int]:
        """Inclusive integer range of admissible digits at level n."""
        return self.floor_l(n) + 1, self.floor_r(n)

    def branch_count(self, n: int) -> int:
        lo, hi = self.digit_range(n)
        return max(0, hi - lo + 1)

    def contains(self, n: int, d: int) -> bool:
        lo, hi = self.digit_range(n)
        return lo <= d <= hi

    def mp_delta(self, n: int) -> mpmath.mpf:
        return self.r.mp_value(n) - self.l.mp_value(n)

    def log_delta(self, n: int) -> mpmath.mpf:
        delta = self.mp_delta(n)
        if delta <= 0:
            raise ProfileError(f"non-positive digit window at level {n}")
        return mpmath.log(delta)

    def to_dict(self) -> dict[str, Any]:
        out = {"l": self.l.to_dict(), "r": self.r.to_dict(), "threshold": self.threshold}
        if self.scale is not None:
            out["scale"] = self.scale.to_dict()
        if self.label:
            out["label"] = self.label
        return out

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "BoundsProfile":
        scale = data.get("scale")
        return BoundsProfile(
            l=GrowthProfile.from_dict(data["l"]),
            r=GrowthProfile.from_dict(data["r"]),
            threshold=int(data.get("threshold", 0)),
            label=data.get("label", ""),
            scale=GrowthProfile.from_dict(scale) if scale else None,
        )


class ThresholdNotFound(ValueError):
    """No splice index validates the admissibility conditions."""

    def __init__(self, condition: str, level: int, n_limit: int):
        self.condition = condition
        self.level = level
        self.n_limit = n_limit
        super().__init__(
            f"no threshold K <= {n_limit}: condition {condition} still fails at level {level}"
        )


def _pair_conditions(l: GrowthProfile, r: GrowthProfile, n: int) -> str | None:
    """Name of the first admissibility condition failing at pair n, or None.

    Checks use rows n and n+1: (i) r(n)-l(n) >= 2; (ii) 2l(n+1)-r(n+1) >= 1;
    (iii) l(n+1) >= r(n).
    """
    # (i): r(n) >= l(n) + 2, phrased through the difference profile directly
    if not _ge_diff(r, n, l, n, Fraction(2)):
        return "(i) r(n) - l(n) >= 2"
    if not _ge_diff(l, n + 1, r, n + 1, Fraction(1), lhs_scale=2):
        return "(ii) 2*l(n+1) - r(n+1) >= 1"
    if not _ge_diff(l, n + 1, r, n, Fraction(0)):
        return "(iii) l(n+1) >= r(n)"
    return None


def _ge_diff(a: GrowthProfile, an: int, b: GrowthProfile, bn: int, margin: Fraction, *, lhs_scale: int = 1) -> bool:
    """Certified lhs_scale*a(an) - b(bn) >= margin."""
    av, bv = a.value(an), b.value(bn)
    if av is not None and bv is not None:
        return lhs_scale * av - bv >= margin
    def diff(iv):
        return (
            iv.mpf(lhs_scale) * a.iv_value(an, iv)
            - b.iv_value(bn, iv)
            - iv_from_fraction(iv, margin)
        )
    try:
        return certified_sign(diff) >= 0
    except PrecisionError:
        return True


def find_threshold(l: GrowthProfile, r: GrowthProfile, n_limit: int) -> int:
    """Smallest K >= 0 so that the admissibility conditions hold at every pair
    K < n <= n_limit, the spliced prefix glue l(K+1) >= 2(K+1) holds, and (for
    K >= 1) the first unspliced row keeps the doubling margin
    2*l(K+1) - r(K+1) >= 1 so a 2n/2(n+1) prefix remains valid in front.

    Raises ThresholdNotFound naming the condition that fails last.
    """
    if n_limit < 1:
        raise ProfileError("n_limit must be >= 1")
    failures: dict[int, str] = {}
    for n in range(max(1, l.min_index), n_limit + 1):
        bad = _pair_conditions(l, r, n)
        if bad is not None:
            failures[n] = bad
    last_bad = max(failures) if failures else 0
    start = max(last_bad, l.min_index - 1)
    for k in range(start, n_limit):
        if not _ge_diff(l, k + 1, _CONST_ZERO, 1, Fraction(2 * (k + 1))):
            continue
        if k >= 1 and not _ge_diff(l, k + 1, r, k + 1, Fraction(1), lhs_scale=2):
            continue
        return k
    if failures:
        return _raise_last(failures, n_limit)
    raise ThresholdNotFound("splice l(K+1) >= 2(K+1)", n_limit, n_limit)


def _raise_last(failures: dict[int, str], n_limit: int) -> int:
    level = max(failures)
    raise ThresholdNotFound(failures[level], level, n_limit)


_CONST_ZERO = table_profile([0])  # placeholder rhs for constant comparisons


def bounds_from_scale(u: GrowthProfile, window: int = DEFAULT_WINDOW) -> BoundsProfile:
    """Digit bounds n*u(n) < d_n <= (n+1)*u(n) from a scale sequence u.

    Requires 2 <= u(n) <= u(n+1) on the verification window; the three
    admissibility conditions then hold with r(n) - l(n) = u(n).
    """
    for n in range(u.min_index, window + 1):
        if not _ge_diff(u, n, _CONST_ZERO, 1, Fraction(2)):
            raise ProfileError(f"scale profile fails u(n) >= 2 at n={n}")
        if not _ge_diff(u, n + 1, u, n, Fraction(0)):
            raise ProfileError(f"scale profile fails u(n+1) >= u(n) at n={n}")
    return BoundsProfile(
        l=index_scaled_profile(u, 0, label="n*u(n)"),
        r=index_scaled_profile(u, 1, label="(n+1)*u(n)"),
        threshold=0,
        label=f"scale[{u.label}]",
        analytic=dict(u.analytic),
        scale=u,
    )


def check_deviation_scale(psi: GrowthProfile, window: int = DEFAULT_WINDOW) -> dict[str, Any]:
    """Window check of the deviation-scale hypotheses: psi(n+1) - psi(n) -> 0
    and e^{pn} psi(n) -> infinity for every p > 0.

    Surrogates on the window: |psi(n+1) - psi(n)| <= 0.05 over the last decile,
    and log psi(n) >= -n/20 throughout.  Returns a report dict.
    """
    if psi.analytic.get("psi_conditions"):
        return {"ok": True, "window": window, "certified": "stated"}
    tail_start = max(psi.min_index, window - window // 10)
    max_tail_diff = 0.0
    for n in range(tail_start, window):
        diff = abs(float(psi.mp_value(n + 1) - psi.mp_value(n)))
        max_tail_diff = max(max_tail_diff, diff)
    if max_tail_diff > 0.05:
        return {"ok": False, "window": window, "reason": f"psi increments stay at {max_tail_diff:.4g}"}
    for n in range(psi.min_index, window + 1):
        if float(psi.log_value(n)) < -n / 20:
            return {"ok": False, "window": window, "reason": f"psi decays too fast at n={n}"}
    return {"ok": True, "window": window, "certified": "window", "max_tail_diff": max_tail_diff}


def deviation_bounds(
    psi: GrowthProfile,
    beta,
    *,
    k_limit: int = 400,
    window: int = DEFAULT_WINDOW,
) -> BoundsProfile:
    """Digit bounds targeting (log d_n - n)/psi(n) -> beta.

    Rows are L(n) = exp(n + beta*psi(n)) and R(n) = (1 + psi(n)/n) L(n) beyond
    a computed splice index K, with the 2n / 2(n+1) prefix below it.
    """
    report = check_deviation_scale(psi, window)
    if not report["ok"]:
        raise ProfileError(f"deviation scale rejected: {report['reason']}")
    f = deviation_profile(beta, psi, label=f"n + {beta}*psi(n)")
    low_l, low_r = affine_profile(2, 0, label="2n"), affine_profile(2, 2, label="2(n+1)")
    big_l = exp_of_profile(f, label="exp(n + beta*psi)")
    big_r = exp_of_scaled_profile(f, psi, label="(1+psi/n)*exp(n + beta*psi)")
    k = find_threshold(big_l, big_r, k_limit)
    return BoundsProfile(
        l=piecewise_profile(k, low_l, big_l),
        r=piecewise_profile(k, low_r, big_r),
        threshold=k,
        label=f"deviation[beta={beta}]",
        analytic={"dimension": 1.0},
    )


# -- catalog and fixtures ----------------------------------------------------


def builtin_profiles() -> dict[str, GrowthProfile]:
    """Named profiles used by the dimension experiments, each tagged with its
    externally known limit values."""
    inf = math.inf
    return {
        "sqrt": sqrt_profile(analytic={"gamma": inf, "xi": 0.0}, label="sqrt"),
        "linear_log3": linear_log_profile(
            3, analytic={"gamma": inf, "xi": 0.0}, label="linear_log3"
        ),
        "square": power_profile(2, analytic={"gamma": inf, "xi": 0.0}, label="square"),
        "geometric3": exponential_profile(
            3, analytic={"gamma": inf, "xi": 2.0}, label="geometric3"
        ),
        "half_cube": power_profile(
            3, coeff=Fraction(1, 2), analytic={"gamma": inf, "xi": 0.0}, label="half_cube"
        ),
        "log2": log_profile(2, analytic={"gamma": 2.0, "xi": 0.0, "theta": 1.0}, label="log2"),
        "scale_geometric3": exponential_profile(
            3, coeff=2, analytic={"eta": 0.0}, label="scale_geometric3"
        ),
        "scale_exp_sqrt": exp_of_profile(
            sqrt_profile(), analytic={"eta": 0.0}, label="scale_exp_sqrt"
        ),
        "scale_exp_square": exp_of_profile(
            power_profile(2), analytic={"eta": 0.0}, label="scale_exp_square"
        ),
        "lil": lil_profile(analytic={"psi_conditions": 1.0}, label="lil"),
    }


def oscillating_ratio_word(k_max: int) -> tuple[int, ...]:
    """Word with digits floor(exp(n-1+sqrt(n))) at odd n and
    floor(exp(n+sqrt(n))) at even n; its consecutive-ratio subsequences split
    toward two different limits (1 and e^2).  Floors are certified."""
    if k_max < 2:
        raise ProfileError("need k_max >= 2")
    digits = []
    for n in range(1, k_max + 1):
        off = 1 if n % 2 else 0
        digits.append(
            certified_floor(lambda iv: iv.exp(iv.mpf(n - off) + iv.sqrt(iv.mpf(n))))
        )
    word = tuple(digits)
    for a, b in zip(word, word[1:]):
        if b <= a:
            raise ProfileError(f"fixture word not strictly increasing at {a} -> {b}")
    return word
