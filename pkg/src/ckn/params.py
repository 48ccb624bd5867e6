"""Exact feasibility checks for weighted interpolation inequality parameters.

The inequality under study is

    || |x|^g1 |x'|^alpha u ||_{L^s}
        <= C || |x|^g2 |x'|^mu grad(u) ||_{L^p}^a
             * || |x|^g3 |x'|^beta u ||_{L^q}^(1-a)

on R^n, where x' collects the first n-1 coordinates.  Whether a finite C
exists is decided by a short list of equalities and inequalities among the
eleven parameters.  This module evaluates that list in exact rational
arithmetic (``fractions.Fraction``): several conditions are equalities or
carry strict/non-strict distinctions, and boundary tuples must be decided
without floating-point noise.

Two parameter regimes are supported:

* ANISOTROPIC (n >= 2): conditions tagged A1..A7, with the axial weights
  alpha, mu, beta active.
* ISOTROPIC (n >= 1): conditions tagged B1..B5, with alpha = mu = beta = 0.
  B1 uses the relaxed standing assumption s, q > 0 (not q >= 1).

A condition's ``slack`` is always left-minus-right of the condition as
printed, so "satisfied" means the slack compares with zero under the
condition's relation (>, >=, <=, or ==).  Conditions made of several
clauses (A1, A2, A3, B1, B2) report the minimum clause margin.

Everything here is pure and side-effect free; floats never appear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Mode",
    "Verdict",
    "Regime",
    "Relation",
    "ParameterSet",
    "Condition",
    "ConditionReport",
    "InputError",
    "check_standing",
    "check_anisotropic",
    "check_isotropic",
    "check",
    "reduce_to_isotropic",
    "classify_regime",
    "parse_rational",
    "format_rational",
    "parameter_set_to_json",
    "parameter_set_from_json",
    "report_to_json",
]

RationalLike = Union[Fraction, int, str]


class InputError(ValueError):
    """Malformed parameter input (bad rational, wrong mode, zero exponent)."""


class Mode(Enum):
    ISOTROPIC = "ISOTROPIC"
    ANISOTROPIC = "ANISOTROPIC"


class Verdict(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INVALID_STANDING = "INVALID_STANDING"


class Regime(Enum):
    SUBCRITICAL = "SUBCRITICAL"
    SUPERCRITICAL = "SUPERCRITICAL"


class Relation(Enum):
    """Printed orientation of a condition: slack = left - right."""

    GT = ">"
    GE = ">="
    LE = "<="
    EQ = "=="

    def holds(self, slack: Fraction) -> bool:
        if self is Relation.GT:
            return slack > 0
        if self is Relation.GE:
            return slack >= 0
        if self is Relation.LE:
            return slack <= 0
        return slack == 0


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational from int, Fraction, or "num/den" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational {value!r}: {exc}") from None
    raise InputError(f"not a rational: {value!r} (floats are rejected)")


def format_rational(x: Fraction) -> str:
    """Canonical "num/den" encoding (denominator always present)."""
    return f"{x.numerator}/{x.denominator}"


_RAT_FIELDS = ("s", "p", "q", "a", "gamma1", "gamma2", "gamma3", "alpha", "mu", "beta")


@dataclass(frozen=True)
class ParameterSet:
    """The full tuple (n, s, p, q, a, gamma1..3, alpha, mu, beta), exact.

    n is the integer dimension; all other fields are Fractions.  In
    ISOTROPIC mode the axial weights alpha, mu, beta must vanish.  s, p, q
    must be nonzero so reciprocals exist; their signs are checked by the
    standing conditions, not here.  Infinite p or q is not representable
    and therefore rejected by construction.
    """

    n: int
    s: Fraction
    p: Fraction
    q: Fraction
    a: Fraction
    gamma1: Fraction = Fraction(0)
    gamma2: Fraction = Fraction(0)
    gamma3: Fraction = Fraction(0)
    alpha: Fraction = Fraction(0)
    mu: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    mode: Mode = Mode.ANISOTROPIC

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"dimension n must be an integer >= 1, got {self.n!r}")
        for name in _RAT_FIELDS:
            object.__setattr__(self, name, parse_rational(getattr(self, name)))
        if self.mode is Mode.ANISOTROPIC and self.n < 2:
            raise InputError("anisotropic mode requires n >= 2")
        if self.mode is Mode.ISOTROPIC and not (self.alpha == self.mu == self.beta == 0):
            raise InputError("isotropic mode requires alpha = mu = beta = 0")
        for name in ("s", "p", "q"):
            if getattr(self, name) == 0:
                raise InputError(f"{name} must be nonzero")

    def replace(self, **kw) -> "ParameterSet":
        fields = {name: getattr(self, name) for name in ("n",) + _RAT_FIELDS + ("mode",)}
        fields.update(kw)
        return ParameterSet(**fields)


@dataclass(frozen=True)
class Condition:
    """One evaluated condition row.

    ``guard_active`` is only meaningful for the conditional conditions
    A7/B5: None for all others, else whether any guard branch fired (a
    vacuous guard means satisfied regardless of slack).
    """

    cid: str
    satisfied: bool
    slack: Fraction
    relation: Relation
    guard_active: bool | None = None


@dataclass(frozen=True)
class ConditionReport:
    parameters: ParameterSet
    entries: tuple[Condition, ...]
    verdict: Verdict

    def entry(self, cid: str) -> Condition:
        for e in self.entries:
            if e.cid == cid:
                return e
        raise KeyError(cid)

    def satisfied(self, cid: str) -> bool:
        return self.entry(cid).satisfied

    def failed_ids(self) -> tuple[str, ...]:
        return tuple(e.cid for e in self.entries if not e.satisfied)


_ONE = Fraction(1)

_STANDING_ANISO = ("A1", "A2", "A3")
_STANDING_ISO = ("B1", "B2")


def _min_margin(parts: Sequence[Fraction]) -> Fraction:
    return min(parts)


def _cond_a1(P: ParameterSet, cid: str) -> Condition:
    # s, q > 0; p >= 1; 0 <= a <= 1.  Mixed strict/non-strict clauses, so
    # satisfaction is computed clause-wise; slack is the minimum margin.
    ok = P.s > 0 and P.q > 0 and P.p >= 1 and 0 <= P.a <= 1
    slack = _min_margin([P.s, P.q, P.p - 1, P.a, 1 - P.a])
    return Condition(cid, ok, slack, Relation.GT if slack != 0 else Relation.GE)


def _strict_parts(cid: str, parts: Sequence[Fraction]) -> Condition:
    slack = _min_margin(parts)
    return Condition(cid, slack > 0, slack, Relation.GT)


def _cond_a2(P: ParameterSet) -> Condition:
    m = P.n - 1
    return _strict_parts(
        "A2",
        [_ONE / P.s + P.alpha / m, _ONE / P.p + P.mu / m, _ONE / P.q + P.beta / m],
    )


def _cond_a3(P: ParameterSet) -> Condition:
    n = P.n
    return _strict_parts(
        "A3",
        [
            _ONE / P.s + (P.alpha + P.gamma1) / n,
            _ONE / P.p + (P.mu + P.gamma2) / n,
            _ONE / P.q + (P.beta + P.gamma3) / n,
        ],
    )


def _cond_b2(P: ParameterSet) -> Condition:
    n = P.n
    return _strict_parts(
        "B2",
        [_ONE / P.s + P.gamma1 / n, _ONE / P.p + P.gamma2 / n, _ONE / P.q + P.gamma3 / n],
    )


def _a5_sides(P: ParameterSet) -> tuple[Fraction, Fraction]:
    n = P.n
    lhs = _ONE / P.s + (P.gamma1 + P.alpha) / n
    rhs = P.a * (_ONE / P.p + (P.gamma2 + P.mu - 1) / n) + (1 - P.a) * (
        _ONE / P.q + (P.gamma3 + P.beta) / n
    )
    return lhs, rhs


def _a63_sides(P: ParameterSet) -> tuple[Fraction, Fraction]:
    m = P.n - 1
    lhs = _ONE / P.s + P.alpha / m
    rhs = P.a * (_ONE / P.p + (P.mu - 1) / m) + (1 - P.a) * (_ONE / P.q + P.beta / m)
    return lhs, rhs


def _aniso_triple_equal(P: ParameterSet) -> bool:
    n = P.n
    mid = _ONE / P.p + (P.gamma2 + P.mu - 1) / n
    right = _ONE / P.q + (P.gamma3 + P.beta) / n
    left = _ONE / P.s + (P.gamma1 + P.alpha) / n
    return mid == right == left


def _criticality_slack(P: ParameterSet) -> Fraction:
    return _ONE / P.s - (P.a / P.p + (1 - P.a) / P.q)


def _cond_a5(P: ParameterSet) -> Condition:
    lhs, rhs = _a5_sides(P)
    return Condition("A5", lhs == rhs, lhs - rhs, Relation.EQ)


def _cond_a61(P: ParameterSet) -> Condition:
    slack = P.gamma1 - (P.a * P.gamma2 + (1 - P.a) * P.gamma3)
    return Condition("A6_1", slack <= 0, slack, Relation.LE)


def _cond_a62(P: ParameterSet) -> Condition:
    slack = (P.gamma1 + P.alpha) - (
        P.a * (P.gamma2 + P.mu) + (1 - P.a) * (P.gamma3 + P.beta)
    )
    return Condition("A6_2", slack <= 0, slack, Relation.LE)


def _cond_a63(P: ParameterSet) -> Condition:
    lhs, rhs = _a63_sides(P)
    return Condition("A6_3", lhs >= rhs, lhs - rhs, Relation.GE)


def _cond_a7(P: ParameterSet) -> Condition:
    lhs63, rhs63 = _a63_sides(P)
    guard = (
        P.a == 0
        or P.a == 1
        or _aniso_triple_equal(P)
        or lhs63 == rhs63
    )
    slack = _criticality_slack(P)
    return Condition("A7", (slack <= 0) if guard else True, slack, Relation.LE, guard)


def _b3_sides(P: ParameterSet) -> tuple[Fraction, Fraction]:
    n = P.n
    lhs = _ONE / P.s + P.gamma1 / n
    rhs = P.a * (_ONE / P.p + (P.gamma2 - 1) / n) + (1 - P.a) * (_ONE / P.q + P.gamma3 / n)
    return lhs, rhs


def _iso_triple_equal(P: ParameterSet) -> bool:
    n = P.n
    left = _ONE / P.s + P.gamma1 / n
    mid = _ONE / P.p + (P.gamma2 - 1) / n
    right = _ONE / P.q + P.gamma3 / n
    return left == mid == right


def _cond_b3(P: ParameterSet) -> Condition:
    lhs, rhs = _b3_sides(P)
    return Condition("B3", lhs == rhs, lhs - rhs, Relation.EQ)


def _cond_b4(P: ParameterSet) -> Condition:
    slack = P.gamma1 - (P.a * P.gamma2 + (1 - P.a) * P.gamma3)
    return Condition("B4", slack <= 0, slack, Relation.LE)


def _cond_b5(P: ParameterSet) -> Condition:
    guard = P.a == 0 or P.a == 1 or _iso_triple_equal(P)
    slack = _criticality_slack(P)
    return Condition("B5", (slack <= 0) if guard else True, slack, Relation.LE, guard)


def _standing_entries(P: ParameterSet) -> tuple[Condition, ...]:
    if P.mode is Mode.ANISOTROPIC:
        return (_cond_a1(P, "A1"), _cond_a2(P), _cond_a3(P))
    return (_cond_a1(P, "B1"), _cond_b2(P))


def check_standing(P: ParameterSet) -> ConditionReport:
    """Evaluate only the standing (norm-finiteness) assumptions.

    Anisotropic: A1-A3.  Isotropic: B1-B2, where B1 is the relaxed form
    s, q > 0, p >= 1, 0 <= a <= 1.
    """
    entries = _standing_entries(P)
    ok = all(e.satisfied for e in entries)
    return ConditionReport(P, entries, Verdict.HOLDS if ok else Verdict.INVALID_STANDING)


def check_anisotropic(P: ParameterSet) -> ConditionReport:
    """Full anisotropic report: A1-A3 standing plus A5, A6_1..A6_3, A7.

    All conditions are evaluated and reported even after a failure, to
    support parameter-region mapping.
    """
    if P.mode is not Mode.ANISOTROPIC:
        raise InputError("check_anisotropic requires ANISOTROPIC mode")
    standing = _standing_entries(P)
    rest = (_cond_a5(P), _cond_a61(P), _cond_a62(P), _cond_a63(P), _cond_a7(P))
    entries = standing + rest
    if not all(e.satisfied for e in standing):
        verdict = Verdict.INVALID_STANDING
    elif all(e.satisfied for e in rest):
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    return ConditionReport(P, entries, verdict)


def check_isotropic(P: ParameterSet) -> ConditionReport:
    """Full isotropic report: B1-B2 standing plus B3, B4, B5."""
    if P.mode is not Mode.ISOTROPIC:
        raise InputError("check_isotropic requires ISOTROPIC mode")
    standing = _standing_entries(P)
    rest = (_cond_b3(P), _cond_b4(P), _cond_b5(P))
    entries = standing + rest
    if not all(e.satisfied for e in standing):
        verdict = Verdict.INVALID_STANDING
    elif all(e.satisfied for e in rest):
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    return ConditionReport(P, entries, verdict)


def check(P: ParameterSet) -> ConditionReport:
    """Mode-dispatching full report."""
    if P.mode is Mode.ANISOTROPIC:
        return check_anisotropic(P)
    return check_isotropic(P)


def reduce_to_isotropic(P: ParameterSet) -> ParameterSet:
    """Fold the axial weights into the radial ones.

    Returns the isotropic tuple with gamma_i replaced by gamma1+alpha,
    gamma2+mu, gamma3+beta.  If the input satisfies A1, A3, A5, A6_2 and
    A7, the output satisfies the isotropic standing assumptions plus B3
    and B4 (and B5); this is checked by the test suite, not here.
    """
    if P.mode is not Mode.ANISOTROPIC:
        raise InputError("reduce_to_isotropic requires ANISOTROPIC mode")
    return ParameterSet(
        n=P.n,
        s=P.s,
        p=P.p,
        q=P.q,
        a=P.a,
        gamma1=P.gamma1 + P.alpha,
        gamma2=P.gamma2 + P.mu,
        gamma3=P.gamma3 + P.beta,
        mode=Mode.ISOTROPIC,
    )


def classify_regime(P: ParameterSet) -> Regime:
    """SUBCRITICAL iff 1/s <= a/p + (1-a)/q, exactly."""
    rep = check_standing(P)
    if rep.verdict is not Verdict.HOLDS:
        raise InputError("classify_regime requires the standing assumptions")
    return Regime.SUBCRITICAL if _criticality_slack(P) <= 0 else Regime.SUPERCRITICAL


# --------------------------------------------------------------------------
# JSON encoding: rationals as "num/den" strings
# --------------------------------------------------------------------------


def parameter_set_to_json(P: ParameterSet) -> dict:
    out = {"n": P.n, "mode": P.mode.value}
    for name in _RAT_FIELDS:
        out[name] = format_rational(getattr(P, name))
    return out


def parameter_set_from_json(obj: Mapping) -> ParameterSet:
    if not isinstance(obj, Mapping):
        raise InputError("parameter set JSON must be an object")
    try:
        n = obj["n"]
        mode = Mode(obj.get("mode", "ANISOTROPIC"))
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad parameter set JSON: {exc}") from None
    kw = {}
    for name in _RAT_FIELDS:
        if name in obj:
            kw[name] = parse_rational(obj[name])
    missing = {"s", "p", "q", "a"} - kw.keys()
    if missing:
        raise InputError(f"parameter set JSON missing fields: {sorted(missing)}")
    return ParameterSet(n=n, mode=mode, **kw)


def report_to_json(report: ConditionReport) -> dict:
    entries = []
    for e in report.entries:
        row = {
            "id": e.cid,
            "satisfied": e.satisfied,
            "slack": format_rational(e.slack),
            "relation": e.relation.value,
        }
        if e.guard_active is not None:
            row["guard_active"] = e.guard_active
        entries.append(row)
    return {
        "parameters": parameter_set_to_json(report.parameters),
        "entries": entries,
        "verdict": report.verdict.value,
    }
