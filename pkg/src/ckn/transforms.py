"""Parameter-space maps used to reduce the inequality between regimes.

Four exact maps plus one pair-splitting construction:

* ``bar_transform``     - lowers the gradient exponent to p = 1 by Hoelder
                          conjugation; preserves the full condition set and
                          the criticality sign in both directions.
* ``hat_transform``     - drops the dimension by one for tuples with zero
                          radial weights and p = 1; produces an isotropic
                          tuple in dimension n-1.
* ``radial_flatten``    - absorbs the radial weight of the L^s norm by the
                          substitution y = |x|^(gamma1*s/n) x, returning a
                          tuple with vanishing first radial weight.
* ``anisotropic_2d_change`` - the 2-D exponent map alpha -> alpha/(2*alpha+1)
                          induced by y1 = x1^(2*alpha+1).
* ``split_parameters``  - for supercritical tuples, produces two admissible
                          neighbours (a', alpha') and (a'', alpha'') on
                          opposite sides of a, used to dominate the L^s norm
                          by a sum of two interpolation products.

All arithmetic is exact.  Each map validates its preconditions and raises
``DomainError`` naming the violated one; postconditions that the source
guarantees are asserted at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .params import (
    InputError,
    Mode,
    ParameterSet,
    Verdict,
    check_anisotropic,
    check_isotropic,
    check_standing,
    format_rational,
    parameter_set_to_json,
)

__all__ = [
    "DomainError",
    "TransformKind",
    "TransformedParams",
    "SplitResult",
    "bar_transform",
    "hat_transform",
    "radial_flatten",
    "anisotropic_2d_change",
    "split_parameters",
]

_ONE = Fraction(1)


class DomainError(ValueError):
    """A transform was applied outside its stated precondition."""


class TransformKind(Enum):
    BAR = "BAR"
    HAT = "HAT"
    RADIAL_FLATTEN = "RADIAL_FLATTEN"
    CHANGE_2D = "CHANGE_2D"


@dataclass(frozen=True)
class TransformedParams:
    source: ParameterSet
    target: ParameterSet
    kind: TransformKind
    aux: Mapping[str, Fraction]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "source": parameter_set_to_json(self.source),
            "target": parameter_set_to_json(self.target),
            "aux": {k: format_rational(v) for k, v in self.aux.items()},
        }


@dataclass(frozen=True)
class SplitResult:
    """The two neighbouring tuples produced for a supercritical input.

    ``first`` is the neighbour with the smaller 1/s' + (gamma1'+alpha')/n
    (it handles the region near the origin), ``second`` the larger one.
    Each quadruple is (a, alpha, s, gamma1); the remaining parameters are
    inherited from the source.
    """

    source: ParameterSet
    first: tuple[Fraction, Fraction, Fraction, Fraction]
    second: tuple[Fraction, Fraction, Fraction, Fraction]

    def _as_params(self, quad) -> ParameterSet:
        a, alpha, s, gamma1 = quad
        return self.source.replace(a=a, alpha=alpha, s=s, gamma1=gamma1)

    @property
    def first_params(self) -> ParameterSet:
        return self._as_params(self.first)

    @property
    def second_params(self) -> ParameterSet:
        return self._as_params(self.second)

    def to_json(self) -> dict:
        keys = ("a", "alpha", "s", "gamma1")
        return {
            "source": parameter_set_to_json(self.source),
            "first": {k: format_rational(v) for k, v in zip(keys, self.first)},
            "second": {k: format_rational(v) for k, v in zip(keys, self.second)},
        }


def _require(cond: bool, what: str):
    if not cond:
        raise DomainError(f"precondition violated: {what}")


# --------------------------------------------------------------------------
# bar transform
# --------------------------------------------------------------------------


def bar_transform(P: ParameterSet) -> TransformedParams:
    """Conjugate-exponent map sending p to 1.

    With 1/p + 1/p' = 1 (1/p' = 0 when p = 1):

        1/s_bar = 1/s + 1/p',   p_bar = 1,   1/q_bar = s/(q*s_bar),
        a_bar   = a*s / ((1-a)*s_bar + a*s),
        g1_bar  = g1*s/s_bar,   g2_bar = g1*s/p' + g2,   g3_bar = g3*s/s_bar,

    and identically for (alpha, mu, beta) in place of (g1, g2, g3).
    p = 1 is a fixed point.  If the source satisfies the full condition
    set, so does the target (checked here); the criticality comparison
    1/s <= a/p + (1-a)/q transfers in both directions with the same sign.
    """
    a1 = P.s > 0 and P.q > 0 and P.p >= 1 and 0 <= P.a <= 1
    _require(a1, "bar_transform needs s,q>0, p>=1, 0<=a<=1")
    inv_pp = 1 - _ONE / P.p  # 1/p'
    inv_sbar = _ONE / P.s + inv_pp
    sbar = _ONE / inv_sbar
    qbar = _ONE / (P.s / (P.q * sbar))
    abar = P.a * P.s / ((1 - P.a) * sbar + P.a * P.s)
    scale = P.s / sbar
    target = P.replace(
        s=sbar,
        p=Fraction(1),
        q=qbar,
        a=abar,
        gamma1=P.gamma1 * scale,
        gamma2=P.gamma1 * P.s * inv_pp + P.gamma2,
        gamma3=P.gamma3 * scale,
        alpha=P.alpha * scale,
        mu=P.alpha * P.s * inv_pp + P.mu,
        beta=P.beta * scale,
    )
    _assert_bar_conclusions(P, target)
    return TransformedParams(P, target, TransformKind.BAR, {"inv_p_prime": inv_pp})


def _crit_slack(P: ParameterSet) -> Fraction:
    return _ONE / P.s - (P.a / P.p + (1 - P.a) / P.q)


def _assert_bar_conclusions(P: ParameterSet, T: ParameterSet):
    # Admissibility transfers source -> target, and the criticality sign
    # transfers both ways.  Violations indicate an implementation bug.
    if P.mode is Mode.ANISOTROPIC:
        if check_anisotropic(P).verdict is Verdict.HOLDS:
            assert check_anisotropic(T).verdict is Verdict.HOLDS
    else:
        if check_isotropic(P).verdict is Verdict.HOLDS:
            assert check_isotropic(T).verdict is Verdict.HOLDS
    assert (_crit_slack(P) <= 0) == (_crit_slack(T) <= 0)


# --------------------------------------------------------------------------
# hat transform (dimension reduction)
# --------------------------------------------------------------------------


def hat_transform(P: ParameterSet) -> TransformedParams:
    """Dimension reduction n -> n-1 for zero radial weights and p = 1.

    Auxiliaries:  b = (1/s - (1-a)/q)/a  and  lam = a(1-b)/(1-ab).
    The target is the isotropic tuple in dimension n-1 with

        s_hat = s,  p_hat = 1,  1/q_hat = lam + (1-lam)/q,  a_hat = a*b,
        g1_hat = alpha,  g2_hat = mu,  g3_hat = lam*mu + (1-lam)*beta.

    Requires gamma1 = gamma2 = gamma3 = 0, p = 1, a > 0, ab < 1, and the
    full anisotropic condition set.  Guarantees (asserted): (n-1)/n <= b
    <= 1, 0 <= lam <= 1, 0 < a_hat < 1, and the target satisfies the
    isotropic standing assumptions, B3, B4 in dimension n-1 together with
    1/s_hat <= a_hat + (1-a_hat)/q_hat.
    """
    _require(P.mode is Mode.ANISOTROPIC, "hat_transform needs an anisotropic tuple")
    _require(P.gamma1 == P.gamma2 == P.gamma3 == 0, "hat_transform needs gamma1=gamma2=gamma3=0")
    _require(P.p == 1, "hat_transform needs p=1")
    _require(P.a > 0, "hat_transform needs a>0")
    ab = _ONE / P.s - (1 - P.a) / P.q
    _require(ab < 1, "hat_transform needs 1/s-(1-a)/q < 1")
    _require(
        check_anisotropic(P).verdict is Verdict.HOLDS,
        "hat_transform needs the full anisotropic condition set",
    )
    b = ab / P.a
    lam = P.a * (1 - b) / (1 - ab)
    qhat = _ONE / (lam + (1 - lam) / P.q)
    target = ParameterSet(
        n=P.n - 1,
        s=P.s,
        p=Fraction(1),
        q=qhat,
        a=ab,
        gamma1=P.alpha,
        gamma2=P.mu,
        gamma3=lam * P.mu + (1 - lam) * P.beta,
        mode=Mode.ISOTROPIC,
    )
    assert Fraction(P.n - 1, P.n) <= b <= 1
    assert 0 <= lam <= 1
    assert 0 < ab < 1
    rep = check_isotropic(target)
    assert rep.satisfied("B1") and rep.satisfied("B2")
    assert rep.satisfied("B3") and rep.satisfied("B4")
    assert _crit_slack(target) <= 0
    return TransformedParams(P, target, TransformKind.HAT, {"b": b, "lambda": lam})


# --------------------------------------------------------------------------
# radial flattening
# --------------------------------------------------------------------------


def radial_flatten(P: ParameterSet) -> TransformedParams:
    """Absorb gamma1 by the substitution y = |x|^(gamma1*s/n) x.

    Output weights:

        g1_t = 0,
        g2_t = (g2*n + g1*s*(1-n)) / (g1*s + n),
        g3_t = (g3*q - g1*s) * n / ((g1*s + n) * q).

    The rescaled balance identity

        a*(1 + (g2_t-1)/n) + (1-a)*(1/q + g3_t/n)
            = n/(g1*s+n) * ( a*(1 + (g2-1)/n) + (1-a)*(1/q + g3/n) )

    is an algebraic consequence of the definitions and is asserted always;
    the right-hand side equals 1/s exactly when the source satisfies the
    balance equality B3 with p = 1, and then the left side equals 1/s too
    (the p=1 case is the one the map is used in).
    """
    _require(P.mode is Mode.ISOTROPIC, "radial_flatten needs an isotropic tuple")
    d = P.gamma1 * P.s + P.n
    _require(d > 0, "radial_flatten needs gamma1*s + n > 0")
    n = P.n
    g2t = (P.gamma2 * n + P.gamma1 * P.s * (1 - n)) / d
    g3t = (P.gamma3 * P.q - P.gamma1 * P.s) * n / (d * P.q)
    target = P.replace(gamma1=Fraction(0), gamma2=g2t, gamma3=g3t)
    lhs = P.a * (1 + (g2t - 1) / n) + (1 - P.a) * (_ONE / P.q + g3t / n)
    rhs0 = P.a * (1 + (P.gamma2 - 1) / n) + (1 - P.a) * (_ONE / P.q + P.gamma3 / n)
    assert lhs == Fraction(n) / d * rhs0
    if rhs0 == _ONE / P.s + P.gamma1 / n:  # balance equality with p = 1
        assert lhs == _ONE / P.s
    return TransformedParams(
        P, target, TransformKind.RADIAL_FLATTEN, {"radial_power": P.gamma1 * P.s / n}
    )


# --------------------------------------------------------------------------
# 2-D change of variables
# --------------------------------------------------------------------------


def anisotropic_2d_change(alpha) -> Fraction:
    """Exponent map beta = alpha/(2*alpha+1) induced by y1 = x1^(2*alpha+1).

    Defined for alpha > -1/2; the image always satisfies beta < 1/2.
    """
    alpha = Fraction(alpha)
    _require(alpha > Fraction(-1, 2), "anisotropic_2d_change needs alpha > -1/2")
    beta = alpha / (2 * alpha + 1)
    assert beta < Fraction(1, 2)
    return beta


# --------------------------------------------------------------------------
# supercritical splitting
# --------------------------------------------------------------------------


def _split_G(P: ParameterSet, theta: Fraction) -> Fraction:
    return (P.n - 1) * (_ONE / P.s - theta / P.p - (1 - theta) / P.q) + P.alpha


def _split_F1(P: ParameterSet, theta: Fraction) -> Fraction:
    return -(P.n - 1) * (theta / P.p + (1 - theta) / P.q)


def _split_F2(P: ParameterSet, theta: Fraction) -> Fraction:
    return theta * (P.mu - 1) + (1 - theta) * P.beta


def _split_quad(P: ParameterSet, anew: Fraction) -> tuple[Fraction, ...] | None:
    """(a', alpha', s', gamma1') for one candidate a', or None if infeasible."""
    lo = max(_split_F1(P, anew), _split_F2(P, anew))
    hi = _split_G(P, anew)
    if not lo < hi:
        return None
    alpha_new = (lo + hi) / 2
    inv_s = anew / P.p + (1 - anew) / P.q
    if inv_s <= 0:
        return None
    s_new = _ONE / inv_s
    gamma1_new = (
        anew * (P.gamma2 + P.mu - 1) + (1 - anew) * (P.gamma3 + P.beta) - alpha_new
    )
    return (anew, alpha_new, s_new, gamma1_new)


def split_parameters(P: ParameterSet) -> SplitResult:
    """Two admissible neighbours of a supercritical tuple.

    The new pairs satisfy 1/s' = a'/p + (1-a')/q and the balance identity
    gamma1' + alpha' = a'(g2+mu-1) + (1-a')(g3+beta); alpha' is the
    midpoint of the feasibility window (max(F1,F2), G) at a'.  The step
    a'-a starts at min(a,1-a)/4 and is halved until every constraint
    passes exactly; termination is guaranteed by the strict inequalities
    F1(a) < G(a) and F2(a) < G(a).
    """
    _require(P.mode is Mode.ANISOTROPIC, "split_parameters needs an anisotropic tuple")
    rep = check_anisotropic(P)
    _require(rep.verdict is Verdict.HOLDS, "split_parameters needs an admissible tuple")
    crit = _crit_slack(P)
    _require(crit > 0, "split_parameters needs 1/s > a/p + (1-a)/q")
    # Supercriticality plus A7 forces 0 < a < 1 and distinct p/q balance legs.
    assert 0 < P.a < 1
    diff = (_ONE / P.p + (P.gamma2 + P.mu - 1) / P.n) - (
        _ONE / P.q + (P.gamma3 + P.beta) / P.n
    )
    assert diff != 0
    sign = 1 if diff > 0 else -1  # a' below a when the p-leg dominates

    lhs_full = _ONE / P.s + (P.gamma1 + P.alpha) / P.n
    lhs_axial = _ONE / P.s + P.alpha / (P.n - 1)

    step = min(P.a, 1 - P.a) / 4
    for _ in range(200):
        lo_quad = _split_quad(P, P.a - sign * step)
        hi_quad = _split_quad(P, P.a + sign * step)
        if lo_quad is not None and hi_quad is not None:
            ok = True
            for quad, want_below in ((lo_quad, True), (hi_quad, False)):
                anew, alpha_new, s_new, gamma1_new = quad
                cand = P.replace(a=anew, alpha=alpha_new, s=s_new, gamma1=gamma1_new)
                if check_anisotropic(cand).verdict is not Verdict.HOLDS:
                    ok = False
                    break
                if not _ONE / s_new < _ONE / P.s:
                    ok = False
                    break
                side = _ONE / s_new + (gamma1_new + alpha_new) / P.n
                if want_below and not side < lhs_full:
                    ok = False
                    break
                if not want_below and not side > lhs_full:
                    ok = False
                    break
                if not _ONE / s_new + alpha_new / (P.n - 1) < lhs_axial:
                    ok = False
                    break
                # Displayed identity of the splitting construction.
                assert (
                    anew * (P.gamma2 + P.mu) + (1 - anew) * (P.gamma3 + P.beta)
                    - (gamma1_new + alpha_new)
                    == anew
                )
            if ok:
                return SplitResult(P, first=lo_quad, second=hi_quad)
        step = step / 2
    raise RuntimeError("split_parameters did not converge (should be impossible)")
