"""Seeded random parameter tuples for property tests and campaign corpora.

Rejection samplers over small-denominator rationals.  The balance equality
(A5 in anisotropic mode, B3 in isotropic mode) is enforced by solving for
gamma1, so only the inequality conditions are left to rejection; the
acceptance rate stays high enough that thousands of tuples per second are
generated in pure Fraction arithmetic.

All samplers take a ``random.Random`` instance so runs are reproducible
from a single integer seed.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .params import (
    Mode,
    ParameterSet,
    Regime,
    Verdict,
    check,
    check_anisotropic,
    check_isotropic,
    classify_regime,
)

__all__ = [
    "rand_fraction",
    "random_admissible_anisotropic",
    "random_admissible_isotropic",
    "random_standing_anisotropic",
    "random_hat_admissible",
    "random_supercritical_admissible",
    "random_a0_admissible",
]

_ONE = Fraction(1)


def rand_fraction(rng: Random, lo: Fraction, hi: Fraction, den: int = 8) -> Fraction:
    """Uniform draw from the 1/den grid inside [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    kmin = -((-lo.numerator * den) // lo.denominator)  # ceil(lo*den)
    kmax = (hi.numerator * den) // hi.denominator  # floor(hi*den)
    if kmax < kmin:
        raise ValueError("empty fraction range")
    return Fraction(rng.randint(kmin, kmax), den)


def _draw_exponent(rng: Random, allow_below_one: bool) -> Fraction:
    lo = Fraction(1, 4) if allow_below_one else Fraction(1)
    return rand_fraction(rng, lo, Fraction(4), den=4)


def _draw_a(rng: Random, include_endpoints: bool = True) -> Fraction:
    if include_endpoints and rng.random() < 0.15:
        return Fraction(rng.choice([0, 1]))
    return Fraction(rng.randint(1, 7), 8)


def _solve_gamma1_aniso(n, s, p, q, a, gamma2, gamma3, alpha, mu, beta) -> Fraction:
    rhs = a * (_ONE / p + (gamma2 + mu - 1) / n) + (1 - a) * (_ONE / q + (gamma3 + beta) / n)
    return n * (rhs - _ONE / s) - alpha


def _solve_gamma1_iso(n, s, p, q, a, gamma2, gamma3) -> Fraction:
    rhs = a * (_ONE / p + (gamma2 - 1) / n) + (1 - a) * (_ONE / q + gamma3 / n)
    return n * (rhs - _ONE / s)


def random_admissible_anisotropic(
    rng: Random,
    n: int | None = None,
    max_tries: int = 20000,
) -> ParameterSet:
    """A tuple with verdict HOLDS in anisotropic mode (A1-A7 all satisfied)."""
    for _ in range(max_tries):
        nn = n if n is not None else rng.choice([2, 3, 3, 4])
        s = _draw_exponent(rng, allow_below_one=True)
        q = _draw_exponent(rng, allow_below_one=True)
        p = _draw_exponent(rng, allow_below_one=False)
        a = _draw_a(rng)
        w = Fraction(1, 2)
        gamma2 = rand_fraction(rng, -w, w, 4)
        gamma3 = rand_fraction(rng, -w, w, 4)
        alpha = rand_fraction(rng, -w, w, 4)
        mu = rand_fraction(rng, -w, w, 4)
        beta = rand_fraction(rng, -w, w, 4)
        gamma1 = _solve_gamma1_aniso(nn, s, p, q, a, gamma2, gamma3, alpha, mu, beta)
        if abs(gamma1) > 3:
            continue
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            gamma1=gamma1, gamma2=gamma2, gamma3=gamma3,
            alpha=alpha, mu=mu, beta=beta, mode=Mode.ANISOTROPIC,
        )
        if check_anisotropic(P).verdict is Verdict.HOLDS:
            return P
    raise RuntimeError("failed to sample an admissible anisotropic tuple")


def random_admissible_isotropic(
    rng: Random,
    n: int | None = None,
    max_tries: int = 20000,
) -> ParameterSet:
    """A tuple with verdict HOLDS in isotropic mode (B1-B5 all satisfied)."""
    for _ in range(max_tries):
        nn = n if n is not None else rng.choice([1, 2, 3, 4])
        s = _draw_exponent(rng, allow_below_one=True)
        q = _draw_exponent(rng, allow_below_one=True)
        p = _draw_exponent(rng, allow_below_one=False)
        a = _draw_a(rng)
        w = Fraction(1, 2)
        gamma2 = rand_fraction(rng, -w, w, 4)
        gamma3 = rand_fraction(rng, -w, w, 4)
        gamma1 = _solve_gamma1_iso(nn, s, p, q, a, gamma2, gamma3)
        if abs(gamma1) > 3:
            continue
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            gamma1=gamma1, gamma2=gamma2, gamma3=gamma3, mode=Mode.ISOTROPIC,
        )
        if check_isotropic(P).verdict is Verdict.HOLDS:
            return P
    raise RuntimeError("failed to sample an admissible isotropic tuple")


def random_standing_anisotropic(
    rng: Random,
    n: int | None = None,
    max_tries: int = 20000,
) -> ParameterSet:
    """A tuple satisfying only A1-A3; A5-A7 are left to chance.

    Used for both-direction tests of the transform equivalences, where
    restriction to fully admissible tuples would make "iff" vacuous.
    """
    for _ in range(max_tries):
        nn = n if n is not None else rng.choice([2, 3, 4])
        s = _draw_exponent(rng, allow_below_one=True)
        q = _draw_exponent(rng, allow_below_one=True)
        p = _draw_exponent(rng, allow_below_one=False)
        a = _draw_a(rng)
        w = Fraction(1, 2)
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            gamma1=rand_fraction(rng, -w, w, 4),
            gamma2=rand_fraction(rng, -w, w, 4),
            gamma3=rand_fraction(rng, -w, w, 4),
            alpha=rand_fraction(rng, -w, w, 4),
            mu=rand_fraction(rng, -w, w, 4),
            beta=rand_fraction(rng, -w, w, 4),
            mode=Mode.ANISOTROPIC,
        )
        from .params import check_standing

        if check_standing(P).verdict is Verdict.HOLDS:
            return P
    raise RuntimeError("failed to sample a standing anisotropic tuple")


def random_hat_admissible(
    rng: Random,
    n: int | None = None,
    max_tries: int = 50000,
) -> ParameterSet:
    """Admissible tuple with gamma_i = 0, p = 1, a > 0 and 1/s-(1-a)/q < 1.

    This is the input domain of the dimension-reduction (hat) transform.
    alpha is solved from the balance equality A5.
    """
    for _ in range(max_tries):
        nn = n if n is not None else rng.choice([2, 3, 4])
        s = _draw_exponent(rng, allow_below_one=True)
        q = _draw_exponent(rng, allow_below_one=True)
        p = Fraction(1)
        a = Fraction(rng.randint(1, 8), 8)
        w = Fraction(1, 2)
        mu = rand_fraction(rng, -w, w, 4)
        beta = rand_fraction(rng, -w, w, 4)
        rhs = a * (_ONE + (mu - 1) / nn) + (1 - a) * (_ONE / q + beta / nn)
        alpha = nn * (rhs - _ONE / s)
        if abs(alpha) > 3:
            continue
        if _ONE / s - (1 - a) / q >= 1:
            continue
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            alpha=alpha, mu=mu, beta=beta, mode=Mode.ANISOTROPIC,
        )
        if check_anisotropic(P).verdict is Verdict.HOLDS:
            return P
    raise RuntimeError("failed to sample a hat-transform input tuple")


def random_supercritical_admissible(
    rng: Random,
    n: int | None = None,
    max_tries: int = 200000,
) -> ParameterSet:
    """Admissible tuple with 1/s > a/p + (1-a)/q (split-lemma input)."""
    for _ in range(max_tries):
        nn = n if n is not None else rng.choice([2, 3, 4])
        s = rand_fraction(rng, Fraction(1, 4), Fraction(1), 4)
        q = _draw_exponent(rng, allow_below_one=True)
        p = _draw_exponent(rng, allow_below_one=False)
        a = Fraction(rng.randint(1, 7), 8)
        w = Fraction(1, 2)
        gamma2 = rand_fraction(rng, -w, w, 4)
        gamma3 = rand_fraction(rng, -w, w, 4)
        alpha = rand_fraction(rng, -w, w, 4)
        mu = rand_fraction(rng, -w, w, 4)
        beta = rand_fraction(rng, -w, w, 4)
        gamma1 = _solve_gamma1_aniso(nn, s, p, q, a, gamma2, gamma3, alpha, mu, beta)
        if abs(gamma1) > 3:
            continue
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            gamma1=gamma1, gamma2=gamma2, gamma3=gamma3,
            alpha=alpha, mu=mu, beta=beta, mode=Mode.ANISOTROPIC,
        )
        if check_anisotropic(P).verdict is not Verdict.HOLDS:
            continue
        if classify_regime(P) is Regime.SUPERCRITICAL:
            return P
    raise RuntimeError("failed to sample a supercritical admissible tuple")


def random_a0_admissible(rng: Random, max_tries: int = 50000) -> ParameterSet:
    """Admissible anisotropic tuple with a = 0."""
    for _ in range(max_tries):
        nn = rng.choice([2, 3, 4])
        s = _draw_exponent(rng, allow_below_one=True)
        p = _draw_exponent(rng, allow_below_one=False)
        a = Fraction(0)
        w = Fraction(1, 2)
        gamma2 = rand_fraction(rng, -w, w, 4)
        gamma3 = rand_fraction(rng, -w, w, 4)
        alpha = rand_fraction(rng, -w, w, 4)
        mu = rand_fraction(rng, -w, w, 4)
        beta = rand_fraction(rng, -w, w, 4)
        # a = 0 plus the guard in A7 forces s = q; draw q = s and solve
        # gamma1 from A5 (which then reads gamma1+alpha = gamma3+beta).
        q = s
        gamma1 = _solve_gamma1_aniso(nn, s, p, q, a, gamma2, gamma3, alpha, mu, beta)
        if abs(gamma1) > 3:
            continue
        P = ParameterSet(
            n=nn, s=s, p=p, q=q, a=a,
            gamma1=gamma1, gamma2=gamma2, gamma3=gamma3,
            alpha=alpha, mu=mu, beta=beta, mode=Mode.ANISOTROPIC,
        )
        if check_anisotropic(P).verdict is Verdict.HOLDS:
            return P
    raise RuntimeError("failed to sample an a=0 admissible tuple")
