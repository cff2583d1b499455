"""Exact evaluators for a family of alternating binomial identities.

Every identity here relates an alternating binomial sum to a closed
product form; all of them are rational functions of a parameter s > 0
(with integer parameters n >= 0 and, for two of them, m >= 1) and are
evaluated exactly over :class:`~binomax.exact.Rational`.  The anchor of
the family is

    sum_{k=0..n} (-1)^k C(n,k) s/(s+k)  =  prod_{k=1..n} k/(s+k),

whose two sides are the Laplace transform of the maximum of n unit-rate
exponential variables computed through its distribution function and
through its density.  The remaining identities are derivatives,
binomial inversions, and gamma-tail generalizations of that one.

Conventions, applied consistently so every identity holds from n = 0:
empty products are 1, empty sums are 0, and the max of zero exponential
draws is the constant 0 (all tail probabilities against it equal 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    EmptySequence,
    InternalRouteMismatch,
    NonPositiveS,
    NRequired,
    UnknownIdentity,
)
from .exact import Rational, check_natural, format_rational
from .jets import Jet, jet_constant, jet_variable

#: Default parameter sweep used by the verification engine and the CLI.
DEFAULT_S_GRID: tuple[Rational, ...] = (
    Fraction(1, 7),
    Fraction(1, 2),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(10),
    Fraction(1000, 3),
)
DEFAULT_N_MAX = 100
DEFAULT_M_MAX = 8


class IdentityId(enum.Enum):
    """Registry of verifiable identities; each maps to one (lhs, rhs) pair."""

    BASIC = "basic"
    SQUARED = "squared"
    GENERAL_M = "general_m"
    INVERSION_FIRST = "inversion_first"
    INVERSION_SECOND = "inversion_second"
    DERIVATIVE_FG = "derivative_fg"
    TAIL_DERIVATIVE_FORM = "tail_derivative_form"


#: Identities whose value depends on the gamma shape parameter m.
USES_M = frozenset({IdentityId.GENERAL_M, IdentityId.TAIL_DERIVATIVE_FORM})

_RANK = {ident: i for i, ident in enumerate(IdentityId)}


@dataclass(frozen=True)
class IdentityParams:
    """Evaluation point (s, n, m); s must be positive, m at least 1."""

    s: Rational
    n: int
    m: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))
        if self.s <= 0:
            raise NonPositiveS(f"s must be > 0, got {format_rational(self.s)}")
        check_natural(self.n, "n")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of one identity at one parameter point."""

    identity: IdentityId
    params: IdentityParams
    lhs: Rational
    rhs: Rational
    equal: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "equal", self.lhs == self.rhs)


def _require_positive_s(s: Rational) -> Fraction:
    s = Fraction(s)
    if s <= 0:
        raise NonPositiveS(f"s must be > 0, got {format_rational(s)}")
    return s


def _signed_binomials(n: int) -> Iterable[tuple[int, int]]:
    """Yield (k, (-1)^k C(n,k)) for k = 0..n, building the row incrementally."""
    c = 1
    for k in range(n + 1):
        if k:
            c = c * (n - k + 1) // k
        yield k, -c if k & 1 else c


def eval_basic_lhs(s: Rational, n: int) -> Rational:
    """Alternating sum  sum_{k=0..n} (-1)^k C(n,k) s/(s+k);  1 for n = 0."""
    s = _require_positive_s(s)
    check_natural(n, "n")
    total = Fraction(0)
    for k, c in _signed_binomials(n):
        total += c * s / (s + k)
    return total


def eval_basic_rhs(s: Rational, n: int) -> Rational:
    """Product form  prod_{k=1..n} k/(s+k)  =  n!/((s+1)...(s+n));  1 for n = 0."""
    s = _require_positive_s(s)
    check_natural(n, "n")
    result = Fraction(1)
    for k in range(1, n + 1):
        result *= Fraction(k) / (s + k)
    return result


def eval_f_jet(s: Rational, n: int, order: int) -> Jet:
    """Jet of the alternating-sum side at s, to the requested order.

    Term k is the jet of s/(s+k), so derivative j of the result is the
    exact j-th derivative of the sum form.
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    check_natural(order, "order")
    var = jet_variable(s, order)
    acc = jet_constant(0, order, at=s)
    for k, c in _signed_binomials(n):
        acc = acc + (var / (var + k)) * c
    return acc


def eval_g_jet(s: Rational, n: int, order: int) -> Jet:
    """Jet of the product side  prod_{k=1..n} k/(s+k)  at s."""
    s = _require_positive_s(s)
    check_natural(n, "n")
    check_natural(order, "order")
    var = jet_variable(s, order)
    acc = jet_constant(1, order, at=s)
    for k in range(1, n + 1):
        acc = acc * (Fraction(k) / (var + k))
    return acc


def tail_prob_via_derivatives(m: int, s: Rational, n: int) -> Rational:
    """P(gamma(s, m) exceeds the max of n unit exponentials), derivative route.

    Equals  sum_{k=0..m-1} (-1)^k (s^k/k!) f^(k)(s)  where f is the
    transform of the max; the jet supplies the exact derivatives.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    jet = eval_f_jet(s, n, m - 1)
    s = Fraction(s)
    total = Fraction(0)
    s_pow = Fraction(1)
    sign = 1
    for k in range(m):
        # s^k/k! * f^(k)(s) = s^k * coeffs[k]
        total += sign * s_pow * jet.coeffs[k]
        s_pow *= s
        sign = -sign
    return total


def tail_prob_via_conditioning(m: int, s: Rational, n: int) -> Rational:
    """Same tail probability by conditioning on the gamma variable:

    sum_{k=0..n} (-1)^k C(n,k) (s/(s+k))^m.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    s = _require_positive_s(s)
    check_natural(n, "n")
    total = Fraction(0)
    for k, c in _signed_binomials(n):
        total += c * (s / (s + k)) ** m
    return total


def tail_prob_exact(m: int, s: Rational, n: int) -> Rational:
    """Exact P(T_m > X_(n)) with the two routes computed and cross-checked.

    Both the derivative route and the conditioning route are always
    evaluated; a disagreement is an implementation bug and aborts with
    :class:`InternalRouteMismatch` rather than returning either value.
    Result is in (0, 1], and equals 1 when n = 0.
    """
    via_derivatives = tail_prob_via_derivatives(m, s, n)
    via_conditioning = tail_prob_via_conditioning(m, s, n)
    if via_derivatives != via_conditioning:
        raise InternalRouteMismatch(
            f"tail probability routes disagree at m={m}, s={format_rational(Fraction(s))}, "
            f"n={n}: {via_derivatives} vs {via_conditioning}"
        )
    if not 0 < via_conditioning <= 1:
        raise InternalRouteMismatch(
            f"tail probability {via_conditioning} outside (0, 1] at m={m}, n={n}"
        )
    return via_conditioning


def eval_squared_identity(s: Rational, n: int) -> tuple[Rational, Rational]:
    """Both sides of the squared-term identity:

    lhs = sum (-1)^k C(n,k) (s/(s+k))^2
    rhs = prod_{k=1..n} k/(s+k) * sum_{j=0..n} s/(s+j)
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    lhs = Fraction(0)
    for k, c in _signed_binomials(n):
        lhs += c * (s / (s + k)) ** 2
    rhs = eval_basic_rhs(s, n) * sum((s / (s + j) for j in range(n + 1)), Fraction(0))
    return lhs, rhs


def eval_general_m(s: Rational, n: int, m: int) -> tuple[Rational, Rational]:
    """Both sides of the general gamma-shape identity (n >= 1):

    lhs = sum_{k=0..n} (-1)^k C(n,k) (s/(s+k))^m
    rhs = (n/s) sum_{k=0..m-1} sum_{j=0..n-1} (-1)^j C(n-1,j) (s/(s+j+1))^(k+1)

    The right side comes through the density of the max, which exists
    only for n >= 1; at n = 0 it would be 0 while the left side is 1.
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    if n == 0:
        raise NRequired("the general-m identity requires n >= 1")
    lhs = tail_prob_via_conditioning(m, s, n)
    inner = Fraction(0)
    for j, c in _signed_binomials(n - 1):
        ratio = s / (s + j + 1)
        power = Fraction(1)
        geometric = Fraction(0)
        for _ in range(m):
            power *= ratio
            geometric += power
        inner += c * geometric
    rhs = Fraction(n) / s * inner
    return lhs, rhs


def eval_inversion_first(s: Rational, n: int) -> tuple[Rational, Rational]:
    """Binomial inversion of the basic identity:

    lhs = sum_{k=0..n} (-1)^k C(n,k) prod_{j=1..k} j/(s+j)
    rhs = s/(s+n)

    with the k = 0 product empty, hence 1.
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    lhs = Fraction(0)
    product = Fraction(1)
    for k, c in _signed_binomials(n):
        if k:
            product *= Fraction(k) / (s + k)
        lhs += c * product
    return lhs, s / (s + n)


def eval_inversion_second(s: Rational, n: int) -> tuple[Rational, Rational]:
    """Binomial inversion of the squared identity:

    lhs = sum_{k=0..n} (-1)^k C(n,k) [prod_{j=1..k} j/(s+j)] [sum_{i=0..k} s/(s+i)]
    rhs = (s/(s+n))^2
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    lhs = Fraction(0)
    product = Fraction(1)
    partial = Fraction(1)  # sum_{i=0..k} s/(s+i), seeded with the i = 0 term
    for k, c in _signed_binomials(n):
        if k:
            product *= Fraction(k) / (s + k)
            partial += s / (s + k)
        lhs += c * product * partial
    return lhs, (s / (s + n)) ** 2


def eval_derivative_identity(s: Rational, n: int) -> tuple[Rational, Rational]:
    """The first-derivative identity (both sides equal -g'(s) = -f'(s)):

    lhs = prod_{k=1..n} k/(s+k) * sum_{j=1..n} 1/(s+j)
    rhs = sum_{k=0..n} (-1)^(k+1) C(n,k) k/(s+k)^2

    The inner sum runs j = 1..n: it is the logarithmic derivative of the
    full product, as the jet oracle confirms.
    """
    s = _require_positive_s(s)
    check_natural(n, "n")
    log_sum = sum((Fraction(1) / (s + j) for j in range(1, n + 1)), Fraction(0))
    lhs = eval_basic_rhs(s, n) * log_sum
    rhs = Fraction(0)
    for k, c in _signed_binomials(n):
        rhs -= c * k / (s + k) ** 2
    return lhs, rhs


def binomial_invert(values: Sequence[Rational]) -> list[Rational]:
    """Alternating binomial transform  b_n = sum_{k=0..n} (-1)^k C(n,k) a_k.

    The transform is an involution: applying it twice recovers the input.
    """
    items = [Fraction(v) for v in values]
    if not items:
        raise EmptySequence("binomial inversion needs at least one term")
    out: list[Fraction] = []
    for n in range(len(items)):
        total = Fraction(0)
        for k, c in _signed_binomials(n):
            total += c * items[k]
        out.append(total)
    return out


_Evaluator = Callable[[IdentityParams], tuple[Rational, Rational]]

_DISPATCH: dict[IdentityId, _Evaluator] = {
    IdentityId.BASIC: lambda p: (eval_basic_lhs(p.s, p.n), eval_basic_rhs(p.s, p.n)),
    IdentityId.SQUARED: lambda p: eval_squared_identity(p.s, p.n),
    IdentityId.GENERAL_M: lambda p: eval_general_m(p.s, p.n, p.m),
    IdentityId.INVERSION_FIRST: lambda p: eval_inversion_first(p.s, p.n),
    IdentityId.INVERSION_SECOND: lambda p: eval_inversion_second(p.s, p.n),
    IdentityId.DERIVATIVE_FG: lambda p: eval_derivative_identity(p.s, p.n),
    IdentityId.TAIL_DERIVATIVE_FORM: lambda p: (
        tail_prob_via_derivatives(p.m, p.s, p.n),
        tail_prob_via_conditioning(p.m, p.s, p.n),
    ),
}


def verify(identity: IdentityId, params: IdentityParams) -> VerificationReport:
    """Evaluate both sides of one identity and report exact equality.

    Invalid parameters raise (propagated from the evaluators); they are
    never coerced.
    """
    try:
        evaluator = _DISPATCH[identity]
    except (KeyError, TypeError):
        raise UnknownIdentity(f"no evaluator registered for {identity!r}") from None
    lhs, rhs = evaluator(params)
    return VerificationReport(identity=identity, params=params, lhs=lhs, rhs=rhs)


def default_n_values(identity: IdentityId, n_max: int = DEFAULT_N_MAX) -> range:
    """Default n sweep: 0..n_max, except identities that need n >= 1."""
    return range(1 if identity is IdentityId.GENERAL_M else 0, n_max + 1)


def sweep(
    identities: Iterable[IdentityId] | None = None,
    s_grid: Sequence[Rational] = DEFAULT_S_GRID,
    n_values: Iterable[int] | None = None,
    m_values: Iterable[int] | None = None,
) -> list[VerificationReport]:
    """Verify identities over a parameter grid.

    Reports come back in a canonical order, sorted on
    (identity, n, m, s), regardless of evaluation order.  Identities
    that ignore m contribute one row per (s, n) with m = 1.
    """
    chosen = list(identities) if identities is not None else list(IdentityId)
    reports: list[VerificationReport] = []
    for identity in chosen:
        ns = list(n_values) if n_values is not None else list(default_n_values(identity))
        ms = (
            list(m_values)
            if (m_values is not None and identity in USES_M)
            else (list(range(1, DEFAULT_M_MAX + 1)) if identity in USES_M else [1])
        )
        for n in ns:
            for m in ms:
                for s in s_grid:
                    reports.append(verify(identity, IdentityParams(s=s, n=n, m=m)))
    reports.sort(key=lambda r: (_RANK[r.identity], r.params.n, r.params.m, r.params.s))
    return reports
