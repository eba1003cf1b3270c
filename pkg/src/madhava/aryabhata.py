"""Finite-difference trigonometry in the style of Aryabhata's sine table.

Angles of tables are kept as exact rational multiples of pi (``Fraction(1, 48)``
means pi/48) and only turned into radians when a sine is evaluated.

The table recursion uses backward differences d_n = s_n - s_{n-1} with s_0 = 0:

    d_n - d_{n-1} = -4 sin^2(eps/2) * (d_1 + ... + d_{n-1})

Only the seed s_1 is approximated (s_1 = eps by default); the multiplier
4 sin^2(eps/2) is evaluated accurately.  For that reason the seeded table is
exactly s_1 * sin(n eps) / sin(eps) up to fixed-point noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .arith import PI_50, DomainError, FixedDecimal, RationalLike, as_rational, to_fixed
from .series import eval_trig, sin_pi_multiple

__all__ = [
    "SeedPolicy",
    "TableEntry",
    "SineTable",
    "DifferenceSample",
    "GUARD_DIGITS",
    "sine_difference",
    "cosine_difference",
    "recursion_multiplier",
    "generate_sine_table",
    "generate_cosine_table",
    "second_difference_ratio",
    "central_first_derivative",
    "central_second_derivative",
    "sample_sine_derivative",
    "table_errors",
]

SeedPolicy = Literal["aryabhata", "two-term", "oracle"]
SEED_POLICIES = ("aryabhata", "two-term", "oracle")

# extra digits carried by the table recursion beyond the requested precision
GUARD_DIGITS = 3


def sine_difference(phi: RationalLike, delta: RationalLike, precision: int) -> FixedDecimal:
    """sin(phi + delta) - sin(phi - delta), evaluated as 2 sin(delta) cos(phi)."""
    if precision < 1:
        raise DomainError("precision must be at least 1")
    work = precision + 4
    s = eval_trig("sine", as_rational(delta), work).to_rational()
    c = eval_trig("cosine", as_rational(phi), work).to_rational()
    return to_fixed(2 * s * c, precision)


def cosine_difference(phi: RationalLike, delta: RationalLike, precision: int) -> FixedDecimal:
    """cos(phi + delta) - cos(phi - delta), evaluated as -2 sin(delta) sin(phi)."""
    if precision < 1:
        raise DomainError("precision must be at least 1")
    work = precision + 4
    s = eval_trig("sine", as_rational(delta), work).to_rational()
    sp = eval_trig("sine", as_rational(phi), work).to_rational()
    return to_fixed(-2 * s * sp, precision)


@dataclass(frozen=True)
class TableEntry:
    index: int
    angle: Fraction  # multiple of pi
    value: FixedDecimal

    @property
    def degrees(self) -> Fraction:
        return self.angle * 180

    @property
    def arcminutes(self) -> Fraction:
        return self.angle * 10800


@dataclass(frozen=True)
class SineTable:
    """Entries n = 1..count of a table built by the second-difference recursion.

    ``precision`` is what the caller asked for; values are stored at the
    working precision ``precision + GUARD_DIGITS``.
    """

    epsilon: Fraction
    entries: tuple[TableEntry, ...]
    seed_policy: str
    precision: int
    multiplier: FixedDecimal
    kind: str = "sine"

    def __len__(self) -> int:
        return len(self.entries)

    def value(self, n: int) -> FixedDecimal:
        if not 1 <= n <= len(self.entries):
            raise DomainError(f"index {n} outside 1..{len(self.entries)}")
        return self.entries[n - 1].value

    def values(self) -> list[FixedDecimal]:
        return [e.value for e in self.entries]

    @property
    def working_precision(self) -> int:
        return self.precision + GUARD_DIGITS


def recursion_multiplier(epsilon: RationalLike, precision: int) -> FixedDecimal:
    """4 sin^2(eps/2) at ``precision`` digits, eps given as a multiple of pi."""
    half = sin_pi_multiple(as_rational(epsilon) / 2, precision + 4).to_rational()
    return to_fixed(4 * half * half, precision)


def _check_table_args(epsilon: Fraction, count: int, precision: int) -> None:
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if count < 1:
        raise DomainError("count must be at least 1")
    if count * epsilon > Fraction(1, 2):
        raise DomainError(f"table extends past pi/2: {count} * {epsilon} pi")
    if precision < 4:
        raise DomainError("precision must be at least 4")


def _run_recursion(first: FixedDecimal, k: FixedDecimal, count: int, second: FixedDecimal | None) -> list[FixedDecimal]:
    values = [first]
    diff = first  # d_1 = s_1 - s_0
    running = first  # d_1 + ... + d_{n-1}
    for n in range(2, count + 1):
        if n == 2 and second is not None:
            diff = second - first
        else:
            diff = diff - k * running
        running = running + diff
        values.append(running)
    return values


def generate_sine_table(
    epsilon: RationalLike,
    count: int,
    precision: int = 12,
    seed_policy: SeedPolicy = "aryabhata",
) -> SineTable:
    """Sines of eps, 2 eps, ..., count*eps from the second-difference recursion.

    Seeds: ``"aryabhata"`` takes sin(eps) ~ eps; ``"two-term"`` additionally
    takes sin(2 eps) ~ 2 eps; ``"oracle"`` seeds with the accurate sin(eps),
    which isolates recursion error from seeding error.
    """
    eps = as_rational(epsilon)
    _check_table_args(eps, count, precision)
    if seed_policy not in SEED_POLICIES:
        raise DomainError(f"unknown seed policy {seed_policy!r}")
    work = precision + GUARD_DIGITS
    eps_radians = eps * PI_50
    if seed_policy == "oracle":
        first = sin_pi_multiple(eps, work)
    else:
        first = to_fixed(eps_radians, work)
    second = to_fixed(2 * eps_radians, work) if seed_policy == "two-term" and count >= 2 else None
    k = recursion_multiplier(eps, work)
    values = _run_recursion(first, k, count, second)
    entries = tuple(TableEntry(n, n * eps, v) for n, v in enumerate(values, start=1))
    return SineTable(eps, entries, seed_policy, precision, k)


def generate_cosine_table(epsilon: RationalLike, count: int, precision: int = 12) -> SineTable:
    """Cosines of eps .. count*eps from the same recursion, seeded only by c_0 = 1.

    Symmetry c_{-1} = c_1 fixes the first difference: c_1 - c_0 = -k/2.
    """
    eps = as_rational(epsilon)
    _check_table_args(eps, count, precision)
    work = precision + GUARD_DIGITS
    k = recursion_multiplier(eps, work)
    one = FixedDecimal(10**work, work)
    diff = -to_fixed(k.to_rational() / 2, work)
    values = []
    running = one
    for _ in range(count):
        running = running + diff
        values.append(running)
        diff = diff - k * running
    entries = tuple(TableEntry(n, n * eps, v) for n, v in enumerate(values, start=1))
    return SineTable(eps, entries, "unit-cosine", precision, k, kind="cosine")


def second_difference_ratio(table: SineTable, n: int) -> FixedDecimal:
    """(s_{n+1} - 2 s_n + s_{n-1}) / s_n; for any table built by the recursion this is -4 sin^2(eps/2)."""
    count = len(table)
    if not 2 <= n <= count - 1:
        raise DomainError(f"interior index required: 2 <= n <= {count - 1}")
    s_prev, s_n, s_next = table.value(n - 1), table.value(n), table.value(n + 1)
    second = s_next - s_n - s_n + s_prev
    return to_fixed(second.to_rational() / s_n.to_rational(), table.working_precision)


def table_errors(table: SineTable, precision: int | None = None) -> list[Fraction]:
    """Absolute error of each entry against the series-based oracle."""
    precision = table.working_precision + 2 if precision is None else precision
    out = []
    for e in table.entries:
        if table.kind == "sine":
            ref = sin_pi_multiple(e.angle, precision)
        else:
            ref = sin_pi_multiple(Fraction(1, 2) - e.angle, precision)
        out.append(abs(e.value.to_rational() - ref.to_rational()))
    return out


@dataclass(frozen=True)
class DifferenceSample:
    phi: Fraction
    delta_phi: Fraction
    f_plus: FixedDecimal
    f_minus: FixedDecimal
    f_center: FixedDecimal
    estimate: FixedDecimal
    second_estimate: FixedDecimal

    def __post_init__(self) -> None:
        if self.delta_phi <= 0:
            raise DomainError("delta_phi must be positive")


def central_first_derivative(
    f_plus: RationalLike | FixedDecimal,
    f_minus: RationalLike | FixedDecimal,
    window: RationalLike,
    precision: int = 12,
) -> FixedDecimal:
    """(f_plus - f_minus) / window, truncated.  ``window`` is the full span 2h."""
    window = as_rational(window)
    if window <= 0:
        raise DomainError("window must be positive")
    return to_fixed((as_rational(f_plus) - as_rational(f_minus)) / window, precision)


def central_second_derivative(
    f_plus: RationalLike | FixedDecimal,
    f_center: RationalLike | FixedDecimal,
    f_minus: RationalLike | FixedDecimal,
    half_window: RationalLike,
    precision: int = 12,
) -> FixedDecimal:
    """(f_plus - 2 f_center + f_minus) / h^2."""
    h = as_rational(half_window)
    if h <= 0:
        raise DomainError("half window must be positive")
    num = as_rational(f_plus) - 2 * as_rational(f_center) + as_rational(f_minus)
    return to_fixed(num / (h * h), precision)


def sample_sine_derivative(phi: RationalLike, h: RationalLike, precision: int = 12) -> DifferenceSample:
    """Sample sin at phi - h, phi, phi + h (radians) and form both central differences."""
    phi, h = as_rational(phi), as_rational(h)
    if h <= 0:
        raise DomainError("h must be positive")
    work = precision + 6
    plus = eval_trig("sine", phi + h, work)
    minus = eval_trig("sine", phi - h, work)
    center = eval_trig("sine", phi, work)
    return DifferenceSample(
        phi=phi,
        delta_phi=h,
        f_plus=plus,
        f_minus=minus,
        f_center=center,
        estimate=central_first_derivative(plus, minus, 2 * h, precision),
        second_estimate=central_second_derivative(plus, center, minus, h, precision),
    )
