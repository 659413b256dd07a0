"""
Binomial state representation

A chart of the blowup tree carries a binomial x^C (x^A - rho x^B), where the
exponent vectors A and B have disjoint supports, together with the 0/1 vector
E marking the variables that are exceptional divisors in this chart.
The coefficient rho never influences the combinatorics; it is kept as a
display tag.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from monoforge.core.errors import DegenerateZero, DimensionMismatch, InvalidExponent

ExponentVector = Tuple[int, ...]
Coefficient = Union[Fraction, int, str]


class IotaTuple(NamedTuple):
    """Termination measure compared lexicographically (it is a plain tuple)."""

    alpha: int
    alpha_count: int
    beta: int
    beta_count: int


class InvPair(NamedTuple):
    """Smaller and larger total degree of the two monomials."""

    low: int
    high: int


def exponent_vector(values: Iterable[int]) -> ExponentVector:
    """Validate and freeze an exponent vector."""
    vector = tuple(values)
    for entry in vector:
        if isinstance(entry, bool) or not isinstance(entry, int) or entry < 0:
            raise InvalidExponent(f"exponents must be non-negative integers, got {entry!r}")
    return vector


def zero_vector(n: int) -> ExponentVector:
    return (0,) * n


def check_dimensions(*vectors: Sequence[int]) -> int:
    """Return the common length of ``vectors`` or raise DimensionMismatch."""
    lengths = {len(v) for v in vectors}
    if len(lengths) != 1:
        raise DimensionMismatch(f"exponent vectors differ in length: {sorted(lengths)}")
    return lengths.pop()


def as_fraction(rho: Coefficient) -> Fraction:
    return rho if isinstance(rho, Fraction) else Fraction(rho)


def support(vector: Sequence[int]) -> Tuple[int, ...]:
    """Indices with a non-zero entry, ascending."""
    return tuple(i for i, entry in enumerate(vector) if entry)


def lift(vector: Sequence[int], center: Sequence[int], var: int) -> ExponentVector:
    """
    Exponent vector of a monomial after substituting x_j -> x_var * x_j for j in the center.

    Only the ``var`` slot changes: it collects the sum over the center.
    """
    lifted = list(vector)
    lifted[var] = sum(vector[j] for j in center)
    return tuple(lifted)


def normalize(
    a_raw: Sequence[int], b_raw: Sequence[int], rho: Coefficient = 1
) -> Tuple[ExponentVector, ExponentVector, ExponentVector]:
    """
    Split two raw exponent vectors into (A, B, C) with C the componentwise minimum.

    Raises:
        DimensionMismatch: the vectors have different lengths
        InvalidExponent: an entry is negative
        DegenerateZero: the vectors coincide and rho is 1

    When the vectors coincide and rho is not 1 the result has A = B = 0, i.e. the
    binomial is already a monomial times a unit.
    """
    check_dimensions(a_raw, b_raw)
    a_raw = exponent_vector(a_raw)
    b_raw = exponent_vector(b_raw)
    if a_raw == b_raw and as_fraction(rho) == 1:
        raise DegenerateZero("x^A - x^B vanishes identically when A equals B")
    common = tuple(min(a, b) for a, b in zip(a_raw, b_raw))
    a = tuple(x - c for x, c in zip(a_raw, common))
    b = tuple(x - c for x, c in zip(b_raw, common))
    return a, b, common


def iota(a: Sequence[int], b: Sequence[int]) -> IotaTuple:
    """Largest entries of A and B and how often each occurs."""
    alpha = max(a, default=0)
    beta = max(b, default=0)
    return IotaTuple(alpha, list(a).count(alpha), beta, list(b).count(beta))


def inv_pair(a: Sequence[int], b: Sequence[int]) -> InvPair:
    sa, sb = sum(a), sum(b)
    return InvPair(min(sa, sb), max(sa, sb))


@dataclass(frozen=True, slots=True)
class BinomialState:
    """The normalized binomial of one chart."""

    a: ExponentVector
    b: ExponentVector
    c: ExponentVector
    e: ExponentVector
    rho: str = "1"

    def __post_init__(self):
        check_dimensions(self.a, self.b, self.c, self.e)
        if any(x and y for x, y in zip(self.a, self.b)):
            raise ValueError("A and B must have disjoint supports")

    @classmethod
    def from_raw(
        cls,
        a_raw: Sequence[int],
        b_raw: Sequence[int],
        rho: Coefficient = 1,
        c: Sequence[int] = (),
        e: Sequence[int] = (),
    ) -> "BinomialState":
        """
        Build a state from raw exponents, pulling the common factor into C.

        ``c`` is an extra monomial factor already in front of the binomial and
        ``e`` the exceptional marker; both default to zero.
        """
        a, b, common = normalize(a_raw, b_raw, rho)
        n = len(a)
        c = exponent_vector(c) if c else zero_vector(n)
        e = exponent_vector(e) if e else zero_vector(n)
        check_dimensions(a, c, e)
        c = tuple(x + y for x, y in zip(c, common))
        return cls(a, b, c, e, str(as_fraction(rho)))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def degree_a(self) -> int:
        return sum(self.a)

    @property
    def degree_b(self) -> int:
        return sum(self.b)

    @property
    def rho_fraction(self) -> Fraction:
        return Fraction(self.rho)

    @property
    def iota(self) -> IotaTuple:
        return iota(self.a, self.b)

    @property
    def inv(self) -> InvPair:
        return inv_pair(self.a, self.b)

    @property
    def is_unit(self) -> bool:
        """True when the bracket is a unit, i.e. A = B = 0."""
        return not any(self.a) and not any(self.b)
