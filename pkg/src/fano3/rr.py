"""Orbifold Riemann-Roch machinery.

Local corrections at orbifold points and crepant curves, the h^0(sA)
evaluator, the slack functional ``nabla`` that budgets total crepant-curve
degree, the Kawamata-Miyaoka bound, and the translation of integrality
constraints into finite residue systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import sigma_pair
from .basket import Basket, gorenstein_index

__all__ = [
    "CrepantCurve",
    "CurveConfig",
    "UnknownTerm",
    "ResidueConstraintSystem",
    "c_orbifold",
    "c_curve",
    "h0_sA",
    "residue_term_builder",
    "km_bound",
    "nabla",
    "delta_lower_bound",
]


@dataclass(frozen=True)
class CrepantCurve:
    """A crepant curve of type A_{j-1} (j >= 2).

    ``degree_rXKC`` is the integer -r_X K.C; ``generator_unit`` is the unit
    u mod j describing which class generator the polarization restricts to,
    or None when unknown (then integrality arguments quantify over it).
    """

    j: int
    degree_rXKC: int
    generator_unit: int | None = None

    def __post_init__(self):
        if self.j < 2:
            raise ValueError("crepant curve type needs j >= 2")
        if self.degree_rXKC <= 0:
            raise ValueError("curve degree must be positive")
        if self.generator_unit is not None and gcd(self.generator_unit, self.j) != 1:
            raise ValueError("generator unit must be coprime to j")


@dataclass(frozen=True)
class CurveConfig:
    """Crepant curves of a candidate: listed curves with j >= 3 plus the
    aggregated A_1 degree x_A1 (None while still undetermined)."""

    curves: tuple = ()
    x_A1: int | None = 0
    # a_1 curves allowed at all (False forces x_A1 = 0)
    a1_allowed: bool = True
    # at least one A_1 curve must exist (so x_A1 > 0)
    a1_forced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        for c in self.curves:
            if c.j < 3:
                raise ValueError("A_1 curves enter only through the aggregate x_A1")
        if self.x_A1 is not None and self.x_A1 < 0:
            raise ValueError("x_A1 must be nonnegative")


def c_orbifold(r: int, b: int, i: int) -> Fraction:
    """Riemann-Roch correction of an orbifold point (r, b) at local index i.

    c_Q(D) = -i(r^2-1)/(12r) + sum_{k<i} sigma_pair(k*b, r); periodic in i
    with period r.
    """
    if r < 2 or not (0 < 2 * b <= r) or gcd(b, r) != 1:
        raise ValueError(f"invalid orbifold point ({r},{b})")
    if i < 0:
        raise ValueError("local index must be nonnegative")
    val = Fraction(-i * (r * r - 1), 12 * r)
    val += sum((sigma_pair(k * b, r) for k in range(i)), Fraction(0))
    return val


def c_curve(j: int, unit: int, s: int) -> Fraction:
    """Riemann-Roch correction of a crepant curve of type A_{j-1}:
    -sigma_pair(s * unit, j)."""
    if j < 2:
        raise ValueError("need j >= 2")
    if gcd(unit, j) != 1:
        raise ValueError("unit must be coprime to j")
    return -sigma_pair(s * unit, j)


def h0_sA(q: int, A2mK, cfg: CurveConfig, B: Basket, idx, s: int) -> Fraction:
    """Exact h^0(sA) for 0 < s < q, given full local data.

    ``A2mK`` is the exact value -A^2.K = r_Xc1^3 / (r_X q^2); ``idx`` maps
    basket position -> local index i at that point.  The result is an
    integer whenever the inputs describe a genuine variety, but the
    function does not assume it.
    """
    if not 0 < s < q:
        raise ValueError(f"need 0 < s < q, got s={s}, q={q}")
    r_x = gorenstein_index(B)
    val = Fraction(s * s, 2) * Fraction(A2mK) + 2
    for c in cfg.curves:
        if c.generator_unit is None:
            raise ValueError("h0_sA needs concrete generator units")
        val += Fraction(c.degree_rXKC, r_x) * c_curve(c.j, c.generator_unit, s)
    if cfg.x_A1 is None:
        raise ValueError("h0_sA needs a concrete x_A1")
    val -= Fraction(cfg.x_A1 * (s % 2), 4 * r_x)
    for pos, p in enumerate(B):
        i = idx.get(pos, 0) if hasattr(idx, "get") else idx[pos]
        val -= sigma_pair(i * p.b, p.r)
    return val


@dataclass(frozen=True)
class UnknownTerm:
    """One unknown residue in a constraint system.

    shape "quadratic": value(u) = coeff * u(m-u)/(2m)  (orbifold/curve term)
    shape "linear":    value(u) = coeff * u            (aggregated degree)
    In both shapes u ranges over [0, m).
    """

    coeff: Fraction
    modulus: int
    shape: str = "quadratic"
    label: str = ""

    def value(self, u: int) -> Fraction:
        if self.shape == "quadratic":
            return self.coeff * Fraction(u * (self.modulus - u), 2 * self.modulus)
        return self.coeff * u


@dataclass
class ResidueConstraintSystem:
    """Does some assignment of the unknown residues make the total integral?"""

    constant: Fraction
    fixed_terms: list = field(default_factory=list)
    unknown_terms: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def total(self, assignment) -> Fraction:
        val = self.constant + sum(self.fixed_terms, Fraction(0))
        for t, u in zip(self.unknown_terms, assignment):
            val += t.value(u)
        return val

    @property
    def domain_size(self) -> int:
        size = 1
        for t in self.unknown_terms:
            size *= t.modulus
        return size


def residue_term_builder(
    q: int,
    rXc13: int,
    B: Basket,
    cfg: CurveConfig,
    r_prime: int,
    s: int,
    cartier_codim2: bool = False,
    drop_curve_terms: bool = True,
) -> ResidueConstraintSystem:
    """Instantiate the general integrality constraint for D = sA and a
    chosen auxiliary index r'.

    The constraint says -(r'/2) D^2.K + sum (-r'K.C) c_C(D) - sum of
    orbifold corrections is an integer; terms that are integral for every
    residue choice are dropped (and noted), the rest become unknowns.
    With ``cartier_codim2`` the divisor is Cartier in codimension 2 and all
    curve corrections vanish identically.  ``drop_curve_terms=False`` keeps
    curve unknowns even when the vanishing rule applies, so a certificate
    can exhaust the full published residue domain.
    """
    r_x = gorenstein_index(B)
    sys = ResidueConstraintSystem(
        constant=Fraction(r_prime * s * s, 2) * Fraction(rXc13, r_x * q * q)
    )
    if cartier_codim2:
        sys.notes.append("curve corrections vanish: divisor Cartier in codimension 2")
    else:
        for c in cfg.curves:
            deg = Fraction(r_prime * c.degree_rXKC, r_x)
            if drop_curve_terms and deg.denominator == 1 and _curve_term_integral(c.j, int(deg)):
                sys.notes.append(f"A_{c.j - 1} term drops: degree {deg} kills the correction")
                continue
            if c.generator_unit is not None:
                sys.fixed_terms.append(-deg * sigma_pair(s * c.generator_unit, c.j))
            else:
                sys.unknown_terms.append(
                    UnknownTerm(-deg, c.j, "quadratic", f"A_{c.j - 1} class")
                )
        if cfg.a1_allowed and s % 2 == 1:
            coeff = -Fraction(r_prime, 4 * r_x)
            if cfg.x_A1 is not None:
                sys.fixed_terms.append(coeff * cfg.x_A1)
            elif coeff.denominator == 1:
                sys.notes.append("A_1 aggregate drops: coefficient integral")
            else:
                sys.unknown_terms.append(
                    UnknownTerm(coeff, coeff.denominator, "linear", "x_A1")
                )
        elif cfg.a1_allowed:
            sys.notes.append("A_1 aggregate drops: even multiple of the polarization")
    for p in B:
        if (p.r % 2 == 1 and r_prime % p.r == 0) or (
            p.r % 2 == 0 and r_prime % (2 * p.r) == 0
        ):
            sys.notes.append(f"orbifold point ({p.r},{p.b}) drops: r' = {r_prime}")
            continue
        sys.unknown_terms.append(
            UnknownTerm(Fraction(-r_prime), p.r, "quadratic", f"point ({p.r},{p.b})")
        )
    return sys


def _curve_term_integral(j: int, deg: int) -> bool:
    """Whether deg * sigma_pair(a, j) is integral for every residue a."""
    if j % 2 == 1:
        return deg % j == 0
    return deg % (2 * j) == 0


def km_bound(l: int, r1: int, p: int = 0, q: int = 0) -> Fraction:
    """Kawamata-Miyaoka type upper bound on c1^3 / (c2.c1-hat).

    Piecewise in the Harder-Narasimhan shape (l, r1) of the tangent sheaf;
    p is the index of the destabilizing rank-2 subsheaf where relevant.
    """
    if (l, r1) == (1, 3):
        return Fraction(3)
    if (l, r1) == (2, 1):
        return Fraction(16, 5)
    if (l, r1) == (2, 2):
        return Fraction(4 * q * q, p * (4 * q - 3 * p))
    if (l, r1) == (3, 1):
        return Fraction(4 * q * q, -4 * p * p + 6 * p * q - q * q)
    raise ValueError(f"invalid Harder-Narasimhan shape ({l},{r1})")


def nabla(q: int, rXc13, rXc2c1) -> Fraction:
    """Slack budget: r_Xc2c1 - ((q^2+2q-4)/(4q^2)) * r_Xc1^3."""
    if q < 1:
        raise ValueError("q must be positive")
    return Fraction(rXc2c1) - Fraction(q * q + 2 * q - 4, 4 * q * q) * Fraction(rXc13)


def delta_lower_bound(cfg: CurveConfig) -> Fraction:
    """Total crepant-curve contribution sum (j - 1/j) * degree, with the
    A_1 aggregate contributing (3/2) x_A1.  Needs all degrees known."""
    if cfg.x_A1 is None:
        raise ValueError("x_A1 still symbolic; pin it before bounding")
    total = Fraction(3, 2) * cfg.x_A1
    for c in cfg.curves:
        total += Fraction(c.j * c.j - 1, c.j) * c.degree_rXKC
    return total
