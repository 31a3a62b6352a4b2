"""Residue-field factorization of a reduced polynomial, with lifts.

Given monic f over the ring of integers of a valued base, the engine
needs the monic irreducible factors phi_bar_i of the reduction f_bar,
their multiplicities l_i, and one monic lift phi_i over the ring for
each factor. Factors are kept in a canonical order (degree, then
coefficient indices from the leading end down) so that output is a pure
function of the input and the seed only feeds the internal splitting
randomness, never the result.
"""

from dataclasses import dataclass

from . import ffpoly, rings
from .errors import InputError


@dataclass(frozen=True)
class ResidueFactorization:
    """Factorization of the reduced polynomial plus chosen monic lifts.

    factors: tuple of (phi_bar, multiplicity) in canonical order.
    lifts:   tuple of monic polynomials over the ring, one per factor,
             congruent to the corresponding phi_bar.
    """

    field: object
    factors: tuple
    lifts: tuple

    @property
    def repeated_indices(self):
        return tuple(i for i, (_, l) in enumerate(self.factors) if l >= 2)

    def multiplicity_one(self):
        return not self.repeated_indices


def factor_residue(fbar, field, seed=0):
    """Canonical list of (irreducible factor, multiplicity) of monic fbar."""
    if ffpoly.deg(fbar) is ffpoly.MINUS_INF or ffpoly.deg(fbar) < 1:
        raise InputError("reduced polynomial must have degree >= 1")
    if not ffpoly.is_monic(field, fbar):
        raise InputError("reduced polynomial must be monic")
    return ffpoly.factor_monic(field, fbar, seed=seed)


def monic_lift(phibar, base):
    """Canonical monic lift of a monic residue factor."""
    lifted = rings.lift_residue_poly(phibar, base)
    # coefficientwise lift of a monic residue polynomial is monic for
    # both bases: representatives of 1 are 1
    return lifted


def check_lift(phi, phibar, base):
    """Validate a caller-supplied lift: monic, right degree, right image."""
    ring = base.ring
    if not rings.is_monic_poly(phi, ring):
        raise InputError("lift must be monic")
    if rings.poly_deg(phi) != ffpoly.deg(phibar):
        raise InputError("lift must have the same degree as the residue factor")
    if rings.reduce_mod(phi, base) != phibar:
        raise InputError("lift does not reduce to the residue factor")
    return phi


def residue_factorization(f, base, seed=0, lifts=None):
    """Factor the reduction of monic f and attach monic lifts.

    ``lifts`` optionally overrides the canonical lifts; it must supply
    one monic lift per factor, in the canonical factor order.
    """
    field = base.residue_field
    fbar = rings.reduce_mod(f, base)
    if ffpoly.deg(fbar) != rings.poly_deg(f):
        raise InputError("polynomial must be monic over the ring of integers")
    factors = factor_residue(fbar, field, seed=seed)
    if lifts is None:
        chosen = tuple(monic_lift(phibar, base) for phibar, _ in factors)
    else:
        if len(lifts) != len(factors):
            raise InputError("one lift per residue factor is required")
        chosen = tuple(
            check_lift(phi, phibar, base)
            for phi, (phibar, _) in zip(lifts, factors)
        )
    return ResidueFactorization(field=field, factors=tuple(factors), lifts=chosen)


def adic_valuation(gbar, phibar, field):
    """Multiplicity of the irreducible phibar in gbar (inf at zero)."""
    if not gbar:
        return rings.INF
    v = 0
    while True:
        q, r = ffpoly.divmod_(field, gbar, phibar)
        if r:
            return v
        gbar = q
        v += 1
