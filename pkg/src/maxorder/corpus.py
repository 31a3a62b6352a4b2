"""Randomized cross-validation of the engine over seeded instance streams.

Each instance is a random monic polynomial over a chosen base. Four
suites run over the stream:

* oracle: the remainder verdict and the classical gcd verdict are both
  computed on every instance (inside ``dedekind_verdict``) and must
  agree.
* lifts: the verdict is recomputed with randomly perturbed monic lifts
  phi_i + prime * U_i and must not change.
* splits: on every affirmative verdict the splitting report is built and
  its sum of e*f must equal the degree.
* identities: on every affirmative verdict with a repeated residue
  factor the valuation identities are recomputed from lifted branches
  and must all hold.

Any violation raises ``CorpusDisagreementError`` carrying a one-line
reproducer (seed, base, instance index, and the polynomial itself).
The whole run is a pure function of the seed and the suite selection.
"""

import random
from dataclasses import dataclass, replace

from . import ffpoly, rings
from .criterion import dedekind_verdict, split_prime
from .errors import (
    CorpusDisagreementError,
    InternalInvariantError,
    PrecisionExhaustedError,
)
from .hensel import verify_valuation_identities

SUITES = ("oracle", "lifts", "splits", "identities")
LIFT_PERTURBATION_BOUND = 3
COEFFICIENT_T_DEGREE = 3


@dataclass(frozen=True)
class BaseReport:
    label: str
    instances: int
    verdict_true: int
    verdict_false: int
    repeated: int
    lift_checks: int
    splits_checked: int
    identities_checked: int


@dataclass(frozen=True)
class CorpusReport:
    seed: int
    max_deg: int
    suites: tuple
    per_base: tuple

    def _total(self, name):
        return sum(getattr(r, name) for r in self.per_base)

    @property
    def instances(self):
        return self._total("instances")

    @property
    def verdict_true(self):
        return self._total("verdict_true")

    @property
    def verdict_false(self):
        return self._total("verdict_false")

    @property
    def repeated(self):
        return self._total("repeated")

    @property
    def lift_checks(self):
        return self._total("lift_checks")

    @property
    def splits_checked(self):
        return self._total("splits_checked")

    @property
    def identities_checked(self):
        return self._total("identities_checked")

    disagreements = 0


def random_coefficient(rng, base, t_degree=COEFFICIENT_T_DEGREE):
    if base.kind == "Q":
        bound = 4 * base.prime * base.prime
        return rng.randint(-bound, bound)
    field = base.ring.field
    return ffpoly.trim(
        field, [field.element(rng.randrange(field.q)) for _ in range(t_degree + 1)]
    )


def random_monic_poly(rng, base, max_deg):
    d = rng.randint(1, max_deg)
    coeffs = [random_coefficient(rng, base) for _ in range(d)]
    coeffs.append(base.ring.one)
    return tuple(coeffs)


def perturbed_lifts(rng, rf, base):
    """Replace each canonical lift phi by phi + prime * U, deg U < deg phi."""
    ring = base.ring
    out = []
    for phi in rf.lifts:
        m = rings.poly_deg(phi)
        if base.kind == "Q":
            U = [rng.randint(-LIFT_PERTURBATION_BOUND, LIFT_PERTURBATION_BOUND) for _ in range(m)]
        else:
            U = [random_coefficient(rng, base, 1) for _ in range(m)]
        shift = rings.poly_scale(rings.poly_trim(U, ring), base.prime_element, ring)
        out.append(rings.poly_add(phi, shift, ring))
    return tuple(out)


def _reproduce(seed, label, index, f, base):
    return (
        f"reproduce with seed={seed} base='{label}' instance={index} "
        f"poly='{rings.poly_to_text(f, base)}'"
    )


def run_corpus(pairs, max_deg=8, seed=0, lifts_per_instance=2, suites=SUITES):
    """Run the selected suites over ``pairs`` of (base, instance count)."""
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    rng = random.Random(seed)
    reports = []
    for base, count in pairs:
        label = base.describe()
        vt = vf = rep = lc = sc = ic = 0
        for index in range(count):
            f = random_monic_poly(rng, base, max_deg)
            where = _reproduce(seed, label, index, f, base)
            try:
                verdict = dedekind_verdict(f, base, seed=index, assume_irreducible=True)
            except InternalInvariantError as exc:
                raise CorpusDisagreementError(f"{exc}; {where}") from exc
            if verdict.integrally_closed:
                vt += 1
            else:
                vf += 1
            if verdict.repeated_indices:
                rep += 1
            if "lifts" in suites:
                for _ in range(lifts_per_instance):
                    rf2 = replace(
                        verdict.factorization,
                        lifts=perturbed_lifts(rng, verdict.factorization, base),
                    )
                    try:
                        v2 = dedekind_verdict(f, base, seed=index, _rf=rf2)
                    except InternalInvariantError as exc:
                        raise CorpusDisagreementError(f"{exc}; {where}") from exc
                    if v2.integrally_closed != verdict.integrally_closed:
                        raise CorpusDisagreementError(
                            f"verdict changed under a perturbed lift; {where}"
                        )
                    lc += 1
            if "splits" in suites and verdict.integrally_closed:
                try:
                    split_prime(f, base, _verdict=verdict)
                except InternalInvariantError as exc:
                    raise CorpusDisagreementError(f"{exc}; {where}") from exc
                sc += 1
            if (
                "identities" in suites
                and verdict.integrally_closed
                and verdict.repeated_indices
            ):
                try:
                    report = verify_valuation_identities(f, base, _verdict=verdict)
                except (InternalInvariantError, PrecisionExhaustedError) as exc:
                    raise CorpusDisagreementError(f"{exc}; {where}") from exc
                if not report.passed:
                    raise CorpusDisagreementError(
                        f"a valuation identity failed on lifted branches; {where}"
                    )
                ic += 1
        reports.append(
            BaseReport(
                label=label,
                instances=count,
                verdict_true=vt,
                verdict_false=vf,
                repeated=rep,
                lift_checks=lc,
                splits_checked=sc,
                identities_checked=ic,
            )
        )
    return CorpusReport(
        seed=seed, max_deg=max_deg, suites=tuple(suites), per_base=tuple(reports)
    )
