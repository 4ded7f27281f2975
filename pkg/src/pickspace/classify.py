"""Decide whether a complete Pick space is a rescaled model space, six ways.

For a space ``H ~ DA(X)`` the following are equivalent, and each is evaluated
here on its own:

1. ``X`` lies in one complex geodesic;
2. every triple ``{x_0, x_i, x_j}`` lies in a complex geodesic;
3. for some base point the extremal vanishing multiplier attains the product
   of the distances to the other points;
4. ``H`` is r-orthogonal;
5. ``H`` rescales to a space whose Gram is an orthogonal matrix;
6. ``H`` is a rescaled model space ``K_B``.

The report records every verdict with the statistic it was decided on, and
whether all applicable verdicts agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .conjugation import orthogonality_residual, r_orthogonality_witness
from .errors import DegenerateGram, NotInF
from .gram import DEFAULT_TOL, are_rescalings, as_gram, check_nondegenerate, dual_gram
from .hyperbolic import as_points, geodesic_coordinates, in_single_geodesic
from .multipliers import complement, delta_product, extremal_vanishing_multiplier
from .pick import da_gram, is_complete_pick, model_gram, realize_in_ball

CRITERIA = (
    "c1_geodesic",
    "c2_triples",
    "c3_extremal_product",
    "c4_r_orthogonal",
    "c5_orthogonal_gram",
    "c6_model",
)


class Status(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    NOT_APPLICABLE = "not_applicable"

    @classmethod
    def of(cls, flag):
        return cls.TRUE if flag else cls.FALSE


@dataclass
class CriterionResult:
    """One verdict.  ``statistic <= threshold`` is what makes it true."""

    status: Status
    statistic: float | None = None
    threshold: float | None = None
    detail: dict = field(default_factory=dict)

    @property
    def borderline(self):
        if self.statistic is None or not self.threshold:
            return False
        return self.threshold / 10 <= self.statistic <= 10 * self.threshold

    def to_dict(self):
        return {
            "status": self.status.value,
            "statistic": self.statistic,
            "threshold": self.threshold,
            "borderline": self.borderline,
            "detail": self.detail,
        }


@dataclass
class ClassificationReport:
    c1_geodesic: CriterionResult
    c2_triples: CriterionResult
    c3_extremal_product: CriterionResult
    c4_r_orthogonal: CriterionResult
    c5_orthogonal_gram: CriterionResult
    c6_model: CriterionResult
    gram_route: dict | None = None

    def results(self):
        return {name: getattr(self, name) for name in CRITERIA}

    def verdicts(self):
        return {name: r.status for name, r in self.results().items()}

    @property
    def consistent(self):
        applicable = {s for s in self.verdicts().values() if s is not Status.NOT_APPLICABLE}
        agree = len(applicable) <= 1
        if self.gram_route is not None:
            agree = agree and self.gram_route["agrees"]
        return agree

    @property
    def is_model_space(self):
        """The common verdict; if the criteria disagree, the geodesic test decides."""
        return self.c1_geodesic.status is Status.TRUE

    @property
    def borderline(self):
        return sorted(name for name, r in self.results().items() if r.borderline)

    def to_dict(self):
        out = {name: r.to_dict() for name, r in self.results().items()}
        out["consistent"] = self.consistent
        out["is_model_space"] = self.is_model_space
        out["borderline"] = self.borderline
        if self.gram_route is not None:
            out["gram_route"] = self.gram_route
        return out


def _extremal_criterion(g, tol):
    n = len(g)
    per_base = []
    for x in range(n):
        ext = extremal_vanishing_multiplier(g, x, complement(n, x), tol).value
        prod = delta_product(g, x)
        gap = (ext - prod) / max(ext, prod)
        per_base.append({"base": x, "extremal": ext, "product": prod, "gap": gap})
    best = min(per_base, key=lambda r: abs(r["gap"]))
    holds = abs(best["gap"]) <= tol.match_tol
    return CriterionResult(
        Status.of(holds), abs(best["gap"]), tol.match_tol,
        {"best_base": best["base"], "per_base": per_base},
    )


def _orthogonality_criteria(g, tol):
    rep = r_orthogonality_witness(g, tol)
    c4 = CriterionResult(
        Status.of(rep.r_orthogonal), rep.ratio, tol.rankone_tol, {"verdict": rep.verdict.value})
    if rep.witness is None:
        c5 = CriterionResult(Status.FALSE, None, tol.match_tol, {"reason": rep.verdict.value})
    else:
        lam = rep.witness.lambdas
        residual = orthogonality_residual(rep.witness.unapply(g))
        c5 = CriterionResult(
            Status.of(residual <= tol.match_tol), residual, tol.match_tol,
            {"lambdas": lam},
        )
    return c4, c5


def classify_points(x, tol=DEFAULT_TOL):
    """Evaluate all six criteria for the Drury-Arveson space of the points ``x``."""
    x = as_points(x, tol)
    n = len(x)
    g = da_gram(x, tol)

    geo = in_single_geodesic(x, tol)
    c1 = CriterionResult(
        Status.of(geo.holds), geo.ratio, tol.rankone_tol,
        {"direction": geo.direction} if geo.holds else {},
    )

    if n >= 3:
        ratios = [in_single_geodesic(x[[0, i, j]], tol).ratio
                  for i, j in combinations(range(1, n), 2)]
        worst = max(ratios)
        c2 = CriterionResult(Status.of(worst <= tol.rankone_tol), worst, tol.rankone_tol)
    else:
        c2 = CriterionResult(Status.NOT_APPLICABLE, detail={"reason": "fewer than three points"})

    c3 = _extremal_criterion(g, tol)
    c4, c5 = _orthogonality_criteria(g, tol)

    if not geo.holds:
        c6 = CriterionResult(Status.FALSE, None, tol.match_tol, {"reason": "not in a single geodesic"})
    else:
        zeros = geodesic_coordinates(x, tol)
        witness = are_rescalings(g, model_gram(zeros, tol), tol)
        if witness is None:
            c6 = CriterionResult(Status.FALSE, None, tol.match_tol, {"zeros": zeros})
        else:
            c6 = CriterionResult(
                Status.TRUE, witness.residual, tol.match_tol,
                {"zeros": zeros, "lambdas": witness.lambdas},
            )
    return ClassificationReport(c1, c2, c3, c4, c5, c6)


def classify_gram(g, tol=DEFAULT_TOL):
    """Classify a complete Pick Gram.

    The Gram is realised as a point set and classified geometrically; the
    Gram-intrinsic criteria 3 to 5 are also evaluated on ``g`` itself and must
    agree with the point-set route.
    """
    g = as_gram(g, tol)
    if not is_complete_pick(g, tol):
        raise NotInF("Gram is not a complete Pick Gram")
    realization = realize_in_ball(g, tol)
    report = classify_points(realization.points, tol)
    c3 = _extremal_criterion(g, tol)
    c4, c5 = _orthogonality_criteria(g, tol)
    direct = {"c3_extremal_product": c3, "c4_r_orthogonal": c4, "c5_orthogonal_gram": c5}
    agrees = all(r.status is getattr(report, name).status for name, r in direct.items())
    report.gram_route = {
        "agrees": agrees,
        "direct": {name: r.to_dict() for name, r in direct.items()},
        "points": realization.points,
    }
    return report


@dataclass(frozen=True)
class DualProbe:
    dual_in_F: bool
    dual_in_M: bool
    report: ClassificationReport | None = None

    def to_dict(self):
        out = {"dual_in_F": self.dual_in_F, "dual_in_M": self.dual_in_M}
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out


def dual_membership_probe(g, tol=DEFAULT_TOL):
    """Is the dual space ``H^#`` (Gram ``inv(g)``) complete Pick, and a model space?

    A zero entry in the dual Gram rules out the complete Pick property.
    """
    g = as_gram(g, tol)
    check_nondegenerate(g, tol)
    d = dual_gram(g, tol)
    try:
        in_f = is_complete_pick(d, tol)
    except DegenerateGram:
        return DualProbe(False, False)
    if not in_f:
        return DualProbe(False, False)
    report = classify_gram(d, tol)
    return DualProbe(True, report.is_model_space, report)

