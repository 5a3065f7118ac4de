"""Secant dimensions and defectivity of Segre-Veronese embeddings.

The image of P^{n_1} x ... x P^{n_k} under the multidegree-d embedding
lives in P^{L-1}, L = number of monomials.  By the double-point
(tangent-space) criterion, the codimension of the r-th secant variety
equals the dimension of the system of forms with r general 2-fat base
points.  Hence the secant variety has the expected dimension iff that
system is regular (or zero once the virtual dimension goes negative).
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import Certificate, DimensionVerdict, PrimeFieldConfig, dimension
from .schemes import FatPointScheme, conditions_of_fat_point, make_scheme
from .spaces import Multidegree, MultiProjectiveSpace, basis_size


@dataclass
class SecantVerdict:
    space: MultiProjectiveSpace
    degree: Multidegree
    r: int
    expected_dim: int
    actual_dim: int
    defect: int
    defective: bool
    certificate: Certificate

    @property
    def certified(self) -> bool:
        return self.certificate.status.certified

    def to_json(self) -> dict:
        return {
            "space": list(self.space.factor_dims),
            "degree": list(self.degree.degrees),
            "r": self.r,
            "expected_dim": self.expected_dim,
            "actual_dim": self.actual_dim,
            "defect": self.defect,
            "defective": self.defective,
            "certificate": self.certificate.to_json(),
        }


def secant_expected_dim(
    space: MultiProjectiveSpace, degree: Multidegree, r: int
) -> int:
    L = basis_size(space, degree)
    N = space.ambient_dim()
    return min(L - 1, r * (N + 1) - 1)


def secant_dim(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    r: int,
    config: PrimeFieldConfig | None = None,
) -> SecantVerdict:
    """Dimension of the r-th secant variety via r general 2-fat points."""
    if r < 1:
        raise ValueError("r must be >= 1")
    L = basis_size(space, degree)
    cert = dimension(space, degree, make_scheme([(2, r)]), config)
    actual = L - 1 - cert.computed_dim
    exp = secant_expected_dim(space, degree, r)
    defect = exp - actual
    return SecantVerdict(space, degree, r, exp, actual, defect, defect > 0, cert)


def critical_r(space: MultiProjectiveSpace, degree: Multidegree) -> tuple[int, int]:
    """(r_low, r_high): the largest r with nonnegative virtual dimension of
    the 2-fat point system, and the smallest r with negative one.  Proving
    regularity at r_low and emptiness at r_high certifies non-defectivity
    for all r at once."""
    L = basis_size(space, degree)
    N1 = space.ambient_dim() + 1
    r_low = L // N1
    return r_low, r_low + 1


@dataclass
class DefectivityReport:
    space: MultiProjectiveSpace
    degree: Multidegree
    r_low: int
    r_high: int
    low: Certificate
    high: Certificate

    @property
    def certified_nondefective(self) -> bool:
        return (
            self.low.status == DimensionVerdict.REGULAR
            or (self.low.status == DimensionVerdict.ZERO and self.low.virtual_dim == 0)
        ) and self.high.status == DimensionVerdict.ZERO

    @property
    def defective_evidence(self) -> list[int]:
        out = []
        if self.low.status == DimensionVerdict.SPECIAL_CANDIDATE:
            out.append(self.r_low)
        if self.high.status == DimensionVerdict.SPECIAL_CANDIDATE:
            out.append(self.r_high)
        return out

    def to_json(self) -> dict:
        return {
            "space": list(self.space.factor_dims),
            "degree": list(self.degree.degrees),
            "r_low": self.r_low,
            "r_high": self.r_high,
            "low": self.low.to_json(),
            "high": self.high.to_json(),
            "certified_nondefective": self.certified_nondefective,
            "defective_evidence": self.defective_evidence,
        }


def is_defective(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    config: PrimeFieldConfig | None = None,
) -> DefectivityReport:
    r_low, r_high = critical_r(space, degree)
    low = dimension(space, degree, make_scheme([(2, r_low)]), config)
    high = dimension(space, degree, make_scheme([(2, r_high)]), config)
    return DefectivityReport(space, degree, r_low, r_high, low, high)


@dataclass
class HypothesisReport:
    """Checks, for both candidate numbers of colliding-point blocks, the
    four hypotheses under which a single (n+1)-point collision argument
    certifies non-defectivity for all r."""

    space: MultiProjectiveSpace
    degree: Multidegree
    r_values: tuple[int, ...]
    big_enough: bool  # dim of the full system >= (N+1)^2
    gap_ok: bool  # dim L(3) - dim L(4) >= C(N+1, 2)
    dim3: int
    dim4: int
    per_r: dict[int, dict]

    @property
    def all_hold(self) -> bool:
        return (
            self.big_enough
            and self.gap_ok
            and all(
                d["residual_regular"] and d["quartic_zero"]
                for d in self.per_r.values()
            )
        )

    def to_json(self) -> dict:
        return {
            "space": list(self.space.factor_dims),
            "degree": list(self.degree.degrees),
            "r_values": list(self.r_values),
            "big_enough": self.big_enough,
            "gap_ok": self.gap_ok,
            "dim3": self.dim3,
            "dim4": self.dim4,
            "per_r": {
                str(r): dict(d, certificates=None) for r, d in self.per_r.items()
            },
            "all_hold": self.all_hold,
        }


def theorem_hypotheses(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    config: PrimeFieldConfig | None = None,
) -> HypothesisReport:
    L = basis_size(space, degree)
    N = space.ambient_dim()
    r_lo = L // (N + 1)
    r_hi = -(-L // (N + 1))
    r_values = (r_lo,) if r_lo == r_hi else (r_lo, r_hi)

    big_enough = L >= (N + 1) ** 2
    cert3 = dimension(space, degree, make_scheme([(3, 1)]), config)
    cert4 = dimension(space, degree, make_scheme([(4, 1)]), config)
    gap_ok = cert3.computed_dim - cert4.computed_dim >= N * (N + 1) // 2

    per_r = {}
    for r in r_values:
        k = r - N - 1
        if k < 0:
            per_r[r] = {
                "k": k,
                "residual_regular": False,
                "quartic_zero": False,
                "note": "fewer than N+2 points; collision argument not applicable",
            }
            continue
        res = dimension(space, degree, make_scheme([(3, 1), (2, k)]), config)
        quart = dimension(space, degree, make_scheme([(4, 1), (2, k)]), config)
        per_r[r] = {
            "k": k,
            "residual_regular": res.status.certified,
            "residual_dim": res.computed_dim,
            "quartic_zero": quart.status == DimensionVerdict.ZERO
            and quart.computed_dim == 0,
            "quartic_dim": quart.computed_dim,
        }
    return HypothesisReport(
        space, degree, r_values, big_enough, gap_ok,
        cert3.computed_dim, cert4.computed_dim, per_r,
    )


# classification of defective Veronese embeddings (degree >= 2, single
# factor): quadrics for 2 <= r <= n, plus four sporadic cases
AH_DEFECTIVE_SPORADIC = frozenset({(2, 4, 5), (3, 4, 9), (4, 3, 7), (4, 4, 14)})


def veronese_defective_rs(n: int, d: int) -> list[int]:
    if d == 2:
        return list(range(2, n + 1))
    return sorted(r for (nn, dd, r) in AH_DEFECTIVE_SPORADIC if (nn, dd) == (n, d))
