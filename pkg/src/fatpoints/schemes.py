"""Fat-point schemes on products of projective spaces.

A scheme is a list of fat points (multiplicity a at a point, imposing all
partial-derivative vanishings of order < a), optional jet conditions (the
degree-kappa term of the Taylor expansion at a base point, evaluated at a
tangent direction, must vanish), and an optional list of coordinate
subvarieties the forms must contain.

Points are either "general" (drawn at evaluation time, optionally confined
to a coordinate stratum) or pinned to explicit coordinates.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import comb

from .spaces import (
    CoordinateSubvariety,
    Multidegree,
    MultiProjectiveSpace,
    basis_size,
    ideal_basis,
)


def conditions_of_fat_point(multiplicity: int, ambient_dim: int) -> int:
    """Number of linear conditions an a-fat point imposes on forms on an
    N-dimensional variety: the partial derivatives of order < a."""
    if multiplicity < 1 or ambient_dim < 1:
        raise ValueError("multiplicity and ambient dimension must be >= 1")
    return comb(multiplicity + ambient_dim - 1, ambient_dim)


@dataclass(frozen=True)
class PointSpec:
    """Where a point lives: a coordinate stratum (or None for a general
    point) and optionally pinned coordinates, one tuple per factor."""

    stratum: CoordinateSubvariety | None = None
    coords: tuple[tuple[int, ...], ...] | None = None

    def check(self, space: MultiProjectiveSpace):
        if self.stratum is not None:
            self.stratum.check(space)
        if self.coords is not None:
            if len(self.coords) != space.num_factors:
                raise ValueError("pinned coordinates do not match factor count")
            for vec, c in zip(self.coords, space.coord_counts()):
                if len(vec) != c:
                    raise ValueError("pinned coordinate vector has wrong length")
                if not any(vec):
                    raise ValueError("pinned coordinate vector is zero")


@dataclass(frozen=True)
class FatPoint:
    multiplicity: int
    spec: PointSpec = field(default_factory=PointSpec)

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class JetCondition:
    """Vanishing of the order-`order` Taylor term at the base point,
    evaluated at a tangent direction.

    The direction is a vector of length ambient_dim (affine coordinates of
    the chart at the base point), or None to draw a general one.
    """

    base_index: int
    order: int
    direction: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("jet order must be >= 1")


@dataclass
class FatPointScheme:
    points: list[FatPoint]
    jets: list[JetCondition] = field(default_factory=list)
    contained: list[CoordinateSubvariety] = field(default_factory=list)

    def check(self, space: MultiProjectiveSpace):
        for pt in self.points:
            pt.spec.check(space)
        for sub in self.contained:
            sub.check(space)
        for jet in self.jets:
            if not 0 <= jet.base_index < len(self.points):
                raise ValueError("jet base index out of range")
            if self.points[jet.base_index].multiplicity < jet.order:
                raise ValueError(
                    "jet order exceeds the multiplicity of its base point"
                )
            if jet.direction is not None and len(jet.direction) != space.ambient_dim():
                raise ValueError("jet direction has wrong length")

    def conditions(self, ambient_dim: int) -> int:
        """Total number of linear conditions (each jet contributes one)."""
        return sum(
            conditions_of_fat_point(pt.multiplicity, ambient_dim)
            for pt in self.points
        ) + len(self.jets)

    def type_label(self) -> str:
        """Multiplicity profile like '3,2^9' (descending, run-length)."""
        mults = sorted((pt.multiplicity for pt in self.points), reverse=True)
        runs: list[tuple[int, int]] = []
        for m in mults:
            if runs and runs[-1][0] == m:
                runs[-1] = (m, runs[-1][1] + 1)
            else:
                runs.append((m, 1))
        return ",".join(f"{m}^{c}" if c > 1 else str(m) for m, c in runs)

    # --- serialization -------------------------------------------------

    def to_json(self) -> dict:
        def point_doc(pt: FatPoint) -> dict:
            doc: dict = {"mult": pt.multiplicity}
            if pt.spec.stratum is not None:
                doc["stratum"] = pt.spec.stratum.to_json()
            if pt.spec.coords is not None:
                doc["coords"] = [list(v) for v in pt.spec.coords]
            return doc

        doc = {"points": [point_doc(pt) for pt in self.points]}
        if self.jets:
            doc["jets"] = [
                {
                    "base": j.base_index,
                    "order": j.order,
                    **({"direction": list(j.direction)} if j.direction else {}),
                }
                for j in self.jets
            ]
        if self.contained:
            doc["contained"] = [sub.to_json() for sub in self.contained]
        return doc

    @staticmethod
    def from_json(doc: dict) -> "FatPointScheme":
        points = []
        for pd in doc.get("points", []):
            stratum = None
            if "stratum" in pd:
                stratum = CoordinateSubvariety.from_json(pd["stratum"])
            coords = None
            if "coords" in pd:
                coords = tuple(tuple(v) for v in pd["coords"])
            points.append(FatPoint(pd["mult"], PointSpec(stratum, coords)))
        jets = [
            JetCondition(
                jd["base"],
                jd["order"],
                tuple(jd["direction"]) if "direction" in jd else None,
            )
            for jd in doc.get("jets", [])
        ]
        contained = [
            CoordinateSubvariety.from_json(sd) for sd in doc.get("contained", [])
        ]
        return FatPointScheme(points, jets, contained)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def loads(text: str) -> "FatPointScheme":
        return FatPointScheme.from_json(json.loads(text))


_TYPE_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_scheme_type(text: str) -> list[tuple[int, int]]:
    """Parse a multiplicity profile like '3,2^15,1^6' into
    [(mult, count), ...] in the written order."""
    out = []
    for term in text.split(","):
        term = term.strip()
        m = _TYPE_TERM.match(term)
        if not m:
            raise ValueError(f"bad scheme type term: {term!r}")
        mult = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if mult < 1 or count < 1:
            raise ValueError(f"bad scheme type term: {term!r}")
        out.append((mult, count))
    return out


def make_scheme(
    profile: str | list[tuple[int, int]],
    strata: list[CoordinateSubvariety | None] | None = None,
    contained: list[CoordinateSubvariety] | None = None,
) -> FatPointScheme:
    """Build a scheme of general points from a multiplicity profile.

    `strata`, if given, assigns a stratum (or None) to each point in order;
    it may be shorter than the point list, remaining points are general.
    """
    if isinstance(profile, str):
        profile = parse_scheme_type(profile)
    points: list[FatPoint] = []
    for mult, count in profile:
        points.extend(FatPoint(mult) for _ in range(count))
    if strata:
        if len(strata) > len(points):
            raise ValueError("more strata than points")
        points = [
            FatPoint(pt.multiplicity, PointSpec(stratum=strata[i]))
            if i < len(strata) and strata[i] is not None
            else pt
            for i, pt in enumerate(points)
        ]
    return FatPointScheme(points, contained=list(contained or []))


def virtual_dim(
    space: MultiProjectiveSpace, degree: Multidegree, scheme: FatPointScheme
) -> int:
    """Basis size minus the number of conditions (may be negative)."""
    scheme.check(space)
    if scheme.contained:
        ncols = len(ideal_basis(space, degree, scheme.contained))
    else:
        ncols = basis_size(space, degree)
    return ncols - scheme.conditions(space.ambient_dim())


def expected_dim(
    space: MultiProjectiveSpace, degree: Multidegree, scheme: FatPointScheme
) -> int:
    return max(0, virtual_dim(space, degree, scheme))
