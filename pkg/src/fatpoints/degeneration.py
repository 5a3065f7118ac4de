"""Degeneration tools: residue/trace along a coordinate divisor,
Castelnuovo-type bounds, star configurations and point collisions.

Specializing some base points onto a divisor D of multidegree e_i splits a
linear system into the residue (degree dropped by one in the i-th factor,
multiplicities on D dropped by one) and the trace (the restriction to D,
full multiplicities).  Virtual dimensions are additive along this split,
and dim L(X) <= dim Res + dim Tr holds at any fixed set of points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .engine import Certificate, PrimeFieldConfig, dimension, draw_scheme_points
from .schemes import (
    FatPoint,
    FatPointScheme,
    JetCondition,
    PointSpec,
    virtual_dim,
)
from .spaces import CoordinateSubvariety, Multidegree, MultiProjectiveSpace


@dataclass(frozen=True)
class DivisorSpec:
    """The coordinate divisor {x_index = 0} in one factor."""

    factor: int
    index: int

    def check(self, space: MultiProjectiveSpace):
        if not 0 <= self.factor < space.num_factors:
            raise ValueError("divisor factor out of range")
        if not 0 <= self.index <= space.factor_dims[self.factor]:
            raise ValueError("divisor coordinate out of range")

    def as_subvariety(self, space: MultiProjectiveSpace) -> CoordinateSubvariety:
        van = [frozenset()] * space.num_factors
        van[self.factor] = frozenset({self.index})
        return CoordinateSubvariety(tuple(van))


def point_on_divisor(pt: FatPoint, divisor: DivisorSpec) -> bool:
    if pt.spec.coords is not None:
        return pt.spec.coords[divisor.factor][divisor.index] == 0
    if pt.spec.stratum is not None:
        return divisor.index in pt.spec.stratum.vanishing[divisor.factor]
    return False


def _stratum_with(
    stratum: CoordinateSubvariety | None,
    space: MultiProjectiveSpace,
    divisor: DivisorSpec,
) -> CoordinateSubvariety:
    van = list(
        stratum.vanishing
        if stratum is not None
        else [frozenset()] * space.num_factors
    )
    van[divisor.factor] = van[divisor.factor] | {divisor.index}
    return CoordinateSubvariety(tuple(van))


def specialize_onto(
    space: MultiProjectiveSpace,
    scheme: FatPointScheme,
    divisor: DivisorSpec,
    count: int,
) -> FatPointScheme:
    """Move the first `count` points of the scheme onto the divisor."""
    divisor.check(space)
    if count > len(scheme.points):
        raise ValueError("not enough points to specialize")
    points = []
    for i, pt in enumerate(scheme.points):
        if i < count:
            points.append(
                FatPoint(
                    pt.multiplicity,
                    PointSpec(_stratum_with(pt.spec.stratum, space, divisor), None),
                )
            )
        else:
            points.append(pt)
    return FatPointScheme(points, list(scheme.jets), list(scheme.contained))


def residue(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    scheme: FatPointScheme,
    divisor: DivisorSpec,
) -> tuple[Multidegree, FatPointScheme]:
    """Residue: degree drops by one across the divisor, multiplicities of
    points on the divisor drop by one (and leave the scheme at zero)."""
    divisor.check(space)
    if scheme.jets:
        raise ValueError("residue of jet conditions is not supported")
    degs = list(degree.degrees)
    if degs[divisor.factor] == 0:
        raise ValueError("degree already zero across the divisor")
    degs[divisor.factor] -= 1
    points = []
    for pt in scheme.points:
        if point_on_divisor(pt, divisor):
            if pt.multiplicity > 1:
                points.append(FatPoint(pt.multiplicity - 1, pt.spec))
        else:
            points.append(pt)
    return Multidegree(tuple(degs)), FatPointScheme(
        points, contained=list(scheme.contained)
    )


def _drop_coord(van: frozenset[int], index: int) -> frozenset[int]:
    return frozenset(i if i < index else i - 1 for i in van if i != index)


def trace(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    scheme: FatPointScheme,
    divisor: DivisorSpec,
) -> tuple[MultiProjectiveSpace, Multidegree, FatPointScheme]:
    """Trace: restriction to the divisor.  Only points on the divisor
    survive, with full multiplicities; the divisor's coordinate is deleted
    from the factor (which must have dimension >= 2)."""
    divisor.check(space)
    if scheme.jets:
        raise ValueError("trace of jet conditions is not supported")
    dims = list(space.factor_dims)
    if dims[divisor.factor] < 2:
        raise ValueError("trace would collapse a P^1 factor to a point")
    dims[divisor.factor] -= 1
    tspace = MultiProjectiveSpace(tuple(dims))

    def map_stratum(stratum: CoordinateSubvariety | None):
        if stratum is None:
            return None
        van = list(stratum.vanishing)
        van[divisor.factor] = _drop_coord(van[divisor.factor], divisor.index)
        if not any(van):
            return None
        return CoordinateSubvariety(tuple(van))

    points = []
    for pt in scheme.points:
        if not point_on_divisor(pt, divisor):
            continue
        coords = None
        if pt.spec.coords is not None:
            coords = tuple(
                tuple(c for i, c in enumerate(vec) if not (f == divisor.factor and i == divisor.index))
                for f, vec in enumerate(pt.spec.coords)
            )
        points.append(FatPoint(pt.multiplicity, PointSpec(map_stratum(pt.spec.stratum), coords)))

    contained = []
    for sub in scheme.contained:
        mapped = map_stratum(sub)
        if mapped is None:
            raise ValueError("a contained subvariety collapses onto the divisor")
        contained.append(mapped)
    return tspace, degree, FatPointScheme(points, contained=contained)


def vdim_additivity_check(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    scheme: FatPointScheme,
    divisor: DivisorSpec,
) -> dict:
    """vdim L(X) = vdim Res + vdim Tr (purely combinatorial)."""
    rdeg, rscheme = residue(space, degree, scheme, divisor)
    tspace, tdeg, tscheme = trace(space, degree, scheme, divisor)
    vd = virtual_dim(space, degree, scheme)
    vr = virtual_dim(space, rdeg, rscheme)
    vt = virtual_dim(tspace, tdeg, tscheme)
    return {"vdim": vd, "vdim_residue": vr, "vdim_trace": vt, "additive": vd == vr + vt}


def _pin_scheme(
    space: MultiProjectiveSpace,
    scheme: FatPointScheme,
    prime: int,
    seed: int,
) -> FatPointScheme:
    """Draw coordinates once and pin them, so residue and trace are taken
    at the same points."""
    counts = space.coord_counts()
    offs = space.coord_offsets()
    flat_pts, _, _ = draw_scheme_points(space, scheme, prime, seed)
    points = []
    for pt, flat in zip(scheme.points, flat_pts):
        coords = tuple(
            tuple(flat[offs[f] + i] for i in range(counts[f]))
            for f in range(space.num_factors)
        )
        points.append(FatPoint(pt.multiplicity, PointSpec(pt.spec.stratum, coords)))
    return FatPointScheme(points, list(scheme.jets), list(scheme.contained))


def castelnuovo_bound_check(
    space: MultiProjectiveSpace,
    degree: Multidegree,
    scheme: FatPointScheme,
    divisor: DivisorSpec,
    config: PrimeFieldConfig | None = None,
) -> dict:
    """dim L(X) <= dim L(Res) + dim L(Tr) at one shared draw of points,
    together with vdim additivity and vdim <= dim on each side."""
    config = config or PrimeFieldConfig()
    pinned = _pin_scheme(space, scheme, config.prime, config.seed)
    rdeg, rscheme = residue(space, degree, pinned, divisor)
    tspace, tdeg, tscheme = trace(space, degree, pinned, divisor)
    cx = dimension(space, degree, pinned, config)
    cr = dimension(space, rdeg, rscheme, config)
    ct = dimension(tspace, tdeg, tscheme, config)
    report = vdim_additivity_check(space, degree, scheme, divisor)
    report.update(
        {
            "dim": cx.computed_dim,
            "dim_residue": cr.computed_dim,
            "dim_trace": ct.computed_dim,
            "bound_holds": cx.computed_dim <= cr.computed_dim + ct.computed_dim,
            "vdim_le_dim": report["vdim"] <= cx.computed_dim,
        }
    )
    return report


# --- star configurations ------------------------------------------------


@dataclass
class StarConfiguration:
    """The binom(n+1, 2) points cut on a general hyperplane by the lines
    through pairs of n+1 general anchor points of P^n, over F_p."""

    n: int
    prime: int
    anchors: list[tuple[int, ...]]
    hyperplane: tuple[int, ...]
    points: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def embedded_points(self) -> list[tuple[int, ...]]:
        """The star points as points of the hyperplane P^{n-1}: drop one
        coordinate where the hyperplane's covector is invertible."""
        e = self.hyperplane
        j0 = next(i for i, c in enumerate(e) if c % self.prime)
        return [
            tuple(c for i, c in enumerate(t) if i != j0)
            for _, t in sorted(self.points.items())
        ]


def star_configuration(n: int, prime: int, seed: int) -> StarConfiguration:
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    for _ in range(64):
        anchors = [
            tuple(rng.randrange(prime) for _ in range(n + 1)) for _ in range(n + 1)
        ]
        e = tuple(rng.randrange(prime) for _ in range(n + 1))
        pairing = [sum(a * b for a, b in zip(e, p)) % prime for p in anchors]
        if all(pairing):
            break
    else:
        raise RuntimeError("could not draw anchors off the hyperplane")
    star = StarConfiguration(n, prime, anchors, e)
    for i, j in combinations(range(n + 1), 2):
        # the line through anchors i, j meets {e.x = 0} at
        # (e.p_j) p_i - (e.p_i) p_j
        t = tuple(
            (pairing[j] * a - pairing[i] * b) % prime
            for a, b in zip(anchors[i], anchors[j])
        )
        if not any(t):
            raise RuntimeError("degenerate star point")
        star.points[(i, j)] = t
    return star


def star_span_check(star: StarConfiguration, max_subset: int | None = None) -> bool:
    """Every subset I of anchors with |I| = s >= 3 gives points t_ij,
    i,j in I, spanning at most a P^{s-2}."""
    from .engine import rank_fp
    import numpy as np

    n1 = star.n + 1
    top = min(max_subset or n1, n1)
    for size in range(3, top + 1):
        for subset in combinations(range(n1), size):
            rows = [
                star.points[(i, j)]
                for i, j in combinations(subset, 2)
            ]
            if rank_fp(np.array(rows, dtype=np.int64), star.prime) > size - 1:
                return False
    return True


def star_nonspeciality_check(
    n: int, config: PrimeFieldConfig | None = None
) -> dict[str, Certificate]:
    """The star points T on the hyperplane P^{n-1} behave like general
    points for quadrics through T, cubics through T and cubics doubled
    along T.  Verified by pinning the star points into the engine."""
    config = config or PrimeFieldConfig()
    star = star_configuration(n, config.prime, config.seed)
    pts = star.embedded_points()
    space = MultiProjectiveSpace((n - 1,))
    out = {}
    for name, deg, mult in (
        ("quadrics-simple", 2, 1),
        ("cubics-simple", 3, 1),
        ("cubics-double", 3, 2),
    ):
        scheme = FatPointScheme(
            [FatPoint(mult, PointSpec(None, (tuple(t),))) for t in pts]
        )
        out[name] = dimension(space, Multidegree((deg,)), scheme, config)
    return out


# --- collisions ----------------------------------------------------------


def collision_scheme(
    space: MultiProjectiveSpace,
    extra_doubles: int,
    star_directions: bool = True,
    seed: int = 0,
    prime: int = 2**31 - 1,
) -> FatPointScheme:
    """The limit of N+1 colliding 2-fat points (N = ambient dimension):
    one 3-fat point plus binom(N+1,2) order-3 jet conditions along the
    pairwise directions of the colliding points, plus the remaining
    general 2-fat points.

    With star_directions the jet directions are the pairwise differences
    of N+1 random tangent vectors (the directions actually arising from a
    collision); otherwise they are left general.
    """
    N = space.ambient_dim()
    points = [FatPoint(3)] + [FatPoint(2) for _ in range(extra_doubles)]
    jets: list[JetCondition] = []
    if star_directions:
        rng = random.Random(seed ^ 0x5F3759DF)
        vecs = [
            tuple(rng.randrange(prime) for _ in range(N)) for _ in range(N + 1)
        ]
        for i, j in combinations(range(N + 1), 2):
            d = tuple((a - b) % prime for a, b in zip(vecs[i], vecs[j]))
            jets.append(JetCondition(0, 3, d))
    else:
        jets = [JetCondition(0, 3, None) for _ in range(comb(N + 1, 2))]
    return FatPointScheme(points, jets)


def collision_conditions(N: int) -> int:
    """A collided block imposes as many conditions as N+1 2-fat points."""
    return comb(N + 2, 2) + comb(N + 1, 2)
