"""Integer raising/lowering/torus matrices on finite grassmannian point sets.

When every nonempty submodule stratum of a hull truncation is a certified
finite set of rational points, delta functions on those points carry an exact
Lie-algebra action: the raising and lowering matrices have a 1 exactly at
nested point pairs whose dimension vectors differ by one vertex, and the
torus operator is diagonal with entries given by the framing minus the Cartan
pairing.  Fiber Euler numbers are interpolated from prime-field counts,
restriction to a chain stage is compared against extension by zero, and the
codimension bijection between a framing and its diagram twist swaps raising
with lowering while negating the torus.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .demazure import _check_primes, demazure_module
from .errors import (
    BadPrimeError,
    InternalCheckError,
    InterpolationInconsistentError,
    NotFiniteRegimeError,
    NotMultiplicityFreeError,
    ValidationError,
)
from .fields import QQ
from .grassmann import (
    _lagrange,
    _next_prime,
    count_polynomial,
    count_submodules,
    enumerate_submodules,
)
from .hull import InjectiveModel, injective_hull
from .linalg import Mat, coords_in, pivot_rows, subspace_contains
from .quiver import Quiver, cartan_matrix
from .repmod import (
    Subrep,
    make_subrep,
    quotient,
    reduce_mod,
    reduce_subrep,
    restrict,
    zero_subrep,
)
from .weyl import (
    apply_involution,
    diagram_involution,
    dot_step,
    extremal_orbit,
    weight_census,
)

_ALIGNMENT_BUDGET = 1000


# -- realization skeleton ------------------------------------------------------

@dataclass(frozen=True)
class WeightStatus:
    """Outcome of the finite-point test at one dimension vector."""

    dims: tuple
    counts: tuple
    points: tuple | None
    reason: str | None

    @property
    def finite(self) -> bool:
        return self.points is not None


@dataclass(frozen=True)
class FiniteRealization:
    """Per-weight point lists of the hull's submodule strata."""

    model: InjectiveModel
    w: dict
    statuses: dict = field(compare=False)

    @property
    def finite(self) -> bool:
        return all(st.finite for st in self.statuses.values())

    def weights(self) -> list:
        return sorted(self.statuses)

    def status(self, vt: tuple) -> WeightStatus:
        return self.statuses[vt]

    def point_list(self) -> list:
        """All points as (dims tuple, Subrep), sorted by weight then basis."""
        bad = [vt for vt, st in self.statuses.items() if not st.finite]
        if bad:
            raise NotFiniteRegimeError(
                "no finite point list at dimension vectors "
                + ", ".join(str(v) for v in sorted(bad))
            )
        out = []
        for vt in self.weights():
            for pt in sorted(self.statuses[vt].points, key=lambda s: s.key()):
                out.append((vt, pt))
        return out

    def total_points(self) -> int:
        return sum(len(st.points or ()) for st in self.statuses.values())


@dataclass(frozen=True)
class VertexOperators:
    """Raising, lowering, and torus matrices at one vertex."""

    raising: tuple
    lowering: tuple
    torus: tuple


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class Sl2Report:
    finite_regime: bool
    items: tuple
    weight_dims: tuple
    total_dim: int
    total_points: int | None

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


@dataclass(frozen=True)
class ChevalleyReport:
    items: tuple
    pair_count: int

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


# -- small integer-matrix helpers ----------------------------------------------

def _int_mul(a: list, b: list) -> list:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for r in range(n):
        ar = a[r]
        orow = out[r]
        for t in range(k):
            x = ar[t]
            if x:
                bt = b[t]
                for c in range(m):
                    orow[c] += x * bt[c]
    return out


def _int_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _int_add(a: list, b: list) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _int_zero(a: list) -> bool:
    return all(x == 0 for row in a for x in row)


def _int_identity(n: int, scale: int = 1) -> list:
    return [[scale if r == c else 0 for c in range(n)] for r in range(n)]


def _freeze(a: list) -> tuple:
    return tuple(tuple(row) for row in a)


def _thaw(a: tuple) -> list:
    return [list(row) for row in a]


# -- point containment and operator assembly -----------------------------------

def _point_contained(small: Subrep, big: Subrep) -> bool:
    verts = small.ambient.quiver.vertices
    return all(subspace_contains(big.basis(v), small.basis(v)) for v in verts)


def _vertex_operators(q: Quiver, w: dict, points: list) -> dict:
    """Assemble per-vertex operator triples on an ordered point list."""
    verts = list(q.vertices)
    cmat = cartan_matrix(q).matrix
    n = len(points)
    out = {}
    for a, i in enumerate(verts):
        raising = [[0] * n for _ in range(n)]
        lowering = [[0] * n for _ in range(n)]
        torus = [[0] * n for _ in range(n)]
        for r, (vr, _) in enumerate(points):
            h = int(w.get(i, 0)) - sum(cmat[a][b] * vr[b] for b in range(len(verts)))
            # independent check through the reflection-step arithmetic
            vdict = {verts[b]: vr[b] for b in range(len(verts))}
            if dot_step(q, i, w, vdict)[i] - vr[a] != h:
                raise InternalCheckError(
                    "torus entry disagrees with the reflection step"
                )
            torus[r][r] = h
        for r, (vr, pr) in enumerate(points):
            for c, (vc, pc) in enumerate(points):
                if all(
                    vc[b] - vr[b] == (1 if b == a else 0)
                    for b in range(len(verts))
                ) and _point_contained(pr, pc):
                    raising[r][c] = 1
                    lowering[c][r] = 1
        out[i] = VertexOperators(
            raising=_freeze(raising),
            lowering=_freeze(lowering),
            torus=_freeze(torus),
        )
    return out


# -- rational point certification ----------------------------------------------

def _echelon_signature(pt: Subrep) -> tuple:
    verts = pt.ambient.quiver.vertices
    return tuple((v, tuple(pivot_rows(pt.basis(v)))) for v in verts)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple:
    inv = pow(m1, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def _reconstruct_fraction(residue: int, modulus: int) -> Fraction | None:
    """Smallest-height fraction congruent to the residue, if one exists."""
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, residue % modulus
    t0, t1 = 0, 1
    while r1 > bound:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        t0, t1 = t1, t0 - quo * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if math.gcd(r1, abs(t1)) != 1 or math.gcd(abs(t1), modulus) != 1:
        return None
    return Fraction(r1, t1)


def _rational_lift(rep, v: dict, sig: tuple, aligned: list) -> Subrep | None:
    """Combine aligned prime-field points into one verified rational point."""
    bases = {}
    for vertex, pattern in sig:
        rows = rep.dims[vertex]
        k = len(pattern)
        entries = [[QQ.zero for _ in range(k)] for _ in range(rows)]
        pivot_set = set(pattern)
        for j, pr in enumerate(pattern):
            entries[pr][j] = QQ.one
        for j in range(k):
            for r in range(pattern[j] + 1, rows):
                if r in pivot_set:
                    continue
                residue, modulus = 0, 1
                for p, pt in aligned:
                    res_p = int(pt.basis(vertex).a[r][j])
                    residue, modulus = _crt_pair(residue, modulus, res_p, p)
                value = _reconstruct_fraction(residue, modulus)
                if value is None:
                    return None
                entries[r][j] = value
        bases[vertex] = Mat(QQ, rows, k, entries)
    try:
        cand = make_subrep(rep, bases)
    except ValidationError:
        return None
    if cand.dims() != {x: int(v.get(x, 0)) for x in rep.quiver.vertices}:
        return None
    return cand


def _reduction_bijection(points, rep, v: dict, p: int, n: int, cap, known=None):
    """True/False certificate at one prime; None when reduction fails there."""
    try:
        rep_p = reduce_mod(rep, p)
    except BadPrimeError:
        return None
    if known is None:
        known = enumerate_submodules(rep_p, v, cap)
        if len(known) != n:
            return False
    keys = {pt.key() for pt in known}
    seen = set()
    for r in points:
        try:
            rp = reduce_subrep(r, rep_p)
        except BadPrimeError:
            return None
        k = rp.key()
        if k not in keys or k in seen:
            return False
        seen.add(k)
    return True


def _lift_all_from_anchor(rep, v: dict, n: int, anchor: int, primes, mod_points):
    """Lift every point at the anchor prime to a verified rational point."""
    found = []
    for b in mod_points[anchor]:
        sig = _echelon_signature(b)
        partner_lists = []
        budget = 1
        for p in primes:
            if p == anchor:
                continue
            same = [x for x in mod_points[p] if _echelon_signature(x) == sig]
            if same:
                budget *= len(same)
                partner_lists.append((p, same))
        if budget > _ALIGNMENT_BUDGET:
            return None
        lift = None
        for combo in itertools.product(*(same for _, same in partner_lists)):
            aligned = [(anchor, b)] + [
                (p, pt) for (p, _), pt in zip(partner_lists, combo)
            ]
            cand = _rational_lift(rep, v, sig, aligned)
            if cand is not None:
                lift = cand
                break
        if lift is None:
            return None
        found.append(lift)
    by_key = {pt.key(): pt for pt in found}
    if len(by_key) != n:
        return None
    return tuple(sorted(by_key.values(), key=lambda s: s.key()))


def _certified_rational_points(rep, v: dict, n: int, primes: list, cap, extra: int = 4):
    """The n rational points matching constant prime counts, or None.

    Each point modulo an anchor prime is aligned with same-pivot-pattern
    points at the other primes (skipping primes where the pattern does not
    occur), combined by remainder arithmetic, and reconstructed as
    small-height fractions; a lift is accepted only if it is a genuine
    submodule of the right dimensions.  The full list is then certified by
    checking that reductions give a bijection onto the prime-field point
    sets, replacing primes where a denominator vanishes.
    """
    mod_points = {}
    for p in primes:
        pts = enumerate_submodules(reduce_mod(rep, p), v, cap)
        if len(pts) != n:
            return None
        mod_points[p] = pts
    points = None
    for anchor in primes:
        points = _lift_all_from_anchor(rep, v, n, anchor, primes, mod_points)
        if points is not None:
            break
    if points is None:
        return None
    pending = list(primes)
    high = max(primes)
    extras_used = 0
    while pending:
        p = pending.pop(0)
        verdict = _reduction_bijection(points, rep, v, p, n, cap, mod_points.get(p))
        if verdict is None:
            if extras_used >= extra:
                return None
            extras_used += 1
            high = _next_prime(high)
            pending.append(high)
        elif not verdict:
            return None
    return points


# -- finite-point detection ----------------------------------------------------

def finite_points(
    q: Quiver,
    w: dict,
    trunc: int | None = None,
    primes=(2, 3, 5),
    cap: int | None = None,
) -> FiniteRealization:
    """Per-weight finite rational point lists of the hull's submodule strata.

    A weight is in the finite regime when its prime-field counts agree across
    all test primes and equal the number of rational points produced by an
    exact construction: the unique chain endpoint at extremal weights, the
    empty list at count zero, and certified fraction reconstruction
    otherwise.  Weights failing the test carry a reason instead of a list.
    """
    plist = _check_primes(primes)
    model = injective_hull(q, w, trunc)
    census = weight_census(q, w)
    orbit = extremal_orbit(q, w)
    verts = list(q.vertices)
    reductions = {p: reduce_mod(model.rep, p) for p in plist}
    statuses = {}
    for vt in sorted(census):
        vdict = dict(zip(verts, vt))
        counts = tuple(
            (p, count_submodules(reductions[p], vdict, cap)) for p in plist
        )
        values = {c for _, c in counts}
        if len(values) != 1:
            statuses[vt] = WeightStatus(
                vt, counts, None, "count varies across the test primes"
            )
            continue
        n = next(iter(values))
        if vt in orbit:
            if n != 1:
                statuses[vt] = WeightStatus(
                    vt,
                    counts,
                    None,
                    "prime count disagrees with the unique chain endpoint",
                )
                continue
            chain = demazure_module(q, w, orbit[vt], trunc)
            endpoint = chain.stages[-1]
            point = make_subrep(
                model.rep, {x: endpoint.basis(x) for x in verts}
            )
            if point.dims() != vdict:
                raise InternalCheckError(
                    "chain endpoint dimensions disagree with the weight"
                )
            statuses[vt] = WeightStatus(vt, counts, (point,), None)
        elif n == 0:
            statuses[vt] = WeightStatus(vt, counts, (), None)
        else:
            pts = _certified_rational_points(model.rep, vdict, n, plist, cap)
            if pts is None:
                statuses[vt] = WeightStatus(
                    vt, counts, None, "no certified rational point list"
                )
            else:
                statuses[vt] = WeightStatus(vt, counts, pts, None)
    return FiniteRealization(model=model, w=dict(w), statuses=statuses)


def operator_matrices(real: FiniteRealization) -> dict:
    """Integer raising/lowering/torus matrices on the global point basis."""
    points = real.point_list()
    return _vertex_operators(real.model.base, real.w, points)


# -- fiber Euler numbers --------------------------------------------------------

def _interpolated_chi(rep, target: dict, bound: int, primes, cap) -> int:
    """Euler number as the value at one of the interpolated count polynomial."""
    plist = _check_primes(primes)
    while len(plist) < bound + 2:
        plist.append(_next_prime(plist[-1]))
    counts = []
    for p in plist:
        counts.append((p, count_submodules(reduce_mod(rep, p), target, cap)))
    coeffs = _lagrange(counts[: bound + 1])
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationInconsistentError(
            "count not polynomial at tested degree", counts=counts
        )
    for p, n in counts:
        if sum(c * p**d for d, c in enumerate(coeffs)) != n:
            raise InterpolationInconsistentError(
                "count not polynomial at tested degree", counts=counts
            )
    return int(sum(coeffs))


def fiber_euler(
    u: Subrep,
    i: str,
    direction: str,
    primes=(2, 3, 5),
    cap: int | None = None,
) -> int:
    """Euler number of the one-step extensions above or inside a submodule.

    Going up counts lines of the vertex-i bottom layer of the quotient by u
    (submodules one vertex-i dimension larger); going down counts hyperplane
    kernels at vertex i inside u (submodules one dimension smaller).  Both
    are evaluated by interpolating prime-field counts and taking the value
    at one.
    """
    rep = u.ambient
    if rep.field != QQ:
        raise ValidationError("fiber evaluation needs a rational ambient module")
    if i not in rep.quiver.vertices:
        raise ValidationError(f"unknown vertex {i!r}")
    if direction == "up":
        quot, _ = quotient(rep, u)
        if quot.dims[i] == 0:
            return 0
        target = {x: (1 if x == i else 0) for x in rep.quiver.vertices}
        return _interpolated_chi(quot, target, quot.dims[i] - 1, primes, cap)
    if direction == "down":
        ucur = u.dims()
        if ucur[i] == 0:
            return 0
        inner = restrict(rep, u)
        target = {x: ucur[x] - (1 if x == i else 0) for x in rep.quiver.vertices}
        return _interpolated_chi(inner, target, ucur[i] - 1, primes, cap)
    raise ValidationError("direction must be 'up' or 'down'")


# -- consequence checks ----------------------------------------------------------

def _commutator(a: tuple, b: tuple) -> list:
    return _int_sub(_int_mul(_thaw(a), _thaw(b)), _int_mul(_thaw(b), _thaw(a)))


def verify_sl2(
    q: Quiver,
    w: dict,
    trunc: int | None = None,
    primes=(2, 3, 5),
    cap: int | None = None,
) -> Sl2Report:
    """Consequence checks for the operator action on the point realization.

    Always checks the leading-coefficient weight census against the
    multiplicity recursion and the vacuum scalar identity through fiber
    counts.  When every weight is in the finite regime, additionally checks
    the commutator table, the torus shift under raising, the adjacent-vertex
    nilpotency of repeated brackets, and the per-weight point census.
    """
    plist = _check_primes(primes)
    real = finite_points(q, w, trunc, plist, cap)
    census = weight_census(q, w)
    verts = list(q.vertices)
    items = []

    mismatches = []
    for vt in sorted(census):
        vdict = dict(zip(verts, vt))
        poly = count_polynomial(q, w, vdict, plist, trunc, cap)
        if poly.leading != census[vt]:
            mismatches.append(f"{vt}: {poly.leading} != {census[vt]}")
    items.append(
        CheckItem(
            "leading count coefficients match the multiplicity recursion",
            not mismatches,
            "; ".join(mismatches),
        )
    )

    vac_fail = []
    vacuum = zero_subrep(real.model.rep)
    for i in verts:
        chi = fiber_euler(vacuum, i, "up", plist, cap)
        if chi != int(w.get(i, 0)):
            vac_fail.append(f"{i}: {chi} != {w.get(i, 0)}")
    items.append(
        CheckItem(
            "raising after lowering scales the vacuum by the framing",
            not vac_fail,
            "; ".join(vac_fail),
        )
    )

    total_points = None
    if real.finite:
        points = real.point_list()
        total_points = len(points)
        ops = _vertex_operators(q, w, points)
        n = len(points)

        comm_fail = []
        for i in verts:
            for j in verts:
                comm = _commutator(ops[i].raising, ops[j].lowering)
                expected = (
                    _thaw(ops[i].torus) if i == j else _int_identity(n, 0)
                )
                if comm != expected:
                    comm_fail.append(f"({i},{j})")
        items.append(
            CheckItem(
                "raising/lowering commutators equal the torus table",
                not comm_fail,
                "; ".join(comm_fail),
            )
        )

        shift_fail = []
        for i in verts:
            lhs = _int_mul(_thaw(ops[i].torus), _thaw(ops[i].raising))
            rhs = _int_mul(
                _thaw(ops[i].raising),
                _int_add(_thaw(ops[i].torus), _int_identity(n, 2)),
            )
            if lhs != rhs:
                shift_fail.append(i)
        items.append(
            CheckItem(
                "raising shifts the torus eigenvalue by two",
                not shift_fail,
                "; ".join(shift_fail),
            )
        )

        cmat = cartan_matrix(q).matrix
        serre_fail = []
        for a, i in enumerate(verts):
            for b, j in enumerate(verts):
                if i == j:
                    continue
                power = 1 - cmat[a][b]
                for kind in ("raising", "lowering"):
                    acc = _thaw(getattr(ops[j], kind))
                    for _ in range(power):
                        acc = _int_sub(
                            _int_mul(_thaw(getattr(ops[i], kind)), acc),
                            _int_mul(acc, _thaw(getattr(ops[i], kind))),
                        )
                    if not _int_zero(acc):
                        serre_fail.append(f"({i},{j},{kind})")
        items.append(
            CheckItem(
                "repeated brackets at distinct vertices vanish",
                not serre_fail,
                "; ".join(serre_fail),
            )
        )

        census_fail = []
        for vt in sorted(census):
            got = len(real.statuses[vt].points)
            if got != census[vt]:
                census_fail.append(f"{vt}: {got} != {census[vt]}")
        items.append(
            CheckItem(
                "points per weight match the multiplicity recursion",
                not census_fail,
                "; ".join(census_fail),
            )
        )

    return Sl2Report(
        finite_regime=real.finite,
        items=tuple(items),
        weight_dims=tuple((vt, census[vt]) for vt in sorted(census)),
        total_dim=sum(census.values()),
        total_points=total_points,
    )


# -- restriction compatibility ----------------------------------------------------

def restricted_compat(
    q: Quiver,
    w: dict,
    word,
    trunc: int | None = None,
    primes=(2, 3, 5),
    cap: int | None = None,
) -> bool:
    """Whether chain-stage operators equal extension-by-zero restrictions.

    The point set of the chain stage is the ambient point subset it
    contains, re-expressed in stage coordinates; its independently assembled
    operator matrices must equal the ambient matrices cut down to that
    subset.  The stage point census is certified against prime-field counts.
    """
    plist = _check_primes(primes)
    real = finite_points(q, w, trunc, plist, cap)
    verts = list(q.vertices)
    chain = demazure_module(q, w, tuple(word), trunc)
    stage = chain.stages[-1]
    hold = make_subrep(real.model.rep, {x: stage.basis(x) for x in verts})
    inner = restrict(real.model.rep, hold)

    amb_points = real.point_list()
    flags = [_point_contained(pt, hold) for _, pt in amb_points]
    sub_points = []
    for (vt, pt), inside in zip(amb_points, flags):
        if not inside:
            continue
        coords = {x: coords_in(hold.basis(x), pt.basis(x)) for x in verts}
        sub_points.append((vt, make_subrep(inner, coords)))

    per_weight = {}
    for vt, _ in sub_points:
        per_weight[vt] = per_weight.get(vt, 0) + 1
    for p in plist:
        inner_p = reduce_mod(inner, p)
        for vt in real.weights():
            vdict = dict(zip(verts, vt))
            expected = per_weight.get(vt, 0)
            if count_submodules(inner_p, vdict, cap) != expected:
                raise InternalCheckError(
                    f"stage point census at {vt} disagrees with the count at {p}"
                )

    ops_amb = _vertex_operators(q, w, amb_points)
    ops_sub = _vertex_operators(q, w, sub_points)
    idx = [k for k, inside in enumerate(flags) if inside]
    for i in verts:
        for kind in ("raising", "lowering", "torus"):
            amb = getattr(ops_amb[i], kind)
            sub = getattr(ops_sub[i], kind)
            cut = tuple(
                tuple(amb[r][c] for c in idx) for r in idx
            )
            if cut != sub:
                return False
    return True


# -- involution comparison ---------------------------------------------------------

def chevalley_compare(
    q: Quiver,
    w: dict,
    trunc: int | None = None,
    primes=(2, 3, 5),
    cap: int | None = None,
) -> ChevalleyReport:
    """Compare the realizations of a framing and its diagram twist.

    Under the bijection sending a point to the partner of complementary
    dimension vector, raising and lowering matrices must swap and torus
    entries must negate.  Only multiplicity-free realizations carry a
    canonical pairing; anything else is rejected.
    """
    plist = _check_primes(primes)
    perm = diagram_involution(q)
    tw = apply_involution(q, perm, w)
    real_w = finite_points(q, w, trunc, plist, cap)
    real_t = finite_points(q, tw, trunc, plist, cap)
    verts = list(q.vertices)

    for real, label in ((real_w, "framing"), (real_t, "twisted framing")):
        bad = [vt for vt, st in real.statuses.items() if not st.finite]
        if bad:
            raise NotFiniteRegimeError(
                f"{label}: no finite point list at "
                + ", ".join(str(v) for v in sorted(bad))
            )
        crowded = [
            vt for vt, st in real.statuses.items() if len(st.points) > 1
        ]
        if crowded:
            raise NotMultiplicityFreeError(
                f"{label}: more than one point at "
                + ", ".join(str(v) for v in sorted(crowded))
            )

    vmax_w = tuple(real_w.model.rep.dims[x] for x in verts)
    vmax_t = tuple(real_t.model.rep.dims[x] for x in verts)
    if vmax_w != vmax_t:
        raise InternalCheckError(
            "the two hulls have different total dimension vectors"
        )
    vmax = vmax_w

    items = []
    occ_w = {vt for vt, st in real_w.statuses.items() if st.points}
    occ_t = {vt for vt, st in real_t.statuses.items() if st.points}
    complemented = {tuple(m - x for m, x in zip(vmax, vt)) for vt in occ_w}
    items.append(
        CheckItem(
            "occupied weights correspond under complementation",
            occ_t == complemented,
            f"{sorted(occ_t)} vs {sorted(complemented)}",
        )
    )

    pts_w = real_w.point_list()
    pts_t = real_t.point_list()
    pos_t = {vt: k for k, (vt, _) in enumerate(pts_t)}
    pairing = []
    for vt, _ in pts_w:
        comp = tuple(m - x for m, x in zip(vmax, vt))
        pairing.append(pos_t.get(comp))
    if any(k is None for k in pairing):
        items.append(CheckItem("every point has a partner", False, ""))
        return ChevalleyReport(items=tuple(items), pair_count=len(pts_w))

    ops_w = _vertex_operators(q, w, pts_w)
    ops_t = _vertex_operators(q, tw, pts_t)
    n = len(pts_w)

    swap_fail = []
    for i in verts:
        for r in range(n):
            for c in range(n):
                if (
                    ops_w[i].raising[r][c]
                    != ops_t[i].lowering[pairing[r]][pairing[c]]
                    or ops_w[i].lowering[r][c]
                    != ops_t[i].raising[pairing[r]][pairing[c]]
                ):
                    swap_fail.append(f"{i}[{r}][{c}]")
    items.append(
        CheckItem(
            "raising and lowering swap under the pairing",
            not swap_fail,
            "; ".join(swap_fail[:8]),
        )
    )

    torus_fail = []
    for i in verts:
        for r in range(n):
            if ops_t[i].torus[pairing[r]][pairing[r]] != -ops_w[i].torus[r][r]:
                torus_fail.append(f"{i}[{r}]")
    items.append(
        CheckItem(
            "torus entries negate under the pairing",
            not torus_fail,
            "; ".join(torus_fail),
        )
    )

    reversal_fail = []
    for i in verts:
        diag_w = [ops_w[i].torus[r][r] for r in range(n)]
        diag_t = [ops_t[i].torus[r][r] for r in range(n)]
        if diag_t != [-h for h in reversed(diag_w)]:
            reversal_fail.append(i)
    items.append(
        CheckItem(
            "torus eigenvalue lists negate and reverse",
            not reversal_fail,
            "; ".join(reversal_fail),
        )
    )

    return ChevalleyReport(items=tuple(items), pair_count=n)
