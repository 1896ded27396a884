"""Exhaustive submodule enumeration over prime fields and count interpolation.

Submodule grassmannians are enumerated per vertex through Gaussian cells,
with arrow-closure bounds propagated between vertices so that each arrow is
enforced exactly once.  Point counts at several primes feed a Lagrange
interpolation whose value at 1 is the Euler characteristic; every
interpolation is certified at an extra prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import (
    BadPrimeError,
    CapExceededError,
    InterpolationInconsistentError,
    ValidationError,
)
from .fields import PrimeField, is_prime
from .hull import Grading, InjectiveModel, injective_hull
from .linalg import (
    Mat,
    col_space,
    contains_vector,
    mat_over,
    preimage,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .quiver import Quiver, cartan_matrix
from .repmod import Rep, is_nilpotent, make_subrep, quotient, reduce_mod

DEFAULT_CANDIDATE_CAP = 10_000_000


# -- subspace cells -----------------------------------------------------------

def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_p."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    assert num % den == 0
    return num // den


def subspace_cells(field: PrimeField, n: int, k: int):
    """Yield every k-dimensional subspace of field^n once, in echelon form.

    Columns carry their topmost nonzero entry (a 1) at strictly increasing
    pivot rows; pivot rows are cleared in the other columns and the free
    entries below range over the field.  This is the same canonical shape
    column-span reduction produces, so each subspace appears exactly once.
    """
    if k == 0:
        yield Mat.zeros(field, n, 0)
        return
    if k > n:
        return
    elements = [field.of(x) for x in range(field.p)]
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (r, j)
            for j in range(k)
            for r in range(pivots[j] + 1, n)
            if r not in pivot_set
        ]
        for vals in product(elements, repeat=len(free)):
            entries = [[field.zero] * k for _ in range(n)]
            for j, pr in enumerate(pivots):
                entries[pr][j] = field.one
            for (r, j), x in zip(free, vals):
                entries[r][j] = x
            yield Mat(field, n, k, entries)


def _complement_in(lower: Mat, upper: Mat) -> Mat:
    """Columns of `upper` completing a basis of span(lower) to span(upper)."""
    field = lower.field
    cur = lower
    cols = []
    for j in range(upper.cols):
        c = upper.col(j)
        if not contains_vector(cur, c):
            cols.append(c)
            cur = col_space(cur.hstack(Mat.column(field, c)))
    n = lower.rows
    return Mat(field, n, len(cols), [[c[i] for c in cols] for i in range(n)])


def _cells_between(lower: Mat, upper: Mat, k: int, counter: list, cap: int):
    """Yield the k-dimensional subspaces W with lower <= W <= upper."""
    if not subspace_contains(upper, lower):
        return
    l, m = lower.cols, upper.cols
    if k < l or k > m:
        return
    field = lower.field
    count = gaussian_binomial(m - l, k - l, field.p)
    if counter[0] + count > cap:
        raise CapExceededError(
            f"candidate count {counter[0] + count} exceeds the cap {cap}",
            candidates=counter[0] + count,
        )
    counter[0] += count
    comp = _complement_in(lower, upper)
    for s in subspace_cells(field, m - l, k - l):
        yield lower.hstack(comp @ s)


# -- submodule enumeration ----------------------------------------------------

def _check_dim_vector(v_rep: Rep, v: dict) -> dict:
    q = v_rep.quiver
    out = {}
    for key, val in (v or {}).items():
        if key not in q.vertices:
            raise ValidationError(f"unknown vertex {key!r} in dimension vector")
        if not isinstance(val, int) or val < 0:
            raise ValidationError(f"dimension at vertex {key!r} must be a non-negative integer")
    for u in q.vertices:
        out[u] = int((v or {}).get(u, 0))
    return out


def enumerate_submodules(v_rep: Rep, v: dict, cap: int | None = None) -> list:
    """All arrow-closed subspaces of dims v, canonically ordered and validated."""
    field = v_rep.field
    if not isinstance(field, PrimeField):
        raise ValidationError("submodule enumeration requires a prime field")
    target = _check_dim_vector(v_rep, v)
    cap = DEFAULT_CANDIDATE_CAP if cap is None else int(cap)
    q = v_rep.quiver
    order = list(q.vertices)
    incoming = {u: [a for a in q.arrows if a.dst == u] for u in order}
    outgoing = {u: [a for a in q.arrows if a.src == u] for u in order}
    chosen: dict = {}
    out: list = []
    counter = [0]

    def rec(idx: int) -> None:
        if idx == len(order):
            out.append(make_subrep(v_rep, dict(chosen)))
            return
        u = order[idx]
        n = v_rep.dim(u)
        lower = Mat.zeros(field, n, 0)
        for a in incoming[u]:
            if a.src in chosen:
                lower = subspace_sum(lower, v_rep.map(a.name) @ chosen[a.src])
        upper = Mat.identity(field, n)
        for a in outgoing[u]:
            if a.dst in chosen:
                upper = subspace_intersect(upper, preimage(v_rep.map(a.name), chosen[a.dst]))
        for w in _cells_between(lower, upper, target[u], counter, cap):
            chosen[u] = w
            rec(idx + 1)
        chosen.pop(u, None)

    rec(0)
    out.sort(key=lambda s: s.key())
    return out


def count_submodules(v_rep: Rep, v: dict, cap: int | None = None) -> int:
    return len(enumerate_submodules(v_rep, v, cap))


def enumerate_pairs(v_rep: Rep, u: dict, u_prime: dict, cap: int | None = None) -> list:
    """Nested submodule pairs (inner, outer) with dims u <= u_prime."""
    lo = _check_dim_vector(v_rep, u)
    hi = _check_dim_vector(v_rep, u_prime)
    for vert in v_rep.quiver.vertices:
        if lo[vert] > hi[vert]:
            raise ValidationError("inner dims must be at most the outer dims")
    cap = DEFAULT_CANDIDATE_CAP if cap is None else int(cap)
    inner = enumerate_submodules(v_rep, lo, cap)
    outer = enumerate_submodules(v_rep, hi, cap)
    if len(inner) * len(outer) > cap:
        raise CapExceededError(
            f"pair candidate count {len(inner) * len(outer)} exceeds the cap {cap}",
            candidates=len(inner) * len(outer),
        )
    pairs = []
    for s in inner:
        for t in outer:
            if all(subspace_contains(t.basis(vv), s.basis(vv)) for vv in v_rep.quiver.vertices):
                pairs.append((s, t))
    return pairs


def tilde_count(v_rep: Rep, v: dict, cap: int | None = None) -> int:
    """Count submodules of codimension vector v whose quotient is nilpotent."""
    codim = _check_dim_vector(v_rep, v)
    target = {}
    for u in v_rep.quiver.vertices:
        d = v_rep.dim(u) - codim[u]
        if d < 0:
            return 0
        target[u] = d
    subs = enumerate_submodules(v_rep, target, cap)
    if is_nilpotent(v_rep):
        return len(subs)
    total = 0
    for s in subs:
        q_rep, _ = quotient(v_rep, s)
        if is_nilpotent(q_rep):
            total += 1
    return total


# -- point-count interpolation ------------------------------------------------

@dataclass(frozen=True)
class CountPoly:
    """Integer polynomial interpolating submodule counts over prime fields."""

    coeffs: tuple  # ascending degree
    primes_used: tuple
    consistency_primes: tuple
    counts: tuple  # ((prime, count), ...) over every prime touched

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def chi(self) -> int:
        return sum(self.coeffs)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _next_prime(n: int) -> int:
    m = n + 1
    while not is_prime(m):
        m += 1
    return m


def _lagrange(points: list) -> list:
    """Exact interpolation through (x, y) pairs; coefficients ascending."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for j, (xj, yj) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == j:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                new[d] -= c * xk
                new[d + 1] += c
            basis = new
            denom *= Fraction(xj - xk)
        scale = Fraction(yj) / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    return coeffs


def expected_dimension(q: Quiver, w: dict, v: dict) -> int:
    """The v.w - (1/2) v^T C v dimension bound used for interpolation degree."""
    c = cartan_matrix(q).matrix
    verts = list(q.vertices)
    vt = [int(v.get(x, 0)) for x in verts]
    wt = [int(w.get(x, 0)) for x in verts]
    dot = sum(a * b for a, b in zip(vt, wt))
    quad = sum(c[i][j] * vt[i] * vt[j] for i in range(len(verts)) for j in range(len(verts)))
    assert quad % 2 == 0
    return dot - quad // 2


def interpolation_plan(q: Quiver, w: dict, v: dict, primes) -> tuple[list, list]:
    """Split the primes into interpolation and consistency lists.

    Validates and sorts the primes, derives the interpolation degree from the
    dimension bound, and appends one extra prime when none is left over for
    the consistency check.  `count_polynomial` uses exactly this plan, so a
    caller that wants to precompute per-prime counts (e.g. in parallel) can
    learn here which primes will be visited.
    """
    plist = [int(p) for p in primes]
    if len(set(plist)) != len(plist):
        raise ValidationError("primes must be distinct")
    for p in plist:
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
    plist.sort()
    bound = max(expected_dimension(q, w, v), 0)
    if len(plist) < bound + 1:
        raise ValidationError(
            f"need at least {bound + 1} primes for interpolation degree {bound}"
        )
    interp = plist[: bound + 1]
    extras = plist[bound + 1 :]
    if not extras:
        extras = [_next_prime(plist[-1])]
    return interp, extras


def count_polynomial(
    q: Quiver,
    w: dict,
    v: dict,
    primes,
    trunc: int | None = None,
    cap: int | None = None,
    known_counts: dict | None = None,
) -> CountPoly:
    """Interpolate F_p submodule counts of the injective-hull truncation.

    The first degree+1 primes interpolate; every remaining prime (one is
    appended automatically if none is left) certifies the polynomial.
    `known_counts` is an optional {prime: count} cache consulted before
    counting; missing primes are still counted here, and every value feeds
    the same consistency certification either way.
    """
    model = injective_hull(q, w, trunc)
    interp, extras = interpolation_plan(model.base, w, v, primes)
    bound = len(interp) - 1
    counts = []
    for p in interp + extras:
        n = None if known_counts is None else known_counts.get(p)
        if n is None:
            rep_p = reduce_mod(model.rep, p)
            n = count_submodules(rep_p, v, cap)
        counts.append((p, int(n)))
    coeffs = _lagrange([(p, n) for p, n in counts[: bound + 1]])
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationInconsistentError(
            "count not polynomial at tested degree", counts=counts
        )
    poly = CountPoly(
        coeffs=tuple(int(c) for c in coeffs),
        primes_used=tuple(interp),
        consistency_primes=tuple(extras),
        counts=tuple(counts),
    )
    for p, n in counts:
        if poly.evaluate(p) != n:
            raise InterpolationInconsistentError(
                "count not polynomial at tested degree", counts=counts
            )
    return poly


# -- graded enumeration -------------------------------------------------------

def graded_submodules(
    model: InjectiveModel,
    grading: Grading,
    d: dict,
    p: int,
    cap: int | None = None,
) -> list:
    """Submodules that split along the grading's eigenspaces with character d.

    d maps (vertex, weight index) to the dimension of the piece inside that
    vertex's weight-index-th eigenspace (sorted order); missing keys mean 0.
    Enumeration runs over F_p; the rational eigenvalues must stay distinct
    after reduction.
    """
    if not is_prime(int(p)):
        raise ValidationError(f"{p} is not prime")
    cap = DEFAULT_CANDIDATE_CAP if cap is None else int(cap)
    rep_p = reduce_mod(model.rep, int(p))
    fp = rep_p.field
    layers: dict = {}
    for vert in rep_p.quiver.vertices:
        entries = []
        seen = set()
        for lam, basis in grading[vert]:
            lam_p = fp.of(lam)
            if lam_p in seen:
                raise BadPrimeError(f"grading eigenvalues collide mod {p} at vertex {vert!r}")
            seen.add(lam_p)
            basis_p = col_space(mat_over(fp, basis))
            if basis_p.cols != basis.cols:
                raise BadPrimeError(f"grading layer degenerates mod {p} at vertex {vert!r}")
            entries.append((lam, basis_p))
        if sum(b.cols for _, b in entries) != rep_p.dim(vert):
            raise BadPrimeError(f"grading layers do not fill vertex {vert!r} mod {p}")
        layers[vert] = entries
    slots = [(vert, k) for vert in rep_p.quiver.vertices for k in range(len(layers[vert]))]
    slot_set = set(slots)
    for key, val in (d or {}).items():
        if key not in slot_set:
            raise ValidationError(f"unknown grading slot {key!r} in character")
        if not isinstance(val, int) or val < 0:
            raise ValidationError(f"character value at {key!r} must be a non-negative integer")
    # Arrows shift the eigenvalue by z^-(m(a)+1); map each source layer to
    # its target layer index, or None when the shifted value is absent
    # (in which case the arrow must kill the layer).
    shift: dict = {}
    for a in rep_p.quiver.arrows:
        factor = Fraction(grading.z) ** (-(grading.weights[a.name] + 1))
        for k, (lam, basis_p) in enumerate(layers[a.src]):
            lam_out = Fraction(lam) * factor
            k_out = None
            for k2, (lam2, _) in enumerate(layers[a.dst]):
                if Fraction(lam2) == lam_out:
                    k_out = k2
                    break
            shift[(a.name, k)] = k_out
            image = rep_p.map(a.name) @ basis_p
            if k_out is None:
                if not image.is_zero():
                    raise BadPrimeError(
                        f"arrow {a.name!r} does not respect the grading mod {p}"
                    )
            elif not subspace_contains(layers[a.dst][k_out][1], col_space(image)):
                raise BadPrimeError(
                    f"arrow {a.name!r} does not respect the grading mod {p}"
                )
    incoming: dict = {slot: [] for slot in slots}
    for a in rep_p.quiver.arrows:
        for k in range(len(layers[a.src])):
            k_out = shift[(a.name, k)]
            if k_out is not None:
                incoming[(a.dst, k_out)].append((a.name, a.src, k))
    chosen: dict = {}
    out: list = []
    counter = [0]

    def rec(idx: int) -> None:
        if idx == len(slots):
            bases = {}
            for vert in rep_p.quiver.vertices:
                b = Mat.zeros(fp, rep_p.dim(vert), 0)
                for k in range(len(layers[vert])):
                    b = b.hstack(chosen[(vert, k)])
                bases[vert] = b
            out.append(make_subrep(rep_p, bases))
            return
        vert, k = slots[idx]
        lower = Mat.zeros(fp, rep_p.dim(vert), 0)
        for aname, sv, sk in incoming[(vert, k)]:
            if (sv, sk) in chosen:
                lower = subspace_sum(lower, rep_p.map(aname) @ chosen[(sv, sk)])
        upper = layers[vert][k][1]
        for a in rep_p.quiver.arrows:
            if a.src != vert:
                continue
            k_out = shift[(a.name, k)]
            if k_out is not None and (a.dst, k_out) in chosen:
                upper = subspace_intersect(
                    upper, preimage(rep_p.map(a.name), chosen[(a.dst, k_out)])
                )
        for wmat in _cells_between(lower, upper, int((d or {}).get((vert, k), 0)), counter, cap):
            chosen[(vert, k)] = wmat
            rec(idx + 1)
        chosen.pop((vert, k), None)

    rec(0)
    out.sort(key=lambda s: s.key())
    return out
