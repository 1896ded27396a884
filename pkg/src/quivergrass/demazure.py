"""Chains of extremal submodules inside a truncated injective hull.

Each chain stage is the unique submodule whose dimension vector is the dot
action of a word prefix on zero.  A stage extends to the next by taking the
preimage of the vertex-i socle of the quotient — the largest submodule whose
quotient by the current stage is a sum of vertex-i simples — and certifying
the result by an exact dimension match.  When the match fails, the unique
target is recovered from a prime-field enumeration whose echelon support
pattern turns the closure conditions into a rational linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatchError,
    NotComparableError,
    NotExtremalError,
    SearchExhaustedError,
    TruncationTooSmallError,
    ValidationError,
)
from .fields import is_prime
from .grassmann import count_submodules, enumerate_submodules
from .hull import InjectiveModel, injective_hull
from .linalg import (
    Mat,
    pivot_rows,
    preimage,
    solve_right,
    subspace_contains,
    subspace_intersect,
)
from .quiver import Quiver, cartan_matrix
from .repmod import (
    Subrep,
    make_subrep,
    reduce_mod,
    reduce_subrep,
    restrict,
    zero_subrep,
)
from .weyl import (
    act,
    dot_step,
    extremal_orbit,
    is_reduced,
    longest_element,
    require_reduced,
    word_matrix,
    zero_vector,
    bruhat_leq,
)

_FALLBACK_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class DemazureChain:
    """A word together with the nested submodule stage per suffix length."""

    model: InjectiveModel
    word: tuple
    stages: tuple
    dim_targets: tuple


def _as_word(q: Quiver, word) -> tuple:
    out = tuple(str(x) for x in word)
    for letter in out:
        if letter not in q.vertices:
            raise ValidationError(f"unknown vertex {letter!r} in word")
    return out


def extend_step(model: InjectiveModel, u: Subrep, i: str) -> Subrep:
    """Extend an extremal stage by the vertex-i socle of the quotient."""
    if u.ambient is not model.rep:
        raise ValidationError("the stage must be a subspace of the model's module")
    base = model.base
    if i not in base.vertices:
        raise ValidationError(f"unknown vertex {i!r}")
    cur = u.dims()
    orbit = extremal_orbit(base, model.w)
    cur_tuple = tuple(cur[v] for v in base.vertices)
    if cur_tuple not in orbit:
        raise NotExtremalError(f"dims {cur} are not extremal for this framing")
    target = dot_step(base, i, model.w, cur)
    if target[i] < cur[i]:
        raise NotExtremalError(
            f"reflecting at vertex {i!r} shortens the element at dims {cur}"
        )
    rep = model.rep
    new_bases = {v: u.basis(v) for v in rep.quiver.vertices}
    space = Mat.identity(rep.field, rep.dim(i))
    for a in rep.quiver.arrows:
        if a.src == i:
            space = subspace_intersect(space, preimage(rep.map(a.name), u.basis(a.dst)))
    new_bases[i] = space
    cand = make_subrep(rep, new_bases)
    if cand.dims() == target:
        return cand
    lifted = _lift_from_prime_support(model, u, i, target)
    if lifted is not None:
        return lifted
    raise DimensionMismatchError(
        f"socle extension at vertex {i!r} gives dims {cand.dims()}, expected {target}"
    )


def _lift_from_prime_support(model: InjectiveModel, u: Subrep, i: str, target: dict):
    """Recover the unique target-dims submodule containing u from F_p support.

    A prime where exactly one such submodule exists supplies the echelon
    pivot pattern at vertex i; with the pattern fixed, arrow closure into and
    out of vertex i is linear in the free entries, so a rational solve either
    produces the submodule or the next prime is tried.
    """
    rep = model.rep
    field = rep.field
    n = rep.dim(i)
    k = target[i]
    for p in _FALLBACK_PRIMES:
        rep_p = reduce_mod(rep, p)
        u_p = reduce_subrep(u, rep_p)
        found = [
            s
            for s in enumerate_submodules(rep_p, target)
            if all(
                subspace_contains(s.basis(v), u_p.basis(v))
                for v in rep_p.quiver.vertices
            )
        ]
        if len(found) != 1:
            continue
        pattern = pivot_rows(found[0].basis(i))
        pivot_set = set(pattern)
        free = [
            (r, j)
            for j in range(k)
            for r in range(n)
            if r > pattern[j] and r not in pivot_set
        ]
        index = {rc: t for t, rc in enumerate(free)}

        def basis_entry(r: int, j: int, x: list):
            # Value of the candidate basis at (r, j) given free entries x.
            if r == pattern[j]:
                return field.one
            t = index.get((r, j))
            return x[t] if t is not None else field.zero

        rows = []
        rhs = []

        def add_membership_rows(span: Mat, col_linear):
            # col_linear(r) -> (constant, coefficient row over free entries)
            piv = pivot_rows(span)
            for r in range(span.rows):
                const_r, lin_r = col_linear(r)
                coeffs = list(lin_r)
                const = const_r
                for mcol in range(span.cols):
                    c_const, c_lin = col_linear(piv[mcol])
                    w = span.a[r][mcol]
                    const = field.sub(const, field.mul(w, c_const))
                    for t, val in enumerate(c_lin):
                        coeffs[t] = field.sub(coeffs[t], field.mul(w, val))
                rows.append(coeffs)
                rhs.append(field.neg(const))

        zero_lin = [field.zero] * len(free)
        for a in rep.quiver.arrows:
            xmat = rep.map(a.name)
            if a.src == i:
                span = u.basis(a.dst)
                for j in range(k):

                    def col_linear(r, j=j, xmat=xmat):
                        const = field.zero
                        lin = list(zero_lin)
                        for s in range(n):
                            coef = xmat.a[r][s]
                            if coef == field.zero:
                                continue
                            if s == pattern[j]:
                                const = field.add(const, coef)
                            else:
                                t = index.get((s, j))
                                if t is not None:
                                    lin[t] = field.add(lin[t], coef)
                        return const, lin

                    add_membership_rows(span, col_linear)
            if a.dst == i:
                known = xmat @ u.basis(a.src)
                for col in range(known.cols):
                    vec = known.col(col)
                    for r in range(n):
                        lin = list(zero_lin)
                        const = vec[r]
                        for j in range(k):
                            w = vec[pattern[j]]
                            if w == field.zero:
                                continue
                            if r == pattern[j]:
                                const = field.sub(const, w)
                            else:
                                t = index.get((r, j))
                                if t is not None:
                                    lin[t] = field.sub(lin[t], w)
                        rows.append(lin)
                        rhs.append(field.neg(const))
        old = u.basis(i)
        for col in range(old.cols):
            vec = old.col(col)
            for r in range(n):
                lin = list(zero_lin)
                const = vec[r]
                for j in range(k):
                    w = vec[pattern[j]]
                    if w == field.zero:
                        continue
                    if r == pattern[j]:
                        const = field.sub(const, w)
                    else:
                        t = index.get((r, j))
                        if t is not None:
                            lin[t] = field.sub(lin[t], w)
                rows.append(lin)
                rhs.append(field.neg(const))
        if free:
            mat = Mat.from_rows(field, rows, len(free))
            sol = solve_right(mat, Mat.column(field, rhs))
            if sol is None:
                continue
            x = [sol.a[t][0] for t in range(len(free))]
        else:
            if any(r != field.zero for r in rhs):
                continue
            x = []
        entries = [[basis_entry(r, j, x) for j in range(k)] for r in range(n)]
        new_bases = {v: u.basis(v) for v in rep.quiver.vertices}
        new_bases[i] = Mat(field, n, k, entries)
        cand = make_subrep(rep, new_bases)
        if cand.dims() == target:
            return cand
    return None


def demazure_module(
    q: Quiver, w: dict, word, trunc: int | None = None
) -> DemazureChain:
    """Build the submodule chain along a reduced word, last letter first."""
    base_word = _as_word(q, word)
    require_reduced(q, base_word)
    model = injective_hull(q, w, trunc)
    stages = [zero_subrep(model.rep)]
    targets = [zero_vector(model.base)]
    length = len(base_word)
    for k in range(1, length + 1):
        letter = base_word[length - k]
        try:
            nxt = extend_step(model, stages[-1], letter)
        except DimensionMismatchError:
            if not model.full:
                raise TruncationTooSmallError(
                    "stage dims missed the target; the truncation is likely too small",
                    suggested=2 * model.trunc,
                )
            raise
        expected = act(model.base, base_word[length - k :], w, zero_vector(model.base))
        if nxt.dims() != expected:
            raise DimensionMismatchError(
                f"stage {k} dims {nxt.dims()} differ from the target {expected}"
            )
        for v in model.rep.quiver.vertices:
            assert subspace_contains(nxt.basis(v), stages[-1].basis(v))
        stages.append(nxt)
        targets.append(expected)
    return DemazureChain(
        model=model,
        word=base_word,
        stages=tuple(stages),
        dim_targets=tuple(targets),
    )


def check_nesting(chain1: DemazureChain, chain2: DemazureChain) -> bool:
    """Final stage of the lower chain sits inside that of the higher chain."""
    q = chain1.model.base
    if not bruhat_leq(q, chain1.word, chain2.word):
        raise NotComparableError(
            "the first word is not at or below the second in Bruhat order"
        )
    r1, r2 = chain1.model.rep, chain2.model.rep
    if r1 is not r2:
        same = (
            tuple(r1.quiver.vertices) == tuple(r2.quiver.vertices)
            and r1.dim_vector() == r2.dim_vector()
            and all(r1.map(a.name) == r2.map(a.name) for a in r1.quiver.arrows)
        )
        if not same:
            raise ValidationError("chains live in different ambient modules")
    s1 = chain1.stages[-1]
    s2 = chain2.stages[-1]
    return all(
        subspace_contains(s2.basis(v), s1.basis(v)) for v in r1.quiver.vertices
    )


def _stage_counts(model: InjectiveModel, stage: Subrep, v: dict, primes, cap) -> tuple:
    piece = restrict(model.rep, stage)
    return tuple(
        count_submodules(reduce_mod(piece, p), v, cap) for p in primes
    )


def _check_primes(primes) -> list:
    out = [int(p) for p in primes]
    if not out:
        raise ValidationError("at least one prime is required")
    if len(set(out)) != len(out):
        raise ValidationError("primes must be distinct")
    for p in out:
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
    return sorted(out)


def stabilization_sigma(
    q: Quiver,
    w: dict,
    v: dict,
    primes,
    trunc: int | None = None,
    cap: int | None = None,
    max_len: int = 8,
) -> tuple:
    """Shortest word whose stage already carries the stable submodule counts.

    In finite type the search walks a fixed reduced word for the longest
    element: the returned word is the shortest trailing segment whose counts
    (at every test prime) match all later stages and every reduced one-letter
    extension.  Otherwise a breadth-first search over reduced words applies
    the one-letter-extension criterion up to a length cap.
    """
    plist = _check_primes(primes)
    kind = cartan_matrix(q).kind
    if kind == "finite":
        word0 = longest_element(q)
        chain = demazure_module(q, w, word0, trunc)
        length = len(word0)
        counts = [
            _stage_counts(chain.model, chain.stages[k], v, plist, cap)
            for k in range(length + 1)
        ]
        for k in range(length + 1):
            if any(counts[k2] != counts[k] for k2 in range(k + 1, length + 1)):
                continue
            suffix = word0[length - k :]
            ok = True
            for letter in q.vertices:
                extended = suffix + (letter,)
                if not is_reduced(q, extended):
                    continue
                ext_chain = demazure_module(q, w, extended, trunc)
                ext_counts = _stage_counts(
                    ext_chain.model, ext_chain.stages[-1], v, plist, cap
                )
                if ext_counts != counts[k]:
                    ok = False
                    break
            if ok:
                return suffix
        return word0
    # Breadth-first over reduced words, deduplicated by the reflection matrix.
    frontier = [()]
    seen = {word_matrix(q, ())}
    cache: dict = {}

    def word_counts(word: tuple) -> tuple:
        key = word_matrix(q, word)
        if key not in cache:
            ch = demazure_module(q, w, word, trunc)
            cache[key] = _stage_counts(ch.model, ch.stages[-1], v, plist, cap)
        return cache[key]

    while frontier:
        nxt = []
        for word in frontier:
            base_counts = word_counts(word)
            stable = True
            for letter in q.vertices:
                extended = word + (letter,)
                if not is_reduced(q, extended):
                    continue
                if word_counts(extended) != base_counts:
                    stable = False
            if stable:
                return word
            if len(word) < max_len:
                for letter in q.vertices:
                    extended = word + (letter,)
                    if not is_reduced(q, extended):
                        continue
                    key = word_matrix(q, extended)
                    if key not in seen:
                        seen.add(key)
                        nxt.append(extended)
        frontier = nxt
    raise SearchExhaustedError(
        f"no stabilization point found among reduced words of length <= {max_len}"
    )
