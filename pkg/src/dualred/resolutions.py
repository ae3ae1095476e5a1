"""Free resolutions of presented modules and semifree resolutions of
bounded complexes.

Resolutions are built by iterated syzygy computation and cached on the
module presentation so deeper requests extend earlier work.  Each fresh
syzygy step is cut down to a minimal generating set before it becomes the
next free term; raw syzygy sets grow roughly quadratically in the step
size, so extending from an unminimalized frontier would snowball.

A semifree resolution of a bounded complex is assembled top down: resolve
the top term, then repeatedly form the cone over a lifted comparison map
into the resolution of the next term.  A complex whose terms are already
free is its own semifree resolution.
"""

from .complexes import FreeComplex, cone, mat_apply, prune_free_complex
from .errors import OutsideValidityWindow
from .groebner import ModuleGB


def _has_unit_entry(cols):
    for col in cols:
        for p in col.values():
            if len(p.terms) == 1 and not any(p.terms[0][0]):
                return True
    return False


def _minimal_generators(algebra, ambient_degrees, candidates):
    """Minimal generating set among homogeneous candidates [(vec, deg)].

    Processed in ascending degree, a candidate is kept iff it is not in the
    submodule generated by those kept so far; over a connected graded
    algebra the greedy filter is exact (graded Nakayama).  The membership
    basis is rebuilt per kept vector, which stays cheap because the kept
    set is the small one."""
    kept = []
    gb = None
    for v, d in sorted(candidates, key=lambda t: t[1]):
        if gb is not None and gb.contains(v):
            continue
        kept.append((v, d))
        gb = ModuleGB(
            algebra,
            ambient_degrees,
            [u for u, _ in kept],
            col_degrees=[e for _, e in kept],
            keep_reps=False,
            want_syz=False,
        )
    return kept


def _ensure_resolution(M, depth):
    cache = M._resolution
    if cache is None:
        gens = [tuple(M.gen_degrees)]
        cols = [None]
        complete = not M.relations
        if M.relations:
            gens.append(tuple(M.rel_degrees))
            cols.append([dict(c) for c in M.relations])
        cache = {
            "gens": gens,
            "cols": cols,
            "complete": complete,
            "minimal_base": not _has_unit_entry(M.relations),
        }
        M._resolution = cache
    while not cache["complete"] and len(cache["gens"]) - 1 < depth:
        k = len(cache["gens"]) - 1
        gb = ModuleGB(
            M.algebra,
            cache["gens"][k - 1],
            cache["cols"][k],
            col_degrees=cache["gens"][k],
            keep_reps=True,
            want_syz=True,
        )
        syz = _minimal_generators(M.algebra, cache["gens"][k], gb.syzygy_columns())
        if not syz:
            cache["complete"] = True
            break
        cache["gens"].append(tuple(d for _, d in syz))
        cache["cols"].append([dict(v) for v, _ in syz])
    return cache


def free_resolution(M, depth):
    """Graded free resolution of the presented module, homological degrees
    0..depth; minimal when the presentation is reduced.  agree_hi is None
    when the resolution terminated."""
    cache = _ensure_resolution(M, depth)
    built = len(cache["gens"]) - 1
    upto = min(depth, built)
    gens = {i: cache["gens"][i] for i in range(upto + 1)}
    diffs = {i: [dict(c) for c in cache["cols"][i]] for i in range(1, upto + 1)}
    agree_hi = None if (cache["complete"] and upto == built) else upto
    return FreeComplex(M.algebra, 0, gens, diffs, None, agree_hi)


def betti_numbers(M, depth):
    cache = _ensure_resolution(M, depth)
    if not cache["minimal_base"]:
        raise ValueError(
            "Betti numbers are only defined from a reduced presentation"
        )
    built = len(cache["gens"]) - 1
    out = [len(cache["gens"][i]) for i in range(min(depth, built) + 1)]
    while len(out) < depth + 1 and cache["complete"]:
        out.append(0)
    return out


def is_resolution_complete(M, depth):
    cache = _ensure_resolution(M, depth)
    return cache["complete"]


def _lift_gb(G, n, store):
    gb = store.get(n)
    if gb is None:
        gb = ModuleGB(
            G.algebra,
            G.term_degrees(n - 1),
            G.diff[n],
            col_degrees=G.term_degrees(n),
            keep_reps=True,
            want_syz=False,
        )
        store[n] = gb
    return gb


def semifree_resolution(C, top):
    """Free complex quasi-isomorphic to C, built to homological degree top.

    agree_hi of the result marks where term information stops when any of
    the stepwise resolutions had to be truncated; agree_lo passes through
    from C.
    """
    if isinstance(C, FreeComplex):
        return C
    if C.is_termwise_free():
        return C.as_free_complex()

    algebra = C.algebra
    F = None
    truncated = False
    for i in range(C.hi, C.lo - 1, -1):
        term = C.terms[i]
        res = free_resolution(term, max(top - i, 0))
        if res.agree_hi is not None:
            truncated = True
        G = res.shift(i)
        if F is None:
            F = G
            continue

        # comparison map psi_n : F_{n+1} -> G_n with d_G psi = -psi d_F,
        # seeded by the complex differential on the bottom block of F
        r0 = C.terms[i + 1].rank
        dnext = C.diff.get(i + 1, [])
        psi = {}
        base_cols = []
        for c in range(F.rank(i + 1)):
            base_cols.append(dict(dnext[c]) if c < r0 else {})
        psi[i] = base_cols
        lift_store = {}
        for n in range(i + 1, F.hi):
            cols = []
            prev = psi[n - 1]
            dF = F.diff[n + 1]
            for c in range(F.rank(n + 1)):
                v = mat_apply(algebra, prev, dF[c])
                v = {r: -p for r, p in v.items()}
                if not v:
                    cols.append({})
                    continue
                if G.rank(n) == 0:
                    raise OutsideValidityWindow(
                        "comparison map does not vanish beyond the resolution"
                    )
                u = _lift_gb(G, n, lift_store).lift(v)
                if u is None:
                    raise OutsideValidityWindow(
                        "resolution depth %d too small to lift the comparison map"
                        % top
                    )
                cols.append(u)
            psi[n] = cols
        F = cone(psi, F.shift(-1), G)
        # the bottom block of the new bottom term seeds the next lift and
        # must survive intermediate pruning
        F = prune_free_complex(F, protect=(i, term.rank))

    F = prune_free_complex(F)
    agree_hi = top if truncated else C.agree_hi
    if C.agree_hi is not None:
        agree_hi = C.agree_hi if agree_hi is None else min(agree_hi, C.agree_hi)
    return FreeComplex(
        algebra,
        F.lo,
        {i: F.term_degrees(i) for i in range(F.lo, F.hi + 1)},
        {i: F.diff[i] for i in range(F.lo + 1, F.hi + 1)},
        C.agree_lo,
        agree_hi,
        check=False,
    )
