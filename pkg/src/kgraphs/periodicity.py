"""Bounded, certificate-producing decision procedures for periodicity.

Local periodicity (m, n) at v is the universal statement that every
boundary path x from v has d(x) >= m v n and equal shifted tails
sigma^m x = sigma^n x. A single finite prefix can refute it:

  type 1: the prefix stalls below m v n in coordinates that are dead at
          its source, so no completion ever reaches m v n;
  type 2: the prefix carries both shifted windows and they disagree;
  type 4: the prefix reaches m v n but some coordinate where m and n
          differ is dead, so the two tails have different degrees along
          every completion.

Establishing local periodicity exactly needs more than a prefix; the
deterministic-zone rule below covers the common case where the boundary
path is unique, and the source-removal reduction handles graphs whose
dead directions hide the periodic part.
"""
from __future__ import annotations

from dataclasses import dataclass

from .boundary import (
    BoundaryPrefix,
    boundary_prefixes,
    extend_to_boundary,
)
from .degrees import Degree, iter_degrees_upto, parse_degree
from .errors import (
    DegreeMismatch,
    DegreeOutOfRange,
    HasSources,
    NotComposable,
    RangeMismatch,
    UnsupportedDegree,
)
from .morphism import (
    Morphism,
    _exact_paths,
    compose,
    enumerate_into,
    enumerate_leq,
    extend,
    factor,
    from_str,
    identity,
    segment,
    to_str,
    vertex_at,
)
from .reduction import gamma_construct
from .skeleton import KGraph
from .verdicts import Verdict


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for the aggregate checks. Unset fields fall back to
    defaults sized from the vertex count."""

    degree_bound: Degree | None = None
    depth: Degree | None = None
    window_bound: Degree | None = None


def _default_degree_bound(g: KGraph) -> Degree:
    return Degree((len(g.vertices) + 1,) * g.rank)


def _default_depth(g: KGraph) -> Degree:
    return Degree((2 * len(g.vertices) + 2,) * g.rank)


def _degree_pairs(bound: Degree):
    """Unordered pairs m != n below the bound; the later element of the
    enumeration order is passed as m."""
    degs = iter_degrees_upto(bound)
    for j in range(len(degs)):
        for i in range(j):
            yield degs[j], degs[i]


def _sorted_slice(g: KGraph, v: str, deg: Degree) -> list[Morphism]:
    cache = g._cache.setdefault("sorted_slice", {})
    key = (v, deg)
    if key not in cache:
        cache[key] = sorted(_exact_paths(g, v, deg), key=lambda lam: lam.word)
    return cache[key]


def _grid_paths(g: KGraph, v: str, bound: Degree):
    """Every path of degree <= bound, in (total, components, word) order,
    produced degree slice by degree slice. Scans that exit on the first
    hit never pay for the large slices, and the per-degree sets are
    cached on the graph and shared between probes."""
    degs = sorted(iter_degrees_upto(bound), key=lambda d: (d.total, d.components))
    for deg in degs:
        yield from _sorted_slice(g, v, deg)


def _box(g: KGraph, v: str, bound: Degree):
    """Saturated box elements in the same order: paths that cannot grow
    without leaving the degree box."""
    for lam in _grid_paths(g, v, bound):
        dead = g.dead_colors(lam.source)
        grows = False
        for i in range(1, g.rank + 1):
            if lam.degree[i] + 1 <= bound[i] and i not in dead:
                grows = True
                break
        if not grows:
            yield lam


def _reach_has_dead(g: KGraph, v: str) -> bool:
    cache = g._cache.setdefault("reach_dead", {})
    if v not in cache:
        cache[v] = any(g.dead_colors(u) for u in g.reachable(v))
    return cache[v]


def _reach_acyclic(g: KGraph, v: str) -> bool:
    """No directed cycle among the vertices reachable from v, hence
    finitely many paths from v."""
    cache = g._cache.setdefault("reach_acyclic", {})
    if v in cache:
        return cache[v]
    state: dict[str, int] = {}

    def dfs(u: str) -> bool:
        state[u] = 1
        for color in range(1, g.rank + 1):
            for eid in g.edges_with_range(u, color):
                w = g.edge(eid).source
                if state.get(w) == 1:
                    return False
                if w not in state and not dfs(w):
                    return False
        state[u] = 2
        return True

    cache[v] = dfs(v)
    return cache[v]


# -- certificates ------------------------------------------------------


@dataclass(frozen=True)
class PeriodicityCertificate:
    """The replayable content of an established local periodicity: with
    mu = x(0,m), alpha = x(m, m v n), nu = (mu alpha)(0,n), every
    boundary path y at s(alpha) must satisfy mu alpha y = nu alpha y."""

    vertex: str
    m: Degree
    n: Degree
    mu: Morphism
    alpha: Morphism
    nu: Morphism

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "m": str(self.m),
            "n": str(self.n),
            "mu": to_str(self.mu),
            "alpha": to_str(self.alpha),
            "nu": to_str(self.nu),
        }


def certificate_from_json(g: KGraph, data: dict) -> PeriodicityCertificate:
    return PeriodicityCertificate(
        vertex=data["vertex"],
        m=parse_degree(data["m"]),
        n=parse_degree(data["n"]),
        mu=from_str(g, data["mu"]),
        alpha=from_str(g, data["alpha"]),
        nu=from_str(g, data["nu"]),
    )


def techlemma_construct(
    g: KGraph, v: str, m: Degree, n: Degree, x: BoundaryPrefix
) -> PeriodicityCertificate:
    """Extract (mu, alpha, nu) from a prefix of degree >= m v n."""
    lam = x.path
    if lam.range != v:
        raise RangeMismatch(f"prefix starts at {lam.range!r}, not {v!r}")
    top = m.join(n)
    if not lam.degree >= top:
        raise DegreeOutOfRange(f"prefix degree {lam.degree} does not cover {top}")
    zero = Degree.zero(g.rank)
    mu = segment(lam, zero, m)
    alpha = segment(lam, m, top)
    nu, _ = factor(compose(mu, alpha), n)
    return PeriodicityCertificate(vertex=v, m=m, n=n, mu=mu, alpha=alpha, nu=nu)


def verify_certificate(cert: PeriodicityCertificate, depth: Degree):
    """Replay a certificate: degree identities, the inequality of the
    composites, and window agreement of mu alpha y with nu alpha y over
    every boundary prefix y at s(alpha). Returns the first violation as
    a dict, or None."""
    g = cert.mu.graph
    top = cert.m.join(cert.n)
    if cert.mu.range != cert.vertex:
        return {"violation": "range", "mu": to_str(cert.mu)}
    try:
        a = compose(cert.mu, cert.alpha)
        b = compose(cert.nu, cert.alpha)
    except NotComposable as exc:
        return {"violation": "composition", "detail": str(exc)}
    if a.degree != top:
        return {"violation": "degree", "which": "mu.alpha", "got": str(a.degree)}
    if b.degree != cert.n + top - cert.m:
        return {"violation": "degree", "which": "nu.alpha", "got": str(b.degree)}
    if a == b:
        return {"violation": "composites-equal"}
    zero = Degree.zero(g.rank)
    for y in sorted(boundary_prefixes(g, a.source, depth), key=lambda p: p.path.word):
        ay = compose(a, y.path)
        by = compose(b, y.path)
        q = ay.degree.meet(by.degree)
        if segment(ay, zero, q) != segment(by, zero, q):
            return {"violation": "window", "y": to_str(y.path), "q": str(q)}
    return None


# -- deterministic zones ----------------------------------------------


def _det_zone(g: KGraph, v: str) -> bool:
    """True when every vertex reachable from v continues in exactly one
    way: at most one edge per color and a single saturated unit box.
    Then v has exactly one boundary path and periodicity questions about
    it are decidable by direct inspection."""
    cache = g._cache.setdefault("det_zone", {})
    if v in cache:
        return cache[v]
    ones = Degree((1,) * g.rank)
    ok = True
    for u in g.reachable(v):
        for color in range(1, g.rank + 1):
            if len(g.edges_with_range(u, color)) > 1:
                ok = False
        if ok and len(enumerate_leq(g, u, ones)) != 1:
            ok = False
        if not ok:
            break
    cache[v] = ok
    return ok


def _det_walk(g: KGraph, v: str, max_edges: int):
    """Follow the unique boundary path edge by edge. Returns the path,
    the (vertex, degree) checkpoints, and whether the walk stalled."""
    cur = identity(g, v)
    visits = [(v, cur.degree)]
    while len(cur.word) < max_edges:
        options = []
        for color in range(1, g.rank + 1):
            options.extend(g.edges_with_range(cur.source, color))
        if not options:
            return cur, visits, True
        cur = extend(cur, min(options))
        visits.append((cur.source, cur.degree))
    return cur, visits, False


def _det_local_periodicity(g: KGraph, v: str, m: Degree, n: Degree) -> Verdict:
    top = m.join(n)
    x = extend_to_boundary(identity(g, v), top)
    lam = x.path
    if not lam.degree >= top:
        # the unique path stalls short; every deficient coordinate died
        cert = {"type": 1, "witness": to_str(lam), "m": str(m), "n": str(n)}
        return Verdict.fails(certificate=cert)
    if vertex_at(lam, m) != vertex_at(lam, n):
        q = (lam.degree - m).meet(lam.degree - n)
        cert = {"type": 2, "witness": to_str(lam), "m": str(m), "n": str(n), "q": str(q)}
        return Verdict.fails(certificate=cert)
    # same vertex and a unique continuation: the shifted tails coincide
    cert = techlemma_construct(g, v, m, n, x).to_json()
    cert["rule"] = "deterministic"
    return Verdict.holds(certificate=cert)


def _det_vertex_scan(g: KGraph, v: str):
    """Exact periodicity decision for a whole deterministic vertex: walk
    the unique boundary path; a vertex revisit yields a periodicity pair,
    a stall refutes every pair at once (shifted tails of a finite path
    always differ in degree). Returns (pair, None) or (None, entry)."""
    path, visits, stalled = _det_walk(g, v, len(g.vertices) + 1)
    if stalled:
        entry = {"rule": "complete-path", "vertex": v, "witness": to_str(path)}
        return None, entry
    seen: dict[str, Degree] = {}
    for vertex, deg in visits:
        if vertex in seen:
            return (deg, seen[vertex]), None
        seen[vertex] = deg
    raise AssertionError("deterministic walk neither stalled nor repeated")


# -- exact establishment ------------------------------------------------


def _strip_matched(ra: Morphism, rb: Morphism):
    """Compare the aligned meet window of two residual tails and drop it.
    None means the windows disagree, so the two extensions split apart."""
    zero = Degree.zero(ra.degree.rank)
    q = ra.degree.meet(rb.degree)
    if segment(ra, zero, q) != segment(rb, zero, q):
        return None
    return factor(ra, q)[1], factor(rb, q)[1]


def _prove_equal_extensions(g: KGraph, a: Morphism, b: Morphism, cap: int = 4000) -> bool:
    """Decide whether a.y == b.y for every boundary path y at the shared
    source.

    Bisimulation on residual pairs: once the compared portion is
    stripped, the tails keep the constant degrees (d(a)-d(b))^+ and
    (d(b)-d(a))^+, so the reachable state space is finite. Every
    appended edge must keep the aligned windows equal, and each color
    where the degrees differ must stay live along the way, otherwise
    some y ends with tails of different degrees. Sound and complete
    below the state cap; hitting the cap gives up with False."""
    if a.source != b.source:
        return False
    diff = [i for i in range(1, g.rank + 1) if a.degree[i] != b.degree[i]]
    start = _strip_matched(a, b)
    if start is None:
        return False
    seen = {start}
    work = [start]
    while work:
        ra, rb = work.pop()
        src = ra.source
        dead = g.dead_colors(src)
        if any(i in dead for i in diff):
            return False
        for color in range(1, g.rank + 1):
            for eid in g.edges_with_range(src, color):
                step = Morphism(g, src, (eid,))
                nxt = _strip_matched(compose(ra, step), compose(rb, step))
                if nxt is None:
                    return False
                if nxt not in seen:
                    if len(seen) >= cap:
                        return False
                    seen.add(nxt)
                    work.append(nxt)
    return True


def _iter_exact(g: KGraph, v: str, top: Degree):
    """Paths in v.Lambda^top, produced lazily so a refuting path is found
    without materializing the whole set."""
    seen = {identity(g, v)}
    stack = [identity(g, v)]
    while stack:
        lam = stack.pop()
        if lam.degree == top:
            yield lam
            continue
        for color in range(1, g.rank + 1):
            if lam.degree[color] >= top[color]:
                continue
            for eid in sorted(g.edges_with_range(lam.source, color)):
                nxt = extend(lam, eid)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)


def _universal_lp_prove(g: KGraph, v: str, m: Degree, n: Degree) -> bool:
    """Exact proof that local periodicity (m, n) holds at v: no boundary
    path stalls below m|n, and for every full prefix lam the two tails
    lam(m,top).y and lam(n,top).y agree for every continuation y. Both
    parts are decided, not searched, so True is never bound-limited.
    Tail proving runs first because a refutation usually surfaces on the
    first path, long before the stall sweep would pay off."""
    cache = g._cache.setdefault("lp_prove", {})
    key = (v, m, n)
    if key in cache:
        return cache[key]
    top = m.join(n)
    ok = True
    for lam in _iter_exact(g, v, top):
        if not _prove_equal_extensions(g, segment(lam, m, top), segment(lam, n, top)):
            ok = False
            break
    if ok:
        for lam in _box(g, v, top):
            if lam.degree != top:
                ok = False
                break
    cache[key] = ok
    return ok


def _established(g: KGraph, v: str, m: Degree, n: Degree, rule: str) -> dict:
    """Certificate for an exactly established periodicity pair."""
    x = extend_to_boundary(identity(g, v), m.join(n))
    cert = techlemma_construct(g, v, m, n, x).to_json()
    cert["rule"] = rule
    return cert


# -- local periodicity -------------------------------------------------


def _lp_probe(g: KGraph, v: str, m: Degree, n: Degree, depth: Degree, types) -> Verdict:
    top = m.join(n)
    if _det_zone(g, v):
        return _det_local_periodicity(g, v, m, n)
    bound = top + depth
    has_dead = _reach_has_dead(g, v)
    if 1 in types and has_dead:
        # stalls: box saturation below top makes each deficient
        # coordinate dead, so no completion ever reaches m v n
        for lam in _box(g, v, top):
            if not lam.degree >= top:
                cert = {"type": 1, "witness": to_str(lam), "m": str(m), "n": str(n)}
                return Verdict.fails(certificate=cert)
    for q in sorted(iter_degrees_upto(depth), key=lambda d: (d.total, d.components)):
        for lam in _sorted_slice(g, v, top + q):
            d = lam.degree
            qq = (d - m).meet(d - n)
            if 2 in types and segment(lam, m, m + qq) != segment(lam, n, n + qq):
                cert = {
                    "type": 2,
                    "witness": to_str(lam),
                    "m": str(m),
                    "n": str(n),
                    "q": str(qq),
                }
                return Verdict.fails(certificate=cert)
            if 4 in types and has_dead:
                dead = g.dead_colors(lam.source)
                frozen = [i for i in range(1, g.rank + 1) if m[i] != n[i] and i in dead]
                if frozen:
                    cert = {
                        "type": 4,
                        "witness": to_str(lam),
                        "m": str(m),
                        "n": str(n),
                        "frozen": frozen[0],
                    }
                    return Verdict.fails(certificate=cert)
    if _reach_acyclic(g, v):
        box = list(_box(g, v, bound))
        if all(len(g.dead_colors(lam.source)) == g.rank for lam in box):
            cert = {
                "rule": "exhausted",
                "m": str(m),
                "n": str(n),
                "paths": sorted(to_str(lam) for lam in box),
            }
            return Verdict.holds(certificate=cert)
    if _universal_lp_prove(g, v, m, n):
        return Verdict.holds(certificate=_established(g, v, m, n, "transport"))
    return Verdict.unknown(bound={"search": str(bound)})


def local_periodicity_at(g: KGraph, v: str, m: Degree, n: Degree, depth: Degree) -> Verdict:
    """Verdict on local periodicity (m, n) at v. Fails means an NLP
    witness was found; Holds is exact (deterministic zone or exhausted
    search space)."""
    g.require_validated()
    if m == n:
        raise DegreeMismatch("local periodicity needs m != n")
    return _lp_probe(g, v, m, n, depth, types=(1, 2, 4))


def _periodicity_failure(g: KGraph, v: str, m: Degree, n: Degree, probe: Verdict, bound: dict) -> Verdict:
    """Package an established local periodicity as a Fails(NLP) verdict
    with a replayable certificate."""
    cert = dict(probe.certificate or {})
    if "mu" not in cert:
        x = extend_to_boundary(identity(g, v), m.join(n))
        if x.path.degree >= m.join(n):
            cert.update(techlemma_construct(g, v, m, n, x).to_json())
    cert.setdefault("vertex", v)
    cert.setdefault("m", str(m))
    cert.setdefault("n", str(n))
    return Verdict.fails(certificate=cert, bound=bound)


def nlp_check(g: KGraph, degree_bound: Degree | None = None, depth: Degree | None = None) -> Verdict:
    """No-local-periodicity verdict: scan every vertex and every pair
    m != n up to the degree bound. Fails carries the periodicity
    certificate; Holds carries the witness table."""
    g.require_validated()
    if degree_bound is None:
        degree_bound = _default_degree_bound(g)
    if depth is None:
        depth = _default_depth(g)
    bound = {"degree": str(degree_bound), "depth": str(depth)}
    witnesses = []
    unknown = False
    for v in g.vertex_ids():
        if _det_zone(g, v):
            # decide the whole vertex at once; a revisit pair may lie
            # beyond the scan bound but is established exactly
            pair, entry = _det_vertex_scan(g, v)
            if pair is not None:
                m, n = pair
                probe = Verdict.holds(certificate=_established(g, v, m, n, "deterministic"))
                return _periodicity_failure(g, v, m, n, probe, bound)
            witnesses.append(entry)
            continue
        for m, n in _degree_pairs(degree_bound):
            probe = _lp_probe(g, v, m, n, depth, types=(1, 2, 4))
            if probe.is_fails():
                entry = dict(probe.certificate)
                entry["vertex"] = v
                witnesses.append(entry)
            elif probe.is_holds():
                return _periodicity_failure(g, v, m, n, probe, bound)
            else:
                unknown = True
    if unknown:
        return Verdict.unknown(bound=bound)
    return Verdict.holds(certificate={"witnesses": witnesses}, bound=bound)


def snlp_check(g: KGraph, degree_bound: Degree | None = None, depth: Degree | None = None) -> Verdict:
    """Strong no-local-periodicity: defined for sourceless graphs only,
    witnesses must carry full degree (type 2)."""
    g.require_validated()
    for v in g.vertex_ids():
        dead = g.dead_colors(v)
        if dead:
            raise HasSources(v, min(dead))
    if degree_bound is None:
        degree_bound = _default_degree_bound(g)
    if depth is None:
        depth = _default_depth(g)
    bound = {"degree": str(degree_bound), "depth": str(depth)}
    witnesses = []
    unknown = False
    for v in g.vertex_ids():
        if _det_zone(g, v):
            pair, entry = _det_vertex_scan(g, v)
            if pair is not None:
                m, n = pair
                probe = Verdict.holds(certificate=_established(g, v, m, n, "deterministic"))
                return _periodicity_failure(g, v, m, n, probe, bound)
            witnesses.append(entry)
            continue
        for m, n in _degree_pairs(degree_bound):
            probe = _lp_probe(g, v, m, n, depth, types=(2,))
            if probe.is_fails():
                entry = dict(probe.certificate)
                entry["vertex"] = v
                witnesses.append(entry)
            elif probe.is_holds():
                return _periodicity_failure(g, v, m, n, probe, bound)
            else:
                unknown = True
    if unknown:
        return Verdict.unknown(bound=bound)
    return Verdict.holds(certificate={"witnesses": witnesses}, bound=bound)


# -- aperiodicity condition ---------------------------------------------


def _pair_settled(g: KGraph, lam: Morphism, m: Degree, n: Degree) -> bool:
    """True when no boundary completion of lam can satisfy the periodicity
    identity for the pair (m, n)."""
    d = lam.degree
    dead = g.dead_colors(lam.source)
    top = m.join(n)
    for i in range(1, g.rank + 1):
        # a dead coordinate freezes d(x)_i at d_i along every completion
        if i in dead and d[i] < top[i]:
            return True  # d(x) >= m v n is never reached: pair vacuous
        if i in dead and m[i] != n[i] and d >= top:
            return True  # shifted tails keep different degrees
    if not d >= top:
        return False
    q = (d - m).meet(d - n)
    return segment(lam, m, m + q) != segment(lam, n, n + q)


def aperiodicity_check(
    g: KGraph,
    v: str,
    depth: Degree | None = None,
    window_bound: Degree | None = None,
) -> Verdict:
    """Search for one boundary path from v all of whose shifted tails
    differ. Holds with an aperiodic prefix (exact when the prefix is a
    complete path); Fails exactly via the deterministic rule; otherwise
    routes through the source-removal reduction before giving up."""
    g.require_validated()
    if depth is None:
        depth = _default_depth(g)
    if window_bound is None:
        window_bound = _default_degree_bound(g)
    bound = {"depth": str(depth), "window": str(window_bound)}

    if _det_zone(g, v):
        pair, entry = _det_vertex_scan(g, v)
        if pair is None:
            # a finite complete path: distinct shifts differ in degree
            return Verdict.holds(certificate=entry)
        m, n = pair
        return Verdict.fails(certificate=_established(g, v, m, n, "deterministic"))

    pairs = list(_degree_pairs(window_bound))
    slack = depth + window_bound
    for lam in _grid_paths(g, v, depth):
        if len(g.dead_colors(lam.source)) == g.rank:
            return Verdict.holds(certificate={"rule": "complete-path", "witness": to_str(lam)})
        # each prefix steers one boundary extension; the slack beyond the
        # window bound keeps every comparison window nonempty
        y = extend_to_boundary(lam, lam.degree + slack)
        if all(_pair_settled(g, y.path, m, n) for m, n in pairs):
            return Verdict.holds(
                certificate={"rule": "prefix", "witness": to_str(y.path)},
                bound=bound,
            )

    for m, n in pairs:
        # an established pair defeats every boundary path at v at once
        if _universal_lp_prove(g, v, m, n):
            return Verdict.fails(certificate=_established(g, v, m, n, "transport"))

    gamma = gamma_construct(g, start=v)
    if gamma.a > 0:
        if gamma.base.rank == 0:
            # all colors die from v: every boundary path is finite, hence aperiodic
            cert = {"rule": "reduction", "anchor": gamma.anchor, "gamma_rank": 0}
            return Verdict.holds(certificate=cert)
        at = v if v in gamma.base.vertices else gamma.anchor
        sub = aperiodicity_check(
            gamma.base, at, gamma.pi(depth), gamma.pi(window_bound)
        )
        if sub.is_holds():
            cert = {
                "rule": "reduction",
                "anchor": gamma.anchor,
                "at": at,
                "gamma_certificate": sub.certificate,
            }
            return Verdict.holds(certificate=cert, bound=sub.bound)
        if sub.is_fails() and at == v:
            # v lives inside the reduction; its boundary paths coincide
            cert = dict(sub.certificate or {})
            cert["rule"] = "reduction"
            cert["anchor"] = gamma.anchor
            return Verdict.fails(certificate=cert)
    return Verdict.unknown(bound=bound)


# -- condition B --------------------------------------------------------


def _into_pairs(g: KGraph, v: str, degree_bound: Degree):
    """Pairs lam != mu ending at v that are not separated automatically:
    same range, different degree. Equal degrees split by factorization,
    unequal ranges never collide."""
    paths = []
    for deg in iter_degrees_upto(degree_bound):
        paths.extend(sorted(enumerate_into(g, v, deg), key=lambda p: (p.range, p.word)))
    out = []
    for j in range(len(paths)):
        for i in range(j):
            lam, mu = paths[j], paths[i]
            if lam.range == mu.range and lam.degree != mu.degree:
                out.append((lam, mu))
    return out


def _separated(g: KGraph, lam: Morphism, mu: Morphism, x: Morphism) -> bool:
    """True when lam.x != mu.x is forced for every completion of x.

    Monotone in x: extending x at the source end leaves the compared
    initial segments intact and keeps dead coordinates dead, so a
    separated pair stays separated."""
    for i in range(1, g.rank + 1):
        if lam.degree[i] != mu.degree[i] and i in g.dead_colors(x.source):
            return True  # the degree gap in a frozen coordinate never closes
    a = compose(lam, x)
    b = compose(mu, x)
    q = a.degree.meet(b.degree)
    zero = Degree.zero(g.rank)
    return segment(a, zero, q) != segment(b, zero, q)


def _sep_fast(g: KGraph, lam: Morphism, mu: Morphism, x: Morphism, comp, seg) -> bool:
    """_separated with compose and segment results cached across pairs
    sharing the same x. Words key the caches faithfully: a word pins the
    whole path once the source vertex is fixed."""
    dead = g.dead_colors(x.source)
    for i in range(1, g.rank + 1):
        if lam.degree[i] != mu.degree[i] and i in dead:
            return True
    for p in (lam, mu):
        if p.word not in comp:
            comp[p.word] = compose(p, x)
    a, b = comp[lam.word], comp[mu.word]
    q = a.degree.meet(b.degree)
    zero = Degree.zero(g.rank)
    for p, c in ((lam, a), (mu, b)):
        key = (p.word, q)
        if key not in seg:
            seg[key] = segment(c, zero, q).word
    return seg[(lam.word, q)] != seg[(mu.word, q)]


def _cycle_at(g: KGraph, v: str) -> Morphism | None:
    """Shortest directed cycle through v (colors mixed freely), as a
    morphism, or None when v lies on no cycle."""
    parent: dict[str, tuple[str, str]] = {}
    queue = [v]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for color in range(1, g.rank + 1):
            for eid in sorted(g.edges_with_range(u, color)):
                z = g.edge(eid).source
                if z == v:
                    chain = [eid]
                    while u != v:
                        u, prev = parent[u]
                        chain.append(prev)
                    lam = identity(g, v)
                    for step in reversed(chain):
                        lam = extend(lam, step)
                    return lam
                if z not in parent:
                    parent[z] = (u, eid)
                    queue.append(z)
    return None


def condition_b_check(
    g: KGraph,
    v: str,
    depth: Degree | None = None,
    degree_bound: Degree | None = None,
) -> Verdict:
    """Search for a boundary path x at v separating every pair of
    distinct paths into v: lam != mu implies lam.x != mu.x."""
    g.require_validated()
    if depth is None:
        depth = _default_depth(g)
    if degree_bound is None:
        degree_bound = _default_degree_bound(g)
    bound = {"depth": str(depth), "degree": str(degree_bound)}

    if _det_zone(g, v):
        # the boundary path x at v is unique, so lam.x = mu.x can only
        # happen with a cycle delta at v: delta.x lands back in the same
        # singleton, giving delta.x = x against mu = identity. Exact in
        # both directions: any collision forces such a cycle.
        delta = _cycle_at(g, v)
        if delta is not None:
            cert = {
                "rule": "deterministic",
                "lam": to_str(delta),
                "mu": to_str(identity(g, v)),
            }
            return Verdict.fails(certificate=cert)
        path, _, _ = _det_walk(g, v, len(g.vertices) + 1)
        return Verdict.holds(certificate={"rule": "deterministic", "witness": to_str(path)})

    for u in g.vertex_ids():
        # periodicity established anywhere pins a colliding pair at the
        # vertex where its tail ends; check whether that vertex is v
        for m, n in _degree_pairs(degree_bound):
            if not _universal_lp_prove(g, u, m, n):
                continue
            x = extend_to_boundary(identity(g, u), m.join(n))
            made = techlemma_construct(g, u, m, n, x)
            if made.alpha.source != v:
                continue
            cert = {
                "rule": "transport",
                "lam": to_str(compose(made.mu, made.alpha)),
                "mu": to_str(compose(made.nu, made.alpha)),
                "vertex": u,
                "m": str(m),
                "n": str(n),
            }
            return Verdict.fails(certificate=cert)

    # grow one separating prefix greedily: separation is monotone under
    # extension, so pairs handled earlier never come back
    pairs = _into_pairs(g, v, degree_bound)
    x = identity(g, v)
    cap = depth + depth
    comp: dict = {}
    seg: dict = {}
    idx = 0
    while idx < len(pairs):
        lam, mu = pairs[idx]
        if _sep_fast(g, lam, mu, x, comp, seg):
            idx += 1
            continue
        rem = cap - x.degree
        for w in _grid_paths(g, x.source, rem):
            if w.degree.total == 0:
                continue
            if _separated(g, lam, mu, compose(x, w)):
                x = compose(x, w)
                comp.clear()
                seg.clear()
                break
        else:
            return Verdict.unknown(bound=bound)
    if len(g.dead_colors(x.source)) == g.rank:
        # finite complete x: degree gaps separate every remaining pair
        return Verdict.holds(certificate={"rule": "complete-path", "witness": to_str(x)})
    y = extend_to_boundary(x, x.degree + depth)
    comp.clear()
    seg.clear()
    if all(_sep_fast(g, lam, mu, y.path, comp, seg) for lam, mu in pairs):
        return Verdict.holds(
            certificate={"rule": "prefix", "witness": to_str(y.path)}, bound=bound
        )
    return Verdict.unknown(bound=bound)


# -- classical rank-1 criterion -----------------------------------------


def k1_cycle_criterion(g: KGraph) -> Verdict:
    """Exact no-local-periodicity for rank 1: fails exactly when some
    cycle has no exit, i.e. a closed chain of vertices each receiving a
    single edge."""
    g.require_validated()
    if g.rank != 1:
        raise UnsupportedDegree("the cycle criterion applies to rank-1 graphs")
    for start in g.vertex_ids():
        walk: list[str] = []
        seen: dict[str, int] = {}
        cur = start
        while True:
            if cur in seen:
                cycle = walk[seen[cur]:]
                return Verdict.fails(certificate={"vertex": cur, "cycle": cycle})
            outs = g.edges_with_range(cur, 1)
            if len(outs) != 1:
                break
            seen[cur] = len(walk)
            walk.append(outs[0])
            cur = g.edge(outs[0]).source
    return Verdict.holds(certificate={"rule": "every-cycle-has-exit"})
