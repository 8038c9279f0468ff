"""Certified exhaustive searches.

Every search returns a Certificate: either a witness that has been re-checked
by an independent oracle (represents, transitivity, realizer intersection) or
an exhaustion claim covering the whole space under the documented symmetry
reductions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import VerificationError
from .graphs import Graph, iter_bits
from .orientations import Orientation, is_transitive
from .words import Word, concat_orders, represents

WITNESS_FOUND = "witness-found"
EXHAUSTED = "exhausted"
ABORTED = "aborted"
NOT_REPRESENTABLE = "not-word-representable"


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


@dataclass(frozen=True)
class Certificate:
    """Outcome record of one search.

    status is "witness-found", "exhausted", or "aborted"; witness is a Word,
    an Orientation, or a LinearOrderFamily when found, else None.
    """

    query: str
    status: str
    witness: object | None
    nodes_explored: int
    elapsed_ms: float


@dataclass(frozen=True)
class LinearOrderFamily:
    """A non-empty list of vertex permutations over one common vertex set."""

    orders: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("a linear order family must contain at least one order")
        base = set(self.orders[0])
        for p in self.orders:
            if len(set(p)) != len(p) or set(p) != base or len(p) != len(self.orders[0]):
                raise ValueError("orders must all be permutations of one vertex set")

    def word(self) -> Word:
        return concat_orders(self.orders)


@dataclass(frozen=True)
class RepNumberCertificate:
    """Minimal-k outcome with the per-k certificates that support it."""

    query: str
    status: str  # witness-found | not-word-representable | aborted
    rep_number: int | None
    witness: Word | None
    per_k: tuple[Certificate, ...]
    nodes_explored: int
    elapsed_ms: float


def find_k_uniform_representant(g: Graph, k: int) -> Certificate:
    """Search for a k-uniform word representing g.

    Left-to-right backtracking over letters with remaining copies, driven by
    per-pair alternation automata: an adjacent pair dies on any repeat, and
    when a letter places its final copy each partner's remaining count
    decides feasibility.  Two symmetry reductions, both sound for exhaustion:
    (a) the word starts with a fixed maximum-degree vertex, justified by
    rotating any representant to such a start; (b) of a word and its
    rotated reverse (which share that first letter) only the one whose second
    letter does not exceed its last letter is enumerated.
    """
    if k <= 0:
        raise ValueError("k must be a positive integer")
    t0 = time.perf_counter()
    n = g.n
    adj = g.adj
    labs = g.labels
    total = n * k
    query = f"k-uniform-representant n={n} m={g.edge_count} k={k}"

    if n == 0:
        w = Word(())
        if not represents(w, g):
            raise VerificationError("empty word failed verification")
        return Certificate(query, WITNESS_FOUND, w, 0, _ms(t0))

    start = max(range(n), key=lambda i: (adj[i].bit_count(), -i))
    rem = [k] * n
    last = [[-1] * n for _ in range(n)]
    alive = [[True] * n for _ in range(n)]
    word_idx: list[int] = []
    nodes = 0

    def feasible(c: int) -> bool:
        exhausting = rem[c] == 1
        row = adj[c]
        lc = last[c]
        ac = alive[c]
        for d in range(n):
            if d == c:
                continue
            if row >> d & 1:
                if lc[d] == c:
                    return False
                if exhausting and rem[d] >= 2:
                    return False
            elif ac[d] and lc[d] != c:
                if exhausting and rem[d] <= 1:
                    return False
        return True

    def apply(c: int) -> list[tuple[int, int, bool]]:
        steps = []
        row = adj[c]
        for d in range(n):
            if d == c:
                continue
            steps.append((d, last[c][d], alive[c][d]))
            if not row >> d & 1 and alive[c][d] and last[c][d] == c:
                alive[c][d] = alive[d][c] = False
            last[c][d] = last[d][c] = c
        rem[c] -= 1
        return steps

    def undo(c: int, steps: list[tuple[int, int, bool]]) -> None:
        rem[c] += 1
        for d, l_old, a_old in steps:
            last[c][d] = last[d][c] = l_old
            alive[c][d] = alive[d][c] = a_old

    def extend(pos: int) -> bool:
        nonlocal nodes
        if pos == total:
            return True
        final = pos == total - 1 and total >= 3
        for c in range(n):
            if rem[c] == 0:
                continue
            if pos == 0 and c != start:
                continue
            if final and c < word_idx[1]:
                continue
            if not feasible(c):
                continue
            steps = apply(c)
            nodes += 1
            word_idx.append(c)
            if extend(pos + 1):
                return True
            word_idx.pop()
            undo(c, steps)
        return False

    if extend(0):
        w = Word(labs[c] for c in word_idx)
        if not represents(w, g):
            raise VerificationError("completed word failed verification")
        return Certificate(query, WITNESS_FOUND, w, nodes, _ms(t0))
    return Certificate(query, EXHAUSTED, None, nodes, _ms(t0))


def representation_number(g: Graph, max_k: int | None = None) -> RepNumberCertificate:
    """Minimal k admitting a k-uniform representant, with per-k certificates.

    Complete graphs answer 1 immediately with a permutation witness.  A
    k-representable graph is also (k+1)-representable, so the first success
    in the ascending scan is minimal; exhausting k = |V| proves the graph is
    not word-representable at all.  An explicit max_k below |V| that exhausts
    yields status "aborted" instead, as nothing was proved.
    """
    t0 = time.perf_counter()
    if max_k is not None and max_k <= 0:
        raise ValueError("max_k must be a positive integer")
    query = f"representation-number n={g.n} m={g.edge_count}"
    if max_k is not None:
        query += f" max-k={max_k}"

    if g.is_complete():
        w = Word(g.labels)
        if not represents(w, g):
            raise VerificationError("permutation witness failed verification")
        sub = f"k-uniform-representant n={g.n} m={g.edge_count} k=1"
        cert = Certificate(sub, WITNESS_FOUND, w, 0, 0.0)
        return RepNumberCertificate(query, WITNESS_FOUND, 1, w, (cert,), 0, _ms(t0))

    bound = g.n if max_k is None else min(max_k, g.n)
    per: list[Certificate] = []
    nodes = 0
    for k in range(1, bound + 1):
        cert = find_k_uniform_representant(g, k)
        per.append(cert)
        nodes += cert.nodes_explored
        if cert.status == WITNESS_FOUND:
            assert isinstance(cert.witness, Word)
            return RepNumberCertificate(
                query, WITNESS_FOUND, k, cert.witness, tuple(per), nodes, _ms(t0)
            )
    status = NOT_REPRESENTABLE if bound == g.n else ABORTED
    return RepNumberCertificate(query, status, None, None, tuple(per), nodes, _ms(t0))


def find_transitive_orientation(g: Graph) -> Certificate:
    """Search for a transitive orientation (comparability recognition).

    Backtracks over undirected edges, trying both directions with unit
    propagation: setting a->b forces x->b for every x->a and a->y for every
    b->y, failing when a forced pair is non-adjacent or already directed the
    other way.
    """
    t0 = time.perf_counter()
    n = g.n
    adj = g.adj
    query = f"transitive-orientation n={n} m={g.edge_count}"
    edges = [(i, j) for i in range(n) for j in iter_bits(adj[i]) if i < j]
    m = len(edges)
    eid = {e: t for t, e in enumerate(edges)}
    assigned = [0] * m  # 0 open, 1 = i->j, 2 = j->i
    out = [0] * n
    inn = [0] * n
    nodes = 0

    def set_arc(a: int, b: int, changed: list[int]) -> bool:
        t = eid[(a, b) if a < b else (b, a)]
        want = 1 if a < b else 2
        if assigned[t]:
            return assigned[t] == want
        assigned[t] = want
        out[a] |= 1 << b
        inn[b] |= 1 << a
        changed.append(t)
        for x in iter_bits(inn[a]):
            if not adj[x] >> b & 1 or not set_arc(x, b, changed):
                return False
        for y in iter_bits(out[b]):
            if not adj[a] >> y & 1 or not set_arc(a, y, changed):
                return False
        return True

    def rollback(changed: list[int]) -> None:
        for t in reversed(changed):
            i, j = edges[t]
            a, b = (i, j) if assigned[t] == 1 else (j, i)
            assigned[t] = 0
            out[a] &= ~(1 << b)
            inn[b] &= ~(1 << a)

    def solve() -> bool:
        nonlocal nodes
        t = next((t for t in range(m) if not assigned[t]), -1)
        if t < 0:
            return True
        i, j = edges[t]
        for a, b in ((i, j), (j, i)):
            changed: list[int] = []
            nodes += 1
            if set_arc(a, b, changed) and solve():
                return True
            rollback(changed)
        return False

    if solve():
        labs = g.labels
        arcs = []
        for t, (i, j) in enumerate(edges):
            a, b = (i, j) if assigned[t] == 1 else (j, i)
            arcs.append((labs[a], labs[b]))
        d = Orientation(g, arcs)
        if not is_transitive(d):
            raise VerificationError("completed orientation is not transitive")
        return Certificate(query, WITNESS_FOUND, d, nodes, _ms(t0))
    return Certificate(query, EXHAUSTED, None, nodes, _ms(t0))


def poset_dimension(d: Orientation) -> tuple[int, LinearOrderFamily]:
    """Minimal number of linear extensions intersecting exactly to d.

    The input must be transitive.  All linear extensions are enumerated in
    lexicographic vertex-index order; per extension a bitmask records which
    incomparable pairs it orders low-to-high, duplicates are dropped, and
    family size t = 1, 2, ... is tried until some t masks cover both
    directions of every incomparable pair.  The returned realizer is
    re-verified by intersection equality.
    """
    if not is_transitive(d):
        raise ValueError("orientation is not transitive")
    n = d.base.n
    labs = d.base.labels
    if n == 0:
        return 1, LinearOrderFamily(((),))
    adj = d.base.adj
    out = d.out
    inn = [0] * n
    for i in range(n):
        for j in iter_bits(out[i]):
            inn[j] |= 1 << i

    exts: list[tuple[int, ...]] = []
    acc: list[int] = []

    def gen(placed: int) -> None:
        if len(acc) == n:
            exts.append(tuple(acc))
            return
        for v in range(n):
            if placed >> v & 1 or inn[v] & ~placed:
                continue
            acc.append(v)
            gen(placed | 1 << v)
            acc.pop()

    gen(0)

    incomp = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not adj[i] >> j & 1
    ]
    if not incomp:
        return 1, LinearOrderFamily((tuple(labs[v] for v in exts[0]),))

    pairs = len(incomp)
    full = (1 << pairs) - 1
    reps: dict[int, tuple[int, ...]] = {}
    masks: list[int] = []
    for e in exts:
        pos = [0] * n
        for p, v in enumerate(e):
            pos[v] = p
        mask = 0
        for t, (i, j) in enumerate(incomp):
            if pos[i] < pos[j]:
                mask |= 1 << t
        if mask not in reps:
            reps[mask] = e
            masks.append(mask)
    mask_set = set(masks)

    choice: list[int] = []

    def cover(set_or: int, clr_or: int, slots: int) -> bool:
        if set_or == full and clr_or == full:
            return True
        if slots == 0:
            return False
        need_set = full & ~set_or
        need_clr = full & ~clr_or
        if slots == 1:
            if need_set & need_clr:
                return False
            if need_set | need_clr == full:
                # every bit constrained one way: the final mask is forced
                if need_set in mask_set and need_set not in choice:
                    choice.append(need_set)
                    return True
                return False
            for m in masks:
                if m & need_set == need_set and not m & need_clr and m not in choice:
                    choice.append(m)
                    return True
            return False
        missing = need_set | need_clr
        b = missing & -missing
        want_set = bool(need_set & b)
        for m in masks:
            if bool(m & b) != want_set or m in choice:
                continue
            choice.append(m)
            if cover(set_or | m, clr_or | (full & ~m), slots - 1):
                return True
            choice.pop()
        return False

    for t in range(2, len(masks) + 1):
        choice.clear()
        if cover(0, 0, t):
            orders = [reps[m] for m in choice]
            positions = []
            for e in orders:
                pos = [0] * n
                for p, v in enumerate(e):
                    pos[v] = p
                positions.append(pos)
            for i in range(n):
                for j in range(n):
                    if i == j:
                        continue
                    before_all = all(pos[i] < pos[j] for pos in positions)
                    if before_all != bool(out[i] >> j & 1):
                        raise VerificationError("realizer intersection mismatch")
            fam = LinearOrderFamily(
                tuple(tuple(labs[v] for v in e) for e in orders)
            )
            return t, fam
    raise VerificationError("no realizer found among all linear extensions")


def find_permutational_representation(g: Graph, k: int) -> Certificate:
    """Search for k vertex permutations whose concatenation represents g.

    Such a family exists exactly when g has a transitive orientation whose
    poset dimension is at most k; the dimension does not depend on which
    transitive orientation is chosen, so a too-large dimension means honest
    exhaustion.  A realizer smaller than k is padded by repeating its own
    orders from the start, which leaves the intersection unchanged.
    """
    if k <= 0:
        raise ValueError("k must be a positive integer")
    t0 = time.perf_counter()
    query = f"permutational-representation n={g.n} m={g.edge_count} k={k}"
    base = find_transitive_orientation(g)
    nodes = base.nodes_explored
    if base.status != WITNESS_FOUND:
        return Certificate(query, EXHAUSTED, None, nodes, _ms(t0))
    assert isinstance(base.witness, Orientation)
    dim, realizer = poset_dimension(base.witness)
    if dim > k:
        return Certificate(query, EXHAUSTED, None, nodes, _ms(t0))
    orders = list(realizer.orders)
    i = 0
    while len(orders) < k:
        orders.append(realizer.orders[i % dim])
        i += 1
    fam = LinearOrderFamily(tuple(orders))
    if not represents(fam.word(), g):
        raise VerificationError("permutational representation failed verification")
    return Certificate(query, WITNESS_FOUND, fam, nodes, _ms(t0))
