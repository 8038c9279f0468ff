"""Acyclic orientations, shortcut detection, and semi-transitivity decisions.

An orientation is semi-transitive when it is acyclic and contains no
shortcut: a directed path v1 -> ... -> vk (k >= 4) together with the arc
v1 -> vk such that some pair of path vertices is non-adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError
from .graphs import Graph, iter_bits


class Orientation:
    """A direction for every edge of a base graph.

    Arcs are stored as out-neighbor bitmasks indexed like the base graph's
    labels.  Every base edge must be directed exactly one way.
    """

    __slots__ = ("base", "out")

    def __init__(self, base: Graph, arcs: Iterable[tuple[str, str]]):
        n = base.n
        out = [0] * n
        for u, v in arcs:
            i, j = base.index(u), base.index(v)
            if not base.adj[i] >> j & 1:
                raise ValueError(f"({u}, {v}) is not an edge of the base graph")
            if (out[i] >> j | out[j] >> i) & 1:
                raise ValueError(f"edge ({u}, {v}) directed more than once")
            out[i] |= 1 << j
        for i in range(n):
            undirected = base.adj[i] & ~out[i]
            for j in iter_bits(undirected):
                if not out[j] >> i & 1:
                    raise ValueError(
                        f"edge ({base.labels[i]}, {base.labels[j]}) left undirected"
                    )
        self.base = base
        self.out = tuple(out)

    def has_arc(self, u: str, v: str) -> bool:
        return bool(self.out[self.base.index(u)] >> self.base.index(v) & 1)

    def arcs(self) -> list[tuple[str, str]]:
        labs = self.base.labels
        out = []
        for i in range(self.base.n):
            for j in iter_bits(self.out[i]):
                out.append((labs[i], labs[j]))
        return out

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        if self.base != other.base:
            return False
        return set(self.arcs()) == set(other.arcs())

    def __hash__(self) -> int:
        return hash((self.base, frozenset(self.arcs())))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}->{v}" for u, v in self.arcs())
        return f"Orientation({body})"


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path plus its closing arc and one non-adjacent vertex pair.

    path lists at least four vertices; consecutive ones are joined by arcs,
    the arc path[0] -> path[-1] is present, and missing_pair names two path
    vertices that are non-adjacent in the base graph.
    """

    path: tuple[str, ...]
    missing_pair: tuple[str, str]


def is_shortcut_witness(d: Orientation, w: ShortcutWitness) -> bool:
    """Re-check a witness from scratch against the orientation."""
    p = w.path
    if len(p) < 4 or len(set(p)) != len(p):
        return False
    if any(not d.has_arc(p[i], p[i + 1]) for i in range(len(p) - 1)):
        return False
    if not d.has_arc(p[0], p[-1]):
        return False
    a, b = w.missing_pair
    if a not in p or b not in p or a == b:
        return False
    return not d.base.has_edge(a, b)


def directed_cycle(d: Orientation) -> tuple[str, ...] | None:
    """A directed cycle as a label sequence with first == last, or None."""
    n = d.base.n
    color = [0] * n  # 0 unseen, 1 on the current path, 2 finished
    path: list[int] = []

    def visit(i: int) -> list[int] | None:
        color[i] = 1
        path.append(i)
        for j in iter_bits(d.out[i]):
            if color[j] == 1:
                return path[path.index(j) :] + [j]
            if color[j] == 0:
                found = visit(j)
                if found is not None:
                    return found
        color[i] = 2
        path.pop()
        return None

    for s in range(n):
        if color[s] == 0:
            found = visit(s)
            if found is not None:
                return tuple(d.base.labels[i] for i in found)
    return None


def is_acyclic(d: Orientation) -> bool:
    return directed_cycle(d) is None


def is_transitive(d: Orientation) -> bool:
    """True when u->v and v->t always imply the arc u->t."""
    for u in range(d.base.n):
        for v in iter_bits(d.out[u]):
            if d.out[v] & ~d.out[u]:
                return False
    return True


def orient_by_order(g: Graph, order: Sequence[str]) -> Orientation:
    """Direct every edge from the earlier vertex to the later one in `order`.

    The result is acyclic by construction; `order` must be a permutation of
    the vertex set.
    """
    if len(order) != g.n or {g.index(t) for t in order} != set(range(g.n)):
        raise ValueError("order is not a permutation of the vertex set")
    pos = {t: p for p, t in enumerate(order)}
    arcs = [(u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges()]
    return Orientation(g, arcs)


def _topological_order(d: Orientation) -> list[int]:
    n = d.base.n
    indeg = [0] * n
    for i in range(n):
        for j in iter_bits(d.out[i]):
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    out_order: list[int] = []
    while ready:
        i = ready.pop()
        out_order.append(i)
        for j in iter_bits(d.out[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    return out_order


def _is_clique(adj: Sequence[int], mask: int) -> bool:
    for a in iter_bits(mask):
        if mask & ~adj[a] & ~(1 << a):
            return False
    return True


def find_shortcut(d: Orientation) -> ShortcutWitness | None:
    """Search the orientation for a shortcut.

    Cyclic input is rejected, quoting a directed cycle.  Arcs are scanned in
    index order and each candidate arc u->v is checked by DFS over the simple
    directed u-v paths; the first path carrying a non-adjacent vertex pair is
    returned.  Arcs whose reachability interval is a clique are skipped, as
    no path between their ends can contain a missing pair.
    """
    cyc = directed_cycle(d)
    if cyc is not None:
        raise ValueError("orientation is cyclic: " + " -> ".join(cyc))
    n = d.base.n
    adj = d.base.adj
    out = d.out
    labs = d.base.labels

    topo = _topological_order(d)
    desc = [0] * n
    for i in reversed(topo):
        m = out[i]
        for j in iter_bits(out[i]):
            m |= desc[j]
        desc[i] = m
    inn = [0] * n
    for i in range(n):
        for j in iter_bits(out[i]):
            inn[j] |= 1 << i
    anc = [0] * n
    for j in topo:
        m = inn[j]
        for i in iter_bits(inn[j]):
            m |= anc[i]
        anc[j] = m

    clique_cache: dict[int, bool] = {}

    def clique(mask: int) -> bool:
        got = clique_cache.get(mask)
        if got is None:
            got = clique_cache[mask] = _is_clique(adj, mask)
        return got

    def first_missing(verts: Sequence[int]) -> tuple[int, int] | None:
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                if not adj[verts[a]] >> verts[b] & 1:
                    return verts[a], verts[b]
        return None

    for u in range(n):
        for v in iter_bits(out[u]):
            inter = desc[u] & anc[v]
            if inter.bit_count() < 2:
                continue
            if clique(inter | 1 << u | 1 << v):
                continue
            path = [u]
            on_path = 1 << u

            def walk(x: int) -> ShortcutWitness | None:
                nonlocal on_path
                for y in iter_bits(out[x] & (inter | 1 << v) & ~on_path):
                    if y == v:
                        if len(path) >= 3:
                            pair = first_missing(path + [v])
                            if pair is not None:
                                return ShortcutWitness(
                                    tuple(labs[t] for t in path) + (labs[v],),
                                    (labs[pair[0]], labs[pair[1]]),
                                )
                    else:
                        path.append(y)
                        on_path |= 1 << y
                        hit = walk(y)
                        path.pop()
                        on_path &= ~(1 << y)
                        if hit is not None:
                            return hit
                return None

            found = walk(u)
            if found is not None:
                return found
    return None


def is_semi_transitive(d: Orientation) -> bool:
    """True when the orientation is acyclic and has no shortcut."""
    if not is_acyclic(d):
        return False
    return find_shortcut(d) is None


def exists_semi_transitive(g: Graph) -> Orientation | None:
    """A semi-transitive orientation of g, or None when no orientation works.

    Vertex orders are enumerated (every acyclic orientation arises from one);
    a prefix dies as soon as the arcs into the newest vertex complete a
    shortcut.  The witness comes from the lexicographically least successful
    order, by placing candidate vertices in index order.  For n <= 7 a
    seen-set over (placed vertices, arc directions) skips replayed states.
    """
    n = g.n
    adj = g.adj
    labs = g.labels
    if n == 0:
        return Orientation(g, [])

    edge_list = [(i, j) for i in range(n) for j in iter_bits(adj[i]) if i < j]
    use_memo = n <= 7
    dead: set[tuple[int, int]] = set()

    out = [0] * n
    inn = [0] * n
    placed = 0
    order: list[int] = []

    def reach(masks: list[int], start: int, allowed: int) -> int:
        seen = 0
        frontier = masks[start] & allowed
        while frontier:
            seen |= frontier
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= masks[x] & allowed
            frontier = nxt & ~seen
        return seen

    def completes_shortcut(w: int) -> bool:
        # arcs into w were just added; any new shortcut must end at w
        anc_w = reach(inn, w, placed)
        scope = placed | 1 << w
        for u in iter_bits(adj[w] & placed):
            cand = reach(out, u, placed) & anc_w & ~(1 << u)
            if cand.bit_count() < 2:
                continue
            if _is_clique(adj, cand | 1 << u | 1 << w):
                continue
            path = [u]
            on_path = 1 << u

            def walk(x: int) -> bool:
                nonlocal on_path
                for y in iter_bits(out[x] & (cand | 1 << w) & scope & ~on_path):
                    if y == w:
                        if len(path) >= 3:
                            verts = path + [w]
                            for a in range(len(verts)):
                                for b in range(a + 1, len(verts)):
                                    if not adj[verts[a]] >> verts[b] & 1:
                                        return True
                    else:
                        path.append(y)
                        on_path |= 1 << y
                        hit = walk(y)
                        path.pop()
                        on_path &= ~(1 << y)
                        if hit:
                            return True
                return False

            if walk(u):
                return True
        return False

    def state_key() -> tuple[int, int]:
        bits = 0
        for e, (i, j) in enumerate(edge_list):
            if placed >> i & placed >> j & 1 and out[i] >> j & 1:
                bits |= 1 << e
        return placed, bits

    def place(depth: int) -> bool:
        nonlocal placed
        if depth == n:
            return True
        if use_memo:
            key = state_key()
            if key in dead:
                return False
        for w in range(n):
            if placed >> w & 1:
                continue
            tails = adj[w] & placed
            for u in iter_bits(tails):
                out[u] |= 1 << w
            inn[w] = tails
            bad = completes_shortcut(w)
            placed |= 1 << w
            if not bad:
                order.append(w)
                if place(depth + 1):
                    return True
                order.pop()
            placed &= ~(1 << w)
            inn[w] = 0
            for u in iter_bits(tails):
                out[u] &= ~(1 << w)
        if use_memo:
            dead.add(key)
        return False

    if not place(0):
        return None
    return orient_by_order(g, [labs[i] for i in order])


def parse_orientation(text: str) -> Orientation:
    """Parse orientation text: the graph format with `u -> v` arc lines."""
    header: list[str] | None = None
    arcs: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate vertices header")
            if arcs:
                raise ParseError(f"line {lineno}: vertices header must come first")
            header = line[len("vertices:") :].split()
            continue
        toks = line.split()
        if len(toks) != 3 or toks[1] != "->":
            raise ParseError(f"line {lineno}: expected `u -> v`, got {line!r}")
        u, _, v = toks
        if u == v:
            raise ParseError(f"line {lineno}: loop at {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: edge ({u}, {v}) directed more than once")
        seen.add(key)
        arcs.append((u, v))

    labels: list[str] = []
    known: set[str] = set()
    if header is not None:
        for t in header:
            if t in known:
                raise ParseError(f"duplicate vertex {t!r} in header")
            known.add(t)
            labels.append(t)
    for u, v in arcs:
        for t in (u, v):
            if t not in known:
                if header is not None:
                    raise ParseError(f"arc vertex {t!r} not in vertices header")
                known.add(t)
                labels.append(t)

    base = Graph(labels, arcs)
    return Orientation(base, arcs)


def format_orientation(d: Orientation) -> str:
    """Serialize an orientation (round-trips through parse_orientation)."""
    lines = ["vertices: " + " ".join(d.base.labels)]
    lines.extend(f"{u} -> {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"
