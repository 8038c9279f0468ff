"""Immutable labelled graphs with bitset adjacency, built-in families, and text I/O.

Vertices are string labels kept in a fixed order; adjacency is one integer
bitmask per vertex.  All operations treat graphs as values: nothing mutates
an existing instance.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParseError


def validate_label(label: object) -> str:
    """Return the label if it is a valid vertex token.

    Labels are non-empty strings without whitespace.  '#' is rejected and the
    token '->' is reserved so labels survive the graph/orientation text formats.
    """
    if not isinstance(label, str):
        raise ValueError(f"label must be a string, got {type(label).__name__}")
    if not label:
        raise ValueError("empty label")
    if any(c.isspace() for c in label):
        raise ValueError(f"label {label!r} contains whitespace")
    if "#" in label:
        raise ValueError(f"label {label!r} contains '#'")
    if label == "->":
        raise ValueError("label '->' is reserved")
    return label


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph over string vertex labels."""

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        labs = tuple(validate_label(l) for l in labels)
        if len(set(labs)) != len(labs):
            seen: set[str] = set()
            dup = next(l for l in labs if l in seen or seen.add(l))
            raise ValueError(f"duplicate vertex label {dup!r}")
        index = {l: i for i, l in enumerate(labs)}
        adj = [0] * len(labs)
        for a, b in edges:
            for tok in (a, b):
                if tok not in index:
                    raise ValueError(f"edge endpoint {tok!r} is not a vertex")
            i, j = index[a], index[b]
            if i == j:
                raise ValueError(f"loop at {a!r} not allowed")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.labels = labs
        self.adj = tuple(adj)
        self._index = index

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex {label!r}") from None

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self.adj[self.index(a)] >> self.index(b) & 1)

    def degree(self, label: str) -> int:
        return self.adj[self.index(label)].bit_count()

    def neighbors(self, label: str) -> tuple[str, ...]:
        return tuple(self.labels[j] for j in iter_bits(self.adj[self.index(label)]))

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, ordered by vertex index."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1) << (i + 1)
            for j in iter_bits(row):
                out.append((self.labels[i], self.labels[j]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[i] == full ^ (1 << i) for i in range(self.n))

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        """New graph with labels replaced per mapping (missing keys keep their label)."""
        new = [mapping.get(l, l) for l in self.labels]
        return Graph(new, [(mapping.get(a, a), mapping.get(b, b)) for a, b in self.edges()])

    def __eq__(self, other: object) -> bool:
        # value equality: same vertex set and same edge set, label order ignored
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        mine = {frozenset(e) for e in self.edges()}
        theirs = {frozenset(e) for e in other.edges()}
        return mine == theirs

    def __hash__(self) -> int:
        return hash((frozenset(self.labels), frozenset(frozenset(e) for e in self.edges())))

    def __repr__(self) -> str:
        return f"Graph({self.n} vertices, {self.edge_count} edges)"


def _canon(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def _primed(n: int) -> list[str]:
    return [f"{i}'" for i in range(1, n + 1)]


# Fixed labelling: outer cycle 1..5, spokes i-(i+5), inner pentagram on 6..10.
PETERSEN_EDGES: tuple[tuple[str, str], ...] = (
    ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5"),
    ("1", "6"), ("2", "7"), ("3", "8"), ("4", "9"), ("5", "10"),
    ("6", "8"), ("8", "10"), ("7", "10"), ("7", "9"), ("6", "9"),
)

FAMILIES = ("complete", "path", "cycle", "prism", "ladder", "crown", "petersen")


def build_family(family: str, size: int) -> Graph:
    """Build a named graph family member with canonical labels.

    complete/path/cycle use labels 1..n; prism, ladder and crown use 1..n plus
    1'..n'.  The prism is two n-cycles joined by the matching (i, i'); the
    ladder has rails 1-..-n and 1'-..-n' with rungs (i, i'); the crown is the
    complete bipartite graph minus the perfect matching (i, i').
    """
    fam = family.lower()
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
    if fam == "petersen":
        if size != 10:
            raise ValueError("petersen family has exactly 10 vertices")
        return Graph(_canon(10), PETERSEN_EDGES)
    n = size
    if fam in ("complete", "path", "ladder", "crown") and n < 1:
        raise ValueError(f"{fam} family needs size >= 1, got {n}")
    if fam == "cycle" and n < 3:
        raise ValueError(f"cycle family needs size >= 3, got {n}")
    if fam == "prism" and n < 3:
        raise ValueError(f"prism family needs size >= 3, got {n}")

    if fam == "complete":
        labs = _canon(n)
        return Graph(labs, combinations(labs, 2))
    if fam == "path":
        labs = _canon(n)
        return Graph(labs, zip(labs, labs[1:]))
    if fam == "cycle":
        labs = _canon(n)
        return Graph(labs, list(zip(labs, labs[1:])) + [(labs[-1], labs[0])])
    plain, primed = _canon(n), _primed(n)
    rungs = list(zip(plain, primed))
    if fam == "prism":
        ring1 = list(zip(plain, plain[1:])) + [(plain[-1], plain[0])]
        ring2 = list(zip(primed, primed[1:])) + [(primed[-1], primed[0])]
        return Graph(plain + primed, ring1 + ring2 + rungs)
    if fam == "ladder":
        rail1 = list(zip(plain, plain[1:]))
        rail2 = list(zip(primed, primed[1:]))
        return Graph(plain + primed, rail1 + rail2 + rungs)
    # crown: complete bipartite minus the matching
    cross = [(plain[i], primed[j]) for i in range(n) for j in range(n) if i != j]
    return Graph(plain + primed, cross)


def add_apex(g: Graph, label: str) -> Graph:
    """Add a new vertex adjacent to every existing vertex."""
    validate_label(label)
    if g.has_vertex(label):
        raise ValueError(f"vertex {label!r} already present")
    return Graph(g.labels + (label,), g.edges() + [(label, v) for v in g.labels])


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Subgraph induced by the given vertices, keeping g's vertex order."""
    keep_set = set(keep)
    for v in keep_set:
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v!r}")
    labs = [l for l in g.labels if l in keep_set]
    edges = [(a, b) for a, b in g.edges() if a in keep_set and b in keep_set]
    return Graph(labs, edges)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking with degree pruning.

    Exponential in the worst case; intended for graphs of up to ~10 vertices.
    """
    n = g1.n
    if n != g2.n or g1.edge_count != g2.edge_count:
        return False
    deg1 = [m.bit_count() for m in g1.adj]
    deg2 = [m.bit_count() for m in g2.adj]
    if sorted(deg1) != sorted(deg2):
        return False
    if n == 0:
        return True
    # map vertices in descending-degree order; high-degree first fails fastest
    order = sorted(range(n), key=lambda i: -deg1[i])
    image = [-1] * n

    def extend(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or deg2[w] != deg1[v]:
                continue
            ok = True
            for prev in order[:pos]:
                if (g1.adj[v] >> prev & 1) != (g2.adj[w] >> image[prev] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                if extend(pos + 1, used | 1 << w):
                    return True
                image[v] = -1
        return False

    return extend(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by branch and bound.

    A greedy clique gives the lower bound; colourings are searched with the
    first-fit symmetry break.  Practical for graphs of up to ~12 vertices.
    """
    n = g.n
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    adj = g.adj
    order = sorted(range(n), key=lambda i: -adj[i].bit_count())
    clique_mask = 0
    for v in order:
        if adj[v] & clique_mask == clique_mask:
            clique_mask |= 1 << v
    lower = clique_mask.bit_count()

    color = [-1] * n

    def colorable(pos: int, used: int, limit: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        # allow at most one brand-new colour per step; kills colour permutations
        top = min(used + 1, limit)
        for c in range(top):
            if all(color[u] != c for u in iter_bits(adj[v])):
                color[v] = c
                if colorable(pos + 1, max(used, c + 1), limit):
                    return True
                color[v] = -1
        return False

    for c in range(lower, n + 1):
        for i in range(n):
            color[i] = -1
        if colorable(0, 0, c):
            return c
    return n


def parse_graph(text: str) -> Graph:
    """Parse the graph text format.

    Format: optional leading header ``vertices: tok tok ...``, then one edge
    per line as two whitespace-separated tokens.  '#' starts a comment.
    Isolated vertices exist only if listed in the header.
    """
    header: list[str] | None = None
    order: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate vertices header")
            if edges:
                raise ParseError(f"line {lineno}: vertices header must precede edges")
            toks = line[len("vertices:"):].split()
            if len(set(toks)) != len(toks):
                raise ParseError(f"line {lineno}: duplicate vertex in header")
            try:
                header = [validate_label(t) for t in toks]
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected two vertex tokens, got {len(toks)}")
        a, b = toks
        if a == b:
            raise ParseError(f"line {lineno}: loop edge at {a!r}")
        for tok in (a, b):
            if header is not None:
                if tok not in header:
                    raise ParseError(f"line {lineno}: vertex {tok!r} not in header")
            elif tok not in seen:
                try:
                    validate_label(tok)
                except ValueError as exc:
                    raise ParseError(f"line {lineno}: {exc}") from None
                seen.add(tok)
                order.append(tok)
        edges.append((a, b))
    labels = header if header is not None else order
    return Graph(labels, edges)


def format_graph(g: Graph) -> str:
    """Serialize a graph to its text format (round-trips through parse_graph)."""
    lines = ["vertices: " + " ".join(g.labels)]
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"
