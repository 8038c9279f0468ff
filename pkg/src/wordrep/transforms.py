"""Constructive word builders for graph operations and families.

Every builder re-derives the graph of its output and compares it against an
independently constructed target; a mismatch is a hard failure.  The two
operations whose constructions are attempt-based (add_path, combine) fall
back to a bounded exhaustive search whose success is guaranteed by the
existence results they implement; fallback invocations are counted in
FALLBACK_COUNTS.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import VerificationError
from .graphs import Graph, build_family, validate_label
from .search import (
    WITNESS_FOUND,
    LinearOrderFamily,
    find_k_uniform_representant,
)
from .words import (
    Word,
    alternates,
    cyclic_shift,
    derive_graph,
    extend_uniform,
    represents,
    uniformity,
)

FALLBACK_COUNTS: Counter[str] = Counter()


def fallback_counts() -> dict[str, int]:
    """Snapshot of how many times each operation resorted to full search."""
    return dict(FALLBACK_COUNTS)


def reset_fallback_counts() -> None:
    FALLBACK_COUNTS.clear()


@dataclass(frozen=True)
class CombineMode:
    """How two disjoint represented graphs are joined.

    kind is "connect-edge" (add an edge between x and y) or "glue-vertex"
    (identify x and y into one new vertex); merged_label names the glued
    vertex and is required exactly in the glue case.
    """

    kind: str
    merged_label: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("connect-edge", "glue-vertex"):
            raise ValueError(f"unknown combine mode {self.kind!r}")
        if self.kind == "glue-vertex" and self.merged_label is None:
            raise ValueError("glue-vertex mode needs a merged_label")
        if self.kind == "connect-edge" and self.merged_label is not None:
            raise ValueError("connect-edge mode takes no merged_label")


@dataclass(frozen=True)
class RepNumberInput:
    """Representation numbers and vertex counts of two graphs to be joined."""

    k1: int
    k2: int
    n1: int
    n2: int
    mode: CombineMode | None = None

    def __post_init__(self) -> None:
        for name, value in (("k1", self.k1), ("k2", self.k2),
                            ("n1", self.n1), ("n2", self.n2)):
            if value < 1:
                raise ValueError(f"{name} must be at least 1, got {value}")
        if self.n1 == 1 and self.k1 != 1:
            raise ValueError("a single-vertex graph has representation number 1")
        if self.n2 == 1 and self.k2 != 1:
            raise ValueError("a single-vertex graph has representation number 1")


@dataclass(frozen=True)
class CombinedRepNumbers:
    """Representation numbers of the edge-connected and glued results."""

    connect_edge: int
    glue_vertex: int


def _require_uniform(w: Word, minimum: int, what: str) -> int:
    prof = uniformity(w)
    if prof.k is None:
        raise ValueError(f"{what} must be uniform")
    if prof.k < minimum:
        raise ValueError(f"{what} must be at least {minimum}-uniform, got k={prof.k}")
    return prof.k


def _verified(result: Word, target: Graph, what: str) -> Word:
    if not represents(result, target):
        raise VerificationError(f"{what} produced a word that fails verification")
    return result


def _with_edge(g: Graph, extra_vertex: str | None, extra_edges) -> Graph:
    labels = list(g.labels)
    if extra_vertex is not None:
        labels.append(extra_vertex)
    return Graph(labels, list(g.edges()) + list(extra_edges))


def add_leaf(w: Word, x: str, y: str) -> Word:
    """Extend a k-uniform word (k >= 2) by a pendant vertex y hanging off x.

    y is wrapped immediately around the first occurrence of x and placed just
    before each of its third through last occurrences: the y-y contact next
    to the first x breaks alternation with every letter except x, while the
    x,y letters themselves interleave perfectly.
    """
    k = _require_uniform(w, 2, "add_leaf input")
    if x not in w.alphabet:
        raise ValueError(f"vertex {x!r} does not occur in the word")
    if y in w.alphabet:
        raise ValueError(f"label {y!r} is already taken")
    validate_label(y)
    pos = w.occurrences(x)
    letters: list[str] = []
    for i, t in enumerate(w.letters):
        if i == pos[0]:
            letters += [y, x, y]
        elif t == x and i != pos[1]:
            letters += [y, x]
        else:
            letters.append(t)
    target = _with_edge(derive_graph(w), y, [(x, y)])
    return _verified(Word(letters), target, "add_leaf")


def equalize_uniformity(w1: Word, w2: Word, minimum: int = 2) -> tuple[Word, Word]:
    """Lift both uniform words to the same k = max(k1, k2, minimum)."""
    k1 = _require_uniform(w1, 1, "first word")
    k2 = _require_uniform(w2, 1, "second word")
    k = max(k1, k2, minimum)
    for _ in range(k - k1):
        w1 = extend_uniform(w1)
    for _ in range(k - k2):
        w2 = extend_uniform(w2)
    return w1, w2


def _fresh_label(taken: set[str], stem: str) -> str:
    label = stem
    while label in taken:
        label += "'"
    return label


def _blocks_without(w: Word, sep: str) -> list[list[str]]:
    blocks: list[list[str]] = [[]]
    for t in w.letters:
        if t == sep:
            blocks.append([])
        else:
            blocks[-1].append(t)
    return blocks


def _glue_words(w1: Word, w2: Word, x: str, y: str, z: str, k: int) -> Word:
    # rotate w1 to end on its last x and w2 to start on its first y, then
    # interleave the x-free blocks A1..Ak and y-free blocks B1..Bk as
    # A1 z (A2 B1) z (A3 B2) z ... (Ak B(k-1)) z Bk, with z standing in for
    # both x and y
    w1r = cyclic_shift(w1, w1.occurrences(x)[-1] + 1)
    w2r = cyclic_shift(w2, w2.occurrences(y)[0])
    a = _blocks_without(w1r, x)[:-1]  # trailing empty block after the last x
    b = _blocks_without(w2r, y)[1:]  # leading empty block before the first y
    letters: list[str] = list(a[0])
    for i in range(1, k):
        letters.append(z)
        letters += a[i]
        letters += b[i - 1]
    letters.append(z)
    letters += b[k - 1]
    return Word(letters)


def combine(w1: Word, w2: Word, x: str, y: str, mode: CombineMode) -> Word:
    """Join two uniformly represented graphs by an edge or at a vertex.

    Both words must be k-uniform for one common k >= 2 (equalize_uniformity
    lifts mismatched inputs) over disjoint alphabets, with x in the first and
    y in the second.  connect-edge keeps all vertices and adds the edge
    (x, y); glue-vertex merges x and y into the fresh vertex mode.merged_label.
    The deterministic interleaving is post-verified; on failure the target is
    handed to the exhaustive k-uniform search, whose success is guaranteed.
    """
    k1 = _require_uniform(w1, 2, "first word")
    k2 = _require_uniform(w2, 2, "second word")
    if k1 != k2:
        raise ValueError(f"words must share one uniformity, got k={k1} and k={k2}")
    k = k1
    overlap = set(w1.alphabet) & set(w2.alphabet)
    if overlap:
        raise ValueError(f"alphabets overlap on {sorted(overlap)}")
    if x not in w1.alphabet:
        raise ValueError(f"vertex {x!r} does not occur in the first word")
    if y not in w2.alphabet:
        raise ValueError(f"vertex {y!r} does not occur in the second word")

    g1 = derive_graph(w1)
    g2 = derive_graph(w2)

    if mode.kind == "connect-edge":
        labels = list(g1.labels) + list(g2.labels)
        edges = list(g1.edges()) + list(g2.edges()) + [(x, y)]
        target = Graph(labels, edges)
        tmp = _fresh_label(set(w1.alphabet) | set(w2.alphabet), "t")
        attempt = _glue_words(add_leaf(w1, x, tmp), w2, tmp, y, y, k)
    else:
        z = mode.merged_label
        assert z is not None
        kept = (set(w1.alphabet) - {x}) | (set(w2.alphabet) - {y})
        if z in kept:
            raise ValueError(f"merged label {z!r} collides with a kept vertex")
        validate_label(z)
        labels = [t for t in g1.labels if t != x] + [z]
        labels += [t for t in g2.labels if t != y]
        edges = [e for e in g1.edges() if x not in e]
        edges += [e for e in g2.edges() if y not in e]
        edges += [(u, z) for u in g1.neighbors(x)]
        edges += [(z, v) for v in g2.neighbors(y)]
        target = Graph(labels, edges)
        attempt = _glue_words(w1, w2, x, y, z, k)

    if represents(attempt, target):
        return attempt
    FALLBACK_COUNTS["combine"] += 1
    cert = find_k_uniform_representant(target, k)
    if cert.status != WITNESS_FOUND:
        raise VerificationError(
            "combine fallback exhausted a space that must contain a witness"
        )
    assert isinstance(cert.witness, Word)
    return cert.witness


def combined_rep_number(inp: RepNumberInput) -> CombinedRepNumbers:
    """Representation numbers after connecting by an edge / gluing at a vertex.

    With k = max(k1, k2): two single vertices give (1, 1); when exactly one
    side is a single vertex the glued graph keeps R = k while the edge-joined
    graph gets max(k, 2); when both sides have at least two vertices both
    results get max(k, 2).
    """
    k = max(inp.k1, inp.k2)
    if inp.n1 == 1 and inp.n2 == 1:
        return CombinedRepNumbers(connect_edge=1, glue_vertex=1)
    if min(inp.n1, inp.n2) == 1:
        return CombinedRepNumbers(connect_edge=max(k, 2), glue_vertex=k)
    return CombinedRepNumbers(connect_edge=max(k, 2), glue_vertex=max(k, 2))


def substitute_module(w: Word, x: str, module_perms: LinearOrderFamily) -> Word:
    """Replace vertex x by a permutationally represented module.

    The i-th occurrence of x in the k-uniform word w is replaced by the i-th
    module permutation (the family is repeated cyclically when it is shorter
    than k, which leaves its intersection unchanged).  Module vertices inherit
    x's outside neighborhood; inside the module the permutations decide.
    """
    k = _require_uniform(w, 1, "substitute_module input")
    if x not in w.alphabet:
        raise ValueError(f"vertex {x!r} does not occur in the word")
    perms = module_perms.orders
    if len(perms) > k:
        raise ValueError(
            f"module uses {len(perms)} permutations but the word is only "
            f"{k}-uniform; extend the word first"
        )
    module_labels = perms[0]
    collision = set(module_labels) & (set(w.alphabet) - {x})
    if collision:
        raise ValueError(f"module labels collide with the host word: {sorted(collision)}")

    module_word = module_perms.word()
    module_graph = derive_graph(module_word)

    host = derive_graph(w)
    labels: list[str] = []
    for t in host.labels:
        if t == x:
            labels.extend(module_labels)
        else:
            labels.append(t)
    edges = [e for e in host.edges() if x not in e]
    edges += list(module_graph.edges())
    edges += [(m, u) for u in host.neighbors(x) for m in module_labels]
    target = Graph(labels, edges)

    occ = {p: i for i, p in enumerate(w.occurrences(x))}
    letters: list[str] = []
    for i, t in enumerate(w.letters):
        if i in occ:
            letters.extend(perms[occ[i] % len(perms)])
        else:
            letters.append(t)
    return _verified(Word(letters), target, "substitute_module")


def ladder_word(n: int) -> Word:
    """The inductive 2-uniform representant of the ladder with n rungs.

    Start from 1 1' 1 1'; to grow from i to i+1 rungs, replace the factor
    i' i by (i+1)' i' (i+1) (i+1)' i (i+1) and reverse the whole word.
    """
    if n < 1:
        raise ValueError(f"ladder size must be at least 1, got {n}")
    letters = ["1", "1'", "1", "1'"]
    for i in range(1, n):
        a, ap = str(i), str(i) + "'"
        b, bp = str(i + 1), str(i + 1) + "'"
        at = next(
            p
            for p in range(len(letters) - 1)
            if letters[p] == ap and letters[p + 1] == a
        )
        letters[at : at + 2] = [bp, ap, b, bp, a, b]
        letters.reverse()
    return _verified(Word(letters), build_family("ladder", n), "ladder_word")


def crown_perm_word(k: int) -> Word:
    """The permutational 2k-letter-per-block representant of the crown graph.

    For m = k down to 1 the block lists the unprimed vertices except m in
    ascending order, then m' m, then the primed vertices except m' in
    descending order.  k = 1 keeps the special 2-uniform word 1 1' 1' 1 for
    the edgeless pair, which is not a permutation concatenation.
    """
    if k < 1:
        raise ValueError(f"crown size must be at least 1, got {k}")
    if k == 1:
        return _verified(
            Word(["1", "1'", "1'", "1"]), build_family("crown", 1), "crown_perm_word"
        )
    letters: list[str] = []
    for m in range(k, 0, -1):
        others = [i for i in range(1, k + 1) if i != m]
        letters += [str(i) for i in others]
        letters += [f"{m}'", str(m)]
        letters += [f"{i}'" for i in reversed(others)]
    return _verified(Word(letters), build_family("crown", k), "crown_perm_word")


def _check_tree(t: Graph) -> None:
    n = t.n
    if n == 0:
        raise ValueError("a tree must have at least one vertex")
    if t.edge_count != n - 1:
        raise ValueError("not a tree: edge count differs from vertex count - 1")
    seen = {t.labels[0]}
    frontier = [t.labels[0]]
    while frontier:
        u = frontier.pop()
        for v in t.neighbors(u):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    if len(seen) != n:
        raise ValueError("not a tree: the graph is disconnected")


def _tree_word_rooted(t: Graph, root: str) -> list[str]:
    letters = [root, root]
    placed = {root}
    queue = [root]
    while queue:
        x = queue.pop(0)
        for y in sorted(t.neighbors(x)):
            if y in placed:
                continue
            at = letters.index(x)
            letters[at : at + 1] = [y, x, y]
            placed.add(y)
            queue.append(y)
    return letters


def tree_word(t: Graph) -> Word:
    """A 2-uniform representant of a tree by repeated leaf insertion.

    Rooted at the lexicographically least label, the word starts as r r and
    each child y of an already placed vertex x (in breadth-first, label-sorted
    order) replaces the first occurrence of x by y x y.
    """
    _check_tree(t)
    return _verified(Word(_tree_word_rooted(t, min(t.labels))), t, "tree_word")


def cycle_word(n: int) -> Word:
    """A 2-uniform representant of the n-cycle.

    A path word gains the closing edge by swapping one adjacent letter pair.
    A swap of neighbouring positions only changes how the two letters swapped
    interleave, so it must swap occurrences of the cycle's endpoints 1 and n.
    Rooting the tree induction at vertex 2 leaves those occurrences adjacent
    at the front of the path word; the first candidate swap whose result
    verifies is returned.
    """
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    target = build_family("cycle", n)
    labels = [str(i) for i in range(1, n + 1)]
    path = Graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])
    base = _tree_word_rooted(path, labels[1])
    for p in range(len(base) - 1):
        if base[p] == base[p + 1]:
            continue
        cand = list(base)
        cand[p], cand[p + 1] = cand[p + 1], cand[p]
        w = Word(cand)
        if represents(w, target):
            return w
    raise VerificationError("no adjacent swap of the path word closes the cycle")


def cone_word(perms: LinearOrderFamily, apex: str) -> Word:
    """Insert an all-adjacent apex after each permutation of a family.

    The apex alternates with every letter (one occurrence per block on each
    side) and the blocks keep representing the base graph, so the result
    represents the base graph plus an apex.
    """
    validate_label(apex)
    if apex in perms.orders[0]:
        raise ValueError(f"apex label {apex!r} collides with the base alphabet")
    base = derive_graph(perms.word())
    target = _with_edge(base, apex, [(u, apex) for u in base.labels])
    letters: list[str] = []
    for p in perms.orders:
        letters += list(p)
        letters.append(apex)
    return _verified(Word(letters), target, "cone_word")


def add_path(w: Word, x: str, y: str, length: int) -> Word:
    """Join x and y through a fresh path with `length` edges (length >= 3).

    The internal vertices hang off x as a chain of pendant leaves; the final
    edge to y is then realized by re-inserting the last internal vertex's
    three copies in every position triple until the whole target verifies.
    If no re-insertion works, the target goes to the exhaustive 3-uniform
    search, which the underlying existence theorem guarantees to succeed.
    """
    k = _require_uniform(w, 3, "add_path input")
    if k != 3:
        raise ValueError(f"add_path needs a 3-uniform word, got k={k}")
    if length < 3:
        raise ValueError(f"path length must be at least 3, got {length}")
    if x not in w.alphabet or y not in w.alphabet:
        raise ValueError("both endpoints must occur in the word")
    if x == y:
        raise ValueError("endpoints must be distinct")

    taken = set(w.alphabet)
    internal: list[str] = []
    for i in range(1, length):
        lab = _fresh_label(taken, f"p{i}")
        taken.add(lab)
        internal.append(lab)

    host = derive_graph(w)
    chain = [x] + internal + [y]
    labels = list(host.labels) + internal
    edges = list(host.edges()) + [
        (chain[i], chain[i + 1]) for i in range(len(chain) - 1)
    ]
    target = Graph(labels, edges)

    grown = w
    anchor = x
    for lab in internal:
        grown = add_leaf(grown, anchor, lab)
        anchor = lab

    tail = internal[-1]
    kept = [t for t in grown.letters if t != tail]
    wanted = set(target.neighbors(tail))
    slots = len(kept)
    budget = 200_000
    for triple in combinations_with_replacement(range(slots + 1), 3):
        budget -= 1
        if budget < 0:
            break
        cand = list(kept)
        for offset, at in enumerate(sorted(triple)):
            cand.insert(at + offset, tail)
        word = Word(cand)
        ok = True
        for other in word.alphabet:
            if other == tail:
                continue
            if alternates(word, tail, other) != (other in wanted):
                ok = False
                break
        if ok:
            return _verified(word, target, "add_path")

    FALLBACK_COUNTS["add_path"] += 1
    cert = find_k_uniform_representant(target, 3)
    if cert.status != WITNESS_FOUND:
        raise VerificationError(
            "add_path fallback exhausted a space that must contain a witness"
        )
    assert isinstance(cert.witness, Word)
    return cert.witness
