"""Parking functions and canonical codes of functional graphs and rooted forests.

A functional graph (i -> f(i)) is a disjoint union of components, each a cycle
of rooted trees.  Codes are nested tuples:

* tree code: sorted tuple of child tree codes (a leaf is ``()``);
* component code: tree codes of the cycle nodes in cycle order, rotated to the
  lexicographically minimal rotation;
* graph code: sorted tuple of component codes.

A rooted-forest code is the sorted tuple of tree codes of its roots.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .words import Word

TreeCode = tuple
GraphCode = tuple
ForestCode = tuple


def is_parking(w: Sequence[int]) -> bool:
    return all(a <= i for i, a in enumerate(sorted(w), 1)) and all(a >= 1 for a in w)


def parking_normalize(w: Sequence[int]) -> tuple[bool, Word]:
    s = tuple(sorted(w))
    return is_parking(s), s


def is_nondecreasing(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def _children(f: Sequence[int]) -> dict[int, list[int]]:
    ch = defaultdict(list)
    for i, v in enumerate(f, 1):
        ch[v].append(i)
    return ch


def _cyclic_nodes(f: Sequence[int]) -> set[int]:
    n = len(f)
    on_cycle: set[int] = set()
    state = [0] * (n + 1)  # 0 new, 1 on stack, 2 done
    for s in range(1, n + 1):
        path = []
        a = s
        while state[a] == 0:
            state[a] = 1
            path.append(a)
            a = f[a - 1]
        if state[a] == 1:
            on_cycle.update(path[path.index(a):])
        for p in path:
            state[p] = 2
    return on_cycle


def _tree_code(v: int, children, skip: set[int]) -> TreeCode:
    return tuple(sorted(_tree_code(c, children, skip) for c in children[v] if c not in skip))


def _min_rotation(seq: tuple) -> tuple:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def graph_code(f: Sequence[int]) -> GraphCode:
    """Canonical code of the functional graph of f; equal iff isomorphic."""
    children = _children(f)
    cyc = _cyclic_nodes(f)
    seen: set[int] = set()
    comps = []
    for s in sorted(cyc):
        if s in seen:
            continue
        order = []
        a = s
        while a not in seen:
            seen.add(a)
            order.append(a)
            a = f[a - 1]
        codes = tuple(_tree_code(v, children, cyc) for v in order)
        comps.append(_min_rotation(codes))
    return tuple(sorted(comps))


parking_graph_canonical_code = graph_code


def tree_size(code: TreeCode) -> int:
    return 1 + sum(tree_size(c) for c in code)


def graph_size(code: GraphCode) -> int:
    return sum(tree_size(t) for comp in code for t in comp)


def is_connected_code(code: GraphCode) -> bool:
    return len(code) == 1


def graph_union(a: GraphCode, b: GraphCode) -> GraphCode:
    return tuple(sorted(a + b))


def graph_representative(code: GraphCode) -> Word:
    """A deterministic endofunction whose graph has the given code.

    Cycle nodes get the smallest labels, then tree nodes in breadth-first order.
    """
    n = graph_size(code)
    f = [0] * n
    label = 0
    pending = []
    for comp in code:
        first = label + 1
        k = len(comp)
        for i, tcode in enumerate(comp):
            label += 1
            f[label - 1] = first + (i + 1) % k
            pending.append((label, tcode))
    while pending:
        nxt = []
        for node, tcode in pending:
            for child in tcode:
                label += 1
                f[label - 1] = node
                nxt.append((label, child))
        pending = nxt
    return tuple(f)


def forest_code(p: Sequence[int]) -> ForestCode:
    """Rooted forest of a nondecreasing parking function (loops are the roots)."""
    children = _children(p)
    roots = [i for i, v in enumerate(p, 1) if v == i]
    if len(roots) != len(_cyclic_nodes(p)):
        raise ValueError(f"{tuple(p)} has cycles of length > 1; not a rooted forest")
    return tuple(sorted(_tree_code(r, children, set(roots)) for r in roots))


def forest_size(code: ForestCode) -> int:
    return sum(tree_size(t) for t in code)


def forest_representative(code: ForestCode) -> Word:
    """Breadth-first labelling, tree by tree; yields a nondecreasing parking function."""
    n = forest_size(code)
    f = [0] * n
    label = 0
    for tree in code:
        label += 1
        f[label - 1] = label
        pending = [(label, tree)]
        while pending:
            nxt = []
            for node, tcode in pending:
                for child in tcode:
                    label += 1
                    f[label - 1] = node
                    nxt.append((label, child))
            pending = nxt
    return tuple(f)
