"""Undirected simple graphs in compressed sparse row form.

Edge lists are read in the SNAP style (two labels per line, ``#`` comments),
then cleaned: self-loops dropped, duplicate and reciprocal edges collapsed,
isolated nodes removed.  Internal node indices are dense in ``[0, n)`` and
follow the sorted order of the original labels, so rebuilding a graph from
its own labelled edge set reproduces it exactly.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import EdgeListParseError, EmptyGraphError

EdgeList = list  # list[tuple[label, label]] in file order


def _label(token: str):
    return int(token) if token.isdigit() else token


def parse_edge_list(text) -> list[tuple]:
    """Read ``(label, label)`` pairs from SNAP-style text.

    ``text`` may be a string or any iterable of lines (an open file works).
    Self-loops and duplicates are kept here; ``build_graph`` removes them.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, raw.rstrip("\n"))
        edges.append((_label(tokens[0]), _label(tokens[1])))
    return edges


def _sort_key(label):
    # ints before strings, each group in natural order
    return (1, label) if isinstance(label, str) else (0, label)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable unweighted undirected simple graph.

    Attributes
    ----------
    indptr : np.ndarray (n + 1,)
        CSR row pointers.
    indices : np.ndarray (2 m,)
        Concatenated neighbour lists, each sorted ascending.
    labels : tuple
        ``labels[i]`` is the source-file label of internal node ``i``.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple
    _index_of: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        object.__setattr__(self, "_index_of", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    n = node_count

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    m = edge_count

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        self._check(i)
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def degree(self, i: int) -> int:
        self._check(i)
        return int(self.indptr[i + 1] - self.indptr[i])

    def average_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count

    def index_of(self, label: Hashable) -> int:
        """Internal index for a source label (string digits are accepted for int labels)."""
        if label in self._index_of:
            return self._index_of[label]
        if isinstance(label, str) and label.isdigit() and int(label) in self._index_of:
            return self._index_of[int(label)]
        raise KeyError(f"unknown node label {label!r}")

    def edge_array(self) -> np.ndarray:
        """``(m, 2)`` array of internal edges with ``u < v``, lexicographically sorted."""
        src = np.repeat(np.arange(self.node_count), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def labelled_edges(self) -> list[tuple]:
        lab = self.labels
        return [(lab[u], lab[v]) for u, v in self.edge_array()]

    def _check(self, i):
        if not 0 <= i < self.node_count:
            raise IndexError(f"node index {i} out of range [0, {self.node_count})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.labels == other.labels
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Graph(n={self.node_count}, m={self.edge_count})"


def _from_index_pairs(u: np.ndarray, v: np.ndarray, labels: Sequence) -> Graph:
    """CSR graph from integer endpoint arrays over ``labels``; cleans as ``build_graph``."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    keep = u != v
    u, v = u[keep], v[keep]
    if len(u) == 0:
        raise EmptyGraphError("no edges left after removing self-loops and isolated nodes")
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    nlab = len(labels)
    key = np.unique(lo * nlab + hi)
    lo, hi = key // nlab, key % nlab

    # drop isolated nodes; labels are assumed pre-sorted so order is preserved
    used = np.unique(np.concatenate([lo, hi]))
    remap = np.full(nlab, -1, dtype=np.int64)
    remap[used] = np.arange(len(used))
    lo, hi = remap[lo], remap[hi]
    n = len(used)

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(indptr, dst.astype(np.int64), tuple(labels[i] for i in used))


def build_graph(edges: Iterable[tuple]) -> Graph:
    """Undirected simple graph from labelled edges.

    Direction is ignored, self-loops and repeated edges are dropped, and
    nodes left without edges disappear.  Raises ``EmptyGraphError`` if no
    edge survives.
    """
    edges = list(edges)
    labels = sorted({lab for e in edges for lab in e}, key=_sort_key)
    if not labels:
        raise EmptyGraphError("edge list is empty")
    pos = {lab: i for i, lab in enumerate(labels)}
    u = np.fromiter((pos[a] for a, _ in edges), dtype=np.int64, count=len(edges))
    v = np.fromiter((pos[b] for _, b in edges), dtype=np.int64, count=len(edges))
    return _from_index_pairs(u, v, labels)


def from_index_edges(n: int, u, v) -> Graph:
    """Graph over integer labels ``0..n-1`` (the generators' output path)."""
    return _from_index_pairs(u, v, list(range(n)))


def degree(g: Graph, i: int) -> int:
    return g.degree(i)


def average_degree(g: Graph) -> float:
    """Mean degree ``2m / n``."""
    return g.average_degree()


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return build_graph(parse_edge_list(fh))


def write_edge_list(g: Graph, out, header: str | None = None) -> None:
    """Write ``g`` as SNAP text, one ``label label`` line per undirected edge."""
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8") as fh:
            return write_edge_list(g, fh, header)
    out.write(f"# Nodes: {g.node_count} Edges: {g.edge_count}\n")
    if header:
        for line in header.splitlines():
            out.write(f"# {line}\n")
    for a, b in g.labelled_edges():
        out.write(f"{a} {b}\n")


def write_mapping(g: Graph, out) -> None:
    """Sidecar CSV recording the relabelling: ``original_label,internal_index``."""
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            return write_mapping(g, fh)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["original_label", "internal_index"])
    for i, lab in enumerate(g.labels):
        w.writerow([lab, i])


def to_text(g: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()
