"""Breadth-first exploration of Cayley graphs with exact deduplication.

Balls map canonical keys to word-length distances.  Construction is layer
synchronized: each layer's candidates are produced from the previous
frontier (optionally in parallel chunks) and merged in frontier order, so
the resulting key -> distance map, the witness tree and the next frontier
are all independent of the worker count.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .groups.base import Element, GroupModel
from .words import Word

__all__ = [
    "Ball",
    "DistanceResult",
    "TruncatedBallError",
    "ball",
    "distance",
    "pair_distance",
    "is_geodesic",
    "exhaustive_min_word",
    "witness_word",
    "save_ball",
    "load_ball",
]

DEFAULT_MEMORY_CAP = 2 * 10**7
ENUMERATION_GUARD = 10**8

_MAGIC = "#cayley-ball"
_VERSION = "v1"


class TruncatedBallError(RuntimeError):
    """Raised when a query needs information a truncated ball cannot give."""


@dataclass
class Ball:
    """Radius-r ball around the identity.

    dists holds every element with d(1,g) <= radius when complete is True;
    a truncated ball still holds exact distances for full layers only, so
    present keys are always exact.  parents compresses witness words as
    (parent key, generator name, sign); None when not recorded.
    """

    group_id: str
    radius: int
    dists: dict[str, int]
    complete: bool
    parents: dict[str, tuple[str, str, int]] | None = None

    def __len__(self) -> int:
        return len(self.dists)

    def sphere_sizes(self) -> list[int]:
        out = [0] * (self.radius + 1)
        for d in self.dists.values():
            out[d] += 1
        return out


@dataclass(frozen=True)
class DistanceResult:
    """Exact distance when known, else the certified lower bound 'greater
    than the ball radius'."""

    distance: int | None
    radius: int

    @property
    def exact(self) -> bool:
        return self.distance is not None

    def __str__(self) -> str:
        return str(self.distance) if self.exact else f">{self.radius}"


def _resolve_workers(workers: int) -> int:
    env = os.environ.get("GLAB_THREADS")
    if env:
        workers = min(workers, max(1, int(env)))
    return max(1, workers)


def ball(
    G: GroupModel,
    radius: int,
    memory_cap: int = DEFAULT_MEMORY_CAP,
    workers: int = 1,
    store_parents: bool = True,
) -> Ball:
    """BFS ball of the given radius; truncates to whole layers on cap."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    workers = _resolve_workers(workers)
    moves = G.generator_moves()
    key0 = G.canonical_key(G.identity())
    dists: dict[str, int] = {key0: 0}
    parents: dict[str, tuple[str, str, int]] | None = {} if store_parents else None
    frontier: list[tuple[str, Element]] = [(key0, G.identity())]

    def expand(chunk: list[tuple[str, Element]]):
        out = []
        for key, g in chunk:
            for name, sign, mv in moves:
                h = G.multiply(g, mv)
                hk = G.canonical_key(h)
                if hk not in dists:
                    out.append((hk, h, key, name, sign))
        return out

    for d in range(1, radius + 1):
        if not frontier:
            break
        if workers == 1 or len(frontier) < 4 * workers:
            chunk_results: Iterable[list] = [expand(frontier)]
        else:
            size = -(-len(frontier) // workers)
            chunks = [frontier[i : i + size] for i in range(0, len(frontier), size)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                chunk_results = list(pool.map(expand, chunks))
        new_entries: dict[str, int] = {}
        next_frontier: list[tuple[str, Element]] = []
        new_parents: list[tuple[str, tuple[str, str, int]]] = []
        truncated = False
        for result in chunk_results:
            for hk, h, pkey, name, sign in result:
                if hk in dists or hk in new_entries:
                    continue
                if len(dists) + len(new_entries) + 1 > memory_cap:
                    truncated = True
                    break
                new_entries[hk] = d
                next_frontier.append((hk, h))
                if parents is not None:
                    new_parents.append((hk, (pkey, name, sign)))
            if truncated:
                break
        if truncated:
            # drop the partial layer so every stored distance stays exact
            return Ball(G.group_id, d - 1, dists, False, parents)
        dists.update(new_entries)
        if parents is not None:
            parents.update(new_parents)
        frontier = next_frontier
    return Ball(G.group_id, radius, dists, True, parents)


def distance(b: Ball, G: GroupModel, g: Element) -> DistanceResult:
    """d(1,g) from the ball: exact when the key is stored, 'greater than
    radius' when absent from a complete ball."""
    if G.group_id != b.group_id:
        raise ValueError(f"ball is for {b.group_id}, group is {G.group_id}")
    key = G.canonical_key(g)
    d = b.dists.get(key)
    if d is not None:
        return DistanceResult(d, b.radius)
    if not b.complete:
        raise TruncatedBallError(
            f"{key} not in truncated ball; rebuild with a larger memory cap"
        )
    return DistanceResult(None, b.radius)


def pair_distance(b: Ball, G: GroupModel, g: Element, h: Element) -> DistanceResult:
    return distance(b, G, G.multiply(G.invert(g), h))


def is_geodesic(b: Ball, G: GroupModel, w: Word) -> bool:
    """True iff no strictly shorter word represents evaluate(w)."""
    n = w.length()
    if not b.complete:
        raise TruncatedBallError("geodesic check needs a complete ball")
    if b.radius < n - 1:
        raise ValueError(f"ball radius {b.radius} < {n - 1} needed for length-{n} word")
    res = distance(b, G, G.evaluate(w))
    return res.distance is None or res.distance >= n


def exhaustive_min_word(
    G: GroupModel, target: Element, max_len: int
) -> tuple[Word, int] | None:
    """Shortest representing word by brute-force enumeration of freely
    reduced words, shortest first, alphabet order then inverses.  The
    independent oracle for distance and is_geodesic."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    n = len(G.alphabet)
    total = 2 * n if max_len else 1
    if max_len > 1:
        total = 2 * n * (2 * n - 1) ** (max_len - 1)
    if total > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration of {total} words exceeds guard {ENUMERATION_GUARD}"
        )
    if G.equal(target, G.identity()):
        return Word.identity(G.alphabet), 0
    moves = G.generator_moves()
    target_key = G.canonical_key(target)

    # iterative deepening keeps memory flat and yields the
    # lexicographically first shortest word
    def dfs(depth: int, g: Element, path: list[tuple[str, int]]):
        if depth == 0:
            if G.canonical_key(g) == target_key:
                return list(path)
            return None
        for name, sign, mv in moves:
            if path and path[-1] == (name, -sign):
                continue
            path.append((name, sign))
            found = dfs(depth - 1, G.multiply(g, mv), path)
            if found is not None:
                return found
            path.pop()
        return None

    for length in range(1, max_len + 1):
        found = dfs(length, G.identity(), [])
        if found is not None:
            text = " ".join(f"{name}^{sign}" for name, sign in found)
            return Word.parse(text, G.alphabet).free_reduce(), length
    return None


def witness_word(b: Ball, G: GroupModel, key: str) -> Word:
    """Reconstruct a geodesic word for a stored key from the parent tree."""
    if b.parents is None:
        raise ValueError("ball was built without witness tracking")
    if key not in b.dists:
        raise KeyError(key)
    letters: list[tuple[str, int]] = []
    while b.dists[key] > 0:
        pkey, name, sign = b.parents[key]
        letters.append((name, sign))
        key = pkey
    text = " ".join(f"{name}^{sign}" for name, sign in reversed(letters))
    return Word.parse(text, G.alphabet)


def _body_lines(b: Ball) -> list[str]:
    return [f"{k}\t{d}" for k, d in sorted(b.dists.items())]


def save_ball(b: Ball, path: str) -> None:
    body = "".join(line + "\n" for line in _body_lines(b))
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    header = (
        f"{_MAGIC} {_VERSION} group={b.group_id} radius={b.radius} "
        f"entries={len(b.dists)} complete={1 if b.complete else 0} "
        f"checksum={checksum}\n"
    )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header)
        fh.write(body)


def load_ball(path: str) -> Ball:
    with open(path, encoding="utf-8", newline="\n") as fh:
        header = fh.readline().rstrip("\n")
        body = fh.read()
    fields = header.split(" ")
    if not fields or fields[0] != _MAGIC:
        raise ValueError(f"{path}: not a ball cache file")
    if len(fields) < 2 or fields[1] != _VERSION:
        raise ValueError(
            f"{path}: unsupported format version {fields[1] if len(fields) > 1 else '?'}"
            f" (reader supports {_VERSION})"
        )
    meta = dict(f.split("=", 1) for f in fields[2:])
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if checksum != meta["checksum"]:
        raise ValueError(f"{path}: checksum mismatch, file corrupted")
    dists: dict[str, int] = {}
    for line in body.splitlines():
        key, _, dist = line.partition("\t")
        dists[key] = int(dist)
    if len(dists) != int(meta["entries"]):
        raise ValueError(f"{path}: entry count mismatch")
    return Ball(
        group_id=meta["group"],
        radius=int(meta["radius"]),
        dists=dists,
        complete=meta["complete"] == "1",
        parents=None,
    )
