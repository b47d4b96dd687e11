"""Server-side caches shared across requests."""

from __future__ import annotations

import os
from collections import OrderedDict

from ..cayley import Ball, load_ball


class BallCache:
    """Small LRU of loaded ball files keyed by (path, mtime, size), so an
    overwritten file is picked up on the next request without a restart."""

    def __init__(self, capacity: int = 4):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self._entries: OrderedDict[tuple[str, int, int], Ball] = OrderedDict()

    def load(self, path: str) -> Ball:
        st = os.stat(path)
        key = (os.path.realpath(path), st.st_mtime_ns, st.st_size)
        if key in self._entries:
            self._entries.move_to_end(key)
            return self._entries[key]
        b = load_ball(path)
        self._entries[key] = b
        while len(self._entries) > self.capacity:
            self._entries.popitem(last=False)
        return b
