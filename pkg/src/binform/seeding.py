"""Deterministic named random streams.

All randomness in the package flows from one root seed.  A substream is
addressed by a path of labels; its seed is the SHA-256 digest of the root
seed together with the labels.  Streams are therefore independent of draw
order, stable across platforms, and reproducible from (seed, labels) alone.
"""

from __future__ import annotations

import hashlib
import random


def child_seed(root: int, *labels) -> int:
    h = hashlib.sha256()
    h.update(str(int(root)).encode())
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode())
    return int.from_bytes(h.digest(), "big")


def stream(root: int, *labels) -> random.Random:
    """An independent random.Random for the given label path."""
    return random.Random(child_seed(root, *labels))
