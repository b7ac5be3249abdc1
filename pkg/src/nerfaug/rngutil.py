"""Deterministic RNG derivation shared by every stage.

All randomness in the package flows through `derive_rng`, which maps a base
seed plus an arbitrary key path (ints and strings) onto an independent
`numpy.random.Generator`.  Two calls with the same arguments always produce
the same stream, which is what makes per-image / per-iteration work items
replayable and safe to farm out to workers.
"""

from __future__ import annotations

import os
import zlib

import numpy as np

_MASK = (1 << 63) - 1


def _key_int(key) -> int:
    if isinstance(key, (int, np.integer)):
        return int(key) & _MASK
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    raise TypeError(f"rng key must be int or str, got {type(key).__name__}")


def derive_rng(seed, *keys) -> np.random.Generator:
    """Generator for the stream identified by (seed, *keys).

    ``seed`` may also be an existing Generator, in which case it is returned
    unchanged (keys are not allowed then: the caller already owns a stream).
    """
    if isinstance(seed, np.random.Generator):
        if keys:
            raise TypeError("cannot derive a keyed stream from a live Generator")
        return seed
    entropy = [_key_int(seed)] + [_key_int(k) for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def worker_count() -> int:
    """Worker cap for internal chunk parallelism.

    Reads NERFAUG_THREADS; defaults to 1 (results are bit-identical for any
    value, the variable only trades latency).
    """
    raw = os.environ.get("NERFAUG_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)
