"""Minimal deterministic PNG I/O.

Writes 8-bit grayscale or RGB PNGs with a fixed filter (none) and a fixed
zlib level, so identical pixel data always produces identical bytes -- the
property the replay/determinism guarantees of the pipeline rest on.  The
reader handles the non-interlaced 8-bit subset (all five scanline filters),
which covers everything this package emits.
"""

from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np

_SIGNATURE = b"\x89PNG\r\n\x1a\n"
_ZLIB_LEVEL = 6


class PngError(ValueError):
    pass


def _chunk(tag: bytes, payload: bytes) -> bytes:
    crc = zlib.crc32(tag + payload) & 0xFFFFFFFF
    return struct.pack(">I", len(payload)) + tag + payload + struct.pack(">I", crc)


def write_png(path, pixels: np.ndarray) -> None:
    """Write uint8 pixels of shape (H, W) or (H, W, 3) as a PNG file."""
    pixels = np.asarray(pixels)
    if pixels.dtype != np.uint8:
        raise PngError(f"expected uint8 pixels, got {pixels.dtype}")
    if pixels.ndim == 2:
        color_type, channels = 0, 1
    elif pixels.ndim == 3 and pixels.shape[2] == 3:
        color_type, channels = 2, 3
    else:
        raise PngError(f"unsupported pixel shape {pixels.shape}")
    h, w = pixels.shape[:2]
    ihdr = struct.pack(">IIBBBBB", w, h, 8, color_type, 0, 0, 0)
    rows = pixels.reshape(h, w * channels)
    raw = b"".join(b"\x00" + row.tobytes() for row in rows)
    idat = zlib.compress(raw, _ZLIB_LEVEL)
    data = _SIGNATURE + _chunk(b"IHDR", ihdr) + _chunk(b"IDAT", idat) + _chunk(b"IEND", b"")
    Path(path).write_bytes(data)


def _unfilter(raw: bytes, h: int, w: int, channels: int) -> np.ndarray:
    stride = w * channels
    out = np.zeros((h, stride), dtype=np.uint8)
    pos = 0
    for y in range(h):
        ftype = raw[pos]
        pos += 1
        line = np.frombuffer(raw, dtype=np.uint8, count=stride, offset=pos).astype(np.int32)
        pos += stride
        prev = out[y - 1].astype(np.int32) if y > 0 else np.zeros(stride, np.int32)
        if ftype == 0:
            cur = line
        elif ftype == 2:  # up
            cur = (line + prev) & 0xFF
        elif ftype in (1, 3, 4):  # sub / average / paeth need a scalar scan
            cur = np.zeros(stride, np.int32)
            for x in range(stride):
                a = cur[x - channels] if x >= channels else 0
                b = prev[x]
                c = prev[x - channels] if x >= channels else 0
                if ftype == 1:
                    pred = a
                elif ftype == 3:
                    pred = (a + b) // 2
                else:
                    p = a + b - c
                    pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                    pred = a if (pa <= pb and pa <= pc) else (b if pb <= pc else c)
                cur[x] = (line[x] + pred) & 0xFF
        else:
            raise PngError(f"unsupported filter type {ftype}")
        out[y] = cur.astype(np.uint8)
    return out.reshape((h, w, channels) if channels > 1 else (h, w))


def read_png(path) -> np.ndarray:
    """Read an 8-bit non-interlaced grayscale or RGB PNG into a uint8 array."""
    data = Path(path).read_bytes()
    if data[:8] != _SIGNATURE:
        raise PngError(f"{path}: not a PNG file")
    pos = 8
    ihdr = None
    idat = bytearray()
    while pos < len(data):
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        tag = data[pos + 4 : pos + 8]
        payload = data[pos + 8 : pos + 8 + length]
        pos += 12 + length
        if tag == b"IHDR":
            ihdr = struct.unpack(">IIBBBBB", payload)
        elif tag == b"IDAT":
            idat.extend(payload)
        elif tag == b"IEND":
            break
    if ihdr is None:
        raise PngError(f"{path}: missing IHDR")
    w, h, depth, color_type, _, _, interlace = ihdr
    if depth != 8 or interlace != 0:
        raise PngError(f"{path}: only 8-bit non-interlaced PNGs are supported")
    if color_type == 0:
        channels = 1
    elif color_type == 2:
        channels = 3
    else:
        raise PngError(f"{path}: unsupported color type {color_type}")
    raw = zlib.decompress(bytes(idat))
    expected = h * (w * channels + 1)
    if len(raw) != expected:
        raise PngError(f"{path}: corrupt pixel payload")
    return _unfilter(raw, h, w, channels)


def quantize(values: np.ndarray) -> np.ndarray:
    """[0,1] floats to uint8, rounding half-up."""
    v = np.clip(np.asarray(values, dtype=np.float64), 0.0, 1.0)
    return np.floor(v * 255.0 + 0.5).astype(np.uint8)
