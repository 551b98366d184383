"""Minimal Netpbm codec: PGM (P2/P5) in, PGM P5 and PPM P6 out."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np

from ..raster import GrayImage

__all__ = [
    "PNMError",
    "PNMHeaderError",
    "PNMTruncatedError",
    "PNMMaxvalError",
    "parse_pgm",
    "load_pgm",
    "encode_pgm",
    "encode_ppm",
    "save_pgm",
    "save_ppm",
    "atomic_write",
]

_WHITESPACE = b" \t\r\n\x0b\x0c"


class PNMError(ValueError):
    """Parse failure; ``offset`` is the byte position where it was detected."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class PNMHeaderError(PNMError):
    pass


class PNMTruncatedError(PNMError):
    pass


class PNMMaxvalError(PNMError):
    pass


class _Tokens:
    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def skip_space(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            c = data[self.pos : self.pos + 1]
            if c == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = n if end < 0 else end + 1
            elif c in _WHITESPACE:
                self.pos += 1
            else:
                break

    def integer(self, what: str, error=PNMHeaderError) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos : self.pos + 1].isdigit():
            self.pos += 1
        if self.pos == start:
            if start >= len(self.data):
                raise error(f"unexpected end of data reading {what}", start)
            raise error(f"expected decimal {what}", start)
        nxt = self.data[self.pos : self.pos + 1]
        if nxt and nxt not in _WHITESPACE and nxt != b"#":
            raise error(f"junk after {what}", self.pos)
        return int(self.data[start : self.pos])


def parse_pgm(data: bytes) -> GrayImage:
    """Decode a P2 or P5 graymap with maxval <= 255.

    Samples are rescaled to 0..255 when maxval is below 255.
    """
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PNMHeaderError(f"bad magic number {magic!r}, expected P2 or P5", 0)
    tok = _Tokens(data, 2)
    nxt = data[2:3]
    if nxt and nxt not in _WHITESPACE and nxt != b"#":
        raise PNMHeaderError("missing whitespace after magic number", 2)
    width_at = tok.pos
    width = tok.integer("width")
    height = tok.integer("height")
    maxval_at = tok.pos
    maxval = tok.integer("maxval")
    if width == 0 or height == 0:
        raise PNMHeaderError(f"zero image dimension {width}x{height}", width_at)
    if not 1 <= maxval <= 255:
        raise PNMMaxvalError(f"maxval {maxval} outside 1..255", maxval_at)
    n = width * height
    if n > len(data):
        # every sample needs at least one byte in either encoding
        raise PNMTruncatedError(f"{width}x{height} raster cannot fit in {len(data)} bytes", len(data))
    if magic == b"P5":
        if tok.pos >= len(data):
            raise PNMTruncatedError("missing raster after header", tok.pos)
        if data[tok.pos : tok.pos + 1] not in _WHITESPACE:
            raise PNMHeaderError("maxval must be followed by one whitespace byte", tok.pos)
        start = tok.pos + 1  # exactly one whitespace byte ends the header
        payload = data[start : start + n]
        if len(payload) < n:
            raise PNMTruncatedError(f"raster holds {len(payload)} of {n} bytes", start + len(payload))
        samples = np.frombuffer(payload, dtype=np.uint8).astype(np.int64)
        if samples.max(initial=0) > maxval:
            bad = int(np.argmax(samples > maxval))
            raise PNMMaxvalError(f"sample {samples[bad]} exceeds maxval {maxval}", start + bad)
    else:
        values = np.empty(n, dtype=np.int64)
        for i in range(n):
            at = tok.pos
            v = tok.integer(f"sample {i}", error=PNMTruncatedError)
            if v > maxval:
                raise PNMMaxvalError(f"sample {v} exceeds maxval {maxval}", at)
            values[i] = v
        samples = values
    if maxval != 255:
        samples = (samples * 255 + maxval // 2) // maxval
    return GrayImage(samples.astype(np.uint8).reshape(height, width))


def load_pgm(path) -> GrayImage:
    return parse_pgm(Path(path).read_bytes())


def encode_pgm(img: GrayImage) -> bytes:
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(img.samples, dtype=np.uint8).tobytes()


def encode_ppm(rgb: np.ndarray) -> bytes:
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError(f"expected an HxWx3 array, got shape {rgb.shape}")
    header = f"P6\n{rgb.shape[1]} {rgb.shape[0]}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(rgb, dtype=np.uint8).tobytes()


def atomic_write(path, data: bytes | str) -> None:
    """Write via a sibling temp file and rename, so readers never see partial output."""
    path = Path(path)
    if isinstance(data, str):
        data = data.encode("utf-8")
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_pgm(path, img: GrayImage) -> None:
    atomic_write(path, encode_pgm(img))


def save_ppm(path, rgb: np.ndarray) -> None:
    atomic_write(path, encode_ppm(rgb))
