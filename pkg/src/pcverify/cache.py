"""On-disk sieve cache.

Layout, all integers little-endian:

    magic      4 bytes  b"PCV1"
    version    1 byte   0x01
    limit      8 bytes
    exponent   1 byte   16 (pi checkpoints every 2**16 integers)
    bitmap     ceil(b/8) bytes, b = (limit - 1) // 2; bit i (LSB-first within
               each byte) is set iff the odd number 2i + 3 is composite
    pi table   8 bytes per block: pi(min(k * 2**16 - 1, limit)), k = 1, 2, ...
    crc32      4 bytes over everything above
"""

from __future__ import annotations

import os
import struct
import tempfile
import zlib
from pathlib import Path

import numpy as np

from .primes import BLOCK_EXP, BLOCK_SIZE, PrimeTables

MAGIC = b"PCV1"
VERSION = 1
_HEADER = struct.Struct("<4sBQB")
_CHUNK_WORDS = 1 << 20
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


class CacheError(Exception):
    def __init__(self, path, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")


def _composite_words(odd: np.ndarray, nbits: int) -> np.ndarray:
    """Shift the odd-prime map (bit j <-> 2j+1) down one place and invert it."""
    nwords = (nbits + 63) // 64
    out = np.empty(nwords, dtype=np.uint64)
    one, top = np.uint64(1), np.uint64(63)
    for a in range(0, nwords, _CHUNK_WORDS):
        b = min(a + _CHUNK_WORDS, nwords)
        lo = odd[a:b] >> one
        nxt = odd[a + 1 : b + 1]
        if len(nxt) < b - a:
            nxt = np.concatenate([nxt, np.zeros(b - a - len(nxt), dtype=np.uint64)])
        out[a:b] = ~(lo | (nxt << top))
    _mask_tail(out, nbits)
    return out


def _odd_words(comp: np.ndarray, nbits: int, size: int) -> np.ndarray:
    """Inverse of _composite_words: bit j of the result <-> 2j+1 prime."""
    nwords = (size + 63) // 64
    src = np.zeros(nwords, dtype=np.uint64)
    src[: len(comp)] = comp[:nwords]
    _mask_tail(src, nbits)
    primes = ~src
    _mask_tail(primes, nbits)
    one, top = np.uint64(1), np.uint64(63)
    out = np.empty(nwords, dtype=np.uint64)
    for a in range(0, nwords, _CHUNK_WORDS):
        b = min(a + _CHUNK_WORDS, nwords)
        carry = np.empty(b - a, dtype=np.uint64)
        carry[1:] = primes[a : b - 1] >> top
        carry[0] = primes[a - 1] >> top if a else np.uint64(0)
        out[a:b] = (primes[a:b] << one) | carry
    _mask_tail(out, size)
    return out


def _mask_tail(words: np.ndarray, nbits: int) -> None:
    full, rem = divmod(nbits, 64)
    if full < len(words):
        words[full] &= (np.uint64(1) << np.uint64(rem)) - np.uint64(1) if rem else np.uint64(0)
        words[full + 1 :] = 0


def encode(tables: PrimeTables) -> bytes:
    limit = tables.limit
    nbits = max(limit - 1, 0) // 2
    comp = _composite_words(tables.odd_words(), nbits)
    bitmap = comp.astype("<u8").tobytes()[: (nbits + 7) // 8]
    blocks = np.asarray(tables.block_counts(), dtype="<u8").tobytes()
    body = _HEADER.pack(MAGIC, VERSION, limit, BLOCK_EXP) + bitmap + blocks
    return body + struct.pack("<I", zlib.crc32(body))


def save(tables: PrimeTables, path) -> Path:
    """Write the cache atomically; rewriting the same limit yields the same bytes."""
    path = Path(path)
    data = encode(tables)
    try:
        fd, tmp = tempfile.mkstemp(prefix=path.name + ".", dir=path.parent or ".")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(path, f"cannot write cache: {exc.strerror or exc}") from exc
    return path


def decode(data: bytes, path="<bytes>") -> tuple[PrimeTables, str]:
    """Parse cache bytes; returns the tables and the file's checksum tag."""
    if len(data) < _HEADER.size + 4:
        raise CacheError(path, "truncated cache file")
    magic, version, limit, exp = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CacheError(path, f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise CacheError(path, f"unsupported format version {version}")
    if exp != BLOCK_EXP:
        raise CacheError(path, f"unsupported block exponent {exp}")
    if limit < 2:
        raise CacheError(path, f"invalid limit {limit}")
    nbits = (limit - 1) // 2
    nbytes = (nbits + 7) // 8
    nblocks = (limit + BLOCK_SIZE) // BLOCK_SIZE
    expect = _HEADER.size + nbytes + 8 * nblocks + 4
    if len(data) != expect:
        raise CacheError(path, f"size {len(data)} does not match limit {limit} (expected {expect})")
    (crc,) = struct.unpack_from("<I", data, len(data) - 4)
    if zlib.crc32(memoryview(data)[:-4]) != crc:
        raise CacheError(path, "checksum mismatch")
    raw = np.frombuffer(data, dtype=np.uint8, count=nbytes, offset=_HEADER.size)
    padded = np.zeros(-(-nbytes // 8) * 8, dtype=np.uint8)
    padded[:nbytes] = raw
    comp = padded.view("<u8").astype(np.uint64)
    size = (limit + 1) // 2
    tables = PrimeTables(limit, _odd_words(comp, nbits, size))
    stored = np.frombuffer(data, dtype="<u8", count=nblocks, offset=_HEADER.size + nbytes)
    if stored.tolist() != tables.block_counts():
        raise CacheError(path, "prime-count checkpoints disagree with the bitmap")
    return tables, f"{crc:08x}"


def load(path) -> tuple[PrimeTables, str]:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CacheError(path, f"cannot read cache: {exc.strerror or exc}") from exc
    return decode(data, path)
