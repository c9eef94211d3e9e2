"""Content-addressed artifact cache with checksum and invariant verification.

Artifacts are JSON payloads stored under ``{kind}-n{n}-v{VERSION}-{sha12}.json``
where sha12 is a prefix of the sha256 of the canonical payload bytes.  A load
recomputes the digest and runs a cheap per-kind invariant spot-check (face
counts against the Eulerian row, pair counts against n!, Betti numbers
against the Euler characteristic); anything that fails is reported through a
warning and treated as a miss, so corruption can only cost a recompute.

Writes go to a temp file in the same directory and are renamed into place,
so concurrent readers never observe partial files.  The cache directory
comes from the ``HCOMPLEX_CACHE_DIR`` environment variable unless a path is
given explicitly; with neither, caching is off.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
import warnings
from hashlib import sha256
from pathlib import Path

from .complexes import eulerian_row, tanh_euler_characteristic

FORMAT_VERSION = 1
ENV_VAR = "HCOMPLEX_CACHE_DIR"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    """The cache directory: explicit path, else the environment, else None."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def canonical_bytes(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def _digest(data: bytes) -> str:
    return sha256(data).hexdigest()[:12]


def _file_name(kind: str, n: int, digest: str) -> str:
    return f"{kind}-n{n}-v{FORMAT_VERSION}-{digest}.json"


def _spot_check(kind: str, n: int, payload: dict) -> bool:
    """Cheap structural invariants that corruption is likely to break."""
    if payload.get("n") != n:
        return False
    if kind == "faces":
        faces = payload["faces"]
        if len(faces) != math.factorial(n):
            return False
        hist: dict[int, int] = {}
        for f in faces:
            hist[f["dim"]] = hist.get(f["dim"], 0) + 1
        row = eulerian_row(n)
        return all(hist.get(d - 1, 0) == row[d] for d in range(n))
    if kind.startswith("matching"):
        return 2 * len(payload["pairs"]) + len(payload["critical"]) == math.factorial(n)
    if kind.startswith("morse"):
        chi = sum((-1 if int(d) % 2 else 1) * m for d, m in payload["m"].items())
        return chi == tanh_euler_characteristic(n)
    if kind.startswith("betti"):
        betti = payload["betti"]
        chi = sum((-1 if (d - 1) % 2 else 1) * b for d, b in enumerate(betti))
        return chi == tanh_euler_characteristic(n)
    if kind.startswith("witness"):
        k = payload["k"]
        return len(payload["terms"]) == 2 ** (k + 1)
    return True


def cache_store(directory: Path, kind: str, n: int, payload: dict) -> Path:
    """Write the payload atomically; returns the content-addressed path."""
    directory.mkdir(parents=True, exist_ok=True)
    data = canonical_bytes(payload)
    path = directory / _file_name(kind, n, _digest(data))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    for stale in directory.glob(f"{kind}-n{n}-v{FORMAT_VERSION}-*.json"):
        if stale != path:
            stale.unlink(missing_ok=True)
    return path


def cache_load(directory: Path, kind: str, n: int) -> dict | None:
    """A verified payload, or None on miss, checksum failure, or bad invariants."""
    for path in sorted(directory.glob(f"{kind}-n{n}-v{FORMAT_VERSION}-*.json")):
        try:
            data = path.read_bytes()
            digest = path.stem.rsplit("-", 1)[-1]
            if _digest(data) != digest:
                raise ValueError("checksum mismatch")
            payload = json.loads(data)
            if not _spot_check(kind, n, payload):
                raise ValueError("invariant spot-check failed")
            return payload
        except (OSError, ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"discarding cached {path.name}: {exc}", stacklevel=2)
    return None
