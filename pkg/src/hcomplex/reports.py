"""JSON/CSV/markdown artifacts and the per-n conjecture verification pipeline.

A conjecture row for one n runs the whole machine: both matchings are built
and verified, both Morse digraphs certified acyclic, Morse numbers checked
against the vanishing thresholds, homology computed (exactly over Z through
n = 7, by rational and mod-p ranks beyond), Betti symmetry checked, and every
admissible cycle witness for that n verified against the full face table.
The verdict is PASS only if all of it holds and the observed non-vanishing
dimensions equal the predicted middle third.

All payload builders emit deterministically ordered structures, so identical
inputs give byte-identical serializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .cache import cache_load, cache_store
from .complexes import FaceTable, enumerate_faces
from .homology import (
    BettiTable,
    betti_table,
    check_betti_symmetry,
    expected_nonzero_dims,
    nonzero_dims_via_ranks,
)
from .matching import MatchingMap, build_matching, critical_faces, verify_well_defined
from .morse import (
    build_digraph,
    check_acyclic,
    check_thresholds,
    morse_numbers,
    verify_certificate,
)
from .witnesses import admissible_pairs, verify_witness

RENDER_FORMATS = ("json", "csv", "md")


def face_table_payload(table: FaceTable) -> dict:
    """Export {n, faces:[{id, perm, blocks, dim}]} with sentinel-free blocks."""
    faces = []
    for i, f in enumerate(table.faces):
        blocks = [[v for v in b if 0 < v <= table.n] for b in f.blocks]
        faces.append(
            {
                "id": i,
                "perm": list(f.word[1:-1]),
                "blocks": [b for b in blocks if b],
                "dim": f.dim,
            }
        )
    return {"n": table.n, "faces": faces}


def matching_payload(table: FaceTable, matching: MatchingMap) -> dict:
    """Export {n, dual, pairs:[[lower, upper]], critical:[ids]}."""
    pairs = sorted(
        [a, b]
        for a, b in matching.pairs.items()
        if table.faces[a].dim < table.faces[b].dim
    )
    critical = sorted(i for i in range(len(table.faces)) if i not in matching.pairs)
    return {"n": table.n, "dual": matching.dual, "pairs": pairs, "critical": critical}


def morse_payload(table: FaceTable, matching: MatchingMap) -> dict:
    """Export {n, dual, m, acyclic, certificateDigest}; m is keyed by dimension."""
    numbers = morse_numbers(table, matching)
    cert = check_acyclic(build_digraph(table, matching))
    return {
        "n": table.n,
        "dual": matching.dual,
        "m": {str(d - 1): c for d, c in enumerate(numbers.m)},
        "acyclic": cert.acyclic,
        "certificateDigest": cert.digest,
    }


def betti_payload(bt: BettiTable) -> dict:
    """Export {n, coeff, betti:[by dim from -1], torsion:[[dim, [factors]]]}."""
    return {
        "n": bt.n,
        "coeff": bt.coefficients,
        "betti": [bt.betti[d] for d in range(-1, bt.n - 1)],
        "torsion": [[d, list(fs)] for d, fs in sorted(bt.torsion.items())],
    }


def betti_from_payload(payload: dict) -> BettiTable:
    return BettiTable(
        payload["n"],
        payload["coeff"],
        {d - 1: b for d, b in enumerate(payload["betti"])},
        {d: tuple(fs) for d, fs in payload["torsion"]},
    )


@dataclass(frozen=True, slots=True)
class ConjectureRow:
    n: int
    expected: tuple[int, ...]
    observed: tuple[int, ...]
    primal_morse_ok: bool
    dual_morse_ok: bool
    acyclic_ok: bool
    symmetry_ok: bool
    witness_ok: bool

    @property
    def verdict(self) -> str:
        flags = (
            self.expected == self.observed,
            self.primal_morse_ok,
            self.dual_morse_ok,
            self.acyclic_ok,
            self.symmetry_ok,
            self.witness_ok,
        )
        return "PASS" if all(flags) else "FAIL"


@dataclass(frozen=True, slots=True)
class ConjectureReport:
    rows: tuple[ConjectureRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.verdict == "PASS" for r in self.rows)


def _cached_betti(
    table: FaceTable, coefficients: str, cache_dir: Path | None
) -> BettiTable:
    kind = f"betti-{coefficients}"
    if cache_dir is not None:
        payload = cache_load(cache_dir, kind, table.n)
        if payload is not None and payload["coeff"] == coefficients:
            return betti_from_payload(payload)
    bt = betti_table(table, coefficients)
    if cache_dir is not None:
        cache_store(cache_dir, kind, table.n, betti_payload(bt))
    return bt


def _matching_side_ok(table: FaceTable, matching: MatchingMap) -> tuple[bool, bool]:
    """(well-defined and thresholds hold, digraph certified acyclic)."""
    report = verify_well_defined(table, matching)
    critical_faces(table, matching)  # asserts the critical structure
    thresholds = check_thresholds(morse_numbers(table, matching))
    g = build_digraph(table, matching)
    cert = check_acyclic(g)
    return report.ok and thresholds.ok, cert.acyclic and verify_certificate(g, cert)


def conjecture_row(
    n: int, cache_dir: Path | None = None, table: FaceTable | None = None
) -> ConjectureRow:
    """Run every verification for one n.

    >>> conjecture_row(3)  # doctest: +NORMALIZE_WHITESPACE
    ConjectureRow(n=3, expected=(0,), observed=(0,), primal_morse_ok=True,
                  dual_morse_ok=True, acyclic_ok=True, symmetry_ok=True,
                  witness_ok=True)
    """
    if table is None:
        table = enumerate_faces(n, max_n=n)
    primal_ok, primal_acyclic = _matching_side_ok(table, build_matching(table))
    dual_ok, dual_acyclic = _matching_side_ok(table, build_matching(table, dual=True))
    if n <= 7:
        bt = _cached_betti(table, "Z", cache_dir)
        observed = bt.nonzero_dims()
    else:
        bt = _cached_betti(table, "Q", cache_dir)
        observed = nonzero_dims_via_ranks(table)
    witness_ok = all(
        verify_witness(n, k, table).ok for m, k in admissible_pairs(n) if m == n
    )
    return ConjectureRow(
        n,
        tuple(sorted(expected_nonzero_dims(n))),
        tuple(sorted(observed)),
        primal_ok,
        dual_ok,
        primal_acyclic and dual_acyclic,
        check_betti_symmetry(bt),
        witness_ok,
    )


def build_conjecture_report(
    n_max: int, cache_dir: Path | None = None
) -> ConjectureReport:
    return ConjectureReport(
        tuple(conjecture_row(n, cache_dir) for n in range(1, n_max + 1))
    )


def conjecture_payload(report: ConjectureReport) -> dict:
    rows = [
        {
            "n": r.n,
            "expectedNonzeroDims": list(r.expected),
            "observedNonzeroDims": list(r.observed),
            "primalMorseOk": r.primal_morse_ok,
            "dualMorseOk": r.dual_morse_ok,
            "acyclicOk": r.acyclic_ok,
            "symmetryOk": r.symmetry_ok,
            "witnessOk": r.witness_ok,
            "verdict": r.verdict,
        }
        for r in report.rows
    ]
    return {"rows": rows}


def _dims(dims: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, dims)) + "}"


def render_report(report: ConjectureReport, fmt: str = "md") -> str:
    """Deterministic serialization of a conjecture report.

    >>> print(render_report(ConjectureReport(()), "csv"))
    n,expectedNonzeroDims,observedNonzeroDims,primalMorseOk,dualMorseOk,acyclicOk,symmetryOk,witnessOk,verdict
    <BLANKLINE>
    """
    if fmt == "json":
        return json.dumps(conjecture_payload(report), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        head = (
            "n,expectedNonzeroDims,observedNonzeroDims,primalMorseOk,"
            "dualMorseOk,acyclicOk,symmetryOk,witnessOk,verdict"
        )
        lines = [head] + [
            ",".join(
                [
                    str(r.n),
                    ";".join(map(str, r.expected)),
                    ";".join(map(str, r.observed)),
                    str(r.primal_morse_ok).lower(),
                    str(r.dual_morse_ok).lower(),
                    str(r.acyclic_ok).lower(),
                    str(r.symmetry_ok).lower(),
                    str(r.witness_ok).lower(),
                    r.verdict,
                ]
            )
            for r in report.rows
        ]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        head = (
            "| n | expected nonzero dims | observed | primal | dual "
            "| acyclic | symmetry | witness | verdict |"
        )
        rule = "|---|---|---|---|---|---|---|---|---|"
        mark = {True: "ok", False: "FAIL"}
        lines = [head, rule] + [
            f"| {r.n} | {_dims(r.expected)} | {_dims(r.observed)} "
            f"| {mark[r.primal_morse_ok]} | {mark[r.dual_morse_ok]} "
            f"| {mark[r.acyclic_ok]} | {mark[r.symmetry_ok]} "
            f"| {mark[r.witness_ok]} | {r.verdict} |"
            for r in report.rows
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be one of {RENDER_FORMATS}")


def render_betti_csv(payload: dict) -> str:
    lines = ["dim,betti,torsion"]
    torsion = {d: fs for d, fs in payload["torsion"]}
    for i, b in enumerate(payload["betti"]):
        d = i - 1
        lines.append(f"{d},{b},{';'.join(map(str, torsion.get(d, [])))}")
    return "\n".join(lines) + "\n"


def render_morse_csv(payload: dict) -> str:
    lines = ["dim,critical"]
    for d in sorted(payload["m"], key=int):
        lines.append(f"{d},{payload['m'][d]}")
    return "\n".join(lines) + "\n"
