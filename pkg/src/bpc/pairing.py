"""Box tensor products and homology ranks.

``box_right`` pairs an A-infinity module against the right algebra of a
type-DD structure, leaving a type-D structure over the left algebra;
``box_left`` consumes the remaining labels of a type-D structure and
yields a bare F2 chain complex.

The differential sums over directed label paths in the bimodule: a
length-one step whose consumed-side label is an idempotent fixing the
module generator passes through unchanged, while a path of chord labels
is matched against a single operation of the module table, the residual
labels multiplying up along the way.  Strict unitality: a path of
length >= 2 containing an idempotent consumed-side label contributes
nothing.  Finiteness comes from pruning on zero residual products and
on sequences that leave the table's prefix tree, backed by a hard cap.
"""

from dataclasses import dataclass

from .algebra import chord_interval, idem_token, is_idempotent, mul_basis
from .structures import (
    AModule,
    ChainComplexF2,
    DGenerator,
    DStructure,
    DDStructure,
)

DEFAULT_PATH_CAP = 64


@dataclass(frozen=True)
class PairingConfig:
    """Which algebra the module consumes, and the hard path bound."""

    side: str = "right"
    path_cap: int = DEFAULT_PATH_CAP

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"unknown side {self.side!r}")


class PathCapExceeded(RuntimeError):
    """Path enumeration hit a cap; the result would be unreliable."""


def _toggle(parity, key):
    parity[key] = not parity.get(key, False)


def _op_lookup(module: AModule):
    table = module.table
    prefixes = set()
    for src, seq in table:
        for k in range(1, len(seq)):
            prefixes.add((src, seq[:k]))
    return table, prefixes


def _check_cap(cfg: PairingConfig, module: AModule):
    if cfg.path_cap < module.max_arity:
        raise ValueError("path cap is smaller than the longest module operation")


def _guard_family_cap(module: AModule, length: int):
    if module.capped_arity is not None and length >= module.capped_arity:
        raise PathCapExceeded(
            "path enumeration touched the family cap of the module; "
            "rebuild it with a larger cap"
        )


def box_right(A: AModule, S: DDStructure, cfg: PairingConfig | None = None) -> DStructure:
    """Type-D structure of (A over the right algebra) box (S)."""
    cfg = cfg or PairingConfig("right")
    if cfg.side != "right":
        raise ValueError("box_right consumes the right algebra")
    _check_cap(cfg, A)
    table, prefixes = _op_lookup(A)
    occupancy = {g.name: g.occupancy for g in A.generators}
    pairs = [
        (a.name, d)
        for a in A.generators
        for d in S.generators
        if a.occupancy == d.right
    ]
    gens = tuple(DGenerator(f"{a}*{d.name}", d.left) for a, d in pairs)
    known = {g.name for g in gens}
    parity = {}
    for a, d in pairs:
        source = f"{a}*{d.name}"
        # (label product so far, chord sequence so far, current generator)
        stack = [(idem_token("left", d.left), (), d.name)]
        while stack:
            prod, seq, at = stack.pop()
            for l, r, nxt in S.arrows_from[at]:
                if is_idempotent(r):
                    if not seq:
                        _toggle(parity, (source, l, f"{a}*{nxt}"))
                    continue
                nprod = mul_basis(prod, l)
                if nprod is None:
                    continue
                nseq = seq + (chord_interval(r),)
                if len(nseq) > cfg.path_cap:
                    raise PathCapExceeded("path cap exceeded during box_right")
                _guard_family_cap(A, len(nseq))
                key = (a, nseq)
                if key in table:
                    for tgt in table[key]:
                        out = f"{tgt}*{nxt}"
                        if out not in known:
                            raise ValueError(
                                f"idempotent mismatch in inputs: operation lands on"
                                f" {tgt!r} which does not pair with {nxt!r}"
                            )
                        _toggle(parity, (source, nprod, out))
                if key in prefixes:
                    stack.append((nprod, nseq, nxt))
    arrows = frozenset(k for k, odd in parity.items() if odd)
    return DStructure("left", gens, arrows)


def box_left(A: AModule, S: DStructure, cfg: PairingConfig | None = None) -> ChainComplexF2:
    """F2 chain complex of (A over the remaining algebra) box (S)."""
    cfg = cfg or PairingConfig("left")
    if cfg.side != "left":
        raise ValueError("box_left consumes the left algebra")
    _check_cap(cfg, A)
    table, prefixes = _op_lookup(A)
    arrows_from = {}
    for src, t, tgt in sorted(S.arrows):
        arrows_from.setdefault(src, []).append((t, tgt))
    pairs = [
        (a.name, d) for a in A.generators for d in S.generators if a.occupancy == d.idem
    ]
    gens = tuple(f"{a}*{d.name}" for a, d in pairs)
    known = set(gens)
    parity = {}
    for a, d in pairs:
        source = f"{a}*{d.name}"
        stack = [((), d.name)]
        while stack:
            seq, at = stack.pop()
            for t, nxt in arrows_from.get(at, ()):
                if is_idempotent(t):
                    if not seq:
                        _toggle(parity, (source, f"{a}*{nxt}"))
                    continue
                nseq = seq + (chord_interval(t),)
                if len(nseq) > cfg.path_cap:
                    raise PathCapExceeded("path cap exceeded during box_left")
                _guard_family_cap(A, len(nseq))
                key = (a, nseq)
                if key in table:
                    for tgt in table[key]:
                        out = f"{tgt}*{nxt}"
                        if out not in known:
                            raise ValueError(
                                f"idempotent mismatch in inputs: operation lands on"
                                f" {tgt!r} which does not pair with {nxt!r}"
                            )
                        _toggle(parity, (source, out))
                if key in prefixes:
                    stack.append((nseq, nxt))
    arrows = frozenset(k for k, odd in parity.items() if odd)
    return ChainComplexF2(gens, arrows)


def homology_rank(C: ChainComplexF2) -> int:
    """dim - 2 rank(boundary), by exact elimination over F2."""
    idx = {g: k for k, g in enumerate(C.generators)}
    squared = {}
    outgoing = {}
    for src, tgt in C.arrows:
        outgoing.setdefault(src, []).append(tgt)
    for x, y in C.arrows:
        for z in outgoing.get(y, ()):
            _toggle(squared, (x, z))
    if any(squared.values()):
        raise ValueError("boundary does not square to zero")
    rows = []
    for g in C.generators:
        mask = 0
        for tgt in outgoing.get(g, ()):
            mask ^= 1 << idx[tgt]
        if mask:
            rows.append(mask)
    rank = 0
    for col in range(len(C.generators)):
        bit = 1 << col
        pivot = next((r for r in rows if r & bit), None)
        if pivot is None:
            continue
        rows = [r ^ pivot if (r & bit) and r is not pivot else r for r in rows]
        rows.remove(pivot)
        rank += 1
    return len(C.generators) - 2 * rank
