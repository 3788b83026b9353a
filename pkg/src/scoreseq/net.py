"""Layered dynamic program over prefix states ("the net").

Layer ``k`` maps every reachable prefix state ``(p_k, q_k)`` to the
records ``(p_{k-1}, q_{k-1}, x_k)`` that lead into it. Layers ``1..n-1``
admit any multiplicity within the closed-form bound; layer ``n`` only
admits the multiplicity that closes the sequence with equality. Walking
predecessor records back from layer ``n`` yields exponent sets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .bounds import caps_ok, exact_xn, state_lookahead_ok, upper_bound_xk
from .core import ExponentSet, ScoreSet, as_score_set, landau_check_grouped
from .errors import ResourceLimitError

DEFAULT_MAX_STATES = 2_000_000
DEFAULT_MAX_ENTRIES = 5_000_000


class Mode(str, enum.Enum):
    FIRST_ONLY = "first"
    ENUMERATE_ALL = "all"


class NetEntry(NamedTuple):
    presize: int
    preval: int
    num_now: int


SENTINEL = NetEntry(0, 0, 0)


@dataclass
class NetStats:
    states: list[int] = field(default_factory=list)
    entries: int = 0
    candidates: int = 0
    pruned_cells: int = 0

    @property
    def total_states(self) -> int:
        return sum(self.states)


@dataclass
class Net:
    """Finished net; ``layers[0]`` holds only the empty prefix."""

    score_set: ScoreSet
    mode: Mode
    layers: list[dict[tuple[int, int], list[NetEntry]]]
    stats: NetStats

    @property
    def n(self) -> int:
        return self.score_set.n

    @property
    def solvable(self) -> bool:
        return bool(self.layers[-1])

    def final_states(self) -> list[tuple[int, int]]:
        return sorted(self.layers[-1])

    def chains(self) -> Iterator[ExponentSet]:
        """Depth-first back-chaining from every final state, sorted by state."""
        n = self.n
        xs = [0] * n
        for key in self.final_states():
            # explicit stack of (layer, entry iterator) keeps deep nets off the C stack
            stack = [(n, iter(self.layers[n][key]))]
            while stack:
                layer, it = stack[-1]
                entry = next(it, None)
                if entry is None:
                    stack.pop()
                    continue
                xs[layer - 1] = entry.num_now
                if layer == 1:
                    yield ExponentSet(xs)
                else:
                    prev = self.layers[layer - 1][(entry.presize, entry.preval)]
                    stack.append((layer - 1, iter(prev)))

    def loop_bound(self) -> int:
        """Iteration count of the full x, p, q scan over all layers (time bound)."""
        d = (0,) + self.score_set.scores
        total = 0
        for k in range(1, self.n):
            a, b = d[k], d[k - 1]
            total += (2 * a + 1) * (2 * b + 2) * (b * (2 * b + 1) + 1)
        b = d[self.n - 1]
        total += (2 * b + 2) * (b * (2 * b + 1) + 1)
        return total


def layer_key_cap(alpha: int) -> int:
    """Number of ``(p, q)`` cells allowed by the per-layer caps."""
    return (2 * alpha + 2) * (alpha * (2 * alpha + 1) + 1)


def build_net(
    score_set,
    mode: Mode | str = Mode.ENUMERATE_ALL,
    *,
    lookahead: bool | None = None,
    layout: str = "sparse",
    max_states: int | None = DEFAULT_MAX_STATES,
    max_entries: int | None = DEFAULT_MAX_ENTRIES,
    debug: bool = False,
) -> Net:
    """Build the net for ``score_set``.

    ``lookahead`` drops cells whose state cannot survive later layers even
    with every later multiplicity set to 1; it defaults to on for
    ``FIRST_ONLY`` and off for ``ENUMERATE_ALL``. ``layout="dense"`` runs
    the literal cell-by-cell loop over the capped ``(p, q)`` grid and is
    only practical for small scores.

    Raises :class:`ResourceLimitError` when either budget is exceeded.
    """
    d = as_score_set(score_set)
    mode = Mode(mode)
    if lookahead is None:
        lookahead = mode is Mode.FIRST_ONLY
    if layout not in ("sparse", "dense"):
        raise ValueError(f"unknown layout {layout!r}")
    first_only = mode is Mode.FIRST_ONLY
    n = d.n
    stats = NetStats(states=[1])
    layers: list[dict] = [{(0, 0): [SENTINEL]}]
    total_states = 1

    def budget(new_states: int) -> None:
        nonlocal total_states
        total_states += new_states
        if max_states is not None and total_states > max_states:
            raise ResourceLimitError(
                f"net exceeded {max_states} states (layer {len(layers)} of {n})"
            )
        if max_entries is not None and stats.entries > max_entries:
            raise ResourceLimitError(f"net exceeded {max_entries} entries")

    for k in range(1, n):
        alpha = d[k - 1]
        prev = layers[k - 1]
        if layout == "dense":
            cur = _dense_layer(prev, alpha, d[k - 2] if k > 1 else 0, first_only, stats)
        else:
            cur = _sparse_layer(prev, alpha, first_only, stats)
        if lookahead:
            before = len(cur)
            cur = {key: v for key, v in cur.items() if state_lookahead_ok(k, key, d)}
            stats.pruned_cells += before - len(cur)
        if debug:
            assert len(cur) <= layer_key_cap(alpha)
            assert all(caps_ok(alpha, key) for key in cur)
        layers.append(cur)
        stats.states.append(len(cur))
        budget(len(cur))
        if not cur:
            break

    last: dict[tuple[int, int], list[NetEntry]] = {}
    if len(layers) == n:
        alpha = d[n - 1]
        for (p, q) in sorted(layers[n - 1]):
            stats.candidates += 1
            x = exact_xn(alpha, (p, q))
            if x is None:
                continue
            key = (p + x, q + x * alpha)
            cell = last.get(key)
            if cell is None:
                last[key] = [NetEntry(p, q, x)]
                stats.entries += 1
            elif not first_only:
                cell.append(NetEntry(p, q, x))
                stats.entries += 1
        stats.states.append(len(last))
        budget(len(last))
    while len(layers) < n:
        layers.append({})
        stats.states.append(0)
    layers.append(last)

    net = Net(d, mode, layers, stats)
    if debug:
        assert stats.candidates <= net.loop_bound()
        if first_only:
            assert all(len(v) == 1 for layer in layers for v in layer.values())
    return net


def _sparse_layer(prev, alpha: int, first_only: bool, stats: NetStats) -> dict:
    cur: dict[tuple[int, int], list[NetEntry]] = {}
    cap = 2 * alpha + 1
    for (p, q) in sorted(prev):
        top = min(upper_bound_xk(alpha, (p, q)).upper, cap)
        stats.candidates += cap
        for x in range(1, top + 1):
            key = (p + x, q + x * alpha)
            cell = cur.get(key)
            entry = NetEntry(p, q, x)
            if cell is None:
                cur[key] = [entry]
                stats.entries += 1
            elif first_only:
                # the reference loop runs x outermost, so the first writer
                # is the smallest (x, p, q)
                if (x, p, q) < (cell[0].num_now, cell[0].presize, cell[0].preval):
                    cell[0] = entry
            else:
                cell.append(entry)
                stats.entries += 1
    return cur


def _dense_layer(prev, alpha: int, prev_alpha: int, first_only: bool, stats: NetStats) -> dict:
    psize = 2 * prev_alpha + 2
    qsize = prev_alpha * (2 * prev_alpha + 1) + 1
    # each cell holds its bound on x; 0 marks an unreached state
    bound = [[0] * qsize for _ in range(psize)]
    for (p, q) in prev:
        bound[p][q] = upper_bound_xk(alpha, (p, q)).upper
    cur: dict[tuple[int, int], list[NetEntry]] = {}
    for x in range(1, 2 * alpha + 2):
        for p in range(psize):
            row = bound[p]
            stats.candidates += qsize
            for q in range(qsize):
                if row[q] < x:
                    continue
                key = (p + x, q + x * alpha)
                cell = cur.get(key)
                if cell is None:
                    cur[key] = [NetEntry(p, q, x)]
                    stats.entries += 1
                elif not first_only:
                    cell.append(NetEntry(p, q, x))
                    stats.entries += 1
    return cur


def reconstruct_one(score_set, **options) -> ExponentSet | None:
    """One exponent set for ``score_set``, or ``None`` if none exists.

    Back-chains from the smallest final state of a ``FIRST_ONLY`` net.
    """
    net = build_net(score_set, Mode.FIRST_ONLY, **options)
    if not net.solvable:
        return None
    e = next(net.chains())
    assert landau_check_grouped(net.score_set, e)
    return e


class Enumeration(NamedTuple):
    exponent_sets: list[ExponentSet]
    truncated: bool

    def __len__(self) -> int:
        return len(self.exponent_sets)

    def __iter__(self):
        return iter(self.exponent_sets)


def enumerate_all(score_set, limit: int | None = None, **options) -> Enumeration:
    """Every exponent set for ``score_set`` in deterministic order.

    With ``limit`` set, stops after that many and flags truncation.
    """
    net = build_net(score_set, Mode.ENUMERATE_ALL, **options)
    out: list[ExponentSet] = []
    for e in net.chains():
        if limit is not None and len(out) >= limit:
            return Enumeration(out, True)
        out.append(e)
    return Enumeration(out, False)
