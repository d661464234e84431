"""Seeded random parity games of configuration ``xx-yy-aa-bb``.

Every game is drawn from its own ``numpy.random.PCG64`` stream seeded with
``seed + index``, so batches can be split across workers and still
reproduce bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ParityGame

__all__ = ["RandomConfig", "gen_random", "gen_one_player", "game_rng"]


@dataclass(frozen=True)
class RandomConfig:
    """``xx`` nodes, colours from ``{0..yy}``, out-degrees in ``[aa, bb]``.

    ``inclusive_colors=False`` draws colours from ``{0..yy-1}`` instead (the
    alternative reading of "yy colours").  ``self_loops=True`` lets a node
    draw itself as a successor.
    """

    xx: int
    yy: int
    aa: int
    bb: int
    inclusive_colors: bool = True
    self_loops: bool = False

    def __post_init__(self):
        limit = self.xx if self.self_loops else self.xx - 1
        if not 1 <= self.aa <= self.bb <= limit:
            raise ValueError(f"need 1 <= aa <= bb <= xx, got {self}")
        if self.yy < (0 if self.inclusive_colors else 1):
            raise ValueError(f"invalid colour bound yy={self.yy}")

    @classmethod
    def parse(cls, text: str, inclusive_colors: bool = True, self_loops: bool = False) -> "RandomConfig":
        parts = text.split("-")
        if len(parts) != 4:
            raise ValueError(f"expected xx-yy-aa-bb, got {text!r}")
        xx, yy, aa, bb = (int(t) for t in parts)
        return cls(xx, yy, aa, bb, inclusive_colors, self_loops)

    @property
    def max_color(self) -> int:
        return self.yy if self.inclusive_colors else self.yy - 1

    def __str__(self) -> str:
        return f"{self.xx}-{self.yy}-{self.aa}-{self.bb}"


def game_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _draw(cfg: RandomConfig, seed: int, owner_of=None) -> ParityGame:
    rng = game_rng(seed)
    n = cfg.xx
    owner = rng.integers(0, 2, size=n)
    color = rng.integers(0, cfg.max_color + 1, size=n)
    degree = rng.integers(cfg.aa, cfg.bb + 1, size=n)
    # row-wise random permutations; a prefix is a draw without replacement
    keys = rng.random((n, n))
    if not cfg.self_loops:
        np.fill_diagonal(keys, 2.0)  # sorts last, never inside a prefix
    order = np.argsort(keys, axis=1)
    succ = [sorted(order[v, : degree[v]].tolist()) for v in range(n)]
    if owner_of is not None:
        owner = [owner_of] * n
    else:
        owner = owner.tolist()
    return ParityGame._raw(tuple(owner), tuple(color.tolist()), tuple(tuple(r) for r in succ))


def gen_random(cfg: RandomConfig, seed: int) -> ParityGame:
    """Owners uniform on {0,1}, colours uniform on ``{0..yy}``, out-degree
    uniform on ``{aa..bb}``, successors uniform without replacement from all
    other nodes (or all nodes with ``cfg.self_loops``)."""
    return _draw(cfg, seed)


def gen_one_player(cfg: RandomConfig, seed: int, p: int) -> ParityGame:
    return _draw(cfg, seed, owner_of=p)
