"""Monomial orders.

Each order exposes ``key(exponents) -> sortable`` so that larger keys mean
larger monomials.  All orders here are global (every variable exceeds 1),
which is what the division algorithm and the dimension-by-initial-ideal
argument require.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Grevlex:
    """Graded reverse lexicographic order."""

    name = "grevlex"

    def key(self, e: tuple[int, ...]):
        return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class Lex:
    """Pure lexicographic order."""

    name = "lex"

    def key(self, e: tuple[int, ...]):
        return e


@dataclass(frozen=True)
class Block:
    """Elimination order: lex on the first ``split`` variables, grevlex after.

    Any monomial containing a block-1 variable exceeds every monomial that is
    free of them, so the order eliminates the first block.
    """

    split: int

    @property
    def name(self) -> str:
        return f"block({self.split})"

    def key(self, e: tuple[int, ...]):
        head, tail = e[: self.split], e[self.split :]
        return (head, (sum(tail), tuple(-x for x in reversed(tail))))


@dataclass(frozen=True)
class Weighted:
    """Weight-graded order: total weight first, grevlex tie break.

    The weight vector must be componentwise nonnegative with at least one
    strictly positive entry per variable unless a zero-weight variable is
    acceptable; we additionally grade by total degree before the grevlex
    tiebreak so the order stays global even with zero weights.
    """

    weights: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"weighted{self.weights}"

    def key(self, e: tuple[int, ...]):
        w = sum(wi * ei for wi, ei in zip(self.weights, e))
        return (w, sum(e), tuple(-x for x in reversed(e)))


GREVLEX = Grevlex()
LEX = Lex()
