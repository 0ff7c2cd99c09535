"""Permutations of S_m in one-line notation, with 1-indexed positions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class NotAPermutationError(ValueError):
    """The word is not a rearrangement of 1..m."""


@dataclass(frozen=True)
class Permutation:
    """A permutation w of {1, ..., m} in one-line notation.

    ``word[i - 1]`` is w(i).  Instances are immutable and hashable, so they
    are safe to share freely and to use as dictionary keys.
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.word:
            raise NotAPermutationError("empty word")
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise NotAPermutationError(
                f"{list(self.word)} is not a rearrangement of 1..{len(self.word)}"
            )

    @property
    def size(self) -> int:
        """The m of the ambient symmetric group S_m."""
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of i, 1-indexed."""
        return self.word[i - 1]

    @cached_property
    def length(self) -> int:
        """Inversion count #{(i, j) : i < j, w(i) > w(j)}."""
        w = self.word
        n = len(w)
        return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

    def inverse(self) -> Permutation:
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition under the convention (u * w)(i) = u(w(i))."""
        if self.size != other.size:
            raise ValueError(
                f"size mismatch: cannot compose S_{self.size} with S_{other.size}"
            )
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse comma-separated one-line notation, e.g. ``"1,4,3,2"``."""
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise NotAPermutationError(
                f"cannot parse permutation from {text!r}"
            ) from None
        return cls(values)


def make_perm(word: Iterable[int]) -> Permutation:
    """Validate a word and wrap it as a Permutation."""
    return Permutation(tuple(word))


def identity(m: int) -> Permutation:
    return Permutation(tuple(range(1, m + 1)))


def longest_element(m: int) -> Permutation:
    """The permutation m, m-1, ..., 1."""
    return Permutation(tuple(range(m, 0, -1)))


def zigzag(n: int) -> Permutation:
    """The permutation 1, n+1, n, ..., 2 of S_{n+1}; it is its own inverse.

    n = 0 is accepted (the identity of S_1) so recursive decompositions
    have a base case.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Permutation((1,) + tuple(range(n + 1, 1, -1)))


def dominant_singular(n: int) -> Permutation:
    """The permutation n+2, 2, 3, ..., n+1, 1 of S_{n+2}."""
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation((n + 2,) + tuple(range(2, n + 2)) + (1,))


def multiply(u: Permutation, w: Permutation) -> Permutation:
    """Composition (u * w)(i) = u(w(i))."""
    return u * w


def embed(w: Permutation, m: int) -> Permutation:
    """Extend w with fixed points so that it lives in S_m."""
    if m < w.size:
        raise ValueError(f"cannot embed S_{w.size} into S_{m}")
    return Permutation(w.word + tuple(range(w.size + 1, m + 1)))


def local_equations_condition(w: Permutation) -> bool:
    """Whether every cell (i, j) with i + j > m, where m is the group size,
    satisfies (w0*w)^{-1}(i) <= j or (w0*w)(j) <= i, w0 the longest element.

    Both i and j range over 1..m.
    """
    m = w.size
    v = longest_element(m) * w
    vinv = v.inverse()
    for i in range(1, m + 1):
        for j in range(max(1, m + 1 - i), m + 1):
            if vinv(i) > j and v(j) > i:
                return False
    return True
