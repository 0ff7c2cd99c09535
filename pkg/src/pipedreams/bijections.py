"""Catalan bijections on pipe dreams for the zigzag permutation.

A filling for the zigzag of n has exactly n elbows off the anti-diagonal.
Collecting (row - 1) over those elbows gives the conjugate of a partition
inside the staircase, and the inverse rebuilds the filling from the bottom
one with inverse chute moves.  The same elbows also emit one bracket pair
each, which parses the string 1 .. n+1 as a full binary product; reflecting
the filling across its diagonal reverses the bracketing, equivalently flips
the parse tree.  Partitions convert to Dyck paths so the area statistic can
travel along.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .catalan import Partition, fits_staircase
from .perm import zigzag
from .rcgraph import NotZigzagError, RcGraph, bottom_rcgraph, inverse_chute_move


class PartitionBoundsError(ValueError):
    """The partition does not fit inside the staircase."""


class MalformedPathError(ValueError):
    """Not a lattice path from (0,0) to (n,n) weakly above the diagonal."""


class MalformedBracketingError(ValueError):
    """Not a proper full binary bracketing with matching pairs."""


def _zigzag_index(d: RcGraph) -> int:
    n = d.m - 1
    if d.permutation() != zigzag(n):
        raise NotZigzagError(
            f"not a filling for the zigzag permutation of S_{d.m}"
        )
    return n


# -- partitions --------------------------------------------------------------


def partition_of(d: RcGraph) -> Partition:
    """The partition whose conjugate collects row - 1 over the elbows off
    the anti-diagonal (row-one elbows contribute nothing)."""
    _zigzag_index(d)
    conj = Partition(tuple(sorted((i - 1 for i, _ in d.elbows() if i > 1),
                                  reverse=True)))
    return conj.conjugate()


def rcgraph_of(p: Partition, n: int) -> RcGraph:
    """Rebuild the filling with partition p from the bottom filling.

    For each part k of the conjugate, largest first, the rightmost cross of
    row k+1 that is not under a top-row cross is carried up to row one by an
    inverse chute move; every move has its four conditions checked."""
    if not fits_staircase(p, n):
        raise PartitionBoundsError(
            f"{p} does not fit inside the staircase of {n}"
        )
    d = bottom_rcgraph(n)
    for k in p.conjugate().parts:
        row = k + 1
        sources = [
            c
            for c in range(1, n + 1 - row + 1)
            if d.is_cross(row, c) and d.is_elbow(1, c)
        ]
        assert sources, "no movable cross left; the partition check should prevent this"
        src_col = max(sources)
        dst_col = min(c for c in range(src_col + 1, n + 2) if d.is_elbow(1, c))
        d = inverse_chute_move(d, (1, dst_col), (row, src_col))
    return d


# -- Dyck paths --------------------------------------------------------------


@dataclass(frozen=True)
class DyckPath:
    """A path of U and R steps from (0,0) to (n,n) staying weakly above the
    diagonal: every prefix has at least as many U steps as R steps."""

    steps: str

    def __post_init__(self) -> None:
        ups = downs = 0
        for ch in self.steps:
            if ch == "U":
                ups += 1
            elif ch == "R":
                downs += 1
                if downs > ups:
                    raise MalformedPathError(
                        f"path {self.steps!r} dips below the diagonal"
                    )
            else:
                raise MalformedPathError(
                    f"unexpected step {ch!r} in {self.steps!r}"
                )
        if ups != downs:
            raise MalformedPathError(
                f"path {self.steps!r} does not end on the diagonal"
            )

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def partition_to_dyck(p: Partition, n: int) -> DyckPath:
    """Encode a staircase partition as a Dyck path.

    The k-th right step runs at height n - p_k, so the cells strictly above
    the path and strictly above the diagonal form the diagram of p, and the
    cells below the path and strictly above the diagonal number
    binom(n, 2) - |p|.  Ties rise before stepping right.
    """
    if not fits_staircase(p, n):
        raise PartitionBoundsError(
            f"{p} does not fit inside the staircase of {n}"
        )
    steps: list[str] = []
    h = 0
    for k in range(1, n + 1):
        target = n - p.part(k)
        steps.append("U" * (target - h))
        steps.append("R")
        h = target
    steps.append("U" * (n - h))
    return DyckPath("".join(steps))


def dyck_to_partition(path: DyckPath) -> Partition:
    """Inverse of partition_to_dyck; the ambient n is the path's half-length."""
    n = path.n
    heights: list[int] = []
    h = 0
    for ch in path.steps:
        if ch == "U":
            h += 1
        else:
            heights.append(h)
    return Partition(tuple(n - hk for hk in heights if n - hk > 0))


# -- bracketings and trees ----------------------------------------------------


@dataclass(frozen=True)
class Bracketing:
    """A full binary bracketing of the letters 1 .. letters.

    ``pairs`` holds one (open, close) per bracket pair: the left bracket
    sits immediately before letter ``open`` and the right bracket
    immediately after letter ``close``.  When several brackets share a slot,
    left brackets are emitted outermost first (the pair closing latest) and
    right brackets innermost first (the pair opened latest); construction
    verifies that every pair then matches itself under a depth scan and that
    the whole string parses as a full binary product.
    """

    letters: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.letters < 1:
            raise MalformedBracketingError("need at least one letter")
        if len(self.pairs) != self.letters - 1:
            raise MalformedBracketingError(
                f"{len(self.pairs)} pairs cannot fully bracket "
                f"{self.letters} letters"
            )
        for o, c in self.pairs:
            if not (1 <= o <= c <= self.letters):
                raise MalformedBracketingError(
                    f"pair ({o}, {c}) is out of range"
                )
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        _parse_tokens(self._tokens(), self.letters)

    def _tokens(self) -> list[tuple[str, int]]:
        """Serialization order: ("open", pid) / ("letter", t) / ("close", pid)."""
        opens: dict[int, list[int]] = {}
        closes: dict[int, list[int]] = {}
        for pid, (o, c) in enumerate(self.pairs):
            opens.setdefault(o, []).append(pid)
            closes.setdefault(c, []).append(pid)
        toks: list[tuple[str, int]] = []
        for t in range(1, self.letters + 1):
            for pid in sorted(opens.get(t, ()), key=lambda p: (-self.pairs[p][1], p)):
                toks.append(("open", pid))
            toks.append(("letter", t))
            for pid in sorted(closes.get(t, ()), key=lambda p: (-self.pairs[p][0], -p)):
                toks.append(("close", pid))
        return toks

    def __str__(self) -> str:
        bits = []
        prev_letter = False
        for kind, value in self._tokens():
            if kind == "open":
                bits.append("(")
                prev_letter = False
            elif kind == "close":
                bits.append(")")
                prev_letter = False
            else:
                if prev_letter:
                    bits.append(" ")
                bits.append(str(value))
                prev_letter = True
        return "".join(bits)


@dataclass(frozen=True)
class BinaryTree:
    """A full binary tree whose leaves carry the letters 1 .. n+1 in order."""

    label: int | None = None
    left: BinaryTree | None = field(default=None)
    right: BinaryTree | None = field(default=None)

    def __post_init__(self) -> None:
        is_leaf = self.label is not None
        has_children = self.left is not None and self.right is not None
        if is_leaf == has_children or (self.left is None) != (self.right is None):
            raise ValueError("a node is either a labelled leaf or has two children")

    @classmethod
    def leaf(cls, label: int) -> BinaryTree:
        return cls(label=label)

    @classmethod
    def node(cls, left: BinaryTree, right: BinaryTree) -> BinaryTree:
        return cls(left=left, right=right)

    def is_leaf(self) -> bool:
        return self.label is not None

    def leaves(self) -> list[int]:
        if self.is_leaf():
            return [self.label]
        return self.left.leaves() + self.right.leaves()

    def to_nested(self):
        """Nested-list form, e.g. [1, [2, [3, 4]]]."""
        if self.is_leaf():
            return self.label
        return [self.left.to_nested(), self.right.to_nested()]

    @classmethod
    def from_nested(cls, obj) -> BinaryTree:
        if isinstance(obj, int):
            return cls.leaf(obj)
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return cls.node(cls.from_nested(obj[0]), cls.from_nested(obj[1]))
        raise ValueError(f"cannot read a binary tree from {obj!r}")


def _parse_tokens(toks: list[tuple[str, int]], letters: int) -> BinaryTree:
    """Parse tokens as expr := LETTER | '(' expr expr ')' with matching pairs."""
    pos = 0
    stack: list[int] = []

    def expr() -> BinaryTree:
        nonlocal pos
        if pos >= len(toks):
            raise MalformedBracketingError("unexpected end of bracketing")
        kind, value = toks[pos]
        if kind == "letter":
            pos += 1
            return BinaryTree.leaf(value)
        if kind == "open":
            stack.append(value)
            pos += 1
            left = expr()
            right = expr()
            if pos >= len(toks) or toks[pos][0] != "close":
                raise MalformedBracketingError(
                    "a bracket pair must enclose exactly two factors"
                )
            if toks[pos][1] != stack.pop():
                raise MalformedBracketingError(
                    f"bracket pair {toks[pos][1]} closes inside another pair"
                )
            pos += 1
            return BinaryTree.node(left, right)
        raise MalformedBracketingError("unmatched right bracket")

    tree = expr()
    if pos != len(toks):
        raise MalformedBracketingError("trailing tokens after a complete product")
    if tree.leaves() != list(range(1, letters + 1)):
        raise MalformedBracketingError("letters are not 1..n+1 in order")
    return tree


def bracketing_of(d: RcGraph) -> Bracketing:
    """One bracket pair per elbow off the anti-diagonal: the elbow at (i, j)
    opens before letter j and closes after letter n+2-i."""
    n = _zigzag_index(d)
    return Bracketing(
        n + 1, tuple(sorted((j, n + 2 - i) for i, j in d.elbows()))
    )


def reverse_bracketing(b: Bracketing) -> Bracketing:
    """Reverse the string together with its brackets (letters keep reading
    1 .. n+1; every pair (o, c) becomes (L+1-c, L+1-o))."""
    L = b.letters
    return Bracketing(L, tuple(sorted((L + 1 - c, L + 1 - o) for o, c in b.pairs)))


def tree_of(b: Bracketing) -> BinaryTree:
    """The parse tree of a bracketing; leaves are the letters in order."""
    return _parse_tokens(b._tokens(), b.letters)


def flip(t: BinaryTree) -> BinaryTree:
    """Mirror the tree left-to-right, then relabel leaves 1 .. n+1 in order.

    Involution; on bracketings it corresponds to reverse_bracketing.
    """

    def mirror(u: BinaryTree) -> BinaryTree:
        if u.is_leaf():
            return u
        return BinaryTree.node(mirror(u.right), mirror(u.left))

    labels = count(1)

    def relabel(u: BinaryTree) -> BinaryTree:
        if u.is_leaf():
            return BinaryTree.leaf(next(labels))
        return BinaryTree.node(relabel(u.left), relabel(u.right))

    return relabel(mirror(t))
