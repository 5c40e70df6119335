"""Finite groups over dense element indices 0..order-1, identity at index 0.

Three constructions are supported: cyclic groups (addition mod n), direct
products of cyclic p-groups (componentwise addition on mixed-radix tuples,
least-significant component first), and arbitrary groups given by a
validated Cayley table.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from pglab.numtheory import is_prime

__all__ = [
    "AbelianPGroup",
    "CayleyTableError",
    "CyclicGroup",
    "FiniteGroup",
    "TableGroup",
    "build_abelian_p",
    "build_cyclic",
    "cyclic_subgroup",
    "element_order",
    "parse_cayley_table",
]

DEFAULT_TABLE_CAP = 512


class CayleyTableError(ValueError):
    """Cayley-table text does not describe a group; message names the cell."""


class FiniteGroup:
    """Base class: immutable finite group on indices 0..order-1."""

    order: int
    identity: int = 0

    def op(self, a: int, b: int) -> int:
        raise NotImplementedError

    def label(self, x: int) -> str:
        raise NotImplementedError

    def __len__(self) -> int:
        return self.order


class CyclicGroup(FiniteGroup):
    """Additive group of integers modulo n; element i is the residue i."""

    def __init__(self, n: int):
        self.order = n

    def op(self, a: int, b: int) -> int:
        return (a + b) % self.order

    def label(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"CyclicGroup({self.order})"


class AbelianPGroup(FiniteGroup):
    """Direct product of cyclic groups of orders p**a_1, ..., p**a_r.

    Elements are mixed-radix encoded with the least-significant component
    first: index x decodes to (x % o_1, (x // o_1) % o_2, ...).
    """

    def __init__(self, p: int, exponents: tuple[int, ...]):
        self.p = p
        self.exponents = tuple(exponents)
        self.component_orders = tuple(p**a for a in self.exponents)
        order = 1
        for o in self.component_orders:
            order *= o
        self.order = order

    def decode(self, x: int) -> tuple[int, ...]:
        t = []
        for o in self.component_orders:
            t.append(x % o)
            x //= o
        return tuple(t)

    def encode(self, t: tuple[int, ...]) -> int:
        x = 0
        for c, o in zip(reversed(t), reversed(self.component_orders)):
            x = x * o + c
        return x

    def op(self, a: int, b: int) -> int:
        ta, tb = self.decode(a), self.decode(b)
        return self.encode(
            tuple((u + v) % o for u, v, o in zip(ta, tb, self.component_orders))
        )

    def label(self, x: int) -> str:
        return "(" + ",".join(map(str, self.decode(x))) + ")"

    def __repr__(self) -> str:
        return f"AbelianPGroup(p={self.p}, exponents={list(self.exponents)})"


class TableGroup(FiniteGroup):
    """Group defined by an explicit Cayley table (validated at parse time)."""

    def __init__(self, table: np.ndarray):
        self.table = table
        self.order = len(table)

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"TableGroup(order={self.order})"


def build_cyclic(n: int) -> CyclicGroup:
    """Cyclic group of order n >= 1 with op (i + j) mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    return CyclicGroup(n)


def build_abelian_p(p: int, exponents: list[int] | tuple[int, ...]) -> AbelianPGroup:
    """Direct product Z_{p^a_1} x ... x Z_{p^a_r} for a prime p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    exps = tuple(exponents)
    if not exps:
        raise ValueError("exponent list must be nonempty")
    if any(a < 1 for a in exps):
        raise ValueError(f"exponents must all be >= 1, got {list(exps)}")
    return AbelianPGroup(p, exps)


def parse_cayley_table(text: str, max_order: int = DEFAULT_TABLE_CAP) -> TableGroup:
    """Parse and exhaustively validate a Cayley table.

    Format: first line is the order n, then n lines of n whitespace-separated
    integers in 0..n-1, where line i column j holds i∘j. Element 0 must be
    the identity. Validation checks the value range, the identity row and
    column, associativity over all triples, and existence of inverses;
    each failure reports the offending cell.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CayleyTableError("empty input: first line must be the group order")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise CayleyTableError(f"first line must be the group order, got {lines[0]!r}") from None
    if n < 1:
        raise CayleyTableError(f"group order must be >= 1, got {n}")
    if n > max_order:
        raise CayleyTableError(f"order {n} exceeds the table cap {max_order}")
    if len(lines) - 1 != n:
        raise CayleyTableError(f"expected {n} table rows, got {len(lines) - 1}")

    table = np.empty((n, n), dtype=np.int64)
    for i, ln in enumerate(lines[1:]):
        tokens = ln.split()
        if len(tokens) != n:
            raise CayleyTableError(f"row {i} has {len(tokens)} entries, expected {n}")
        for j, tok in enumerate(tokens):
            try:
                v = int(tok)
            except ValueError:
                raise CayleyTableError(f"cell ({i},{j}) is not an integer: {tok!r}") from None
            if not 0 <= v < n:
                raise CayleyTableError(f"cell ({i},{j}) value {v} out of range 0..{n - 1}")
            table[i, j] = v

    for j in range(n):
        if table[0, j] != j:
            raise CayleyTableError(f"identity row mismatch at cell (0,{j}): 0∘{j} = {table[0, j]}, expected {j}")
    for i in range(n):
        if table[i, 0] != i:
            raise CayleyTableError(f"identity column mismatch at cell ({i},0): {i}∘0 = {table[i, 0]}, expected {i}")

    # (i∘j)∘k vs i∘(j∘k), vectorized one i-slice at a time to bound memory.
    for i in range(n):
        left = table[table[i], :]
        right = table[i][table]
        if not np.array_equal(left, right):
            j, k = map(int, np.argwhere(left != right)[0])
            raise CayleyTableError(
                f"associativity fails at ({i},{j},{k}): "
                f"({i}∘{j})∘{k} = {int(left[j, k])} but {i}∘({j}∘{k}) = {int(right[j, k])}"
            )

    has_inverse = (table == 0).any(axis=1)
    if not has_inverse.all():
        i = int(np.argmin(has_inverse))
        raise CayleyTableError(f"missing inverse for element {i}: row {i} never reaches the identity")

    return TableGroup(table)


def element_order(group: FiniteGroup, x: int) -> int:
    """Least k >= 1 with k-fold composition of x equal to the identity."""
    if not 0 <= x < group.order:
        raise ValueError(f"element {x} out of range for group of order {group.order}")
    cur = x
    k = 1
    op = group.op
    while cur != group.identity:
        cur = op(cur, x)
        k += 1
    return k


def cyclic_subgroup(group: FiniteGroup, x: int) -> set[int]:
    """The cyclic subgroup generated by x, as a set of element indices."""
    if not 0 <= x < group.order:
        raise ValueError(f"element {x} out of range for group of order {group.order}")
    members = {group.identity}
    cur = x
    op = group.op
    while cur != group.identity:
        members.add(cur)
        cur = op(cur, x)
    return members
