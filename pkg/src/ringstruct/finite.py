"""Finite rings as explicit addition and multiplication tables.

Tables are validated exhaustively at load (abelian group axioms,
associativity, distributivity) with vectorized index arithmetic; all other
routines are brute force by design, since they serve as the independent
oracle against the exact-linear-algebra engine.  Exhaustive routines are
capped at order 256.
"""

from __future__ import annotations

from typing import FrozenSet, List, Optional, Sequence, Set

import numpy as np

from .errors import InvalidParams, ValidationError

ORDER_CAP = 256
IDEAL_ENUM_CAP = 64


class FiniteRing:
    """A finite ring given by order-by-order addition and multiplication tables."""

    __slots__ = ("name", "order", "zero", "add", "mul", "_neg")

    def __init__(self, name: str, add_table: Sequence[Sequence[int]], mul_table, zero: int = 0):
        self.name = name
        add = np.asarray(add_table, dtype=np.int64)
        mul = np.asarray(mul_table, dtype=np.int64)
        n = add.shape[0]
        if n > ORDER_CAP:
            raise InvalidParams(f"finite ring order {n} exceeds cap {ORDER_CAP}")
        if add.shape != (n, n) or mul.shape != (n, n):
            raise ValidationError("tables must be square and of equal order")
        if not (0 <= zero < n):
            raise ValidationError("zero index out of range")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise ValidationError("table entries out of range")
        self.order = int(n)
        self.zero = int(zero)
        self.add = add
        self.mul = mul
        self._validate()
        self._neg = self._negation_table()

    def _validate(self):
        n, add, mul, zero = self.order, self.add, self.mul, self.zero
        idx = np.arange(n)
        # additive identity and commutativity
        if not np.array_equal(add[zero], idx) or not np.array_equal(add[:, zero], idx):
            raise ValidationError("zero is not an additive identity")
        if not np.array_equal(add, add.T):
            raise ValidationError("addition is not commutative")
        # additive inverses: each row of add must contain zero
        if not np.all((add == zero).any(axis=1)):
            raise ValidationError("some element has no additive inverse")
        # associativity of + : add[add[i,j],k] == add[i,add[j,k]]
        if not np.array_equal(add[add, :], add[:, add]):
            raise ValidationError("addition is not associative")
        # associativity of * :
        if not np.array_equal(mul[mul, :], mul[:, mul]):
            raise ValidationError("multiplication is not associative")
        # distributivity: i*(j+k) == i*j + i*k and (i+j)*k == i*k + j*k
        left = mul[:, add]  # [i, j, k] -> i*(j+k)
        right = add[mul[:, :, None], mul[:, None, :]]  # [i, j, k] -> (i*j)+(i*k)
        if not np.array_equal(left, right):
            raise ValidationError("left distributivity fails")
        left2 = mul[add, :]  # [i, j, k] -> (i+j)*k
        right2 = add[mul[:, None, :], mul[None, :, :]]  # [i, j, k] -> (i*k)+(j*k)
        if not np.array_equal(left2, right2):
            raise ValidationError("right distributivity fails")

    def _negation_table(self):
        neg = np.argmax(self.add == self.zero, axis=1)
        return neg

    def neg(self, x: int) -> int:
        return int(self._neg[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg(y)])

    def nsmul(self, n: int, x: int) -> int:
        """n-fold additive multiple of x."""
        acc = self.zero
        for _ in range(n):
            acc = int(self.add[acc, x])
        return acc

    def elements(self) -> range:
        return range(self.order)

    def unity(self) -> Optional[int]:
        for u in range(self.order):
            if np.array_equal(self.mul[u], np.arange(self.order)) and np.array_equal(
                self.mul[:, u], np.arange(self.order)
            ):
                return u
        return None

    def additive_order(self, x: int) -> int:
        acc = x
        k = 1
        while acc != self.zero:
            acc = int(self.add[acc, x])
            k += 1
        return k

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"


# -- the definitional radical oracle ------------------------------------------


def jacobson_definitional(ring: FiniteRing) -> FrozenSet[int]:
    """Brute-force the quasi-regularity formula.

    J = { a : for every r there is b with b r a - r a - b = 0 }, evaluated
    by exhausting all (a, r, b) triples; the result is verified to be a
    two-sided ideal.
    """
    n = ring.order
    mul, add, neg = ring.mul, ring.add, ring._neg
    members = []
    b_idx = np.arange(n)
    for a in range(n):
        ra = mul[:, a]  # r -> r*a
        # bra[b, r] = b * (r*a)
        bra = mul[:, ra]
        expr = add[add[bra, neg[ra][None, :]], neg[b_idx][:, None]]
        if np.all((expr == ring.zero).any(axis=0)):
            members.append(a)
    result = frozenset(members)
    if not is_ideal(ring, result):
        raise ValidationError("definitional radical is not an ideal; tables are inconsistent")
    return result


def is_subgroup(ring: FiniteRing, subset: FrozenSet[int]) -> bool:
    if ring.zero not in subset:
        return False
    return all(int(ring.add[x, y]) in subset for x in subset for y in subset)


def is_ideal(ring: FiniteRing, subset: FrozenSet[int]) -> bool:
    if not is_subgroup(ring, subset):
        return False
    for x in subset:
        for r in ring.elements():
            if int(ring.mul[x, r]) not in subset or int(ring.mul[r, x]) not in subset:
                return False
    return True


def subset_closure(ring: FiniteRing, seed: Set[int]) -> FrozenSet[int]:
    """Smallest ideal containing the seed."""
    current = set(seed) | {ring.zero}
    frontier = list(current)
    while frontier:
        x = frontier.pop()
        new = set()
        for y in current:
            new.add(int(ring.add[x, y]))
        new.add(ring.neg(x))
        for r in ring.elements():
            new.add(int(ring.mul[x, r]))
            new.add(int(ring.mul[r, x]))
        for z in new:
            if z not in current:
                current.add(z)
                frontier.append(z)
    # another pass to close sums of everything (cheap at these orders)
    changed = True
    while changed:
        changed = False
        for x in list(current):
            for y in list(current):
                s = int(ring.add[x, y])
                if s not in current:
                    current.add(s)
                    changed = True
    return frozenset(current)


def all_ideals(ring: FiniteRing) -> List[FrozenSet[int]]:
    """Every ideal, as the join-closure of the principal ideals."""
    if ring.order > IDEAL_ENUM_CAP:
        raise InvalidParams(f"ideal enumeration capped at order {IDEAL_ENUM_CAP}")
    principals = {subset_closure(ring, {x}) for x in ring.elements()}
    ideals = set(principals)
    ideals.add(frozenset({ring.zero}))
    changed = True
    while changed:
        changed = False
        current = list(ideals)
        for a in current:
            for b in principals:
                joined = subset_closure(ring, set(a) | set(b))
                if joined not in ideals:
                    ideals.add(joined)
                    changed = True
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def subset_is_nilpotent(ring: FiniteRing, subset: FrozenSet[int]) -> bool:
    current = set(subset)
    for _ in range(ring.order + 1):
        if current == {ring.zero}:
            return True
        nxt = {int(ring.mul[x, y]) for x in subset for y in current}
        nxt.add(ring.zero)
        if nxt == current:
            return False
        current = nxt
    return current == {ring.zero}


def largest_nilpotent_ideal(ring: FiniteRing) -> FrozenSet[int]:
    """Sum of all nilpotent ideals, by exhaustive ideal enumeration."""
    total: Set[int] = {ring.zero}
    for ideal in all_ideals(ring):
        if subset_is_nilpotent(ring, ideal):
            total |= set(ideal)
    result = subset_closure(ring, total)
    if not subset_is_nilpotent(ring, result):
        raise ValidationError("sum of nilpotent ideals failed nilpotency")
    return result


# -- exhaustive structure record ----------------------------------------------


class FiniteStructure:
    """Everything about a finite ring, by enumeration."""

    __slots__ = (
        "nilpotent",
        "nil",
        "nilpotency_index",
        "idempotents",
        "units",
        "zero_divisors",
        "jacobson",
        "is_reduced",
        "unity",
    )

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])


def element_nilpotent(ring: FiniteRing, x: int) -> bool:
    power = x
    seen = set()
    while power not in seen:
        if power == ring.zero:
            return True
        seen.add(power)
        power = int(ring.mul[power, x])
    return power == ring.zero


def ring_nilpotency_index(ring: FiniteRing) -> Optional[int]:
    """Least k with all k-fold products zero, or None."""
    current = set(ring.elements())
    for k in range(1, ring.order + 2):
        if current == {ring.zero}:
            return k
        current = {int(ring.mul[x, y]) for x in ring.elements() for y in current}
        current.add(ring.zero)
    return None


def finite_structure(ring: FiniteRing) -> FiniteStructure:
    n = ring.order
    unity = ring.unity()
    idempotents = sorted(x for x in range(n) if int(ring.mul[x, x]) == x)
    units: List[int] = []
    if unity is not None:
        for x in range(n):
            if any(
                int(ring.mul[x, y]) == unity and int(ring.mul[y, x]) == unity for y in range(n)
            ):
                units.append(x)
    zero_divisors = []
    for x in range(n):
        if x == ring.zero:
            continue
        if any(
            (int(ring.mul[x, y]) == ring.zero or int(ring.mul[y, x]) == ring.zero)
            for y in range(n)
            if y != ring.zero
        ):
            zero_divisors.append(x)
    nil = all(element_nilpotent(ring, x) for x in range(n))
    index = ring_nilpotency_index(ring)
    reduced = all(int(ring.mul[x, x]) != ring.zero for x in range(n) if x != ring.zero)
    return FiniteStructure(
        nilpotent=index is not None,
        nil=nil,
        nilpotency_index=index,
        idempotents=idempotents,
        units=sorted(units),
        zero_divisors=sorted(zero_divisors),
        jacobson=jacobson_definitional(ring),
        is_reduced=reduced,
        unity=unity,
    )


# -- constructors -----------------------------------------------------------


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise InvalidParams("zmod requires n >= 1")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(f"Z{n}", add, mul, zero=0)


def _tuple_ring(name, elems, add_fn, mul_fn, zero_elem) -> FiniteRing:
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    add = [[index[add_fn(a, b)] for b in elems] for a in elems]
    mul = [[index[mul_fn(a, b)] for b in elems] for a in elems]
    return FiniteRing(name, add, mul, zero=index[zero_elem])


def matrix_ring_zp(n: int, p: int) -> FiniteRing:
    """M_n(Z/p) as tables; order p^(n^2)."""
    if p < 2 or n < 1:
        raise InvalidParams("matrix_ring_zp requires n >= 1, p >= 2")
    if p ** (n * n) > ORDER_CAP:
        raise InvalidParams("matrix ring too large for table form")
    from itertools import product

    elems = [tuple(m) for m in product(range(p), repeat=n * n)]

    def add_fn(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul_fn(a, b):
        out = []
        for i in range(n):
            for j in range(n):
                out.append(sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p)
        return tuple(out)

    zero = tuple([0] * (n * n))
    return _tuple_ring(f"M{n}(Z{p})", elems, add_fn, mul_fn, zero)


def strictly_upper_zp(n: int, p: int) -> FiniteRing:
    """Strictly upper triangular n x n matrices over Z/p; a nilpotent ring."""
    if p < 2 or n < 2:
        raise InvalidParams("strictly_upper_zp requires n >= 2, p >= 2")
    from itertools import product

    slots = [(i, j) for i in range(n) for j in range(n) if i < j]
    if p ** len(slots) > ORDER_CAP:
        raise InvalidParams("ring too large for table form")
    elems = [tuple(m) for m in product(range(p), repeat=len(slots))]
    pos = {s: k for k, s in enumerate(slots)}

    def add_fn(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul_fn(a, b):
        out = [0] * len(slots)
        for (i, j), k in pos.items():
            total = 0
            for m in range(i + 1, j):
                total += a[pos[(i, m)]] * b[pos[(m, j)]]
            out[k] = total % p
        return tuple(out)

    zero = tuple([0] * len(slots))
    return _tuple_ring(f"T{n}(Z{p})", elems, add_fn, mul_fn, zero)


def finite_product(a: FiniteRing, b: FiniteRing) -> FiniteRing:
    if a.order * b.order > ORDER_CAP:
        raise InvalidParams("product ring too large")
    elems = [(x, y) for x in a.elements() for y in b.elements()]

    def add_fn(u, v):
        return (int(a.add[u[0], v[0]]), int(b.add[u[1], v[1]]))

    def mul_fn(u, v):
        return (int(a.mul[u[0], v[0]]), int(b.mul[u[1], v[1]]))

    return _tuple_ring(f"{a.name}x{b.name}", elems, add_fn, mul_fn, (a.zero, b.zero))
