"""Exact coefficient rings and integer Smith normal form.

Supported base rings: the integers Z, the rationals Q, the modular rings
Z/n for n >= 2 (composite n is legal), and prime fields F_p.  Ring elements
are plain Python values kept in canonical form: ints for Z, ``Fraction``
for Q, and residues in ``[0, n)`` for Z/n and F_p.  A ``RingSpec`` carries
the arithmetic and never wraps the values, so equality of elements is
ordinary equality of canonical representatives.

All integer arithmetic is unbounded; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_KINDS = ("Z", "Q", "Zmod", "Fp")

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """One of Z, Q, Z/n, F_p.  ``modulus`` is n (resp. p) and 0 for Z, Q."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus < 2:
                raise ValueError("Zmod modulus must be >= 2")
        elif self.kind == "Fp":
            if not is_prime(self.modulus):
                raise ValueError(f"Fp modulus {self.modulus} is not prime")
        elif self.modulus != 0:
            raise ValueError(f"{self.kind} takes no modulus")

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls("Z")

    @classmethod
    def rationals(cls) -> "RingSpec":
        return cls("Q")

    @classmethod
    def integers_mod(cls, n: int) -> "RingSpec":
        return cls("Zmod", n)

    @classmethod
    def prime_field(cls, p: int) -> "RingSpec":
        return cls("Fp", p)

    def characteristic(self) -> int:
        """0 for Z and Q, n for Z/n, p for F_p."""
        return self.modulus

    def is_field(self) -> bool:
        return self.kind in ("Q", "Fp")

    def normalize(self, value):
        """Canonical representative of ``value`` in this ring."""
        if isinstance(value, Fraction):
            if self.kind == "Q":
                return value
            if value.denominator != 1:
                raise TypeError(f"{value} is not an element of {self}")
            value = value.numerator
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {type(value).__name__} into {self}")
        if self.kind == "Q":
            return Fraction(value)
        if self.kind == "Z":
            return value
        return value % self.modulus

    def from_int(self, k: int):
        return self.normalize(int(k))

    def zero(self):
        return self.normalize(0)

    def one(self):
        return self.normalize(1)

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def legal_annihilator(self, a: int) -> bool:
        """Whether ``a`` may annihilate a cyclic summand over this ring.

        0 always means a free summand.  Over Z/n the annihilator must
        divide n; over a field only 0 is allowed.
        """
        if not isinstance(a, int) or a < 0:
            return False
        if a == 0:
            return True
        if self.is_field() or self.kind == "Q":
            return False
        if self.kind == "Zmod":
            return self.modulus % a == 0
        return True  # Z

    def format(self, value) -> str:
        return str(self.normalize(value))

    def __str__(self):
        if self.kind in ("Zmod", "Fp"):
            return f"{self.kind} {self.modulus}"
        return self.kind


@dataclass(frozen=True)
class SnfResult:
    """U * M * V = D with U, V unimodular and D in Smith normal form.

    The diagonal entries of D are nonnegative and each divides the next;
    zeros come last.  ``factors`` lists the diagonal of D.
    """

    U: tuple
    D: tuple
    V: tuple

    @property
    def factors(self) -> tuple:
        return tuple(
            self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))
        )


def _identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def smith_normal_form(matrix) -> SnfResult:
    """Smith normal form of an integer matrix, with the transforms.

    Works on any rectangular matrix, including empty ones.  Pure integer
    row and column operations; the same operations are mirrored onto U
    (rows) and V (columns), so U * matrix * V equals the returned D.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("matrix rows have unequal lengths")
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row i += q * row j
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, q):
        # col i += q * col j
        for row in A:
            row[i] += q * row[j]
        for row in V:
            row[i] += q * row[j]

    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            i = next((r for r in range(t + 1, m) if A[r][t]), None)
            if i is not None:
                q = A[i][t] // A[t][t]
                add_row(i, t, -q)
                if A[i][t]:
                    swap_rows(t, i)
                continue
            j = next((c for c in range(t + 1, n) if A[t][c]), None)
            if j is not None:
                q = A[t][j] // A[t][t]
                add_col(j, t, -q)
                if A[t][j]:
                    swap_cols(t, j)
                continue
            # pivot divides everything that remains, or gets fixed up
            p = A[t][t]
            bad = next(
                (
                    (i2, j2)
                    for i2 in range(t + 1, m)
                    for j2 in range(t + 1, n)
                    if A[i2][j2] % p
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1

    freeze = lambda M: tuple(tuple(row) for row in M)
    return SnfResult(U=freeze(U), D=freeze(A), V=freeze(V))
