"""Connected graded coalgebras presented on module generators.

A presentation stores, for each generator x, the reduced coproduct
Dbar(x) = sum c_i * y_i (x) z_i with y_i, z_i generators of positive
degree adding up to deg x.  The full coproduct is then
D(x) = x (x) 1 + Dbar(x) + 1 (x) x, and D(1) = 1 (x) 1.

Checks here stay at the level of the presentation: coassociativity and
the counit laws are verified on generators (which suffices, the rest of
the coalgebra is not in play until the cogroup layer), and
cocommutativity is invariance of Dbar under the signed twist
y (x) z -> (-1)^{|y||z|} z (x) y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .modules import GradedModulePresentation


@dataclass
class AxiomReport:
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"ok ({self.checked} checks)"
        lines = "\n  ".join(self.violations)
        return f"{len(self.violations)} violation(s) in {self.checked} checks:\n  {lines}"


class CoalgebraPresentation:
    """Module plus reduced-coproduct table; the table is normalized on build."""

    def __init__(self, module: GradedModulePresentation, table: dict | None = None):
        self.module = module
        self.ring = module.ring
        normalized: dict = {}
        for name, entries in (table or {}).items():
            x = module.generator(name)  # raises KeyError on unknown names
            combined: dict = {}
            for c, y, z in entries:
                gy = module.generator(y)
                gz = module.generator(z)
                if gy.degree + gz.degree != x.degree:
                    raise ValueError(
                        f"coproduct of {name}: term {y}(x){z} has degree "
                        f"{gy.degree + gz.degree}, expected {x.degree}"
                    )
                combined[(y, z)] = combined.get((y, z), 0) + int(c)
            terms = []
            for (y, z), c in combined.items():
                m = self._pair_modulus(y, z)
                c = int(c) % m if m else int(c)
                if not c:
                    continue
                a = x.annihilator
                if a and ((a * c) % m if m else a * c):
                    raise ValueError(
                        f"coproduct of {name}: coefficient {c} at {y}(x){z} is not "
                        f"compatible with annihilator {a}"
                    )
                terms.append((c, y, z))
            if terms:
                order = {n: i for i, n in enumerate(module.names())}
                terms.sort(key=lambda t: (order[t[1]], order[t[2]]))
                normalized[name] = tuple(terms)
        self.table = normalized

    def _pair_modulus(self, y: str, z: str) -> int:
        m = self.ring.characteristic()
        m = gcd(m, self.module.generator(y).annihilator)
        return gcd(m, self.module.generator(z).annihilator)

    def reduced_coproduct(self, name: str):
        self.module.generator(name)
        return self.table.get(name, ())

    def is_primitive(self, name: str) -> bool:
        return not self.reduced_coproduct(name)

    def __eq__(self, other):
        return (
            isinstance(other, CoalgebraPresentation)
            and self.module == other.module
            and self.table == other.table
        )

    def __repr__(self):
        return f"CoalgebraPresentation({self.module.ring}, {len(self.module.generators)} generators)"


def trivial_coalgebra(module: GradedModulePresentation) -> CoalgebraPresentation:
    """Every generator primitive: D(x) = x (x) 1 + 1 (x) x."""
    return CoalgebraPresentation(module, {})


def _delta_full(C: CoalgebraPresentation, key):
    """Full coproduct of a generator (or of 1, keyed by None)."""
    if key is None:
        return ((1, None, None),)
    out = [(1, key, None), (1, None, key)]
    out.extend(C.reduced_coproduct(key))
    return out


def _slot_modulus(C: CoalgebraPresentation, keys) -> int:
    m = C.ring.characteristic()
    for k in keys:
        if k is not None:
            m = gcd(m, C.module.generator(k).annihilator)
    return m


def _reduce_multi(C, table: dict) -> dict:
    out = {}
    for keys, c in table.items():
        m = _slot_modulus(C, keys)
        c = c % m if m else c
        if c:
            out[keys] = c
    return out


def check_coalgebra_axioms(C: CoalgebraPresentation, truncation: int) -> AxiomReport:
    """Coassociativity and counit laws on all generators of degree <= truncation.

    Failures are reported, not raised.
    """
    checked = 0
    violations = []
    for g in C.module.generators:
        if g.degree > truncation:
            continue
        x = g.name
        checked += 1
        left: dict = {}
        right: dict = {}
        for c, a, b in _delta_full(C, x):
            for c2, u, v in _delta_full(C, a):
                key = (u, v, b)
                left[key] = left.get(key, 0) + c * c2
            for c2, u, v in _delta_full(C, b):
                key = (a, u, v)
                right[key] = right.get(key, 0) + c * c2
        if _reduce_multi(C, left) != _reduce_multi(C, right):
            violations.append(f"coassociativity fails on {x}")
        # counit laws: contract the unit slot of D(x)
        lcounit: dict = {}
        rcounit: dict = {}
        for c, a, b in _delta_full(C, x):
            if a is None:
                lcounit[(b,)] = lcounit.get((b,), 0) + c
            if b is None:
                rcounit[(a,)] = rcounit.get((a,), 0) + c
        want = _reduce_multi(C, {(x,): 1})
        if _reduce_multi(C, lcounit) != want:
            violations.append(f"left counit law fails on {x}")
        if _reduce_multi(C, rcounit) != want:
            violations.append(f"right counit law fails on {x}")
    return AxiomReport(checked, violations)


def is_cocommutative(C: CoalgebraPresentation) -> bool:
    """Invariance of every reduced coproduct under the signed twist."""
    for g in C.module.generators:
        table: dict = {}
        twisted: dict = {}
        for c, y, z in C.reduced_coproduct(g.name):
            table[(y, z)] = table.get((y, z), 0) + c
            dy = C.module.degree_of(y)
            dz = C.module.degree_of(z)
            s = -c if (dy * dz) % 2 else c
            twisted[(z, y)] = twisted.get((z, y), 0) + s
        if _reduce_multi(C, table) != _reduce_multi(C, twisted):
            return False
    return True
