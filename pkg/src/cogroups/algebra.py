"""Truncated tensor algebras on presented graded modules.

The tensor algebra T(N) on a graded module N has, in each degree d, one
basis word for every sequence of generators whose degrees sum to d.  We
keep everything below a truncation degree D: products simply drop the
part above D, which is safe because every computation here is degreewise.

Elements are sparse dicts mapping words (tuples of generator names) to
coefficients.  The coefficient module of a word is R/(m) where m is the
gcd of the ring characteristic and the annihilators of the letters, so a
word mixing coprime torsion letters is identically zero; coefficients are
stored canonically modulo m.

Sign conventions: multiplication of simple tensors in the tensor square
follows the Koszul rule (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
Degree-preserving maps are applied to tensors slotwise without signs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .modules import GradedModulePresentation, CyclicGenerator, _merge_names


def format_word(word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


def _format_terms(items, fmt_key):
    """Render a sorted list of (key, coeff) pairs as a signed sum."""
    if not items:
        return "0"
    chunks = []
    for key, c in items:
        neg = c < 0
        mag = -c if neg else c
        body = fmt_key(key) if mag == 1 and key else str(mag) + ("*" + fmt_key(key) if key else "")
        if not key and mag == 1:
            body = "1"
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


class TruncatedTensorAlgebra:
    """T(N) kept up to a truncation degree."""

    def __init__(self, module: GradedModulePresentation, truncation: int):
        if truncation < 0:
            raise ValueError("truncation must be >= 0")
        self.module = module
        self.ring = module.ring
        self.truncation = truncation
        self._deg = {g.name: g.degree for g in module.generators}
        self._ann = {g.name: g.annihilator for g in module.generators}
        self._order = {g.name: i for i, g in enumerate(module.generators)}
        self._basis_cache: dict[int, list] = {}
        self._modulus_cache: dict[tuple, int] = {}

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedTensorAlgebra)
            and self.module == other.module
            and self.truncation == other.truncation
        )

    def __hash__(self):
        return hash((self.module, self.truncation))

    def __repr__(self):
        return f"TruncatedTensorAlgebra({self.module.ring}, D={self.truncation})"

    def word_degree(self, word) -> int:
        return sum(self._deg[l] for l in word)

    def word_modulus(self, word) -> int:
        """gcd of the ring characteristic and the letters' annihilators."""
        m = self._modulus_cache.get(word)
        if m is None:
            m = self.ring.characteristic()
            for l in word:
                m = gcd(m, self._ann[l])
            self._modulus_cache[word] = m
        return m

    def reduce(self, word, value):
        m = self.word_modulus(word)
        if m:
            if isinstance(value, Fraction):
                value = self.ring.normalize(value)
            return int(value) % m
        return self.ring.normalize(value)

    def basis(self, d: int) -> list:
        """All words of degree d, in a fixed order (first letter major)."""
        if d < 0 or d > self.truncation:
            return []
        cached = self._basis_cache.get(d)
        if cached is None:
            if d == 0:
                cached = [()]
            else:
                cached = [
                    (g.name,) + w
                    for g in self.module.generators
                    if g.degree <= d
                    for w in self.basis(d - g.degree)
                ]
            self._basis_cache[d] = cached
        return cached

    def words_up_to(self, dmax: int | None = None):
        top = self.truncation if dmax is None else min(dmax, self.truncation)
        for d in range(top + 1):
            yield from self.basis(d)

    def word_sort_key(self, word):
        return (self.word_degree(word), tuple(self._order[l] for l in word))

    def element(self, terms: dict) -> "AlgebraElement":
        for w in terms:
            for l in w:
                if l not in self._deg:
                    raise ValueError(f"unknown generator {l!r} in word")
        kept = {
            w: c for w, c in terms.items() if self.word_degree(w) <= self.truncation
        }
        return AlgebraElement(self, kept)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(): 1})

    def scalar(self, c) -> "AlgebraElement":
        return AlgebraElement(self, {(): c})

    def generator(self, name: str) -> "AlgebraElement":
        if name not in self._deg:
            raise KeyError(name)
        return self.element({(name,): 1})


class AlgebraElement:
    """Sparse element of a truncated tensor algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: TruncatedTensorAlgebra, terms: dict):
        self.algebra = algebra
        reduced = {}
        for w, c in terms.items():
            c = algebra.reduce(w, c)
            if c:
                reduced[w] = c
        self.terms = reduced

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra, tuple(sorted(self.terms.items()))))

    def coefficient(self, word):
        return self.terms.get(word, self.algebra.reduce(word, 0))

    def degrees(self) -> set:
        wd = self.algebra.word_degree
        return {wd(w) for w in self.terms}

    def is_homogeneous(self, d: int) -> bool:
        return all(dd == d for dd in self.degrees())

    def degree_part(self, d: int) -> "AlgebraElement":
        wd = self.algebra.word_degree
        return AlgebraElement(
            self.algebra, {w: c for w, c in self.terms.items() if wd(w) == d}
        )

    def unit_coefficient(self):
        return self.terms.get((), self.algebra.reduce((), 0))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        D = alg.truncation
        wd = alg.word_degree
        out: dict = {}
        for w1, c1 in self.terms.items():
            d1 = wd(w1)
            for w2, c2 in other.terms.items():
                if d1 + wd(w2) > D:
                    continue
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return AlgebraElement(alg, out)

    def __rmul__(self, c):
        return self.scale(c)

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra != self.algebra:
            raise ValueError("elements belong to different algebras")

    def __str__(self):
        key = self.algebra.word_sort_key
        items = sorted(self.terms.items(), key=lambda kv: key(kv[0]))
        return _format_terms(items, format_word)

    __repr__ = __str__


class AlgebraMorphism:
    """Degree-preserving algebra map out of a truncated tensor algebra.

    Determined by generator images, extended multiplicatively over words
    and linearly over terms.  The target just needs a ``one()`` and
    elements supporting +, * and ``scale``; that covers tensor algebras
    and the tensor square alike.
    """

    def __init__(self, source: TruncatedTensorAlgebra, target, images: dict, *, check=True):
        self.source = source
        self.target = target
        self.images = dict(images)
        self._word_cache: dict = {(): target.one()}
        if check:
            self._validate()

    def _validate(self):
        for g in self.source.module.generators:
            if g.degree > self.source.truncation:
                continue
            if g.name not in self.images:
                raise ValueError(f"no image for generator {g.name}")
            img = self.images[g.name]
            if img and not img.is_homogeneous(g.degree):
                raise ValueError(
                    f"image of {g.name} is not homogeneous of degree {g.degree}"
                )
            if g.annihilator and img.scale(g.annihilator):
                raise ValueError(
                    f"image of {g.name} is not killed by its annihilator "
                    f"{g.annihilator}"
                )

    def word_image(self, word):
        img = self._word_cache.get(word)
        if img is None:
            img = self.word_image(word[:-1]) * self.images[word[-1]]
            self._word_cache[word] = img
        return img

    def __call__(self, elem: AlgebraElement):
        if elem.algebra != self.source:
            raise ValueError("element is not in the source algebra")
        acc = None
        for w, c in elem.terms.items():
            piece = self.word_image(w).scale(c)
            acc = piece if acc is None else acc + piece
        if acc is None:
            return self.target.one().scale(0)
        return acc


def compose(outer: AlgebraMorphism, inner: AlgebraMorphism) -> AlgebraMorphism:
    images = {name: outer(img) for name, img in inner.images.items()}
    return AlgebraMorphism(inner.source, outer.target, images, check=False)


def renaming_morphism(source, target, name_map: dict) -> AlgebraMorphism:
    images = {
        n: target.generator(name_map.get(n, n))
        for n in source.module.names()
        if source.module.degree_of(n) <= source.truncation
    }
    return AlgebraMorphism(source, target, images, check=False)


def tensor_algebra(module: GradedModulePresentation, truncation: int) -> TruncatedTensorAlgebra:
    return TruncatedTensorAlgebra(module, truncation)


class FreeProduct:
    """T(M) * T(N) presented as the tensor algebra on M (+) N."""

    def __init__(self, algebra, left, right, left_names, right_names):
        self.algebra = algebra
        self.left = left
        self.right = right
        self.left_names = left_names
        self.right_names = right_names


def free_product(a: TruncatedTensorAlgebra, b: TruncatedTensorAlgebra) -> FreeProduct:
    if a.ring != b.ring:
        raise ValueError("free product needs a common base ring")
    if a.truncation != b.truncation:
        raise ValueError("free product factors must share the truncation degree")
    lmap, rmap = _merge_names(a.module.names(), b.module.names())
    gens = [
        CyclicGenerator(lmap[g.name], g.degree, g.annihilator)
        for g in a.module.generators
    ]
    gens += [
        CyclicGenerator(rmap[g.name], g.degree, g.annihilator)
        for g in b.module.generators
    ]
    prod = TruncatedTensorAlgebra(
        GradedModulePresentation(a.ring, tuple(gens)), a.truncation
    )
    return FreeProduct(
        prod,
        renaming_morphism(a, prod, lmap),
        renaming_morphism(b, prod, rmap),
        lmap,
        rmap,
    )


class FreePower:
    """k-fold free product of one algebra with itself, slots tagged by primes."""

    def __init__(self, algebra, inclusions, name_maps):
        self.algebra = algebra
        self.inclusions = inclusions
        self.name_maps = name_maps


def free_power(a: TruncatedTensorAlgebra, k: int) -> FreePower:
    if k < 1:
        raise ValueError("free power needs k >= 1")
    name_maps = [
        {n: n + "'" * (slot + 1) for n in a.module.names()} for slot in range(k)
    ]
    gens = []
    for slot in range(k):
        for g in a.module.generators:
            gens.append(CyclicGenerator(name_maps[slot][g.name], g.degree, g.annihilator))
    alg = TruncatedTensorAlgebra(
        GradedModulePresentation(a.ring, tuple(gens)), a.truncation
    )
    inclusions = tuple(renaming_morphism(a, alg, nm) for nm in name_maps)
    return FreePower(alg, inclusions, tuple(name_maps))


class TensorSquare:
    """A (x) A with the Koszul-signed multiplication, truncated by total degree."""

    def __init__(self, algebra: TruncatedTensorAlgebra):
        self.algebra = algebra
        self.truncation = algebra.truncation

    def __eq__(self, other):
        return isinstance(other, TensorSquare) and self.algebra == other.algebra

    def __hash__(self):
        return hash(("tensor square", self.algebra))

    def pair_degree(self, pair) -> int:
        wd = self.algebra.word_degree
        return wd(pair[0]) + wd(pair[1])

    def pair_modulus(self, pair) -> int:
        return self.algebra.word_modulus(pair[0] + pair[1])

    def reduce(self, pair, value):
        return self.algebra.reduce(pair[0] + pair[1], value)

    def element(self, terms: dict) -> "TensorSquareElement":
        kept = {
            p: c for p, c in terms.items() if self.pair_degree(p) <= self.truncation
        }
        return TensorSquareElement(self, kept)

    def zero(self):
        return TensorSquareElement(self, {})

    def one(self):
        return TensorSquareElement(self, {((), ()): 1})

    def pure(self, w1, w2, c=1):
        return self.element({(w1, w2): c})


class TensorSquareElement:
    __slots__ = ("parent", "terms")

    def __init__(self, parent: TensorSquare, terms: dict):
        self.parent = parent
        reduced = {}
        for p, c in terms.items():
            c = parent.reduce(p, c)
            if c:
                reduced[p] = c
        self.terms = reduced

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorSquareElement)
            and self.parent == other.parent
            and self.terms == other.terms
        )

    def degrees(self) -> set:
        pd = self.parent.pair_degree
        return {pd(p) for p in self.terms}

    def is_homogeneous(self, d: int) -> bool:
        return all(dd == d for dd in self.degrees())

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return TensorSquareElement(self.parent, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) - c
        return TensorSquareElement(self.parent, out)

    def __neg__(self):
        return TensorSquareElement(self.parent, {p: -c for p, c in self.terms.items()})

    def scale(self, c):
        return TensorSquareElement(self.parent, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorSquareElement):
            return self.scale(other)
        sq = self.parent
        wd = sq.algebra.word_degree
        D = sq.truncation
        out: dict = {}
        for (a, b), c1 in self.terms.items():
            da, db = wd(a), wd(b)
            for (c, d), c2 in other.terms.items():
                if da + db + wd(c) + wd(d) > D:
                    continue
                coeff = c1 * c2
                if (db * wd(c)) % 2:
                    coeff = -coeff
                p = (a + c, b + d)
                out[p] = out.get(p, 0) + coeff
        return TensorSquareElement(sq, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __str__(self):
        key = self.parent.algebra.word_sort_key
        items = sorted(
            self.terms.items(), key=lambda kv: (key(kv[0][0]), key(kv[0][1]))
        )
        return _format_terms(
            items, lambda p: f"{format_word(p[0])}(x){format_word(p[1])}"
        )

    __repr__ = __str__


def is_graded_commutative(algebra: TruncatedTensorAlgebra):
    """Check uv = (-1)^{|u||v|} vu on all generator pairs.

    Products of generators generate everything, so this decides graded
    commutativity of the whole algebra, independent of truncation: the
    pairs are multiplied in a widened copy when the truncation is too
    small to see them.
    """
    mod = algebra.module
    need = 2 * mod.max_degree()
    amb = algebra if algebra.truncation >= need else TruncatedTensorAlgebra(mod, need)
    for u in mod.generators:
        for v in mod.generators:
            gu, gv = amb.generator(u.name), amb.generator(v.name)
            sign = -1 if (u.degree * v.degree) % 2 else 1
            if gu * gv != (gv * gu).scale(sign):
                return False, (u.name, v.name)
    return True, None
