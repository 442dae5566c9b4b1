"""Collection in the free nilpotent group of class gamma on ``a, b``.

Elements are exponent vectors over the Hall basis, read as
``c_0^e0 c_1^e1 ... c_r^er``. Multiplying a normal word by ``c_k^e`` moves
the syllable left past the tail ``T`` of generators above ``k`` using
``T c_k^e = c_k^e T^(c_k^e)``; conjugation by ``c_k`` is an automorphism
of the subgroup spanned by higher generators, stored as images of each
generator. Those images come from

* ``c_j^(c_i) = c_j [c_j, c_i]`` when ``[c_j, c_i]`` is basic (or vanishes),
* ``[u, v]^(c_i) = [u^(c_i), v^(c_i)]`` otherwise,

processed from the top generator down so every product needed is already
available.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import InternalInconsistency
from .basis import MAX_GAMMA, hall_basis


class Collector:
    def __init__(self, gamma: int, max_gamma=MAX_GAMMA):
        self.gamma = gamma
        self.basis = hall_basis(gamma, max_gamma)
        self.size = N = len(self.basis)
        self._pairs = {(c.left, c.right): c.index for c in self.basis if not c.is_generator}
        self._zero = (0,) * N
        self._auto_cache = {}
        # _conj[(i, s)][j] = c_j^(c_i^s) for j > i
        self._conj = {}
        for i in reversed(range(N)):
            self._conj[i, 1] = self._forward_images(i)
            self._conj[i, -1] = self._backward_images(i)

    # -- construction of the conjugation relations -------------------------

    def unit(self, k, e=1):
        w = [0] * self.size
        w[k] = e
        return tuple(w)

    def _forward_images(self, i):
        images = {}
        wi = self.basis[i].weight
        for j in range(i + 1, self.size):
            cj = self.basis[j]
            if wi + cj.weight > self.gamma:
                images[j] = self.unit(j)
            elif (j, i) in self._pairs:
                w = [0] * self.size
                w[j] = 1
                w[self._pairs[j, i]] = 1
                images[j] = tuple(w)
            else:
                # c_j = [u, v] with v > i: conjugation distributes over the bracket
                images[j] = self.commutator(images[cj.left], images[cj.right])
        return images

    def _backward_images(self, i):
        # solve phi(y) = c_j for y by fixed-point iteration; each round
        # pushes the error into strictly higher weight
        fwd = self._conj[i, 1]
        images = {}
        for j in range(i + 1, self.size):
            target = self.unit(j)
            y = target
            for _ in range(self.gamma + 2):
                img = self._apply(fwd, y)
                if img == target:
                    break
                y = self.multiply(self.multiply(y, self.inverse(img)), target)
            else:
                raise InternalInconsistency(f"inverse conjugation by c_{i} did not converge")
            images[j] = y
        return images

    # -- automorphisms ----------------------------------------------------

    def _apply(self, images, w):
        out = self._zero
        for l, x in enumerate(w):
            if x:
                out = self.multiply(out, self.power(images[l], x))
        return out

    def _automorphism(self, k, e):
        """Images of ``c_j`` (j > k) under conjugation by ``c_k^e``."""
        key = (k, e)
        hit = self._auto_cache.get(key)
        if hit is not None:
            return hit
        if e in (1, -1):
            result = self._conj[k, e]
        else:
            s = 1 if e > 0 else -1
            half = self._automorphism(k, s * (abs(e) // 2))
            result = {j: self._apply(half, img) for j, img in half.items()}
            if abs(e) % 2:
                base = self._conj[k, s]
                result = {j: self._apply(result, img) for j, img in base.items()}
        self._auto_cache[key] = result
        return result

    # -- group operations -----------------------------------------------

    def identity(self):
        return self._zero

    def _mul_syllable(self, x, k, e):
        tail = [j for j in range(k + 1, self.size) if x[j]]
        if not tail:
            w = list(x)
            w[k] += e
            return tuple(w)
        w = list(x[: k + 1]) + [0] * (self.size - k - 1)
        w[k] += e
        out = tuple(w)
        phi = self._automorphism(k, e)
        for j in tail:
            out = self.multiply(out, self.power(phi[j], x[j]))
        return out

    def multiply(self, x, y):
        for k, e in enumerate(y):
            if e:
                x = self._mul_syllable(x, k, e)
        return x

    def inverse(self, x):
        out = self._zero
        for k in range(self.size - 1, -1, -1):
            if x[k]:
                out = self._mul_syllable(out, k, -x[k])
        return out

    def power(self, x, f):
        if f < 0:
            x, f = self.inverse(x), -f
        out = self._zero
        base = x
        while f:
            if f & 1:
                out = self.multiply(out, base)
            f >>= 1
            if f:
                base = self.multiply(base, base)
        return out

    def commutator(self, x, y):
        return self.multiply(
            self.multiply(self.inverse(x), self.inverse(y)), self.multiply(x, y)
        )

    def collect(self, letters):
        """Normal form of a product of letters ``(basis index, exponent)``."""
        out = self._zero
        for k, e in letters:
            if not 0 <= k < self.size:
                raise IndexError(f"basis index {k} out of range for class {self.gamma}")
            if e:
                out = self._mul_syllable(out, k, e)
        return out


@lru_cache(maxsize=None)
def get_collector(gamma: int) -> Collector:
    return Collector(gamma)


@dataclass(frozen=True)
class NormalWord:
    """``c_0^e0 c_1^e1 ... c_r^er`` in the class-``class_gamma`` free nilpotent group."""

    class_gamma: int
    exponents: tuple

    def __post_init__(self):
        size = get_collector(self.class_gamma).size
        if len(self.exponents) != size:
            raise ValueError(f"expected {size} exponents, got {len(self.exponents)}")

    @property
    def _c(self):
        return get_collector(self.class_gamma)

    def _wrap(self, exps):
        return NormalWord(self.class_gamma, exps)

    def __mul__(self, other: NormalWord) -> NormalWord:
        if other.class_gamma != self.class_gamma:
            raise ValueError("normal words of different classes")
        return self._wrap(self._c.multiply(self.exponents, other.exponents))

    def inverse(self) -> NormalWord:
        return self._wrap(self._c.inverse(self.exponents))

    def __pow__(self, f: int) -> NormalWord:
        return self._wrap(self._c.power(self.exponents, f))

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __str__(self):
        basis = self._c.basis
        parts = []
        for c, e in zip(basis, self.exponents):
            if e:
                parts.append(c.name if e == 1 else f"{c.name}^{e}")
        return " ".join(parts) or "1"


def collect(word, gamma: int) -> NormalWord:
    """Collect a sequence of ``(basis index, exponent)`` letters into normal form.

    Bare integers are accepted as letters with exponent 1; a negative
    integer ``-(k+1)`` stands for ``c_k^-1``.
    """
    letters = []
    for letter in word:
        if isinstance(letter, int):
            letters.append((letter, 1) if letter >= 0 else (-letter - 1, -1))
        else:
            letters.append((int(letter[0]), int(letter[1])))
    return NormalWord(gamma, get_collector(gamma).collect(letters))
