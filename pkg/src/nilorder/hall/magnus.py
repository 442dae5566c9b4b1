"""Independent normal-form oracle via the Magnus embedding.

``a -> 1 + X`` and ``b -> 1 + Y`` embed the free nilpotent group of class
gamma faithfully into the units of ``Z<X, Y>`` truncated above degree gamma.
Normal-form exponents are read off weight by weight: the lowest nonconstant
homogeneous part of what remains is an integer combination of the leading
Lie terms of the basic commutators of that weight.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InternalInconsistency
from .basis import hall_basis


class MagnusAlgebra:
    def __init__(self, gamma: int):
        self.gamma = gamma
        self.basis = hall_basis(gamma)
        self.gen_images = [{(): 1, (0,): 1}, {(): 1, (1,): 1}]
        images = []
        for c in self.basis:
            if c.is_generator:
                images.append(self.gen_images[c.index])
            else:
                images.append(self.commutator(images[c.left], images[c.right]))
        self.images = images
        self._leading = {}
        for c in self.basis:
            self._leading.setdefault(c.weight, []).append(
                (c.index, self.homogeneous(images[c.index], c.weight))
            )

    def mul(self, p, q):
        out = {}
        g = self.gamma
        for u, x in p.items():
            for v, y in q.items():
                if len(u) + len(v) > g:
                    continue
                w = u + v
                out[w] = out.get(w, 0) + x * y
        return {w: x for w, x in out.items() if x}

    def inverse(self, p):
        # (1 + N)^-1 = sum (-N)^k, nilpotent past degree gamma
        if p.get((), 0) != 1:
            raise ValueError("not a unit with constant term 1")
        neg = {w: -x for w, x in p.items() if w}
        out = {(): 1}
        term = {(): 1}
        for _ in range(self.gamma):
            term = self.mul(term, neg)
            if not term:
                break
            for w, x in term.items():
                out[w] = out.get(w, 0) + x
        return {w: x for w, x in out.items() if x}

    def power(self, p, k):
        if k < 0:
            p, k = self.inverse(p), -k
        out = {(): 1}
        while k:
            if k & 1:
                out = self.mul(out, p)
            k >>= 1
            if k:
                p = self.mul(p, p)
        return out

    def commutator(self, p, q):
        return self.mul(self.mul(self.inverse(p), self.inverse(q)), self.mul(p, q))

    @staticmethod
    def homogeneous(p, degree):
        return {w: x for w, x in p.items() if len(w) == degree}

    def evaluate(self, exponents):
        out = {(): 1}
        for img, e in zip(self.images, exponents):
            if e:
                out = self.mul(out, self.power(img, e))
        return out

    def word(self, letters):
        """Image of a product of ``(basis index, exponent)`` letters."""
        out = {(): 1}
        for k, e in letters:
            out = self.mul(out, self.power(self.images[k], e))
        return out

    def normal_form(self, p):
        exps = [0] * len(self.basis)
        rest = p
        for w in range(1, self.gamma + 1):
            cols = self._leading[w]
            target = self.homogeneous(rest, w)
            coeffs = _solve_integer(cols, target)
            for idx, e in coeffs:
                exps[idx] = e
                if e:
                    rest = self.mul(self.power(self.images[idx], -e), rest)
        if rest != {(): 1}:
            raise InternalInconsistency("Magnus peeling left a nontrivial remainder")
        return tuple(exps)


def _solve_integer(cols, target):
    """Solve ``sum x_k L_k = target`` exactly; the solution must be integral."""
    monos = sorted({m for _, vec in cols for m in vec} | set(target))
    n = len(cols)
    rows = [[Fraction(vec.get(mono, 0)) for _, vec in cols] + [Fraction(target.get(mono, 0))]
            for mono in monos]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            raise InternalInconsistency("leading Lie terms are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][n]:
            raise InternalInconsistency("target is not in the span of the leading terms")
    out = []
    for i, c in enumerate(pivots):
        x = rows[i][n]
        if x.denominator != 1:
            raise InternalInconsistency("non-integral normal-form exponent")
        out.append((cols[c][0], int(x)))
    return out
