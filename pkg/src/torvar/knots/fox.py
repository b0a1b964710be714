"""Free differential calculus on words, and group-ring bookkeeping.

GroupRingElement is a formal Z-linear combination of free-group words; its
abelianized view is a Laurent polynomial in t through a weight map phi.
"""

from fractions import Fraction

from ..algebra.multipoly import MultiPoly
from ..algebra.numberfield import QQ
from .words import Word


class GroupRingElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for w, c in (coeffs or {}).items():
            w = Word(w)
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self.coeffs = clean

    @classmethod
    def of_word(cls, w, c=1):
        return cls({Word(w): c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def left_mul(self, w):
        w = Word(w)
        return GroupRingElement({w * u: c for u, c in self.coeffs.items()})

    def right_mul(self, w):
        w = Word(w)
        return GroupRingElement({u * w: c for u, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*[{w}]" for w, c in sorted(
            self.coeffs.items(), key=lambda kv: kv[0].letters))

    def abelianized(self, phi):
        """Laurent polynomial in t: each word w maps to t**phi(w)."""
        terms = {}
        for w, c in self.coeffs.items():
            e = sum(w.exponent_sum(g) * v for g, v in phi.items())
            terms[(e,)] = terms.get((e,), Fraction(0)) + c
        return MultiPoly(QQ, ("t",), terms)


def fox_derivative(word, gen):
    """d(word)/d(gen) under the product rule d(uv) = du + u dv.

    ``word`` is a (freely reduced) Word, ``gen`` a lowercase generator name.
    """
    word = Word(word)
    acc = {}
    prefix = Word()
    for ch in word:
        if ch == gen:
            key = prefix
            acc[key] = acc.get(key, 0) + 1
        elif ch == gen.upper():
            key = prefix * Word(ch)
            acc[key] = acc.get(key, 0) - 1
        prefix = prefix * Word(ch)
    return GroupRingElement(acc)


def fox_identity_defect(presentation):
    """sum_g d(r)/dg * (g - 1) - (r - 1); zero iff the fundamental identity holds."""
    r = presentation.relator
    total = GroupRingElement()
    for g in presentation.generators:
        d = fox_derivative(r, g)
        total = total + d.right_mul(g) - d
    total = total - GroupRingElement.of_word(r) + GroupRingElement.of_word(Word())
    return total
