"""Freely reduced words in a free group.

A word is a string of letters: lowercase for generators, uppercase for
their inverses ('aBa' means a b^-1 a).  Construction always freely reduces.
"""


def _flip(ch):
    return ch.lower() if ch.isupper() else ch.upper()


def _reduce(s):
    out = []
    for ch in s:
        if out and out[-1] != ch and out[-1] == _flip(ch):
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


class Word:
    __slots__ = ("letters",)

    def __init__(self, letters=""):
        if isinstance(letters, Word):
            letters = letters.letters
        self.letters = _reduce(letters)

    def __mul__(self, other):
        return Word(self.letters + Word(other).letters)

    def __pow__(self, n):
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self):
        return Word("".join(_flip(ch) for ch in reversed(self.letters)))

    def reversed_word(self):
        return Word(self.letters[::-1])

    def cyclic_reduction(self):
        s = self.letters
        while len(s) >= 2 and s[0] == _flip(s[-1]):
            s = s[1:-1]
        return Word(s)

    def is_cyclically_reduced(self):
        return self.letters == self.cyclic_reduction().letters

    def exponent_sum(self, gen):
        return sum(1 if ch == gen else -1 if ch == gen.upper() else 0
                   for ch in self.letters)

    def generators(self):
        return sorted({ch.lower() for ch in self.letters})

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if isinstance(other, str):
            other = Word(other)
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __repr__(self):
        return self.letters or "1"


def commutator(a, b):
    a, b = Word(a), Word(b)
    return a * b * a.inverse() * b.inverse()
