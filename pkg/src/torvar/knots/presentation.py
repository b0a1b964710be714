"""Two-generator one-relator presentations and their text parser.

Grammar for :func:`parse_presentation`::

    presentation := gens '|' word '=' word
    gens         := name (',' name)*
    word         := '1' | factor ('*'? factor)*
    factor       := atom ('^' integer)?
    atom         := letter | '[' word ',' word ']' | '(' word ')'

Generator names are single lowercase letters; an uppercase letter denotes
the inverse of the corresponding generator.  '[a,b]' is the commutator
a b a^-1 b^-1.
"""

from ..errors import ParseError, SingularInputError
from .words import Word, commutator


class GroupPresentation:
    """<generators | lhs = rhs> with the relator lhs * rhs^-1.

    ``phi`` is the abelianization onto Z (gen -> integer), normalized so the
    relator dies, the image is all of Z, and the first generator maps to a
    positive integer.
    """

    def __init__(self, generators, lhs, rhs):
        self.generators = tuple(generators)
        if len(self.generators) != 2:
            raise SingularInputError("only two-generator presentations are supported")
        self.lhs = Word(lhs)
        self.rhs = Word(rhs)
        relator = self.lhs * self.rhs.inverse()
        if not relator:
            raise ParseError("relator trivial after reduction")
        self.relator = relator.cyclic_reduction()
        for ch in self.relator:
            if ch.lower() not in self.generators:
                raise ParseError(f"unknown generator {ch!r} in relator")
        self.phi = self._abelianization()

    def _abelianization(self):
        g1, g2 = self.generators
        e1 = self.relator.exponent_sum(g1)
        e2 = self.relator.exponent_sum(g2)
        # phi = (-e2, e1) / gcd kills the relator
        from math import gcd
        g = gcd(e1, e2)
        if g == 0:
            if e1 == 0 and e2 == 0:
                phi = {g1: 1, g2: 1}
            else:
                raise SingularInputError("relator abelianization degenerate")
        else:
            a, b = -e2 // g, e1 // g
            if a == 0 and b == 0:
                phi = {g1: 1, g2: 1}
            else:
                phi = {g1: a, g2: b}
        if phi[g1] < 0 or (phi[g1] == 0 and phi[g2] < 0):
            phi = {k: -v for k, v in phi.items()}
        if gcd(phi[g1], phi[g2]) != 1:
            raise SingularInputError("abelianization not onto Z")
        check = sum(self.relator.exponent_sum(g) * phi[g] for g in self.generators)
        assert check == 0
        return phi

    def phi_of(self, word):
        return sum(Word(word).exponent_sum(g) * v for g, v in self.phi.items())

    def __repr__(self):
        return f"<{','.join(self.generators)} | {self.lhs} = {self.rhs}>"

    def as_text(self):
        return f"{','.join(self.generators)} | {self.lhs} = {self.rhs}"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(f"{msg} at position {self.pos}: {self.text!r}",
                         position=self.pos)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self):
        ch = self.peek()
        if ch is not None:
            self.pos += 1
        return ch

    def expect(self, ch):
        got = self.take()
        if got != ch:
            self.error(f"expected {ch!r}, got {got!r}")

    def parse(self):
        gens = self.parse_gens()
        self.expect("|")
        lhs = self.parse_word(gens)
        self.expect("=")
        rhs = self.parse_word(gens)
        if self.peek() is not None:
            self.error("trailing input")
        return gens, lhs, rhs

    def parse_gens(self):
        gens = []
        while True:
            ch = self.take()
            if ch is None or not ch.isalpha() or not ch.islower():
                self.error("expected a lowercase generator name")
            gens.append(ch)
            if self.peek() == ",":
                self.take()
                continue
            break
        if len(set(gens)) != len(gens):
            self.error("duplicate generator")
        return gens

    def parse_word(self, gens):
        ch = self.peek()
        if ch == "1":
            self.take()
            return Word()
        acc = Word()
        while True:
            acc = acc * self.parse_factor(gens)
            nxt = self.peek()
            if nxt == "*":
                self.take()
                continue
            if nxt is not None and (nxt.isalpha() or nxt in "[("):
                continue
            break
        return acc

    def parse_factor(self, gens):
        atom = self.parse_atom(gens)
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            digits = ""
            while self.peek() is not None and self.peek().isdigit():
                digits += self.take()
            if not digits:
                self.error("expected an integer exponent")
            return atom ** (sign * int(digits))
        return atom

    def parse_atom(self, gens):
        ch = self.peek()
        if ch == "[":
            self.take()
            a = self.parse_word(gens)
            self.expect(",")
            b = self.parse_word(gens)
            self.expect("]")
            return commutator(a, b)
        if ch == "(":
            self.take()
            w = self.parse_word(gens)
            self.expect(")")
            return w
        ch = self.take()
        if ch is None or not ch.isalpha():
            self.error("expected a generator letter")
        if ch.lower() not in gens:
            self.error(f"unknown generator {ch!r}")
        return Word(ch)


def parse_presentation(text):
    """Parse '<gens> | <word> = <word>' into a GroupPresentation."""
    gens, lhs, rhs = _Parser(text).parse()
    return GroupPresentation(gens, lhs, rhs)
