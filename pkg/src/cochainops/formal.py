"""Exact formal linear combinations over arbitrary hashable bases.

Coefficients live in Z (characteristic 0) or in a prime field F_p
(characteristic p).  A FormalSum never stores a zero coefficient, and two
sums over different characteristics cannot be mixed.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def check_characteristic(char):
    if char != 0 and not is_prime(char):
        raise ValueError("characteristic must be 0 or a prime, got %r" % (char,))
    return char


def reduce_coeff(c, char):
    return c if char == 0 else c % char


def add_term(terms, basis, coeff, char):
    """Accumulate coeff*basis into the plain dict `terms`, dropping zeros."""
    c = terms.get(basis, 0) + coeff
    if char:
        c %= char
    if c:
        terms[basis] = c
    else:
        terms.pop(basis, None)


class FormalSum:
    """A finite Z- or F_p-linear combination of hashable basis elements."""

    __slots__ = ("char", "terms")

    def __init__(self, terms=(), char=0):
        check_characteristic(char)
        self.char = char
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for basis, coeff in items:
            add_term(data, basis, coeff, char)
        self.terms = data

    @classmethod
    def single(cls, basis, coeff=1, char=0):
        return cls([(basis, coeff)], char)

    @classmethod
    def zero(cls, char=0):
        return cls((), char)

    @classmethod
    def _raw(cls, reduced_terms, char):
        # internal: `reduced_terms` is already zero-free and mod-p reduced
        s = cls.__new__(cls)
        s.char = char
        s.terms = reduced_terms
        return s

    def _check_compatible(self, other):
        if self.char != other.char:
            raise ValueError(
                "cannot mix characteristics %d and %d" % (self.char, other.char)
            )

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __getitem__(self, basis):
        return self.terms.get(basis, 0)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self.char == other.char and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.char, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_compatible(other)
        data = dict(self.terms)
        for basis, coeff in other.terms.items():
            add_term(data, basis, coeff, self.char)
        return FormalSum._raw(data, self.char)

    def __sub__(self, other):
        self._check_compatible(other)
        data = dict(self.terms)
        for basis, coeff in other.terms.items():
            add_term(data, basis, -coeff, self.char)
        return FormalSum._raw(data, self.char)

    def __neg__(self):
        return self.scale(-1)

    def __rmul__(self, n):
        return self.scale(n)

    def scale(self, n):
        if self.char:
            n %= self.char
        if n == 0:
            return FormalSum.zero(self.char)
        data = {}
        for basis, coeff in self.terms.items():
            c = coeff * n
            if self.char:
                c %= self.char
            if c:
                data[basis] = c
        return FormalSum._raw(data, self.char)

    def map_basis(self, fn):
        """Linear extension of a map on basis elements.

        `fn` may return a basis element, None (kill the term), a FormalSum,
        or a dict basis -> coeff.
        """
        data = {}
        for basis, coeff in self.terms.items():
            image = fn(basis)
            if image is None:
                continue
            if isinstance(image, FormalSum):
                for b, c in image.terms.items():
                    add_term(data, b, coeff * c, self.char)
            elif isinstance(image, dict):
                for b, c in image.items():
                    add_term(data, b, coeff * c, self.char)
            else:
                add_term(data, image, coeff, self.char)
        return FormalSum._raw(data, self.char)

    def coefficient_sum(self):
        total = sum(self.terms.values())
        return total % self.char if self.char else total

    def support(self):
        return set(self.terms)

    def sorted_terms(self, key=None):
        return sorted(self.terms.items(), key=(lambda t: key(t[0])) if key else None)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for basis, coeff in self.sorted_terms(key=repr):
            if coeff == 1:
                bits.append("+ %r" % (basis,))
            elif coeff == -1:
                bits.append("- %r" % (basis,))
            elif coeff < 0:
                bits.append("- %d*%r" % (-coeff, basis))
            else:
                bits.append("+ %d*%r" % (coeff, basis))
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text


def change_characteristic(s, char):
    """Reduce an integral FormalSum mod p (or lift p=0 to itself)."""
    return FormalSum(list(s.terms.items()), char)


def to_field(c, char):
    """Coerce an integer coefficient into the field of given characteristic."""
    if char:
        return c % char
    return Fraction(c)
