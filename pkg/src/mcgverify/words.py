"""Exact free-group word algebra over the surface group generators.

The fundamental group of the closed orientable genus-g surface is generated
by 2g loops t_1, s_1, ..., t_g, s_g.  A word is a finite sequence of signed
generator letters, always stored freely reduced (no adjacent x x^-1 pair).
Endomorphisms are given by the images of the 2g generators and act on words
by letterwise substitution followed by free reduction.

Composition convention throughout the package: ``compose(f, g)`` applies
``g`` first, so ``substitute(compose(f, g), w) == substitute(f,
substitute(g, w))``.

Canonical text format: tokens ``t<k>`` / ``s<k>``, optionally suffixed
``^-1``, joined by single spaces; the identity serialises as the empty
string.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple


class Letter(NamedTuple):
    kind: str  # "t" or "s"
    index: int  # 1..genus
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}" + ("^-1" if self.sign < 0 else "")


class ParseError(ValueError):
    """Malformed token or out-of-range generator index, with its position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


_TOKEN = re.compile(r"^([ts])([0-9]+)(\^-1)?$")


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Freely reduce a letter sequence with a single stack pass."""
    stack: list[Letter] = []
    for let in letters:
        if stack and stack[-1][0] == let[0] and stack[-1][1] == let[1] \
                and stack[-1][2] == -let[2]:
            stack.pop()
        else:
            stack.append(let)
    return tuple(stack)


class Word:
    """A freely reduced word in the generators of a fixed genus."""

    __slots__ = ("genus", "letters")

    def __init__(self, genus: int, letters: Iterable[Letter] = (), *,
                 _reduced: bool = False):
        if genus < 1:
            raise ValueError(f"genus must be >= 1, got {genus}")
        self.genus = genus
        lets = tuple(letters) if _reduced else reduce_letters(letters)
        for let in lets:
            if not 1 <= let.index <= genus:
                raise ValueError(f"letter {let} out of range for genus {genus}")
        self.letters = lets

    # -- constructors ----------------------------------------------------

    @staticmethod
    def identity(genus: int) -> "Word":
        return Word(genus, (), _reduced=True)

    @staticmethod
    def gen(kind: str, index: int, genus: int, sign: int = 1) -> "Word":
        return Word(genus, (Letter(kind, index, sign),), _reduced=True)

    # -- basic protocol ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Word) and self.genus == other.genus
                and self.letters == other.letters)

    def __hash__(self) -> int:
        return hash((self.genus, self.letters))

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.genus}, {format_word(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        out: list[Letter] = []
        for _ in range(abs(exponent)):
            out.extend(base.letters)
        return Word(self.genus, out)

    def inverse(self) -> "Word":
        return Word(self.genus,
                    tuple(l.inverse() for l in reversed(self.letters)),
                    _reduced=True)

    def is_identity(self) -> bool:
        return not self.letters


def parse_word(text: str, genus: int) -> Word:
    """Parse whitespace- or ``*``-separated generator tokens.

    Empty input yields the identity.  The result is freely reduced, so
    ``format_word(parse_word(x, g))`` is the canonical form of ``x``.
    """
    letters = []
    tokens = [tok for tok in re.split(r"[\s*]+", text) if tok]
    for pos, tok in enumerate(tokens):
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"malformed token {tok!r}", pos)
        kind, idx, inv = m.group(1), int(m.group(2)), m.group(3)
        if not 1 <= idx <= genus:
            raise ParseError(f"index {idx} out of range 1..{genus}", pos)
        letters.append(Letter(kind, idx, -1 if inv else 1))
    return Word(genus, letters)


def format_word(w: Word) -> str:
    """Canonical single-space text form; identity is the empty string."""
    return " ".join(str(l) for l in w.letters)


def _require_same_genus(u: Word, v: Word) -> None:
    if u.genus != v.genus:
        raise ValueError(f"genus mismatch: {u.genus} != {v.genus}")


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced concatenation u*v."""
    _require_same_genus(u, v)
    if not u.letters:
        return v
    if not v.letters:
        return u
    # Only the seam can cancel when both factors are already reduced.
    a, b = list(u.letters), v.letters
    i = 0
    while a and i < len(b) and a[-1] == b[i].inverse():
        a.pop()
        i += 1
    return Word(u.genus, tuple(a) + b[i:], _reduced=True)


def conjugate(a: Word, b: Word) -> Word:
    """b * a * b^-1."""
    _require_same_genus(a, b)
    return multiply(multiply(b, a), b.inverse())


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as conj * core * conj^-1 with a cyclically reduced core.

    Returns ``(core, conj)``; the core's first letter is never the inverse
    of its last.
    """
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    core = Word(w.genus, letters[i:j], _reduced=True)
    conj = Word(w.genus, letters[:i], _reduced=True)
    return core, conj


class GeneratorImages:
    """An endomorphism of the surface group, stored as generator images.

    ``image_t[i-1]`` and ``image_s[i-1]`` are the (freely reduced) images
    of t_i and s_i.  Instances are immutable; inverse images are cached for
    substitution.
    """

    __slots__ = ("genus", "image_t", "image_s", "_inv_t", "_inv_s")

    def __init__(self, genus: int, image_t: Iterable[Word],
                 image_s: Iterable[Word]):
        self.genus = genus
        self.image_t = tuple(image_t)
        self.image_s = tuple(image_s)
        if len(self.image_t) != genus or len(self.image_s) != genus:
            raise ValueError("need exactly one image per generator")
        for img in self.image_t + self.image_s:
            if img.genus != genus:
                raise ValueError("image genus mismatch")
        self._inv_t = tuple(w.inverse() for w in self.image_t)
        self._inv_s = tuple(w.inverse() for w in self.image_s)

    @staticmethod
    def identity(genus: int) -> "GeneratorImages":
        return GeneratorImages(
            genus,
            [Word.gen("t", i, genus) for i in range(1, genus + 1)],
            [Word.gen("s", i, genus) for i in range(1, genus + 1)])

    @staticmethod
    def from_strings(genus: int, images_t: Iterable[str],
                     images_s: Iterable[str]) -> "GeneratorImages":
        return GeneratorImages(
            genus,
            [parse_word(x, genus) for x in images_t],
            [parse_word(x, genus) for x in images_s])

    def image(self, letter: Letter) -> Word:
        if letter.kind == "t":
            return (self.image_t if letter.sign > 0 else self._inv_t)[letter.index - 1]
        return (self.image_s if letter.sign > 0 else self._inv_s)[letter.index - 1]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GeneratorImages) and self.genus == other.genus
                and self.image_t == other.image_t and self.image_s == other.image_s)

    def __hash__(self) -> int:
        return hash((self.genus, self.image_t, self.image_s))

    def is_identity(self) -> bool:
        return self == GeneratorImages.identity(self.genus)

    def __repr__(self) -> str:
        pairs = []
        for i in range(1, self.genus + 1):
            pairs.append(f"t{i} -> {format_word(self.image_t[i - 1])}")
            pairs.append(f"s{i} -> {format_word(self.image_s[i - 1])}")
        return "GeneratorImages(" + "; ".join(pairs) + ")"


def substitute(phi: GeneratorImages, w: Word) -> Word:
    """Apply the endomorphism to a word and freely reduce."""
    if phi.genus != w.genus:
        raise ValueError(f"genus mismatch: {phi.genus} != {w.genus}")
    stack: list[Letter] = []
    for letter in w.letters:
        for let in phi.image(letter).letters:
            if stack and stack[-1][0] == let[0] and stack[-1][1] == let[1] \
                    and stack[-1][2] == -let[2]:
                stack.pop()
            else:
                stack.append(let)
    return Word(w.genus, tuple(stack), _reduced=True)


def generators(genus: int) -> list[Word]:
    """All 2g generators as words, in the order t_1, s_1, ..., t_g, s_g."""
    out = []
    for i in range(1, genus + 1):
        out.append(Word.gen("t", i, genus))
        out.append(Word.gen("s", i, genus))
    return out
