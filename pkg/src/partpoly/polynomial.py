"""Integer polynomials in one variable ``t`` (f-, h- and character polynomials)."""
from dataclasses import dataclass
from math import comb


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Coefficient tuple, index ``i`` holds the coefficient of ``t**i``.

    Trailing zeros are trimmed, so the zero polynomial is ``()``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def exact_div(self, d):
        """Divide every coefficient by ``d``; raise ValueError if any is not divisible."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError(f"coefficient {c} of {self} is not divisible by {d}")
            out.append(q)
        return IntPoly(out)

    def shift(self, s):
        """Return ``p(t + s)``."""
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * s ** (i - j)
        return IntPoly(out)

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    def to_list(self):
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
