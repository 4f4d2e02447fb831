"""Exact integer Laurent polynomials in one variable q.

Everything downstream (Fock space coefficients, canonical basis entries,
quantum integers) lives in Z[q, q^-1], so this module keeps arithmetic
exact: a polynomial is a dict mapping exponent to nonzero integer
coefficient, and every operation normalizes away zero terms.
"""

from __future__ import annotations

import re


class NotDivisible(Exception):
    """Raised when exact division in Z[q, q^-1] leaves a remainder."""


class LaurentPoly:
    """An element of Z[q, q^-1], stored as {exponent: coefficient}.

    Instances are treated as immutable values: all arithmetic returns
    fresh objects and the term dict is never mutated after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                elif e in clean:
                    del clean[e]
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({0: c} if c else {})

    @classmethod
    def q_power(cls, e, c=1):
        """c * q^e."""
        return cls({e: c} if c else {})

    # -- ring structure ----------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            elif e in out:
                del out[e]
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            result = LaurentPoly.__new__(LaurentPoly)
            result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        result = LaurentPoly.__new__(LaurentPoly)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only exist for monomials; use q_power")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- inspection --------------------------------------------------

    def coefficient(self, e):
        return self.terms.get(e, 0)

    def min_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def max_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self.terms,)

    def __str__(self):
        return lp_to_text(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q_power(1)


def lp_arith(a, b, op):
    """Dispatch add/sub/mul by name; thin wrapper over the operators."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


def lp_bar(a):
    """The bar involution q -> q^-1 (negate every exponent)."""
    result = LaurentPoly.__new__(LaurentPoly)
    result.terms = {-e: c for e, c in a.terms.items()}
    return result


def lp_exact_div(a, b):
    """Exact quotient a / b in Z[q, q^-1].

    Laurent units q^e divide everything, so we first shift both operands
    to ordinary polynomials, then run long division requiring every
    intermediate coefficient quotient to be an exact integer.
    Raises NotDivisible when no Laurent polynomial quotient exists.
    """
    if not b:
        raise NotDivisible("division by zero")
    if not a:
        return LaurentPoly()
    # In an exact quotient the lowest exponents multiply, so no quotient
    # term can sit below a.min - b.min; that bound makes the loop finite.
    floor = a.min_exp() - b.min_exp()
    num = dict(a.terms)
    den_lead_exp = b.max_exp()
    den_lead = b.terms[den_lead_exp]
    quot = {}
    while num:
        top = max(num)
        c, r = divmod(num[top], den_lead)
        e = top - den_lead_exp
        if r or e < floor:
            raise NotDivisible("%s does not divide %s" % (b, a))
        quot[e] = c
        for be, bc in b.terms.items():
            ne = be + e
            nc = num.get(ne, 0) - bc * c
            if nc:
                num[ne] = nc
            elif ne in num:
                del num[ne]
    q = LaurentPoly(quot)
    if q * b != a:  # cheap safety net, exactness is the whole point
        raise NotDivisible("%s does not divide %s" % (b, a))
    return q


def quantum_int(n, s=1):
    """[n] in the variable q^s: q^{s(n-1)} + q^{s(n-3)} + ... + q^{s(1-n)}.

    Only defined here for n >= 0; callers that need [-n] = -[n] negate
    explicitly so that sign conventions stay visible at the use site.
    """
    if n < 0:
        raise ValueError("quantum_int wants n >= 0, got %d" % n)
    return LaurentPoly({s * (n - 1 - 2 * j): 1 for j in range(n)})


def quantum_factorial(n, s=1):
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("quantum_factorial wants n >= 0, got %d" % n)
    out = ONE
    for k in range(2, n + 1):
        out = out * quantum_int(k, s)
    return out


def quantum_binomial(m, k, s=1):
    """Gaussian binomial [m choose k] in q^s, an honest Laurent polynomial."""
    if k < 0 or k > m:
        raise ValueError("binomial index k=%d out of range for m=%d" % (k, m))
    out = ONE
    # Build as prod [m-j]/[j+1]; each partial product is again exact.
    for j in range(k):
        out = lp_exact_div(out * quantum_int(m - j, s), quantum_int(j + 1, s))
    return out


def gamma_symmetrize(a):
    """The bar-invariant polynomial agreeing with a in degrees <= 0.

    For a = sum a_i q^i returns sum_{i>=1} a_{-i} (q^i + q^{-i}) + a_0.
    This is the coefficient-peeling step of the basis triangularization:
    subtracting gamma * (a vector congruent to its head mod q) clears all
    nonpositive powers at once while preserving bar symmetry.
    """
    out = {}
    for e, c in a.terms.items():
        if e < 0:
            out[e] = c
            out[-e] = out.get(-e, 0) + c
        elif e == 0:
            out[0] = out.get(0, 0) + c
    return LaurentPoly(out)


# -- serialization ---------------------------------------------------

_TERM_RE = re.compile(r"^([+-]?\d+)?\s*\*?\s*(q(\^-?\d+)?)?$")


def lp_to_text(a):
    """Render ascending by exponent, e.g. 'q^-1 + 3 + 2*q^2'."""
    if not a.terms:
        return "0"
    parts = []
    for e in sorted(a.terms):
        c = a.terms[e]
        if e == 0:
            body = str(abs(c))
        else:
            power = "q" if e == 1 else "q^%d" % e
            body = power if abs(c) == 1 else "%d*%s" % (abs(c), power)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def lp_from_text(text):
    """Parse the lp_to_text format (order and spacing are forgiven)."""
    s = text.strip()
    if s in ("0", ""):
        return LaurentPoly()
    # Normalize separators so we can split on whitespace-delimited signs.
    s = s.replace("-", " - ").replace("+", " + ")
    s = s.replace("^ - ", "^-")  # undo the damage inside exponents
    tokens = s.split()
    terms = []
    sign = 1
    pending = None  # coefficient digits waiting for a possible 'q'
    for tok in tokens + ["+"]:
        if tok in ("+", "-"):
            if pending is not None:
                terms.append(pending)
                pending = None
            sign = -1 if tok == "-" else 1
            continue
        m = _TERM_RE.match(tok)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError("bad Laurent term %r in %r" % (tok, text))
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            pending = (0, sign * coeff)
        else:
            exp = int(m.group(3)[1:]) if m.group(3) else 1
            if pending is not None:
                terms.append(pending)
                pending = None
            terms.append((exp, sign * coeff))
        sign = 1
    return LaurentPoly(terms)


def lp_to_json(a):
    """[[exponent, coefficient], ...] ascending by exponent."""
    return [[e, a.terms[e]] for e in sorted(a.terms)]


def lp_from_json(pairs):
    return LaurentPoly([(int(e), int(c)) for e, c in pairs])
