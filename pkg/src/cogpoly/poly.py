"""Exact polynomial arithmetic for the cog invariants.

Two rings are needed: multivariate integer polynomials over the fixed
variable set (x, y, alpha, beta, gamma, t), and one-variable Laurent
polynomials in A (negative exponents allowed) for the Yamada machinery.
Coefficients are arbitrary-precision ints; evaluation is exact over
``fractions.Fraction``.  All values are immutable; arithmetic never
mutates its operands.
"""

from __future__ import annotations

from fractions import Fraction

VARS = ("x", "y", "alpha", "beta", "gamma", "t")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZEROS = (0,) * len(VARS)


def _mono_key(exps):
    # Term order used for printing and for the canonical JSON form.  The
    # exponent vector is compared right-to-left (t, gamma, beta, alpha, y, x),
    # which for the x,y polynomials groups terms by rising y-degree:
    #   x^2 + 2*x^2*y + x^3*y + 3*x^2*y^2 + y^3
    return tuple(reversed(exps))


class MultiPoly:
    """Integer polynomial in the variables x, y, alpha, beta, gamma, t.

    Terms are stored as a dict mapping exponent tuples (one slot per
    variable, in ``VARS`` order) to nonzero int coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for exps, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != len(VARS) or any(e < 0 for e in exps):
                raise ValueError("bad exponent vector %r" % (exps,))
            cleaned[exps] = cleaned.get(exps, 0) + coeff
        self.terms = {e: c for e, c in cleaned.items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({_ZEROS: c})

    @classmethod
    def var(cls, name, power=1):
        exps = list(_ZEROS)
        exps[_VAR_INDEX[name]] = power
        return cls({tuple(exps): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        out = MultiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def variables(self):
        """Names of the variables that actually occur."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(VARS[i])
        return used

    def evaluate(self, assignment):
        """Exact value under a {variable: number} assignment.

        Every variable occurring in the polynomial must be assigned; values
        may be ints or Fractions.
        """
        missing = self.variables() - set(assignment)
        if missing:
            raise ValueError("unassigned variables: %s" % ", ".join(sorted(missing)))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            val = Fraction(coeff)
            for i, e in enumerate(exps):
                if e:
                    val *= Fraction(assignment[VARS[i]]) ** e
            total += val
        return total

    def substitute_int(self, name, value):
        """Replace one variable by an integer, returning a MultiPoly."""
        i = _VAR_INDEX[name]
        out = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            coeff = coeff * value ** e[i]
            e[i] = 0
            e = tuple(e)
            out[e] = out.get(e, 0) + coeff
        return MultiPoly(out)

    def substitute_var(self, name, target):
        """Rename one variable to another (exponents merge), e.g. gamma -> alpha."""
        i, j = _VAR_INDEX[name], _VAR_INDEX[target]
        out = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e[j] += e[i]
            e[i] = 0
            e = tuple(e)
            out[e] = out.get(e, 0) + coeff
        return MultiPoly(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _mono_key(item[0]))

    def to_string(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(VARS[i])
                elif e > 1:
                    factors.append("%s^%d" % (VARS[i], e))
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(coeff), mono)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def to_json(self):
        return [
            {"exponents": {VARS[i]: e for i, e in enumerate(exps) if e},
             "coefficient": coeff}
            for exps, coeff in self.sorted_terms()
        ]

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "MultiPoly(%s)" % self.to_string()


class LaurentPoly:
    """Integer Laurent polynomial in the single variable A."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                cleaned[int(exp)] = cleaned.get(int(exp), 0) + coeff
        self.terms = {e: c for e, c in cleaned.items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def A(cls, power=1):
        return cls({power: 1})

    def is_zero(self):
        return not self.terms

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
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def min_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no minimum degree")
        return min(self.terms)

    def evaluate(self, value):
        """Exact value at A = value (nonzero if negative exponents occur)."""
        value = Fraction(value)
        if value == 0 and any(e < 0 for e in self.terms):
            raise ZeroDivisionError("A = 0 with negative exponents present")
        total = Fraction(0)
        for e, c in self.terms.items():
            total += Fraction(c) * value ** e
        return total

    def normalized(self):
        """(-A)^(-m) times self, m the lowest exponent; lowest term becomes +-1 * A^0."""
        if not self.terms:
            return self
        m = self.min_degree()
        sign = 1 if m % 2 == 0 else -1
        return LaurentPoly({e - m: sign * c for e, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_string(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            if exp == 0:
                body = str(abs(coeff))
            else:
                mono = "A" if exp == 1 else "A^%d" % exp
                body = mono if abs(coeff) == 1 else "%d*%s" % (abs(coeff), mono)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def to_json(self):
        return [{"exponent": e, "coefficient": c} for e, c in self.sorted_terms()]

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_string()


#: sigma = A + 1 + A^-1, the loop value of the Yamada polynomial.
SIGMA = LaurentPoly({1: 1, 0: 1, -1: 1})
