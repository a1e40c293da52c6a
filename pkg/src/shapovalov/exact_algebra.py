"""Exact arithmetic layer: rational sparse polynomials, weights of gl(m,n),
the supersymmetric bilinear form, the Weyl vector, and root hyperplanes.

Everything here is a pure value; no floating point is used anywhere.
Weights live in the eps/delta coordinate basis of the dual Cartan: the
first m coordinates are eps-coefficients, the last n are delta-coefficients.
Polynomials are sparse multivariate polynomials over Q in commuting
variables x_1, x_2, ... where x_i stands for the diagonal matrix unit
e_{ii}; they double as elements of U(h) and as polynomial functions of a
weight's coordinates.
"""

from __future__ import annotations

import random
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _trim(exps):
    """Drop trailing zero exponents so tuples are canonical."""
    k = len(exps)
    while k and exps[k - 1] == 0:
        k -= 1
    return tuple(exps[:k])


class Poly:
    """Sparse polynomial over Q in commuting variables x_1, x_2, ...

    terms maps a trimmed exponent tuple to a nonzero Fraction; the zero
    polynomial has an empty terms dict.  Instances are treated as
    immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def const(c) -> "Poly":
        c = _frac(c)
        return Poly({(): c} if c else None)

    @staticmethod
    def x(i: int) -> "Poly":
        if i < 1:
            raise ValueError("variables are 1-indexed")
        exps = tuple([0] * (i - 1) + [1])
        return Poly({exps: Fraction(1)})

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({(): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def variables(self):
        vs = set()
        for e in self.terms:
            vs.update(i + 1 for i, p in enumerate(e) if p)
        return sorted(vs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return Poly()
            return Poly({e: v * c for e, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _trim(
                    tuple(
                        (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0)
                        for i in range(max(len(e1), len(e2)))
                    )
                )
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def subs(self, mapping) -> "Poly":
        """Substitute x_i -> mapping[i] (Poly or rational) for listed variables."""
        out = Poly()
        cache = {}
        for e, c in self.terms.items():
            term = Poly.const(c)
            for i, p in enumerate(e):
                if not p:
                    continue
                v = i + 1
                base = mapping.get(v)
                if base is None:
                    base = Poly.x(v)
                elif not isinstance(base, Poly):
                    base = Poly.const(base)
                key = (v, p, id(base))
                if key not in cache:
                    cache[key] = base ** p
                term = term * cache[key]
            out = out + term
        return out

    def shifted(self, offsets) -> "Poly":
        """Substitute x_i -> x_i + offsets[i] for each nonzero offset."""
        mapping = {
            i: Poly.x(i) + Fraction(c) for i, c in offsets.items() if c
        }
        if not mapping:
            return self
        return self.subs(mapping)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    __repr__ = __str__

    def latex(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "".join(
                f"x_{{{i + 1}}}" + (f"^{{{p}}}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            coef = ""
            if not mono:
                coef = _frac_latex(c)
            elif c == -1:
                coef = "-"
            elif c != 1:
                coef = _frac_latex(c)
            bits.append(coef + mono)
        out = bits[0]
        for b in bits[1:]:
            out += b if b.startswith("-") else "+" + b
        return out

    def to_json(self):
        return {
            "monomials": [
                {"exps": list(e), "coeff": str(c)}
                for e, c in sorted(self.terms.items())
            ]
        }

    @staticmethod
    def from_json(data) -> "Poly":
        out = Poly()
        for mono in data["monomials"]:
            out = out + Poly({_trim(tuple(mono["exps"])): _frac(mono["coeff"])})
        return out


def _frac_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    s = "-" if c < 0 else ""
    return s + f"\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


class Weight:
    """Vector in the dual Cartan of gl(m,n), in eps/delta coordinates.

    Coordinates are Fractions for ordinary weights; a "symbolic" weight may
    carry Poly coordinates (used to verify identities for generic points of
    a hyperplane).
    """

    __slots__ = ("m", "n", "coords")

    def __init__(self, m: int, n: int, coords):
        coords = tuple(
            c if isinstance(c, (Fraction, Poly)) else _frac(c) for c in coords
        )
        if len(coords) != m + n:
            raise ValueError(f"expected {m + n} coordinates, got {len(coords)}")
        self.m = m
        self.n = n
        self.coords = coords

    @staticmethod
    def zero(m, n) -> "Weight":
        return Weight(m, n, [Fraction(0)] * (m + n))

    @staticmethod
    def eps(m, n, i) -> "Weight":
        if not 1 <= i <= m:
            raise ValueError(f"eps index {i} out of range for gl({m},{n})")
        c = [Fraction(0)] * (m + n)
        c[i - 1] = Fraction(1)
        return Weight(m, n, c)

    @staticmethod
    def delta(m, n, j) -> "Weight":
        if not 1 <= j <= n:
            raise ValueError(f"delta index {j} out of range for gl({m},{n})")
        c = [Fraction(0)] * (m + n)
        c[m + j - 1] = Fraction(1)
        return Weight(m, n, c)

    @staticmethod
    def basis(m, n, i) -> "Weight":
        """i-th coordinate functional, 1 <= i <= m+n (eps then delta)."""
        c = [Fraction(0)] * (m + n)
        c[i - 1] = Fraction(1)
        return Weight(m, n, c)

    def _check(self, other):
        if self.m != other.m or self.n != other.n:
            raise ValueError("dimension mismatch between weights")

    def __add__(self, other):
        self._check(other)
        return Weight(self.m, self.n, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Weight(self.m, self.n, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Weight(self.m, self.n, [-a for a in self.coords])

    def __rmul__(self, c):
        if not isinstance(c, Poly):
            c = _frac(c)
        return Weight(self.m, self.n, [c * a for a in self.coords])

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.m, self.n, self.coords))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__

    def to_json(self):
        return [str(c) for c in self.coords]

    @staticmethod
    def from_json(m, n, data) -> "Weight":
        return Weight(m, n, [_frac(c) for c in data])


def bilinear_form(mu: Weight, nu: Weight):
    """Supersymmetric form: (eps_i,eps_j)=delta_ij, (delta_i,delta_j)=-delta_ij."""
    mu._check(nu)
    m = mu.m
    out = Fraction(0)
    for i in range(m):
        out = out + mu.coords[i] * nu.coords[i]
    for j in range(m, m + mu.n):
        out = out - mu.coords[j] * nu.coords[j]
    return out


def rho(m: int, n: int = 0) -> Weight:
    """Weyl vector normalized to coordinate sum zero.

    Pairs to 1 with eps-side simple roots, 0 with the odd simple root and -1
    with delta-side simple roots; the radical direction is fixed by the zero
    coordinate sum (for m = n any choice pairs identically with all roots).
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1, n >= 0")
    eps_part = [Fraction(m - n + 1 - 2 * i, 2) for i in range(1, m + 1)]
    del_part = [Fraction(m + n + 1 - 2 * j, 2) for j in range(1, n + 1)]
    return Weight(m, n, eps_part + del_part)


def h_of_weight(mu: Weight) -> Poly:
    """Linear polynomial h_mu in the diagonal units with beta(h_mu) = (mu, beta)."""
    out = Poly()
    for i in range(mu.m):
        c = mu.coords[i]
        if c:
            out = out + Poly.x(i + 1) * c
    for j in range(mu.m, mu.m + mu.n):
        c = mu.coords[j]
        if c:
            out = out - Poly.x(j + 1) * c
    return out


def eval_at(p: Poly, lam: Weight):
    """Evaluate p at x_i = i-th coordinate of lam.

    Returns a Fraction for numeric weights; a Poly when lam has symbolic
    (Poly) coordinates.
    """
    mapping = {i + 1: lam.coords[i] for i in range(lam.m + lam.n)}
    out = p.subs(mapping)
    if out.is_constant() and all(isinstance(c, Fraction) for c in lam.coords):
        return out.constant_value()
    return out


class Hyperplane:
    """Locus (lam + rho, eta) = mult * (eta,eta)/2 in the dual Cartan."""

    __slots__ = ("eta", "mult")

    def __init__(self, eta: Weight, mult: int = 1):
        if mult < 1:
            raise ValueError("multiplicity must be a positive integer")
        if bilinear_form(eta, eta) == 0 and mult != 1:
            raise ValueError("isotropic roots only admit multiplicity 1")
        self.eta = eta
        self.mult = mult

    def rhs(self) -> Fraction:
        return Fraction(self.mult) * bilinear_form(self.eta, self.eta) / 2

    def member(self, lam: Weight) -> bool:
        r = rho(lam.m, lam.n)
        return bilinear_form(lam + r, self.eta) == self.rhs()

    def constraint_poly(self) -> Poly:
        """Linear polynomial in the coordinates of lam vanishing exactly on the hyperplane."""
        eta = self.eta
        r = rho(eta.m, eta.n)
        return h_of_weight(eta) + Poly.const(bilinear_form(r, eta) - self.rhs())

    def __repr__(self):
        return f"Hyperplane(eta={self.eta}, mult={self.mult})"


def hyperplane_member(lam: Weight, hp: Hyperplane) -> bool:
    return hp.member(lam)


_SAMPLE_BOUND = 1000


def sample_hyperplane(hp: Hyperplane, seed: int, count: int) -> list:
    """Deterministic distinct rational points on hp, coordinates bounded by 10^3."""
    if count < 1:
        raise ValueError("count must be >= 1")
    eta = hp.eta
    m, n = eta.m, eta.n
    coeffs = [eta.coords[i] for i in range(m)] + [
        -eta.coords[m + j] for j in range(n)
    ]
    pivot = next(i for i, c in enumerate(coeffs) if c)
    r = rho(m, n)
    target = hp.rhs() - bilinear_form(r, eta)  # required value of (lam, eta)
    rng = random.Random(seed)
    points = []
    seen = set()
    while len(points) < count:
        coords = [
            Fraction(rng.randint(-24, 24), rng.randint(1, 5)) for _ in range(m + n)
        ]
        partial = sum(
            (coeffs[i] * coords[i] for i in range(m + n) if i != pivot),
            Fraction(0),
        )
        coords[pivot] = (target - partial) / coeffs[pivot]
        if any(
            abs(c.numerator) > _SAMPLE_BOUND or c.denominator > _SAMPLE_BOUND
            for c in coords
        ):
            continue
        lam = Weight(m, n, coords)
        if lam.coords in seen:
            continue
        seen.add(lam.coords)
        assert hp.member(lam)
        points.append(lam)
    return points


def symbolic_weight(m: int, n: int) -> Weight:
    """Weight whose i-th coordinate is the parameter variable x_{m+n+i}.

    The parameter block is disjoint from the Cartan variables x_1..x_{m+n},
    so coefficients obtained by evaluating at a symbolic weight stay central
    under all later normal ordering.  Constraints for reduce_mod must be
    written in the same parameter variables; see param_poly.
    """
    N = m + n
    return Weight(m, n, [Poly.x(N + i) for i in range(1, N + 1)])


def param_poly(p: Poly, m: int, n: int) -> Poly:
    """Rewrite a polynomial in weight coordinates x_1..x_{m+n} in the
    parameter variables used by symbolic_weight."""
    N = m + n
    return p.subs({i: Poly.x(N + i) for i in range(1, N + 1)})


def reduce_mod(p: Poly, constraints) -> Poly:
    """Reduce p modulo a list of independent linear constraint polynomials.

    Each constraint is solved for its highest-index unused variable and
    substituted away; the result is zero iff p vanishes on the common zero
    locus of the constraints.
    """
    used = set()
    out = p
    solved = []
    # triangularize the constraints first
    for c in constraints:
        for prev_var, prev_expr in solved:
            c = c.subs({prev_var: prev_expr})
        if c.is_zero():
            continue
        if c.is_constant():
            raise ValueError("constraints are inconsistent")
        if c.degree() != 1:
            raise ValueError("constraints must be linear")
        var = max(v for v in c.variables() if v not in used)
        used.add(var)
        coeff = Fraction(0)
        rest = Poly()
        for e, cf in c.terms.items():
            if len(e) >= var and e[var - 1]:
                coeff = cf
            else:
                rest = rest + Poly({e: cf})
        expr = rest * (Fraction(-1) / coeff)
        solved.append((var, expr))
    for var, expr in solved:
        out = out.subs({var: expr})
    return out

