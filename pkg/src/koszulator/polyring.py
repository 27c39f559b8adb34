"""Sparse multivariate polynomials and graded quotient rings.

A monomial is a tuple of exponents; polynomials map monomials to nonzero
field scalars.  A GradedQuotientRing holds per-degree normal-form data for
Q/I computed by linear algebra on the degree strands of the ideal: row
reduction always eliminates the graded-lex largest monomial, and the
surviving (non-pivot) monomials are the standard basis of that degree.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .fields import FieldError, field_from_spec


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingError(ValueError):
    pass


class TruncationError(RuntimeError):
    """Raised when a computation needs a degree beyond the truncation bound."""


def monomial_degree(mono) -> int:
    return sum(mono)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int):
    """All degree-d monomials in graded-lex descending order (x1 largest)."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for head in range(d, -1, -1):
        for tail in monomials_of_degree(nvars - 1, d - head):
            out.append((head,) + tail)
    return out


class Polynomial:
    """Sparse polynomial; terms maps exponent tuples to nonzero scalars."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars, field, terms=None):
        self.nvars = nvars
        self.field = field
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = field.of(c)
                if not field.is_zero(c):
                    self.terms[m] = c

    # -- construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, nvars, field):
        return cls(nvars, field)

    @classmethod
    def constant(cls, nvars, field, c):
        return cls(nvars, field, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, field, i):
        """The i-th variable (0-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, field, {tuple(e): field.one()})

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        terms = dict(self.terms)
        f = self.field
        for m, c in other.terms.items():
            s = f.add(terms.get(m, f.zero()), c)
            if f.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        out = Polynomial(self.nvars, f)
        out.terms = terms
        return out

    def __neg__(self):
        out = Polynomial(self.nvars, self.field)
        out.terms = {m: self.field.neg(c) for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = f.add(terms.get(m, f.zero()), f.mul(c1, c2))
                if f.is_zero(s):
                    terms.pop(m, None)
                else:
                    terms[m] = s
        out = Polynomial(self.nvars, f)
        out.terms = terms
        return out

    def scale(self, c):
        f = self.field
        c = f.of(c)
        out = Polynomial(self.nvars, f)
        if not f.is_zero(c):
            out.terms = {m: f.mul(v, c) for m, v in self.terms.items()}
        return out

    def mul_monomial(self, mono):
        out = Polynomial(self.nvars, self.field)
        out.terms = {monomial_mul(m, mono): c for m, c in self.terms.items()}
        return out

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        return max(map(monomial_degree, self.terms)) if self.terms else None

    def is_homogeneous(self, d=None) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def homogeneous_components(self):
        """Dict degree -> homogeneous part."""
        comps = {}
        for m, c in self.terms.items():
            comps.setdefault(monomial_degree(m), {})[m] = c
        return {d: Polynomial(self.nvars, self.field, t) for d, t in sorted(comps.items())}

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self.to_string(['x%d' % (i + 1) for i in range(self.nvars)])})"

    def to_string(self, var_names) -> str:
        if not self.terms:
            return "0"
        f = self.field
        bits = []
        for m in sorted(self.terms, key=lambda m: (monomial_degree(m), m), reverse=True):
            c = self.terms[m]
            s = f.to_str(c)
            factors = []
            for name, e in zip(var_names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if factors:
                if s == "1":
                    body = "*".join(factors)
                elif s == "-1":
                    body = "-" + "*".join(factors)
                else:
                    body = s + "*" + "*".join(factors)
            else:
                body = s
            bits.append(body)
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


# -- parser --------------------------------------------------------------


def parse_polynomial(text: str, var_names, field) -> Polynomial:
    """Parse signed sums of terms like '2*x^2*y - 1/3*z + 5'."""
    nvars = len(var_names)
    var_index = {name: i for i, name in enumerate(var_names)}
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected a number", start)
        return int(text[start:pos])

    def read_name() -> str:
        nonlocal pos
        start = pos
        while pos < n and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        return text[start:pos]

    result = Polynomial.zero(nvars, field)
    skip_ws()
    if pos >= n:
        raise ParseError("empty input", pos)
    first = True
    while pos < n:
        skip_ws()
        if pos >= n:
            break
        sign = 1
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = -1
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError(f"expected '+' or '-', got {text[pos]!r}", pos)
        first = False
        # one term: optional coefficient, then *-separated variable powers
        coeff = Fraction(sign)
        exps = [0] * nvars
        saw_factor = False
        if pos < n and text[pos].isdigit():
            num = read_int()
            skip_ws()
            if pos < n and text[pos] == "/":
                pos += 1
                skip_ws()
                den_pos = pos
                den = read_int()
                if den == 0:
                    raise ParseError("zero denominator", den_pos)
                coeff *= Fraction(num, den)
            else:
                coeff *= num
            saw_factor = True
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
        while pos < n and (text[pos].isalpha() or text[pos] == "_"):
            name_pos = pos
            name = read_name()
            if name not in var_index:
                raise ParseError(f"unknown variable {name!r}", name_pos)
            e = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                e = read_int()
            exps[var_index[name]] += e
            saw_factor = True
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
            else:
                break
        if not saw_factor:
            raise ParseError("expected a term", pos)
        try:
            c = field.of(coeff)
        except FieldError as exc:
            raise ParseError(str(exc), pos) from exc
        result = result + Polynomial(nvars, field, {tuple(exps): c})
        skip_ws()
    return result


# -- graded quotient ring --------------------------------------------------


class _DegreeData:
    __slots__ = ("monomials", "index", "pivot_rows", "pivot_cols", "standard", "standard_index")

    def __init__(self, monomials, pivot_rows, pivot_cols):
        self.monomials = monomials
        self.index = {m: i for i, m in enumerate(monomials)}
        self.pivot_rows = pivot_rows
        self.pivot_cols = pivot_cols
        piv = set(pivot_cols)
        self.standard = [m for i, m in enumerate(monomials) if i not in piv]
        self.standard_index = {m: i for i, m in enumerate(self.standard)}


class GradedQuotientRing:
    """Q = k[x1..xn] / I for a homogeneous ideal I, handled degree by degree.

    The degree cache is filled lazily up to the truncation bound and is safe
    for concurrent reads.
    """

    def __init__(self, var_names, generators, field, truncation: int = 16):
        self.var_names = list(var_names)
        self.nvars = len(self.var_names)
        if len(set(self.var_names)) != self.nvars or self.nvars == 0:
            raise RingError("variable names must be distinct and non-empty")
        self.field = field
        self.truncation = truncation
        self.generators = []
        for g in generators:
            if g.is_zero():
                raise RingError("zero ideal generator")
            if not g.is_homogeneous():
                raise RingError(
                    f"ideal generator {g.to_string(self.var_names)!r} is not homogeneous"
                )
            if g.degree() < 2:
                raise RingError("ideal generators must have degree >= 2")
            self.generators.append(g)
        self._cache: dict[int, _DegreeData] = {}
        self._lock = threading.Lock()

    @property
    def codepth(self) -> int:
        return len(self.generators)

    def variable(self, i) -> Polynomial:
        return Polynomial.variable(self.nvars, self.field, i)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.nvars, self.field)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.nvars, self.field, self.field.one())

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.var_names, self.field)

    # -- degree strands -------------------------------------------------------
    def _degree_data(self, d: int) -> _DegreeData:
        if d < 0:
            raise ValueError("negative degree")
        if d > self.truncation:
            raise TruncationError(
                f"degree {d} beyond truncation bound {self.truncation}"
            )
        data = self._cache.get(d)
        if data is not None:
            return data
        with self._lock:
            data = self._cache.get(d)
            if data is not None:
                return data
            data = self._build_degree(d)
            self._cache[d] = data
            return data

    def _build_degree(self, d: int) -> _DegreeData:
        f = self.field
        monomials = monomials_of_degree(self.nvars, d)
        ncols = len(monomials)
        index = {m: i for i, m in enumerate(monomials)}
        rows = []
        for g in self.generators:
            dg = g.degree()
            if dg > d:
                continue
            for m in monomials_of_degree(self.nvars, d - dg):
                row = [f.zero()] * ncols
                for gm, c in g.terms.items():
                    row[index[monomial_mul(gm, m)]] = c
                rows.append(row)
        # eliminate with pivots on the first (graded-lex largest) columns
        from .linalg import rref

        red, piv = rref(rows, f) if rows else ([], [])
        return _DegreeData(monomials, red, piv)

    def dim_quotient(self, d: int) -> int:
        """dim_k (Q/I)_d."""
        return len(self._degree_data(d).standard)

    def dim_poly(self, d: int) -> int:
        """dim_k Q_d = C(n-1+d, d)."""
        return math.comb(self.nvars - 1 + d, d)

    def degree_piece_basis(self, d: int):
        """Standard monomial basis of (Q/I)_d, graded-lex descending."""
        return list(self._degree_data(d).standard)

    def _reduce_vector(self, vec, data: _DegreeData):
        f = self.field
        v = list(vec)
        for row, c in zip(data.pivot_rows, data.pivot_cols):
            p = v[c]
            if not f.is_zero(p):
                v = [f.sub(x, f.mul(p, y)) for x, y in zip(v, row)]
        return v

    def normal_form_homogeneous(self, poly: Polynomial, d=None) -> Polynomial:
        if poly.is_zero():
            return poly
        if d is None:
            d = poly.degree()
        if not poly.is_homogeneous(d):
            raise RingError("normal form needs a homogeneous input")
        data = self._degree_data(d)
        f = self.field
        vec = [f.zero()] * len(data.monomials)
        for m, c in poly.terms.items():
            vec[data.index[m]] = c
        vec = self._reduce_vector(vec, data)
        return Polynomial(
            self.nvars, f, {m: c for m, c in zip(data.monomials, vec) if not f.is_zero(c)}
        )

    def normal_form(self, poly: Polynomial) -> Polynomial:
        """Normal form of any polynomial, reducing each homogeneous part."""
        out = self.zero()
        for _, comp in poly.homogeneous_components().items():
            out = out + self.normal_form_homogeneous(comp)
        return out

    def nf_coeff_vector(self, poly: Polynomial, d: int):
        """Coefficients of the degree-d normal form over the standard basis."""
        data = self._degree_data(d)
        f = self.field
        vec = [f.zero()] * len(data.monomials)
        for m, c in poly.terms.items():
            if monomial_degree(m) != d:
                raise RingError("nf_coeff_vector needs a homogeneous degree-d input")
            vec[data.index[m]] = c
        vec = self._reduce_vector(vec, data)
        return [vec[data.index[m]] for m in data.standard]

    def hilbert_coefficients(self, up_to: int):
        """dim_k (Q/I)_d for d = 0..up_to (inclusive)."""
        return [self.dim_quotient(d) for d in range(up_to + 1)]

    def ci_hilbert_coefficients(self, up_to: int):
        """Series coefficients of prod(1-t^{d_t}) / (1-t)^n, the complete
        intersection prediction for the Hilbert series."""
        num = [1]
        for g in self.generators:
            dg = g.degree()
            new = [0] * (len(num) + dg)
            for i, c in enumerate(num):
                new[i] += c
                new[i + dg] -= c
            num = new
        num = num[: up_to + 1] + [0] * max(0, up_to + 1 - len(num))
        # divide by (1-t)^n: n successive partial-sum passes
        out = list(num)
        for _ in range(self.nvars):
            acc = 0
            for i in range(up_to + 1):
                acc += out[i]
                out[i] = acc
        return out


def load_ring_file(path, truncation: int = 16) -> GradedQuotientRing:
    """Read the ring input format: 'field ...', 'vars a,b,c', 'gen <poly>' lines."""
    field = None
    var_names = None
    gen_texts = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("field "):
                field = field_from_spec(line[len("field "):].strip())
            elif line.startswith("vars "):
                var_names = [v.strip() for v in line[len("vars "):].split(",")]
                if any(not v for v in var_names):
                    raise RingError(f"line {lineno}: empty variable name")
            elif line.startswith("gen "):
                gen_texts.append((lineno, line[len("gen "):].strip()))
            else:
                raise RingError(f"line {lineno}: unrecognized directive {line.split()[0]!r}")
    if field is None:
        raise RingError("missing 'field' line")
    if var_names is None:
        raise RingError("missing 'vars' line")
    gens = []
    for lineno, text in gen_texts:
        try:
            gens.append(parse_polynomial(text, var_names, field))
        except ParseError as exc:
            raise RingError(f"line {lineno}: {exc}") from exc
    return GradedQuotientRing(var_names, gens, field, truncation=truncation)


def ring_from_strings(var_names, gen_texts, field, truncation: int = 16):
    gens = [parse_polynomial(t, var_names, field) for t in gen_texts]
    return GradedQuotientRing(var_names, gens, field, truncation=truncation)
