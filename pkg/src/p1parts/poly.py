"""Sparse multivariate polynomials under the lex monomial order.

Monomials are exponent tuples indexed by variable slot, slot 0 being the
lex-greatest variable, so plain tuple comparison is exactly the lex order.
Polynomials are immutable term maps; all operations are pure functions.

The gcd is a primitive polynomial remainder sequence with content
extraction, recursing on one variable at a time.  No factorization into
irreducibles happens anywhere; squarefree parts come from gcds with
partial derivatives (with exact p-th powers handled by exponent division
in characteristic p).
"""

from __future__ import annotations

from .fields import Field, FieldError


class Layout:
    """Ordered variable slots, lex-greatest first."""

    __slots__ = ("names", "_pos")

    def __init__(self, names):
        self.names = tuple(names)
        self._pos = {name: i for i, name in enumerate(self.names)}
        if len(self._pos) != len(self.names):
            raise ValueError("duplicate variable names in layout")

    @classmethod
    def affine(cls, n: int) -> "Layout":
        """Slots x_n > ... > x_1."""
        return cls(f"x_{n - i}" for i in range(n))

    @property
    def nslots(self) -> int:
        return len(self.names)

    def pos(self, name: str) -> int:
        if name not in self._pos:
            raise KeyError(name)
        return self._pos[name]

    def term_factor_positions(self, mono):
        """Print order of a term's variable factors (subclasses may reorder)."""
        return [i for i, e in enumerate(mono) if e]

    def __repr__(self):
        return f"Layout({', '.join(self.names)})"


class ProjLayout(Layout):
    """Slots for n projective-line coordinates plus their frozen twins.

    Point coordinate j is the pair (y_{2j} : y_{2j-1}); already-chosen
    coordinate values are written z_k.  Order: y_{2n} > ... > y_1 >
    z_{2n} > ... > z_1, so the y block dominates and a polynomial's
    z-part behaves like a coefficient.
    """

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("coordinate count must be nonnegative")
        names = [f"y_{2 * n - i}" for i in range(2 * n)]
        names += [f"z_{2 * n - i}" for i in range(2 * n)]
        super().__init__(names)
        self.n = n

    def y_pos(self, k: int) -> int:
        if not 1 <= k <= 2 * self.n:
            raise ValueError(f"y index {k} out of range")
        return 2 * self.n - k

    def z_pos(self, k: int) -> int:
        if not 1 <= k <= 2 * self.n:
            raise ValueError(f"z index {k} out of range")
        return 4 * self.n - k

    def term_factor_positions(self, mono):
        # z factors print first (they are the scalar part of a term),
        # each block by decreasing variable index.
        half = 2 * self.n
        zs = [i for i, e in enumerate(mono) if e and i >= half]
        ys = [i for i, e in enumerate(mono) if e and i < half]
        return zs + ys


def compare_monomials(a, b, layout: Layout) -> int:
    """Lex comparison scanning slots from greatest to least: -1, 0 or 1."""
    if len(a) != layout.nslots or len(b) != layout.nslots:
        raise ValueError("monomial slot count does not match layout")
    if a == b:
        return 0
    return 1 if a > b else -1


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial: a term map exponent-tuple -> coefficient.

    Construction normalizes (zero coefficients dropped, values coerced to
    the field's canonical form).  Never mutate ``terms`` after creation.
    """

    __slots__ = ("field", "nslots", "terms", "_lead")

    def __init__(self, field: Field, nslots: int, terms=None):
        self.field = field
        self.nslots = nslots
        clean = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                mono = tuple(mono)
                if len(mono) != nslots:
                    raise ValueError("exponent tuple length does not match slot count")
                if any(e < 0 for e in mono):
                    raise ValueError("negative exponent")
                v = field.coerce(c)
                if mono in clean:
                    v = field.add(clean[mono], v)
                if v:
                    clean[mono] = v
                elif mono in clean:
                    del clean[mono]
        self.terms = clean
        self._lead = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, field, nslots, terms):
        """Trusted constructor: terms already canonical, no zero values."""
        p = object.__new__(cls)
        p.field = field
        p.nslots = nslots
        p.terms = terms
        p._lead = None
        return p

    @classmethod
    def zero(cls, field, nslots):
        return cls._raw(field, nslots, {})

    @classmethod
    def const(cls, field, nslots, value):
        v = field.coerce(value)
        if not v:
            return cls.zero(field, nslots)
        return cls._raw(field, nslots, {(0,) * nslots: v})

    @classmethod
    def var(cls, field, nslots, pos, exp=1, coeff=1):
        mono = tuple(exp if i == pos else 0 for i in range(nslots))
        return cls(field, nslots, {mono: coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {(0,) * self.nslots}

    def constant_value(self):
        if self.is_zero():
            return self.field.zero()
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[(0,) * self.nslots]

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lead is None:
            self._lead = max(self.terms)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def occurring_slots(self):
        used = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(i)
        return used

    def sorted_terms(self, reverse=True):
        return [(m, self.terms[m]) for m in sorted(self.terms, reverse=reverse)]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldError("operands belong to different fields")
        if self.nslots != other.nslots:
            raise ValueError("operands have different slot counts")

    def __add__(self, other):
        self._check(other)
        field = self.field
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = field.add(out.get(mono, 0), c) if mono in out else c
            if v:
                out[mono] = v
            elif mono in out:
                del out[mono]
        return Polynomial._raw(field, self.nslots, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.field
        return Polynomial._raw(
            field, self.nslots, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        field = self.field
        if not self.terms or not other.terms:
            return Polynomial.zero(field, self.nslots)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                v = field.mul(c1, c2)
                if mono in out:
                    v = field.add(out[mono], v)
                if v:
                    out[mono] = v
                elif mono in out:
                    del out[mono]
        return Polynomial._raw(field, self.nslots, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(self.field, self.nslots, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c):
        """Multiply by a field scalar."""
        field = self.field
        c = field.coerce(c)
        if not c:
            return Polynomial.zero(field, self.nslots)
        return Polynomial._raw(
            field, self.nslots, {m: field.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono, c):
        """Multiply by a single term (used heavily by division loops)."""
        field = self.field
        c = field.coerce(c)
        if not c:
            return Polynomial.zero(field, self.nslots)
        return Polynomial._raw(
            field, self.nslots,
            {_mono_mul(m, mono): field.mul(v, c) for m, v in self.terms.items()})

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lead_coeff()
        if lc == self.field.one():
            return self
        inv = self.field.inv(lc)
        return self.scale(inv)

    # -- structure ops -------------------------------------------------------

    def degree_in(self, pos: int) -> int:
        """Largest exponent of the slot; 0 if absent, -1 for the zero poly."""
        if not self.terms:
            return -1
        return max(m[pos] for m in self.terms)

    def substitute(self, images: dict) -> "Polynomial":
        """Simultaneous substitution slot -> polynomial, fully expanded.

        Every slot occurring in the polynomial must have an image; build
        identity entries explicitly where a slot maps to itself.
        """
        field = self.field
        nslots = self.nslots
        for pos in self.occurring_slots():
            if pos not in images:
                raise ValueError(f"no image for occurring slot {pos}")
        for img in images.values():
            if img.field != field:
                raise FieldError("substitution image in a different field")
            if img.nslots != nslots:
                raise ValueError("substitution image has different slot count")
        acc = Polynomial.zero(field, nslots)
        pow_cache = {}
        for mono, c in self.terms.items():
            term = Polynomial.const(field, nslots, c)
            for pos, e in enumerate(mono):
                if not e:
                    continue
                key = (pos, e)
                if key not in pow_cache:
                    pow_cache[key] = images[pos] ** e
                term = term * pow_cache[key]
            acc = acc + term
        return acc

    def evaluate(self, values):
        """Evaluate at raw field values, one per slot; returns a raw value."""
        if len(values) != self.nslots:
            raise ValueError("value count does not match slot count")
        field = self.field
        p = field.characteristic
        acc = field.zero()
        for mono, c in self.terms.items():
            t = c
            for pos, e in enumerate(mono):
                if e:
                    t = field.mul(t, pow(values[pos], e, p) if p else values[pos] ** e)
            acc = field.add(acc, t)
        return acc

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.field == other.field
                and self.nslots == other.nslots
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nslots, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"s{i}^{e}" for i, e in enumerate(m) if e) or "1"
            bits.append(f"{c}*{mono}")
        return "Poly(" + " + ".join(bits) + ")"


def lead_split(f: Polynomial, first_frozen_pos: int):
    """Leading data with respect to an unfrozen/frozen slot split.

    Slots before ``first_frozen_pos`` are the live (y) block, the rest the
    frozen (z) block.  Terms are grouped by their live monomial part; the
    result is the lex-greatest live monomial together with its full frozen
    coefficient polynomial.  A polynomial lying entirely in the frozen
    block yields the trivial monomial and itself as coefficient.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no leading data")
    nslots = f.nslots
    zeros_tail = (0,) * (nslots - first_frozen_pos)
    zeros_head = (0,) * first_frozen_pos
    best = None
    for mono in f.terms:
        live = mono[:first_frozen_pos] + zeros_tail
        if best is None or live > best:
            best = live
    coeff_terms = {}
    field = f.field
    for mono, c in f.terms.items():
        if mono[:first_frozen_pos] + zeros_tail == best:
            frozen = zeros_head + mono[first_frozen_pos:]
            coeff_terms[frozen] = c
    return best, Polynomial._raw(field, nslots, coeff_terms)


def derivative(f: Polynomial, pos: int) -> Polynomial:
    field = f.field
    out = {}
    for mono, c in f.terms.items():
        e = mono[pos]
        if not e:
            continue
        v = field.mul(c, field.coerce(e))
        if not v:
            continue
        m = mono[:pos] + (e - 1,) + mono[pos + 1:]
        if m in out:
            v = field.add(out[m], v)
        if v:
            out[m] = v
        elif m in out:
            del out[m]
    return Polynomial._raw(field, f.nslots, out)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises ValueError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check(g)
    field = f.field
    if g.is_constant():
        return f.scale(field.inv(g.constant_value()))
    lm_g = g.lead_monomial()
    lc_g = g.lead_coeff()
    work = dict(f.terms)
    quot = {}
    while work:
        m = max(work)
        if not _mono_divides(lm_g, m):
            raise ValueError("not an exact division")
        q_mono = _mono_div(m, lm_g)
        q_coeff = field.div(work[m], lc_g)
        quot[q_mono] = q_coeff
        for mono, c in g.terms.items():
            t = _mono_mul(mono, q_mono)
            v = field.sub(work.get(t, field.zero()), field.mul(c, q_coeff))
            if v:
                work[t] = v
            elif t in work:
                del work[t]
    return Polynomial._raw(field, f.nslots, quot)


def _coeffs_in(f: Polynomial, pos: int):
    """Split f by the exponent of one slot: degree -> coefficient poly."""
    field = f.field
    buckets = {}
    for mono, c in f.terms.items():
        e = mono[pos]
        stripped = mono[:pos] + (0,) + mono[pos + 1:]
        buckets.setdefault(e, {})[stripped] = c
    return {e: Polynomial._raw(field, f.nslots, t) for e, t in buckets.items()}


def _content_in(f: Polynomial, pos: int) -> Polynomial:
    parts = _coeffs_in(f, pos)
    g = Polynomial.zero(f.field, f.nslots)
    for e in sorted(parts):
        g = poly_gcd(g, parts[e])
        if g.is_constant() and not g.is_zero():
            break
    return g


def _pseudo_rem(f: Polynomial, g: Polynomial, pos: int) -> Polynomial:
    """Pseudo-remainder of f by g viewed as univariate in one slot."""
    dg = g.degree_in(pos)
    lc_g = _coeffs_in(g, pos)[dg]
    df = f.degree_in(pos)
    while not f.is_zero() and df >= dg:
        lc_f = _coeffs_in(f, pos)[df]
        shift = Polynomial.var(f.field, f.nslots, pos, exp=df - dg) \
            if df > dg else Polynomial.const(f.field, f.nslots, 1)
        f = lc_g * f - shift * lc_f * g
        df = f.degree_in(pos)
    return f


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by primitive remainder sequences, one variable at a time."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    f._check(g)
    one = Polynomial.const(f.field, f.nslots, 1)
    if f.is_constant() or g.is_constant():
        return one
    pos = min(min(f.occurring_slots()), min(g.occurring_slots()))
    if f.degree_in(pos) == 0:
        return poly_gcd(f, _content_in(g, pos))
    if g.degree_in(pos) == 0:
        return poly_gcd(_content_in(f, pos), g)
    cf = _content_in(f, pos)
    cg = _content_in(g, pos)
    c = poly_gcd(cf, cg)
    a = exact_div(f, cf)
    b = exact_div(g, cg)
    if a.degree_in(pos) < b.degree_in(pos):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, pos)
        if not r.is_zero():
            r = exact_div(r, _content_in(r, pos))
        a, b = b, r
    return (c * a).monic()


def _pth_root(f: Polynomial, p: int) -> Polynomial:
    # Over F_p every coefficient is its own p-th root (Frobenius fixes F_p).
    terms = {tuple(e // p for e in m): c for m, c in f.terms.items()}
    return Polynomial._raw(f.field, f.nslots, terms)


def squarefree_part(f: Polynomial) -> Polynomial:
    """The product of the distinct irreducible factors of f, monic.

    Computed from gcds of f with its partial derivatives; in positive
    characteristic exact p-th powers are peeled off by exponent division
    first, and factors whose multiplicity the derivatives miss are
    recovered recursively.
    """
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    f = f.monic()
    if f.is_constant():
        return f
    p = f.field.characteristic
    if p:
        while all(e % p == 0 for mono in f.terms for e in mono):
            f = _pth_root(f, p)
        if f.is_constant():
            return f
    g = f
    for pos in sorted(f.occurring_slots()):
        d = derivative(f, pos)
        if not d.is_zero():
            g = poly_gcd(g, d)
            if g.is_constant():
                return f
    w = exact_div(f, g).monic()
    s = squarefree_part(g)
    extra = exact_div(s, poly_gcd(s, w))
    return (w * extra).monic()


def to_canonical_text(f: Polynomial, layout: Layout) -> str:
    """Deterministic text form: terms in decreasing lex order, '*' between
    factors, '^' for powers, magnitude-1 coefficients and the leading '+'
    suppressed."""
    if f.nslots != layout.nslots:
        raise ValueError("polynomial does not match layout")
    if f.is_zero():
        return "0"
    rational = f.field.characteristic == 0
    chunks = []
    for mono, c in f.sorted_terms():
        if rational and c < 0:
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        factors = []
        for pos in layout.term_factor_positions(mono):
            e = mono[pos]
            factors.append(layout.names[pos] if e == 1 else f"{layout.names[pos]}^{e}")
        if not factors:
            body = str(mag)
        elif mag == f.field.one():
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += sign + body
    return out
