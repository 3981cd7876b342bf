"""Graded exterior algebra over a named coframe.

Forms are sparse sums of wedge monomials with ParamPoly coefficients.
A CoframeSpec supplies the structure equations that drive the exterior
derivative; the transverse coordinate t enters through coefficient
derivatives paired with the dt generator.  The Hodge star is taken
combinatorially in a declared orthonormal frame.
"""

from __future__ import annotations

from .scalars import (
    ParamPoly,
    POLY_ZERO,
    InexactDivision,
    poly_div_exact,
)


class UnknownGenerator(KeyError):
    """A form mentions a generator outside its coframe."""


class DegreeError(ValueError):
    """An operation received a form of the wrong degree."""


class SingularFrame(ArithmeticError):
    """The frame-change matrix is identically singular."""


class NonPolynomialCoefficient(ArithmeticError):
    """A coefficient left the polynomial ring (e.g. a surviving 1/s_k)."""


class NotInFrameSpan(ValueError):
    """A form cannot be expressed over the declared frame."""


def _merge_sorted(idx, extra):
    """Insert sorted tuple `extra` into sorted tuple `idx` with sign.

    Returns (None, 0) when an index repeats.
    """
    merged = list(idx)
    sign = 1
    for k in extra:
        # insertion position and parity of transpositions
        pos = 0
        while pos < len(merged) and merged[pos] < k:
            pos += 1
        if pos < len(merged) and merged[pos] == k:
            return None, 0
        if (len(merged) - pos) % 2 == 1:
            sign = -sign
        merged.insert(pos, k)
    return tuple(merged), sign


class Form:
    """Sparse exterior form over an ordered generator tuple."""

    __slots__ = ("gens", "degree", "terms")

    def __init__(self, gens, degree, terms):
        gens = tuple(gens)
        clean = {}
        for idx, coeff in terms.items():
            coeff = ParamPoly.coerce(coeff)
            if coeff.is_zero():
                continue
            idx = tuple(idx)
            if len(idx) != degree or list(idx) != sorted(set(idx)):
                raise ValueError("bad monomial %r for degree %d" % (idx, degree))
            if idx and (idx[0] < 0 or idx[-1] >= len(gens)):
                raise UnknownGenerator(str(idx))
            clean[idx] = coeff
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(gens, degree=0):
        return Form(gens, degree, {})

    @staticmethod
    def scalar(gens, coeff):
        return Form(gens, 0, {(): coeff})

    @staticmethod
    def monomial(gens, names, coeff=1):
        """Wedge monomial from generator names (order as given, signed)."""
        gens = tuple(gens)
        try:
            idx = [gens.index(n) for n in names]
        except ValueError as exc:
            raise UnknownGenerator(str(exc))
        out, sign = (), 1
        for k in idx:
            out, s = _merge_sorted(out, (k,))
            if out is None:
                return Form(gens, len(names), {})
            sign *= s
        coeff = ParamPoly.coerce(coeff)
        if sign < 0:
            coeff = -coeff
        return Form(gens, len(names), {out: coeff})

    @staticmethod
    def generator(gens, name, coeff=1):
        return Form.monomial(gens, (name,), coeff)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.gens != other.gens:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, self.degree, tuple(sorted(self.terms.items()))))

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other):
        if self.gens != other.gens:
            raise ValueError("forms over different coframes")

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        self._check_compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise DegreeError("adding degree %d to %d" % (self.degree, other.degree))
        out = dict(self.terms)
        for idx, coeff in other.terms.items():
            cur = out.get(idx, POLY_ZERO) + coeff
            if cur.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = cur
        return Form(self.gens, self.degree, out)

    def __neg__(self):
        return Form(self.gens, self.degree, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = ParamPoly.coerce(c)
        return Form(self.gens, self.degree, {i: c * v for i, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other):
        self._check_compatible(other)
        deg = self.degree + other.degree
        if deg > len(self.gens):
            return Form.zero(self.gens, len(self.gens))
        out = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                merged, sign = _merge_sorted(i1, i2)
                if merged is None:
                    continue
                coeff = c1 * c2
                if sign < 0:
                    coeff = -coeff
                cur = out.get(merged, POLY_ZERO) + coeff
                if cur.is_zero():
                    out.pop(merged, None)
                else:
                    out[merged] = cur
        return Form(self.gens, deg, out)

    def __xor__(self, other):
        return self.wedge(other)

    # -- helpers -----------------------------------------------------------

    def coefficient(self, names):
        """Coefficient of the (canonically ordered) monomial of `names`."""
        gens = self.gens
        idx = tuple(sorted(gens.index(n) for n in names))
        return self.terms.get(idx, POLY_ZERO)

    def map_coefficients(self, fn):
        return Form(self.gens, self.degree, {i: fn(c) for i, c in self.terms.items()})

    def monomials(self):
        return sorted(self.terms)

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            mono = "^".join(self.gens[i] for i in idx) if idx else "1"
            parts.append("+ (%s) %s" % (self.terms[idx].render(), mono))
        return " ".join(parts)

    def __repr__(self):
        return "Form<deg %d>(%s)" % (self.degree, self.render())


def wedge(x, y):
    return x.wedge(y)


def wedge_all(forms):
    out = None
    for f in forms:
        out = f if out is None else out.wedge(f)
    return out


class CoframeSpec:
    """Named 1-form generators plus structure equations for d.

    `structure` maps generator name -> degree-2 Form giving its
    exterior derivative.  d(dt) = 0 is implied for `t_name`.  Unless
    check=False, d(d(g)) = 0 is verified for every generator.
    """

    __slots__ = ("gens", "t_name", "structure")

    def __init__(self, gens, t_name, structure, check=True):
        gens = tuple(gens)
        if t_name not in gens:
            raise ValueError("t generator %r not among generators" % t_name)
        full = {}
        for g in gens:
            d = structure.get(g)
            if d is None or (g == t_name):
                d = Form.zero(gens, 2)
            if d.gens != gens:
                raise ValueError("structure form for %r over wrong coframe" % g)
            if not d.is_zero() and d.degree != 2:
                raise DegreeError("structure form for %r must be degree 2" % g)
            full[g] = d
        if t_name in structure and not structure[t_name].is_zero():
            raise ValueError("d(dt) must be zero")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "t_name", t_name)
        object.__setattr__(self, "structure", full)
        if check and not d_squared_check(self):
            raise ValueError("structure equations violate d*d = 0")

    def __setattr__(self, name, value):
        raise AttributeError("CoframeSpec is immutable")

    def t_index(self):
        return self.gens.index(self.t_name)

    def zero(self, degree=0):
        return Form.zero(self.gens, degree)

    def gen(self, name, coeff=1):
        return Form.generator(self.gens, name, coeff)

    def mono(self, names, coeff=1):
        return Form.monomial(self.gens, names, coeff)


def ext_d(x, cf):
    """Exterior derivative driven by structure equations.

    Coefficient t-dependence contributes f'(t) dt ^ monomial; the
    generators differentiate through cf.structure by the Leibniz rule.
    """
    if x.gens != cf.gens:
        raise UnknownGenerator("form is over %r, coframe over %r" % (x.gens, cf.gens))
    t_idx = cf.t_index()
    acc = Form.zero(cf.gens, min(x.degree + 1, len(cf.gens)))
    dt = Form(cf.gens, 1, {(t_idx,): 1})
    struct = [cf.structure[g] for g in cf.gens]
    for idx, coeff in x.terms.items():
        dcoeff = coeff.deriv_t()
        if not dcoeff.is_zero():
            acc = acc + dt.wedge(Form(cf.gens, x.degree, {idx: 1})).scale(dcoeff)
        for m, gi in enumerate(idx):
            dg = struct[gi]
            if dg.is_zero():
                continue
            before = Form(cf.gens, m, {idx[:m]: coeff if m % 2 == 0 else -coeff})
            after = Form(cf.gens, len(idx) - m - 1, {idx[m + 1:]: 1})
            acc = acc + before.wedge(dg).wedge(after)
    return acc


def d_squared_check(cf):
    """True iff d(d(g)) vanishes for every generator."""
    probe = CoframeSpec.__new__(CoframeSpec)
    object.__setattr__(probe, "gens", cf.gens)
    object.__setattr__(probe, "t_name", cf.t_name)
    object.__setattr__(probe, "structure", cf.structure)
    for g in cf.gens:
        dg = cf.structure[g]
        if not ext_d(dg, probe).is_zero():
            return False
    return True


class OrthoFrame:
    """Declared orthonormal coframe of 7 one-forms over a base coframe.

    The orientation is frame[0] ^ ... ^ frame[6].  Frame-basis forms
    live over the abstract generator names in `names`.
    """

    __slots__ = ("names", "forms")

    def __init__(self, names, forms):
        names = tuple(names)
        forms = tuple(forms)
        if len(names) != len(forms):
            raise ValueError("names/forms length mismatch")
        for f in forms:
            if f.degree != 1:
                raise DegreeError("frame elements must be degree 1")
            if f.gens != forms[0].gens:
                raise ValueError("frame elements over different coframes")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "forms", forms)

    def __setattr__(self, name, value):
        raise AttributeError("OrthoFrame is immutable")

    @property
    def dim(self):
        return len(self.names)

    @property
    def base_gens(self):
        return self.forms[0].gens

    def mono(self, names, coeff=1):
        return Form.monomial(self.names, names, coeff)

    def expand(self, x):
        """Rewrite a frame-basis form over the base coframe."""
        if x.gens != self.names:
            raise UnknownGenerator("form is not in the frame basis")
        acc = Form.zero(self.base_gens, x.degree)
        for idx, coeff in x.terms.items():
            if not idx:
                acc = acc + Form.scalar(self.base_gens, coeff)
                continue
            term = wedge_all([self.forms[i] for i in idx]).scale(coeff)
            acc = acc + term
        return acc


def hodge_star(x, of):
    """Combinatorial Hodge star in the declared orthonormal frame.

    On a frame monomial X_I returns sign * X_{I^c}, the sign being the
    parity of the permutation (I, I^c) of (1..n).  Involution for n=7.
    """
    if x.gens != of.names:
        raise NotInFrameSpan("form is not expressed over the frame basis")
    n = of.dim
    out = {}
    allidx = tuple(range(n))
    for idx, coeff in x.terms.items():
        comp = tuple(i for i in allidx if i not in idx)
        perm = idx + comp
        # parity by counting inversions
        inv = 0
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    inv += 1
        out[comp] = -coeff if inv % 2 else coeff
    return Form(of.names, n - x.degree, out)


class _Frac:
    """Unreduced fraction of ParamPolys, for frame-change inversion."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = ParamPoly.coerce(num)
        self.den = ParamPoly.coerce(1 if den is None else den)
        if self.den.is_zero():
            raise ZeroDivisionError

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _Frac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return _Frac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError
        return _Frac(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return _Frac(-self.num, self.den)

    def to_poly(self):
        try:
            return poly_div_exact(self.num, self.den)
        except InexactDivision as exc:
            raise NonPolynomialCoefficient(str(exc))


def frame_change_matrix(of):
    """Rows i: frame[i] = sum_j M[i][j] * gen_j (ParamPoly entries)."""
    gens = of.base_gens
    return [
        [f.terms.get((j,), POLY_ZERO) for j in range(len(gens))]
        for f in of.forms
    ]


def _invert_matrix(mat):
    n = len(mat)
    a = [[_Frac(mat[i][j]) for j in range(n)] for i in range(n)]
    inv = [[_Frac(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for row in range(col, n):
            if not a[row][col].is_zero():
                piv = row
                break
        if piv is None:
            raise SingularFrame("no pivot in column %d" % col)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        for j in range(n):
            a[col][j] = a[col][j] / p
            inv[col][j] = inv[col][j] / p
        for row in range(n):
            if row == col or a[row][col].is_zero():
                continue
            f = a[row][col]
            for j in range(n):
                a[row][j] = a[row][j] - f * a[col][j]
                inv[row][j] = inv[row][j] - f * inv[col][j]
    return inv


def to_frame_basis(x, of):
    """Rewrite a base-coframe form over the frame monomials.

    Inverts the frame change over the fraction field and requires every
    final coefficient to simplify back into ParamPoly; raises
    NonPolynomialCoefficient otherwise, SingularFrame when the change
    of basis is identically singular.
    """
    if x.gens != of.base_gens:
        raise UnknownGenerator("form is not over the frame's base coframe")
    n = of.dim
    if len(of.base_gens) != n:
        raise SingularFrame("frame does not span the base coframe")
    minv = _invert_matrix(frame_change_matrix(of))
    # gen_j = sum_i minv[j][i] * X_i, as frame 1-forms with _Frac coefficients
    out = {}
    for idx, coeff in x.terms.items():
        # wedge of the expansions of each generator in idx
        partial = {(): _Frac(coeff)}
        for j in idx:
            nxt = {}
            for mono, c in partial.items():
                for i in range(n):
                    ci = minv[j][i]
                    if ci.is_zero():
                        continue
                    merged, sign = _merge_sorted(mono, (i,))
                    if merged is None:
                        continue
                    term = c * ci
                    if sign < 0:
                        term = -term
                    nxt[merged] = nxt[merged] + term if merged in nxt else term
            partial = nxt
        for mono, c in partial.items():
            out[mono] = out[mono] + c if mono in out else c
    terms = {}
    for mono, c in out.items():
        p = c.to_poly()
        if not p.is_zero():
            terms[mono] = p
    return Form(of.names, x.degree, terms)


def gram_matrix(metric_terms, basis, gens):
    """Gram matrix of sum coeff * (oneform x oneform) in `basis`.

    Components of the one-forms outside `basis` are ignored, which is
    the restriction of the bilinear form to the span of `basis`.
    """
    gens = tuple(gens)
    cols = [gens.index(b) for b in basis]
    n = len(cols)
    zero = ParamPoly.coerce(0)
    g = [[zero for _ in range(n)] for _ in range(n)]
    for coeff, form in metric_terms:
        if form.degree != 1:
            raise DegreeError("metric terms must be one-forms")
        if form.gens != gens:
            raise ValueError("metric one-form over wrong coframe")
        coeff = ParamPoly.coerce(coeff)
        comps = [form.terms.get((j,), POLY_ZERO) for j in cols]
        for i in range(n):
            if comps[i].is_zero():
                continue
            for j in range(n):
                if comps[j].is_zero():
                    continue
                g[i][j] = g[i][j] + coeff * comps[i] * comps[j]
    return g
