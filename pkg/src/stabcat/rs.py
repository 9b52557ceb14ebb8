"""Reed-Solomon code pair over GF(2^e) and its CSS generator sets.

Codes live at full length N = 2^e - 1, evaluated at all nonzero points
alpha^0 .. alpha^(N-1).  The pair is

    R      = evaluations of the monomial span x^1 .. x^K      [N, K, N-K+1]
    Rperp  = evaluations of polynomials of degree < N - K     [N, N-K, K+1]

With these exponent sets Rperp is the exact dual of R under the standard
coordinatewise inner product, and R is contained in Rperp whenever
K <= floor(N/2):  <ev(x^a), ev(x^b)> = sum_i alpha^(i(a+b)) vanishes
unless a + b = 0 mod N, and exponents a in [1, K], b in [0, N-K-1] can
never sum to 0 or N.  A plain degree-< K span would contain ev(1), which
pairs with itself to N mod 2 = 1, so it is not even self-orthogonal;
the shifted exponent window is what makes the CSS construction work.
Both verifications (duality and containment) are run explicitly at
construction time rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field


class RsError(ValueError):
    """Invalid Reed-Solomon construction or argument."""


@dataclass(frozen=True)
class RsCode:
    """An evaluation code over ``field`` at all N nonzero points.

    Attributes:
        field: the symbol field.
        length: code length N = field.order - 1.
        dim: dimension (number of generator rows).
        exponents: monomial exponents whose evaluations span the code.
        generator: dim x length matrix; row r is ev(x^exponents[r]).
        eval_points: (alpha^0, ..., alpha^(N-1)).
    """

    field: Field
    length: int
    dim: int
    exponents: tuple[int, ...]
    generator: tuple[tuple[int, ...], ...]
    eval_points: tuple[int, ...]
    # Row-reduced copy of the generator plus its pivot columns, for
    # membership tests.
    _reduced: tuple[tuple[int, ...], ...]
    _pivots: tuple[int, ...]

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return (f"RsCode([{self.length}, {self.dim}] over "
                f"GF(2^{self.field.two_m}))")


def _field_rref(field: Field, rows: list[list[int]]):
    """Reduced row echelon form over the field; returns (rows, pivots)."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = field.inverse(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                coef = mat[i][c]
                mat[i] = [vi ^ field.mul(coef, vr)
                          for vi, vr in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in mat[:r]], pivots


def _evaluate_monomial(field: Field, exp: int, n: int) -> tuple[int, ...]:
    """(alpha^(0*exp), alpha^(1*exp), ..., alpha^((n-1)*exp))."""
    return tuple(field.alpha_pow(i * exp) for i in range(n))


def _make_code(field: Field, exponents: tuple[int, ...]) -> RsCode:
    n = field.order - 1
    rows = [_evaluate_monomial(field, e, n) for e in exponents]
    reduced, pivots = _field_rref(field, [list(r) for r in rows])
    if len(reduced) != len(rows):
        raise RsError("monomial evaluations are dependent; "
                      "this is a bug")  # pragma: no cover
    return RsCode(
        field=field,
        length=n,
        dim=len(exponents),
        exponents=exponents,
        generator=tuple(rows),
        eval_points=tuple(field.alpha_pow(i) for i in range(n)),
        _reduced=tuple(reduced),
        _pivots=tuple(pivots),
    )


def dot(field: Field, u, v) -> int:
    """Standard inner product sum_i u_i * v_i in the field."""
    acc = 0
    for a, b in zip(u, v):
        acc ^= field.mul(a, b)
    return acc


def build_rs_pair(field: Field, k: int) -> tuple[RsCode, RsCode]:
    """Build the nested dual pair (R, Rperp) for dimension k.

    Duality and containment are verified on the generator rows; a
    failure would mean the construction itself is wrong.
    """
    n = field.order - 1
    if k < 0:
        raise RsError(f"dimension K={k} is negative")
    if k > n // 2:
        raise RsError(
            f"K={k} exceeds floor(N/2)={n // 2}; containment in the dual "
            f"would fail")
    code = _make_code(field, tuple(range(1, k + 1)))
    dual = _make_code(field, tuple(range(0, n - k)))
    for i, r in enumerate(code.generator):
        for j, rp in enumerate(dual.generator):
            p = dot(field, r, rp)
            if p != 0:
                raise RsError(
                    f"duality violated: <R row {i}, Rperp row {j}> = "
                    f"{p:#x}")  # pragma: no cover
        if not rs_contains(dual, r):
            raise RsError(
                f"containment violated: R row {i} is outside "
                f"Rperp")  # pragma: no cover
    return code, dual


def rs_encode(code: RsCode, msg) -> tuple[int, ...]:
    """msg . generator (msg has one symbol per generator row)."""
    if len(msg) != code.dim:
        raise RsError(
            f"message length {len(msg)} != code dimension {code.dim}")
    f = code.field
    out = [0] * code.length
    for m_sym, row in zip(msg, code.generator):
        if m_sym == 0:
            continue
        for i, r_sym in enumerate(row):
            out[i] ^= f.mul(m_sym, r_sym)
    return tuple(out)


def rs_contains(code: RsCode, v) -> bool:
    """True iff v lies in the row space of the generator."""
    if len(v) != code.length:
        raise RsError(f"vector length {len(v)} != code length {code.length}")
    f = code.field
    w = list(v)
    for row, p in zip(code._reduced, code._pivots):
        if w[p] != 0:
            coef = w[p]
            w = [wi ^ f.mul(coef, ri) for wi, ri in zip(w, row)]
    return not any(w)


def min_weight_exhaustive(code: RsCode) -> int:
    """Minimum Hamming weight by scanning every nonzero codeword.

    Only feasible when order^dim is small; used as the distance oracle
    for desk-scale instances.
    """
    if code.dim == 0:
        raise RsError("zero code has no nonzero codeword")
    if code.field.order ** code.dim > 1 << 20:
        raise RsError("codebook too large for exhaustive weight scan")
    f = code.field
    best = code.length + 1
    msg = [0] * code.dim
    # Odometer over all messages.
    total = f.order ** code.dim
    for idx in range(1, total):
        x = idx
        for p in range(code.dim):
            msg[p] = x % f.order
            x //= f.order
        w = sum(1 for sym in rs_encode(code, msg) if sym)
        if w < best:
            best = w
    return best


# ----------------------------------------------------------------------
# CSS generator sets S = R x R, N = Rperp x Rperp
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CssPair:
    """Length-2N generator vectors (left | right) of the CSS pair.

    ``s_gens`` holds 2*dim(R) vectors (r|0), (0|r) over R's generator
    rows; ``n_gens`` the analogous 2*dim(Rperp) vectors over Rperp.
    """

    s_gens: tuple[tuple[int, ...], ...]
    n_gens: tuple[tuple[int, ...], ...]


def symplectic_field_product(field: Field, a, b) -> int:
    """sum_i (aL_i * bR_i + aR_i * bL_i) for length-2N field vectors."""
    n = len(a) // 2
    acc = 0
    for i in range(n):
        acc ^= field.mul(a[i], b[n + i])
        acc ^= field.mul(a[n + i], b[i])
    return acc


def css_generators(code: RsCode, dual: RsCode) -> CssPair:
    """Assemble the CSS stabilizer/normalizer generators from (R, Rperp)."""
    for i, r in enumerate(code.generator):
        if not rs_contains(dual, r):
            raise RsError(
                f"R row {i} = {tuple(hex(v) for v in r)} is not in Rperp; "
                f"the pair is not nested")
    zero = (0,) * code.length
    s_gens = tuple((*r, *zero) for r in code.generator) + \
        tuple((*zero, *r) for r in code.generator)
    n_gens = tuple((*r, *zero) for r in dual.generator) + \
        tuple((*zero, *r) for r in dual.generator)
    return CssPair(s_gens=s_gens, n_gens=n_gens)
