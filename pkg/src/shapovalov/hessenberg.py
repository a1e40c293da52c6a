"""Non-commutative determinants of upper Hessenberg matrices whose
subdiagonal entries are central, plus the concrete matrix builders used for
lowering-operator constructions in gl(m) and gl(m,n).

The determinant multiplies one entry from each column, left to right.  A
Hessenberg-supported permutation is determined by the set S of columns where
the subdiagonal entry is chosen, and its sign is (-1)^|S|; the subdiagonal
entries are by assumption central, so each expansion term is the ordered
product of the chosen above-diagonal entries with the product of chosen
subdiagonal scalars attached on the right.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .exact_algebra import Poly, Weight, bilinear_form, eval_at, h_of_weight
from .pbw import GLAlgebra, UEAElement


def _as_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.const(v)


class HessenbergMatrix:
    """Square matrix with b_{ij} = 0 unless i <= j+1 and central subdiagonal.

    entries maps (i, j) with i <= j to UEAElements; sub maps the column
    index q to the entry b_{q+1,q} as a Poly (stored with its sign, i.e.
    sub[q] is literally the matrix entry).
    """

    def __init__(self, alg: GLAlgebra, order: int, entries, sub):
        self.alg = alg
        self.order = order
        self.entries = {}
        for (i, j), v in entries.items():
            if not (1 <= i <= j <= order):
                raise ValueError(f"entry ({i},{j}) is not on or above the diagonal")
            if not v.is_zero():
                self.entries[(i, j)] = v
        self.sub = {}
        for q, v in sub.items():
            if not 1 <= q <= order - 1:
                raise ValueError(f"subdiagonal column {q} out of range")
            v = _as_poly(v)
            if not v.is_zero():
                self.sub[q] = v

    def entry(self, i: int, j: int):
        """b_{ij}; subdiagonal entries are returned as Poly, others as UEAElement."""
        if i == j + 1:
            return self.sub.get(j, Poly.zero())
        return self.entries.get((i, j), UEAElement.zero(self.alg))

    def evaluate(self, lam: Weight) -> "HessenbergMatrix":
        sub = {q: Poly.const(eval_at(p, lam)) for q, p in self.sub.items()}
        return HessenbergMatrix(self.alg, self.order, self.entries, sub)

    def to_json(self):
        grid = []
        for i in range(1, self.order + 1):
            row = []
            for j in range(1, self.order + 1):
                if i == j + 1:
                    row.append({"central": self.sub.get(j, Poly.zero()).to_json()})
                elif i <= j:
                    row.append(self.entries.get((i, j), UEAElement.zero(self.alg)).to_json())
                else:
                    row.append(None)
            grid.append(row)
        return {"order": self.order, "grid": grid}

    def latex(self) -> str:
        rows = []
        for i in range(1, self.order + 1):
            cells = []
            for j in range(1, self.order + 1):
                if i == j + 1:
                    cells.append(self.sub.get(j, Poly.zero()).latex())
                elif i <= j:
                    cells.append(self.entries.get((i, j), UEAElement.zero(self.alg)).latex())
                else:
                    cells.append("0")
            rows.append(" & ".join(cells))
        body = " \\\\\n".join(rows)
        return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"


def det_lr(B: HessenbergMatrix) -> UEAElement:
    """Left-to-right determinant over the 2^(n-1) supported permutations."""
    n = B.order
    alg = B.alg
    out = UEAElement.zero(alg)
    for size in range(n):
        for S in combinations(range(1, n), size):
            S = set(S)
            central = Poly.one()
            prod = UEAElement.one(alg)
            sign = Fraction(-1) ** len(S)
            dead = False
            small_row = 1
            for col in range(1, n + 1):
                if col in S:
                    p = B.sub.get(col)
                    if p is None:
                        dead = True
                        break
                    central = central * p
                else:
                    e = B.entries.get((small_row, col))
                    if e is None:
                        dead = True
                        break
                    prod = prod * e
                    small_row = col + 1
            if dead:
                continue
            out = out + prod.scale_central(central) * sign
    return out


def split_at(B: HessenbergMatrix, q: int):
    """Separate det B at the subdiagonal entry in column q.

    Returns (T, B'', B') with T = -b_{q+1,q} central, B'' the matrix with
    the row and column of that entry deleted, and B' the matrix with the
    entry replaced by zero, so that det B = T det B'' + det B'.
    """
    if not 1 <= q <= B.order - 1:
        raise ValueError("split position out of range")
    T = -B.sub.get(q, Poly.zero())
    prime = HessenbergMatrix(
        B.alg, B.order, B.entries, {c: p for c, p in B.sub.items() if c != q}
    )
    # delete row q+1 and column q
    entries = {}
    for (i, j), v in B.entries.items():
        if i == q + 1 or j == q:
            continue
        entries[(i - (i > q + 1), j - (j > q))] = v
    sub = {}
    for c, p in B.sub.items():
        if c == q:
            continue
        i, j = c + 1, c
        if i == q + 1 or j == q:
            continue  # cannot happen for c != q
        ni, nj = i - (i > q + 1), j - (j > q)
        if ni == nj + 1:
            sub[nj] = p
        else:
            raise ValueError("deletion did not preserve the Hessenberg shape")
    dprime = HessenbergMatrix(B.alg, B.order - 1, entries, sub)
    return T, dprime, prime


# ---------------------------------------------------------------------------
# builders

def _sigma(alg: GLAlgebra, base: int, p: int) -> Weight:
    """eps_base - eps_p as a Weight."""
    return Weight.eps(alg.m, alg.n, base) - Weight.eps(alg.m, alg.n, p)


def _omega(alg: GLAlgebra, j: int, s: int) -> Weight:
    return Weight.delta(alg.m, alg.n, j) - Weight.delta(alg.m, alg.n, s)


def _coeff_poly(alg: GLAlgebra, root: Weight, shift: int, lam) :
    """h_root + (rho, root) + shift, evaluated at lam when given."""
    c = bilinear_form(alg.rho, root) + shift
    if lam is None:
        return h_of_weight(root) + Poly.const(c)
    return Poly.const(bilinear_form(lam, root) + c)


def gl_block_coeff(alg, base, p, shift, lam):
    """Coefficient attached to skipping eps-index p in a block based at eps_base."""
    return _coeff_poly(alg, _sigma(alg, base, p), shift, lam)


def delta_block_coeff(alg, j, s, shift, lam):
    return _coeff_poly(alg, _omega(alg, j, s), shift, lam)


def build_D(m: int, mu: Weight | None = None, alg: GLAlgebra | None = None) -> HessenbergMatrix:
    """Row-form matrix for the highest root of gl(m): rows e_{i,*}, subdiagonal -a_i."""
    if m < 2:
        raise ValueError("need m >= 2")
    from .pbw import gl

    alg = alg or gl(m, 0)
    order = m - 1
    entries = {}
    for i in range(1, order + 1):
        for j in range(i, order + 1):
            entries[(i, j)] = UEAElement.gen(alg, m + 1 - i, m - j)
    sub = {
        j: -gl_block_coeff(alg, 1, m - j, -1, mu) for j in range(1, order)
    }
    return HessenbergMatrix(alg, order, entries, sub)


def build_E(m: int, mu: Weight | None = None, alg: GLAlgebra | None = None) -> HessenbergMatrix:
    """Column-form matrix: rows e_{*,i}, subdiagonal -c_i with c_i = a_i + 1."""
    if m < 2:
        raise ValueError("need m >= 2")
    from .pbw import gl

    alg = alg or gl(m, 0)
    order = m - 1
    entries = {}
    for i in range(1, order + 1):
        for j in range(i, order + 1):
            entries[(i, j)] = UEAElement.gen(alg, j + 1, i)
    sub = {j: -gl_block_coeff(alg, 1, j + 1, 0, mu) for j in range(1, order)}
    return HessenbergMatrix(alg, order, entries, sub)


def build_A(m: int, n: int, lam: Weight | None = None) -> HessenbergMatrix:
    """D-shaped matrix for the highest odd root of gl(m,n), order m+n-1."""
    return build_A_rs(1, n, m, n, lam)


def build_A_rs(r: int, s: int, m: int, n: int, lam: Weight | None = None) -> HessenbergMatrix:
    """Descending-row matrix for the odd root eps_r - delta_s, order m+s-r."""
    _check_rs(r, s, m, n)
    from .pbw import gl

    alg = gl(m, n)
    top = m + s
    order = top - r
    entries = {}
    for i in range(1, order + 1):
        for j in range(i, order + 1):
            entries[(i, j)] = UEAElement.gen(alg, top + 1 - i, top - j)
    sub = {j: -_odd_index_coeff(alg, r, s, top - 1 - j, "middle", lam) for j in range(1, order)}
    return HessenbergMatrix(alg, order, entries, sub)


def build_B_rs(r: int, s: int, m: int, n: int, lam: Weight | None = None) -> HessenbergMatrix:
    """Ascending-row matrix for eps_r - delta_s with subdiagonal -C_i."""
    _check_rs(r, s, m, n)
    from .pbw import gl

    alg = gl(m, n)
    top = m + s
    order = top - r
    entries = {}
    for i in range(1, order + 1):
        for j in range(i, order + 1):
            entries[(i, j)] = UEAElement.gen(alg, r + j, r + i - 1)
    sub = {j: -_odd_index_coeff(alg, r, s, r + j - 1, "bform", lam) for j in range(1, order)}
    return HessenbergMatrix(alg, order, entries, sub)


def build_F_j(r: int, s: int, m: int, n: int, j: int, lam: Weight | None = None) -> HessenbergMatrix:
    """Row-form minor with an adjoined odd first row e_{m+j,*}, order m-r+1."""
    _check_rs(r, s, m, n)
    if not 1 <= j <= s:
        raise ValueError("need 1 <= j <= s")
    from .pbw import gl

    alg = gl(m, n)
    order = m - r + 1
    entries = {}
    for col in range(1, order + 1):
        entries[(1, col)] = UEAElement.gen(alg, m + j, m + 1 - col)
    for i in range(2, order + 1):
        for col in range(i, order + 1):
            entries[(i, col)] = UEAElement.gen(alg, m + 2 - i, m + 1 - col)
    sub = {q: -_odd_index_coeff(alg, r, s, m - q, "middle", lam) for q in range(1, order)}
    return HessenbergMatrix(alg, order, entries, sub)


def build_G_j(r: int, s: int, m: int, n: int, j: int, lam: Weight | None = None) -> HessenbergMatrix:
    """Column-form counterpart of the adjoined minor, subdiagonal -C_i."""
    _check_rs(r, s, m, n)
    if not 1 <= j <= s:
        raise ValueError("need 1 <= j <= s")
    from .pbw import gl

    alg = gl(m, n)
    order = m - r + 1
    entries = {}
    for i in range(1, order + 1):
        for col in range(i, order + 1):
            src = r + col if col < order else m + j
            entries[(i, col)] = UEAElement.gen(alg, src, r + i - 1)
    sub = {q: -_odd_index_coeff(alg, r, s, r + q - 1, "bform", lam) for q in range(1, order)}
    return HessenbergMatrix(alg, order, entries, sub)


def _check_rs(r, s, m, n):
    if not (1 <= r <= m and 1 <= s <= n):
        raise ValueError(f"root indices r={r}, s={s} out of range for gl({m},{n})")


def _odd_index_coeff(alg: GLAlgebra, r: int, s: int, idx: int, ordering: str, lam):
    """Coefficient attached to index idx in [r, m+s-2] for the root eps_r - delta_s.

    The eps branch (idx < m) uses the root eps_r - eps_{idx+1}; the delta
    branch uses delta_{idx+1-m} - delta_s.  The additive constant depends on
    the ordering convention.
    """
    m = alg.m
    shifts = {
        "middle": (-1, 0),
        "odd-last": (0, 0),
        "odd-first": (-1, 1),
        "bform": (0, 1),
    }[ordering]
    if idx < m:
        return gl_block_coeff(alg, r, idx + 1, shifts[0], lam)
    return delta_block_coeff(alg, idx + 1 - m, s, shifts[1], lam)


def check_DE_equality(m: int, mu: Weight | None = None) -> bool:
    """det D = det E, plus the cofactor commutator identity for m = 4."""
    D = build_D(m, mu)
    E = build_E(m, mu)
    if det_lr(D) != det_lr(E):
        return False
    if m == 4:
        alg = D.alg
        order = E.order
        # cofactors of e_{m,m-1} (delete last row+col) and of -c_{m-2}
        e1_entries = {k: v for k, v in E.entries.items() if k[0] < order and k[1] < order}
        e1_sub = {q: p for q, p in E.sub.items() if q < order - 1}
        E1 = HessenbergMatrix(alg, order - 1, e1_entries, e1_sub)
        _, E2, _ = split_at(E, order - 1)
        last = UEAElement.gen(alg, m, m - 1)
        d1, d2 = det_lr(E1), det_lr(E2)
        if d1 * last - last * d1 != -d2:
            return False
    return True
