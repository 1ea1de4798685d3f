"""Modular machinery for the Wedderburn pipeline.

The base field Q(zeta_n) is reduced at a good prime p = 1 (mod n): the
cyclotomic polynomial splits into distinct linear factors, so the reduction
has one F_p-component per primitive n-th root of unity mod p.  Splitting is
done per component; results are glued back into (Z/p^m)[x]/Phi_n by CRT
interpolation, Hensel-lifted by doubling the precision, and handed to
rational reconstruction.
"""

from __future__ import annotations

import math
import random

from .linalg import Matrix, Poly, _krylov_relation
from .scalars import (Cyc, PrimeField, Rat, cyclotomic_polynomial,
                      rational_reconstruct)


class BadPrime(Exception):
    """Reduction mod p is unusable; the caller retries with the next prime."""


class PrecisionExceeded(Exception):
    pass


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def primitive_root(p: int) -> int:
    order = p - 1
    factors = set()
    m = order
    q = 2
    while q * q <= m:
        while m % q == 0:
            factors.add(q)
            m //= q
        q += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def scalar_denominators(field, scalars):
    dens = set()
    for x in scalars:
        for c in field.to_qvec(x):
            dens.add(int(c.denominator))
    dens.discard(1)
    return dens


def good_primes(algebra, forms=(), lower=None):
    """Yield candidate good primes for the modular pipeline.

    Policy: p = 1 (mod conductor), p > 2 dim, p does not divide dim or any
    structure-constant / form denominator.  Semisimplicity conditions (Gram
    nondegenerate mod p, Gamma(1) nonzero mod p) are checked downstream and
    reported as BadPrime.
    """
    n = algebra.field.conductor
    scalars = [c for i in range(algebra.dim) for j in range(algebra.dim)
               for c in algebra.table[i][j].values()]
    scalars.extend(algebra.unit)
    for form in forms:
        scalars.extend(form)
    dens = scalar_denominators(algebra.field, scalars)
    p = max(2 * algebra.dim, lower or 0, n, 2)
    while True:
        p += 1
        if p % n != 1 % n or not is_prime(p):
            continue
        if algebra.dim % p == 0:
            continue
        if any(d % p == 0 for d in dens):
            continue
        yield p


# ---------------------------------------------------------------------------
# component reductions
# ---------------------------------------------------------------------------


def component_units(n: int):
    return [u for u in range(1, n + 1) if math.gcd(u, n) == 1]


def lift_cyclotomic_root(n: int, p: int, target_modulus: int) -> int:
    """A primitive n-th root of unity mod target_modulus = p^(2^t), lifted
    from the canonical root g^((p-1)/n) mod p by Newton iteration."""
    g = primitive_root(p)
    z = pow(g, (p - 1) // n, p)
    phi_poly = cyclotomic_polynomial(n)
    dphi = [i * c for i, c in enumerate(phi_poly)][1:]
    M = p
    while M < target_modulus:
        M = M * M
        fz = _int_poly_eval(phi_poly, z, M)
        dfz = _int_poly_eval(dphi, z, M)
        z = (z - fz * pow(dfz, -1, M)) % M
    return z % target_modulus


def _int_poly_eval(coeffs, x, M):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % M
    return acc


def reduce_scalar(field, x, root: int, M: int) -> int:
    """Image of a scalar in Z/M under zeta -> root."""
    acc = 0
    power = 1
    for c in field.to_qvec(x):
        num, den = int(c.numerator), int(c.denominator)
        try:
            term = num % M * pow(den, -1, M) % M
        except ValueError:
            raise BadPrime("denominator not invertible mod p^m") from None
        acc = (acc + term * power) % M
        power = power * root % M
    return acc


class ComponentAlgebra:
    """Reduction of a structure-constant algebra to Z/M at one root."""

    def __init__(self, algebra, root: int, M: int):
        self.M = M
        self.dim = algebra.dim
        self.root = root
        self.table = [[{k: reduce_scalar(algebra.field, c, root, M)
                        for k, c in algebra.table[i][j].items()}
                       for j in range(algebra.dim)]
                      for i in range(algebra.dim)]
        self.unit = [reduce_scalar(algebra.field, c, root, M)
                     for c in algebra.unit]

    def reduce_vector(self, algebra, vec):
        return [reduce_scalar(algebra.field, c, self.root, self.M) for c in vec]

    def multiply(self, a, b):
        M = self.M
        out = [0] * self.dim
        for i, ai in enumerate(a):
            if ai:
                row = self.table[i]
                for j, bj in enumerate(b):
                    if bj:
                        f = ai * bj
                        for k, c in row[j].items():
                            out[k] = (out[k] + f * c) % M
        return out

    def left_mult_matrix(self, a, gf):
        cols = []
        for j in range(self.dim):
            col = [0] * self.dim
            for i, ai in enumerate(a):
                if ai:
                    for k, c in self.table[i][j].items():
                        col[k] = (col[k] + ai * c) % self.M
            cols.append([gf.from_int(x) for x in col])
        return Matrix.from_columns(gf, cols)

    def right_mult_matrix(self, a, gf):
        cols = []
        for j in range(self.dim):
            col = [0] * self.dim
            for i, ai in enumerate(a):
                if ai:
                    for k, c in self.table[j][i].items():
                        col[k] = (col[k] + ai * c) % self.M
            cols.append([gf.from_int(x) for x in col])
        return Matrix.from_columns(gf, cols)


# ---------------------------------------------------------------------------
# polynomial factorization over F_p
# ---------------------------------------------------------------------------


def squarefree_part(f: Poly) -> Poly:
    d = f.derivative()
    if d.is_zero():
        raise BadPrime("inseparable polynomial mod p")
    return (f.divmod(f.gcd(d))[0]).monic()


def distinct_degree_factor(f: Poly, p: int):
    """[(degree, product of irreducible factors of that degree)], f squarefree."""
    out = []
    x = Poly.x(f.field)
    h = x
    rest = f.monic()
    d = 0
    while rest.degree() > 0:
        d += 1
        if 2 * d > rest.degree():
            out.append((rest.degree(), rest))
            break
        h = h.pow_mod(p, rest)
        g = rest.gcd(h - x)
        if g.degree() > 0:
            out.append((d, g))
            rest = rest.divmod(g)[0]
            h = h % rest
    return out


def equal_degree_factor(f: Poly, d: int, p: int, rng: random.Random):
    """Cantor-Zassenhaus split of a squarefree product of degree-d factors."""
    if f.degree() == d:
        return [f.monic()]
    field = f.field
    one = Poly(field, [field.one])
    while True:
        a = Poly(field, [field.from_int(rng.randrange(p))
                         for _ in range(f.degree())])
        if a.degree() < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree() < f.degree():
            pass
        else:
            b = a.pow_mod((p ** d - 1) // 2, f)
            g = f.gcd(b - one)
            if not 0 < g.degree() < f.degree():
                continue
        return (equal_degree_factor(g, d, p, rng)
                + equal_degree_factor(f.divmod(g)[0].monic(), d, p, rng))


def factor_mod_p(f: Poly, p: int, rng: random.Random):
    """Irreducible factors of a squarefree monic polynomial over F_p."""
    factors = []
    for d, prod in distinct_degree_factor(f, p):
        factors.extend(equal_degree_factor(prod, d, p, rng))
    return sorted(factors, key=lambda g: (g.degree(),
                                          [c.residue for c in g.coeffs]))


def roots_mod_p(f: Poly, p: int, rng: random.Random):
    """Roots in F_p of a squarefree polynomial over F_p."""
    x = Poly.x(f.field)
    xp = x.pow_mod(p, f)
    g = f.gcd(xp - x)
    if g.degree() == 0:
        return []
    return sorted((-fac.coeffs[0] / fac.coeffs[1]).residue
                  for fac in equal_degree_factor(g, 1, p, rng))


# ---------------------------------------------------------------------------
# echelonized subspaces (coordinates in a subspace of F_p^n)
# ---------------------------------------------------------------------------


class EchelonSubspace:
    def __init__(self, field, vectors):
        red, pivots = Matrix(field, vectors).rref() if vectors else (None, [])
        self.field = field
        self.pivots = pivots
        self.basis = [red.entries[r] for r in range(len(pivots))] if vectors else []

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, vec):
        zero = self.field.zero
        v = list(vec)
        out = []
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            out.append(c)
            if c != zero:
                v = [a - c * b for a, b in zip(v, row)]
        if any(a != zero for a in v):
            return None
        return out

    def contains(self, vec):
        return self.coords(vec) is not None

    def from_coords(self, coords):
        zero = self.field.zero
        out = [zero] * (len(self.basis[0]) if self.basis else 0)
        for c, row in zip(coords, self.basis):
            if c != zero:
                out = [a + c * b for a, b in zip(out, row)]
        return out


# ---------------------------------------------------------------------------
# modular splitting of one component
# ---------------------------------------------------------------------------


class ModularBlock:
    __slots__ = ("central_idempotent", "degree", "block_dim", "center_dim",
                 "primitive_idempotent")

    def __init__(self, central_idempotent, degree, block_dim, center_dim,
                 primitive_idempotent):
        self.central_idempotent = central_idempotent
        self.degree = degree
        self.block_dim = block_dim
        self.center_dim = center_dim
        self.primitive_idempotent = primitive_idempotent


def modular_split(algebra, p: int, root: int, seed: int = 0):
    """Central primitive idempotents, block degrees and per-block primitive
    idempotents of the reduction of ``algebra`` at ``zeta -> root`` mod p."""
    gf = PrimeField(p)
    comp = ComponentAlgebra(algebra, root, p)
    rng = random.Random(seed * 1000003 + p)
    n = comp.dim

    # center mod p
    space = [[gf.one if i == j else gf.zero for j in range(n)] for i in range(n)]
    for i in range(n):
        basis = [0] * n
        basis[i] = 1
        op = (comp.left_mult_matrix(basis, gf)
              - comp.right_mult_matrix(basis, gf))
        images = Matrix.from_columns(gf, [op.apply(v) for v in space])
        ker = images.kernel()
        new_space = []
        for coeffs in ker:
            v = [gf.zero] * n
            for c, w in zip(coeffs, space):
                if c:
                    v = [a + c * b for a, b in zip(v, w)]
            new_space.append(v)
        space = new_space
        if len(space) <= 1:
            break
    center = EchelonSubspace(gf, space)
    r = center.dim
    if r == 0:
        raise BadPrime("trivial center mod p")

    center_int = [[x.residue for x in v] for v in center.basis]

    def cmult(u_coords, v_coords):
        uv = comp.multiply(_int_comb(center_int, u_coords, p),
                           _int_comb(center_int, v_coords, p))
        coords = center.coords([gf.from_int(x) for x in uv])
        if coords is None:
            raise BadPrime("center not closed under multiplication")
        return [c.residue for c in coords]

    unit_coords = center.coords([gf.from_int(x) for x in comp.unit])
    if unit_coords is None:
        raise BadPrime("unit not in computed center")
    unit_coords = [c.residue for c in unit_coords]

    idems = _commutative_idempotents(cmult, unit_coords, r, p, rng)

    blocks = []
    for e_coords in idems:
        e_vec = _int_comb(center_int, e_coords, p)
        blocks.append(_block_data(comp, gf, center, e_vec, p, rng))
    blocks.sort(key=lambda b: (b.degree, b.block_dim, b.central_idempotent))
    return blocks


def _int_comb(basis, coords, p):
    out = [0] * len(basis[0])
    for c, row in zip(coords, basis):
        if c:
            for i, x in enumerate(row):
                out[i] = (out[i] + c * x) % p
    return out


def _commutative_idempotents(cmult, unit_coords, r, p, rng):
    """Primitive idempotents of a commutative (semisimple) F_p-algebra given
    by a multiplication callback on coordinate vectors."""
    gf = PrimeField(p)
    idems = [unit_coords]

    def try_split(e, direction):
        z = cmult(direction, e)
        # minimal polynomial of z inside the ideal generated by e
        mat = _mult_matrix(cmult, z, r, gf)
        seed_vec = [gf.from_int(x) for x in e]
        rel = _krylov_relation(mat, seed_vec)
        if rel.degree() <= 1:
            return None
        if rel.gcd(rel.derivative()).degree() > 0:
            raise BadPrime("center not semisimple mod p")
        factors = factor_mod_p(rel, p, rng)
        if len(factors) <= 1:
            return None
        pieces = []
        for fi in factors:
            cof = rel.divmod(fi)[0]
            # invert cofactor mod fi
            inv = _poly_inverse_mod(cof, fi)
            h = (cof * inv) % rel
            piece = _poly_eval_in_algebra(cmult, h, z, e, p)
            pieces.append(piece)
        return pieces

    changed = True
    rounds = 0
    while changed and rounds < r + 25:
        changed = False
        rounds += 1
        directions = [_basis_coord(i, r) for i in range(r)]
        if rounds > r:
            directions = [[rng.randrange(p) for _ in range(r)] for _ in range(3)]
        new = []
        for e in idems:
            split = None
            for d in directions:
                split = try_split(e, d)
                if split:
                    break
            if split:
                new.extend(split)
                changed = True
            else:
                new.append(e)
        idems = new
    return idems


def _basis_coord(i, r):
    v = [0] * r
    v[i] = 1
    return v


def _mult_matrix(cmult, z, r, gf):
    cols = []
    for j in range(r):
        col = cmult(z, _basis_coord(j, r))
        cols.append([gf.from_int(x) for x in col])
    return Matrix.from_columns(gf, cols)


def _poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    field = a.field
    r0, r1 = m, a % m
    t0, t1 = Poly(field, []), Poly(field, [field.one])
    while not r1.is_zero():
        q, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        t0, t1 = t1, t0 - q * t1
    if r0.degree() != 0:
        raise BadPrime("cofactor not invertible in CRT split")
    inv = field.one / r0.coeffs[0]
    return Poly(field, [inv * c for c in t0.coeffs]) % m


def _poly_eval_in_algebra(cmult, poly: Poly, z, unit_e, p):
    """Evaluate a polynomial at z inside the ideal with unit unit_e."""
    acc = [0] * len(z)
    for c in reversed(poly.coeffs):
        acc = cmult(acc, z)
        ci = c.residue
        if ci:
            acc = [(a + ci * u) % p for a, u in zip(acc, unit_e)]
    return acc


def _block_data(comp, gf, center, e_vec, p, rng):
    n = comp.dim
    # block basis: span of x_j * e
    cols = []
    for j in range(n):
        basis = [0] * n
        basis[j] = 1
        cols.append([gf.from_int(x) for x in comp.multiply(basis, e_vec)])
    block = EchelonSubspace(gf, cols)
    bdim = block.dim
    # center dimension of the block
    ccols = []
    for v in center.basis:
        zv = comp.multiply([c.residue for c in v], e_vec)
        ccols.append([gf.from_int(x) for x in zv])
    csub = EchelonSubspace(gf, ccols)
    cdim = csub.dim
    if cdim == 0 or bdim % cdim != 0:
        raise BadPrime("inconsistent block dimensions")
    d2 = bdim // cdim
    d = math.isqrt(d2)
    if d * d != d2:
        raise BadPrime("block dimension is not a square over its center")
    prim = None
    if cdim == 1:
        prim = _find_primitive_idempotent(comp, gf, block, e_vec, d, p, rng)
    return ModularBlock(e_vec, d, bdim, cdim, prim)


def _find_primitive_idempotent(comp, gf, block, e_vec, d, p, rng, tries=30):
    if d == 1:
        return list(e_vec)
    n = comp.dim
    bdim = block.dim
    block_int = [[c.residue for c in v] for v in block.basis]
    for _ in range(tries):
        coords = [rng.randrange(p) for _ in range(bdim)]
        b = _int_comb(block_int, coords, p)
        mat = _block_mult_matrix(comp, gf, block, block_int, b)
        rel = _krylov_relation(mat, block.coords([gf.from_int(x) for x in e_vec]))
        if rel.degree() != d or rel.gcd(rel.derivative()).degree() > 0:
            continue
        roots = roots_mod_p(rel, p, rng)
        if len(roots) != d:
            continue
        t0 = roots[0]
        u = list(e_vec)
        for t in roots[1:]:
            inv = pow((t0 - t) % p, -1, p)
            shifted = [(x - t * y) % p for x, y in zip(b, e_vec)]
            u = comp.multiply(u, [x * inv % p for x in shifted])
        # u should be idempotent of rank 1: check u A u has dimension 1
        if comp.multiply(u, u) != u:
            continue
        uau = []
        for j in range(n):
            basis = [0] * n
            basis[j] = 1
            v = comp.multiply(comp.multiply(u, basis), u)
            uau.append([gf.from_int(x) for x in v])
        if EchelonSubspace(gf, uau).dim == 1:
            return u
    return None


def _block_mult_matrix(comp, gf, block, block_int, b):
    cols = []
    for v in block_int:
        img = comp.multiply(v, b)
        coords = block.coords([gf.from_int(x) for x in img])
        if coords is None:
            raise BadPrime("block not closed under multiplication")
        cols.append(coords)
    return Matrix.from_columns(gf, cols)


# ---------------------------------------------------------------------------
# Hensel lifting and gluing
# ---------------------------------------------------------------------------


def hensel_lift_idempotent(comp_M, e, M):
    """One lifting step e -> 3e^2 - 2e^3 in a component at modulus M."""
    e2 = comp_M.multiply(e, e)
    e3 = comp_M.multiply(e2, e)
    return [(3 * a - 2 * b) % M for a, b in zip(e2, e3)]


def interpolate_mod(points, M, p):
    """Coefficients (deg < len(points)) of the polynomial through the given
    (node, value) pairs over Z/M; node differences must be units mod p."""
    nodes = [x for x, _ in points]
    k = len(points)
    # Lagrange: sum_j r_j prod_{l != j} (x - w_l) / (w_j - w_l)
    coeffs = [0] * k
    for j, (wj, rj) in enumerate(points):
        num = [1]
        denom = 1
        for l, (wl, _) in enumerate(points):
            if l == j:
                continue
            num = _poly_mul_mod(num, [(-wl) % M, 1], M)
            denom = denom * (wj - wl) % M
        f = rj * pow(denom, -1, M) % M
        for i, c in enumerate(num):
            coeffs[i] = (coeffs[i] + f * c) % M
    return coeffs


def _poly_mul_mod(a, b, M):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % M
    return out


def reconstruct_element(field, per_component, roots, M, p):
    """Glue per-component residue vectors and rationally reconstruct a vector
    of field scalars; None if any coefficient fails to reconstruct."""
    dim = len(per_component[0])
    phi = field.phi
    out = []
    for i in range(dim):
        residues = [vec[i] for vec in per_component]
        if phi == 1:
            poly = [residues[0] % M]
        else:
            poly = interpolate_mod(list(zip(roots, residues)), M, p)
        qcoeffs = []
        for c in poly:
            q = rational_reconstruct(c % M, M)
            if q is None:
                return None
            qcoeffs.append(q)
        out.append(field.from_qvec(qcoeffs))
    return out
