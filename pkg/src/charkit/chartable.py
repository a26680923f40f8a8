"""Irreducible character tables and class function algebra, all exact.

The table is computed modulo a prime q with q = 1 (mod exponent) and
q^2 > 4|G|: the class sum matrices A_i[j][k] = #{(x,y) in C_i x C_j : xy = z_k}
commute and act on the central character vectors w (normalized w[0] = 1) as
A_i w = w_i w, so splitting their common eigenspaces over F_q recovers one
line per irreducible. Degrees come from d^2 = |G| / sum_k w_k w_{k*} / |C_k|;
exact values are rebuilt by lifting the multiplicity of each root of unity,
which is valid because every multiplicity is at most sqrt(|G|) < q/2. Row and
column orthogonality of the finished table are verified exactly before it is
returned; failure of any such check is a bug, never data.

Class functions are tuples of exact cyclotomic values indexed by conjugacy
class. Hot paths (orthogonality, decomposition) run on int64 coefficient
tensors with a computed overflow bound and fall back to pure object
arithmetic when the bound is too tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Optional, Sequence, Union

import numpy as np

from .cyclotomic import CycNum, CyclotomicContext, context, descend, embed
from .errors import (
    DegreeMismatch,
    EvenOrder,
    GroupMismatch,
    InternalInconsistency,
    NoSuitablePrime,
    NotACharacter,
    NotSubgroup,
)
from .groups import ClassData, Group, Subgroup, is_prime, subgroup_from_members
from .modlinalg import inverse_mod, split_common_eigenspaces, sqrt_mod
from .version import VERSION

PRIME_SEARCH_CAP = 10**6


class ClassFunction:
    """A class function: one exact cyclotomic value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values: Sequence[CycNum]):
        values = tuple(values)
        if len(values) != group.classes.num_classes:
            raise DegreeMismatch(
                f"{len(values)} values for {group.classes.num_classes} classes"
            )
        self.group = group
        self.values = values

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            _same_group(self, other)
            return ClassFunction(
                self.group, tuple(a * b for a, b in zip(self.values, other.values))
            )
        return ClassFunction(self.group, tuple(v * other for v in self.values))

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def __repr__(self) -> str:
        return f"ClassFunction({self.group.spec}, {[v.to_string() for v in self.values]})"


def _same_group(a: ClassFunction, b) -> None:
    other = b.group if isinstance(b, (ClassFunction, CharacterTable)) else b
    if a.group is not other:
        raise GroupMismatch("class functions belong to different groups")


@dataclass(frozen=True)
class TableProvenance:
    """How the table was computed: the modular prime and the image of zeta."""

    prime: int
    zeta_image: int
    version: str


class CharacterTable:
    """All irreducible characters of a group, trivial character first.

    Characters after the trivial one are sorted by (degree, lexicographic on
    the concatenated coefficient vectors), which is a strict total order
    because distinct irreducibles have distinct value vectors.
    """

    def __init__(self, group: Group, irreducibles, degrees, conductor: int,
                 provenance: TableProvenance):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(int(d) for d in degrees)
        self.conductor = conductor
        self.provenance = provenance
        self._square_memo: dict[int, Decomposition] = {}

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    @cached_property
    def _value_index(self) -> dict[tuple, int]:
        return {chi.values: i for i, chi in enumerate(self.irreducibles)}

    def index_of(self, chi: Union[ClassFunction, Sequence[CycNum]]) -> Optional[int]:
        values = chi.values if isinstance(chi, ClassFunction) else tuple(chi)
        return self._value_index.get(values)

    def linears(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == 1)

    @cached_property
    def _ctx(self) -> CyclotomicContext:
        return context(self.conductor)

    @cached_property
    def _int_values(self) -> tuple[np.ndarray, np.ndarray]:
        # (V, CV): per character and class, the integer coefficient vector of
        # the value and of its conjugate. Table values always have den == 1.
        r = len(self.irreducibles)
        rc = self.group.classes.num_classes
        phi = self._ctx.phi
        V = np.empty((r, rc, phi), dtype=np.int64)
        for m, chi in enumerate(self.irreducibles):
            for c, v in enumerate(chi.values):
                if v.den != 1:
                    raise InternalInconsistency("table value with denominator")
                V[m, c] = v.num
        if self.conductor <= 2:
            CV = V.copy()
        else:
            CV = V @ self._ctx.galois_matrix(self.conductor - 1)
        return V, CV

    def decompose_square(self, i: int) -> "Decomposition":
        """Decomposition of chi_i * chi_i, memoized."""
        hit = self._square_memo.get(i)
        if hit is None:
            chi = self.irreducibles[i]
            hit = decompose(chi * chi, self)
            self._square_memo[i] = hit
        return hit

    def __repr__(self) -> str:
        return (
            f"CharacterTable({self.group.spec}, degrees={self.degrees}, "
            f"conductor={self.conductor})"
        )


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of a character against a table's irreducibles."""

    table: CharacterTable
    multiplicities: tuple[int, ...]

    @property
    def eta(self) -> int:
        """Number of distinct irreducible constituents."""
        return sum(1 for m in self.multiplicities if m)

    def nonzero(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.multiplicities) if m)

    def reconstruct(self) -> ClassFunction:
        table = self.table
        acc = None
        for i, m in enumerate(self.multiplicities):
            if not m:
                continue
            term = table.irreducibles[i] * m
            acc = term if acc is None else acc + term
        if acc is None:
            ctx = table._ctx
            acc = ClassFunction(
                table.group, (ctx.zero,) * table.group.classes.num_classes
            )
        return acc


@dataclass(frozen=True)
class SecondPowerMap:
    """Where g -> g^2 sends each irreducible, when the image is irreducible."""

    table: CharacterTable
    images: tuple[Optional[int], ...]
    is_permutation: bool
    notes: tuple[str, ...]


# -- table computation ----------------------------------------------------


def _modular_prime(n: int, order: int) -> int:
    m, step = (2, 1) if n == 1 else (n + 1, n)
    while m <= PRIME_SEARCH_CAP:
        if m * m > 4 * order and is_prime(m):
            return m
        m += step
    raise NoSuitablePrime(
        f"no prime q = 1 mod {n} with q^2 > {4 * order} below {PRIME_SEARCH_CAP}"
    )


def _nth_root_mod(n: int, q: int) -> int:
    fac = []
    m = q - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    g = next(
        g
        for g in range(2, q)
        if all(pow(g, (q - 1) // p, q) != 1 for p in fac)
    )
    return pow(g, (q - 1) // n, q)


def _class_matrices(G: Group, cls: ClassData, q: int):
    # Yield the class sum action matrices A_i[j][k] mod q, i in canonical
    # order, one at a time; most splits do not consume them all.
    r = cls.num_classes
    reps = cls.representatives
    for i in range(1, r):
        members = cls.members(i)
        A = np.zeros((r, r), dtype=np.int64)
        for k, zk in enumerate(reps):
            y = G.mul[G.inv[members], zk]
            np.add.at(A[:, k], cls.class_of[y], 1)
        yield (A % q).tolist()


def _degree_of(w, cls: ClassData, q: int, order: int) -> int:
    s = 0
    for k in range(cls.num_classes):
        s += w[k] * w[cls.inverse_class[k]] * inverse_mod(cls.sizes[k], q)
    s %= q
    if s == 0:
        raise InternalInconsistency("degree norm sum vanished mod q")
    d2 = order * inverse_mod(s, q) % q
    d = sqrt_mod(d2, q)
    if d is None:
        raise InternalInconsistency("degree squared is not a square mod q")
    d = min(d, q - d)
    if not (1 <= d <= isqrt(order)) or order % d:
        raise InternalInconsistency(f"recovered degree {d} is impossible")
    return d


def _lift_values(chiq, d: int, cls: ClassData, ctx: CyclotomicContext, z: int, q: int):
    n = ctx.n
    zpow = [1] * n
    for t in range(1, n):
        zpow[t] = zpow[t - 1] * z % q
    half = (q - 1) // 2
    values = []
    for c in range(cls.num_classes):
        o = 1
        # order of the class representative divides the exponent; recover it
        # from the power map rather than touching elements again
        while cls.power(o, c) != 0:
            o += 1
        oinv = inverse_mod(o, q)
        step = n // o
        mults = []
        for j in range(o):
            s = 0
            for el in range(o):
                s += chiq[cls.power(el, c)] * zpow[(step * ((-j * el) % o)) % n]
            m = s % q * oinv % q
            if m > half:
                raise InternalInconsistency("eigenvalue multiplicity did not lift")
            mults.append(m)
        if sum(mults) != d:
            raise InternalInconsistency("lifted multiplicities do not sum to the degree")
        acc = [0] * ctx.phi
        for j, m in enumerate(mults):
            if m:
                row = ctx.monomial_coeffs(j * step)
                for t in range(ctx.phi):
                    acc[t] += m * row[t]
        values.append(CycNum(ctx, acc, 1))
    return tuple(values)


def compute_table(G: Group) -> CharacterTable:
    """Compute the full irreducible character table of G, exactly."""
    cls = G.classes
    r = cls.num_classes
    n = G.exponent
    ctx = context(n)
    q = _modular_prime(n, G.order)
    if r == 1:
        vecs = [[1]]
    else:
        vecs = split_common_eigenspaces(_class_matrices(G, cls, q), r, q)
    if len(vecs) != r:
        raise InternalInconsistency("eigenline count differs from the class count")
    z = _nth_root_mod(n, q)
    size_inv = [inverse_mod(s, q) for s in cls.sizes]
    chars = []
    for v in vecs:
        if v[0] == 0:
            raise InternalInconsistency("central character vanishes on the identity")
        inv0 = inverse_mod(v[0], q)
        w = [x * inv0 % q for x in v]
        d = _degree_of(w, cls, q, G.order)
        chiq = [d * w[c] % q * size_inv[c] % q for c in range(r)]
        chars.append((d, _lift_values(chiq, d, cls, ctx, z, q)))
    one = ctx.one
    trivial = [
        i for i, (d, values) in enumerate(chars) if d == 1 and all(v == one for v in values)
    ]
    if len(trivial) != 1:
        raise InternalInconsistency("trivial character not found exactly once")
    rest = [chars[i] for i in range(len(chars)) if i != trivial[0]]
    rest.sort(key=lambda dv: (dv[0], tuple(v.coeffs for v in dv[1])))
    ordered = [chars[trivial[0]]] + rest
    table = CharacterTable(
        group=G,
        irreducibles=[ClassFunction(G, values) for _, values in ordered],
        degrees=[d for d, _ in ordered],
        conductor=n,
        provenance=TableProvenance(prime=q, zeta_image=z, version=VERSION),
    )
    verify_table(table)
    return table


# -- exact verification ---------------------------------------------------


def _fold_reduce(M3: np.ndarray, ctx: CyclotomicContext) -> np.ndarray:
    # M3[..., i, j] -> reduced coefficient vectors of sum_{i,j} x^(i+j) terms.
    phi = ctx.phi
    lead = M3.shape[:-2]
    F = np.zeros(lead + (2 * phi - 1,), dtype=np.int64)
    for i in range(phi):
        F[..., i : i + phi] += M3[..., i, :]
    return F @ ctx.reduction_matrix()


def _batch_inner(table: CharacterTable, A: np.ndarray) -> Optional[np.ndarray]:
    """|G| * <A, chi_m> for all m as int64 coefficient rows, None on overflow."""
    ctx = table._ctx
    phi = ctx.phi
    V, CV = table._int_values
    w = np.array(table.group.classes.sizes, dtype=np.int64)
    max_a = max(1, int(np.abs(A).max()))
    max_cv = max(1, int(np.abs(CV).max()))
    max_r = max(1, int(np.abs(ctx.reduction_matrix()).max()))
    bound = (2 * phi - 1) * max_r * phi * table.group.order * max_a * max_cv
    if bound >= 2**62:
        return None
    M3 = np.einsum("c,ci,mcj->mij", w, A, CV)
    return _fold_reduce(M3, ctx)


def _inner_raw_slow(avals, bvals, cls: ClassData, ctx: CyclotomicContext) -> CycNum:
    acc = ctx.zero
    for c in range(cls.num_classes):
        acc = acc + cls.sizes[c] * (avals[c] * bvals[c].conjugate())
    return acc


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    """<a, b> = (1/|G|) sum over G of a(g) conj(b(g)), exact."""
    _same_group(a, b)
    G = a.group
    total = _inner_raw_slow(a.values, b.values, G.classes, a.values[0].ctx)
    v = (total * Fraction(1, G.order)).to_rational()
    if v is None:
        raise InternalInconsistency(
            "inner product is irrational; operands are not generalized characters"
        )
    return v


def pointwise_product(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a * b


def decompose(theta: ClassFunction, table: CharacterTable) -> Decomposition:
    """Write a character as a nonnegative integer sum of irreducibles."""
    _same_group(theta, table)
    order = table.group.order
    if any(v.den != 1 for v in theta.values):
        raise NotACharacter("character values must be algebraic integers")
    if any(v.ctx.n != table.conductor for v in theta.values):
        raise NotACharacter("values live in the wrong cyclotomic context")
    A = np.array([v.num for v in theta.values], dtype=np.int64)
    res = _batch_inner(table, A)
    mults = []
    if res is not None:
        for m in range(len(table)):
            row = res[m]
            if row[1:].any() or row[0] % order or row[0] < 0:
                raise NotACharacter(
                    f"multiplicity of irreducible {m} is not a nonnegative integer"
                )
            mults.append(int(row[0]) // order)
    else:
        cls = table.group.classes
        ctx = table._ctx
        for m, chi in enumerate(table.irreducibles):
            total = _inner_raw_slow(theta.values, chi.values, cls, ctx)
            val = total.to_rational()
            if val is None or val.denominator != 1 or val < 0 or val % order:
                raise NotACharacter(
                    f"multiplicity of irreducible {m} is not a nonnegative integer"
                )
            mults.append(int(val) // order)
    dec = Decomposition(table, tuple(mults))
    if dec.reconstruct() != theta:
        raise InternalInconsistency("decomposition does not reconstruct the input")
    return dec


def eta(theta: ClassFunction, table: CharacterTable) -> int:
    """Number of distinct irreducible constituents of a character."""
    return decompose(theta, table).eta


def verify_table(table: CharacterTable) -> None:
    """Exact row and column orthogonality; raises InternalInconsistency."""
    G = table.group
    cls = G.classes
    r = len(table)
    if r != cls.num_classes:
        raise InternalInconsistency("character count differs from class count")
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalInconsistency("degree squares do not sum to the group order")
    ctx = table._ctx
    one = ctx.one
    if table.degrees[0] != 1 or any(v != one for v in table.irreducibles[0].values):
        raise InternalInconsistency("first character is not the trivial character")
    for chi, d in zip(table.irreducibles, table.degrees):
        if chi.values[0] != ctx.from_rational(d):
            raise InternalInconsistency("value at the identity differs from the degree")
    V, CV = table._int_values
    phi = ctx.phi
    max_v = max(1, int(np.abs(V).max()))
    max_cv = max(1, int(np.abs(CV).max()))
    max_r = max(1, int(np.abs(ctx.reduction_matrix()).max()))
    bound = (2 * phi - 1) * max_r * phi * max(G.order, r) * max_v * max_cv
    # the einsum tensors hold r^2 phi^2 entries; past ~0.5 GB use the loop
    if bound < 2**62 and r * r * phi * phi <= 2**26:
        w = np.array(cls.sizes, dtype=np.int64)
        # rows: <chi_i, chi_j> |G| as coefficient vectors
        M4 = np.einsum("c,icx,jcy->ijxy", w, V, CV)
        rows = _fold_reduce(M4, ctx)
        expect = np.zeros_like(rows)
        for i in range(r):
            expect[i, i, 0] = G.order
        if not (rows == expect).all():
            raise InternalInconsistency("row orthogonality fails")
        # columns: sum_m chi_m(c) conj(chi_m(e)) = delta * |G| / |C_c|
        M4 = np.einsum("mcx,mey->cexy", V, CV)
        cols = _fold_reduce(M4, ctx)
        expect = np.zeros_like(cols)
        for c in range(cls.num_classes):
            expect[c, c, 0] = G.order // cls.sizes[c]
        if not (cols == expect).all():
            raise InternalInconsistency("column orthogonality fails")
    else:
        _verify_orthogonality_slow(table)


def _verify_orthogonality_slow(table: CharacterTable) -> None:
    G = table.group
    cls = G.classes
    ctx = table._ctx
    r = len(table)
    conj = [[v.conjugate() for v in chi.values] for chi in table.irreducibles]
    for i in range(r):
        for j in range(r):
            acc = ctx.zero
            for c in range(cls.num_classes):
                acc = acc + cls.sizes[c] * (table.irreducibles[i].values[c] * conj[j][c])
            expect = ctx.from_rational(G.order if i == j else 0)
            if acc != expect:
                raise InternalInconsistency("row orthogonality fails")
    for c in range(cls.num_classes):
        for e in range(cls.num_classes):
            acc = ctx.zero
            for m in range(r):
                acc = acc + table.irreducibles[m].values[c] * conj[m][e]
            expect = ctx.from_rational(G.order // cls.sizes[c] if c == e else 0)
            if acc != expect:
                raise InternalInconsistency("column orthogonality fails")


# -- squaring structure ---------------------------------------------------


def second_power(theta: ClassFunction) -> ClassFunction:
    """The class function g -> theta(g^2)."""
    cls = theta.group.classes
    return ClassFunction(
        theta.group,
        tuple(theta.values[cls.power(2, c)] for c in range(cls.num_classes)),
    )


def square_root_char(table: CharacterTable, index: int) -> int:
    """For odd order: the unique irreducible psi with psi(g^2) = chi(g).

    psi is chi composed with g -> g^((|G|+1)/2); the postconditions (psi is in
    the table, chi appears with odd multiplicity in psi^2) are checked and
    their failure is fatal.
    """
    G = table.group
    if G.order % 2 == 0:
        raise EvenOrder("square roots of characters need a group of odd order")
    chi = table.irreducibles[index]
    half = (G.order + 1) // 2
    cls = G.classes
    psi_values = tuple(chi.values[cls.power(half, c)] for c in range(cls.num_classes))
    idx = table.index_of(psi_values)
    if idx is None:
        raise InternalInconsistency("half power image is not an irreducible character")
    mult = table.decompose_square(idx).multiplicities[index]
    if mult % 2 == 0:
        raise InternalInconsistency("square of the root does not contain chi oddly")
    return idx


def second_power_permutation(table: CharacterTable) -> SecondPowerMap:
    """Track chi -> (g -> chi(g^2)) across the table; never raises."""
    images: list[Optional[int]] = []
    notes: list[str] = []
    for i, chi in enumerate(table.irreducibles):
        sp = second_power(chi)
        idx = table.index_of(sp)
        images.append(idx)
        if idx is None:
            norm = _inner_raw_slow(
                sp.values, sp.values, table.group.classes, table._ctx
            ) * Fraction(1, table.group.order)
            rat = norm.to_rational()
            detail = f" with norm {rat}" if rat is not None else ""
            notes.append(f"image of irreducible {i} is not irreducible{detail}")
    seen = [x for x in images if x is not None]
    is_perm = len(seen) == len(table) and len(set(seen)) == len(table)
    for i, j in enumerate(images):
        if j is not None and images.count(j) > 1:
            notes.append(f"irreducibles squaring to the same image include {i}")
    return SecondPowerMap(table, tuple(images), is_perm, tuple(notes))


# -- kernels and centers --------------------------------------------------


def _classes_to_subgroup(table_group: Group, class_ids, what: str) -> Subgroup:
    members = []
    cls = table_group.classes
    for c in class_ids:
        members.extend(int(m) for m in cls.members(c))
    try:
        return subgroup_from_members(table_group, members)
    except InternalInconsistency as exc:
        raise NotACharacter(f"{what} classes do not form a subgroup") from exc


def char_kernel(chi: ClassFunction) -> Subgroup:
    """Ker(chi) = elements where chi takes its identity value."""
    d = chi.values[0]
    ids = [c for c, v in enumerate(chi.values) if v == d]
    return _classes_to_subgroup(chi.group, ids, "kernel")


def char_center(chi: ClassFunction) -> Subgroup:
    """Z(chi) = elements where |chi| reaches the degree."""
    d2 = chi.values[0] * chi.values[0]
    ids = [c for c, v in enumerate(chi.values) if v.abs_squared() == d2]
    return _classes_to_subgroup(chi.group, ids, "center")


# -- induction and restriction --------------------------------------------


def induce(H: Subgroup, lam: ClassFunction, G: Group) -> ClassFunction:
    """Induced class function lam^G via a left transversal sum."""
    if H.parent is not G:
        raise NotSubgroup("subgroup does not sit inside the given group")
    carrier = H.as_group()
    if lam.group is not carrier:
        raise GroupMismatch("class function does not live on the subgroup")
    ctx = context(G.exponent)
    hcls = carrier.classes
    gcls = G.classes
    embedded = [embed(v, ctx) for v in lam.values]
    out = []
    for rep in gcls.representatives:
        acc = ctx.zero
        for t in H.left_transversal:
            y = G.conjugate(rep, t)
            sub = int(H.index_of[y])
            if sub >= 0:
                acc = acc + embedded[hcls.class_of[sub]]
        out.append(acc)
    return ClassFunction(G, out)


def restrict(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    """Restriction of a parent class function to the subgroup carrier."""
    if chi.group is not H.parent:
        raise GroupMismatch("class function does not live on the parent group")
    carrier = H.as_group()
    ctx = context(carrier.exponent)
    gcls = H.parent.classes
    out = []
    for rep in carrier.classes.representatives:
        parent_elt = H.members[rep]
        out.append(descend(chi.values[gcls.class_of[parent_elt]], ctx))
    return ClassFunction(carrier, out)
