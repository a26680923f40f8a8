"""Finite groups as dense index tables, 0-based conventions throughout.

A Group is a closed multiplication table over element indices 0..n-1 with the
identity pinned at index 0. Concrete carriers (residues, matrix tuples,
permutations) exist only while the table is built; every later computation
works on indices. Conjugacy data is computed once per group and cached.

Group specs follow the grammar `family:param[:param...]` or
`perm:<degree>:<generators>` with ';' between generators written in cycle
notation. `direct:` takes two family sub-specs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import (
    BadParameters,
    BadSpec,
    ClosureExceedsCap,
    InternalInconsistency,
    InvalidPermutation,
)

GROUP_ORDER_CAP = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- permutations ---------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """One generator in cycle notation, e.g. '(0 1 2 3)' or '(0 1)(2 3)'."""
    text = text.strip()
    if not text:
        raise InvalidPermutation("empty permutation string")
    consumed = _CYCLE_RE.sub("", text).strip()
    if consumed:
        raise InvalidPermutation(f"unparsed text {consumed!r} in permutation {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        pts = [p for chunk in body.split(",") for p in chunk.split()]
        cycle = []
        for p in pts:
            if not p.isdigit():
                raise InvalidPermutation(f"bad point {p!r} in cycle ({body})")
            v = int(p)
            if v >= degree:
                raise InvalidPermutation(f"point {v} out of range for degree {degree}")
            if v in seen:
                raise InvalidPermutation(f"point {v} repeated in permutation {text!r}")
            seen.add(v)
            cycle.append(v)
        for i, v in enumerate(cycle):
            images[v] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def cycles_string(perm: Sequence[int]) -> str:
    """Canonical cycle notation; fixed points omitted, identity rendered '()'."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


# -- metadata and class data ----------------------------------------------


@dataclass(frozen=True)
class GroupMetadata:
    """Structural flags; None means unknown, never guessed."""

    family: str
    params: tuple
    odd_order: bool
    nilpotent: Optional[bool]
    supersolvable: Optional[bool]
    all_irreducibles_monomial: Optional[bool]


@dataclass(frozen=True)
class GroupInvariants:
    exponent: int
    center: tuple[int, ...]
    is_abelian: bool


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes in canonical order.

    Classes are sorted by (representative element order, class size, smallest
    member index); the identity class is therefore class 0. power_class[m][c]
    is the class of g^m for g in class c, for 0 <= m < exponent.
    """

    num_classes: int
    class_of: np.ndarray
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]
    power_class: np.ndarray
    exponent: int

    def power(self, m: int, c: int) -> int:
        """Class of g^m for g in class c."""
        return int(self.power_class[m % self.exponent, c])

    def members(self, c: int) -> np.ndarray:
        return np.where(self.class_of == c)[0]


class Group:
    """A finite group on indices 0..order-1 with identity 0."""

    def __init__(self, elements, mul, metadata: GroupMetadata, spec: str, witness):
        self.order = len(elements)
        self.elements = tuple(elements)
        self.mul = mul
        self.metadata = metadata
        self.spec = spec
        self.generator_witness = tuple(witness)
        self.inv = np.argmax(mul == 0, axis=1).astype(np.int32)
        self.element_orders = _element_orders(mul)

    def __repr__(self) -> str:
        return f"Group({self.spec}, order={self.order})"

    @cached_property
    def exponent(self) -> int:
        return lcm(*{int(o) for o in self.element_orders})

    @cached_property
    def center(self) -> tuple[int, ...]:
        commutes = (self.mul == self.mul.T).all(axis=1)
        return tuple(int(i) for i in np.where(commutes)[0])

    @cached_property
    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    @cached_property
    def p_group(self) -> Optional[tuple[int, int]]:
        """(p, k) with order = p^k when the order is a prime power, else None."""
        fac = _factorize(self.order)
        if len(fac) == 1:
            p, k = next(iter(fac.items()))
            return (p, k)
        return None

    @cached_property
    def classes(self) -> ClassData:
        return _compute_classes(self)

    def conjugate(self, g: int, h: int) -> int:
        """h^-1 g h."""
        return int(self.mul[self.mul[self.inv[h], g], h])

    def power(self, g: int, m: int) -> int:
        m %= int(self.element_orders[g])
        out, base = 0, g
        while m:
            if m & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            m >>= 1
        return out


def conjugacy_classes(G: Group) -> ClassData:
    return G.classes


def group_invariants(G: Group) -> GroupInvariants:
    return GroupInvariants(exponent=G.exponent, center=G.center, is_abelian=G.is_abelian)


def _element_orders(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    orders = np.zeros(n, dtype=np.int32)
    idx = np.arange(n)
    power = idx.copy()
    k = 1
    while (orders == 0).any():
        done = (power == 0) & (orders == 0)
        orders[done] = k
        power = mul[power, idx]
        k += 1
        if k > n + 1:
            raise InternalInconsistency("element order chase did not terminate")
    return orders


def _compute_classes(G: Group) -> ClassData:
    n, mul, inv = G.order, G.mul, G.inv
    idx = np.arange(n)
    class_of = np.full(n, -1, dtype=np.int32)
    raw: list[np.ndarray] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        half = mul[inv, g]
        members = np.unique(mul[half, idx])
        class_of[members] = len(raw)
        raw.append(members)
    order_key = lambda members: (
        int(G.element_orders[members[0]]),
        len(members),
        int(members[0]),
    )
    perm = sorted(range(len(raw)), key=lambda c: order_key(raw[c]))
    relabel = np.empty(len(raw), dtype=np.int32)
    for new, old in enumerate(perm):
        relabel[old] = new
    class_of = relabel[class_of]
    reps = tuple(int(raw[old][0]) for old in perm)
    sizes = tuple(len(raw[old]) for old in perm)
    inverse_class = tuple(int(class_of[inv[r]]) for r in reps)
    e = G.exponent
    r = len(raw)
    power_class = np.empty((e, r), dtype=np.int32)
    for c, rep in enumerate(reps):
        x = 0
        for m in range(e):
            power_class[m, c] = class_of[x]
            x = int(mul[x, rep])
    data = ClassData(
        num_classes=r,
        class_of=class_of,
        representatives=reps,
        sizes=sizes,
        inverse_class=inverse_class,
        power_class=power_class,
        exponent=e,
    )
    if sizes[0] != 1 or reps[0] != 0:
        raise InternalInconsistency("identity class is not class 0")
    if sum(sizes) != n:
        raise InternalInconsistency("class sizes do not sum to the group order")
    return data


# -- closure and table construction ---------------------------------------


def _close(gens: list, mul_fn: Callable, identity, cap: int):
    index = {identity: 0}
    elements = [identity]
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        pos += 1
        for g in gens:
            y = mul_fn(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureExceedsCap(
                        f"closure exceeds the order cap {cap}"
                    )
                index[y] = len(elements)
                elements.append(y)
    return elements, index


def _build(
    gens: list,
    mul_fn: Callable,
    identity,
    metadata_fn: Callable[[bool], GroupMetadata],
    spec: str,
    cap: int = GROUP_ORDER_CAP,
    expected: Optional[int] = None,
) -> Group:
    elements, index = _close(gens, mul_fn, identity, cap)
    if expected is not None and len(elements) != expected:
        raise InternalInconsistency(
            f"{spec}: closure has {len(elements)} elements, expected {expected}"
        )
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int32)
    for i, x in enumerate(elements):
        mul[i] = [index[mul_fn(x, y)] for y in elements]
    witness = []
    for g in gens:
        gi = index[g]
        if gi not in witness:
            witness.append(gi)
    return Group(elements, mul, metadata_fn(n % 2 == 1), spec, witness)


def _flags(family, params, odd, nilp, ss, mono) -> GroupMetadata:
    return GroupMetadata(
        family=family,
        params=tuple(params),
        odd_order=odd,
        nilpotent=nilp,
        supersolvable=ss,
        all_irreducibles_monomial=mono,
    )


# -- builtin families -----------------------------------------------------


def _check_cap(order: int, spec: str) -> None:
    if order > GROUP_ORDER_CAP:
        raise ClosureExceedsCap(f"{spec}: order {order} exceeds cap {GROUP_ORDER_CAP}")


def _mk_cyclic(n: int) -> Group:
    spec = f"cyclic:{n}"
    if n < 1:
        raise BadParameters(f"{spec}: order must be positive")
    _check_cap(n, spec)
    return _build(
        [1 % n],
        lambda a, b: (a + b) % n,
        0,
        lambda odd: _flags("cyclic", (n,), odd, True, True, True),
        spec,
        expected=n,
    )


def _mk_dihedral(n: int) -> Group:
    spec = f"dihedral:{n}"
    if n < 6 or n % 2:
        raise BadParameters(f"{spec}: order must be even and at least 6")
    m = n // 2
    nilp = (n & (n - 1)) == 0

    def mul(a, b):
        i, e = a
        j, f = b
        return ((i + (j if e == 0 else -j)) % m, e ^ f)

    return _build(
        [(1, 0), (0, 1)],
        mul,
        (0, 0),
        lambda odd: _flags("dihedral", (n,), odd, nilp, True, True),
        spec,
        expected=n,
    )


def _mat2_mod(p: int):
    def mul(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        )

    return mul


def _mk_quaternion(n: int) -> Group:
    spec = f"quaternion:{n}"
    if n != 8:
        raise BadParameters(f"{spec}: only the order 8 quaternion group is built in")
    # i and j realized in SL(2,3).
    return _build(
        [(0, 2, 1, 0), (1, 1, 1, 2)],
        _mat2_mod(3),
        (1, 0, 0, 1),
        lambda odd: _flags("quaternion", (8,), odd, True, True, True),
        spec,
        expected=8,
    )


def _mk_sl23() -> Group:
    return _build(
        [(1, 1, 0, 1), (1, 0, 1, 1)],
        _mat2_mod(3),
        (1, 0, 0, 1),
        lambda odd: _flags("sl23", (), odd, False, False, False),
        "sl23",
        expected=24,
    )


def _mk_heisenberg(p: int) -> Group:
    spec = f"heisenberg:{p}"
    if not is_prime(p) or p == 2:
        raise BadParameters(f"{spec}: parameter must be an odd prime")
    _check_cap(p**3, spec)

    def mul(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)

    return _build(
        [(1, 0, 0), (0, 1, 0)],
        mul,
        (0, 0, 0),
        lambda odd: _flags("heisenberg", (p,), odd, True, True, True),
        spec,
        expected=p**3,
    )


def _mk_extraspecial_exp_p2(p: int) -> Group:
    spec = f"extraspecial_exp_p2:{p}"
    if not is_prime(p) or p == 2:
        raise BadParameters(f"{spec}: parameter must be an odd prime")
    _check_cap(p**3, spec)
    p2 = p * p
    act = [pow(1 + p, j, p2) for j in range(p)]

    def mul(a, b):
        return ((a[0] + b[0] * act[a[1]]) % p2, (a[1] + b[1]) % p)

    return _build(
        [(1, 0), (0, 1)],
        mul,
        (0, 0),
        lambda odd: _flags("extraspecial_exp_p2", (p,), odd, True, True, True),
        spec,
        expected=p**3,
    )


def _mk_metacyclic(q: int, p: int, k: int) -> Group:
    spec = f"metacyclic:{q}:{p}:{k}"
    if q < 2 or p < 2:
        raise BadParameters(f"{spec}: both cyclic factors must be nontrivial")
    from math import gcd

    if gcd(q, p) != 1:
        raise BadParameters(f"{spec}: factor orders must be coprime")
    if not 2 <= k < q:
        raise BadParameters(f"{spec}: action parameter must satisfy 2 <= k < q")
    if pow(k, p, q) != 1:
        raise BadParameters(f"{spec}: k^p is not 1 mod q")
    _check_cap(q * p, spec)
    act = [pow(k, j, q) for j in range(p)]

    def mul(a, b):
        return ((a[0] + b[0] * act[a[1]]) % q, (a[1] + b[1]) % p)

    return _build(
        [(1, 0), (0, 1)],
        mul,
        (0, 0),
        lambda odd: _flags("metacyclic", (q, p, k), odd, False, True, True),
        spec,
        expected=q * p,
    )


def _mk_remark2(n: int) -> Group:
    # C_{2^n} x C_{2^n} extended by the coordinate swap involution.
    spec = f"remark2:{n}"
    if n < 2:
        raise BadParameters(f"{spec}: parameter must be at least 2")
    _check_cap(2 ** (2 * n + 1), spec)
    m = 2**n

    def mul(a, b):
        x, y = (b[1], b[0]) if a[2] else (b[0], b[1])
        return ((a[0] + x) % m, (a[1] + y) % m, a[2] ^ b[2])

    return _build(
        [(1, 0, 0), (0, 0, 1)],
        mul,
        (0, 0, 0),
        lambda odd: _flags("remark2", (n,), odd, True, True, True),
        spec,
        expected=2 ** (2 * n + 1),
    )


def _mk_wreath_cyclic(p: int) -> Group:
    spec = f"wreath_cyclic:{p}"
    if not is_prime(p):
        raise BadParameters(f"{spec}: parameter must be prime")
    _check_cap(p ** (p + 1), spec)

    def mul(a, b):
        v1, s1 = a
        v2, s2 = b
        rot = tuple(v2[(i - s1) % p] for i in range(p))
        return (tuple((x + y) % p for x, y in zip(v1, rot)), (s1 + s2) % p)

    e0 = tuple([1] + [0] * (p - 1))
    zero = (0,) * p
    return _build(
        [(e0, 0), (zero, 1)],
        mul,
        (zero, 0),
        lambda odd: _flags("wreath_cyclic", (p,), odd, True, True, True),
        spec,
        expected=p ** (p + 1),
    )


def _mk_direct(a: Group, b: Group) -> Group:
    spec = f"direct:{a.spec}:{b.spec}"
    _check_cap(a.order * b.order, spec)

    def both(x: Optional[bool], y: Optional[bool]) -> Optional[bool]:
        if x is False or y is False:
            return False
        if x is None or y is None:
            return None
        return True

    amul, bmul = a.mul, b.mul

    def mul(u, v):
        return (int(amul[u[0], v[0]]), int(bmul[u[1], v[1]]))

    gens = [(int(g), 0) for g in a.generator_witness] + [
        (0, int(g)) for g in b.generator_witness
    ]
    ma, mb = a.metadata, b.metadata
    return _build(
        gens,
        mul,
        (0, 0),
        lambda odd: _flags(
            "direct",
            (a.spec, b.spec),
            odd,
            both(ma.nilpotent, mb.nilpotent),
            both(ma.supersolvable, mb.supersolvable),
            both(ma.all_irreducibles_monomial, mb.all_irreducibles_monomial),
        ),
        spec,
        expected=a.order * b.order,
    )


# -- spec parsing ---------------------------------------------------------

_FAMILY_ARITY = {
    "cyclic": 1,
    "dihedral": 1,
    "quaternion": 1,
    "sl23": 0,
    "heisenberg": 1,
    "extraspecial_exp_p2": 1,
    "metacyclic": 3,
    "remark2": 1,
    "wreath_cyclic": 1,
}


def _int_param(tokens: list[str], pos: int, what: str) -> int:
    if pos >= len(tokens):
        raise BadSpec(f"missing {what}")
    tok = tokens[pos]
    if not tok.isdigit():
        raise BadSpec(f"expected an integer for {what}, got {tok!r}")
    return int(tok)


def _parse_family(tokens: list[str], pos: int) -> tuple[Group, int]:
    if pos >= len(tokens):
        raise BadSpec("empty group spec")
    fam = tokens[pos]
    if fam == "direct":
        a, pos = _parse_family(tokens, pos + 1)
        b, pos = _parse_family(tokens, pos)
        return _mk_direct(a, b), pos
    if fam == "perm":
        raise BadSpec("perm specs cannot nest inside direct")
    if fam not in _FAMILY_ARITY:
        raise BadSpec(f"unknown group family {fam!r}")
    arity = _FAMILY_ARITY[fam]
    params = [
        _int_param(tokens, pos + 1 + i, f"parameter {i + 1} of {fam}")
        for i in range(arity)
    ]
    pos += 1 + arity
    if fam == "cyclic":
        return _mk_cyclic(params[0]), pos
    if fam == "dihedral":
        return _mk_dihedral(params[0]), pos
    if fam == "quaternion":
        return _mk_quaternion(params[0]), pos
    if fam == "sl23":
        return _mk_sl23(), pos
    if fam == "heisenberg":
        return _mk_heisenberg(params[0]), pos
    if fam == "extraspecial_exp_p2":
        return _mk_extraspecial_exp_p2(params[0]), pos
    if fam == "metacyclic":
        return _mk_metacyclic(*params), pos
    if fam == "remark2":
        return _mk_remark2(params[0]), pos
    if fam == "wreath_cyclic":
        return _mk_wreath_cyclic(params[0]), pos
    raise BadSpec(f"unknown group family {fam!r}")


def builtin(spec: str) -> Group:
    """Build a group from a family spec like 'metacyclic:7:3:2'."""
    tokens = [t.strip() for t in spec.strip().split(":")]
    group, end = _parse_family(tokens, 0)
    if end != len(tokens):
        raise BadSpec(f"trailing tokens {':'.join(tokens[end:])!r} in {spec!r}")
    return group


def build_from_generators(
    degree: int,
    perms: Sequence[Sequence[int]],
    cap: int = GROUP_ORDER_CAP,
    nilpotent: Optional[bool] = None,
    supersolvable: Optional[bool] = None,
    all_irreducibles_monomial: Optional[bool] = None,
) -> Group:
    """Close a list of permutations (images on 0..degree-1) into a Group."""
    if degree < 1:
        raise BadParameters("degree must be positive")
    checked: list[tuple[int, ...]] = []
    for p in perms:
        t = tuple(int(v) for v in p)
        if sorted(t) != list(range(degree)):
            raise InvalidPermutation(f"{t} is not a permutation of 0..{degree - 1}")
        checked.append(t)
    identity = tuple(range(degree))
    spec = f"perm:{degree}:" + ";".join(cycles_string(p) for p in checked)

    def mul(p, q):
        return tuple(p[i] for i in q)

    return _build(
        checked,
        mul,
        identity,
        lambda odd: _flags(
            "perm",
            (degree,),
            odd,
            nilpotent,
            supersolvable,
            all_irreducibles_monomial,
        ),
        spec,
        cap=cap,
    )


def from_spec(spec: str) -> Group:
    """Build a group from the full spec grammar (families or perm:...)."""
    spec = spec.strip()
    if not spec:
        raise BadSpec("empty group spec")
    if spec.startswith("perm:"):
        tokens = spec.split(":", 2)
        if len(tokens) != 3:
            raise BadSpec("perm spec needs a degree and a generator list")
        if not tokens[1].strip().isdigit():
            raise BadSpec(f"expected an integer degree, got {tokens[1]!r}")
        degree = int(tokens[1])
        gens = [parse_cycles(part, degree) for part in tokens[2].split(";") if part.strip()]
        return build_from_generators(degree, gens)
    return builtin(spec)


# -- subgroups ------------------------------------------------------------


class Subgroup:
    """A subgroup of a parent Group, kept as a sorted member index tuple."""

    def __init__(self, parent: Group, members, generators, is_normal: bool, transversal):
        self.parent = parent
        self.members = tuple(int(m) for m in members)
        self.generators = tuple(int(g) for g in generators)
        self.is_normal = is_normal
        self.left_transversal = tuple(int(t) for t in transversal)
        self._carrier: Optional[Group] = None
        lookup = np.full(parent.order, -1, dtype=np.int32)
        lookup[list(self.members)] = np.arange(len(self.members))
        self.index_of = lookup

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def contains(self, g: int) -> bool:
        return self.index_of[g] >= 0

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, index={self.index}, normal={self.is_normal})"

    def as_group(self) -> Group:
        """The subgroup as a Group in its own right (structural flags unknown)."""
        if self._carrier is None:
            members = np.array(self.members, dtype=np.int64)
            sub = self.parent.mul[np.ix_(members, members)]
            table = self.index_of[sub].astype(np.int32)
            if (table < 0).any():
                raise InternalInconsistency("member set is not closed under products")
            gens = ",".join(str(g) for g in self.generators)
            meta = GroupMetadata(
                family="subgroup",
                params=(),
                odd_order=len(self.members) % 2 == 1,
                nilpotent=None,
                supersolvable=None,
                all_irreducibles_monomial=None,
            )
            spec = f"sub({self.parent.spec};{gens})"
            self._carrier = Group(self.members, table, meta, spec,
                                  tuple(int(self.index_of[g]) for g in self.generators))
        return self._carrier


def _closure_indices(G: Group, gens: Sequence[int]) -> list[int]:
    mul = G.mul
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = [0]
    pos = 0
    while pos < len(frontier):
        x = frontier[pos]
        pos += 1
        for g in gens:
            y = int(mul[x, g])
            if not seen[y]:
                seen[y] = True
                frontier.append(y)
    return sorted(int(i) for i in np.where(seen)[0])


def subgroup_closure(G: Group, gens: Sequence[int]) -> Subgroup:
    """Subgroup generated by element indices, with left transversal and normality."""
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < G.order:
            raise BadParameters(f"generator index {g} out of range")
    members = _closure_indices(G, gens)
    return _subgroup_from_members(G, members, gens)


def _subgroup_from_members(G: Group, members: list[int], gens: Sequence[int]) -> Subgroup:
    marr = np.array(members, dtype=np.int64)
    member_mask = np.zeros(G.order, dtype=bool)
    member_mask[marr] = True
    transversal = []
    covered = np.zeros(G.order, dtype=bool)
    for x in range(G.order):
        if not covered[x]:
            transversal.append(x)
            covered[G.mul[x, marr]] = True
    is_normal = True
    for t in G.generator_witness:
        conj = G.mul[G.mul[G.inv[t], marr], t]
        if not member_mask[conj].all():
            is_normal = False
            break
    return Subgroup(G, members, gens, is_normal, transversal)


def subgroup_from_members(G: Group, members: Sequence[int]) -> Subgroup:
    """Wrap a member set already known to be a subgroup; closure is verified."""
    members = sorted(set(int(m) for m in members))
    marr = np.array(members, dtype=np.int64)
    prods = G.mul[np.ix_(marr, marr)]
    mask = np.zeros(G.order, dtype=bool)
    mask[marr] = True
    if not mask[prods].all():
        raise InternalInconsistency("member set is not closed under products")
    gens: list[int] = []
    have = {0}
    for m in members:
        if m not in have:
            gens.append(m)
            have = set(_closure_indices(G, gens))
    return _subgroup_from_members(G, members, gens)


# -- axioms ---------------------------------------------------------------


def validate_group(G: Group, samples: int = 100_000, seed: int = 0) -> None:
    """Check the group axioms on the table; raises InternalInconsistency.

    Associativity is exhaustive up to order 512 and randomized (seeded) above.
    """
    import random

    n, mul = G.order, G.mul
    idx = np.arange(n)
    if not (mul[0] == idx).all() or not (mul[:, 0] == idx).all():
        raise InternalInconsistency("identity row or column is wrong")
    if not (np.sort(mul, axis=1) == idx).all():
        raise InternalInconsistency("a row is not a permutation")
    if not (np.sort(mul, axis=0) == idx[:, None]).all():
        raise InternalInconsistency("a column is not a permutation")
    if not (mul[idx, G.inv] == 0).all() or not (mul[G.inv, idx] == 0).all():
        raise InternalInconsistency("inverse table is wrong")
    if n <= 512:
        for c in range(n):
            left = mul[mul, c]
            right = mul[:, mul[:, c]]
            if not (left == right).all():
                raise InternalInconsistency(f"associativity fails with right factor {c}")
    else:
        rng = random.Random(seed)
        a = np.array([rng.randrange(n) for _ in range(samples)])
        b = np.array([rng.randrange(n) for _ in range(samples)])
        c = np.array([rng.randrange(n) for _ in range(samples)])
        if not (mul[mul[a, b], c] == mul[a, mul[b, c]]).all():
            raise InternalInconsistency("associativity fails on a sampled triple")
    for g in range(0, n, max(1, n // 64)):
        o = int(G.element_orders[g])
        if G.power(g, o) != 0:
            raise InternalInconsistency(f"claimed order of element {g} is not annihilating")
        for p in _factorize(o):
            if G.power(g, o // p) == 0:
                raise InternalInconsistency(f"claimed order of element {g} is not minimal")
