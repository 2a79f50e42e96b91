"""Subgroup lattices, normal subgroups, and minimal coprime abelian indices.

The central quantity is JAnalysis: for a prime p, the minimal index of a
normal abelian subgroup of order coprime to p, and that index divided by
the cube of the p-part as an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .smallgroup import CapExceeded, MaterializedGroup, bits, coprime, p_part

MAX_SUBGROUP_ORDER = 2000
MAX_NORMAL_ORDER = 50000


@dataclass(frozen=True)
class Sub:
    """A subgroup of a materialized group: membership bitmask + generators."""

    mask: int
    gens: tuple

    @property
    def order(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class JAnalysis:
    p: int
    p_part: int
    min_index: int
    witness: Sub
    j_ratio: Fraction


def conj_mask(mask: int, table) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << table[i]
    return out


def is_normal(M: MaterializedGroup, sub: Sub) -> bool:
    return M.is_normal_mask(sub.mask, sub.gens or None)


def normal_subgroups(M: MaterializedGroup, cap: int = MAX_NORMAL_ORDER) -> list[Sub]:
    """All normal subgroups, as joins of normal closures of single classes."""
    if M.n > cap:
        raise CapExceeded(f"order {M.n} exceeds normal-lattice cap {cap}")
    if M._normals is not None:
        return M._normals
    found = {1: ()}
    seeds = []
    for cls in M.conjugacy_classes():
        if cls[0] == 0:
            continue
        mask, gens = M.normal_closure([cls[0]])
        if mask not in found:
            found[mask] = tuple(gens)
            seeds.append(mask)
    queue = list(seeds)
    while queue:
        a = queue.pop()
        ga = found[a]
        for b in list(found):
            if a | b == a or a | b == b:
                continue
            j = M.close(list(ga) + list(found[b]))
            if j not in found:
                found[j] = tuple(M.gens_for_mask(j))
                queue.append(j)
    out = [Sub(m, g) for m, g in found.items()]
    out.sort(key=lambda s: (s.order, s.mask))
    M._normals = out
    return out


def all_subgroups(M: MaterializedGroup, cap: int = MAX_SUBGROUP_ORDER) -> list[Sub]:
    """Every subgroup, built bottom-up by single-generator extension."""
    if M.n > cap:
        raise CapExceeded(f"order {M.n} exceeds subgroup-sweep cap {cap}")
    if M._all_subs is not None:
        return M._all_subs
    subs = {1: ()}
    queue = []
    for x in range(1, M.n):
        mask = M.close([x])
        if mask not in subs:
            subs[mask] = (x,)
            queue.append(mask)
    qi = 0
    while qi < len(queue):
        mask = queue[qi]
        qi += 1
        gens = subs[mask]
        covered = mask
        for g in range(1, M.n):
            if covered >> g & 1:
                continue
            ext = M.close(list(gens) + [g])
            if ext not in subs:
                subs[ext] = gens + (g,)
                queue.append(ext)
            # <H, hg> = <H, g> for h in H: mark the whole coset Hg
            for x in bits(mask):
                covered |= 1 << M.mul(x, g)
    out = [Sub(m, g) for m, g in subs.items()]
    out.sort(key=lambda s: (s.order, s.mask))
    M._all_subs = out
    return out


def conjugates_of(M: MaterializedGroup, mask: int) -> list[int]:
    """Orbit of a subgroup mask under conjugation by G."""
    maps = M.conj_maps()
    orbit = {mask}
    queue = [mask]
    while queue:
        m0 = queue.pop()
        for t in maps:
            m1 = conj_mask(m0, t)
            if m1 not in orbit:
                orbit.add(m1)
                queue.append(m1)
    return sorted(orbit)


class _Canonizer:
    """Caches subgroup-mask -> minimal conjugate mask for one group."""

    def __init__(self, M):
        self.M = M
        self.cache = {}

    def __call__(self, mask: int) -> int:
        hit = self.cache.get(mask)
        if hit is not None:
            return hit
        orbit = conjugates_of(self.M, mask)
        c = orbit[0]
        for m in orbit:
            self.cache[m] = c
        return c


def subgroup_classes(M: MaterializedGroup, cap: int = MAX_SUBGROUP_ORDER) -> list[Sub]:
    """One representative per conjugacy class of subgroups.

    Cyclic-extension search over class representatives: extend each
    representative by one element, skipping elements equivalent under
    H-double-cosets and normalizer conjugation, and deduplicate by the
    minimal conjugate bitmask.
    """
    if M.n > cap:
        raise CapExceeded(f"order {M.n} exceeds subgroup-sweep cap {cap}")
    if M._sub_classes is not None:
        return M._sub_classes
    canon = _Canonizer(M)
    reps = {}
    queue = []

    def register(mask):
        c = canon(mask)
        if c not in reps:
            sub = Sub(c, tuple(M.gens_for_mask(c)))
            reps[c] = sub
            queue.append(sub)

    register(1)
    for x in range(1, M.n):
        o = M.element_order(x)
        f = _smallest_prime_factor(o)
        if o != f ** _valuation(o, f):
            continue  # prime-power-order elements reach every subgroup
        register(M.close([x]))

    qi = 0
    full = M.full_mask
    while qi < len(queue):
        H = queue[qi]
        qi += 1
        if H.mask == full:
            continue
        hgens = list(H.gens)
        nmask = M.normalizer(H.mask, hgens or bits(H.mask))
        ngens = M.gens_for_mask(nmask)
        covered = H.mask
        for g in range(1, M.n):
            if covered >> g & 1:
                continue
            register(M.close(hgens + [g]))
            # skip the rest of the H-double-coset and its normalizer orbit
            orb = [g]
            covered |= 1 << g
            oi = 0
            while oi < len(orb):
                x = orb[oi]
                oi += 1
                for h in hgens:
                    for y in (M.mul(h, x), M.mul(x, h)):
                        if not covered >> y & 1:
                            covered |= 1 << y
                            orb.append(y)
                for u in ngens:
                    y = M.conj(x, u)
                    if not covered >> y & 1:
                        covered |= 1 << y
                        orb.append(y)
    out = sorted(reps.values(), key=lambda s: (s.order, s.mask))
    M._sub_classes = out
    return out


subgroups_up_to_conjugacy = subgroup_classes


def _smallest_prime_factor(n):
    if n < 2:
        return 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def j_analysis(M: MaterializedGroup, p: int) -> JAnalysis:
    """Minimal index of a normal abelian subgroup of order coprime to p."""
    pp = p_part(M.n, p)
    best = None
    for sub in normal_subgroups(M):
        if not coprime(sub.order, p):
            continue
        if not M.is_abelian_set(sub.gens):
            continue
        index = M.n // sub.order
        if best is None or (index, sub.mask) < (best[0], best[1].mask):
            best = (index, sub)
    index, witness = best  # the trivial subgroup always qualifies
    return JAnalysis(p, pp, index, witness, Fraction(index, pp**3))


def sub_materialized(M: MaterializedGroup, sub: Sub) -> MaterializedGroup:
    """A subgroup as a group in its own right (same permutation carrier)."""
    gens = [M.perms[i] for i in sub.gens]
    out = MaterializedGroup(gens, M.degree, cap=M.n + 1)
    if out.n != sub.order:
        raise AssertionError("subgroup closure mismatch")
    return out


@dataclass(frozen=True)
class SweepEntry:
    sub: Sub
    order: int
    sylow: int
    order_ok: bool
    min_index: int | None  # computed only for order-bound violators
    bound_ok: bool


@dataclass(frozen=True)
class SweepReport:
    p: int
    bound: Fraction
    n_classes: int
    order_violations: tuple
    bound_violations: tuple
    unexpected: tuple  # bound violations not covered by the exempt predicate

    def violation_orders(self):
        return sorted(e.order for e in self.order_violations)


def sweep_bound(M: MaterializedGroup, p: int, bound: Fraction,
                cap: int = MAX_SUBGROUP_ORDER, exempt=None) -> SweepReport:
    """Check |H| <= J*|H_(p)|^3 (and the normal-abelian rescue) over every
    subgroup class representative of M.

    exempt, if given, is a predicate over SweepEntry naming the expected
    exceptions; violations outside it are reported as unexpected.
    """
    bound = Fraction(bound)
    classes = subgroup_classes(M, cap=cap)
    order_viol = []
    bound_viol = []
    unexpected = []
    for sub in classes:
        o = sub.order
        pp = p_part(o, p)
        limit = bound * pp**3
        if o <= limit:
            continue  # trivial subgroup witnesses min_index <= |H| <= limit
        sm = sub_materialized(M, sub)
        ja = j_analysis(sm, p)
        entry = SweepEntry(sub, o, pp, False, ja.min_index, ja.min_index <= limit)
        order_viol.append(entry)
        if not entry.bound_ok:
            bound_viol.append(entry)
            if exempt is not None and not exempt(entry):
                unexpected.append(entry)
    return SweepReport(p, bound, len(classes), tuple(order_viol),
                       tuple(bound_viol), tuple(unexpected))


def quotient(M: MaterializedGroup, sub: Sub) -> MaterializedGroup:
    """Quotient by a normal subgroup, as its regular action on cosets."""
    if not is_normal(M, sub):
        raise ValueError("subgroup is not normal")
    nelems = list(bits(sub.mask))
    coset_id = [-1] * M.n
    n_cosets = 0
    for x in range(M.n):
        if coset_id[x] >= 0:
            continue
        for nn in nelems:
            coset_id[M.mul(nn, x)] = n_cosets
        n_cosets += 1
    reps = [0] * n_cosets
    seen = [False] * n_cosets
    for x in range(M.n):
        c = coset_id[x]
        if not seen[c]:
            seen[c] = True
            reps[c] = x
    qgens = []
    for g in M.gens:
        qgens.append(tuple(coset_id[M.mul(reps[c], g)] for c in range(n_cosets)))
    out = MaterializedGroup(qgens, n_cosets, cap=n_cosets + 1)
    if out.n != n_cosets:
        raise AssertionError("coset action not transitive on cosets")
    return out


def is_isomorphic(M1: MaterializedGroup, M2: MaterializedGroup,
                  cap: int = MAX_SUBGROUP_ORDER) -> bool:
    from .autmorph import find_isomorphism

    if M1.n > cap or M2.n > cap:
        raise CapExceeded(f"isomorphism test cap {cap} exceeded")
    return find_isomorphism(M1, M2) is not None
