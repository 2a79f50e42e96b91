"""Automorphism groups, characteristic tests, and the Chermak-Delgado subgroup.

Automorphisms are found by backtracking over images of a fixed generating
sequence, pruning by element order and conjugacy-class size; every map
returned has been verified multiplicative on the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .smallgroup import CapExceeded, MaterializedGroup, bits, coprime, materialize_gens

MAX_AUT_ORDER = 1000


def generating_sequence(M: MaterializedGroup) -> list[int]:
    """Greedy small generating sequence, elements of large order first."""
    order = [1] + [M.element_order(i) for i in range(1, M.n)]
    cands = sorted(range(1, M.n), key=lambda i: (-order[i], i))
    gens = []
    mask = 1
    for c in cands:
        if mask >> c & 1:
            continue
        gens.append(c)
        mask = M.close(gens)
        if mask == M.full_mask:
            break
    return gens


def _invariant_table(M: MaterializedGroup):
    """(element order, conjugacy class size) per element."""
    classes = M.conjugacy_classes()
    sizes = [0] * M.n
    for cls in classes:
        for x in cls:
            sizes[x] = len(cls)
    return [(M.element_order(i), sizes[i]) for i in range(M.n)]


def _extend_map(M1, M2, gen_pairs, subgroup_size):
    """Grow the hom determined by generator images over <gens>.

    Returns the image list indexed by M1-element (-1 outside the span),
    or None on any multiplicativity or injectivity conflict.
    """
    img = [-1] * M1.n
    img[0] = 0
    used = 1
    queue = [0]
    qi = 0
    reached = 1
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        ix = img[x]
        for g, ig in gen_pairs:
            y = M1.mul(x, g)
            iy = M2.mul(ix, ig)
            cur = img[y]
            if cur == -1:
                if used >> iy & 1:
                    return None
                img[y] = iy
                used |= 1 << iy
                queue.append(y)
                reached += 1
            elif cur != iy:
                return None
    if reached != subgroup_size:
        raise AssertionError("generator span mismatch")
    return img


def _search_isomorphisms(M1, M2, find_all):
    if M1.n != M2.n:
        return []
    inv1 = _invariant_table(M1)
    inv2 = _invariant_table(M2)
    if sorted(inv1) != sorted(inv2):
        return []
    by_key = {}
    for i, key in enumerate(inv2):
        by_key.setdefault(key, []).append(i)
    gens = generating_sequence(M1)
    if not gens:  # trivial group
        return [[0]]
    spans = []
    mask = 1
    for i in range(len(gens)):
        mask = M1.close(gens[: i + 1])
        spans.append(mask.bit_count())
    results = []

    def dfs(level, pairs):
        for cand in by_key.get(inv1[gens[level]], ()):
            attempt = pairs + [(gens[level], cand)]
            img = _extend_map(M1, M2, attempt, spans[level])
            if img is None:
                continue
            if level + 1 == len(gens):
                results.append(img)
                if not find_all:
                    return True
            elif dfs(level + 1, attempt):
                return True
        return False

    dfs(0, [])
    return results


def find_isomorphism(M1: MaterializedGroup, M2: MaterializedGroup):
    """An isomorphism M1 -> M2 as an image list, or None."""
    found = _search_isomorphisms(M1, M2, find_all=False)
    return found[0] if found else None


@dataclass
class AutGroup:
    base: MaterializedGroup
    maps: list  # every automorphism, as a tuple permuting element indices
    inner_count: int

    @property
    def order(self) -> int:
        return len(self.maps)

    @property
    def out_order(self) -> int:
        return self.order // self.inner_count

    def preserving(self, mask: int) -> list:
        """The automorphisms mapping the given element set onto itself."""
        out = []
        for a in self.maps:
            img = 0
            for i in bits(mask):
                img |= 1 << a[i]
            if img == mask:
                out.append(a)
        return out

    def as_materialized(self) -> MaterializedGroup:
        """Aut(G) as a concrete group acting on the |G| element indices."""
        # a greedy generating subset keeps the closure and all later
        # conjugacy machinery linear in the group order
        gens = []
        closed = {tuple(range(self.base.n))}
        for a in self.maps:
            if a in closed:
                continue
            gens.append(a)
            queue = list(closed)
            qi = 0
            while qi < len(queue):
                x = queue[qi]
                qi += 1
                for g in gens:
                    y = tuple(map(x.__getitem__, g))
                    if y not in closed:
                        closed.add(y)
                        queue.append(y)
            if len(closed) == len(self.maps):
                break
        out = materialize_gens(gens, self.base.n, cap=len(self.maps) + 1)
        if out.n != len(self.maps):
            raise AssertionError("automorphism closure mismatch")
        return out


def automorphism_group(M: MaterializedGroup, cap: int = MAX_AUT_ORDER) -> AutGroup:
    if M.n > cap:
        raise CapExceeded(f"order {M.n} exceeds automorphism cap {cap}")
    if M._aut is not None:
        return M._aut
    maps = [tuple(a) for a in _search_isomorphisms(M, M, find_all=True)]
    maps.sort()
    center = M.center()
    aut = AutGroup(M, maps, M.n // center.bit_count())
    if aut.order % aut.inner_count:
        raise AssertionError("inner automorphisms do not divide Aut order")
    M._aut = aut
    return aut


def is_characteristic(M: MaterializedGroup, mask: int, cap: int = MAX_AUT_ORDER) -> bool:
    """True iff every automorphism of M maps the subgroup onto itself."""
    aut = automorphism_group(M, cap=cap)
    for a in aut.maps:
        img = 0
        for i in bits(mask):
            img |= 1 << a[i]
        if img != mask:
            return False
    return True


def chermak_delgado(M: MaterializedGroup, sub_cap: int = 2000) -> int:
    """Minimal member of the maximal Chermak-Delgado-measure family.

    Measure of H is |H| * |C_G(H)|; the subgroups of maximal measure are
    closed under intersection and their intersection is abelian,
    characteristic, and contains the center.
    """
    from .lattice import all_subgroups

    best_measure = 0
    family = []
    for sub in all_subgroups(M, cap=sub_cap):
        cent = M.centralizer(sub.gens or [0])
        measure = sub.order * cent.bit_count()
        if measure > best_measure:
            best_measure = measure
            family = [sub.mask]
        elif measure == best_measure:
            family.append(sub.mask)
    cd = M.full_mask
    for mask in family:
        cd &= mask
    return cd


def coprime_part(M: MaterializedGroup, mask: int, p: int) -> int:
    """Elements of an abelian subgroup whose order is coprime to p."""
    out = 0
    for i in bits(mask):
        if coprime(M.element_order(i), p):
            out |= 1 << i
    return out
