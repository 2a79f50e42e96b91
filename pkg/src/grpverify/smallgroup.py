"""Fully materialized groups: element tables, classes, centralizers, Sylow.

A MaterializedGroup stores every element as a permutation tuple, indexed
by breadth-first discovery order from the generators (index 0 is the
identity).  Subgroups and other element sets are integer bitmasks over
element indices.
"""

from __future__ import annotations

from math import gcd

from . import perm as pm

MAX_ORDER = 50000


class CapExceeded(RuntimeError):
    pass


def bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class MaterializedGroup:
    def __init__(self, generators, degree, cap: int = MAX_ORDER, name: str = ""):
        self.degree = degree
        self.name = name
        ident = pm.identity(degree)
        gens = []
        for g in generators:
            g = tuple(g)
            if g != ident and g not in gens:
                gens.append(g)
        self.perms = [ident]
        self.index = {ident: 0}
        queue = [ident]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in gens:
                y = pm.compose(x, g)
                if y not in self.index:
                    if len(self.perms) >= cap:
                        raise CapExceeded(
                            f"materialization cap {cap} exceeded"
                            + (f" for {name}" if name else "")
                        )
                    self.index[y] = len(self.perms)
                    self.perms.append(y)
                    queue.append(y)
        self.n = len(self.perms)
        self.gens = [self.index[g] for g in gens]
        self._inv = [self.index[pm.inverse(p)] for p in self.perms]
        self._orders = None
        self._classes = None
        self._class_of = None
        self._conj_maps = None
        # cache slots filled lazily by the lattice and autmorph modules
        self._aut = None
        self._normals = None
        self._all_subs = None
        self._sub_classes = None

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.index[pm.compose(self.perms[i], self.perms[j])]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, i: int, g: int) -> int:
        """g^-1 * i * g."""
        return self.mul(self.mul(self._inv[g], i), g)

    def commutator(self, i: int, j: int) -> int:
        return self.mul(self.mul(self._inv[i], self._inv[j]), self.mul(i, j))

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self._inv[i], -e)
        r = 0
        while e:
            if e & 1:
                r = self.mul(r, i)
            i = self.mul(i, i)
            e >>= 1
        return r

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [pm.perm_order(p) for p in self.perms]
        return self._orders[i]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- conjugacy machinery ---------------------------------------------------

    def conj_maps(self):
        """Per-generator conjugation tables i -> g^-1 i g (and inverses)."""
        if self._conj_maps is None:
            maps = []
            for g in self.gens:
                for h in (g, self._inv[g]):
                    maps.append([self.conj(i, h) for i in range(self.n)])
            self._conj_maps = maps
        return self._conj_maps

    def conjugacy_classes(self):
        """Partition of indices into conjugacy classes (orbit expansion)."""
        if self._classes is None:
            maps = self.conj_maps()
            class_of = [-1] * self.n
            classes = []
            for i in range(self.n):
                if class_of[i] >= 0:
                    continue
                cid = len(classes)
                orbit = [i]
                class_of[i] = cid
                qi = 0
                while qi < len(orbit):
                    x = orbit[qi]
                    qi += 1
                    for m in maps:
                        y = m[x]
                        if class_of[y] < 0:
                            class_of[y] = cid
                            orbit.append(y)
                classes.append(sorted(orbit))
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    # -- subgroup helpers ------------------------------------------------------

    def close(self, gen_indices) -> int:
        """Bitmask of the subgroup generated by the given element indices."""
        mask = 1
        elems = [0]
        gens = [g for g in gen_indices if g != 0]
        qi = 0
        while qi < len(elems):
            x = elems[qi]
            qi += 1
            for g in gens:
                y = self.mul(x, g)
                if not mask >> y & 1:
                    mask |= 1 << y
                    elems.append(y)
        return mask

    def normal_closure(self, seed) -> tuple[int, list[int]]:
        """Smallest normal subgroup containing the seed elements.

        Returns (mask, generating indices).
        """
        gens = [g for g in seed if g != 0]
        mask = self.close(gens)
        pending = list(gens)
        while pending:
            h = pending.pop()
            for g in self.gens:
                c = self.conj(h, g)
                if not mask >> c & 1:
                    gens.append(c)
                    pending.append(c)
                    mask = self.close(gens)
        return mask, gens

    def centralizer(self, gen_indices) -> int:
        """Mask of elements commuting with every listed element."""
        targets = list(gen_indices)
        mask = 0
        for x in range(self.n):
            if all(self.mul(x, t) == self.mul(t, x) for t in targets):
                mask |= 1 << x
        return mask

    def center(self) -> int:
        return self.centralizer(self.gens)

    def normalizer(self, mask: int, sub_gens) -> int:
        """Mask of elements g with (sub)^g == sub, given generators of sub."""
        out = 0
        gl = list(sub_gens)
        for x in range(self.n):
            if all(mask >> self.conj(h, x) & 1 for h in gl):
                out |= 1 << x
        return out

    def derived_subgroup(self) -> tuple[int, list[int]]:
        comms = set()
        for a in self.gens:
            for b in self.gens:
                comms.add(self.commutator(a, b))
        comms.discard(0)
        return self.normal_closure(sorted(comms))

    def is_abelian_set(self, gen_indices) -> bool:
        gl = list(gen_indices)
        for i, a in enumerate(gl):
            for b in gl[i + 1 :]:
                if self.mul(a, b) != self.mul(b, a):
                    return False
        return True

    def is_abelian(self) -> bool:
        return self.is_abelian_set(self.gens)

    def is_subgroup_mask(self, mask: int) -> bool:
        if not mask & 1:
            return False
        idx = list(bits(mask))
        return all(mask >> self.mul(a, b) & 1 for a in idx for b in idx)

    def is_normal_mask(self, mask: int, sub_gens=None) -> bool:
        gl = list(sub_gens) if sub_gens is not None else list(bits(mask))
        return all(mask >> self.conj(h, g) & 1 for h in gl for g in self.gens)

    def gens_for_mask(self, mask: int) -> list[int]:
        """Small deterministic generating set for a subgroup mask."""
        gens = []
        have = 1
        for i in bits(mask):
            if not have >> i & 1:
                gens.append(i)
                have = self.close(gens)
                if have == mask:
                    break
        return gens

    # -- Sylow -------------------------------------------------------------------

    def sylow_subgroup(self, p: int) -> tuple[int, list[int]]:
        """Deterministic Sylow p-subgroup: grow from a maximal p-element
        by p-elements of the normalizer.  Returns (mask, generators)."""
        target = p_part(self.n, p)
        if target == 1:
            return 1, []
        best = 0
        best_order = 1
        for i in range(1, self.n):
            o = self.element_order(i)
            if o > best_order and p_part(o, p) == o:
                best, best_order = i, o
        gens = [best]
        mask = self.close(gens)
        while mask.bit_count() < target:
            nrm = self.normalizer(mask, gens)
            grown = False
            for y in bits(nrm):
                if mask >> y & 1:
                    continue
                o = self.element_order(y)
                if p_part(o, p) != o:
                    continue
                gens.append(y)
                mask = self.close(gens)
                grown = True
                break
            if not grown:  # cannot happen for p-subgroups below the p-part
                raise AssertionError("Sylow growth stalled")
        return mask, gens

    def __len__(self):
        return self.n

    def __repr__(self):
        label = self.name or "group"
        return f"Materialized({label}, order={self.n})"


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    if n < 1:
        raise ValueError("order must be positive")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def coprime(n: int, p: int) -> bool:
    return gcd(n, p) == 1


def materialize(group: pm.PermGroup, cap: int = MAX_ORDER, name: str = "") -> MaterializedGroup:
    """Exhaustively enumerate a PermGroup (breadth-first closure)."""
    order = group.order()
    if order > cap:
        raise CapExceeded(f"order {order} exceeds materialization cap {cap}")
    m = MaterializedGroup(group.generators, group.degree, cap=cap, name=name)
    if m.n != order:
        raise AssertionError("closure disagrees with stabilizer chain order")
    return m


def materialize_gens(gens, degree, cap: int = MAX_ORDER, name: str = "") -> MaterializedGroup:
    """Materialize directly from generator permutations (no degree cap)."""
    return MaterializedGroup(gens, degree, cap=cap, name=name)
