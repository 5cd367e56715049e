"""Signed permutations of cube coordinates and axis maps of cubical maps.

Conventions used everywhere in the package:

* A ``Sym`` over k axes represents the cube isometry
  ``g(x)[j] = 1 - x[perm[j]] if flip[j] else x[perm[j]]`` on [0,1]^k.
  Output coordinate j reads input coordinate perm[j].

* A face attachment of a d-cube C at slot (axis i, side s) is a pair
  (face id, Sym over d-1 axes) where the Sym maps the *face's* intrinsic
  coordinates to the *slot* coordinates (C's axes other than i, in
  increasing order).  A plain face id means the identity Sym.

* An ``AxisMap`` describes how one cube of a cubical map's domain sits over
  its image cube: domain axis a either collapses (target[a] is None) or maps
  onto codomain axis target[a], reversed when flip[a] is set.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Sym:
    perm: tuple
    flip: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation: %r" % (self.perm,))
        if len(self.flip) != len(self.perm):
            raise ValueError("flip length mismatch")

    @staticmethod
    def identity(k):
        return Sym(tuple(range(k)), (False,) * k)

    @property
    def arity(self):
        return len(self.perm)

    def is_identity(self):
        return self.perm == tuple(range(len(self.perm))) and not any(self.flip)

    def apply_bits(self, bits):
        """Apply to a corner bit-vector (tuple of 0/1)."""
        return tuple(bits[self.perm[j]] ^ self.flip[j] for j in range(len(self.perm)))

    def compose(self, other):
        """self after other: returns Sym of g_self . g_other."""
        perm = tuple(other.perm[self.perm[j]] for j in range(len(self.perm)))
        flip = tuple(self.flip[j] ^ other.flip[self.perm[j]] for j in range(len(self.perm)))
        return Sym(perm, flip)

    def inverse(self):
        k = len(self.perm)
        perm = [0] * k
        flip = [False] * k
        for j in range(k):
            perm[self.perm[j]] = j
            flip[self.perm[j]] = self.flip[j]
        return Sym(tuple(perm), tuple(flip))


def bits_of(index, dim):
    """Corner index -> bit tuple, axis 0 least significant."""
    return tuple((index >> i) & 1 for i in range(dim))


def index_of(bits):
    out = 0
    for i, b in enumerate(bits):
        out |= (b & 1) << i
    return out


def insert_bit(bits, axis, value):
    return bits[:axis] + (value,) + bits[axis:]


def drop_bit(bits, axis):
    return bits[:axis] + bits[axis + 1:]


@dataclass(frozen=True)
class AxisMap:
    target: tuple   # per domain axis: codomain axis or None (collapsed)
    flip: tuple     # per domain axis; collapsed axes must carry False

    def __post_init__(self):
        live = [t for t in self.target if t is not None]
        if sorted(live) != list(range(len(live))):
            raise ValueError("live targets must biject onto codomain axes: %r" % (self.target,))
        if len(self.flip) != len(self.target):
            raise ValueError("flip length mismatch")
        for t, f in zip(self.target, self.flip):
            if t is None and f:
                raise ValueError("collapsed axis cannot flip")

    @staticmethod
    def identity(k):
        return AxisMap(tuple(range(k)), (False,) * k)

    @property
    def domain_dim(self):
        return len(self.target)

    @property
    def codomain_dim(self):
        return sum(1 for t in self.target if t is not None)

    @property
    def collapsed_axes(self):
        return tuple(a for a, t in enumerate(self.target) if t is None)

    def is_identity(self):
        return self.target == tuple(range(len(self.target))) and not any(self.flip)

    def apply_bits(self, bits):
        out = [0] * self.codomain_dim
        for a, t in enumerate(self.target):
            if t is not None:
                out[t] = bits[a] ^ self.flip[a]
        return tuple(out)

    def compose(self, inner):
        """self . inner, where inner maps into self's domain."""
        target = []
        flip = []
        for a in range(inner.domain_dim):
            t = inner.target[a]
            if t is None:
                target.append(None)
                flip.append(False)
            else:
                tt = self.target[t]
                target.append(tt)
                flip.append(False if tt is None else inner.flip[a] ^ self.flip[t])
        return AxisMap(tuple(target), tuple(flip))

    def precompose_sym(self, sym):
        """self . g_sym, with sym a Sym on the domain cube's axes.

        sym maps new coordinates to old ones the way attachments do, so the
        result describes the same geometric map in the new coordinates.
        """
        inv = sym.inverse()
        # new axis a corresponds to old axis: sym sends new->old as outputs;
        # we need, per new axis a, which old axis reads it: old j with perm[j]=a.
        target = []
        flip = []
        for a in range(sym.arity):
            j = inv.perm[a]     # old axis j = position where perm[j] == a
            f = inv.flip[a]
            t = self.target[j]
            target.append(t)
            flip.append(False if t is None else self.flip[j] ^ f)
        return AxisMap(tuple(target), tuple(flip))
