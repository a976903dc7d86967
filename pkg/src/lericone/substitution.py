"""Sequence-indexed substitutions: application, algebra, and skeletons.

A substitution assigns a formula to every (sequence, atom) pair; only
finitely many images differ from the atom itself.  Three keyings exist:

* ``raw`` - keys looked up verbatim;
* ``plain`` - the image depends on the atom only (the classical case);
* ``faithful`` - keys are normalised by :func:`lericone.seq.faithful_key`,
  so the table cannot distinguish sequences that differ by double-negation
  cancellation (or by the root-conditional collapse such a cancellation
  can expose).  Plain tables are trivially faithful.

``apply_lericone`` accepts anything with a ``lookup(seq, atom)`` method,
which admits the two lazily-evaluated substitutions here: ``star``
(composition, whose support need not be finite when a plain factor is
involved) and ``godel_substitution`` (total injective atom coding).

``t_of`` (peel one root conditional) and ``shift`` (graft a c-free
context above the root) stay finite tables; both are identity outside
keys ending in c, where their behaviour is unconstrained.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formula import And, Atom, Formula, Imp, Neg, Or, Sequent
from .seq import faithful_key, reduct, validate_seq

__all__ = [
    "LericoneSubstitution", "RenamingTable", "apply_plain", "apply_lericone",
    "star", "t_of", "shift", "godel", "godel_substitution", "inverse_rename",
    "skeletonize", "identity_substitution",
]


@dataclass(frozen=True)
class LericoneSubstitution:
    """Finite (sequence, atom) -> formula table with identity default."""

    entries: Mapping  # (seq, atom) -> Formula; plain keying: atom -> Formula
    keying: str = "raw"  # "raw" | "faithful" | "plain"

    def __post_init__(self) -> None:
        if self.keying not in ("raw", "faithful", "plain"):
            raise ValueError(f"unknown keying {self.keying!r}")
        if self.keying == "plain":
            table = dict(self.entries)
        else:
            table = {}
            for (seq, atom), image in self.entries.items():
                validate_seq(seq)
                key = (faithful_key(seq), atom) if self.keying == "faithful" else (seq, atom)
                if key in table and table[key] != image:
                    raise ValueError(
                        f"conflicting images on equivalent keys at {key}: "
                        "table is not faithful")
                table[key] = image
        object.__setattr__(self, "entries", table)

    @classmethod
    def plain(cls, mapping: Mapping) -> "LericoneSubstitution":
        """Sequence-independent substitution from an atom -> formula map."""
        return cls(dict(mapping), keying="plain")

    @property
    def is_plain(self) -> bool:
        return self.keying == "plain"

    @property
    def is_faithful(self) -> bool:
        return self.keying in ("faithful", "plain")

    def lookup(self, seq: str, atom: int) -> Formula:
        if self.keying == "plain":
            return self.entries.get(atom, Atom(atom))
        if self.keying == "faithful":
            seq = faithful_key(seq)
        return self.entries.get((seq, atom), Atom(atom))


def identity_substitution() -> LericoneSubstitution:
    return LericoneSubstitution.plain({})


def apply_plain(table: Mapping, f: Formula) -> Formula:
    """Homomorphic image under an atom -> formula map."""
    if isinstance(f, Atom):
        return table.get(f.index, f)
    if isinstance(f, Neg):
        return Neg(apply_plain(table, f.child))
    return type(f)(apply_plain(table, f.left), apply_plain(table, f.right))


def apply_lericone(s, seq: str, f: Formula) -> Formula:
    """Image of ``f`` at sequence ``seq``.

    Conjunction and disjunction pass the sequence down, negation prepends
    n, a conditional at the empty sequence sends both sides to c and
    elsewhere prepends l / r.
    """
    if isinstance(f, Atom):
        return s.lookup(seq, f.index)
    if isinstance(f, Neg):
        return Neg(apply_lericone(s, "n" + seq, f.child))
    if isinstance(f, And):
        return And(apply_lericone(s, seq, f.left), apply_lericone(s, seq, f.right))
    if isinstance(f, Or):
        return Or(apply_lericone(s, seq, f.left), apply_lericone(s, seq, f.right))
    if seq == "":
        return Imp(apply_lericone(s, "c", f.left), apply_lericone(s, "c", f.right))
    return Imp(apply_lericone(s, "l" + seq, f.left),
               apply_lericone(s, "r" + seq, f.right))


@dataclass(frozen=True)
class _Composite:
    """Lazy composition: lookup(x, p) = outer(x, inner(x, p))."""

    outer: object
    inner: object

    @property
    def is_plain(self) -> bool:
        return self.outer.is_plain and self.inner.is_plain

    @property
    def is_faithful(self) -> bool:
        return self.outer.is_faithful and self.inner.is_faithful

    def lookup(self, seq: str, atom: int) -> Formula:
        return apply_lericone(self.outer, seq, self.inner.lookup(seq, atom))


def star(s, t) -> _Composite:
    """Composition satisfying (s * t)(x, A) = s(x, t(x, A)) on all formulas."""
    return _Composite(s, t)


def t_of(s: LericoneSubstitution) -> LericoneSubstitution:
    """Peel one root conditional: value at (x + "c") is s at c_transform(x).

    Identity on keys not ending in c.
    """
    if s.is_plain:
        return s
    table = {}
    for (seq, atom), image in s.entries.items():
        if seq.endswith("c"):
            prefix = seq[:-1]
            table[(prefix + "lc", atom)] = image
            table[(prefix + "rc", atom)] = image
        elif not seq or seq[-1] == "n":
            table[(seq + "c", atom)] = image
        # keys ending in l or r are never a c_transform value: dropped
    return LericoneSubstitution(table, keying=s.keying)


def shift(s: LericoneSubstitution, context: str) -> LericoneSubstitution:
    """Graft a c-free context: value at (x + "c") is s at (x + context + "c").

    Identity on keys not ending in c.
    """
    validate_seq(context)
    if context.endswith("c"):
        raise ValueError(f"shift context must be c-free: {context!r}")
    if s.is_plain:
        return s
    table = {}
    if s.keying == "raw":
        suffix = context + "c"
        for (seq, atom), image in s.entries.items():
            if seq.endswith(suffix):
                table[(seq[:-len(suffix)] + "c", atom)] = image
    else:
        # invert x -> reduct(x + context) one appended symbol at a time
        for (seq, atom), image in s.entries.items():
            if not seq.endswith("c"):
                continue
            word = seq[:-1]
            ok = True
            for ch in reversed(context):
                if ch == "n":
                    word = reduct(word + "n")  # appending n is an involution
                elif word.endswith(ch):
                    word = word[:-1]
                else:
                    ok = False
                    break
            if ok:
                table[(word + "c", atom)] = image
    return LericoneSubstitution(table, keying=s.keying)


# -- atom coding and skeletons ------------------------------------------------

_SYMBOL_CODE = {"l": 1, "r": 2, "c": 3, "n": 4}


def _primes(count: int) -> list:
    out = [2]
    candidate = 3
    while len(out) < count:
        if all(candidate % p for p in out):
            out.append(candidate)
        candidate += 2
    return out


def godel(seq: str, atom: int) -> int:
    """Prime-power coding of a (sequence, atom) key into a fresh atom index.

    The i-th symbol (1-based) contributes the (i+1)-th prime raised to the
    symbol's code (l=1, r=2, c=3, n=4); the atom contributes a factor 2^i.
    Injective, arbitrary precision.
    """
    validate_seq(seq)
    primes = _primes(len(seq) + 1)
    code = 1
    for i, ch in enumerate(seq):
        code *= primes[i + 1] ** _SYMBOL_CODE[ch]
    return (2 ** atom) * code


class _GodelSubstitution:
    """Total atomic injective substitution backed by the prime coding."""

    is_plain = False
    is_faithful = False

    def lookup(self, seq: str, atom: int) -> Formula:
        return Atom(godel(seq, atom))


def godel_substitution() -> _GodelSubstitution:
    return _GodelSubstitution()


@dataclass(frozen=True)
class RenamingTable:
    """Injective map from (sequence, atom) keys to fresh atom indices."""

    forward: Mapping  # (seq, atom) -> int
    mode: str = "plain"  # "plain" | "faithful": faithful keys are normalised

    def __post_init__(self) -> None:
        images = list(self.forward.values())
        if len(images) != len(set(images)):
            raise ValueError("renaming table is not injective")

    def as_substitution(self) -> LericoneSubstitution:
        keying = "faithful" if self.mode == "faithful" else "raw"
        return LericoneSubstitution(
            {key: Atom(idx) for key, idx in self.forward.items()}, keying=keying)

    def key_of(self, seq: str) -> str:
        return faithful_key(seq) if self.mode == "faithful" else seq


def inverse_rename(table: RenamingTable) -> dict:
    """Plain substitution sending each fresh atom back to its source atom."""
    return {fresh: Atom(atom) for (_, atom), fresh in table.forward.items()}


def skeletonize(s: Sequent, mode: str = "plain",
                use_godel: bool = False) -> tuple:
    """Replace atom occurrences by fresh atoms, injectively per key.

    Keys are (sequence, atom) pairs with the sequence taken from each
    formula's annotation evaluated from the root; faithful mode normalises
    the sequence first.  Fresh indices follow first encounter in
    left-to-right traversal of the premises then the conclusion, or the
    godel coding when ``use_godel`` is set.
    """
    if mode not in ("plain", "faithful"):
        raise ValueError(f"unknown mode {mode!r}")
    forward: dict = {}
    counter = 0

    def fresh_for(seq: str, atom: int) -> int:
        nonlocal counter
        key_seq = faithful_key(seq) if mode == "faithful" else seq
        key = (key_seq, atom)
        if key not in forward:
            if use_godel:
                forward[key] = godel(key_seq, atom)
            else:
                counter += 1
                forward[key] = counter
        return forward[key]

    def walk(node: Formula, seq: str) -> Formula:
        if isinstance(node, Atom):
            return Atom(fresh_for(seq, node.index))
        if isinstance(node, Neg):
            return Neg(walk(node.child, "n" + seq))
        if isinstance(node, (And, Or)):
            return type(node)(walk(node.left, seq), walk(node.right, seq))
        if seq == "":
            return Imp(walk(node.left, "c"), walk(node.right, "c"))
        return Imp(walk(node.left, "l" + seq), walk(node.right, "r" + seq))

    premises = tuple(walk(p, "") for p in s.premises)
    conclusion = walk(s.conclusion, "")
    return Sequent(premises, conclusion), RenamingTable(forward, mode=mode)
