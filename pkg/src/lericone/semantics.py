"""Sequence-sensitive truth assignments and three-way validity checking.

An assignment maps (sequence, atom) keys to bits, total via a default
bit.  Keying mirrors substitutions: ``raw`` tables distinguish every
sequence, ``faithful`` tables are keyed by :func:`lericone.seq.faithful_key`,
and ``plain`` tables ignore the sequence entirely (classical assignments).

Evaluation splits the conditional on whether the current sequence is
empty: at the empty sequence both sides restart at ``c``, elsewhere the
sides prepend ``l`` / ``r``.  Validity of a sequent means no assignment
(no faithful assignment, in faithful mode) makes every premise true and
the conclusion false.

Three deciders are provided: exhaustive enumeration over the sequent's
finite key domain (``brute_consequence``), classical truth tables
(``classical_valid``), and reduction to the classical check through a
skeleton with countermodel pull-back (``decide``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .formula import And, Atom, Formula, Neg, Or, Sequent
from .seq import faithful_key, validate_seq
from .substitution import skeletonize

__all__ = [
    "Assignment", "Verdict", "CapacityError", "evaluate", "domain_keys",
    "relevant_domain", "brute_consequence", "classical_valid", "decide",
    "bullet", "falsifies",
]


class CapacityError(Exception):
    """Enumeration domain too large; the skeleton method has no such limit."""


@dataclass(frozen=True)
class Assignment:
    """Finite (sequence, atom) -> bit table with a declared default bit."""

    entries: Mapping  # (seq, atom) -> bit; plain keying: atom -> bit
    default: int = 0
    keying: str = "raw"  # "raw" | "faithful" | "plain"

    def __post_init__(self) -> None:
        if self.keying not in ("raw", "faithful", "plain"):
            raise ValueError(f"unknown keying {self.keying!r}")
        if self.default not in (0, 1):
            raise ValueError("default must be a bit")
        if self.keying == "plain":
            table = dict(self.entries)
        else:
            table = {}
            for (seq, atom), bit in self.entries.items():
                validate_seq(seq)
                key = (faithful_key(seq), atom) if self.keying == "faithful" else (seq, atom)
                if table.get(key, bit) != bit:
                    raise ValueError(
                        f"conflicting bits on equivalent keys at {key}")
                table[key] = bit
        object.__setattr__(self, "entries", table)

    @property
    def is_faithful(self) -> bool:
        return self.keying in ("faithful", "plain")

    def lookup(self, seq: str, atom: int) -> int:
        if self.keying == "plain":
            return self.entries.get(atom, self.default)
        if self.keying == "faithful":
            seq = faithful_key(seq)
        return self.entries.get((seq, atom), self.default)


@dataclass(frozen=True)
class Verdict:
    status: str  # "valid" | "invalid"
    countermodel: Optional[Assignment]
    method: str  # "brute" | "skeleton" | "tableau" | "classical"

    @property
    def valid(self) -> bool:
        return self.status == "valid"


def evaluate(f: Assignment, seq: str, a: Formula) -> int:
    """Bit value of ``a`` at sequence ``seq`` under assignment ``f``."""
    if isinstance(a, Atom):
        return f.lookup(seq, a.index)
    if isinstance(a, Neg):
        return 1 - evaluate(f, "n" + seq, a.child)
    if isinstance(a, And):
        return min(evaluate(f, seq, a.left), evaluate(f, seq, a.right))
    if isinstance(a, Or):
        return max(evaluate(f, seq, a.left), evaluate(f, seq, a.right))
    if seq == "":
        return max(1 - evaluate(f, "c", a.left), evaluate(f, "c", a.right))
    return max(1 - evaluate(f, "l" + seq, a.left),
               evaluate(f, "r" + seq, a.right))


def domain_keys(a: Formula, seq: str = "") -> set:
    """Every (sequence, atom) key consulted when evaluating ``a`` from ``seq``."""
    if isinstance(a, Atom):
        return {(seq, a.index)}
    if isinstance(a, Neg):
        return domain_keys(a.child, "n" + seq)
    if isinstance(a, (And, Or)):
        return domain_keys(a.left, seq) | domain_keys(a.right, seq)
    if seq == "":
        return domain_keys(a.left, "c") | domain_keys(a.right, "c")
    return domain_keys(a.left, "l" + seq) | domain_keys(a.right, "r" + seq)


def relevant_domain(s: Sequent) -> set:
    """Keys consulted when evaluating each premise and the conclusion from the root."""
    keys: set = set()
    for f in s.formulas:
        keys |= domain_keys(f)
    return keys


def falsifies(f: Assignment, s: Sequent) -> bool:
    """True when every premise evaluates to 1 and the conclusion to 0."""
    return (all(evaluate(f, "", p) == 1 for p in s.premises)
            and evaluate(f, "", s.conclusion) == 0)


def _column_masks(width: int) -> tuple:
    """Truth columns for width keys over all 2^width rows, packed into
    integers: bit r of column i is key i's value in row r, with the first
    key as the most significant bit of the row index."""
    total = 1 << width
    full = (1 << total) - 1
    columns = []
    for i in range(width):
        step = 1 << (width - 1 - i)
        block = ((1 << step) - 1) << step
        length = 2 * step
        while length < total:  # double the pattern up to the full row count
            block |= block << length
            length *= 2
        columns.append(block)
    return columns, full


def _mask_eval(f: Formula, seq: str, column_of, full: int) -> int:
    """Evaluate over every enumerated row at once; ``column_of`` maps a
    consulted (sequence, atom) key to its truth column."""
    if isinstance(f, Atom):
        return column_of(seq, f.index)
    if isinstance(f, Neg):
        return full ^ _mask_eval(f.child, "n" + seq, column_of, full)
    if isinstance(f, And):
        return (_mask_eval(f.left, seq, column_of, full)
                & _mask_eval(f.right, seq, column_of, full))
    if isinstance(f, Or):
        return (_mask_eval(f.left, seq, column_of, full)
                | _mask_eval(f.right, seq, column_of, full))
    if seq == "":
        return ((full ^ _mask_eval(f.left, "c", column_of, full))
                | _mask_eval(f.right, "c", column_of, full))
    return ((full ^ _mask_eval(f.left, "l" + seq, column_of, full))
            | _mask_eval(f.right, "r" + seq, column_of, full))


def _first_falsifier(s: Sequent, keys: list, keying: str,
                     cap: int) -> Optional[Assignment]:
    """Lexicographically first falsifier over bit vectors on sorted keys.

    The first key is the most significant bit of the row index and rows
    run in binary counting order, so the reported countermodel is
    schedule-independent.  All rows are evaluated at once on packed
    truth columns.
    """
    if len(keys) > cap:
        raise CapacityError(
            f"{len(keys)} keys exceed the enumeration cap of {cap}; "
            "use the skeleton method")
    width = len(keys)
    columns, full = _column_masks(width)
    table = {key: columns[i] for i, key in enumerate(keys)}
    normalize = faithful_key if keying == "faithful" else (lambda seq: seq)

    def column_of(seq: str, atom: int) -> int:
        return table[(normalize(seq), atom)]

    falsified = full
    for premise in s.premises:
        falsified &= _mask_eval(premise, "", column_of, full)
    falsified &= full ^ _mask_eval(s.conclusion, "", column_of, full)
    if falsified == 0:
        return None
    row = (falsified & -falsified).bit_length() - 1
    entries = {keys[i]: (row >> (width - 1 - i)) & 1 for i in range(width)}
    return Assignment(entries, default=0, keying=keying)


def brute_consequence(s: Sequent, mode: str = "plain", cap: int = 24) -> Verdict:
    """Enumerate all assignments over the sequent's key domain.

    Faithful mode quotients the domain by the faithful key, which is
    exactly enumerating all faithful assignments on the relevant keys.
    """
    if mode not in ("plain", "faithful"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "faithful":
        keys = sorted({(faithful_key(seq), atom)
                       for seq, atom in relevant_domain(s)})
        counter = _first_falsifier(s, keys, "faithful", cap)
    else:
        keys = sorted(relevant_domain(s))
        counter = _first_falsifier(s, keys, "raw", cap)
    if counter is None:
        return Verdict("valid", None, "brute")
    return Verdict("invalid", counter, "brute")


def classical_valid(s: Sequent, cap: int = 24) -> Verdict:
    """Classical truth-table check; the countermodel ignores sequences."""
    atoms = sorted({atom for f in s.formulas for atom in _atom_indices(f)})
    if len(atoms) > cap:
        raise CapacityError(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    width = len(atoms)
    columns, full = _column_masks(width)
    table = {atom: columns[i] for i, atom in enumerate(atoms)}

    def column_of(_seq: str, atom: int) -> int:
        return table[atom]

    falsified = full
    for premise in s.premises:
        falsified &= _mask_eval(premise, "", column_of, full)
    falsified &= full ^ _mask_eval(s.conclusion, "", column_of, full)
    if falsified == 0:
        return Verdict("valid", None, "classical")
    row = (falsified & -falsified).bit_length() - 1
    entries = {atoms[i]: (row >> (width - 1 - i)) & 1 for i in range(width)}
    return Verdict("invalid", Assignment(entries, default=1, keying="plain"),
                   "classical")


def _atom_indices(f: Formula):
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node.index
        elif isinstance(node, Neg):
            stack.append(node.child)
        else:
            stack.append(node.left)
            stack.append(node.right)


def decide(s: Sequent, mode: str = "plain", use_godel: bool = False,
           cap: int = 24) -> Verdict:
    """Skeletonize, decide classically, and pull any countermodel back.

    The skeleton's atoms are in bijection with the sequent's (sequence,
    atom) keys, so the classical verdict transfers; a classical
    countermodel induces a sequence-keyed assignment that is re-checked
    against the original sequent before being returned.
    """
    skeleton, renaming = skeletonize(s, mode=mode, use_godel=use_godel)
    classical = classical_valid(skeleton, cap=cap)
    if classical.valid:
        return Verdict("valid", None, "skeleton")
    pulled = Assignment(
        {key: classical.countermodel.lookup("", fresh)
         for key, fresh in renaming.forward.items()},
        default=1,
        keying="faithful" if mode == "faithful" else "raw")
    if not falsifies(pulled, s):
        raise AssertionError(
            "pulled-back countermodel failed to falsify the sequent; "
            "this indicates a defect in the skeleton reduction")
    return Verdict("invalid", pulled, "skeleton")


def bullet(f: Assignment, s, probes=()) -> Assignment:
    """Compose an assignment with a substitution: value at (x, p) is
    ``evaluate(f, x, s(x, p))``.

    The result is exact on the supplied probe keys, on the assignment's
    own keys, and anywhere both tables default; callers supply the keys
    they intend to consult.
    """
    keys = set(probes)
    if f.keying != "plain":
        keys |= set(f.entries)
    entries = {}
    for seq, atom in keys:
        entries[(seq, atom)] = evaluate(f, seq, s.lookup(seq, atom))
    keying = "faithful" if (f.is_faithful and s.is_faithful) else "raw"
    return Assignment(entries, default=f.default, keying=keying)
