"""Path sequences over {l, r, n, c} and their calculus.

A sequence records, innermost symbol first, the chain of negations and
conditional branches above a subformula occurrence: ``n`` for the scope of a
negation, ``l``/``r`` for the antecedent/consequent of a nested conditional,
and a single terminal ``c`` marking immediate scope of a root-level
conditional.  Sequences are plain strings; ``""`` is the empty sequence.

Besides the annotation map itself the module provides:

* ``c_transform`` - rewrites an outermost ``l``/``r`` step into ``c``,
  which is how a nested conditional's annotation looks once that
  conditional is promoted to the root;
* ``reduct`` / ``equivalent`` - the normal form and equivalence under
  cancellation of adjacent double negations;
* ``faithful_key`` - the coarser normal form used to key every
  faithful-mode table: reduct followed by ``c_transform``.  Two sequences
  share a key exactly when no faithful substitution or assignment can
  tell them apart when evaluating from the root (cancelling an ``nn``
  pair can expose an ``l``/``r`` as the outermost step, where evaluation
  restarting at the empty sequence would have placed a ``c``);
* ``polarity`` - the sign of a c-free sequence.
"""

from __future__ import annotations

from .formula import And, Formula, Imp, Neg, Or, OccurrencePath, PathError

__all__ = [
    "SYMBOLS", "validate_seq", "is_lrn", "lrcn", "annotate",
    "c_transform", "reduct", "equivalent", "faithful_key", "polarity",
]

SYMBOLS = "lrnc"


def validate_seq(seq: str) -> str:
    """Check the alphabet and that c appears at most once, terminally."""
    for ch in seq:
        if ch not in SYMBOLS:
            raise ValueError(f"bad symbol {ch!r} in sequence {seq!r}")
    if "c" in seq[:-1]:
        raise ValueError(f"c must be the final symbol: {seq!r}")
    return seq


def is_lrn(seq: str) -> bool:
    """True when the sequence is c-free."""
    return not seq.endswith("c")


def lrcn(root: Formula, path: OccurrencePath) -> str:
    """Sequence of the occurrence addressed by ``path`` in ``root``.

    Descending from the root at the empty sequence: conjunction and
    disjunction pass the sequence through, negation prepends ``n``, a
    conditional at the empty sequence sends both children to ``c`` and at
    any other sequence prepends ``l`` or ``r``.
    """
    node = root
    seq = ""
    for depth, selector in enumerate(path):
        if isinstance(node, Neg):
            if selector != "only":
                raise PathError(f"selector {selector!r} at depth {depth} "
                                "does not fit a Neg node", selector, depth)
            seq = "n" + seq
            node = node.child
            continue
        if not isinstance(node, (And, Or, Imp)):
            raise PathError(f"selector {selector!r} at depth {depth} "
                            "descends past an atom", selector, depth)
        if selector not in ("left", "right"):
            raise PathError(f"selector {selector!r} at depth {depth} "
                            "does not fit a binary node", selector, depth)
        if isinstance(node, Imp):
            if seq == "":
                seq = "c"
            else:
                seq = ("l" if selector == "left" else "r") + seq
        node = node.left if selector == "left" else node.right
    return seq


def annotate(root: Formula) -> dict:
    """Total map from every path of ``root`` to its sequence."""
    out: dict = {}
    stack = [((), root, "")]
    while stack:
        path, node, seq = stack.pop()
        out[path] = seq
        if isinstance(node, Neg):
            stack.append((path + ("only",), node.child, "n" + seq))
        elif isinstance(node, Imp):
            if seq == "":
                stack.append((path + ("left",), node.left, "c"))
                stack.append((path + ("right",), node.right, "c"))
            else:
                stack.append((path + ("left",), node.left, "l" + seq))
                stack.append((path + ("right",), node.right, "r" + seq))
        elif isinstance(node, (And, Or)):
            stack.append((path + ("left",), node.left, seq))
            stack.append((path + ("right",), node.right, seq))
    return out


def c_transform(seq: str) -> str:
    """Replace a final l or r with c; other sequences pass through.

    Only defined on c-free input.
    """
    if seq.endswith("c"):
        raise ValueError(f"c_transform is defined on c-free sequences: {seq!r}")
    if seq and seq[-1] in "lr":
        return seq[:-1] + "c"
    return seq


def reduct(seq: str) -> str:
    """The unique nn-free word reached by cancelling adjacent n pairs.

    Single stack pass; cancellation is confluent, so the order in which
    pairs are removed does not matter.
    """
    out: list = []
    for ch in seq:
        if ch == "n" and out and out[-1] == "n":
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def equivalent(x: str, y: str) -> bool:
    """True when the two sequences have the same reduct."""
    return reduct(x) == reduct(y)


def faithful_key(seq: str) -> str:
    """Canonical key for faithful-mode tables: reduct, then c_transform.

    Keys ending in c keep their reduct prefix; c-free keys whose reduct
    ends in l or r collapse onto the corresponding c key (evaluation can
    only reach such a sequence through a cancelled double negation over a
    root conditional, where the c key is consulted instead).
    """
    red = reduct(seq)
    if red.endswith("c") or not red or red[-1] == "n":
        return red
    return red[:-1] + "c"


def polarity(seq: str) -> str:
    """``"positive"`` or ``"negative"``; n and l flip, r preserves.

    Flips commute, so folding in either direction gives the same parity.
    Only defined on c-free input.
    """
    if seq.endswith("c"):
        raise ValueError(f"polarity is defined on c-free sequences: {seq!r}")
    flips = sum(1 for ch in seq if ch in "nl")
    return "positive" if flips % 2 == 0 else "negative"
