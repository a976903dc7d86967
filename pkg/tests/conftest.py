"""Shared test helpers: independent oracles and tiny builders.

The oracles here re-derive expected values by routes the implementation
does not take (exhaustive rewriting, direct fold definitions), so tests
stay meaningful when the implementation changes.
"""

from itertools import product

from lericone import Atom, And, Imp, Neg, Or, Sequent, parse


def deletion_normal_forms(word: str) -> set:
    """All nn-free words reachable by deleting adjacent n-pairs in any order."""
    spots = [i for i in range(len(word) - 1) if word[i] == word[i + 1] == "n"]
    if not spots:
        return {word}
    forms = set()
    for i in spots:
        forms |= deletion_normal_forms(word[:i] + word[i + 2:])
    return forms


def words_up_to(max_len: int, with_c: bool = True):
    """Every sequence over {l, r, n} up to the length, plus c-suffixed twins."""
    for length in range(max_len + 1):
        for combo in product("lrn", repeat=length):
            word = "".join(combo)
            yield word
            if with_c:
                yield word + "c"


def fold_polarity(word: str, reverse: bool = False) -> str:
    """Direct fold over the word; n and l flip, r preserves."""
    sign = 1
    for ch in (reversed(word) if reverse else word):
        if ch in "nl":
            sign = -sign
    return "positive" if sign == 1 else "negative"


def seq_of(text: str) -> Sequent:
    from lericone import parse_sequent
    return parse_sequent(text)


p1, p2, p3, p4 = Atom(1), Atom(2), Atom(3), Atom(4)


def F(text: str):
    return parse(text)
