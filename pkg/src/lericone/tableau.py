"""Analytic tableaux for sequence-sensitive consequence, plain and faithful.

A tableau works on signed triples (sequence, sign, formula).  The ten
expansion rules mirror the evaluation clauses: lattice connectives keep
the sequence, negation prepends n, and the conditional restarts at c
from the empty sequence or prepends l / r elsewhere.  Every rule output
is a strictly smaller formula, so saturation terminates.

Closure in plain mode needs two triples with the same sequence, opposite
signs, and the same formula on one branch.  Faithful mode closes when the
sequences agree up to the faithful key; the recorded witness keeps both
raw sequences and their common key, from which the individual
double-negation cancellation steps can be reconstructed.

Expansion is deterministic (oldest unprocessed triple on the leftmost
open branch), so proof objects replay exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .formula import And, Atom, Formula, Imp, Neg, Or, Sequent, size
from .semantics import Assignment, Verdict, falsifies
from .seq import faithful_key

__all__ = [
    "Triple", "Branch", "Tableau", "ClosureWitness", "RuleApplication",
    "TableauProof", "TableauResult", "initial_tableau", "expand_step",
    "saturate", "prove", "extract_countermodel", "extensions_of", "replay",
]


@dataclass(frozen=True)
class Triple:
    seq: str
    sign: int
    formula: Formula


@dataclass(frozen=True)
class ClosureWitness:
    positive: Triple
    negative: Triple
    common_key: Optional[str] = None  # faithful mode: shared faithful key


@dataclass
class Branch:
    """One branch: ordered triples, expansion bookkeeping, closure state."""

    ident: int
    triples: list = field(default_factory=list)
    members: set = field(default_factory=set)
    processed: int = 0  # triples below this index have been expanded
    closed: Optional[ClosureWitness] = None
    _by_key: dict = field(default_factory=dict)  # (key_seq, sign, formula) -> Triple

    def clone(self, new_ident: int) -> "Branch":
        child = Branch(new_ident, list(self.triples), set(self.members),
                       self.processed, self.closed, dict(self._by_key))
        return child

    def add(self, triple: Triple, mode: str) -> None:
        """Insert with per-branch dedup and an eager closure check."""
        if triple in self.members or self.closed is not None:
            return
        self.triples.append(triple)
        self.members.add(triple)
        key_seq = faithful_key(triple.seq) if mode == "faithful" else triple.seq
        self._by_key[(key_seq, triple.sign, triple.formula)] = triple
        opposite = self._by_key.get((key_seq, 1 - triple.sign, triple.formula))
        if opposite is not None:
            pos, neg = ((triple, opposite) if triple.sign == 1 else (opposite, triple))
            common = key_seq if mode == "faithful" else None
            self.closed = ClosureWitness(pos, neg, common)

    def next_unprocessed(self) -> Optional[Triple]:
        while self.processed < len(self.triples):
            triple = self.triples[self.processed]
            if not isinstance(triple.formula, Atom):
                return triple
            self.processed += 1
        return None

    @property
    def is_open(self) -> bool:
        return self.closed is None

    def is_saturated(self) -> bool:
        return all(isinstance(t.formula, Atom) for t in self.triples[self.processed:])


@dataclass
class Tableau:
    sequent: Sequent
    mode: str
    branches: list
    next_ident: int = 0
    steps: list = field(default_factory=list)


@dataclass(frozen=True)
class RuleApplication:
    branch: int
    triple: Triple
    rule: str
    results: tuple  # (branch id, added triples) per resulting branch


@dataclass(frozen=True)
class TableauProof:
    sequent: Sequent
    mode: str
    steps: tuple
    witnesses: tuple  # (branch id, ClosureWitness) in closing order


@dataclass(frozen=True)
class TableauResult:
    status: str  # "valid" | "invalid"
    proof: Optional[TableauProof]
    countermodel: Optional[Assignment]
    tableau: Tableau

    def verdict(self) -> Verdict:
        return Verdict(self.status, self.countermodel, "tableau")


def extensions_of(triple: Triple) -> Optional[tuple]:
    """Rule name plus the triples each resulting branch receives.

    One inner tuple per branch: a single inner tuple extends the branch in
    place, two of them split it.  Atoms have no extensions.
    """
    seq, sign, f = triple.seq, triple.sign, triple.formula
    if isinstance(f, Atom):
        return None
    if isinstance(f, And):
        if sign == 1:
            return ("Positive Conjunction Rule",
                    ((Triple(seq, 1, f.left), Triple(seq, 1, f.right)),))
        return ("Negative Conjunction Rule",
                ((Triple(seq, 0, f.left),), (Triple(seq, 0, f.right),)))
    if isinstance(f, Or):
        if sign == 1:
            return ("Positive Disjunction Rule",
                    ((Triple(seq, 1, f.left),), (Triple(seq, 1, f.right),)))
        return ("Negative Disjunction Rule",
                ((Triple(seq, 0, f.left), Triple(seq, 0, f.right)),))
    if isinstance(f, Neg):
        if sign == 1:
            return ("Positive Negation Rule", ((Triple("n" + seq, 0, f.child),),))
        return ("Negative Negation Rule", ((Triple("n" + seq, 1, f.child),),))
    # conditional
    if seq == "":
        if sign == 1:
            return ("Positive Conditional Rule, ε case",
                    ((Triple("c", 0, f.left),), (Triple("c", 1, f.right),)))
        return ("Negative Conditional Rule, ε case",
                ((Triple("c", 1, f.left), Triple("c", 0, f.right)),))
    if sign == 1:
        return ("Positive Conditional Rule, non-ε case",
                ((Triple("l" + seq, 0, f.left),), (Triple("r" + seq, 1, f.right),)))
    return ("Negative Conditional Rule, non-ε case",
            ((Triple("l" + seq, 1, f.left), Triple("r" + seq, 0, f.right)),))


def initial_tableau(s: Sequent, mode: str = "plain") -> Tableau:
    """Single branch: every premise signed 1, the conclusion signed 0."""
    if mode not in ("plain", "faithful"):
        raise ValueError(f"unknown mode {mode!r}")
    tableau = Tableau(s, mode, [], 1)
    branch = Branch(0)
    for premise in s.premises:
        branch.add(Triple("", 1, premise), mode)
    branch.add(Triple("", 0, s.conclusion), mode)
    tableau.branches = [branch]
    return tableau


def expand_step(tableau: Tableau) -> bool:
    """Apply one rule to the oldest unprocessed triple on the leftmost
    open branch; returns False when every branch is saturated or closed."""
    for position, branch in enumerate(tableau.branches):
        if not branch.is_open:
            continue
        triple = branch.next_unprocessed()
        if triple is None:
            continue
        rule, groups = extensions_of(triple)
        branch.processed += 1
        results = []
        if len(groups) == 1:
            for new in groups[0]:
                branch.add(new, tableau.mode)
            results.append((branch.ident, groups[0]))
        else:
            children = []
            for group in groups:
                child = branch.clone(tableau.next_ident)
                tableau.next_ident += 1
                for new in group:
                    child.add(new, tableau.mode)
                children.append(child)
                results.append((child.ident, group))
            tableau.branches[position:position + 1] = children
        tableau.steps.append(RuleApplication(branch.ident, triple, rule, tuple(results)))
        return True
    return False


def saturate(tableau: Tableau) -> Tableau:
    while expand_step(tableau):
        pass
    return tableau


def extract_countermodel(branch: Branch, mode: str, s: Sequent) -> Assignment:
    """Read an assignment off a saturated open branch: positive atomic
    triples are 1, everything else defaults to 0.  The result is verified
    against the sequent before being returned."""
    if not branch.is_open:
        raise ValueError("branch is closed")
    if not branch.is_saturated():
        raise ValueError("branch is not saturated")
    entries = {(t.seq, t.formula.index): 1
               for t in branch.triples
               if t.sign == 1 and isinstance(t.formula, Atom)}
    model = Assignment(entries, default=0,
                       keying="faithful" if mode == "faithful" else "raw")
    if not falsifies(model, s):
        raise AssertionError(
            "open-branch assignment failed to falsify the sequent; "
            "this indicates a defect in the rule table")
    return model


def prove(s: Sequent, mode: str = "plain") -> TableauResult:
    """Saturate the tableau for the sequent and report the outcome.

    Closed tableau: a proof object recording every rule application and
    one closure witness per branch.  Open tableau: a countermodel from
    the leftmost saturated open branch.
    """
    tableau = saturate(initial_tableau(s, mode))
    open_branches = [b for b in tableau.branches if b.is_open]
    if not open_branches:
        witnesses = tuple((b.ident, b.closed) for b in tableau.branches)
        proof = TableauProof(s, mode, tuple(tableau.steps), witnesses)
        return TableauResult("valid", proof, None, tableau)
    model = extract_countermodel(open_branches[0], mode, s)
    return TableauResult("invalid", None, model, tableau)


def replay(proof: TableauProof) -> bool:
    """Re-run the recorded rule applications from the initial tableau and
    confirm they are legal, reproduce the same additions, and close every
    branch with the recorded witnesses."""
    tableau = initial_tableau(proof.sequent, proof.mode)
    by_ident = {tableau.branches[0].ident: tableau.branches[0]}
    order = [tableau.branches[0].ident]
    for step in proof.steps:
        branch = by_ident[step.branch]
        rule, groups = extensions_of(step.triple)
        if rule != step.rule or step.triple not in branch.members:
            return False
        if tuple(added for _, added in step.results) != groups:
            return False
        if len(groups) == 1:
            for new in groups[0]:
                branch.add(new, proof.mode)
        else:
            position = order.index(step.branch)
            children = []
            for (ident, group) in step.results:
                child = branch.clone(ident)
                for new in group:
                    child.add(new, proof.mode)
                children.append(child)
                by_ident[ident] = child
            order[position:position + 1] = [c.ident for c in children]
            del by_ident[step.branch]
    recorded = dict(proof.witnesses)
    for ident in order:
        branch = by_ident[ident]
        if branch.is_open or recorded.get(ident) != branch.closed:
            return False
    return True


def branch_size_bound(s: Sequent) -> int:
    """Worst-case rule applications per branch: total node count."""
    return sum(size(f) for f in s.formulas)
