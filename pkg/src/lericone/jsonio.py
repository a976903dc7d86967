"""JSON encodings for the wire-facing objects.

Formulas travel as concrete-syntax strings.  Substitution tables are
``{"keying": ..., "entries": [{"seq", "atom", "image"}]}`` (plain tables
omit the seq field), assignments are ``{"default", "faithful",
"entries": [{"seq", "atom", "value"}]}``, proofs are
``{"logic", "lines": [{"formula", "just"}]}`` with 1-based premise
references, and tableau proofs serialise as a nested rule-application
tree with closure witnesses at the leaves.
"""

from __future__ import annotations

from .formula import parse, render
from .hilbert import AxiomRef, HilbertProof, ProofLine, RuleRef, match_axiom
from .relevance import SharingWitness
from .semantics import Assignment, Verdict
from .substitution import LericoneSubstitution, RenamingTable
from .tableau import TableauProof, Triple

__all__ = [
    "substitution_to_json", "substitution_from_json",
    "assignment_to_json", "assignment_from_json",
    "verdict_to_json", "witness_to_json", "renaming_to_json",
    "proof_to_json", "proof_from_json", "tableau_proof_to_json",
]


def substitution_to_json(s: LericoneSubstitution) -> dict:
    if s.keying == "plain":
        entries = [{"atom": atom, "image": render(image)}
                   for atom, image in sorted(s.entries.items())]
    else:
        entries = [{"seq": seq, "atom": atom, "image": render(image)}
                   for (seq, atom), image in sorted(s.entries.items())]
    return {"keying": s.keying, "entries": entries}


def substitution_from_json(data) -> LericoneSubstitution:
    if isinstance(data, list):  # bare entry list: raw keying
        data = {"keying": "raw", "entries": data}
    keying = data.get("keying", "raw")
    if keying == "plain":
        table = {int(e["atom"]): parse(e["image"]) for e in data["entries"]}
        return LericoneSubstitution.plain(table)
    table = {(e.get("seq", ""), int(e["atom"])): parse(e["image"])
             for e in data["entries"]}
    return LericoneSubstitution(table, keying=keying)


def assignment_to_json(f: Assignment) -> dict:
    if f.keying == "plain":
        entries = [{"atom": atom, "value": bit}
                   for atom, bit in sorted(f.entries.items())]
    else:
        entries = [{"seq": seq, "atom": atom, "value": bit}
                   for (seq, atom), bit in sorted(f.entries.items())]
    return {"default": f.default, "faithful": f.keying == "faithful",
            "keying": f.keying, "entries": entries}


def assignment_from_json(data) -> Assignment:
    keying = data.get("keying", "faithful" if data.get("faithful") else "raw")
    if keying == "plain":
        table = {int(e["atom"]): int(e["value"]) for e in data["entries"]}
    else:
        table = {(e.get("seq", ""), int(e["atom"])): int(e["value"])
                 for e in data["entries"]}
    return Assignment(table, default=int(data.get("default", 0)), keying=keying)


def verdict_to_json(v: Verdict) -> dict:
    out = {"status": v.status, "method": v.method}
    if v.countermodel is not None:
        out["countermodel"] = assignment_to_json(v.countermodel)
    return out


def witness_to_json(w: SharingWitness) -> dict:
    return {"atom": w.atom, "seq": w.sequence,
            "antecedent_path": list(w.antecedent_path),
            "consequent_path": list(w.consequent_path), "mode": w.mode}


def renaming_to_json(table: RenamingTable) -> dict:
    return {"mode": table.mode,
            "entries": [{"seq": seq, "atom": atom, "fresh": fresh}
                        for (seq, atom), fresh in sorted(table.forward.items())]}


def proof_to_json(pr: HilbertProof) -> dict:
    lines = []
    for line in pr.lines:
        if isinstance(line.just, AxiomRef):
            matched = match_axiom(line.formula, pr.logic)
            just = {"axiom": line.just.axiom}
            if matched and matched[0] == line.just.axiom:
                just["bind"] = {name: render(g) for name, g in matched[1].items()}
        else:
            just = {"rule": line.just.rule,
                    "from": [i + 1 for i in line.just.premises]}
        lines.append({"formula": render(line.formula), "just": just})
    return {"logic": pr.logic, "lines": lines}


def proof_from_json(data) -> HilbertProof:
    lines = []
    for entry in data["lines"]:
        just = entry["just"]
        if "axiom" in just:
            ref = AxiomRef(just["axiom"])
        else:
            ref = RuleRef(just["rule"], tuple(i - 1 for i in just["from"]))
        lines.append(ProofLine(parse(entry["formula"]), ref))
    return HilbertProof(data["logic"], tuple(lines))


def _triple_to_json(t: Triple) -> dict:
    return {"seq": t.seq, "sign": t.sign, "formula": render(t.formula)}


def tableau_proof_to_json(proof: TableauProof) -> dict:
    """Nested rule-application tree; splits carry one subtree per branch."""
    root: list = []
    lists: dict = {0: root}
    for step in proof.steps:
        node = {"triple": _triple_to_json(step.triple), "rule": step.rule}
        if len(step.results) == 1:
            node["added"] = [_triple_to_json(t) for t in step.results[0][1]]
            lists[step.branch].append(node)
        else:
            node["branches"] = []
            for ident, group in step.results:
                subtree = {"added": [_triple_to_json(t) for t in group], "steps": []}
                node["branches"].append(subtree)
                lists[ident] = subtree["steps"]
            lists[step.branch].append(node)
            del lists[step.branch]
    for ident, witness in proof.witnesses:
        closure = {"positive": _triple_to_json(witness.positive),
                   "negative": _triple_to_json(witness.negative)}
        if witness.common_key is not None:
            closure["common_key"] = witness.common_key
        lists[ident].append({"closure": closure})
    return {"mode": proof.mode, "tree": root}
