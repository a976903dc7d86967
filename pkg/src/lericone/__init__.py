"""Decision procedures for sequence-sensitive propositional logics.

The package parses propositional formulas, annotates subformula
occurrences with their negation/conditional path sequences, applies
sequence-indexed substitutions, decides validity by brute enumeration,
by skeleton reduction to classical logic, and by analytic tableaux,
checks and transforms Hilbert proofs for the two supported weak relevant
systems, and certifies variable-sharing claims with constructed
countermodels.
"""

from .formula import (And, Atom, Formula, Imp, Neg, Or, ParseError, PathError,
                      Sequent, atom_occurrences, parse, parse_sequent, render,
                      render_sequent, subformula_at)
from .seq import (annotate, c_transform, equivalent, faithful_key, lrcn,
                  polarity, reduct)
from .substitution import (LericoneSubstitution, RenamingTable, apply_lericone,
                           apply_plain, godel, godel_substitution,
                           identity_substitution, inverse_rename, shift,
                           skeletonize, star, t_of)
from .semantics import (Assignment, CapacityError, Verdict, brute_consequence,
                        bullet, classical_valid, decide, domain_keys, evaluate,
                        falsifies, relevant_domain)
from .tableau import (Branch, Tableau, TableauProof, TableauResult, Triple,
                      extract_countermodel, initial_tableau, prove)
from .hilbert import (AxiomRef, HilbertProof, ProofCheckError, ProofLine,
                      RuleRef, check_proof, conclusion, match_axiom,
                      transform_proof)
from .relevance import (SharingWitness, certify_irrelevance, lericone_sharing,
                        make_h, shares_atom)

__version__ = "0.1.0"
