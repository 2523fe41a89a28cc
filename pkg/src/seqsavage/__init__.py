"""Sequential actions over a propositional language, their canonical forms,
cancellation checks, and exact synthesis of expected-utility representations."""

from .actions import (NOOP, ActionLibrary, Do, IfThenElse, Noop, Seq, depth, format_action,
                      parse_action, seq, validate)
from .canonical import (CanonicalMap, DoA, DoASeq, NoopEntry, canonical_action, canonical_map,
                        compose, count_ca_minus, enumerate_CA, enumerate_CA_minus, enumerate_CM,
                        realize)
from .errors import (BudgetExceeded, DepthError, MissingSelection, NotRepresentable, ParseError,
                     ProvenanceError, SeqSavageError, ValidationError)
from .logic import AtomSet, PropSet, atoms_of, equivalent, format_formula, parse_formula
from .olt import (IDENTITY, Olt, OltState, ProgressFunction, apply_f, count_olts, enumerate_olts,
                  initial_state, olt_selection_model, progress_of, progress_of_entry)
from .preferences import (CancellationWitness, PreferenceOrder, certify_cancellation,
                          check_cancellation, induced_order_welldefined, relation, validate_witness)
from .representation import (Representation, StateDependentUtility, assemble, build_matrix,
                             check_pr_compatibility, dominates, expected_utility,
                             solve_state_dependent, stitch_u, stitch_v, synthesize,
                             verify_independence, verify_representation, witness_guarantee,
                             witness_tree)
from .semantics import BasicModel, SelectionModel, interpret

__version__ = "0.1.0"
