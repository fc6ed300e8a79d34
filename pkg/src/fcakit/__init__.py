"""Formal concept analysis: contexts, concept lattices, implication bases and
link-analysis queries over object x attribute incidence data."""

__version__ = "0.1.0"

from .analysis import (
    AttributePartition,
    concept_of_attributes,
    linked_events,
    network_group,
    shared_events,
    subsumption_report,
)
from .context import (
    AttributeSet,
    ContextError,
    FormalContext,
    ObjectSet,
    UnknownNameError,
    close_attributes,
    close_objects,
    derive_attributes,
    derive_objects,
)
from .estimator import FormalConceptAnalysis, check_incidence
from .export import DiagramOptions, to_dot, to_json
from .implications import (
    Implication,
    holds,
    implication_closure,
    independent,
    stem_base,
)
from .io import (
    ParseError,
    load_crime_events,
    parse_csv_crosstable,
    parse_cxt,
    read_context,
    write_csv_crosstable,
    write_cxt,
)
from .lattice import (
    ConceptLattice,
    FormalConcept,
    attribute_concept,
    build_lattice,
    enumerate_concepts,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    object_concept,
)
