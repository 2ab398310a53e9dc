from .chords import (ChordDiagram, canonical_diagram, enumerate_diagrams, random_chord_diagram,
                     validate_diagram)
from .j2 import is_j2b, j2_from_chords, j2_layout, recognize_j2, recognize_j2_reason, twist_all
from .bloboid import is_bloboid, make_bloboid
from .thickening import ThickeningSequence, ThickeningStep, thickening_sequence

__all__ = ['ChordDiagram', 'canonical_diagram', 'enumerate_diagrams', 'random_chord_diagram',
           'validate_diagram', 'is_j2b', 'j2_from_chords', 'j2_layout', 'recognize_j2',
           'recognize_j2_reason', 'twist_all', 'is_bloboid', 'make_bloboid', 'ThickeningSequence',
           'ThickeningStep', 'thickening_sequence']
