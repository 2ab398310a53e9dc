from .formats import (Document, normalize_0consecutive, parse_chords, parse_gem, parse_move,
                      parse_resolution, parse_trace, serialize_chords, serialize_gem,
                      serialize_resolution, serialize_sequence, serialize_trace, split_documents)
from .dot import export_dot
from .storage import Discrepancy, DiscrepancyStore

__all__ = ['Document', 'normalize_0consecutive', 'parse_chords', 'parse_gem', 'parse_move',
           'parse_resolution', 'parse_trace', 'serialize_chords', 'serialize_gem',
           'serialize_resolution', 'serialize_sequence', 'serialize_trace', 'split_documents',
           'export_dot', 'Discrepancy', 'DiscrepancyStore']
