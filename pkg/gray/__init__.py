from moves.twists import Antipole, Twistor, is_twistor_pair

from .twistors import convert_antipole, enumerate_antipoles, enumerate_twistors
from .gray_graph import GrayEdge, GrayGraph, build_gray_graph
from .crossing import crossing_free, face_chords_cross
from .resolution import (FailureReason, Resolution, SearchResult, find_resolution, is_resoluble,
                         validate_resolution)

__all__ = ['Antipole', 'Twistor', 'is_twistor_pair', 'convert_antipole', 'enumerate_antipoles',
           'enumerate_twistors', 'GrayEdge', 'GrayGraph', 'build_gray_graph', 'crossing_free',
           'face_chords_cross', 'FailureReason', 'Resolution', 'SearchResult', 'find_resolution',
           'is_resoluble', 'validate_resolution']
