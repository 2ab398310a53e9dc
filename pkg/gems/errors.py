class GemError(Exception):
    code = 'gem_error'

    def __init__(self, message: str = ''):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


class NotAMatching(GemError):
    code = 'not_a_matching'


class FixedPoint(GemError):
    code = 'fixed_point'


class Disconnected(GemError):
    code = 'disconnected'


class NotAGem(GemError):
    code = 'not_a_gem'


class NotACrystallization(GemError):
    code = 'not_a_crystallization'


class NotBipartite(GemError):
    code = 'not_bipartite'


class NotADipole(GemError):
    code = 'not_a_dipole'


class ResultDisconnected(GemError):
    code = 'result_disconnected'


class NotDipoleAfterInsertion(GemError):
    code = 'not_dipole_after_insertion'


class BadAttachment(GemError):
    code = 'bad_attachment'


class SameEdge(GemError):
    code = 'same_edge'


class NotATwistor(GemError):
    code = 'not_a_twistor'


class NotTwoEdges(GemError):
    code = 'not_two_edges'


class NotA2Dipole(GemError):
    code = 'not_a_2_dipole'


class NotBlobAfterFlip(GemError):
    code = 'not_blob_after_flip'


class NoAdequateSiteFound(GemError):
    code = 'no_adequate_site_found'


class EdgeNotInGrayGraph(GemError):
    code = 'edge_not_in_gray_graph'


class InvalidDiagram(GemError):
    code = 'invalid_diagram'


class GenerationFailed(GemError):
    code = 'generation_failed'


class No2DipoleFound(GemError):
    code = 'no_2_dipole_found'


class TheoryDiscrepancy(GemError):
    code = 'theory_discrepancy'


class ReplayMismatch(GemError):
    code = 'replay_mismatch'


class MismatchedGray(GemError):
    code = 'mismatched_gray'


class GemSyntaxError(GemError):
    code = 'syntax_error'

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f'line {line}, column {column}: {message}')
        self.line = line
        self.column = column


class SemanticError(GemError):
    code = 'semantic_error'

    def __init__(self, cause: GemError, line: int):
        super().__init__(f'line {line}: {cause.code}: {cause.message}')
        self.cause = cause
        self.line = line
