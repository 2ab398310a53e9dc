from .graph import (COLORS, ColoredGraph, Residue, axis_colors, build_graph, canonical_code,
                    color_isomorphic, complement, relabel, residues, sphere_graph, state_hash)
from .report import (GemReport, check_complementary, gem_report, generator_count, is_bipartite,
                     is_crystallization, is_gem, triball_euler_check)
from .errors import GemError

__all__ = ['COLORS', 'ColoredGraph', 'Residue', 'axis_colors', 'build_graph', 'canonical_code',
           'color_isomorphic', 'complement', 'relabel', 'residues', 'sphere_graph', 'state_hash',
           'GemReport', 'check_complementary', 'gem_report', 'generator_count', 'is_bipartite',
           'is_crystallization', 'is_gem', 'triball_euler_check', 'GemError']
