from .dipoles import (DipoleSpec, cancel_blobs, cancel_dipole, create_dipole, crystallize, find_dipoles,
                      fus, is_dipole)
from .flips import FlipOutcome, c_flip, flip_by_parity, thicken
from .twists import Antipole, Twistor, is_twistor_pair, twist_direct, twist_via_flip
from .trace import Move, MoveKind, MoveTrace, TraceEntry, apply_move, replay
from .walks import random_dipole_walk

__all__ = ['DipoleSpec', 'cancel_blobs', 'cancel_dipole', 'create_dipole', 'crystallize', 'find_dipoles',
           'fus', 'is_dipole', 'FlipOutcome', 'c_flip', 'flip_by_parity', 'thicken', 'Antipole', 'Twistor',
           'is_twistor_pair', 'twist_direct', 'twist_via_flip', 'Move', 'MoveKind', 'MoveTrace',
           'TraceEntry', 'apply_move', 'replay', 'random_dipole_walk']
