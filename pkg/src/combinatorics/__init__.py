"""
Combinatorics Package

2/1 diagrams, the sign-reversing involutions and their exhaustive sweeps.
"""

from .diagrams import (
    Diagram,
    DiagramStyle,
    to_odd_diagram,
    from_odd_diagram,
    to_even_diagram,
    from_even_diagram,
    conjugate_diagram,
    last_column_sum,
    render,
)
from .involutions import (
    Exceptional,
    ExceptionalKind,
    InvolutionCase,
    classify_exceptional,
    franklin,
    sigma_odd,
    right_neighbour,
    left_neighbour,
    neighbour_path,
    sigma_even,
)
from .sweeps import SweepReport, run_sweep, SWEEPS

__all__ = [
    'Diagram',
    'DiagramStyle',
    'to_odd_diagram',
    'from_odd_diagram',
    'to_even_diagram',
    'from_even_diagram',
    'conjugate_diagram',
    'last_column_sum',
    'render',
    'Exceptional',
    'ExceptionalKind',
    'InvolutionCase',
    'classify_exceptional',
    'franklin',
    'sigma_odd',
    'right_neighbour',
    'left_neighbour',
    'neighbour_path',
    'sigma_even',
    'SweepReport',
    'run_sweep',
    'SWEEPS'
]
