"""Hermitian-Randić matrices, spectra and energies of mixed graphs."""

from .bounds import BoundsReport, check_identity_theorems, evaluate_bounds
from .elementary import (
    CycleSign,
    charpoly_exact,
    cycle_sign,
    det_exact,
    enumerate_real_elementary,
    is_positive_mixed,
)
from .graph import (
    EdgeRef,
    Kind,
    MixedGraph,
    build,
    cut_edges,
    random_mixed,
    random_mixed_tree,
    reorient,
    reverse_at_vertex,
    structure,
    underlying,
)
from .io import parse, serialize
from .matrices import general_randic_index, hermitian_adjacency, hermitian_randic, normalizer
from .spectra import (
    Spectrum,
    char_poly_numeric,
    determinant,
    eigenvalues,
    h_energy,
    hr_energy,
    hr_spectrum,
    is_flat_spectrum,
    spectrum_symmetric_about_zero,
)

__version__ = "0.1.0"
