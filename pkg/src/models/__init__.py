"""
Models package for the Cayley forms toolkit.

Contains data models for harmonic decompositions, canonical representatives,
classification reports, curve ideals and associated curves.
"""

from .harmonic_decomposition import HarmonicDecomposition, CanonicalCayleyRep
from .classification_report import ClassificationReport, HonestWitness
from .curve_ideal import CurveIdeal
from .associated_curve import AssociatedCurve

__all__ = [
    'HarmonicDecomposition', 'CanonicalCayleyRep',
    'ClassificationReport', 'HonestWitness',
    'CurveIdeal',
    'AssociatedCurve'
]
