"""Exact-arithmetic resolutions of the residue field over graded complete
intersections: Koszul complexes, zeta chain maps, mapping-cone towers, the
minimal free resolution with its block differentials and DG product, and a
divided-power translation of the zeta maps.
"""

__version__ = "1.0.0"
