"""
Unit determinants and non-intersecting paths
============================================

Square blocks of consecutive rows and columns whose lower-right entry is 1
have determinant 1. The matching path picture has exactly one family of
box-disjoint paths, all of them hooks.
"""
from youngpaths import (
    Partition,
    Selection,
    check_determinant_one,
    determinant,
    enumerate_disjoint_systems,
    path_matrix,
    scan_unit_selections,
    verify_lgv,
)

shape = Partition((5, 4, 3, 3))
block = Selection((1, 2, 3), (1, 2, 3))
print(path_matrix(shape, block).to_lists(), "det =", determinant(path_matrix(shape, block)))

(system,) = enumerate_disjoint_systems(shape, block.cols, block.rows)
for path in system.paths:
    print("  ", [tuple(b) for b in path.boxes], "hook" if path.is_hook() else "")

report = check_determinant_one(shape)
print(f"{len(report.checks)} unit-corner blocks, all det 1: {report.passed}")

# Dropping the middle row and column keeps the unit corner but loses the property.
gap = Selection((1, 3), (1, 3))
rep = verify_lgv(shape, gap)
print("rows {1,3} x cols {1,3}: det", rep.determinant, "=", rep.num_systems, "signed path systems")
outside = scan_unit_selections(shape).outside_certified()
print(len(outside), "non-contiguous unit-corner selections have det != 1")
