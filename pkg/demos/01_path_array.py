"""
Path-count arrays
=================

Every box (i, j) of a Young diagram gets the number of north/east paths
from the lowest box of column j to the last box of row i.
"""
from youngpaths import Partition, conjugate, count_paths, enumerate_paths, path_count_array

shape = Partition((5, 4, 3, 3))
array = path_count_array(shape)
print(array.render())

# D[2,1] counts paths from the foot of column 1, (4,1), to the end of row 2, (2,4)
print("D[2,1] =", array[2, 1], "=", count_paths(shape, (4, 1), (2, 4)))
for path in enumerate_paths(shape, (4, 1), (2, 4)):
    print("  ", path.steps())

# the conjugate shape gives the transposed array
print()
print(path_count_array(conjugate(shape)).render())

# counts are exact Python integers, however large
print()
print("corner of (30^30):", path_count_array(Partition((30,) * 30))[1, 1])
