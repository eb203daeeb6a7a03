from lib.partitions.Partition import Partition
from lib.partitions.SkewShape import SkewShape
from lib.partitions.combinatorics import balanced, uplus, is_subpartition, conjugate, hook_lengths, dim_sn, dim_gl, \
    content_sum, partitions_of, count_partitions
