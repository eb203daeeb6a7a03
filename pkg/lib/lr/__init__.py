from lib.lr.LRTableau import LRTableau
from lib.lr.littlewood_richardson import enumerate_lr_tableaux, lr_coefficient, lr_expand, iterated_lr_coefficient
from lib.lr.excited_diagrams import excited_diagrams, skew_standard_count, count_standard_fillings
