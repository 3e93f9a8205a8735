"""Frozen reference data for a rank-20 function and its rank-19
restriction, a pair large enough to exercise every branch of the
witness construction."""

H20 = (9, 10, 10, 11, 12, 12, 13, 15, 17, 18, 18, 19, 19, 20, 20, 20, 20, 20, 20, 20)
H19 = (9, 9, 10, 11, 11, 12, 14, 16, 17, 17, 18, 18, 19, 19, 19, 19, 19, 19, 19)

XI20 = (1, 2, 1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 1, 0, 0)
XI19 = (2, 1, 1, 2, 1, 0, 0, 1, 0, 0, 0, 0, 2, 1, 2, 1, 0, 0)

BLOCKS20 = ((7, 14), (18, 20))
BLOCKS19 = ((6, 8), (9, 13), (17, 19))

W20 = (9, 10, 8, 11, 12, 7, 13, 15, 17, 18, 16, 19, 14, 20, 6, 5, 4, 3, 2, 1)
W19 = (9, 8, 10, 11, 7, 12, 14, 16, 17, 15, 18, 13, 19, 6, 5, 4, 3, 2, 1)

U19 = (1, 2, 3, 4, 5, 6, 7, 8, 13, 10, 12, 9, 11, 14, 15, 16, 19, 18, 17)
UBAR20 = (1, 2, 3, 4, 5, 6, 7, 8, 9, 14, 11, 13, 10, 12, 15, 16, 17, 20, 19, 18)
U20 = (1, 2, 3, 4, 5, 6, 7, 9, 11, 14, 10, 13, 8, 12, 15, 16, 17, 20, 19, 18)

U19_W19 = (13, 8, 10, 12, 7, 9, 14, 16, 19, 15, 18, 11, 17, 6, 5, 4, 3, 2, 1)
UBAR20_W20 = (9, 14, 8, 11, 13, 7, 10, 15, 17, 20, 16, 19, 12, 18, 6, 5, 4, 3, 2, 1)
U20_W20 = (11, 14, 9, 10, 13, 7, 8, 15, 17, 20, 16, 19, 12, 18, 6, 5, 4, 3, 2, 1)

CASE2_M = (2, 1, 0)
CASE2_LAST = 1
CASE2_R = (17, 15, 10)
CASE2_Q = (4, 2)
