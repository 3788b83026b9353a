"""Published reference instances used by tests and the ``tables`` bench suite.

Each pair is ``(scores, exponents)`` and has been checked against Landau's
criterion.
"""

SIX_PLAYER = ((0, 1, 3, 5), (1, 1, 3, 1))
"""The six-player tournament with scores 0, 1, 3, 3, 3, 5."""

ENUMERATION_SCORES = (2, 4, 7, 14)
ENUMERATION_EXPONENTS = frozenset(
    [
        (2, 1, 10, 3),
        (1, 2, 10, 4),
        (3, 1, 8, 5),
        (1, 1, 11, 5),
        (2, 4, 5, 7),
        (1, 2, 9, 7),
        (3, 1, 7, 8),
        (2, 5, 3, 9),
        (2, 1, 8, 9),
        (1, 5, 4, 10),
        (3, 4, 2, 11),
        (1, 3, 6, 11),
        (3, 2, 4, 12),
        (1, 3, 5, 13),
        (3, 2, 3, 14),
        (2, 1, 5, 15),
        (1, 5, 1, 16),
        (1, 2, 4, 17),
        (3, 1, 2, 18),
        (1, 1, 4, 19),
        (1, 2, 1, 22),
    ]
)
"""All 21 exponent sets of the score set ``{2, 4, 7, 14}``."""

SMALL_INSTANCES = [
    (
        (0, 1, 2, 3, 4, 5, 7, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 28),
        (1, 1, 1, 1, 1, 1, 3, 5, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    ),
    (
        (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23, 24, 28),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5, 3, 1, 1, 1, 1, 1),
    ),
    (
        (0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 17, 18, 19, 20, 21, 22, 23, 25, 26, 27, 28),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    ),
    (
        (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 25, 27, 28, 29, 30),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4, 2, 1, 1, 1, 1, 1, 1),
    ),
    (
        (1, 2, 4, 9, 10, 12, 13, 14, 15, 17, 18, 19, 20, 21, 23, 25, 26, 27, 28),
        (1, 1, 1, 1, 10, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    ),
    (
        (0, 10, 11, 18, 21, 22, 26),
        (1, 6, 12, 5, 1, 1, 1),
    ),
    (
        (1, 4, 5, 20, 21, 23, 28),
        (1, 5, 3, 21, 1, 1, 1),
    ),
]
"""Score sets with largest score at most 30 (net-scale)."""

LARGE_INSTANCES = [
    (
        (351, 991, 1136, 1254, 1749, 1886, 2062, 2088, 2387, 2632, 2804, 3827, 4034, 4115, 4153, 4436, 4833, 5105, 5349, 5895, 6118, 6368, 6373, 7023, 7142, 7181, 7868, 7892, 9371, 9983),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 3817, 15866),
    ),
    (
        (275, 552, 644, 701, 924, 1258, 1428, 1865, 2276, 3040, 3238, 3366, 3656, 3939, 3947, 4196, 5919, 6350, 6568, 7980, 8235, 8277, 8507, 8561, 8993, 9026, 9131, 9365, 9398, 9548),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1378, 17654),
    ),
    (
        (274, 1324, 1377, 1703, 2294, 2496, 2562, 2586, 3140, 3150, 3251, 3467, 3703, 3773, 4134, 4274, 4838, 5685, 6241, 6644, 6919, 7502, 7583, 7628, 7688, 8081, 8498, 8525, 9056, 9464),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1831, 16975),
    ),
    (
        (95, 146, 690, 714, 960, 1042, 1209, 1257, 1943, 2027, 2058, 2063, 2315, 3233, 3316, 3627, 3928, 5155, 5167, 5359, 5374, 6159, 6985, 7565, 8435, 9030, 9070, 9300, 9350, 9620),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 5533, 13504),
    ),
    (
        (943, 1021, 1297, 1619, 1860, 1934, 2172, 2206, 2282, 2532, 2654, 3576, 4518, 4593, 5693, 5715, 7679, 8123, 9976, 11681, 12031, 12343, 12706, 12862, 14545, 15256, 17011, 17335, 17743, 19570),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 3, 35427, 13),
    ),
    (
        (568, 1586, 1610, 1621, 2357, 2538, 2542, 2971, 3769, 3922, 5024, 5760, 8399, 8411, 9549, 9784, 10244, 10557, 10994, 11487, 11928, 13653, 14631, 15540, 15753, 16314, 16464, 17166, 17862, 18843),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 5, 71, 37563),
    ),
    (
        (1179, 1919, 2206, 2974, 3063, 3114, 3182, 3212, 3649, 3897, 5122, 5233, 6131, 6655, 7288, 8246, 8880, 8927, 9220, 9331, 9970, 11095, 11713, 11728, 12376, 12844, 15718, 16510, 17932, 19939),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3031, 36493),
    ),
    (
        (701, 1021, 2614, 3755, 4387, 5158, 6863, 7828, 8098, 8108, 8151, 8307, 8868, 8897, 10037, 10213, 11299, 11610, 11901, 12234, 12276, 12846, 13107, 14961, 16023, 17835, 17874, 18015, 18594, 19509),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4, 4394, 34371),
    ),
    (
        (125, 259, 769, 1293, 3514, 3754, 3769, 5258, 5605, 6144, 6713, 6805, 6955, 7456, 7616, 9009, 9022, 9364, 11272, 11557, 11593, 11914, 12043, 15208, 17074, 17272, 18154, 18424, 18889, 19846),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5, 16583, 22243),
    ),
]
"""Thirty-score sets with scores up to about 20000 (fast-search scale)."""
